#include "fracdisp/cli/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <sstream>

#include "fracdisp/errors.hpp"
#include "fracdisp/solver.hpp"

namespace fracdisp::cli {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    if (t == "inf" || t == "infinity") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != t.size()) throw ConfigError(key + ": not a number: '" + text + "'");
    return v;
}

template <class T>
void read(const boost::property_tree::ptree& tree, const std::string& key, T& out) {
    const auto v = tree.get_optional<std::string>(key);
    if (!v) return;
    if constexpr (std::is_same_v<T, std::string>) {
        out = trim(*v);
    } else if constexpr (std::is_same_v<T, std::optional<double>>) {
        out = to_double(key, *v);
    } else {
        const double d = to_double(key, *v);
        if constexpr (std::is_integral_v<T>) {
            if (d < 0 || d != std::floor(d)) throw ConfigError(key + ": expected a nonnegative integer");
            out = static_cast<T>(d);
        } else {
            out = d;
        }
    }
}

}  // namespace

std::vector<double> parse_norm_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        out.push_back(to_double("norms.p", item));
    }
    if (out.empty()) throw ConfigError("norms.p: empty list");
    return out;
}

std::string format_norm(double p) {
    if (std::isinf(p)) return "inf";
    std::ostringstream os;
    os << p;
    return os.str();
}

std::vector<double> expand_schedule(const std::string& spec, double t_end) {
    std::vector<double> t;
    auto add_log = [&](double a, double b, double per_decade) {
        if (!(a > 0.0 && b > a && per_decade >= 1.0)) throw ConfigError("schedule: bad log range");
        const int n = static_cast<int>(std::ceil(std::log10(b / a) * per_decade));
        for (int i = 0; i <= n; ++i) t.push_back(a * std::pow(b / a, static_cast<double>(i) / n));
    };
    if (spec == "default") {
        for (int i = 0; i <= 32; ++i) t.push_back(i / 32.0);
        if (t_end > 1.0) add_log(1.0, t_end, 16.0);
    } else if (spec.rfind("log:", 0) == 0) {
        std::stringstream ss(spec.substr(4));
        std::string a, b, n;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n)) {
            throw ConfigError("schedule: expected log:a:b:per_decade");
        }
        add_log(to_double("schedule", a), to_double("schedule", b), to_double("schedule", n));
    } else if (spec.rfind("list:", 0) == 0) {
        std::stringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!trim(item).empty()) t.push_back(to_double("schedule", item));
        }
    } else {
        throw ConfigError("schedule: unknown spec '" + spec + "'");
    }
    for (double v : t) {
        if (!(v >= 0.0) || v > t_end * (1.0 + 1e-12)) throw ConfigError("schedule: time outside [0, t_end]");
    }
    t.push_back(t_end);
    std::sort(t.begin(), t.end());
    // Merge times closer than the solver's landing tolerance.
    std::vector<double> out;
    for (double v : t) {
        if (out.empty() || std::abs(v - out.back()) > 1e-9 * std::max(1.0, v)) {
            out.push_back(v);
        } else if (v == t_end) {
            out.back() = t_end;
        }
    }
    return out;
}

ModelParams ExperimentConfig::params() const {
    try {
        return ModelParams::make(AlphaInput::parse(alpha_text), beta);
    } catch (const AmbiguousRegimeError& e) {
        throw ConfigError(std::string("alpha: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("alpha/beta: ") + e.what());
    }
}

Grid1D ExperimentConfig::grid() const {
    try {
        return make_grid(L, N);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("grid: ") + e.what());
    }
}

double ExperimentConfig::time_step() const { return dt ? *dt : default_time_step(grid()); }

std::vector<double> ExperimentConfig::snapshot_times() const { return expand_schedule(schedule, t_end); }

void ExperimentConfig::validate() const {
    params();
    grid();
    if (dt && !(*dt > 0.0)) throw ConfigError("time.dt must be positive");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ConfigError("time.t_end must be positive");
    if (T_max < 0.0 || T_max > t_end) throw ConfigError("time.T_max must lie in [0, t_end]");
    snapshot_times();
    static const char* kinds[] = {"gaussian", "shifted_gaussian", "odd_bump", "random_smooth"};
    if (std::find(std::begin(kinds), std::end(kinds), initial.kind) == std::end(kinds)) {
        throw ConfigError("initial_data.kind: unknown '" + initial.kind + "'");
    }
    if (!(initial.width > 0.0)) throw ConfigError("initial_data.width must be positive");
    if (!std::isfinite(initial.amplitude) || !std::isfinite(initial.shift)) {
        throw ConfigError("initial_data: amplitude and shift must be finite");
    }
    if (norms.empty()) throw ConfigError("norms.p: empty list");
    for (double p : norms) {
        if (!(p >= 1.0)) throw ConfigError("norms.p: each p must be >= 1");
    }
    if (output_dir.empty()) throw ConfigError("output.dir must not be empty");
}

void load_config_file(const std::string& path, ExperimentConfig& cfg) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    static const char* known[] = {"params", "grid", "time", "initial_data", "norms", "output"};
    for (const auto& [section, body] : tree) {
        if (std::find(std::begin(known), std::end(known), section) == std::end(known)) {
            throw ConfigError("config: unknown section [" + section + "]");
        }
        (void)body;
    }
    read(tree, "params.alpha", cfg.alpha_text);
    read(tree, "params.beta", cfg.beta);
    read(tree, "grid.L", cfg.L);
    read(tree, "grid.N", cfg.N);
    read(tree, "time.dt", cfg.dt);
    read(tree, "time.t_end", cfg.t_end);
    read(tree, "time.schedule", cfg.schedule);
    read(tree, "time.T_max", cfg.T_max);
    read(tree, "initial_data.kind", cfg.initial.kind);
    read(tree, "initial_data.amplitude", cfg.initial.amplitude);
    read(tree, "initial_data.width", cfg.initial.width);
    read(tree, "initial_data.shift", cfg.initial.shift);
    read(tree, "initial_data.seed", cfg.initial.seed);
    if (auto p = tree.get_optional<std::string>("norms.p")) cfg.norms = parse_norm_list(*p);
    read(tree, "output.dir", cfg.output_dir);
    read(tree, "output.label", cfg.label);
    read(tree, "params.smallness_threshold", cfg.smallness_threshold);
}

}  // namespace fracdisp::cli
