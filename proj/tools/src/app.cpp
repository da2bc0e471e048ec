#include "fracdisp/cli/app.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>
#include <thread>

#include "fracdisp/cli/commands.hpp"
#include "fracdisp/errors.hpp"

namespace fracdisp::cli {

namespace {

// Values given on the command line. Only options that were actually passed
// override the config file.
struct Flags {
    std::string config;
    std::string alpha;
    double beta = 0.0;
    double L = 0.0;
    std::size_t N = 0;
    double dt = 0.0;
    double t_end = 0.0;
    std::string schedule;
    double T_max = 0.0;
    std::string kind;
    double amplitude = 0.0;
    double width = 0.0;
    double shift = 0.0;
    std::uint64_t seed = 0;
    std::string norms;
    std::string output_dir;
    std::string label;
    double smallness = 0.0;
};

void add_config_options(CLI::App& app, Flags& f) {
    app.add_option("--config", f.config, "INI config file")->check(CLI::ExistingFile);
    app.add_option("--alpha", f.alpha, "dispersion exponent in (1,3), e.g. 1.5 or 3/2");
    app.add_option("--beta", f.beta, "nonlinear coefficient");
    app.add_option("--L", f.L, "half width of the periodic domain");
    app.add_option("--N", f.N, "grid points (even)");
    app.add_option("--dt", f.dt, "time step");
    app.add_option("--t-end", f.t_end, "final time");
    app.add_option("--schedule", f.schedule, "default | log:a:b:per_decade | list:t1,t2,...");
    app.add_option("--T-max", f.T_max, "truncation time for script M (default t_end)");
    app.add_option("--kind", f.kind, "gaussian | shifted_gaussian | odd_bump | random_smooth");
    app.add_option("--amplitude", f.amplitude, "initial data amplitude");
    app.add_option("--width", f.width, "initial data width");
    app.add_option("--shift", f.shift, "initial data shift");
    app.add_option("--seed", f.seed, "seed for random_smooth");
    app.add_option("--norms", f.norms, "comma separated list of p, e.g. 1,2,inf");
    app.add_option("--output-dir", f.output_dir, "artifact directory");
    app.add_option("--label", f.label, "run label");
    app.add_option("--smallness-threshold", f.smallness, "warning threshold for ||u0||_H1 + ||u0||_L1");
}

ExperimentConfig build_config(const CLI::App& app, const Flags& f) {
    ExperimentConfig cfg;
    if (!f.config.empty()) load_config_file(f.config, cfg);
    auto given = [&](const char* name) { return app.count(name) > 0; };
    if (given("--alpha")) cfg.alpha_text = f.alpha;
    if (given("--beta")) cfg.beta = f.beta;
    if (given("--L")) cfg.L = f.L;
    if (given("--N")) cfg.N = f.N;
    if (given("--dt")) cfg.dt = f.dt;
    if (given("--t-end")) cfg.t_end = f.t_end;
    if (given("--schedule")) cfg.schedule = f.schedule;
    if (given("--T-max")) cfg.T_max = f.T_max;
    if (given("--kind")) cfg.initial.kind = f.kind;
    if (given("--amplitude")) cfg.initial.amplitude = f.amplitude;
    if (given("--width")) cfg.initial.width = f.width;
    if (given("--shift")) cfg.initial.shift = f.shift;
    if (given("--seed")) cfg.initial.seed = f.seed;
    if (given("--norms")) cfg.norms = parse_norm_list(f.norms);
    if (given("--output-dir")) cfg.output_dir = f.output_dir;
    if (given("--label")) cfg.label = f.label;
    if (given("--smallness-threshold")) cfg.smallness_threshold = f.smallness;
    cfg.validate();
    return cfg;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text + ",") {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else if (c != ' ') {
            item += c;
        }
    }
    return out;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fracdisp: large-time asymptotics experiments for a fractional dispersive-dissipative equation"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags flags;
    add_config_options(app, flags);

    bool write_fields = false;
    std::string alphas = "1.5,2,2.5";
    std::string betas = "0,3";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::string input_dir;

    std::vector<std::pair<CLI::App*, std::function<Report(const ExperimentConfig&)>>> commands;
    auto add = [&](const char* name, const char* help, std::function<Report(const ExperimentConfig&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };
    add("profiles", "profile tables and identity checks", run_profiles);
    add("solve", "evolve and record snapshots", [&](const ExperimentConfig& c) { return run_solve(c, write_fields); })
        ->add_flag("--write-fields", write_fields, "also write fields.csv with u and the linear expansion");
    add("verify-linear", "decay rates of the linear semigroup", run_verify_linear);
    add("verify-duhamel", "first and second order Duhamel residuals", run_verify_duhamel);
    add("verify-corollary", "asymptotic expansion residuals and C_dagger", run_verify_corollary);
    add("mass-M", "time integrated nonlinear mass", run_mass_M);
    CLI::App* sweep = add("sweep", "alpha x beta grid", [&](const ExperimentConfig& c) {
        std::vector<double> b;
        for (const auto& s : split(betas)) b.push_back(parse_norm_list(s).front());
        return run_sweep(c, split(alphas), b, workers);
    });
    sweep->add_option("--alphas", alphas, "comma separated alpha values");
    sweep->add_option("--betas", betas, "comma separated beta values");
    sweep->add_option("--workers", workers, "maximum concurrent runs")->check(CLI::PositiveNumber);
    add("emit-plots-data", "merge CSV artifacts into plots_data.csv",
        [&](const ExperimentConfig& c) { return run_emit_plots_data(c, input_dir.empty() ? c.output_dir : input_dir); })
        ->add_option("--input-dir", input_dir, "directory to scan (default: output dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        const ExperimentConfig cfg = build_config(app, flags);
        for (auto& [sub, fn] : commands) {
            if (!sub->parsed()) continue;
            const Report rep = fn(cfg);
            rep.write(cfg.output_dir);
            for (const auto& c : rep.checks()) {
                out << (c.pass ? "PASS " : "FAIL ") << c.name << " measured=" << format_number(c.measured) << '\n';
            }
            out << rep.experiment() << ": " << (rep.passed() ? "pass" : "FAIL") << " -> " << cfg.output_dir << '\n';
            return rep.passed() ? kExitPass : kExitCheckFailed;
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const AmbiguousRegimeError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const BlowUpError& e) {
        err << "numerical abort: " << e.what() << " (last good t = " << e.last_good_time() << ")\n";
        return kExitNumeric;
    } catch (const QuadratureError& e) {
        err << "numerical abort: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const TailMassError& e) {
        err << "numerical abort: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace fracdisp::cli
