#include "fracdisp/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fracdisp/cli/config.hpp"

namespace fracdisp::cli {

namespace {

Json number(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

}  // namespace

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_line(const ReportRow& r) {
    std::ostringstream os;
    os << r.experiment << ',' << r.label << ',' << format_number(r.t) << ',' << format_norm(r.p) << ','
       << format_number(r.raw_norm) << ',' << format_number(r.scale_exponent) << ','
       << (r.log_factor ? "divide_by_log_t" : "none") << ',' << format_number(r.scaled_value);
    return os.str();
}

ReportRow parse_csv_line(const std::string& line) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() != 8) throw std::invalid_argument("CSV row does not have 8 fields: " + line);
    auto num = [](const std::string& s) {
        if (s == "inf") return std::numeric_limits<double>::infinity();
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad number: " + s);
        return v;
    };
    if (f[6] != "none" && f[6] != "divide_by_log_t") throw std::invalid_argument("bad log_factor: " + f[6]);
    return {f[0], f[1], num(f[2]), num(f[3]), num(f[4]), num(f[5]), f[6] == "divide_by_log_t", num(f[7])};
}

Report::Report(std::string experiment) : experiment_(std::move(experiment)) {
    summary_["experiment"] = experiment_;
}

void Report::add_row(ReportRow row) {
    if (row.experiment.empty()) row.experiment = experiment_;
    rows_.push_back(std::move(row));
}

void Report::add_series(const DecaySeries& s) {
    for (const auto& x : s.samples) {
        add_row({experiment_, s.label, x.t, s.p, x.raw, s.scale_exponent, s.log_factor == LogFactor::DivideByLogT,
                 x.value});
    }
}

void Report::add_fit(const std::string& name, const RateFit& fit, double theoretical_slope) {
    Json j;
    j["name"] = name;
    j["measured_slope"] = number(fit.slope);
    j["theoretical_slope"] = number(theoretical_slope);
    j["intercept"] = number(fit.intercept);
    j["fit_residual"] = number(fit.fit_residual);
    j["window"] = {fit.window.t_min, fit.window.t_max};
    j["points"] = fit.points;
    j["excluded"] = fit.excluded;
    summary_["fits"].push_back(j);
}

void Report::add_check(Check c) {
    Json j;
    j["name"] = c.name;
    j["measured"] = number(c.measured);
    j["expected"] = number(c.expected);
    j["tolerance"] = number(c.tolerance);
    j["pass"] = c.pass;
    summary_["checks"].push_back(j);
    log(std::string(c.pass ? "PASS " : "FAIL ") + c.name + " measured=" + format_number(c.measured) +
        " expected=" + format_number(c.expected) + " tol=" + format_number(c.tolerance));
    checks_.push_back(std::move(c));
}

void Report::log(const std::string& line) { log_.push_back(line); }

void Report::attach(std::string filename, std::string content) {
    attachments_.emplace_back(std::move(filename), std::move(content));
}

bool Report::passed() const {
    for (const auto& c : checks_) {
        if (!c.pass) return false;
    }
    return true;
}

void Report::write(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    {
        std::ofstream csv(dir / (experiment_ + ".csv"));
        csv << kCsvHeader << '\n';
        for (const auto& r : rows_) csv << csv_line(r) << '\n';
    }
    {
        Json s = summary_;
        s["pass"] = passed();
        std::ofstream js(dir / (experiment_ + ".json"));
        js << s.dump(2) << '\n';
    }
    {
        std::ofstream lg(dir / (experiment_ + ".log"));
        for (const auto& l : log_) lg << l << '\n';
    }
    for (const auto& [name, content] : attachments_) {
        std::ofstream out(dir / name);
        out << content;
    }
    for (const auto* f : {".csv", ".json", ".log"}) {
        if (!std::filesystem::exists(dir / (experiment_ + f))) {
            throw std::runtime_error("could not write " + (dir / (experiment_ + f)).string());
        }
    }
}

Json series_json(const DecaySeries& s) {
    Json j;
    j["label"] = s.label;
    j["p"] = format_norm(s.p);
    j["scale_exponent"] = s.scale_exponent;
    j["log_factor"] = s.log_factor == LogFactor::DivideByLogT ? "divide_by_log_t" : "none";
    for (const auto& x : s.samples) j["samples"].push_back({{"t", x.t}, {"raw", number(x.raw)}, {"value", number(x.value)}});
    return j;
}

}  // namespace fracdisp::cli
