#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "fracdisp/diagnostics.hpp"

namespace fracdisp::cli {

using Json = nlohmann::ordered_json;

/// One row of the fixed CSV schema
/// experiment,label,t,p,raw_norm,scale_exponent,log_factor,scaled_value.
struct ReportRow {
    std::string experiment;
    std::string label;
    double t = 0.0;
    double p = 0.0;
    double raw_norm = 0.0;
    double scale_exponent = 0.0;
    bool log_factor = false;
    double scaled_value = 0.0;
};

inline constexpr const char* kCsvHeader = "experiment,label,t,p,raw_norm,scale_exponent,log_factor,scaled_value";

std::string format_number(double v);
std::string csv_line(const ReportRow& row);
/// Parses a line of the schema; throws std::invalid_argument on malformed input.
ReportRow parse_csv_line(const std::string& line);

struct Check {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Accumulates CSV rows, the JSON summary and a plain-text log for one
/// subcommand, then writes <experiment>.csv/.json/.log.
class Report {
public:
    explicit Report(std::string experiment);

    const std::string& experiment() const noexcept { return experiment_; }
    Json& summary() noexcept { return summary_; }
    const std::vector<ReportRow>& rows() const noexcept { return rows_; }
    const std::vector<Check>& checks() const noexcept { return checks_; }

    /// Rows without an experiment name get this report's.
    void add_row(ReportRow row);
    void add_series(const DecaySeries& series);
    /// Records measured and theoretical slopes of a fit under summary["fits"].
    void add_fit(const std::string& name, const RateFit& fit, double theoretical_slope);
    void add_check(Check check);
    void log(const std::string& line);
    /// Extra file written next to the report (e.g. sample tables).
    void attach(std::string filename, std::string content);
    bool passed() const;

    void write(const std::filesystem::path& dir) const;

private:
    std::string experiment_;
    std::vector<ReportRow> rows_;
    std::vector<Check> checks_;
    std::vector<std::string> log_;
    std::vector<std::pair<std::string, std::string>> attachments_;
    Json summary_ = Json::object();
};

Json series_json(const DecaySeries& series);

}  // namespace fracdisp::cli
