#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracdisp/grid.hpp"
#include "fracdisp/params.hpp"

namespace fracdisp::cli {

/// Bad or inconsistent configuration (exit status 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InitialDataSpec {
    std::string kind = "gaussian";  ///< gaussian | shifted_gaussian | odd_bump | random_smooth
    double amplitude = 0.1;
    double width = 1.0;
    double shift = 0.0;
    std::uint64_t seed = 0;
};

struct ExperimentConfig {
    std::string alpha_text = "2";
    double beta = 3.0;
    double L = 500.0;
    std::size_t N = 4096;
    std::optional<double> dt;  ///< default: default_time_step(grid)
    double t_end = 100.0;
    /// "default" (33 points on [0,1], then 16 per decade), "log:a:b:per_decade" or "list:t1,t2,...".
    std::string schedule = "default";
    double T_max = 0.0;  ///< 0 means t_end
    InitialDataSpec initial;
    std::vector<double> norms{1.0, 2.0, std::numeric_limits<double>::infinity()};
    std::string output_dir = "out";
    std::string label = "run";
    double smallness_threshold = 0.5;

    ModelParams params() const;
    Grid1D grid() const;
    double time_step() const;
    double mass_horizon() const { return T_max > 0.0 ? T_max : t_end; }
    std::vector<double> snapshot_times() const;

    /// Throws ConfigError on any range violation.
    void validate() const;
};

/// Reads an INI file with sections [params], [grid], [time], [initial_data],
/// [norms] and [output] into `cfg`, keeping fields the file does not set.
void load_config_file(const std::string& path, ExperimentConfig& cfg);

/// "1, 2, inf" -> {1, 2, inf}.
std::vector<double> parse_norm_list(const std::string& text);
std::string format_norm(double p);

/// Expands a schedule spec into sorted unique times within [0, t_end]; t_end is always included.
std::vector<double> expand_schedule(const std::string& spec, double t_end);

}  // namespace fracdisp::cli
