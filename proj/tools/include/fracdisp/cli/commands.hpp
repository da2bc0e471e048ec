#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fracdisp/cli/config.hpp"
#include "fracdisp/cli/initial_data.hpp"
#include "fracdisp/cli/report.hpp"
#include "fracdisp/observables.hpp"
#include "fracdisp/solver.hpp"

namespace fracdisp::cli {

/// A finished evolution together with the data it was started from.
struct Run {
    ModelParams params;
    InitialData initial;
    FirstMoments moments;
    Trajectory trajectory;
};

/// Evolves the configured initial data to cfg.t_end with the configured
/// schedule plus `extra_times` as snapshots.
Run run_solver(const ExperimentConfig& cfg, const std::vector<double>& extra_times = {});

/// script M of a run truncated at T_max, with M and m filled in.
Moments mass_moments(const Run& run, double T_max);

/// Times 10, 100, ... up to t_end (t_end itself when it is not a power of ten).
std::vector<double> decade_times(double t_end);

/// Log-spaced times from 10 to t_end, `per_decade` per decade, t_end included.
std::vector<double> verification_times(double t_end, int per_decade = 4);

/// Limit constants on a fine grid independent of the run grid.
LimitConstants fine_limit_constants(const ModelParams& params, const Moments& moments, double p);

Report run_profiles(const ExperimentConfig& cfg);
Report run_solve(const ExperimentConfig& cfg, bool write_fields);
Report run_verify_linear(const ExperimentConfig& cfg);
Report run_verify_duhamel(const ExperimentConfig& cfg);
Report run_verify_corollary(const ExperimentConfig& cfg);
Report run_mass_M(const ExperimentConfig& cfg);
Report run_sweep(const ExperimentConfig& cfg, const std::vector<std::string>& alphas,
                 const std::vector<double>& betas, unsigned workers);
/// Concatenates every schema CSV under `input_dir` (sorted by path) into plots_data.csv.
Report run_emit_plots_data(const ExperimentConfig& cfg, const std::filesystem::path& input_dir);

}  // namespace fracdisp::cli
