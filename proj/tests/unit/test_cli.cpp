#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fracdisp/cli/app.hpp"
#include "fracdisp/cli/commands.hpp"

using namespace fracdisp;
using namespace fracdisp::cli;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("fracdisp_test_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "fracdisp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Config, ReadsIniSections) {
    const fs::path dir = scratch("ini");
    std::ofstream(dir / "run.ini") << "[params]\nalpha = 3/2\nbeta = 1.5\n[grid]\nL = 50\nN = 512\n"
                                      "[time]\nt_end = 20\nschedule = log:1:20:4\n[norms]\np = 2, inf\n"
                                      "[initial_data]\nkind = odd_bump\nseed = 9\n[output]\ndir = here\n";
    ExperimentConfig cfg;
    load_config_file((dir / "run.ini").string(), cfg);
    EXPECT_EQ(cfg.alpha_text, "3/2");
    EXPECT_EQ(cfg.params().regime, (Regime{Regime::Case::II, 2}));
    EXPECT_EQ(cfg.beta, 1.5);
    EXPECT_EQ(cfg.N, 512u);
    EXPECT_EQ(cfg.initial.kind, "odd_bump");
    EXPECT_EQ(cfg.initial.seed, 9u);
    EXPECT_EQ(cfg.norms, (std::vector<double>{2.0, INFINITY}));
    EXPECT_EQ(cfg.output_dir, "here");
    EXPECT_EQ(cfg.initial.amplitude, 0.1);  // untouched default
    EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, RejectsBadInput) {
    const fs::path dir = scratch("bad_ini");
    std::ofstream(dir / "a.ini") << "[grids]\nL = 5\n";
    std::ofstream(dir / "b.ini") << "[grid]\nN = many\n";
    ExperimentConfig cfg;
    EXPECT_THROW(load_config_file((dir / "a.ini").string(), cfg), ConfigError);
    EXPECT_THROW(load_config_file((dir / "b.ini").string(), cfg), ConfigError);

    cfg = {};
    cfg.alpha_text = "3";
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.N = 1001;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.initial.kind = "square";
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.T_max = 2.0 * cfg.t_end;
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Config, ScheduleExpansion) {
    const auto d = expand_schedule("default", 100.0);
    EXPECT_EQ(d.front(), 0.0);
    EXPECT_EQ(d[32], 1.0);
    EXPECT_EQ(d.back(), 100.0);
    EXPECT_EQ(d.size(), 33u + 32u);
    EXPECT_EQ(expand_schedule("list:5,1,5", 10.0), (std::vector<double>{1.0, 5.0, 10.0}));
    EXPECT_EQ(expand_schedule("log:1:100:1", 100.0), (std::vector<double>{1.0, 10.0, 100.0}));
    EXPECT_THROW(expand_schedule("list:20", 10.0), ConfigError);
    EXPECT_THROW(expand_schedule("every:2", 10.0), ConfigError);
    EXPECT_EQ(format_norm(INFINITY), "inf");
    EXPECT_EQ(parse_norm_list("1,inf"), (std::vector<double>{1.0, INFINITY}));
}

TEST(InitialData, MomentsOfBuiltInKinds) {
    const Grid1D grid(50.0, 2048);
    InitialDataSpec g;
    const FirstMoments a = compute_M_m(make_initial_data(g, grid).field);
    EXPECT_NEAR(a.M, 0.1, 1e-14);
    EXPECT_NEAR(a.m, 0.0, 1e-14);

    InitialDataSpec s{"shifted_gaussian", 0.2, 1.0, 1.5, 0};
    const FirstMoments b = compute_M_m(make_initial_data(s, grid).field);
    EXPECT_NEAR(b.M, 0.2, 1e-14);
    EXPECT_NEAR(b.m, 0.3, 1e-14);

    InitialDataSpec o{"odd_bump", 0.1, 1.0, 0.0, 0};
    const FirstMoments c = compute_M_m(make_initial_data(o, grid).field);
    EXPECT_NEAR(c.M, 0.0, 1e-15);
    EXPECT_NEAR(c.m, 0.1 * std::sqrt(std::numbers::pi) / 2.0, 1e-14);
}

TEST(InitialData, RandomSmoothIsSeededAndSized) {
    const Grid1D grid(50.0, 1024);
    InitialDataSpec r{"random_smooth", 0.2, 1.0, 0.0, 7};
    const InitialData a = make_initial_data(r, grid);
    const InitialData b = make_initial_data(r, grid);
    EXPECT_TRUE(std::ranges::equal(a.field.values(), b.field.values()));
    EXPECT_NEAR(a.size, 0.2, 1e-12);
    r.seed = 8;
    EXPECT_FALSE(std::ranges::equal(make_initial_data(r, grid).field.values(), a.field.values()));
    EXPECT_TRUE(a.warnings.empty());

    InitialDataSpec big{"gaussian", 5.0, 1.0, 0.0, 0};
    EXPECT_FALSE(make_initial_data(big, grid).warnings.empty());
}

TEST(Report, CsvRoundTrip) {
    const ReportRow row{"solve", "u", 12.5, INFINITY, 3e-4, 0.5, true, 1.0 / 3.0};
    const std::string line = csv_line(row);
    const ReportRow back = parse_csv_line(line);
    EXPECT_EQ(back.experiment, "solve");
    EXPECT_EQ(back.p, INFINITY);
    EXPECT_TRUE(back.log_factor);
    EXPECT_EQ(back.scaled_value, 1.0 / 3.0);
    EXPECT_EQ(csv_line(back), line);
    EXPECT_THROW(parse_csv_line("solve,u,1"), std::invalid_argument);
}

TEST(App, ExitCodes) {
    const fs::path dir = scratch("exit");
    EXPECT_EQ(run({"--bogus"}), kExitConfig);
    EXPECT_EQ(run({}), kExitConfig);
    EXPECT_EQ(run({"solve", "--alpha", "3.5", "--output-dir", dir.string()}), kExitConfig);
    EXPECT_EQ(run({"solve", "--N", "7", "--output-dir", dir.string()}), kExitConfig);
    EXPECT_EQ(run({"emit-plots-data", "--input-dir", (dir / "missing").string(), "--output-dir", dir.string()}),
              kExitConfig);
    // A large amplitude blows up.
    EXPECT_EQ(run({"solve", "--amplitude", "400", "--L", "20", "--N", "128", "--dt", "0.2", "--t-end", "5",
                   "--output-dir", dir.string()}),
              kExitNumeric);
}

TEST(App, LinearSolveMatchesSemigroupAndIsDeterministic) {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    const std::vector<std::string> base{"solve",   "--beta", "0", "--alpha", "1.5",          "--kind",
                                        "shifted_gaussian",  "--shift", "1", "--L", "200", "--N", "1024",
                                        "--t-end", "20"};
    auto args = base;
    args.insert(args.end(), {"--output-dir", a.string()});
    std::string text;
    ASSERT_EQ(run(args, &text), kExitPass) << text;
    args = base;
    args.insert(args.end(), {"--output-dir", b.string()});
    ASSERT_EQ(run(args), kExitPass);
    for (const char* f : {"solve.csv", "solve.json", "solve.log"}) EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;

    const auto summary = Json::parse(slurp(a / "solve.json"));
    EXPECT_LE(summary["max_deviation_from_semigroup"].get<double>(), 1e-11);
    EXPECT_TRUE(summary["pass"].get<bool>());
}

TEST(App, VerifyLinearRecoversLemmaRate) {
    const fs::path dir = scratch("vl");
    ASSERT_EQ(run({"verify-linear", "--alpha", "1.5", "--t-end", "1000", "--output-dir", dir.string()}), kExitPass);
    const auto summary = Json::parse(slurp(dir / "verify-linear.json"));
    bool found = false;
    for (const auto& f : summary["fits"]) {
        if (f["name"] == "semigroup_gap_l0_p1") {
            found = true;
            EXPECT_NEAR(f["measured_slope"].get<double>(), -0.25, 0.05);
            EXPECT_EQ(f["theoretical_slope"].get<double>(), -0.25);
        }
    }
    EXPECT_TRUE(found);
}

TEST(App, ConfigFileAndFlagOverride) {
    const fs::path dir = scratch("override");
    std::ofstream(dir / "c.ini") << "[params]\nbeta = 0\nalpha = 2.5\n[grid]\nL = 100\nN = 512\n[time]\nt_end = 10\n";
    ASSERT_EQ(run({"solve", "--config", (dir / "c.ini").string(), "--alpha", "7/5", "--output-dir", dir.string()}),
              kExitPass);
    const auto summary = Json::parse(slurp(dir / "solve.json"));
    EXPECT_EQ(summary["config"]["alpha"], "7/5");
    EXPECT_EQ(summary["config"]["regime"], "CaseIII(2)");
    EXPECT_EQ(summary["config"]["beta"].get<double>(), 0.0);
    EXPECT_EQ(summary["config"]["L"].get<double>(), 100.0);
}

TEST(App, EmitPlotsDataMergesSchemaFiles) {
    const fs::path dir = scratch("plots");
    ASSERT_EQ(run({"solve", "--beta", "0", "--L", "100", "--N", "512", "--t-end", "10", "--output-dir",
                   (dir / "s").string()}),
              kExitPass);
    std::ofstream(dir / "s" / "other.csv") << "x,y\n1,2\n";
    ASSERT_EQ(run({"emit-plots-data", "--input-dir", dir.string(), "--output-dir", dir.string()}), kExitPass);
    const std::string merged = slurp(dir / "plots_data.csv");
    const std::string solve = slurp(dir / "s" / "solve.csv");
    EXPECT_EQ(merged.substr(0, merged.find('\n')), kCsvHeader);
    EXPECT_EQ(std::count(merged.begin(), merged.end(), '\n'), std::count(solve.begin(), solve.end(), '\n'));
}

TEST(App, SweepIsIndependentOfWorkerCount) {
    const fs::path a = scratch("sweep_a"), b = scratch("sweep_b");
    const std::vector<std::string> base{"sweep", "--alphas", "1.5,2.5", "--betas", "0,3", "--L", "100",
                                        "--N",   "512",      "--t-end", "5"};
    auto args = base;
    args.insert(args.end(), {"--workers", "1", "--output-dir", a.string()});
    ASSERT_EQ(run(args), kExitPass);
    args = base;
    args.insert(args.end(), {"--workers", "4", "--output-dir", b.string()});
    ASSERT_EQ(run(args), kExitPass);
    const std::string csv = slurp(a / "sweep.csv");
    EXPECT_EQ(csv, slurp(b / "sweep.csv"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4 * 3);
}
