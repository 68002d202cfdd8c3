#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <sys/wait.h>

#include <lifespan/experiments.hpp>

using namespace lifespan;
namespace fs = std::filesystem;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

json small_sweep() {
    return json::parse(R"({
      "problem": {"N": 1, "alpha": 1.0},
      "datum": {"kind": "bounded_bump", "amplitude": 1.0, "width": 1.0},
      "lambda_grid": {"min": 1.0, "max": 10.0, "points": 3},
      "checks": ["sandwich", "necessary_condition"]
    })");
}

int run_cli(const std::string& args) {
    const int rc = std::system((std::string(LIFESPAN_CLI) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

} // namespace

TEST(Format, ShortestRoundTrip) {
    EXPECT_EQ(fmt(0.1), "0.1");
    EXPECT_EQ(fmt(1.0 / 3.0), "0.3333333333333333");
    EXPECT_EQ(fmt(kInf), "inf");
    EXPECT_EQ(fmt(-0.0), "0");
    EXPECT_EQ(std::stod(fmt(2.0 / 7.0)), 2.0 / 7.0);
}

TEST(Config, UnknownKeysNameTheirPath) {
    json j = small_sweep();
    j["datum"]["amplitud"] = 2.0;
    EXPECT_NE(error_of([&] { sweep_config_from_json(j); }).find("datum.amplitud"), std::string::npos);
    j = small_sweep();
    j["extra"] = 1;
    EXPECT_NE(error_of([&] { sweep_config_from_json(j); }).find("config.extra"), std::string::npos);
    j = small_sweep();
    j["checks"] = {"sandwhich"};
    EXPECT_NE(error_of([&] { sweep_config_from_json(j); }).find("sandwhich"), std::string::npos);
}

TEST(Config, ProblemIsValidated) {
    EXPECT_NE(error_of([] { problem_from_json(json{{"N", 0}, {"alpha", 1.0}}); }).find("ConfigInvalid"), std::string::npos);
    EXPECT_NE(error_of([] { problem_from_json(json{{"N", 1}}); }).find("problem.alpha"), std::string::npos);
}

TEST(Config, ProfileJsonRoundTrip) {
    const std::vector<std::string> docs{
        R"({"kind": "constant", "c": 2.0})",
        R"({"kind": "bounded_bump", "amplitude": 1.5, "width": 0.5})",
        R"({"kind": "singular_power", "gamma": 0.5, "omega": "first_coordinate_ratio", "c": 1.0})",
        R"({"kind": "truncated_singular", "gamma": 0.5, "omega": "one", "eps": 2.0, "c": 1.0})",
        R"({"kind": "tail_power", "gamma": 0.25, "omega": "one", "R": 3.0, "c": 1.0})",
        R"({"kind": "two_power", "gamma1": 0.25, "gamma2": 0.75, "omega": "one", "rho": 1.0, "c1": 1.0, "c2": 2.0})",
        R"({"kind": "sector_psi0", "m": 1, "gamma": 0.5, "omega": "one", "cutoff": 1.0, "c": 1.0})",
        R"({"kind": "dirac_approx", "mass": 2.0, "width": 0.01})"};
    for (const auto& d : docs) {
        const json j = json::parse(d);
        const Profile p = profile_from_json(j);
        EXPECT_EQ(profile_to_json(p), j) << d;
        EXPECT_DOUBLE_EQ(evaluate(profile_from_json(profile_to_json(p)), {0.7, 0, 0}, 1), evaluate(p, {0.7, 0, 0}, 1));
    }
    EXPECT_THROW(profile_from_json(json{{"kind", "gaussian"}}), Error);
}

TEST(Sweep, DeterministicCsvAndSandwich) {
    const SweepConfig c = sweep_config_from_json(small_sweep());
    const SweepResult a = run_sweep(c, 1);
    const SweepResult b = run_sweep(c, 3);
    std::ostringstream sa, sb;
    write_sweep_csv(sa, a);
    write_sweep_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(sa.str().substr(0, sa.str().find('\n')),
              "lambda,T_lower,T_lower_name,T_upper,T_num,sandwich,slope_target_hi,slope_target_lo");
    EXPECT_TRUE(a.pass);
    for (const auto& r : a.rows) {
        EXPECT_LE(r.T_lower, r.T_num);
        ASSERT_TRUE(r.T_upper);
        EXPECT_LE(r.T_num, *r.T_upper);
        EXPECT_LE(r.necessary_ratio, 1.0 + 1e-3);
    }
}

TEST(Sweep, GridPolicyTracksLifeSpan) {
    const ProblemSpec s{1, 1.0, 0.0, 0};
    const Profile p{SingularPower{0.5, AngularPart::one(), 1.0}, 10.0};
    const GridChoice g = choose_grid(p, s, GridPolicy{}, 1.0);
    EXPECT_TRUE(std::isfinite(g.T_s));
    EXPECT_NEAR(g.grid.half_width / (10.0 * std::sqrt(g.T_s)), 1.0, 1e-3);
    EXPECT_EQ(g.grid.n % 2, 0);
}

TEST(Bounds, ReportJsonShape) {
    const json r = run_bounds(json::parse(R"({
      "problem": {"N": 1, "alpha": 1.0},
      "datum": {"kind": "singular_power", "gamma": 0.5},
      "lambda": 1.0
    })"));
    EXPECT_TRUE(r.contains("lower"));
    EXPECT_TRUE(r["asymptotic"].contains("to_zero"));
    EXPECT_TRUE(r["asymptotic"].contains("to_infinity"));
    ASSERT_TRUE(r["upper"].is_object());
    for (const auto& b : r["lower"])
        if (b["T"].is_number()) EXPECT_LE(b["T"].get<double>(), r["upper"]["T"].get<double>());
    EXPECT_FALSE(r["inapplicable"].empty());
}

TEST(Kernel, CsvSchema) {
    const auto r = run_kernel_checks(json::parse(R"({"rows": [{"gamma": 0, "mu": 0, "q1": 1, "q2": "inf"}]})"));
    std::ostringstream os;
    write_kernel_csv(os, r);
    EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "gamma,mu_w,q1,q2,predicted_slope,fitted_slope,max_ratio_deviation");
    EXPECT_TRUE(r.pass);
}

TEST(Cli, ExitCodes) {
    const fs::path dir = fs::temp_directory_path() / "lifespan_cli_test";
    fs::create_directories(dir);
    const std::string cfg = std::string(LIFESPAN_CONFIGS);
    EXPECT_EQ(run_cli("bounds --config " + cfg + "/bounds_singular.json --out " + dir.string()), 0);
    EXPECT_TRUE(fs::exists(dir / "bounds.json"));
    EXPECT_EQ(run_cli("simulate --config " + cfg + "/simulate_bump.json --out " + dir.string()), 0);
    EXPECT_TRUE(fs::exists(dir / "history.csv"));
    const fs::path bad = dir / "bad.json";
    std::ofstream(bad) << R"({"problem": {"N": 1, "alpha": 1.0}, "datum": {"kind": "constant"}, "lambda_grid": {"min": 1, "max": 2, "points": 2}, "typo": 1})";
    EXPECT_EQ(run_cli("sweep --config " + bad.string() + " --out " + dir.string()), 1);
    const fs::path failing = dir / "failing.json";
    std::ofstream(failing) << R"({"problem": {"N": 1, "alpha": 1.0}, "datum": {"kind": "constant"},
      "lambda_grid": {"min": 1, "max": 2, "points": 3}, "checks": ["exponent"],
      "exponent_fits": [{"min": 1, "max": 2, "target": -3.0, "tolerance": 0.01}]})";
    EXPECT_EQ(run_cli("sweep --config " + failing.string() + " --out " + dir.string()), 2);
    fs::remove_all(dir);
}
