#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <thread>

#include <lifespan/experiments.hpp>

using namespace lifespan;

namespace {

const int workers = std::max(1u, std::thread::hardware_concurrency());

json load(const std::string& name) {
    std::ifstream in(std::string(LIFESPAN_CONFIGS) + "/" + name);
    if (!in) fail(ErrorKind::ConfigInvalid, "cannot open " + name);
    return json::parse(in);
}

std::string check_digest(const json& checks) {
    std::string s;
    auto add = [&](const std::string& name, const json& c) {
        if (!s.empty()) s += ", ";
        s += name + "=" + (c.value("pass", false) ? "ok" : "fail");
        if (c.contains("slope")) s += " slope " + c["slope"].dump();
        if (c.contains("max_scaled")) s += " max scaled " + c["max_scaled"].dump();
    };
    for (auto it = checks.begin(); it != checks.end(); ++it) {
        if (it->is_array())
            for (const auto& c : *it) add(it.key(), c);
        else
            add(it.key(), *it);
    }
    return s;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome sweep_file(const std::string& name) {
    const SweepResult r = run_sweep(sweep_config_from_json(load(name)), workers);
    return {r.pass, name + ": " + check_digest(r.summary["checks"])};
}

Outcome constant_data() {
    double worst = 0.0;
    for (double alpha : {1.0, 2.0})
        for (double lambda : {0.5, 1.0, 2.0}) {
            const double exact = 1.0 / (alpha * std::pow(lambda, alpha));
            EvolveConfig c;
            c.horizon = 2.0 * exact;
            c.dt_initial = exact / 400.0;
            const Profile p{Constant{1.0}, lambda};
            const ProblemSpec s{1, alpha, 0.0, 0};
            const auto e = evolve(p, s, choose_grid(p, s, GridPolicy{}, exact).grid, c);
            worst = std::max(worst, std::abs(e.T_est - exact) / exact);
        }
    return {worst <= 0.01, "max relative error " + fmt(worst)};
}

Outcome sandwiches() {
    int failures = 0;
    std::string d;
    for (const char* name : {"sandwich_bump.json", "sandwich_tilde.json", "sandwich_tildetilde.json",
                             "sandwich_twopower.json", "sandwich_dirac.json"}) {
        const SweepResult r = run_sweep(sweep_config_from_json(load(name)), workers);
        const int v = r.summary["checks"]["sandwich"]["violations"].get<int>();
        failures += v;
        d += std::string(d.empty() ? "" : ", ") + name + " violations=" + std::to_string(v);
    }
    return {failures == 0, d};
}

Outcome kernel() {
    const auto r = run_kernel_checks(load("kernel.json"), workers);
    return {r.pass, std::to_string(r.rows.size()) + " slope rows, " + std::to_string(r.translations.size()) +
                        " translation rows"};
}

Outcome scaling() {
    const auto r = run_scaling_checks(load("scaling.json"), workers, 0);
    const json& rep = r.report;
    const bool core = rep["formula"]["pass"].get<bool>() && rep["homogeneous"]["pass"].get<bool>();
    bool limits = true;
    for (const auto& l : rep["limits"]) limits = limits && l["pass"].get<bool>();
    return {core && limits, "homogeneous spread " + rep["homogeneous"]["spread"].dump() + ", limits " +
                                (limits ? "ok" : "fail")};
}

Outcome properties() {
    std::string d;
    bool ok = true;

    double semigroup_err = 0.0;
    bool max_principle = true;
    for (int dim : {1, 2}) {
        const Grid g = make_grid(dim, 8.0, dim == 1 ? 128 : 48);
        for (const Profile& p : {Profile{BoundedBump{1.0, 1.0}, 1.0}, Profile{TruncatedSingular{0.5, AngularPart::one(), 1.0, 1.0}, 1.0},
                                 Profile{DiracApprox{1.0, 0.3}, 1.0}}) {
            const Field f = sample_profile(p, g);
            const Field a = heat_step(heat_step(f, 0.2), 0.3);
            const Field b = heat_step(f, 0.5);
            for (std::size_t i = 0; i < a.values.size(); ++i) {
                semigroup_err = std::max(semigroup_err, std::abs(a.values[i] - b.values[i]));
                if (b.values[i] < 0.0 || b.values[i] > f.max_abs() * (1.0 + 1e-12)) max_principle = false;
            }
        }
    }
    ok = ok && max_principle && semigroup_err <= 1e-8;
    d += std::string("max principle ") + (max_principle ? "ok" : "fail") + ", semigroup error " + fmt(semigroup_err);

    const std::vector<Profile> shapes{Profile{BoundedBump{1.0, 1.0}, 1.0}, Profile{BoundedBump{1.0, 2.0}, 1.0},
                                      Profile{TruncatedSingular{0.5, AngularPart::one(), 1.0, 1.0}, 1.0},
                                      Profile{DiracApprox{2.0, 0.25}, 1.0},
                                      Profile{TwoPower{0.25, 0.75, AngularPart::one(), 1.0, 1.0, 1.0}, 1.0}};
    const std::vector<double> lambdas{2.0, 3.0, 4.0, 6.0, 8.0};
    const Grid g = make_grid(1, 20.0, 400);
    const ProblemSpec s{1, 1.0, 0.0, 0};
    std::vector<double> T(shapes.size() * lambdas.size());
    parallel_for(T.size(), workers, [&](std::size_t k) {
        EvolveConfig c;
        c.horizon = 20.0;
        c.dt_initial = 1e-3;
        T[k] = evolve(shapes[k / lambdas.size()].scaled(lambdas[k % lambdas.size()]), s, g, c).T_est;
    });
    int pairs = 0, inversions = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (std::size_t j = 0; j + 1 < lambdas.size(); ++j) {
            ++pairs;
            if (T[i * lambdas.size() + j + 1] > T[i * lambdas.size() + j]) ++inversions;
        }
    ok = ok && inversions == 0;
    d += ", comparison " + std::to_string(inversions) + "/" + std::to_string(pairs) + " inversions";

    double worst = 0.0;
    for (const char* name : {"sandwich_bump.json", "sandwich_tilde.json", "sandwich_tildetilde.json",
                             "sandwich_twopower.json", "sandwich_dirac.json"}) {
        const SweepResult r = run_sweep(sweep_config_from_json(load(name)), workers);
        const auto& nc = r.summary["checks"]["necessary_condition"];
        worst = std::max(worst, nc["max_ratio"].get<double>());
        ok = ok && nc["pass"].get<bool>();
    }
    d += ", necessary ratio " + fmt(worst);

    const auto sc = run_scaling_checks(load("scaling.json"), workers, 0);
    bool mono = true;
    for (const auto& m : sc.report["monotonicity"]) mono = mono && m["pass"].get<bool>();
    ok = ok && mono;
    d += std::string(", monotone families ") + (mono ? "ok" : "fail");
    return {ok, d};
}

} // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{
        constant_data,
        sandwiches,
        [] { return sweep_file("exponent_singular.json"); },
        [] { return sweep_file("bump_large_lambda.json"); },
        [] { return sweep_file("bump_small_lambda.json"); },
        kernel,
        scaling,
        [] { return sweep_file("henon.json"); },
        [] { return sweep_file("sector.json"); },
        properties};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %zu: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
