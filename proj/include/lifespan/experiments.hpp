#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "kernel_verify.hpp"
#include "profiles.hpp"
#include "scaling.hpp"
#include "solver.hpp"

namespace lifespan {

using json = nlohmann::json;

// ---------- formatting ----------

inline std::string fmt(double x) {
    if (x == 0.0) x = 0.0;
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline json num(double x) {
    if (std::isfinite(x)) return x;
    if (x == 0.0) x = 0.0;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

// ---------- config reading ----------

namespace cfg {

inline void keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(ErrorKind::ConfigInvalid, path + ": expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) fail(ErrorKind::ConfigInvalid, path + "." + it.key() + ": unknown key");
}

inline double real(const json& j, const std::string& path, const char* key, std::optional<double> dflt = std::nullopt) {
    if (!j.contains(key)) {
        if (dflt) return *dflt;
        fail(ErrorKind::ConfigInvalid, path + "." + key + ": missing");
    }
    const json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinity")) return kInf;
    fail(ErrorKind::ConfigInvalid, path + "." + key + ": expected a number");
}

inline int integer(const json& j, const std::string& path, const char* key, std::optional<int> dflt = std::nullopt) {
    if (!j.contains(key)) {
        if (dflt) return *dflt;
        fail(ErrorKind::ConfigInvalid, path + "." + key + ": missing");
    }
    if (!j.at(key).is_number_integer()) fail(ErrorKind::ConfigInvalid, path + "." + key + ": expected an integer");
    return j.at(key).get<int>();
}

inline std::string text(const json& j, const std::string& path, const char* key, std::optional<std::string> dflt = std::nullopt) {
    if (!j.contains(key)) {
        if (dflt) return *dflt;
        fail(ErrorKind::ConfigInvalid, path + "." + key + ": missing");
    }
    if (!j.at(key).is_string()) fail(ErrorKind::ConfigInvalid, path + "." + key + ": expected a string");
    return j.at(key).get<std::string>();
}

inline std::vector<double> reals(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) fail(ErrorKind::ConfigInvalid, path + "." + key + ": expected an array");
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) fail(ErrorKind::ConfigInvalid, path + "." + key + ": expected numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace cfg

inline AngularPart omega_from(const std::string& s, const std::string& path) {
    if (s == "one") return AngularPart::one();
    if (s == "first_coordinate_ratio") return AngularPart::ratio();
    fail(ErrorKind::ConfigInvalid, path + ".omega: expected \"one\" or \"first_coordinate_ratio\"");
}

inline std::string omega_name(const AngularPart& w) {
    return w.kind == AngularPart::Kind::first_coordinate_ratio ? "first_coordinate_ratio" : "one";
}

inline ProblemSpec problem_from_json(const json& j, const std::string& path = "problem") {
    cfg::keys(j, path, {"N", "alpha", "l", "m"});
    ProblemSpec s{cfg::integer(j, path, "N"), cfg::real(j, path, "alpha"), cfg::real(j, path, "l", 0.0), cfg::integer(j, path, "m", 0)};
    try {
        s.validate();
    } catch (const Error& e) {
        fail(ErrorKind::ConfigInvalid, path + ": " + e.what());
    }
    return s;
}

inline json problem_to_json(const ProblemSpec& s) { return {{"N", s.N}, {"alpha", s.alpha}, {"l", s.l}, {"m", s.m}}; }

inline Profile profile_from_json(const json& j, double lambda = 1.0, const std::string& path = "datum") {
    const std::string kind = cfg::text(j, path, "kind");
    auto w = [&] { return omega_from(cfg::text(j, path, "omega", std::string("one")), path); };
    ProfileShape shape;
    if (kind == "constant") {
        cfg::keys(j, path, {"kind", "c"});
        shape = Constant{cfg::real(j, path, "c", 1.0)};
    } else if (kind == "bounded_bump") {
        cfg::keys(j, path, {"kind", "amplitude", "width"});
        shape = BoundedBump{cfg::real(j, path, "amplitude", 1.0), cfg::real(j, path, "width", 1.0)};
    } else if (kind == "singular_power") {
        cfg::keys(j, path, {"kind", "gamma", "omega", "c"});
        shape = SingularPower{cfg::real(j, path, "gamma"), w(), cfg::real(j, path, "c", 1.0)};
    } else if (kind == "truncated_singular") {
        cfg::keys(j, path, {"kind", "gamma", "omega", "eps", "c"});
        shape = TruncatedSingular{cfg::real(j, path, "gamma"), w(), cfg::real(j, path, "eps", 1.0), cfg::real(j, path, "c", 1.0)};
    } else if (kind == "tail_power") {
        cfg::keys(j, path, {"kind", "gamma", "omega", "R", "c"});
        shape = TailPower{cfg::real(j, path, "gamma"), w(), cfg::real(j, path, "R", 1.0), cfg::real(j, path, "c", 1.0)};
    } else if (kind == "two_power") {
        cfg::keys(j, path, {"kind", "gamma1", "gamma2", "omega", "rho", "c1", "c2"});
        shape = TwoPower{cfg::real(j, path, "gamma1"), cfg::real(j, path, "gamma2"), w(), cfg::real(j, path, "rho", 1.0),
                         cfg::real(j, path, "c1", 1.0), cfg::real(j, path, "c2", 1.0)};
    } else if (kind == "sector_psi0") {
        cfg::keys(j, path, {"kind", "m", "gamma", "omega", "cutoff", "c"});
        shape = SectorPsi0{cfg::integer(j, path, "m", 1), cfg::real(j, path, "gamma"), w(), cfg::real(j, path, "cutoff", kInf),
                           cfg::real(j, path, "c", 1.0)};
    } else if (kind == "dirac_approx") {
        cfg::keys(j, path, {"kind", "mass", "width"});
        shape = DiracApprox{cfg::real(j, path, "mass", 1.0), cfg::real(j, path, "width", 1e-3)};
    } else {
        fail(ErrorKind::ConfigInvalid, path + ".kind: unknown datum kind \"" + kind + "\"");
    }
    return Profile{shape, lambda};
}

inline json profile_to_json(const Profile& p) {
    json j = std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) return {{"c", s.c}};
            else if constexpr (std::is_same_v<T, BoundedBump>) return {{"amplitude", s.amplitude}, {"width", s.width}};
            else if constexpr (std::is_same_v<T, SingularPower>) return {{"gamma", s.gamma}, {"omega", omega_name(s.omega)}, {"c", s.c}};
            else if constexpr (std::is_same_v<T, TruncatedSingular>)
                return {{"gamma", s.gamma}, {"omega", omega_name(s.omega)}, {"eps", s.eps}, {"c", s.c}};
            else if constexpr (std::is_same_v<T, TailPower>)
                return {{"gamma", s.gamma}, {"omega", omega_name(s.omega)}, {"R", s.R}, {"c", s.c}};
            else if constexpr (std::is_same_v<T, TwoPower>)
                return {{"gamma1", s.gamma1}, {"gamma2", s.gamma2}, {"omega", omega_name(s.omega)},
                        {"rho", s.rho},       {"c1", s.c1},         {"c2", s.c2}};
            else if constexpr (std::is_same_v<T, SectorPsi0>)
                return {{"m", s.m}, {"gamma", s.gamma}, {"omega", omega_name(s.omega)}, {"cutoff", num(s.cutoff)}, {"c", s.c}};
            else return {{"mass", s.mass}, {"width", s.width}};
        },
        p.shape);
    j["kind"] = profile_kind(p);
    return j;
}

// ---------- grid policy ----------

struct GridPolicy {
    double c_h = 0.025;        // h ~ c_h sqrt(T_s)
    double box_factor = 10.0;  // half width ~ box_factor sqrt(T_s)
    int n_min = 64;
    int n_max = 0;  // 0: dimension default
    int iterations = 4;
    double fixed_half_width = 0.0;  // > 0 disables the policy
    int fixed_n = 0;

    int max_points(int dim) const { return n_max > 0 ? n_max : (dim == 1 ? 16384 : dim == 2 ? 512 : 96); }
};

inline GridPolicy grid_policy_from_json(const json& j, const std::string& path = "grid") {
    cfg::keys(j, path, {"c_h", "box_factor", "n_min", "n_max", "iterations", "half_width", "n"});
    GridPolicy g;
    g.c_h = cfg::real(j, path, "c_h", g.c_h);
    g.box_factor = cfg::real(j, path, "box_factor", g.box_factor);
    g.n_min = cfg::integer(j, path, "n_min", g.n_min);
    g.n_max = cfg::integer(j, path, "n_max", g.n_max);
    g.iterations = cfg::integer(j, path, "iterations", g.iterations);
    g.fixed_half_width = cfg::real(j, path, "half_width", 0.0);
    g.fixed_n = cfg::integer(j, path, "n", 0);
    if (!(g.c_h > 0.0) || !(g.box_factor > 0.0) || g.n_min < 16) fail(ErrorKind::ConfigInvalid, path + ": invalid policy");
    if ((g.fixed_half_width > 0.0) != (g.fixed_n > 0)) fail(ErrorKind::ConfigInvalid, path + ": half_width and n go together");
    return g;
}

struct SolverOptions {
    double horizon_factor = 2.0;  // evolve horizon = factor * T_s
    double dt_fraction = 1.0 / 400.0;
    double blowup_threshold = 1e6;
    double history_q = 2.0;
    double history_gamma = 0.5;
    int necessary_samples = 32;
};

inline SolverOptions solver_options_from_json(const json& j, const std::string& path = "solver") {
    cfg::keys(j, path, {"horizon_factor", "dt_fraction", "blowup_threshold", "history_q", "history_gamma", "necessary_samples"});
    SolverOptions o;
    o.horizon_factor = cfg::real(j, path, "horizon_factor", o.horizon_factor);
    o.dt_fraction = cfg::real(j, path, "dt_fraction", o.dt_fraction);
    o.blowup_threshold = cfg::real(j, path, "blowup_threshold", o.blowup_threshold);
    o.history_q = cfg::real(j, path, "history_q", o.history_q);
    o.history_gamma = cfg::real(j, path, "history_gamma", o.history_gamma);
    o.necessary_samples = cfg::integer(j, path, "necessary_samples", o.necessary_samples);
    if (!(o.horizon_factor > 1.0) || !(o.dt_fraction > 0.0) || !(o.blowup_threshold > 1.0))
        fail(ErrorKind::ConfigInvalid, path + ": invalid solver options");
    return o;
}

namespace detail {

inline int even_points(double n, const GridPolicy& p, int dim) {
    const int hi = p.max_points(dim);
    int k = int(std::ceil(n));
    k = std::clamp(k, p.n_min, hi);
    if (k % 2) ++k;
    if (k > hi) k -= 2;
    return k;
}

inline double support_radius(const Profile& p) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TruncatedSingular>) return s.eps;
            else if constexpr (std::is_same_v<T, SectorPsi0>) return s.cutoff;
            else return kInf;
        },
        p.shape);
}

// Datum mass sits at |x| >= inner radius; the box must reach past it.
inline double inner_radius(const Profile& p) {
    if (const auto* t = std::get_if<TailPower>(&p.shape)) return t->R;
    return 0.0;
}

} // namespace detail

struct GridChoice {
    Grid grid;
    double T_s = kInf;            // discrete necessary-condition time on this grid (l = 0)
    bool from_upper_bound = true;  // false: reference time from a trial solve
};

// Box and spacing tied to the life-span scale: R = box_factor sqrt(T_s), h = c_h sqrt(T_s).
inline GridChoice choose_grid(const Profile& p, const ProblemSpec& s, const GridPolicy& pol, double T_hint,
                              const SolverOptions& so = {}) {
    const int N = s.N;
    if (pol.fixed_half_width > 0.0) {
        GridChoice c{make_grid(N, pol.fixed_half_width, pol.fixed_n)};
        if (s.l == 0.0) {
            auto ub = upper_bound_necessary(p, s, std::max(T_hint, 1.0) * 1e3, c.grid);
            if (ub) c.T_s = ub->T;
        }
        return c;
    }
    const double support = detail::support_radius(p);
    const double inner = detail::inner_radius(p);
    auto make = [&](double Ts) {
        double R = inner + pol.box_factor * std::sqrt(Ts);
        if (s.l > 0.0) R = std::max(R, 1.05 * support);
        double h = pol.c_h * std::sqrt(Ts);
        const int n = detail::even_points(2.0 * R / h, pol, N);
        return make_grid(N, R, n);
    };
    double T = std::max(T_hint, 1e-300);
    if (s.l != 0.0) {
        // No necessary-condition search: calibrate on trial solves.
        GridChoice c{make(T), kInf, false};
        for (int it = 0; it < pol.iterations; ++it) {
            EvolveConfig ec;
            ec.horizon = 1e3 * T;
            ec.dt_initial = T * so.dt_fraction;
            ec.blowup_threshold = so.blowup_threshold;
            const auto est = evolve(p, s, c.grid, ec);
            if (est.status != BlowupStatus::blowup) fail(ErrorKind::ConfigInvalid, "no blow-up during grid calibration");
            const double ratio = est.T_est / T;
            T = est.T_est;
            c = GridChoice{make(T), T, false};
            if (std::abs(ratio - 1.0) < 0.05) break;
        }
        return c;
    }
    GridChoice c{make(T), kInf, true};
    for (int it = 0, misses = 0; it < pol.iterations + misses && misses < 12; ++it) {
        const double R = c.grid.half_width;
        auto ub = upper_bound_necessary(p, s, 4.0 * R * R, c.grid);
        if (!ub) {
            ++misses;
            T *= 100.0;
            c = GridChoice{make(T), kInf, true};
            continue;
        }
        const double ratio = ub->T / T;
        T = ub->T;
        const Grid next = make(T);
        const bool stable = std::abs(ratio - 1.0) < 0.02 && next.n == c.grid.n;
        c = GridChoice{next, T, true};
        if (stable) break;
    }
    auto ub = upper_bound_necessary(p, s, 4.0 * c.grid.half_width * c.grid.half_width, c.grid);
    if (!ub) fail(ErrorKind::ConfigInvalid, "necessary-condition search found no violation on any calibrated grid");
    c.T_s = ub->T;
    return c;
}

// ---------- sweep rows ----------

struct RowResult {
    double lambda = 0.0;
    double T_lower = 0.0;
    std::string T_lower_name;
    std::optional<double> T_upper;
    double T_num = kInf;
    std::string status;
    bool sandwich = true;
    double necessary_ratio = 0.0;
    bool necessary_pass = true;
    int n = 0;
    double half_width = 0.0;
    int steps = 0;
    std::string error;
};

inline double best_lower_hint(const BoundReport& r) {
    const auto b = r.best_lower();
    return b && std::isfinite(b->T) ? b->T : 1.0;
}

inline RowResult run_row(const Profile& p, const ProblemSpec& s, const GridPolicy& pol, const SolverOptions& so,
                         bool check_necessary = true) {
    RowResult row;
    row.lambda = p.lambda;
    try {
        ReportOptions ro;
        const BoundReport rep = bound_report(p, s, ro);
        ProblemSpec spec = rep.problem;
        const auto best = rep.best_lower();
        if (best) {
            row.T_lower = best->T;
            row.T_lower_name = best->name;
        }
        const bool positive = is_nonnegative(p) || antisymmetry_of(p) > 0;
        double hint = best_lower_hint(rep) * 10.0;
        if (auto a = analytic_heat_sup(p, 1.0, s.N); a && spec.l == 0.0 && spec.m == 0) {
            auto ub = upper_bound_necessary(p, spec, 1e12, std::nullopt, SemigroupRoute::analytic);
            if (ub) hint = ub->T;
        }
        const GridChoice gc = choose_grid(p, spec, pol, hint, so);
        row.n = gc.grid.n;
        row.half_width = gc.grid.half_width;
        if (gc.from_upper_bound && positive && std::isfinite(gc.T_s)) row.T_upper = gc.T_s;
        EvolveConfig ec;
        ec.horizon = so.horizon_factor * gc.T_s;
        ec.dt_initial = gc.T_s * so.dt_fraction;
        ec.blowup_threshold = so.blowup_threshold;
        ec.history_q = so.history_q;
        ec.history_gamma = so.history_gamma;
        const auto est = evolve(p, spec, gc.grid, ec);
        row.steps = est.steps;
        row.status = est.status == BlowupStatus::blowup ? "blowup" : "no_blowup_within_horizon";
        row.T_num = est.T_est;
        if (row.T_upper) row.sandwich = row.T_lower <= row.T_num && row.T_num <= *row.T_upper;
        else row.sandwich = row.T_lower <= row.T_num;
        if (check_necessary && positive && spec.l == 0.0 && est.status == BlowupStatus::blowup) {
            std::vector<double> times;
            const auto& h = est.history;
            const std::size_t stride = std::max<std::size_t>(1, h.size() / std::max(1, so.necessary_samples));
            for (std::size_t i = 1; i < h.size(); i += stride)
                if (h[i].t < est.T_est) times.push_back(h[i].t);
            if (h.size() > 1 && h.back().t < est.T_est) times.push_back(h.back().t);
            const auto nc = check_necessary_condition(p, times, spec, gc.grid);
            row.necessary_ratio = nc.max_ratio;
            row.necessary_pass = nc.pass;
        }
    } catch (const std::exception& e) {
        row.error = e.what();
        row.status = "failed";
        row.sandwich = false;
        row.necessary_pass = false;
    }
    return row;
}

// ---------- worker pool ----------

template <class F>
void parallel_for(std::size_t count, int workers, F&& body) {
    workers = std::max(1, std::min<int>(workers, int(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    for (auto& t : pool) t.join();
}

// ---------- sweep ----------

struct DecadeCheck {
    std::string name;
    double lo = 0.0, hi = 0.0;
    std::optional<double> target;  // slope; default from the asymptotic exponent
    double tolerance = 0.1;        // relative
};

struct AsymptoticCheck {
    double lo = 0.0, hi = 0.0;
    std::string mode = "limsup";  // limsup: max lambda^e T <= C (1 + tol); within_factor: smallest-lambda value within factor
    double tolerance = 0.05;
    std::string direction = "to_infinity";
};

struct SweepConfig {
    ProblemSpec problem;
    Profile datum;
    std::vector<double> lambdas;
    GridPolicy grid;
    SolverOptions solver;
    std::set<std::string> checks{"sandwich"};
    std::vector<DecadeCheck> decades;
    std::vector<AsymptoticCheck> asymptotics;
    double scaling_upper_tolerance = 0.0;
    std::optional<double> scaling_upper_exponent;
    std::string csv = "sweep.csv";
    std::string summary = "summary.json";
};

inline std::vector<double> lambda_grid_from_json(const json& j, const std::string& path) {
    cfg::keys(j, path, {"min", "max", "points", "spacing", "values"});
    if (j.contains("values")) return cfg::reals(j, path, "values");
    const std::string sp = cfg::text(j, path, "spacing", std::string("geometric"));
    if (sp != "geometric") fail(ErrorKind::ConfigInvalid, path + ".spacing: only geometric is supported");
    const double lo = cfg::real(j, path, "min"), hi = cfg::real(j, path, "max");
    const int n = cfg::integer(j, path, "points");
    if (!(lo > 0.0) || !(hi >= lo) || n < 1) fail(ErrorKind::ConfigInvalid, path + ": need 0 < min <= max and points >= 1");
    return geometric_grid(lo, hi, n);
}

inline SweepConfig sweep_config_from_json(const json& j) {
    cfg::keys(j, "config", {"problem", "datum", "lambda_grid", "grid", "solver", "checks", "exponent_fits", "asymptotic",
                            "scaling_upper", "outputs"});
    SweepConfig c;
    c.problem = problem_from_json(j.at("problem"));
    if (!j.contains("datum")) fail(ErrorKind::ConfigInvalid, "config.datum: missing");
    c.datum = profile_from_json(j.at("datum"));
    if (!j.contains("lambda_grid")) fail(ErrorKind::ConfigInvalid, "config.lambda_grid: missing");
    c.lambdas = lambda_grid_from_json(j.at("lambda_grid"), "lambda_grid");
    if (j.contains("grid")) c.grid = grid_policy_from_json(j.at("grid"));
    if (j.contains("solver")) c.solver = solver_options_from_json(j.at("solver"));
    if (j.contains("checks")) {
        c.checks.clear();
        static const std::set<std::string> known{"sandwich", "exponent", "necessary_condition", "asymptotic", "scaling_upper"};
        for (const auto& v : j.at("checks")) {
            if (!v.is_string() || !known.count(v.get<std::string>()))
                fail(ErrorKind::ConfigInvalid, "checks: unknown check " + v.dump());
            c.checks.insert(v.get<std::string>());
        }
    }
    if (j.contains("exponent_fits")) {
        for (std::size_t i = 0; i < j.at("exponent_fits").size(); ++i) {
            const json& d = j.at("exponent_fits")[i];
            const std::string path = "exponent_fits[" + std::to_string(i) + "]";
            cfg::keys(d, path, {"name", "min", "max", "target", "tolerance"});
            DecadeCheck dc;
            dc.name = cfg::text(d, path, "name", "fit" + std::to_string(i));
            dc.lo = cfg::real(d, path, "min");
            dc.hi = cfg::real(d, path, "max");
            if (d.contains("target")) dc.target = cfg::real(d, path, "target");
            dc.tolerance = cfg::real(d, path, "tolerance", 0.1);
            c.decades.push_back(dc);
        }
    }
    if (j.contains("asymptotic")) {
        for (std::size_t i = 0; i < j.at("asymptotic").size(); ++i) {
            const json& d = j.at("asymptotic")[i];
            const std::string path = "asymptotic[" + std::to_string(i) + "]";
            cfg::keys(d, path, {"min", "max", "mode", "tolerance", "direction"});
            AsymptoticCheck a;
            a.lo = cfg::real(d, path, "min");
            a.hi = cfg::real(d, path, "max");
            a.mode = cfg::text(d, path, "mode", a.mode);
            a.tolerance = cfg::real(d, path, "tolerance", a.tolerance);
            a.direction = cfg::text(d, path, "direction", a.direction);
            if (a.mode != "limsup" && a.mode != "within_factor") fail(ErrorKind::ConfigInvalid, path + ".mode: unknown");
            if (a.direction != "to_zero" && a.direction != "to_infinity") fail(ErrorKind::ConfigInvalid, path + ".direction: unknown");
            c.asymptotics.push_back(a);
        }
    }
    if (j.contains("scaling_upper")) {
        const json& u = j.at("scaling_upper");
        cfg::keys(u, "scaling_upper", {"exponent", "tolerance"});
        if (u.contains("exponent")) c.scaling_upper_exponent = cfg::real(u, "scaling_upper", "exponent");
        c.scaling_upper_tolerance = cfg::real(u, "scaling_upper", "tolerance", 0.0);
    }
    if (j.contains("outputs")) {
        cfg::keys(j.at("outputs"), "outputs", {"csv", "summary"});
        c.csv = cfg::text(j.at("outputs"), "outputs", "csv", c.csv);
        c.summary = cfg::text(j.at("outputs"), "outputs", "summary", c.summary);
    }
    if (antisymmetry_of(c.datum) > 0) c.problem.m = antisymmetry_of(c.datum);
    return c;
}

struct SweepResult {
    std::vector<RowResult> rows;
    json summary;
    bool pass = true;
    std::optional<double> slope_target_hi, slope_target_lo;
};

inline std::optional<double> target_exponent(const Profile& p, const ProblemSpec& s, Direction d) {
    try {
        return -asymptotic_constants(p, d, s).exponent;
    } catch (const Error&) {
    }
    if (s.l != 0.0 && d == Direction::to_infinity) {
        // weighted Hardy-Henon exponent in the datum's own singularity
        if (const auto g = origin_singularity(p)) {
            const double den = (2.0 + s.l) / (2.0 * s.alpha) - 0.5 * *g;
            if (den > 0.0) return -1.0 / den;
        }
    }
    return std::nullopt;
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& r) {
    os << "lambda,T_lower,T_lower_name,T_upper,T_num,sandwich,slope_target_hi,slope_target_lo\n";
    auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
    for (const auto& row : r.rows)
        os << fmt(row.lambda) << ',' << fmt(row.T_lower) << ',' << row.T_lower_name << ',' << opt(row.T_upper) << ','
           << fmt(row.T_num) << ',' << (row.sandwich ? "pass" : "fail") << ',' << opt(r.slope_target_hi) << ','
           << opt(r.slope_target_lo) << '\n';
}

inline SweepResult run_sweep(const SweepConfig& c, int workers = 1) {
    SweepResult out;
    out.rows.resize(c.lambdas.size());
    parallel_for(c.lambdas.size(), workers, [&](std::size_t i) {
        out.rows[i] = run_row(c.datum.scaled(c.lambdas[i] / c.datum.lambda), c.problem, c.grid, c.solver,
                              c.checks.count("necessary_condition") > 0);
    });
    out.slope_target_hi = target_exponent(c.datum, c.problem, Direction::to_infinity);
    out.slope_target_lo = target_exponent(c.datum, c.problem, Direction::to_zero);

    json rows = json::array();
    bool rows_ok = true;
    for (const auto& r : out.rows) {
        rows_ok = rows_ok && r.error.empty() && r.status == "blowup";
        rows.push_back({{"lambda", num(r.lambda)},
                        {"T_lower", num(r.T_lower)},
                        {"T_lower_name", r.T_lower_name},
                        {"T_upper", r.T_upper ? num(*r.T_upper) : json(nullptr)},
                        {"T_num", num(r.T_num)},
                        {"status", r.status},
                        {"sandwich", r.sandwich},
                        {"necessary_ratio", num(r.necessary_ratio)},
                        {"grid_n", r.n},
                        {"grid_half_width", num(r.half_width)},
                        {"steps", r.steps},
                        {"error", r.error}});
    }
    json checks = json::object();
    bool pass = rows_ok;
    if (c.checks.count("sandwich")) {
        int violations = 0;
        for (const auto& r : out.rows) violations += r.sandwich ? 0 : 1;
        checks["sandwich"] = {{"violations", violations}, {"pass", violations == 0}};
        pass = pass && violations == 0;
    }
    if (c.checks.count("necessary_condition")) {
        double worst = 0.0;
        bool ok = true;
        for (const auto& r : out.rows) {
            worst = std::max(worst, r.necessary_ratio);
            ok = ok && r.necessary_pass;
        }
        checks["necessary_condition"] = {{"max_ratio", num(worst)}, {"pass", ok}};
        pass = pass && ok;
    }
    if (c.checks.count("exponent")) {
        json fits = json::array();
        for (const auto& d : c.decades) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& r : out.rows)
                if (r.lambda >= d.lo * (1 - 1e-12) && r.lambda <= d.hi * (1 + 1e-12) && std::isfinite(r.T_num) && r.T_num > 0)
                    pts.emplace_back(r.lambda, r.T_num);
            const auto target = d.target ? d.target : (d.lo >= 1.0 ? out.slope_target_hi : out.slope_target_lo);
            json f = {{"name", d.name}, {"min", d.lo}, {"max", d.hi}, {"points", pts.size()}};
            bool ok = false;
            try {
                const auto fit = exponent_fit(pts);
                f["slope"] = num(fit.slope);
                f["half_width"] = num(fit.half_width);
                if (target) {
                    f["target"] = num(*target);
                    ok = std::abs(fit.slope - *target) <= d.tolerance * std::abs(*target);
                }
            } catch (const Error& e) {
                f["error"] = e.what();
            }
            f["pass"] = ok;
            pass = pass && ok;
            fits.push_back(f);
        }
        checks["exponent"] = fits;
    }
    if (c.checks.count("asymptotic")) {
        json arr = json::array();
        for (const auto& a : c.asymptotics) {
            json f = {{"min", a.lo}, {"max", a.hi}, {"mode", a.mode}, {"direction", a.direction}};
            bool ok = false;
            try {
                const auto ac = asymptotic_constants(c.datum.scaled(1.0 / c.datum.lambda), a.direction == "to_zero" ? Direction::to_zero : Direction::to_infinity,
                                                     c.problem);
                std::vector<std::pair<double, double>> vals;
                for (const auto& r : out.rows)
                    if (r.lambda >= a.lo * (1 - 1e-12) && r.lambda <= a.hi * (1 + 1e-12))
                        vals.emplace_back(r.lambda, std::pow(r.lambda, ac.exponent) * r.T_num);
                if (vals.empty()) fail(ErrorKind::InsufficientData, "no rows in range");
                f["constant"] = num(ac.constant);
                f["exponent"] = num(ac.exponent);
                if (a.mode == "limsup") {
                    double mx = 0.0;
                    for (auto& v : vals) mx = std::max(mx, v.second);
                    f["max_scaled"] = num(mx);
                    ok = mx <= ac.constant * (1.0 + a.tolerance);
                } else {
                    const auto edge = a.direction == "to_zero" ? *std::min_element(vals.begin(), vals.end())
                                                                : *std::max_element(vals.begin(), vals.end());
                    f["scaled_at_edge"] = num(edge.second);
                    const double ratio = edge.second / ac.constant;
                    ok = ratio <= a.tolerance && ratio >= 1.0 / a.tolerance;
                }
            } catch (const Error& e) {
                f["error"] = e.what();
            }
            f["pass"] = ok;
            pass = pass && ok;
            arr.push_back(f);
        }
        checks["asymptotic"] = arr;
    }
    if (c.checks.count("scaling_upper")) {
        std::optional<double> e = c.scaling_upper_exponent;
        if (!e && out.slope_target_hi) e = -*out.slope_target_hi;
        json f;
        bool ok = false;
        if (e) {
            // Reference T(phi) at the sweep resolution and at a refined one; their gap is the error allowance.
            const Profile unit = c.datum.scaled(1.0 / c.datum.lambda);
            GridPolicy fine = c.grid;
            fine.c_h *= 0.5;
            SolverOptions fine_solver = c.solver;
            fine_solver.dt_fraction *= 0.125;
            const RowResult ref = run_row(unit, c.problem, c.grid, c.solver, false);
            const RowResult ref_fine = run_row(unit, c.problem, fine, fine_solver, false);
            const double err = std::abs(ref.T_num - ref_fine.T_num) / std::min(ref.T_num, ref_fine.T_num);
            const double allowance = std::max(err, c.scaling_upper_tolerance);
            f["T_num_at_1"] = num(ref.T_num);
            f["T_num_at_1_refined"] = num(ref_fine.T_num);
            f["allowance"] = num(allowance);
            f["exponent"] = num(*e);
            ok = ref.error.empty() && ref_fine.error.empty();
            double worst = 0.0;
            for (const auto& r : out.rows) {
                if (r.lambda <= 1.0) continue;
                const double v = std::pow(r.lambda, *e) * r.T_num / ref.T_num;
                worst = std::max(worst, v);
                ok = ok && v <= 1.0 + allowance;
            }
            f["max_scaled_ratio"] = num(worst);
        } else {
            f["error"] = "no exponent available";
        }
        f["pass"] = ok;
        pass = pass && ok;
        checks["scaling_upper"] = f;
    }
    out.pass = pass;
    out.summary = {{"problem", problem_to_json(c.problem)},
                   {"datum", profile_to_json(c.datum)},
                   {"slope_target_hi", out.slope_target_hi ? num(*out.slope_target_hi) : json(nullptr)},
                   {"slope_target_lo", out.slope_target_lo ? num(*out.slope_target_lo) : json(nullptr)},
                   {"rows", rows},
                   {"checks", checks},
                   {"pass", pass}};
    return out;
}

// ---------- bounds ----------

inline json bound_report_to_json(const BoundReport& r, const Profile& p) {
    json lower = json::array();
    for (const auto& b : r.lower)
        lower.push_back({{"name", b.name}, {"T", num(b.T)}, {"exponent", num(b.exponent)}, {"constant", num(b.constant)},
                         {"provenance", b.provenance}});
    json inap = json::array();
    for (const auto& x : r.inapplicable) inap.push_back({{"name", x.name}, {"reason", x.reason}});
    auto asym = [](const std::optional<AsymptoticConstant>& a) -> json {
        if (!a) return nullptr;
        return {{"constant", num(a->constant)}, {"exponent", num(a->exponent)}, {"regime", a->regime}};
    };
    return {{"problem", problem_to_json(r.problem)},
            {"datum", profile_to_json(Profile{p.shape, 1.0})},
            {"lambda", num(r.lambda)},
            {"lower", lower},
            {"upper", r.upper ? json{{"T", num(r.upper->T)}, {"horizon", num(r.upper->horizon)}} : json(nullptr)},
            {"asymptotic", {{"to_zero", asym(r.asymptotic_zero)}, {"to_infinity", asym(r.asymptotic_infinity)}}},
            {"inapplicable", inap}};
}

inline json run_bounds(const json& j) {
    cfg::keys(j, "config", {"problem", "datum", "lambda", "grid", "lebesgue_q", "weighted_q", "upper"});
    const ProblemSpec s = problem_from_json(j.at("problem"));
    if (!j.contains("datum")) fail(ErrorKind::ConfigInvalid, "config.datum: missing");
    const Profile p = profile_from_json(j.at("datum"), cfg::real(j, "config", "lambda", 1.0));
    ReportOptions o;
    if (j.contains("lebesgue_q")) {
        o.lebesgue_q.clear();
        for (const auto& v : j.at("lebesgue_q")) o.lebesgue_q.push_back(v.is_string() ? kInf : v.get<double>());
    }
    if (j.contains("weighted_q")) {
        o.weighted_q.clear();
        for (const auto& v : j.at("weighted_q")) o.weighted_q.push_back(v.is_string() ? kInf : v.get<double>());
    }
    const bool want_upper = !j.contains("upper") || j.at("upper").get<bool>();
    BoundReport r = bound_report(p, s, o);
    if (want_upper && r.problem.l == 0.0 && p.lambda > 0.0 && (is_nonnegative(p) || antisymmetry_of(p) > 0)) {
        try {
            if (r.problem.m == 0 && analytic_heat_sup(p, 1.0, s.N)) {
                r.upper = upper_bound_necessary(p, r.problem, 1e12, std::nullopt, SemigroupRoute::analytic);
            } else {
                const GridPolicy pol = j.contains("grid") ? grid_policy_from_json(j.at("grid")) : GridPolicy{};
                const auto gc = choose_grid(p, r.problem, pol, best_lower_hint(r) * 10.0);
                r.upper = UpperBound{gc.T_s, 4.0 * gc.grid.half_width * gc.grid.half_width, 0};
            }
        } catch (const Error& e) {
            r.inapplicable.push_back({"upper", e.what()});
        }
    }
    return bound_report_to_json(r, p);
}

// ---------- simulate ----------

inline void write_history_csv(std::ostream& os, const std::vector<HistoryRow>& h) {
    os << "t,sup_norm,l1_norm,lq_norm,weighted_norm,dt\n";
    for (const auto& r : h)
        os << fmt(r.t) << ',' << fmt(r.sup_norm) << ',' << fmt(r.l1_norm) << ',' << fmt(r.lq_norm) << ','
           << fmt(r.weighted_norm) << ',' << fmt(r.dt) << '\n';
}

struct SimulationResult {
    BlowupEstimate estimate;
    Grid grid;
    json summary;
};

inline SimulationResult run_simulation(const json& j) {
    cfg::keys(j, "config", {"problem", "datum", "lambda", "grid", "solver", "horizon"});
    ProblemSpec s = problem_from_json(j.at("problem"));
    if (!j.contains("datum")) fail(ErrorKind::ConfigInvalid, "config.datum: missing");
    const Profile p = profile_from_json(j.at("datum"), cfg::real(j, "config", "lambda", 1.0));
    if (antisymmetry_of(p) > 0) s.m = antisymmetry_of(p);
    const GridPolicy pol = j.contains("grid") ? grid_policy_from_json(j.at("grid")) : GridPolicy{};
    const SolverOptions so = j.contains("solver") ? solver_options_from_json(j.at("solver")) : SolverOptions{};
    const BoundReport rep = bound_report(p, s);
    const GridChoice gc = choose_grid(p, rep.problem, pol, best_lower_hint(rep) * 10.0, so);
    EvolveConfig ec;
    const double ref = std::isfinite(gc.T_s) ? gc.T_s : 1.0;
    ec.horizon = j.contains("horizon") ? cfg::real(j, "config", "horizon") : so.horizon_factor * ref;
    ec.dt_initial = std::min(ref * so.dt_fraction, ec.horizon);
    ec.blowup_threshold = so.blowup_threshold;
    ec.history_q = so.history_q;
    ec.history_gamma = so.history_gamma;
    SimulationResult out{evolve(p, rep.problem, gc.grid, ec), gc.grid, {}};
    const auto& e = out.estimate;
    out.summary = {{"problem", problem_to_json(rep.problem)},
                   {"datum", profile_to_json(Profile{p.shape, 1.0})},
                   {"lambda", num(p.lambda)},
                   {"grid", {{"N", gc.grid.dim}, {"half_width", num(gc.grid.half_width)}, {"n", gc.grid.n}}},
                   {"status", e.status == BlowupStatus::blowup ? "blowup" : "no_blowup_within_horizon"},
                   {"T_est", num(e.T_est)},
                   {"bracket", {num(e.T_lo), num(e.T_hi)}},
                   {"T_upper_discrete", num(gc.T_s)},
                   {"steps", e.steps},
                   {"rejected_steps", e.rejected}};
    return out;
}

// ---------- kernel checks ----------

struct KernelCheckResult {
    std::vector<KernelResult> rows;
    std::vector<std::pair<KernelRow, TranslationResult>> translations;
    json summary;
    bool pass = true;
};

inline KernelRow kernel_row_from_json(const json& r, const std::string& path, std::initializer_list<const char*> extra = {}) {
    std::vector<const char*> allowed{"gamma", "mu", "q1", "q2", "N"};
    allowed.insert(allowed.end(), extra.begin(), extra.end());
    if (!r.is_object()) fail(ErrorKind::ConfigInvalid, path + ": expected an object");
    for (auto it = r.begin(); it != r.end(); ++it)
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }) == allowed.end())
            fail(ErrorKind::ConfigInvalid, path + "." + it.key() + ": unknown key");
    return {cfg::real(r, path, "gamma"), cfg::real(r, path, "mu"), cfg::real(r, path, "q1"), cfg::real(r, path, "q2"),
            cfg::integer(r, path, "N", 1)};
}

inline bool kernel_row_passes(const KernelResult& k, double tol) {
    const double allowed = k.predicted == 0.0 ? 0.005 : tol * std::abs(k.predicted);
    return std::abs(k.fitted - k.predicted) <= allowed && k.max_ratio_deviation < 0.1;
}

inline KernelCheckResult run_kernel_checks(const json& j, int workers = 1) {
    cfg::keys(j, "config", {"rows", "eps", "t_min", "t_max", "t_points", "tolerance", "translation"});
    const double eps = cfg::real(j, "config", "eps", 1e-6);
    const double tmin = cfg::real(j, "config", "t_min", std::max(1.0, 10.0 * eps * eps));
    const double tmax = cfg::real(j, "config", "t_max", 64.0);
    const int tp = cfg::integer(j, "config", "t_points", 7);
    const double tol = cfg::real(j, "config", "tolerance", 0.05);
    std::vector<KernelRow> rows;
    if (j.contains("rows"))
        for (std::size_t i = 0; i < j.at("rows").size(); ++i)
            rows.push_back(kernel_row_from_json(j.at("rows")[i], "rows[" + std::to_string(i) + "]"));
    KernelCheckResult out;
    out.rows.resize(rows.size());
    const auto ts = geometric_grid(tmin, tmax, tp);
    parallel_for(rows.size(), workers, [&](std::size_t i) { out.rows[i] = kernel_slope_experiment(rows[i], ts, eps); });
    json rj = json::array();
    for (const auto& k : out.rows) {
        const bool ok = kernel_row_passes(k, tol);
        out.pass = out.pass && ok;
        rj.push_back({{"gamma", k.row.gamma}, {"mu_w", k.row.mu}, {"q1", num(k.row.q1)}, {"q2", num(k.row.q2)}, {"N", k.row.N},
                      {"predicted_slope", num(k.predicted)}, {"fitted_slope", num(k.fitted)},
                      {"max_ratio_deviation", num(k.max_ratio_deviation)}, {"pass", ok}});
    }
    json tj = json::array();
    if (j.contains("translation")) {
        for (std::size_t i = 0; i < j.at("translation").size(); ++i) {
            const json& t = j.at("translation")[i];
            const std::string path = "translation[" + std::to_string(i) + "]";
            const KernelRow row = kernel_row_from_json(t, path, {"tau_min", "tau_max", "tau_points", "fit_from"});
            const auto taus = geometric_grid(cfg::real(t, path, "tau_min", 1.0), cfg::real(t, path, "tau_max", 256.0),
                                             cfg::integer(t, path, "tau_points", 17));
            const auto tr = translation_necessity_experiment(row, taus, cfg::real(t, path, "fit_from", 8.0));
            out.pass = out.pass && tr.pass;
            out.translations.emplace_back(row, tr);
            tj.push_back({{"gamma", row.gamma}, {"mu_w", row.mu}, {"q1", num(row.q1)}, {"q2", num(row.q2)}, {"N", row.N},
                          {"expected_slope", num(tr.expected_slope)}, {"fitted_slope", num(tr.fitted_slope)},
                          {"growth", num(tr.growth)}, {"bounded", tr.bounded}, {"pass", tr.pass}});
        }
    }
    out.summary = {{"rows", rj}, {"translation", tj}, {"pass", out.pass}};
    return out;
}

inline void write_kernel_csv(std::ostream& os, const KernelCheckResult& r) {
    os << "gamma,mu_w,q1,q2,predicted_slope,fitted_slope,max_ratio_deviation\n";
    for (const auto& k : r.rows)
        os << fmt(k.row.gamma) << ',' << fmt(k.row.mu) << ',' << fmt(k.row.q1) << ',' << fmt(k.row.q2) << ','
           << fmt(k.predicted) << ',' << fmt(k.fitted) << ',' << fmt(k.max_ratio_deviation) << '\n';
}

// ---------- scaling checks ----------

struct ScalingCheckResult {
    json report;
    bool pass = true;
};

inline ScalingCheckResult run_scaling_checks(const json& j, int workers = 1, std::uint64_t seed = 0) {
    cfg::keys(j, "config", {"problem", "grid", "solver", "homogeneous", "monotonicity", "limits", "formula", "noise_study"});
    const ProblemSpec s = problem_from_json(j.at("problem"));
    const GridPolicy pol = j.contains("grid") ? grid_policy_from_json(j.at("grid")) : GridPolicy{};
    const SolverOptions so = j.contains("solver") ? solver_options_from_json(j.at("solver")) : SolverOptions{};
    auto solve = [&](const Profile& p) {
        const RowResult r = run_row(p, s, pol, so, false);
        if (!r.error.empty()) fail(ErrorKind::ConfigInvalid, "solver run failed: " + r.error);
        return r.T_num;
    };
    auto solve_many = [&](const Profile& base, const std::vector<double>& lambdas) {
        std::vector<double> T(lambdas.size());
        parallel_for(lambdas.size(), workers, [&](std::size_t i) { T[i] = solve(base.scaled(lambdas[i])); });
        return T;
    };
    ScalingCheckResult out;
    json& rep = out.report;
    if (j.contains("formula")) {
        const json& f = j.at("formula");
        cfg::keys(f, "formula", {"datum", "lambdas", "tolerance"});
        const Profile p = profile_from_json(f.at("datum"), 1.0, "formula.datum");
        const double tol = cfg::real(f, "formula", "tolerance", 1e-12);
        const auto lambdas = cfg::reals(f, "formula", "lambdas");
        json entries = json::array();
        bool ok = true;
        const BoundReport base = bound_report(p, s);
        for (const auto& b0 : base.lower) {
            double lo = kInf, hi = 0.0;
            for (double l : lambdas) {
                const BoundReport r = bound_report(p.scaled(l), s);
                for (const auto& b : r.lower)
                    if (b.name == b0.name && b.exponent == b0.exponent) {
                        const double v = std::pow(l, b.exponent) * b.T;
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                        break;
                    }
            }
            const double spread = (hi - lo) / lo;
            ok = ok && spread <= tol;
            entries.push_back({{"name", b0.name}, {"exponent", num(b0.exponent)}, {"spread", num(spread)}});
        }
        rep["formula"] = {{"bounds", entries}, {"pass", ok}};
        out.pass = out.pass && ok;
    }
    if (j.contains("homogeneous")) {
        const json& h = j.at("homogeneous");
        cfg::keys(h, "homogeneous", {"datum", "lambdas", "tolerance"});
        const Profile p = profile_from_json(h.at("datum"), 1.0, "homogeneous.datum");
        const auto lambdas = cfg::reals(h, "homogeneous", "lambdas");
        const auto T = solve_many(p, lambdas);
        std::size_t k = 0;
        const auto r = homogeneous_identity_check(p, lambdas, s.alpha, [&](const Profile&) { return T[k++]; });
        const bool ok = r.spread <= cfg::real(h, "homogeneous", "tolerance", 0.1);
        json vals = json::array();
        for (std::size_t i = 0; i < r.lambdas.size(); ++i) vals.push_back({{"lambda", r.lambdas[i]}, {"scaled_T", num(r.scaled[i])}});
        rep["homogeneous"] = {{"values", vals}, {"spread", num(r.spread)}, {"pass", ok}};
        out.pass = out.pass && ok;
    }
    if (j.contains("monotonicity")) {
        json arr = json::array();
        for (std::size_t i = 0; i < j.at("monotonicity").size(); ++i) {
            const json& m = j.at("monotonicity")[i];
            const std::string path = "monotonicity[" + std::to_string(i) + "]";
            cfg::keys(m, path, {"datum", "gamma_w", "mus", "radii"});
            const Profile p = profile_from_json(m.at("datum"), 1.0, path + ".datum");
            std::vector<Point> pts;
            for (double r : cfg::reals(m, path, "radii")) pts.push_back(Point{r, 0.0, 0.0});
            const auto r = monotonicity_check(p, cfg::real(m, path, "gamma_w"), cfg::reals(m, path, "mus"), pts, s.N);
            arr.push_back({{"datum", profile_kind(p)},
                           {"trend", r.trend == Trend::nonincreasing ? "nonincreasing" : "nondecreasing"},
                           {"worst_violation", num(r.worst_violation)},
                           {"pass", r.pass}});
            out.pass = out.pass && r.pass;
        }
        rep["monotonicity"] = arr;
    }
    if (j.contains("limits")) {
        json arr = json::array();
        for (std::size_t i = 0; i < j.at("limits").size(); ++i) {
            const json& m = j.at("limits")[i];
            const std::string path = "limits[" + std::to_string(i) + "]";
            cfg::keys(m, path, {"datum", "gamma_e", "direction", "lambdas", "growth_factor", "tolerance"});
            const Profile p = profile_from_json(m.at("datum"), 1.0, path + ".datum");
            const double ge = cfg::real(m, path, "gamma_e");
            const std::string dir = cfg::text(m, path, "direction");
            if (dir != "to_zero" && dir != "to_infinity") fail(ErrorKind::ConfigInvalid, path + ".direction: unknown");
            const auto lambdas = cfg::reals(m, path, "lambdas");
            const auto T = solve_many(p, lambdas);
            double limit_T = 0.0, family_T = 0.0;
            const auto trend = expected_trend(p, ge);
            const bool divergent = (dir == "to_infinity") == (trend == Trend::nondecreasing);
            if (!divergent) {
                const auto omega = std::visit(
                    [](const auto& sh) -> AngularPart {
                        if constexpr (requires { sh.omega; }) return sh.omega;
                        else return AngularPart::one();
                    },
                    p.shape);
                limit_T = solve(Profile{SingularPower{ge, omega, 1.0}, 1.0});
                family_T = solve(p);
            }
            std::map<double, double> table;
            for (std::size_t k = 0; k < lambdas.size(); ++k) table[lambdas[k]] = T[k];
            const auto r = limit_structure_check(
                p, ge, dir == "to_zero" ? LambdaDirection::to_zero : LambdaDirection::to_infinity, s.alpha, lambdas,
                [&](const Profile& q) { return table.at(q.lambda); }, limit_T, family_T,
                cfg::real(m, path, "growth_factor", 10.0), cfg::real(m, path, "tolerance", 0.05));
            json vals = json::array();
            for (std::size_t k = 0; k < r.lambdas.size(); ++k) vals.push_back({{"lambda", r.lambdas[k]}, {"scaled_T", num(r.scaled[k])}});
            arr.push_back({{"datum", profile_kind(p)},
                           {"direction", dir},
                           {"divergent_branch", r.divergent_branch},
                           {"values", vals},
                           {"growth", num(r.growth)},
                           {"monotone", r.monotone},
                           {"bracketed", r.bracketed},
                           {"limit_T", num(limit_T)},
                           {"family_T", num(family_T)},
                           {"pass", r.pass}});
            out.pass = out.pass && r.pass;
        }
        rep["limits"] = arr;
    }
    if (j.contains("noise_study")) {
        const json& n = j.at("noise_study");
        cfg::keys(n, "noise_study", {"slope", "noise", "points", "lambda_min", "lambda_max", "tolerance"});
        const double slope = cfg::real(n, "noise_study", "slope", -4.0 / 3.0);
        const double noise = cfg::real(n, "noise_study", "noise", 0.05);
        const auto lambdas = geometric_grid(cfg::real(n, "noise_study", "lambda_min", 1.0),
                                            cfg::real(n, "noise_study", "lambda_max", 100.0),
                                            cfg::integer(n, "noise_study", "points", 9));
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-noise, noise);
        std::vector<std::pair<double, double>> pts;
        for (double l : lambdas) pts.emplace_back(l, std::pow(l, slope) * (1.0 + u(rng)));
        const auto fit = exponent_fit(pts);
        const bool ok = std::abs(fit.slope - slope) <= cfg::real(n, "noise_study", "tolerance", 0.1);
        rep["noise_study"] = {{"seed", seed}, {"slope", num(fit.slope)}, {"target", num(slope)}, {"pass", ok}};
        out.pass = out.pass && ok;
    }
    rep["pass"] = out.pass;
    return out;
}

} // namespace lifespan
