#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "field.hpp"
#include "profiles.hpp"
#include "semigroup.hpp"

namespace lifespan {

struct EvolveConfig {
    double dt_initial = 1e-3;
    double dt_min = 0.0;  // raised to the grid resolution floor
    double blowup_threshold = 1e6;
    double horizon = 10.0;
    int norm_record_stride = 1;
    double history_q = 2.0;
    double history_gamma = 0.5;
    double boundary_tolerance = 1e-3;

    void validate() const {
        if (!(dt_initial > 0.0) || dt_min < 0.0 || dt_min > dt_initial)
            fail(ErrorKind::ConfigInvalid, "need 0 <= dt_min <= dt_initial and dt_initial > 0");
        if (!(blowup_threshold > 1.0)) fail(ErrorKind::ConfigInvalid, "blowup_threshold must exceed 1");
        if (!(horizon > 0.0)) fail(ErrorKind::ConfigInvalid, "horizon must be positive");
        if (norm_record_stride < 1) fail(ErrorKind::ConfigInvalid, "norm_record_stride must be >= 1");
    }
};

struct HistoryRow {
    double t = 0.0;
    double sup_norm = 0.0;
    double l1_norm = 0.0;
    double lq_norm = 0.0;
    double weighted_norm = 0.0;
    double dt = 0.0;
    double rate = 0.0;  // sup |x|^l |u|^alpha
};

enum class BlowupStatus { blowup, no_blowup_within_horizon };

struct BlowupEstimate {
    BlowupStatus status = BlowupStatus::no_blowup_within_horizon;
    double T_est = kInf;
    double T_lo = 0.0;
    double T_hi = kInf;
    std::vector<HistoryRow> history;
    std::optional<double> in_step_blowup;
    int steps = 0;
    int rejected = 0;
};

struct NonlinearResult {
    std::optional<Field> field;
    double crossing = kInf;  // time after the substep start at which the fastest cell blows up
};

inline std::vector<double> nonlinear_weights(const Grid& g, double l) {
    if (l == 0.0) return std::vector<double>(g.size(), 1.0);
    return power_weights(g, l);
}

inline NonlinearResult nonlinear_substep(const Field& f, double dt, double alpha, const std::vector<double>& w) {
    if (!(dt > 0.0)) fail(ErrorKind::InvalidArgument, "dt must be positive");
    NonlinearResult out;
    double rate = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) rate = std::max(rate, w[i] * std::pow(std::abs(f.values[i]), alpha));
    if (rate > 0.0 && alpha * rate * dt >= 1.0) {
        out.crossing = 1.0 / (alpha * rate);
        return out;
    }
    Field g = f;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const double v = g.values[i];
        if (v == 0.0) continue;
        const double d = 1.0 - alpha * w[i] * std::pow(std::abs(v), alpha) * dt;
        g.values[i] = v * std::pow(d, -1.0 / alpha);
    }
    out.field = std::move(g);
    return out;
}

inline NonlinearResult nonlinear_substep(const Field& f, double dt, double alpha, double l) {
    return nonlinear_substep(f, dt, alpha, nonlinear_weights(f.grid, l));
}

struct TimeEstimate {
    double T_est = 0.0;
    double T_lo = 0.0;
    double T_hi = 0.0;
};

// Type-I ansatz ||u(t)||_inf ~ (alpha (T - t))^{-1/alpha}: T_k = t_k + 1/(alpha rate_k), extrapolated to rate -> inf.
inline TimeEstimate estimate_blowup_time(const std::vector<HistoryRow>& h, double alpha,
                                         std::optional<double> extra_estimate = std::nullopt) {
    if (h.size() < 3) fail(ErrorKind::InsufficientHistory, "need at least 3 history points");
    for (std::size_t i = 1; i < h.size(); ++i)
        if (!(h[i].t > h[i - 1].t)) fail(ErrorKind::InsufficientHistory, "history times must increase");
    std::vector<double> Tk, dk;
    for (const auto& row : h) {
        const double rate = row.rate > 0.0 ? row.rate : std::pow(row.sup_norm, alpha);
        const double d = 1.0 / (alpha * rate);
        Tk.push_back(row.t + d);
        dk.push_back(d);
    }
    double max_T = *std::max_element(Tk.begin(), Tk.end());
    if (extra_estimate) max_T = std::max(max_T, *extra_estimate);
    const std::size_t k = std::min<std::size_t>(5, Tk.size());
    const std::size_t s = Tk.size() - k;
    double md = 0.0, mT = 0.0;
    for (std::size_t i = s; i < Tk.size(); ++i) { md += dk[i]; mT += Tk[i]; }
    md /= k;
    mT /= k;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = s; i < Tk.size(); ++i) {
        sxx += (dk[i] - md) * (dk[i] - md);
        sxy += (dk[i] - md) * (Tk[i] - mT);
    }
    const double fit = sxx > 1e-30 * (1.0 + md * md) ? mT - (sxy / sxx) * md : mT;
    const double last_dt = h.back().dt > 0.0 ? h.back().dt : h.back().t - h[h.size() - 2].t;
    TimeEstimate e;
    e.T_lo = h.back().t;
    e.T_hi = max_T + last_dt;
    e.T_est = std::clamp(fit, max_T, e.T_hi);
    return e;
}

namespace detail {

inline double boundary_rate(const Field& f, const std::vector<double>& w, double alpha) {
    const Grid& g = f.grid;
    double best = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto idx = g.index(i);
        bool edge = false;
        for (int a = 0; a < g.dim; ++a) edge = edge || idx[a] == 0 || idx[a] == g.n - 1;
        if (edge) best = std::max(best, w[i] * std::pow(std::abs(f.values[i]), alpha));
    }
    return best;
}

inline HistoryRow record(const Field& u, double t, double dt, const EvolveConfig& c, const std::vector<double>& w,
                         double alpha) {
    HistoryRow r;
    r.t = t;
    r.dt = dt;
    r.sup_norm = u.max_abs();
    r.l1_norm = norm(u, NormSpec{1.0, 0.0});
    r.lq_norm = norm(u, NormSpec{c.history_q, 0.0});
    r.weighted_norm = norm(u, NormSpec{kInf, c.history_gamma});
    for (std::size_t i = 0; i < u.values.size(); ++i) r.rate = std::max(r.rate, w[i] * std::pow(std::abs(u.values[i]), alpha));
    return r;
}

} // namespace detail

inline BlowupEstimate evolve(const Field& u0, const ProblemSpec& s, const EvolveConfig& c) {
    s.validate();
    c.validate();
    const Grid& g = u0.grid;
    if (g.dim != s.N) fail(ErrorKind::InvalidArgument, "grid dimension differs from N");
    const int m = u0.antisymmetry_axes;
    const double a = s.alpha;
    const auto w = nonlinear_weights(g, s.l);
    if (s.l > 0.0 && a * detail::boundary_rate(u0, w, a) * c.horizon >= c.boundary_tolerance)
        fail(ErrorKind::ConfigInvalid, "boundary dominance check failed: enlarge the box");
    const double floor_t = std::max(c.dt_min, resolution_floor(g));
    auto heat = [&](const Field& f, double t) { return m > 0 ? sector_heat_step(f, t, m) : heat_step(f, t); };

    BlowupEstimate out;
    Field u = u0;
    double t = 0.0;
    double dt = std::max(c.dt_initial, floor_t);
    out.history.push_back(detail::record(u, t, 0.0, c, w, a));
    double sup_ref = std::max(out.history.back().sup_norm, 1e-300);
    while (t < c.horizon) {
        const double rate = out.history.back().rate;
        if (rate > 0.0) dt = std::min(dt, 0.1 / (a * rate));
        dt = std::max(dt, floor_t);
        const bool last = t + dt >= c.horizon;
        if (last) dt = c.horizon - t;
        if (dt < resolution_floor(g)) break;
        const double sup_old = u.max_abs();
        auto first = nonlinear_substep(u, 0.5 * dt, a, w);
        if (!first.field) {
            out.in_step_blowup = t + first.crossing;
            break;
        }
        Field v = heat(*first.field, dt);
        auto second = nonlinear_substep(v, 0.5 * dt, a, w);
        if (!second.field) {
            out.in_step_blowup = t + 0.5 * dt + second.crossing;
            break;
        }
        const double growth = second.field->max_abs() / std::max(sup_old, 1e-300) - 1.0;
        if (growth > 0.1 && dt > floor_t * (1.0 + 1e-12) && !last) {
            dt = std::max(0.5 * dt, floor_t);
            ++out.rejected;
            continue;
        }
        u = std::move(*second.field);
        t = last ? c.horizon : t + dt;
        ++out.steps;
        if (out.steps % c.norm_record_stride == 0 || last) out.history.push_back(detail::record(u, t, dt, c, w, a));
        sup_ref = std::min(sup_ref, u.max_abs());
        if (u.max_abs() >= c.blowup_threshold * sup_ref) break;
        if (growth < 0.02) dt *= 1.5;
    }
    if (out.in_step_blowup || u.max_abs() >= c.blowup_threshold * sup_ref) {
        out.status = BlowupStatus::blowup;
        if (out.history.size() >= 3) {
            const auto e = estimate_blowup_time(out.history, a, out.in_step_blowup);
            out.T_est = e.T_est;
            out.T_lo = e.T_lo;
            out.T_hi = e.T_hi;
        } else {
            out.T_lo = t;
            out.T_est = out.in_step_blowup.value_or(t);
            out.T_hi = out.T_est + dt;
        }
    } else {
        out.status = BlowupStatus::no_blowup_within_horizon;
        out.T_lo = t;
        out.T_est = kInf;
        out.T_hi = kInf;
    }
    return out;
}

inline BlowupEstimate evolve(const Profile& p, const ProblemSpec& s, const Grid& g, const EvolveConfig& c) {
    return evolve(sample_profile(p, g), s, c);
}

struct PicardConfig {
    double T = 0.1;
    double M = 1.0;
    double K = 0.0;  // 0: measured from the free evolution
    int max_iterations = 60;
    double tolerance = 1e-10;
    double q = kInf;
    int time_steps = 64;
};

struct PicardResult {
    bool converged = false;
    int iterations = 0;
    bool condition_satisfied = false;
    double condition_lhs = 0.0;
    double contraction_factor = 0.0;
    std::vector<double> times;
    std::vector<Field> trajectory;
    std::vector<double> distances;
};

inline PicardResult picard_solve(const Field& u0, const ProblemSpec& s, const PicardConfig& c) {
    s.validate();
    const Grid& g = u0.grid;
    const double a = s.alpha;
    const double r = choose_r(a, c.q);
    const double beta = 0.5 * s.N * (inv(c.q) - inv(r));
    const int J = c.time_steps;
    const double dt = c.T / J;
    if (dt < resolution_floor(g)) fail(ErrorKind::KernelUnderresolved, "Picard time step below the grid resolution floor");
    const auto w = nonlinear_weights(g, s.l);

    PicardResult out;
    std::vector<Field> free{u0};
    for (int j = 1; j <= J; ++j) free.push_back(heat_step(free.back(), dt));
    for (int j = 0; j <= J; ++j) out.times.push_back(j * dt);

    double K = c.K;
    if (!(K > 0.0))
        for (int j = 1; j <= J; ++j) K = std::max(K, std::pow(out.times[j], beta) * norm(free[j], NormSpec{r, 0.0}));
    const double C = contraction_constant(a, c.q, r, s.N);
    out.condition_lhs = K + C * std::pow(c.T, 1.0 - 0.5 * s.N * a * inv(c.q)) * std::pow(c.M, a + 1.0);
    out.condition_satisfied = out.condition_lhs <= c.M;

    auto source = [&](const Field& u) {
        Field f = u;
        for (std::size_t i = 0; i < f.values.size(); ++i)
            f.values[i] = w[i] * std::pow(std::abs(u.values[i]), a) * u.values[i];
        return f;
    };
    std::vector<Field> cur = free;
    int growth_run = 0;
    for (int it = 1; it <= c.max_iterations; ++it) {
        std::vector<Field> next{u0};
        Field duhamel(g, 0.0, u0.antisymmetry_axes);
        Field prev_src = source(cur[0]);
        for (int j = 1; j <= J; ++j) {
            const Field src = source(cur[j]);
            Field carried = heat_step(duhamel, dt);
            const Field moved = heat_step(prev_src, dt);
            for (std::size_t i = 0; i < carried.values.size(); ++i)
                carried.values[i] += 0.5 * dt * (moved.values[i] + src.values[i]);
            duhamel = std::move(carried);
            Field uj = free[j];
            for (std::size_t i = 0; i < uj.values.size(); ++i) uj.values[i] += duhamel.values[i];
            next.push_back(std::move(uj));
            prev_src = src;
        }
        double d = 0.0;
        for (int j = 1; j <= J; ++j) {
            Field diff = next[j];
            for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= cur[j].values[i];
            d = std::max(d, std::pow(out.times[j], beta) * norm(diff, NormSpec{r, 0.0}));
        }
        out.distances.push_back(d);
        out.iterations = it;
        cur = std::move(next);
        const std::size_t n = out.distances.size();
        if (n >= 2 && out.distances[n - 2] > 0.0) out.contraction_factor = d / out.distances[n - 2];
        if (d <= c.tolerance) {
            out.converged = true;
            break;
        }
        growth_run = (n >= 2 && d > out.distances[n - 2]) ? growth_run + 1 : 0;
        if (growth_run >= 3) {
            out.trajectory = std::move(cur);
            fail(ErrorKind::NotContracting, "Picard distances grew for 3 iterations");
        }
    }
    out.trajectory = std::move(cur);
    return out;
}

struct NecessaryCheck {
    bool pass = true;
    double max_ratio = 0.0;
};

inline NecessaryCheck check_necessary_condition(const Profile& p, const std::vector<double>& times, const ProblemSpec& s,
                                                const Grid& g, double eps = 1e-3) {
    const int m = antisymmetry_of(p);
    if (m == 0 && !is_nonnegative(p)) fail(ErrorKind::NegativeData, "datum takes negative values");
    const Field u0 = sample_profile(p, g);
    NecessaryCheck out;
    for (double t : times) {
        if (t < resolution_floor(g)) continue;
        const Field w = m > 0 ? sector_heat_step(u0, t, m) : heat_step(u0, t);
        out.max_ratio = std::max(out.max_ratio, s.alpha * t * std::pow(w.max_abs(), s.alpha));
    }
    out.pass = out.max_ratio <= 1.0 + eps;
    return out;
}

} // namespace lifespan
