#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "operators.hpp"
#include "profiles.hpp"
#include "semigroup.hpp"

namespace lifespan {

struct ProblemSpec {
    int N = 1;
    double alpha = 1.0;
    double l = 0.0;
    int m = 0;

    void validate() const {
        if (N < 1) fail(ErrorKind::InvalidArgument, "N must be >= 1");
        if (!(alpha > 0.0)) fail(ErrorKind::InvalidArgument, "alpha must be positive");
        if (!(l > -std::min(2.0, double(N)))) fail(ErrorKind::InvalidArgument, "l must exceed -min(2, N)");
        if (m < 0 || m > N) fail(ErrorKind::InvalidArgument, "sector index must satisfy 0 <= m <= N");
    }
};

struct CriticalExponents {
    std::optional<double> q_c, q_c_gamma, q_c_l, q_c_gamma_l, q_F;
    std::vector<std::pair<std::string, std::string>> absent;
};

inline CriticalExponents critical_exponents(const ProblemSpec& s, double gamma = 0.0) {
    s.validate();
    CriticalExponents c;
    const double na = s.N * s.alpha;
    c.q_c = na / 2.0;
    if (gamma * s.alpha < 2.0) c.q_c_gamma = na / (2.0 - gamma * s.alpha);
    else c.absent.emplace_back("q_c_gamma", "requires gamma*alpha < 2");
    c.q_c_l = na / (2.0 + s.l);
    if (2.0 + s.l - gamma * s.alpha > 0.0) c.q_c_gamma_l = na / (2.0 + s.l - gamma * s.alpha);
    else c.absent.emplace_back("q_c_gamma_l", "requires 2 + l - gamma*alpha > 0");
    c.q_F = na / (2.0 + s.l);
    return c;
}

inline double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

inline double choose_r(double alpha, double q) { return q < alpha + 1.0 ? q * (alpha + 1.0) : q; }

inline double contraction_constant(double alpha, double q, double r, int N) {
    if (!(1.0 - N * alpha * inv(q) / 2.0 > 0.0))
        fail(ErrorKind::IntegralDiverges, "1 - N alpha / 2q must be positive");
    const double beta = 0.5 * N * (inv(q) - inv(r));
    const double a = 1.0 - 0.5 * N * alpha * inv(r);
    const double b = 1.0 - beta * (alpha + 1.0);
    if (!(a > 0.0) || !(b > 0.0)) fail(ErrorKind::IntegralDiverges, "Beta integral exponent reaches 1");
    return 2.0 * (alpha + 1.0) * std::pow(4.0 * std::numbers::pi, -0.5 * N * alpha * inv(r)) * std::exp(log_beta(a, b));
}

struct LowerBound {
    std::string name;
    double T = 0.0;
    double exponent = 0.0;  // T = constant * lambda^{-exponent}
    double constant = 0.0;
    std::string provenance;
};

namespace detail {

inline LowerBound power_bound(std::string name, double lambda, double norm, double prefactor, double alpha, double p,
                              std::string provenance) {
    const double e = alpha / p;
    LowerBound b{std::move(name), kInf, e, kInf, std::move(provenance)};
    if (norm > 0.0) b.constant = std::pow(prefactor * std::pow(norm, alpha), -1.0 / p);
    if (lambda > 0.0 && norm > 0.0) b.T = b.constant * std::pow(lambda, -e);
    return b;
}

inline void require_plain(const ProblemSpec& s, const char* what) {
    s.validate();
    if (s.l != 0.0 || s.m != 0) fail(ErrorKind::HypothesisViolated, std::string(what) + " needs l = 0 and m = 0");
}

} // namespace detail

inline double lebesgue_exponent(double alpha, int N, double q) { return 1.0 / (1.0 / alpha - 0.5 * N * inv(q)); }

inline LowerBound lower_bound_lebesgue(double lambda, double norm_q, const ProblemSpec& s, double q) {
    detail::require_plain(s, "lower_bound_lebesgue");
    if (!(q >= 1.0)) fail(ErrorKind::InvalidArgument, "q must be >= 1");
    if (!(q > 0.5 * s.N * s.alpha)) fail(ErrorKind::CriticalOrSubcritical, "q <= q_c");
    const double r = choose_r(s.alpha, q);
    const double beta = 0.5 * s.N * (inv(q) - inv(r));
    const double C = contraction_constant(s.alpha, q, r, s.N);
    const double pre = std::pow(2.0, s.alpha + 1.0) * std::pow(4.0 * std::numbers::pi, s.alpha * beta) * C;
    return detail::power_bound("lebesgue", lambda, norm_q, pre, s.alpha, 1.0 - 0.5 * s.N * s.alpha * inv(q), "analytic");
}

inline LowerBound lower_bound_measure(double lambda, double mass, const ProblemSpec& s) {
    detail::require_plain(s, "lower_bound_measure");
    if (!(s.alpha < 2.0 / s.N)) fail(ErrorKind::SupercriticalForMeasures, "needs alpha < 2/N");
    const double r = s.alpha + 1.0;
    const double beta = 0.5 * s.N * (1.0 - 1.0 / r);
    const double C = contraction_constant(s.alpha, 1.0, r, s.N);
    const double pre = std::pow(2.0, s.alpha + 1.0) * std::pow(4.0 * std::numbers::pi, s.alpha * beta) * C;
    return detail::power_bound("measure", lambda, mass, pre, s.alpha, 1.0 - 0.5 * s.N * s.alpha, "analytic");
}

namespace detail {

// L^q_gamma existence argument with nu(alpha+1) - l = gamma and r = (alpha+1) q.
inline LowerBound weighted_core(std::string name, double lambda, double norm, const ProblemSpec& s, double q, double gamma) {
    const double a = s.alpha;
    const double r = (a + 1.0) * q;
    const double nu = (gamma + s.l) / (a + 1.0);
    const double p = 1.0 - 0.5 * s.N * a * inv(q) - 0.5 * gamma * a + 0.5 * s.l;
    const double a1 = 1.0 - 0.5 * s.N * a * inv(r) - 0.5 * (nu * a - s.l);
    if (!(p > 0.0) || !(a1 > 0.0)) fail(ErrorKind::IntegralDiverges, "weighted Beta integral diverges");
    const auto c0 = smoothing_constant(s.N, gamma, gamma, q, q);
    const auto c1 = smoothing_constant(s.N, nu, gamma, q, r);
    if (!std::isfinite(c0.value) || !std::isfinite(c1.value))
        fail(ErrorKind::HypothesisViolated, "weighted smoothing operator is unbounded for these weights");
    const double S = std::max(c1.value * std::exp(log_beta(a1, p)), c0.value / p);
    const double Cw = 2.0 * (a + 1.0) * S;
    const double CK = std::max(c0.value, c1.value);
    const double pre = std::pow(2.0, a + 1.0) * Cw * std::pow(CK, a);
    return power_bound(std::move(name), lambda, norm, pre, a, p, "numeric-quadrature");
}

} // namespace detail

inline LowerBound lower_bound_weighted(double lambda, double norm_q_gamma, const ProblemSpec& s, double q, double gamma) {
    detail::require_plain(s, "lower_bound_weighted");
    std::string failed;
    if (!(gamma > 0.0 && gamma < s.N)) failed += "0 < gamma < N; ";
    if (!(gamma < 2.0 / s.alpha)) failed += "gamma < 2/alpha; ";
    if (!(inv(q) + gamma / s.N < 1.0)) failed += "1/q + gamma/N < 1; ";
    if (!(0.5 * s.N * s.alpha * inv(q) + 0.5 * s.alpha * gamma < 1.0)) failed += "N alpha/2q + alpha gamma/2 < 1; ";
    if (!failed.empty()) fail(ErrorKind::HypothesisViolated, failed);
    return detail::weighted_core("weighted", lambda, norm_q_gamma, s, q, gamma);
}

inline LowerBound lower_bound_singular(double lambda, double L_r, const ProblemSpec& s, double gamma) {
    detail::require_plain(s, "lower_bound_singular");
    if (!(gamma > 0.0 && gamma < s.N)) fail(ErrorKind::HypothesisViolated, "0 < gamma < N");
    if (!(gamma < 2.0 / s.alpha)) fail(ErrorKind::HypothesisViolated, "gamma < 2/alpha");
    const double q = s.N / gamma;
    const double r = q * (s.alpha + 1.0);
    const double C = contraction_constant(s.alpha, q, r, s.N);
    const double pre = std::pow(2.0, s.alpha + 1.0) * C;
    return detail::power_bound("singular", lambda, L_r, pre, s.alpha, 1.0 - 0.5 * gamma * s.alpha, "numeric-quadrature");
}

// r used with the singular bound: L_r = ||e^{Delta}|.|^{-gamma}||_r.
inline double singular_r(const ProblemSpec& s, double gamma) { return s.N * (s.alpha + 1.0) / gamma; }

struct CombinedNorms {
    double weighted = kInf;  // ||phi||_{L^q_gamma}
    double lebesgue = kInf;  // ||phi||_{L^p}
};

inline LowerBound lower_bound_combined(double lambda, const CombinedNorms& n, const ProblemSpec& s, double q, double p,
                                       double gamma) {
    detail::require_plain(s, "lower_bound_combined");
    std::optional<LowerBound> best;
    std::string why;
    auto consider = [&](auto&& make) {
        try {
            LowerBound b = make();
            if (!best || b.T > best->T) best = b;
        } catch (const Error& e) {
            why += e.what();
            why += "; ";
        }
    };
    if (std::isfinite(n.weighted)) consider([&] { return lower_bound_weighted(lambda, n.weighted, s, q, gamma); });
    if (std::isfinite(n.lebesgue)) consider([&] { return lower_bound_lebesgue(lambda, n.lebesgue, s, p); });
    if (!best) fail(ErrorKind::HypothesisViolated, "no component bound applies: " + why);
    const double sw = inv(q) + gamma / s.N;
    const double sp = inv(p);
    const double sel = lambda <= 1.0 ? std::max(sw, sp) : std::min(sw, sp);
    best->name = "combined";
    best->exponent = 1.0 / (1.0 / s.alpha - 0.5 * s.N * sel);
    best->constant = best->T * std::pow(lambda, best->exponent);
    return *best;
}

inline LowerBound lower_bound_hardy_henon(double lambda, double norm, const ProblemSpec& s, double q, double gamma) {
    s.validate();
    if (s.m != 0) fail(ErrorKind::HypothesisViolated, "sector data are not covered");
    const double a = s.alpha;
    const int N = s.N;
    if (s.l < 0.0) {
        if (gamma != 0.0) fail(ErrorKind::HypothesisViolated, "Hardy case works in unweighted L^q (gamma = 0)");
        if (!(q > 1.0)) fail(ErrorKind::HypothesisViolated, "q > 1");
        if (!(q > N * a / (2.0 + s.l))) fail(ErrorKind::HypothesisViolated, "q > q_c(l)");
        const double p = 1.0 + 0.5 * s.l - 0.5 * N * a * inv(q);
        if (std::isinf(q)) {
            const auto ch = smoothing_constant(N, 0.0, -s.l, kInf, kInf);
            const double C = 2.0 * (a + 1.0) * ch.value / (1.0 + 0.5 * s.l);
            return detail::power_bound("hardy", lambda, norm, std::pow(2.0, a + 1.0) * C, a, p, "numeric-quadrature");
        }
        const double lo = std::max(0.0, 1.0 / (q * (a + 1.0)) + s.l / (N * (a + 1.0)));
        const double hi = std::min((N + s.l) / (N * (a + 1.0)), 1.0 / q);
        if (!(hi > lo)) fail(ErrorKind::HypothesisViolated, "no admissible auxiliary exponent r");
        const double r = 2.0 / (lo + hi);
        const double beta = 0.5 * N * (1.0 / q - 1.0 / r);
        const double b = 1.0 - beta * (a + 1.0);
        const double ar = 1.0 - 0.5 * N * a / r + 0.5 * s.l;
        const double aq = 1.0 - 0.5 * N * ((a + 1.0) / r - 1.0 / q) + 0.5 * s.l;
        if (!(b > 0.0 && ar > 0.0 && aq > 0.0)) fail(ErrorKind::IntegralDiverges, "Hardy Beta integral diverges");
        const auto cr = smoothing_constant(N, 0.0, -s.l, r / (a + 1.0), r);
        const auto cq = smoothing_constant(N, 0.0, -s.l, r / (a + 1.0), q);
        const double S = std::max(cr.value * std::exp(log_beta(ar, b)), cq.value * std::exp(log_beta(aq, b)));
        const double C = 2.0 * (a + 1.0) * S;
        return detail::power_bound("hardy", lambda, norm, std::pow(2.0, a + 1.0) * C, a, p, "numeric-quadrature");
    }
    if (s.l == 0.0) fail(ErrorKind::HypothesisViolated, "l = 0: use the plain bounds");
    const double g0 = s.l / a;
    std::string failed;
    if (!(s.l < N * a)) failed += "l < N alpha; ";
    if (!(gamma > 0.0 && gamma < N)) failed += "0 < gamma < N; ";
    const bool henon = std::abs(gamma - g0) <= 1e-12 * std::max(1.0, g0);
    if (!henon && !(gamma > g0 && gamma < (2.0 + s.l) / a)) failed += "l/alpha <= gamma < (2+l)/alpha; ";
    if (!(inv(q) + gamma / N < 1.0)) failed += "q > N/(N-gamma); ";
    if (!(0.5 * N * a * inv(q) + 0.5 * gamma * a - 0.5 * s.l < 1.0)) failed += "q > q_c(gamma,l); ";
    if (henon && !(q > 0.5 * N * a)) failed += "q > q_c; ";
    if (!failed.empty()) fail(ErrorKind::HypothesisViolated, failed);
    return detail::weighted_core(henon ? "henon" : "henon_weighted", lambda, norm, s, q, henon ? g0 : gamma);
}

inline double sector_exponent(int m, double gamma, double alpha) {
    if (m < 0) fail(ErrorKind::HypothesisViolated, "m >= 0");
    if (!(alpha > 0.0 && alpha * (gamma + m) < 2.0)) fail(ErrorKind::HypothesisViolated, "0 < alpha < 2/(gamma+m)");
    return 1.0 / (1.0 / alpha - 0.5 * (gamma + m));
}

// Supersolution w(t)/(1 - alpha int_0^t ||w||^alpha)^{1/alpha} with ||e^{t Delta_m} psi|| <= L t^{-(gamma+m)/2}.
inline LowerBound lower_bound_sector(double lambda, double L_m, const ProblemSpec& s, double gamma) {
    s.validate();
    if (s.l != 0.0) fail(ErrorKind::HypothesisViolated, "sector bound needs l = 0");
    const double e = sector_exponent(s.m, gamma, s.alpha);
    const double a = 0.5 * s.alpha * (gamma + s.m);
    LowerBound b{"sector", kInf, e, kInf, "numeric-quadrature"};
    if (L_m > 0.0) b.constant = std::pow((1.0 - a) / (s.alpha * std::pow(L_m, s.alpha)), 1.0 / (1.0 - a));
    if (lambda > 0.0 && L_m > 0.0) b.T = b.constant * std::pow(lambda, -e);
    return b;
}

inline LowerBound diffusivity_bound(double mu, double norm_q, const ProblemSpec& s, double q) {
    if (!(mu > 0.0)) fail(ErrorKind::InvalidArgument, "diffusivity must be positive");
    LowerBound b = lower_bound_lebesgue(std::pow(mu, -1.0 / s.alpha), norm_q, s, q);
    b.name = "diffusivity";
    b.T /= mu;
    b.constant = b.T;
    b.exponent = lebesgue_exponent(s.alpha, s.N, q);
    return b;
}

enum class SemigroupRoute { analytic, discrete };

struct UpperBound {
    double T = kInf;
    double horizon = 0.0;
    int evaluations = 0;
};

// ||e^{t Delta} lambda phi||_inf in closed form where the catalogue allows it.
inline std::optional<double> analytic_heat_sup(const Profile& p, double t, int dim) {
    const double lam = std::abs(p.lambda);
    return std::visit(
        [&](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) return lam * std::abs(s.c);
            else if constexpr (std::is_same_v<T, BoundedBump>)
                return lam * std::abs(s.amplitude) * std::pow(s.width * s.width / (s.width * s.width + 4.0 * t), 0.5 * dim);
            else if constexpr (std::is_same_v<T, DiracApprox>)
                return lam * std::abs(s.mass) * std::pow(4.0 * std::numbers::pi * (s.width + t), -0.5 * dim);
            else if constexpr (std::is_same_v<T, SingularPower>)
                return lam * std::abs(s.c) * scaled_sup_constant(s.gamma, s.omega, dim).value * std::pow(t, -0.5 * s.gamma);
            else return std::nullopt;
        },
        p.shape);
}

namespace detail {

template <class F>
std::optional<UpperBound> necessary_search(F&& violation, double horizon, double floor_t) {
    UpperBound out;
    out.horizon = horizon;
    std::vector<double> ts;
    for (double t = horizon; t >= floor_t && ts.size() < 80; t *= 0.5) ts.push_back(t);
    if (ts.empty()) return std::nullopt;
    std::optional<std::size_t> smallest;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        ++out.evaluations;
        if (violation(ts[k])) smallest = k;
    }
    if (!smallest) return std::nullopt;
    double hi = ts[*smallest];
    if (*smallest + 1 < ts.size()) {
        double lo = ts[*smallest + 1];
        while ((hi - lo) > 1e-4 * hi) {
            const double mid = 0.5 * (lo + hi);
            ++out.evaluations;
            if (violation(mid)) hi = mid;
            else lo = mid;
        }
    }
    out.T = hi;
    return out;
}

} // namespace detail

inline std::optional<UpperBound> upper_bound_necessary(const Profile& p, const ProblemSpec& s, double horizon,
                                                       const std::optional<Grid>& grid,
                                                       SemigroupRoute route = SemigroupRoute::discrete) {
    s.validate();
    if (s.l != 0.0) fail(ErrorKind::HypothesisViolated, "necessary condition is implemented for l = 0");
    const int m = antisymmetry_of(p);
    if (m == 0 && !is_nonnegative(p)) fail(ErrorKind::NegativeData, "datum takes negative values");
    if (m > 0 && (p.lambda < 0.0 || std::get<SectorPsi0>(p.shape).c < 0.0))
        fail(ErrorKind::NegativeData, "sector datum must be positive on the sector");
    if (!(p.lambda > 0.0)) return std::nullopt;
    if (!(horizon > 0.0)) fail(ErrorKind::InvalidArgument, "horizon must be positive");
    const double a = s.alpha;
    if (route == SemigroupRoute::analytic && m == 0 && analytic_heat_sup(p, 1.0, s.N)) {
        auto viol = [&](double t) { return a * t * std::pow(*analytic_heat_sup(p, t, s.N), a) > 1.0; };
        return detail::necessary_search(viol, horizon, 0.0);
    }
    if (!grid) fail(ErrorKind::InvalidArgument, "a grid is required for the discrete route");
    if (grid->dim != s.N) fail(ErrorKind::InvalidArgument, "grid dimension differs from N");
    const Field u0 = sample_profile(p, *grid);
    auto viol = [&](double t) {
        const Field w = m > 0 ? sector_heat_step(u0, t, m) : heat_step(u0, t);
        return a * t * std::pow(w.max_abs(), a) > 1.0;
    };
    return detail::necessary_search(viol, horizon, resolution_floor(*grid));
}

enum class Direction { to_zero, to_infinity };

struct AsymptoticConstant {
    double constant = 0.0;  // limsup lambda^{exponent} T_max <= constant
    double exponent = 0.0;
    std::string regime;
};

inline AsymptoticConstant asymptotic_constants(const Profile& p, Direction dir, const ProblemSpec& s) {
    s.validate();
    if (s.l != 0.0) fail(ErrorKind::NoApplicableTheorem, "asymptotic constants are for l = 0");
    const double a = s.alpha;
    const int N = s.N;
    auto power_law = [&](double c, double L, double gamma, const char* name) -> AsymptoticConstant {
        if (!(gamma > 0.0 && gamma < N && gamma * a < 2.0))
            fail(ErrorKind::NoApplicableTheorem, "needs 0 < gamma < N and gamma < 2/alpha");
        const double e = 1.0 / (1.0 / a - 0.5 * gamma);
        return {std::pow(std::pow(a, 1.0 / a) * c * L, -e), e, name};
    };
    auto measure_law = [&](double mass) -> AsymptoticConstant {
        if (!(a < 2.0 / N)) fail(ErrorKind::NoApplicableTheorem, "needs alpha < 2/N");
        const double e = 1.0 / (1.0 / a - 0.5 * N);
        return {std::pow(std::pow(a, 1.0 / a) * std::pow(4.0 * std::numbers::pi, -0.5 * N) * mass, -e), e, "measure"};
    };
    auto bounded_law = [&](double sup) -> AsymptoticConstant { return {1.0 / (a * std::pow(sup, a)), a, "bounded"}; };
    const Profile unit{p.shape, 1.0};
    return std::visit(
        [&](const auto& sh) -> AsymptoticConstant {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, SectorPsi0>) {
                if (s.m != sh.m) fail(ErrorKind::InvalidArgument, "spec.m differs from the sector datum");
                if (dir == Direction::to_zero && std::isfinite(sh.cutoff))
                    fail(ErrorKind::NoApplicableTheorem, "compactly supported sector datum as lambda -> 0");
                const double e = sector_exponent(sh.m, sh.gamma, a);
                const double L = sector_sup_constant(sh.m, sh.gamma, sh.omega, N);
                return {std::pow(std::pow(a, 1.0 / a) * sh.c * L, -e), e, "sector"};
            } else {
                if (!is_nonnegative(unit)) fail(ErrorKind::NoApplicableTheorem, "datum must be nonnegative");
                if (dir == Direction::to_infinity) {
                    if constexpr (std::is_same_v<T, SingularPower> || std::is_same_v<T, TruncatedSingular>)
                        return power_law(sh.c, scaled_sup_constant(sh.gamma, sh.omega, N).value, sh.gamma, "singular_origin");
                    else if constexpr (std::is_same_v<T, TwoPower>)
                        return power_law(sh.c1, scaled_sup_constant(sh.gamma1, sh.omega, N).value, sh.gamma1, "singular_origin");
                    else return bounded_law(*analytic_norm(unit, NormSpec{kInf, 0.0}, N));
                } else {
                    if constexpr (std::is_same_v<T, SingularPower> || std::is_same_v<T, TailPower>)
                        return power_law(sh.c, scaled_sup_constant(sh.gamma, sh.omega, N).value, sh.gamma, "slow_decay");
                    else if constexpr (std::is_same_v<T, TwoPower>)
                        return power_law(sh.c2, scaled_sup_constant(sh.gamma2, sh.omega, N).value, sh.gamma2, "slow_decay");
                    else if constexpr (std::is_same_v<T, Constant>)
                        fail(ErrorKind::NoApplicableTheorem, "constant datum as lambda -> 0");
                    else {
                        const auto mass = analytic_norm(unit, NormSpec{1.0, 0.0}, N);
                        if (!mass || !std::isfinite(*mass)) fail(ErrorKind::NoApplicableTheorem, "datum is not integrable");
                        return measure_law(*mass);
                    }
                }
            }
        },
        p.shape);
}

struct Inapplicable {
    std::string name;
    std::string reason;
};

struct BoundReport {
    ProblemSpec problem;
    std::string datum;
    double lambda = 1.0;
    std::vector<LowerBound> lower;
    std::vector<Inapplicable> inapplicable;
    std::optional<UpperBound> upper;
    std::optional<AsymptoticConstant> asymptotic_zero, asymptotic_infinity;

    std::optional<LowerBound> best_lower() const {
        std::optional<LowerBound> b;
        for (const auto& x : lower)
            if (!b || x.T > b->T) b = x;
        return b;
    }
};

struct ReportOptions {
    std::vector<double> lebesgue_q{1.0, 2.0, 4.0, 8.0, kInf};
    std::vector<double> weighted_q{kInf};
    double upper_horizon = 0.0;  // 0 disables the upper-bound search
    std::optional<Grid> grid;
    SemigroupRoute route = SemigroupRoute::analytic;
};

namespace detail {

inline std::vector<double> datum_powers(const Profile& p) {
    return std::visit(
        [](const auto& s) -> std::vector<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingularPower> || std::is_same_v<T, TruncatedSingular> ||
                          std::is_same_v<T, TailPower>)
                return {s.gamma};
            else if constexpr (std::is_same_v<T, TwoPower>) return {s.gamma1, s.gamma2};
            else return {};
        },
        p.shape);
}

inline std::string qname(double q) {
    if (std::isinf(q)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", q);
    return buf;
}

} // namespace detail

inline BoundReport bound_report(const Profile& p, ProblemSpec s, const ReportOptions& o = {}) {
    if (antisymmetry_of(p) > 0) s.m = antisymmetry_of(p);
    s.validate();
    BoundReport rep;
    rep.problem = s;
    rep.datum = profile_kind(p);
    rep.lambda = p.lambda;
    const Profile unit{p.shape, 1.0};
    const int N = s.N;
    auto attempt = [&](const std::string& name, auto&& make) {
        try {
            rep.lower.push_back(make());
        } catch (const Error& e) {
            rep.inapplicable.push_back({name, e.what()});
        }
    };
    auto norm_of = [&](double q, double g) -> double {
        const auto n = analytic_norm(unit, NormSpec{q, g}, N);
        if (!n) fail(ErrorKind::InvalidArgument, "no closed-form norm for this datum");
        if (!std::isfinite(*n)) fail(ErrorKind::HypothesisViolated, "datum is not in the space");
        return *n;
    };
    const auto powers = detail::datum_powers(p);
    if (s.m > 0) {
        const auto& sh = std::get<SectorPsi0>(p.shape);
        attempt("sector", [&] {
            return lower_bound_sector(p.lambda, sh.c * sector_sup_constant(sh.m, sh.gamma, sh.omega, N), s, sh.gamma);
        });
    } else if (s.l == 0.0) {
        for (double q : o.lebesgue_q)
            attempt("lebesgue_q=" + detail::qname(q), [&] { return lower_bound_lebesgue(p.lambda, norm_of(q, 0.0), s, q); });
        attempt("measure", [&] { return lower_bound_measure(p.lambda, norm_of(1.0, 0.0), s); });
        for (double g : powers) {
            for (double q : o.weighted_q)
                attempt("weighted_q=" + detail::qname(q), [&] {
                    return lower_bound_weighted(p.lambda, norm_of(q, g), s, q, g);
                });
            attempt("singular", [&] {
                const double K = norm_of(kInf, g);
                if (!(g > 0.0 && g < N && g * s.alpha < 2.0)) fail(ErrorKind::HypothesisViolated, "0 < gamma < min(N, 2/alpha)");
                const double Lr = scaled_sup_constant(g, AngularPart::one(), N, singular_r(s, g)).value;
                return lower_bound_singular(p.lambda, K * Lr, s, g);
            });
        }
    } else {
        std::vector<double> gammas;
        if (s.l < 0.0) gammas = {0.0};
        else {
            gammas = {s.l / s.alpha};
            for (double g : powers)
                if (g > s.l / s.alpha) gammas.push_back(g);
        }
        for (double g : gammas)
            for (double q : o.weighted_q)
                attempt("hardy_henon_q=" + detail::qname(q), [&] {
                    return lower_bound_hardy_henon(p.lambda, norm_of(q, g), s, q, g);
                });
    }
    if (s.l == 0.0 && o.upper_horizon > 0.0 && p.lambda > 0.0) {
        try {
            rep.upper = upper_bound_necessary(p, s, o.upper_horizon, o.grid, o.route);
        } catch (const Error& e) {
            rep.inapplicable.push_back({"upper", e.what()});
        }
    }
    for (Direction d : {Direction::to_zero, Direction::to_infinity}) {
        try {
            (d == Direction::to_zero ? rep.asymptotic_zero : rep.asymptotic_infinity) = asymptotic_constants(p, d, s);
        } catch (const Error& e) {
            rep.inapplicable.push_back({d == Direction::to_zero ? "asymptotic_to_zero" : "asymptotic_to_infinity", e.what()});
        }
    }
    return rep;
}

} // namespace lifespan
