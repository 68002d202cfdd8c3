#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "error.hpp"
#include "profiles.hpp"

namespace lifespan {

struct ScalingRelation {
    double sigma = 0.0;
    double gamma = 0.0;
    double exponent = 0.0;

    // lambda = mu^{gamma - sigma}
    double mu_of_lambda(double lambda) const { return std::pow(lambda, 1.0 / (gamma - sigma)); }
    double lambda_of_mu(double mu) const { return std::pow(mu, gamma - sigma); }
};

inline ScalingRelation scaling_relation(double alpha, double gamma, double l = 0.0) {
    if (!(alpha > 0.0)) fail(ErrorKind::InvalidArgument, "alpha must be positive");
    const double sigma = (2.0 + l) / alpha;
    if (gamma == sigma) fail(ErrorKind::DegenerateScaling, "gamma equals the scaling degree");
    return {sigma, gamma, 2.0 / (sigma - gamma)};
}

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double half_width = 0.0;  // 95% confidence half-width of the slope
    std::size_t points = 0;
};

inline ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 2) fail(ErrorKind::InsufficientData, "need at least two (lambda, T) pairs");
    std::vector<double> x, y;
    for (const auto& [l, t] : pairs) {
        if (!(l > 0.0) || !(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::InsufficientData, "pairs must be positive and finite");
        x.push_back(std::log(l));
        y.push_back(std::log(t));
    }
    const double n = double(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) fail(ErrorKind::InsufficientData, "lambda values must not all coincide");
    ExponentFit f;
    f.points = x.size();
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (x.size() > 2) {
        double ss = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - f.intercept - f.slope * x[i];
            ss += r * r;
        }
        const double se = std::sqrt(ss / (n - 2.0) / sxx);
        const boost::math::students_t dist(n - 2.0);
        f.half_width = boost::math::quantile(boost::math::complement(dist, 0.025)) * se;
    }
    return f;
}

inline std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi >= lo) || points < 1) fail(ErrorKind::InvalidArgument, "bad geometric grid");
    std::vector<double> g;
    for (int i = 0; i < points; ++i) g.push_back(points == 1 ? lo : lo * std::pow(hi / lo, double(i) / (points - 1)));
    return g;
}

using LifespanSolver = std::function<double(const Profile&)>;

struct SpreadReport {
    std::vector<double> lambdas;
    std::vector<double> scaled;  // lambda^e T(lambda psi)
    double spread = 0.0;         // (max - min) / min
};

inline SpreadReport homogeneous_identity_check(const Profile& psi, const std::vector<double>& lambdas, double alpha,
                                               const LifespanSolver& solve) {
    const auto og = origin_singularity(psi);
    if (!og || !std::holds_alternative<SingularPower>(psi.shape))
        fail(ErrorKind::InvalidArgument, "homogeneous datum expected");
    const auto rel = scaling_relation(alpha, *og);
    SpreadReport r;
    for (double l : lambdas) {
        r.lambdas.push_back(l);
        r.scaled.push_back(std::pow(l, rel.exponent) * solve(psi.scaled(l)));
    }
    const auto [lo, hi] = std::minmax_element(r.scaled.begin(), r.scaled.end());
    r.spread = (*hi - *lo) / *lo;
    return r;
}

enum class Trend { nonincreasing, nondecreasing };

// Ordering of mu^{gamma_w} D_mu phi in mu claimed for the shipped families.
inline Trend expected_trend(const Profile& family, double gamma_w) {
    return std::visit(
        [&](const auto& s) -> Trend {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TruncatedSingular>) return Trend::nonincreasing;
            else if constexpr (std::is_same_v<T, TailPower>) return Trend::nondecreasing;
            else if constexpr (std::is_same_v<T, TwoPower>) {
                if (gamma_w == s.gamma1) return Trend::nonincreasing;
                if (gamma_w == s.gamma2) return Trend::nondecreasing;
                fail(ErrorKind::InvalidArgument, "gamma_w must be one of the two powers");
            } else fail(ErrorKind::InvalidArgument, "monotone families are truncated, tail and two-power data");
        },
        family.shape);
}

struct MonotonicityReport {
    bool pass = true;
    Trend trend = Trend::nonincreasing;
    double worst_violation = 0.0;
    double worst_mu_a = 0.0, worst_mu_b = 0.0;
    Point worst_point{};
};

inline MonotonicityReport monotonicity_check(const Profile& family, double gamma_w, const std::vector<double>& mus,
                                             const std::vector<Point>& points, int dim) {
    MonotonicityReport r;
    r.trend = expected_trend(family, gamma_w);
    for (std::size_t k = 0; k + 1 < mus.size(); ++k) {
        const Profile a = dilate(family, mus[k], gamma_w, dim);
        const Profile b = dilate(family, mus[k + 1], gamma_w, dim);
        for (const Point& x : points) {
            const double va = evaluate(a, x, dim);
            const double vb = evaluate(b, x, dim);
            const double diff = r.trend == Trend::nonincreasing ? vb - va : va - vb;
            const double tol = 1e-12 * std::max(std::abs(va), std::abs(vb));
            if (diff > tol && diff > r.worst_violation) {
                r.pass = false;
                r.worst_violation = diff;
                r.worst_mu_a = mus[k];
                r.worst_mu_b = mus[k + 1];
                r.worst_point = x;
            }
        }
    }
    return r;
}

enum class LambdaDirection { to_zero, to_infinity };

struct LimitReport {
    std::vector<double> lambdas;
    std::vector<double> scaled;  // lambda^e T_num along the direction
    bool divergent_branch = false;
    bool monotone = true;
    bool bracketed = true;
    double growth = 1.0;
    bool pass = true;
};

// Ordered so that lambdas move in the requested direction. limit_T and family_T are T_num of the
// homogeneous limit datum and of the family datum at lambda = 1 (used only on convergent branches).
inline LimitReport limit_structure_check(const Profile& family, double gamma_e, LambdaDirection dir, double alpha,
                                         std::vector<double> lambdas, const LifespanSolver& solve, double limit_T,
                                         double family_T, double growth_factor = 10.0, double tol = 0.05) {
    const auto rel = scaling_relation(alpha, gamma_e);
    std::sort(lambdas.begin(), lambdas.end());
    if (dir == LambdaDirection::to_zero) std::reverse(lambdas.begin(), lambdas.end());
    // mu^{gamma_e} D_mu phi nonincreasing in mu means lambda^e T nonincreasing in lambda.
    const Trend t = expected_trend(family, gamma_e);
    const bool increases_with_lambda = t == Trend::nondecreasing;
    LimitReport r;
    r.divergent_branch = (dir == LambdaDirection::to_infinity) == increases_with_lambda;
    for (double l : lambdas) {
        r.lambdas.push_back(l);
        r.scaled.push_back(std::pow(l, rel.exponent) * solve(family.scaled(l)));
    }
    for (std::size_t k = 0; k + 1 < r.scaled.size(); ++k) {
        const double a = r.scaled[k], b = r.scaled[k + 1];
        if (r.divergent_branch ? b < a * (1.0 - tol) : b > a * (1.0 + tol)) r.monotone = false;
    }
    r.growth = r.scaled.back() / r.scaled.front();
    if (r.divergent_branch) {
        r.pass = r.monotone && r.growth >= growth_factor;
    } else {
        const double lo = std::min(limit_T, family_T), hi = std::max(limit_T, family_T);
        for (double v : r.scaled)
            if (v < lo * (1.0 - tol) || v > hi * (1.0 + tol)) r.bracketed = false;
        r.pass = r.monotone && r.bracketed;
    }
    return r;
}

} // namespace lifespan
