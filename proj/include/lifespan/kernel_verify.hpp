#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"
#include "profiles.hpp"
#include "radial.hpp"
#include "scaling.hpp"

namespace lifespan {

struct KernelRow {
    double gamma = 0.0;
    double mu = 0.0;
    double q1 = kInf;
    double q2 = kInf;
    int N = 1;
};

inline double predicted_kernel_slope(const KernelRow& r) {
    return -0.5 * r.N * (inv(r.q1) - inv(r.q2)) - 0.5 * (r.mu - r.gamma);
}

inline void check_kernel_hypotheses(const KernelRow& r) {
    std::string failed;
    if (r.N < 1 || r.N > 3) fail(ErrorKind::UnsupportedDimension, "radial kernels exist for N <= 3");
    if (!(r.q1 >= 1.0 && r.q2 >= 1.0)) failed += "q1, q2 >= 1; ";
    if (!(0.0 <= r.gamma && r.gamma <= r.mu && r.mu < r.N)) failed += "0 <= gamma <= mu < N; ";
    const double a = inv(r.q2), b = (r.mu - r.gamma) / r.N + inv(r.q1), c = r.mu / r.N + inv(r.q1);
    if (r.gamma == 0.0 && r.mu == 0.0) {
        if (!(r.q1 <= r.q2)) failed += "q1 <= q2 for the unweighted estimate; ";
    } else if (r.gamma == r.mu && r.q1 == r.q2) {
        if (!(c < 1.0)) failed += "mu/N + 1/q < 1; ";
    } else {
        if (!(a < b)) failed += "1/q2 < (mu-gamma)/N + 1/q1; ";
        if (!(c < 1.0)) failed += "mu/N + 1/q1 < 1; ";
    }
    if (!failed.empty()) fail(ErrorKind::HypothesisViolated, failed);
}

namespace detail {

// || |y|^gamma e^{Delta}(|y|^{-mu} 1_{|y| > delta}) ||_{q2}
inline double tail_datum_norm(const KernelRow& r, double delta) {
    const int N = r.N;
    auto f = [&](double s) { return s > delta ? std::pow(s, -r.mu) : 0.0; };
    auto h = [&](double rho) { return radial::heat(N, f, rho, 1.0, {delta}); };
    auto weight = [&](double rho) { return r.gamma == 0.0 ? 1.0 : std::pow(rho, r.gamma); };
    if (std::isinf(r.q2)) return radial::radial_sup([&](double rho) { return weight(rho) * h(rho); }, 60.0, 60).first;
    const double top = 60.0;
    auto g = [&](double rho) { return std::pow(rho, N - 1) * std::pow(weight(rho) * h(rho), r.q2); };
    double integral = radial::integrate_pieces(g, {delta, 1.0, 4.0, 16.0}, top);
    const double e = N + r.q2 * (r.gamma - r.mu);
    if (!(e < 0.0)) return kInf;
    const double c = std::pow(top, r.mu) * h(top);
    integral += std::pow(c, r.q2) * std::pow(top, e) / (-e);
    return std::pow(unit_sphere_area(N) * integral, 1.0 / r.q2);
}

} // namespace detail

struct KernelResult {
    KernelRow row;
    double predicted = 0.0;
    double fitted = 0.0;
    double max_ratio_deviation = 0.0;  // relative spread of R(t) t^{-predicted} on the window
    std::vector<double> t;
    std::vector<double> R;
};

// R(t) = || |x|^gamma e^{t Delta} u ||_{q2}. For q1 = inf the datum is |x|^{-mu} 1_{|x| > eps};
// for finite q1 it is the Gaussian G_s, s = eps^2.
inline KernelResult kernel_slope_experiment(const KernelRow& row, const std::vector<double>& ts, double eps = 1e-6) {
    check_kernel_hypotheses(row);
    if (ts.size() < 2) fail(ErrorKind::InsufficientData, "need at least two times");
    KernelResult out;
    out.row = row;
    out.predicted = predicted_kernel_slope(row);
    std::vector<std::pair<double, double>> pairs;
    for (double t : ts) {
        double R;
        if (std::isinf(row.q1)) {
            // dilation: e^{t Delta}u(x) = t^{-mu/2} e^{Delta}(|.|^{-mu} 1_{|.| > eps/sqrt t})(x / sqrt t)
            R = std::pow(t, 0.5 * (row.gamma - row.mu) + 0.5 * row.N * inv(row.q2)) *
                detail::tail_datum_norm(row, eps / std::sqrt(t));
        } else {
            const auto n = analytic_norm(Profile{DiracApprox{1.0, t + eps * eps}, 1.0}, NormSpec{row.q2, row.gamma}, row.N);
            R = *n;
        }
        out.t.push_back(t);
        out.R.push_back(R);
        pairs.emplace_back(t, R);
    }
    out.fitted = exponent_fit(pairs).slope;
    double lo = kInf, hi = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double v = out.R[i] * std::pow(out.t[i], -out.predicted);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out.max_ratio_deviation = (hi - lo) / lo;
    return out;
}

inline std::vector<double> kernel_window(double eps, int points = 7) {
    return geometric_grid(std::max(1.0, 10.0 * eps * eps), 64.0, points);
}

struct TranslationResult {
    std::vector<double> tau;
    std::vector<double> ratio;
    double fitted_slope = 0.0;
    double expected_slope = 0.0;
    double growth = 1.0;
    bool bounded = true;
    bool pass = true;
};

namespace detail {

// || |x|^a G_s(. - tau e1) ||_q with G_s the heat kernel at time s.
inline double shifted_gaussian_norm(int N, double a, double s, double q, double tau) {
    const double kappa = q / (4.0 * s);
    auto f = [&](double rho) { return std::pow(rho, N - 1 + a * q) * radial::angular_gauss(N, kappa, tau, rho); };
    const double reach = 12.0 * std::sqrt(s / q) + 1.0;
    const double integral = radial::integrate_pieces(f, {tau, std::max(0.0, tau - reach)}, tau + reach);
    return std::pow(4.0 * std::numbers::pi * s, -0.5 * N) * std::pow(integral, 1.0 / q);
}

} // namespace detail

// ratio(tau) = || |x|^gamma G_2(. - tau e1) ||_{q2} / || |x|^mu G_1(. - tau e1) ||_{q1}; e^{Delta} G_1 = G_2.
inline TranslationResult translation_necessity_experiment(const KernelRow& row, const std::vector<double>& taus,
                                                          double fit_from = 8.0) {
    if (std::isinf(row.q1) || std::isinf(row.q2)) fail(ErrorKind::InvalidArgument, "finite q1, q2 required");
    TranslationResult out;
    out.expected_slope = row.gamma - row.mu;
    std::vector<std::pair<double, double>> pairs;
    for (double tau : taus) {
        const double num = detail::shifted_gaussian_norm(row.N, row.gamma, 2.0, row.q2, tau);
        const double den = detail::shifted_gaussian_norm(row.N, row.mu, 1.0, row.q1, tau);
        out.tau.push_back(tau);
        out.ratio.push_back(num / den);
        if (tau >= fit_from) pairs.emplace_back(tau, num / den);
    }
    out.fitted_slope = exponent_fit(pairs).slope;
    out.growth = *std::max_element(out.ratio.begin(), out.ratio.end()) / out.ratio.front();
    if (row.gamma > row.mu) {
        out.bounded = false;
        out.pass = out.growth >= 10.0 && std::abs(out.fitted_slope - out.expected_slope) <= 0.1 * out.expected_slope;
    } else {
        out.bounded = out.growth < 10.0;
        out.pass = out.bounded;
    }
    return out;
}

} // namespace lifespan
