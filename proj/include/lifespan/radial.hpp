#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "error.hpp"

namespace lifespan::radial {

inline double scaled_bessel_i0(double z) {
    if (z < 500.0) return std::cyl_bessel_i(0.0, z) * std::exp(-z);
    const double iz = 1.0 / z;
    return (1.0 + iz * (0.125 + iz * (9.0 / 128.0 + iz * 225.0 / 3072.0))) / std::sqrt(2.0 * std::numbers::pi * z);
}

// Integral over the unit sphere of exp(-kappa |rho e - s theta|^2).
inline double angular_gauss(int dim, double kappa, double rho, double s) {
    const double d2 = (rho - s) * (rho - s);
    const double near = std::exp(-kappa * d2);
    switch (dim) {
    case 1: return near + std::exp(-kappa * (rho + s) * (rho + s));
    case 2: return 2.0 * std::numbers::pi * near * scaled_bessel_i0(2.0 * kappa * rho * s);
    case 3: {
        const double z = 2.0 * kappa * rho * s;
        if (z < 1e-8) return 4.0 * std::numbers::pi * std::exp(-kappa * (rho * rho + s * s)) * (1.0 + z * z / 6.0);
        return 4.0 * std::numbers::pi * near * (-std::expm1(-2.0 * z)) / (2.0 * z);
    }
    default: fail(ErrorKind::UnsupportedDimension, "radial kernels exist for N <= 3");
    }
}

inline double integrate(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    if (a == 0.0) {
        // x = b u^4 tames integrable power singularities at the origin.
        auto g = [&](double u) {
            if (u <= 0.0) return 0.0;
            const double u3 = u * u * u;
            const double v = f(b * u3 * u) * 4.0 * b * u3;
            return std::isfinite(v) ? v : 0.0;
        };
        return GK::integrate(g, 0.0, 1.0, 15, 1e-12);
    }
    return GK::integrate(f, a, b, 15, 1e-12);
}

// Integral of f over (0, inf) given breakpoints and an effective upper limit.
inline double integrate_pieces(const std::function<double(double)>& f, std::vector<double> breaks, double upper) {
    breaks.push_back(0.0);
    breaks.push_back(upper);
    std::sort(breaks.begin(), breaks.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = std::max(0.0, breaks[i]);
        const double b = std::min(upper, breaks[i + 1]);
        if (b > a) sum += integrate(f, a, b);
    }
    return sum;
}

// (e^{t Delta} f)(rho) for radial f, with optional breakpoints where f is non-smooth.
inline double heat(int dim, const std::function<double(double)>& f, double rho, double t = 1.0,
                   std::vector<double> breaks = {}, double support_max = std::numeric_limits<double>::infinity()) {
    const double kappa = 1.0 / (4.0 * t);
    const double pref = std::pow(4.0 * std::numbers::pi * t, -0.5 * dim);
    const double reach = 12.0 * std::sqrt(t);
    const double upper = std::min(support_max, rho + reach);
    breaks.push_back(rho);
    if (rho > reach) breaks.push_back(rho - reach);
    auto g = [&](double s) {
        const double fs = f(s);
        if (fs == 0.0) return 0.0;
        return std::pow(s, dim - 1) * fs * angular_gauss(dim, kappa, rho, s);
    };
    std::vector<double> clean;
    for (double b : breaks)
        if (b > 0.0 && b < upper) clean.push_back(b);
    const double lower = rho > reach ? rho - reach : 0.0;
    clean.push_back(lower);
    std::sort(clean.begin(), clean.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        const double a = std::max(clean[i], lower);
        const double b = i + 1 < clean.size() ? clean[i + 1] : upper;
        if (b > a) sum += integrate(g, a, b);
    }
    return pref * sum;
}

// e^{Delta}|x|^{-b} at radius rho.
inline double heat_of_power(int dim, double b, double rho) {
    return heat(dim, [b](double s) { return std::pow(s, -b); }, rho);
}

// sup over rho in [0, rho_max] of g(rho): log-spaced scan then golden-section refinement.
inline std::pair<double, double> radial_sup(const std::function<double(double)>& g, double rho_max, int samples = 160) {
    std::vector<double> rs{0.0};
    const double r0 = 1e-4 * rho_max;
    for (int i = 0; i < samples; ++i) rs.push_back(r0 * std::pow(rho_max / r0, double(i) / (samples - 1)));
    std::vector<double> vals;
    for (double r : rs) vals.push_back(g(r));
    std::size_t best = std::max_element(vals.begin(), vals.end()) - vals.begin();
    double a = rs[best == 0 ? 0 : best - 1];
    double b = rs[std::min(best + 1, rs.size() - 1)];
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 60 && b - a > 1e-10 * (1.0 + b); ++it) {
        if (f1 < f2) { a = x1; x1 = x2; f1 = f2; x2 = a + phi * (b - a); f2 = g(x2); }
        else { b = x2; x2 = x1; f2 = f1; x1 = b - phi * (b - a); f1 = g(x1); }
    }
    double arg = rs[best], val = vals[best];
    if (f1 > val) { val = f1; arg = x1; }
    if (f2 > val) { val = f2; arg = x2; }
    return {val, arg};
}

} // namespace lifespan::radial
