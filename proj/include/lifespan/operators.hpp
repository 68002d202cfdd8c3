#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "profiles.hpp"
#include "radial.hpp"

namespace lifespan {

struct OperatorConstant {
    double value = 0.0;
    std::string provenance;  // "numeric-quadrature" (exact sup) or "numeric-family" (lower estimate)
};

namespace detail {

// sup over rho of rho^a * || G(rho e - .) |.|^{-b} ||_{p}, the exact L^{q1}_b -> L^inf_a norm at t = 1.
inline double smoothing_sup(int dim, double a, double b, double p) {
    if (a > b) return kInf;
    if (std::isinf(p)) {
        if (b != 0.0) return kInf;
        return std::pow(4.0 * std::numbers::pi, -0.5 * dim);
    }
    auto at = [&](double rho) {
        const double kappa = 0.25 * p;
        auto f = [&](double s) { return std::pow(s, dim - 1 - b * p) * radial::angular_gauss(dim, kappa, rho, s); };
        const double reach = 12.0 / std::sqrt(p);
        const double integral = radial::integrate_pieces(f, {rho, std::max(0.0, rho - reach)}, rho + reach);
        const double val = std::pow(4.0 * std::numbers::pi, -0.5 * dim) * std::pow(integral, 1.0 / p);
        return (a == 0.0 ? 1.0 : std::pow(rho, a)) * val;
    };
    double best = radial::radial_sup(at, 60.0, 80).first;
    // At infinity rho^a e^Delta|.|^{-b} tends to 1 when a == b and q1 = inf.
    if (p == 1.0 && a == b) best = std::max(best, 1.0);
    return best;
}

inline double family_ratio(int dim, double a, double b, double q1, double q2, double s, double w) {
    auto f = [&](double y) { return std::pow(y, -s) * std::exp(-y * y / (w * w)); };
    double den;
    if (std::isinf(q1)) {
        const double e = b - s;
        den = e == 0.0 ? 1.0 : std::pow(0.5 * e * w * w, 0.5 * e) * std::exp(-0.5 * e);
    } else {
        const double ae = 0.5 * (dim + q1 * (b - s));
        den = std::pow(unit_sphere_area(dim) * 0.5 * std::pow(w * w / q1, ae) * std::tgamma(ae), 1.0 / q1);
    }
    auto g = [&](double rho) {
        const double h = radial::heat(dim, f, rho);
        return std::pow(rho, dim - 1) * std::pow((a == 0.0 ? 1.0 : std::pow(rho, a)) * h, q2);
    };
    const double scale = std::sqrt(w * w + 4.0);
    const double num = std::pow(unit_sphere_area(dim) * radial::integrate_pieces(g, {scale, 3.0 * scale}, 12.0 * scale), 1.0 / q2);
    return num / den;
}

} // namespace detail

// Operator norm of e^{Delta} from L^{q1}_b to L^{q2}_a (weights |x|^b on the input, |x|^a on the output).
inline OperatorConstant smoothing_constant(int dim, double a, double b, double q1, double q2) {
    static std::mutex mtx;
    static std::map<std::tuple<int, double, double, double, double>, OperatorConstant> cache;
    const auto key = std::make_tuple(dim, a, b, q1, q2);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    OperatorConstant out;
    if (std::isinf(q2)) {
        const double p = std::isinf(q1) ? 1.0 : (q1 == 1.0 ? kInf : q1 / (q1 - 1.0));
        out = {detail::smoothing_sup(dim, a, b, p), "numeric-quadrature"};
    } else {
        const double smax = std::isinf(q1) ? b : b + dim / q1;
        double best = 0.0;
        for (double delta : {0.0, 0.02, 0.1, 0.3, 0.8}) {
            const double s = smax - delta;
            if (!std::isinf(q1) && delta == 0.0) continue;
            for (double w : {0.25, 1.0, 4.0, 16.0}) {
                const double r = detail::family_ratio(dim, a, b, q1, q2, s, w);
                if (std::isfinite(r)) best = std::max(best, r);
            }
        }
        out = {best, "numeric-family"};
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, out);
    return out;
}

} // namespace lifespan
