#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <variant>

#include "field.hpp"

namespace lifespan {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double inv(double q) { return std::isinf(q) ? 0.0 : 1.0 / q; }

struct AngularPart {
    enum class Kind { constant_one, first_coordinate_ratio, custom };
    Kind kind = Kind::constant_one;
    std::function<double(const Point&, int)> custom;

    // Value at x != 0; the ratio variant is |x1|/|x| (sector data use the sign of x1 through psi0).
    double operator()(const Point& x, int dim) const {
        switch (kind) {
        case Kind::constant_one: return 1.0;
        case Kind::first_coordinate_ratio: return std::abs(x[0]) / radius(x, dim);
        case Kind::custom: return custom(x, dim);
        }
        return 1.0;
    }
    static AngularPart one() { return {}; }
    static AngularPart ratio() { return {Kind::first_coordinate_ratio, {}}; }
};

struct Constant { double c = 1.0; };
struct BoundedBump { double amplitude = 1.0; double width = 1.0; };
struct SingularPower { double gamma = 0.5; AngularPart omega; double c = 1.0; };
struct TruncatedSingular { double gamma = 0.5; AngularPart omega; double eps = 1.0; double c = 1.0; };
struct TailPower { double gamma = 0.5; AngularPart omega; double R = 1.0; double c = 1.0; };
struct TwoPower {
    double gamma1 = 0.25;
    double gamma2 = 0.75;
    AngularPart omega;
    double rho = 1.0;
    double c1 = 1.0;
    double c2 = 1.0;
};
struct SectorPsi0 { int m = 1; double gamma = 0.5; AngularPart omega; double cutoff = kInf; double c = 1.0; };
struct DiracApprox { double mass = 1.0; double width = 1e-3; };

using ProfileShape =
    std::variant<Constant, BoundedBump, SingularPower, TruncatedSingular, TailPower, TwoPower, SectorPsi0, DiracApprox>;

struct Profile {
    ProfileShape shape;
    double lambda = 1.0;

    Profile scaled(double factor) const { return {shape, lambda * factor}; }
};

inline double c_m_gamma(int m, double gamma) {
    double c = 1.0;
    for (int k = 0; k < m; ++k) c *= gamma + 2.0 * k;
    return c;
}

inline double unit_sphere_area(int dim) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

inline std::string profile_kind(const Profile& p) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) return "constant";
            else if constexpr (std::is_same_v<T, BoundedBump>) return "bounded_bump";
            else if constexpr (std::is_same_v<T, SingularPower>) return "singular_power";
            else if constexpr (std::is_same_v<T, TruncatedSingular>) return "truncated_singular";
            else if constexpr (std::is_same_v<T, TailPower>) return "tail_power";
            else if constexpr (std::is_same_v<T, TwoPower>) return "two_power";
            else if constexpr (std::is_same_v<T, SectorPsi0>) return "sector_psi0";
            else return "dirac_approx";
        },
        p.shape);
}

// Power of the singularity at the origin, if any.
inline std::optional<double> origin_singularity(const Profile& p) {
    return std::visit(
        [](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingularPower> || std::is_same_v<T, TruncatedSingular>) return s.gamma;
            else if constexpr (std::is_same_v<T, TwoPower>) return s.gamma1;
            else if constexpr (std::is_same_v<T, SectorPsi0>) return s.gamma + s.m;
            else return std::nullopt;
        },
        p.shape);
}

inline int antisymmetry_of(const Profile& p) {
    if (auto s = std::get_if<SectorPsi0>(&p.shape)) return s->m;
    return 0;
}

inline bool is_nonnegative(const Profile& p) {
    return p.lambda >= 0.0 && antisymmetry_of(p) == 0 &&
           std::visit(
               [](const auto& s) {
                   using T = std::decay_t<decltype(s)>;
                   if constexpr (std::is_same_v<T, Constant>) return s.c >= 0.0;
                   else if constexpr (std::is_same_v<T, BoundedBump>) return s.amplitude >= 0.0;
                   else if constexpr (std::is_same_v<T, TwoPower>) return s.c1 >= 0.0 && s.c2 >= 0.0;
                   else if constexpr (std::is_same_v<T, DiracApprox>) return s.mass >= 0.0;
                   else if constexpr (std::is_same_v<T, SectorPsi0>) return false;
                   else return s.c >= 0.0;
               },
               p.shape);
}

inline double evaluate(const Profile& p, const Point& x, int dim) {
    const double r = radius(x, dim);
    const double v = std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return s.c;
            } else if constexpr (std::is_same_v<T, BoundedBump>) {
                return s.amplitude * std::exp(-r * r / (s.width * s.width));
            } else if constexpr (std::is_same_v<T, DiracApprox>) {
                return s.mass * std::pow(4.0 * std::numbers::pi * s.width, -0.5 * dim) * std::exp(-r * r / (4.0 * s.width));
            } else {
                if (r == 0.0) fail(ErrorKind::EvaluationAtSingularity, "singular profile evaluated at the origin");
                if constexpr (std::is_same_v<T, SingularPower>) {
                    return s.c * s.omega(x, dim) * std::pow(r, -s.gamma);
                } else if constexpr (std::is_same_v<T, TruncatedSingular>) {
                    return r <= s.eps ? s.c * s.omega(x, dim) * std::pow(r, -s.gamma) : 0.0;
                } else if constexpr (std::is_same_v<T, TailPower>) {
                    return r >= s.R ? s.c * s.omega(x, dim) * std::pow(r, -s.gamma) : 0.0;
                } else if constexpr (std::is_same_v<T, TwoPower>) {
                    return r <= s.rho ? s.c1 * s.omega(x, dim) * std::pow(r, -s.gamma1)
                                      : s.c2 * s.omega(x, dim) * std::pow(r, -s.gamma2);
                } else {
                    if (r > s.cutoff) return 0.0;
                    double prod = 1.0;
                    for (int j = 0; j < s.m; ++j) prod *= x[j];
                    return s.c * c_m_gamma(s.m, s.gamma) * s.omega(x, dim) * prod * std::pow(r, -s.gamma - 2.0 * s.m);
                }
            }
        },
        p.shape);
    return p.lambda * v;
}

// mu^{gw} * phi(mu x) as an exact symbolic profile. The dimension only matters for DiracApprox.
inline Profile dilate(const Profile& p, double mu, double gw, int dim = 1) {
    if (!(mu > 0.0)) fail(ErrorKind::InvalidArgument, "dilation factor must be positive");
    Profile out = p;
    std::visit(
        [&](auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                s.c *= std::pow(mu, gw);
            } else if constexpr (std::is_same_v<T, BoundedBump>) {
                s.amplitude *= std::pow(mu, gw);
                s.width /= mu;
            } else if constexpr (std::is_same_v<T, DiracApprox>) {
                s.mass *= std::pow(mu, gw - dim);
                s.width /= mu * mu;
            } else if constexpr (std::is_same_v<T, SingularPower>) {
                s.c *= std::pow(mu, gw - s.gamma);
            } else if constexpr (std::is_same_v<T, TruncatedSingular>) {
                s.c *= std::pow(mu, gw - s.gamma);
                s.eps /= mu;
            } else if constexpr (std::is_same_v<T, TailPower>) {
                s.c *= std::pow(mu, gw - s.gamma);
                s.R /= mu;
            } else if constexpr (std::is_same_v<T, TwoPower>) {
                s.c1 *= std::pow(mu, gw - s.gamma1);
                s.c2 *= std::pow(mu, gw - s.gamma2);
                s.rho /= mu;
            } else {
                s.c *= std::pow(mu, gw - s.gamma - s.m);
                s.cutoff /= mu;
            }
        },
        out.shape);
    return out;
}

namespace detail {

inline double gaussian_cell_mean_1d(double center, double h, double s) {
    // mean of exp(-y^2/s^2) over [center-h/2, center+h/2]
    const double a = (center - 0.5 * h) / s;
    const double b = (center + 0.5 * h) / s;
    return 0.5 * std::sqrt(std::numbers::pi) * s * (std::erf(b) - std::erf(a)) / h;
}

} // namespace detail

inline Field sample_profile(const Profile& p, const Grid& g) {
    const int m = antisymmetry_of(p);
    Field f(g, 0.0, m);
    if (auto sing = origin_singularity(p)) {
        const double inner = m > 0 ? std::get<SectorPsi0>(p.shape).gamma : *sing;
        if (inner >= g.dim)
            fail(ErrorKind::NonIntegrableSingularity, "singular power must be below the dimension");
    }
    // Gaussians are sampled as exact cell means so narrow data keep their mass.
    auto gaussian = [&](double amp, double s) {
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const auto idx = g.index(i);
            double v = amp;
            for (int j = 0; j < g.dim; ++j) v *= detail::gaussian_cell_mean_1d(g.coord(idx[j]), g.h, s);
            f.values[i] = v;
        }
    };
    if (auto b = std::get_if<BoundedBump>(&p.shape)) {
        gaussian(p.lambda * b->amplitude, b->width);
        return f;
    }
    if (auto d = std::get_if<DiracApprox>(&p.shape)) {
        gaussian(p.lambda * d->mass * std::pow(4.0 * std::numbers::pi * d->width, -0.5 * g.dim), 2.0 * std::sqrt(d->width));
        return f;
    }
    const bool singular = origin_singularity(p).has_value();
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (singular && cell_touches_origin(g, i)) {
            const Point lo = cell_low_corner(g, i);
            if (m > 0) {
                // Moment-weighted mean: the antisymmetric kernel sees x1..xm times the datum near the planes.
                auto wf = [&](const Point& x) {
                    double w = 1.0;
                    for (int j = 0; j < m; ++j) w *= std::abs(x[j]);
                    return w * evaluate(p, x, g.dim);
                };
                auto ww = [&](const Point& x) {
                    double w = 1.0;
                    for (int j = 0; j < m; ++j) w *= std::abs(x[j]);
                    return w;
                };
                f.values[i] = box_integral(wf, lo, g.h, g.dim) / box_integral(ww, lo, g.h, g.dim);
            } else {
                auto fx = [&](const Point& x) { return evaluate(p, x, g.dim); };
                f.values[i] = box_integral(fx, lo, g.h, g.dim) / g.cell_volume();
            }
        } else {
            f.values[i] = evaluate(p, g.point(i), g.dim);
        }
    }
    return f;
}

// Angular integral of omega^q over the unit sphere; nullopt for custom omega.
inline std::optional<double> angular_moment(const AngularPart& omega, double q, int dim) {
    if (omega.kind == AngularPart::Kind::constant_one) return unit_sphere_area(dim);
    if (omega.kind == AngularPart::Kind::first_coordinate_ratio)
        return 2.0 * std::pow(std::numbers::pi, 0.5 * (dim - 1)) * std::tgamma(0.5 * (q + 1.0)) / std::tgamma(0.5 * (dim + q));
    return std::nullopt;
}

// Exact ||lambda phi||_{L^q_gw} for the symbolic catalogue; +inf when the datum is outside the space,
// nullopt when no closed form is available.
inline std::optional<double> analytic_norm(const Profile& p, const NormSpec& spec, int dim) {
    const double q = spec.q;
    const double gw = spec.gamma;
    const bool qinf = std::isinf(q);
    const double lam = std::abs(p.lambda);
    auto gaussian_norm = [&](double amp, double s) -> double {
        amp = std::abs(amp);
        if (qinf) return gw == 0.0 ? amp : amp * std::pow(0.5 * gw * s * s, 0.5 * gw) * std::exp(-0.5 * gw);
        const double a = 0.5 * (dim + q * gw);
        const double integral = unit_sphere_area(dim) * 0.5 * std::pow(s * s / q, a) * std::tgamma(a);
        return amp * std::pow(integral, 1.0 / q);
    };
    // c * omega * r^{-g} restricted to a <= r <= b
    auto power_piece_q = [&](double c, const AngularPart& om, double g, double a, double b) -> std::optional<double> {
        const auto ang = angular_moment(om, q, dim);
        if (!ang) return std::nullopt;
        const double e = dim + q * (gw - g);
        double radial;
        if (e == 0.0) radial = (a == 0.0 || std::isinf(b)) ? kInf : std::log(b / a);
        else if (e > 0.0) radial = std::isinf(b) ? kInf : (std::pow(b, e) - (a > 0.0 ? std::pow(a, e) : 0.0)) / e;
        else radial = a == 0.0 ? kInf : ((std::isinf(b) ? 0.0 : std::pow(b, e)) - std::pow(a, e)) / e;
        return std::pow(std::abs(c), q) * *ang * radial;
    };
    auto power_piece_inf = [&](double c, double g, double a, double b) -> double {
        const double e = gw - g;
        if (e == 0.0) return std::abs(c);
        if (e > 0.0) return std::isinf(b) ? kInf : std::abs(c) * std::pow(b, e);
        return a == 0.0 ? kInf : std::abs(c) * std::pow(a, e);
    };
    std::optional<double> out = std::visit(
        [&](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return (qinf && gw == 0.0) || s.c == 0.0 ? std::abs(s.c) : kInf;
            } else if constexpr (std::is_same_v<T, BoundedBump>) {
                return gaussian_norm(s.amplitude, s.width);
            } else if constexpr (std::is_same_v<T, DiracApprox>) {
                return gaussian_norm(s.mass * std::pow(4.0 * std::numbers::pi * s.width, -0.5 * dim), 2.0 * std::sqrt(s.width));
            } else if constexpr (std::is_same_v<T, SectorPsi0>) {
                return std::nullopt;
            } else {
                double c1, g1, a1, b1, c2 = 0.0, g2 = 0.0, a2 = 0.0, b2 = 0.0;
                bool two = false;
                if constexpr (std::is_same_v<T, SingularPower>) { c1 = s.c; g1 = s.gamma; a1 = 0.0; b1 = kInf; }
                else if constexpr (std::is_same_v<T, TruncatedSingular>) { c1 = s.c; g1 = s.gamma; a1 = 0.0; b1 = s.eps; }
                else if constexpr (std::is_same_v<T, TailPower>) { c1 = s.c; g1 = s.gamma; a1 = s.R; b1 = kInf; }
                else { c1 = s.c1; g1 = s.gamma1; a1 = 0.0; b1 = s.rho; c2 = s.c2; g2 = s.gamma2; a2 = s.rho; b2 = kInf; two = true; }
                if (qinf) {
                    double v = power_piece_inf(c1, g1, a1, b1);
                    if (two) v = std::max(v, power_piece_inf(c2, g2, a2, b2));
                    return v;
                }
                auto v1 = power_piece_q(c1, s.omega, g1, a1, b1);
                if (!v1) return std::nullopt;
                double total = *v1;
                if (two) {
                    auto v2 = power_piece_q(c2, s.omega, g2, a2, b2);
                    if (!v2) return std::nullopt;
                    total += *v2;
                }
                return std::pow(total, 1.0 / q);
            }
        },
        p.shape);
    if (out) *out *= lam;
    return out;
}

struct SectorRatio {
    double value = 0.0;
    bool finite = true;
};

// sup over sampled Omega_m of |phi/psi0|, checked for stability across two refinements.
inline SectorRatio sector_ratio_norm(const Profile& p, int m, double gamma, const Grid& g) {
    if (m < 1 || m > g.dim) fail(ErrorKind::InvalidArgument, "sector index must satisfy 1 <= m <= N");
    Profile psi0{SectorPsi0{m, gamma, AngularPart::one(), kInf, 1.0}, 1.0};
    auto sup_on = [&](const Grid& gg) {
        double s = 0.0;
        for (std::size_t i = 0; i < gg.size(); ++i) {
            const Point x = gg.point(i);
            bool inside = true;
            for (int j = 0; j < m; ++j) inside = inside && x[j] > 0.0;
            if (!inside) continue;
            const double d = evaluate(psi0, x, gg.dim);
            if (d != 0.0) s = std::max(s, std::abs(evaluate(p, x, gg.dim) / d));
        }
        return s;
    };
    const double s1 = sup_on(g);
    const double s2 = sup_on(make_grid(g.dim, g.half_width, 2 * g.n));
    const double s3 = sup_on(make_grid(g.dim, g.half_width, 4 * g.n));
    SectorRatio r;
    r.value = s3;
    r.finite = !(s2 > 1.05 * s1 && s3 > 1.05 * s2);
    if (!r.finite) r.value = kInf;
    return r;
}

} // namespace lifespan
