#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "field.hpp"
#include "profiles.hpp"
#include "radial.hpp"

namespace lifespan {

namespace detail {

// Point-sampled Gaussian weights normalised to unit sum over the infinite lattice.
inline std::vector<double> heat_weights(double t, double h, int n) {
    const int full = static_cast<int>(std::ceil(12.0 * std::sqrt(t) / h)) + 1;
    std::vector<double> w(static_cast<std::size_t>(full) + 1);
    double total = 0.0;
    for (int k = 0; k <= full; ++k) {
        const double x = k * h;
        w[k] = std::exp(-x * x / (4.0 * t));
        total += k == 0 ? w[k] : 2.0 * w[k];
    }
    for (double& v : w) v /= total;
    w.resize(static_cast<std::size_t>(std::min(full, n - 1)) + 1);
    return w;
}

inline void convolve_axis(std::vector<double>& values, const Grid& g, int axis, const std::vector<double>& w) {
    const int n = g.n;
    const std::size_t stride = g.stride(axis);
    const std::size_t block = stride * static_cast<std::size_t>(n);
    const int K = static_cast<int>(w.size()) - 1;
    std::vector<double> line(n), out(n);
    for (std::size_t base = 0; base < values.size(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t start = base + off;
            bool any = false;
            for (int i = 0; i < n; ++i) {
                line[i] = values[start + i * stride];
                any = any || line[i] != 0.0;
            }
            if (!any) continue;
            for (int i = 0; i < n; ++i) {
                double s = w[0] * line[i];
                const int kmax = std::min(K, std::max(i, n - 1 - i));
                for (int k = 1; k <= kmax; ++k) {
                    double pair = 0.0;
                    if (i - k >= 0) pair += line[i - k];
                    if (i + k < n) pair += line[i + k];
                    s += w[k] * pair;
                }
                out[i] = s;
            }
            for (int i = 0; i < n; ++i) values[start + i * stride] = out[i];
        }
    }
}

inline std::size_t reflect_index(const Grid& g, std::size_t flat, int axis) {
    auto idx = g.index(flat);
    idx[axis] = g.n - 1 - idx[axis];
    return g.flat(idx);
}

inline double antisymmetry_defect(const Field& f, int m) {
    double d = 0.0;
    for (int a = 0; a < m; ++a)
        for (std::size_t i = 0; i < f.values.size(); ++i)
            d = std::max(d, std::abs(f.values[i] + f.values[reflect_index(f.grid, i, a)]));
    return d;
}

inline void antisymmetrize(Field& f, int m) {
    for (int a = 0; a < m; ++a)
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const std::size_t j = reflect_index(f.grid, i, a);
            if (j < i) continue;
            const double v = 0.5 * (f.values[i] - f.values[j]);
            f.values[i] = v;
            f.values[j] = -v;
        }
}

} // namespace detail

inline double resolution_floor(const Grid& g) { return 0.25 * g.h * g.h; }

inline Field heat_step(const Field& field, double t) {
    if (!(t > 0.0)) fail(ErrorKind::InvalidArgument, "heat_step needs t > 0");
    const Grid& g = field.grid;
    if (std::sqrt(t) < 0.5 * g.h) fail(ErrorKind::KernelUnderresolved, "sqrt(t) below half a cell");
    Field out = field;
    const auto w = detail::heat_weights(t, g.h, g.n);
    for (int axis = 0; axis < g.dim; ++axis) detail::convolve_axis(out.values, g, axis, w);
    return out;
}

inline Field sector_heat_step(const Field& field, double t, int m) {
    if (m < 1 || m > field.grid.dim) fail(ErrorKind::InvalidArgument, "sector index out of range");
    const double scale = std::max(field.max_abs(), 1e-300);
    if (detail::antisymmetry_defect(field, m) > 1e-12 * scale)
        fail(ErrorKind::SymmetryViolation, "field is not antisymmetric in the sector axes");
    Field out = heat_step(field, t);
    detail::antisymmetrize(out, m);
    out.antisymmetry_axes = m;
    return out;
}

// Dispatch on the antisymmetry carried by the field.
inline Field semigroup_step(const Field& field, double t) {
    return field.antisymmetry_axes > 0 ? sector_heat_step(field, t, field.antisymmetry_axes) : heat_step(field, t);
}

inline Field heat_of_profile(const Profile& p, double t, const Grid& g) {
    if (auto c = std::get_if<Constant>(&p.shape)) return Field(g, p.lambda * c->c);
    if (auto b = std::get_if<BoundedBump>(&p.shape)) {
        const double s2 = b->width * b->width + 4.0 * t;
        const double amp = b->amplitude * std::pow(b->width * b->width / s2, 0.5 * g.dim);
        return sample_profile(Profile{BoundedBump{amp, std::sqrt(s2)}, p.lambda}, g);
    }
    if (auto d = std::get_if<DiracApprox>(&p.shape))
        return sample_profile(Profile{DiracApprox{d->mass, d->width + t}, p.lambda}, g);
    return semigroup_step(sample_profile(p, g), t);
}

// ||e^{t Delta}(omega |x|^{-gamma})||_infinity at t = 1 (r = inf) or its L^r variant for radial omega.
struct SupConstant {
    double value = 0.0;
    Point argmax{0.0, 0.0, 0.0};
};

namespace detail {

inline double nonradial_heat_of_power(int dim, double gamma, const AngularPart& omega, const Point& x) {
    const auto& rule = gl8();
    std::vector<std::pair<Point, double>> dirs;
    if (dim == 2) {
        const int panels = 16;
        for (int p = 0; p < panels; ++p)
            for (const auto& [u, w] : rule) {
                const double th = 2.0 * std::numbers::pi * (p + u) / panels;
                dirs.push_back({Point{std::cos(th), std::sin(th), 0.0}, w * 2.0 * std::numbers::pi / panels});
            }
    } else {
        const int tp = 12, pp = 48;
        for (int p = 0; p < tp; ++p)
            for (const auto& [u, w] : rule) {
                const double th = std::numbers::pi * (p + u) / tp;
                for (int k = 0; k < pp; ++k) {
                    const double ph = 2.0 * std::numbers::pi * (k + 0.5) / pp;
                    dirs.push_back({Point{std::cos(th), std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph)},
                                    w * std::numbers::pi / tp * std::sin(th) * 2.0 * std::numbers::pi / pp});
                }
            }
    }
    for (auto& [d, w] : dirs) w *= omega(d, dim);
    auto integrand = [&](double s) {
        double a = 0.0;
        for (const auto& [d, w] : dirs) {
            double r2 = 0.0;
            for (int j = 0; j < dim; ++j) r2 += (x[j] - s * d[j]) * (x[j] - s * d[j]);
            a += w * std::exp(-0.25 * r2);
        }
        return std::pow(s, dim - 1 - gamma) * a;
    };
    const double rho = radius(x, dim);
    return std::pow(4.0 * std::numbers::pi, -0.5 * dim) * radial::integrate_pieces(integrand, {rho}, rho + 14.0);
}

} // namespace detail

inline SupConstant scaled_sup_constant(double gamma, const AngularPart& omega, int dim, double r = kInf) {
    if (!(gamma > 0.0) || gamma >= dim) fail(ErrorKind::InvalidArgument, "scaled_sup_constant needs 0 < gamma < N");
    const bool radial_omega = omega.kind == AngularPart::Kind::constant_one ||
                              (dim == 1 && omega.kind == AngularPart::Kind::first_coordinate_ratio);
    if (!std::isinf(r)) {
        if (!radial_omega) fail(ErrorKind::InvalidArgument, "finite r needs a radial angular part");
        if (gamma * r <= dim) fail(ErrorKind::IntegralDiverges, "e^Delta|x|^-gamma is not in L^r for gamma r <= N");
        const double rho_max = 60.0;
        auto F = [&](double rho) { return radial::heat_of_power(dim, gamma, rho); };
        auto g = [&](double rho) { return std::pow(rho, dim - 1) * std::pow(F(rho), r); };
        double integral = radial::integrate_pieces(g, {1.0, 4.0, 16.0}, rho_max);
        const double c = F(rho_max) * std::pow(rho_max, gamma);
        integral += std::pow(c, r) * std::pow(rho_max, dim - gamma * r) / (gamma * r - dim);
        return {std::pow(unit_sphere_area(dim) * integral, 1.0 / r), Point{0.0, 0.0, 0.0}};
    }
    if (radial_omega) {
        auto [v, arg] = radial::radial_sup([&](double rho) { return radial::heat_of_power(dim, gamma, rho); }, 8.0, 40);
        return {v, Point{arg, 0.0, 0.0}};
    }
    SupConstant best;
    std::vector<Point> directions{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {std::sqrt(0.5), std::sqrt(0.5), 0.0}};
    if (dim == 3) directions.push_back({std::sqrt(1.0 / 3.0), std::sqrt(1.0 / 3.0), std::sqrt(1.0 / 3.0)});
    for (const Point& e : directions) {
        auto g = [&](double rho) {
            Point x{rho * e[0], rho * e[1], rho * e[2]};
            return detail::nonradial_heat_of_power(dim, gamma, omega, x);
        };
        auto [v, arg] = radial::radial_sup(g, 8.0, 24);
        if (v > best.value) best = {v, Point{arg * e[0], arg * e[1], arg * e[2]}};
    }
    return best;
}

// ||e^{Delta_m}(omega psi0)||_infinity over the sector.
inline double sector_sup_constant(int m, double gamma, const AngularPart& omega, int dim) {
    if (m < 1 || m > dim) fail(ErrorKind::InvalidArgument, "sector index out of range");
    if (!(gamma > 0.0) || gamma >= dim) fail(ErrorKind::InvalidArgument, "sector constant needs 0 < gamma < N");
    if (dim == 1) {
        const double c = c_m_gamma(1, gamma);
        auto v = [&](double x) {
            if (x <= 0.0) return 0.0;
            auto f = [&](double y) {
                if (y <= 0.0) return 0.0;
                return std::exp(-0.25 * (x - y) * (x - y)) * (-std::expm1(-x * y)) * c * std::pow(y, -gamma - 1.0);
            };
            return radial::integrate_pieces(f, {x}, x + 14.0) / std::sqrt(4.0 * std::numbers::pi);
        };
        return radial::radial_sup(v, 8.0, 60).first;
    }
    const int n = dim == 2 ? 192 : 64;
    const Grid g = make_grid(dim, 12.0, n);
    Profile psi{SectorPsi0{m, gamma, omega, 11.5, 1.0}, 1.0};
    return sector_heat_step(sample_profile(psi, g), 1.0, m).max_abs();
}

} // namespace lifespan
