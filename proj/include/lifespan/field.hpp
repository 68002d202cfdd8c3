#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "error.hpp"

namespace lifespan {

using Point = std::array<double, 3>;

inline double radius(const Point& x, int dim) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) s += x[j] * x[j];
    return std::sqrt(s);
}

struct Grid {
    int dim = 1;
    double half_width = 1.0;
    int n = 16;
    double h = 0.125;

    std::size_t size() const {
        std::size_t s = 1;
        for (int j = 0; j < dim; ++j) s *= static_cast<std::size_t>(n);
        return s;
    }
    double coord(int i) const { return -half_width + (i + 0.5) * h; }
    double cell_volume() const { return std::pow(h, dim); }

    std::array<int, 3> index(std::size_t flat) const {
        std::array<int, 3> idx{0, 0, 0};
        for (int j = dim - 1; j >= 0; --j) {
            idx[j] = static_cast<int>(flat % static_cast<std::size_t>(n));
            flat /= static_cast<std::size_t>(n);
        }
        return idx;
    }
    std::size_t flat(const std::array<int, 3>& idx) const {
        std::size_t f = 0;
        for (int j = 0; j < dim; ++j) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx[j]);
        return f;
    }
    Point point(std::size_t flat_index) const {
        auto idx = index(flat_index);
        Point x{0.0, 0.0, 0.0};
        for (int j = 0; j < dim; ++j) x[j] = coord(idx[j]);
        return x;
    }
    std::size_t stride(int axis) const {
        std::size_t s = 1;
        for (int j = axis + 1; j < dim; ++j) s *= static_cast<std::size_t>(n);
        return s;
    }
    bool operator==(const Grid& o) const {
        return dim == o.dim && n == o.n && half_width == o.half_width;
    }
};

inline Grid make_grid(int dimension, double half_width, int points_per_axis) {
    if (dimension < 1 || dimension > 3) fail(ErrorKind::UnsupportedDimension, "dimension must be 1, 2 or 3");
    if (!(half_width > 0.0)) fail(ErrorKind::InvalidArgument, "half_width must be positive");
    if (points_per_axis % 2 != 0) fail(ErrorKind::OddPointCount, "points_per_axis must be even");
    if (points_per_axis < 16) fail(ErrorKind::InvalidArgument, "points_per_axis must be at least 16");
    Grid g;
    g.dim = dimension;
    g.half_width = half_width;
    g.n = points_per_axis;
    g.h = 2.0 * half_width / points_per_axis;
    return g;
}

struct Field {
    Grid grid;
    std::vector<double> values;
    int antisymmetry_axes = 0;

    Field() = default;
    Field(const Grid& g, double fill = 0.0, int m = 0) : grid(g), values(g.size(), fill), antisymmetry_axes(m) {}

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

struct NormSpec {
    double q = std::numeric_limits<double>::infinity();
    double gamma = 0.0;
};

namespace detail {

inline const std::vector<std::pair<double, double>>& gl8() {
    static const std::vector<std::pair<double, double>> rule = [] {
        using G = boost::math::quadrature::gauss<double, 8>;
        std::vector<std::pair<double, double>> r;
        const auto& a = G::abscissa();
        const auto& w = G::weights();
        for (std::size_t i = 0; i < a.size(); ++i) {
            r.emplace_back(0.5 + 0.5 * a[i], 0.5 * w[i]);
            if (a[i] != 0.0) r.emplace_back(0.5 - 0.5 * a[i], 0.5 * w[i]);
        }
        return r;
    }();
    return rule;
}

inline double box_integral_gl(const std::function<double(const Point&)>& f, const Point& lo, double size, int dim) {
    const auto& rule = gl8();
    const std::size_t k = rule.size();
    std::size_t total = 1;
    for (int j = 0; j < dim; ++j) total *= k;
    double sum = 0.0;
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t rem = t;
        Point x{0.0, 0.0, 0.0};
        double w = 1.0;
        for (int j = 0; j < dim; ++j) {
            const auto& [u, wu] = rule[rem % k];
            rem /= k;
            x[j] = lo[j] + u * size;
            w *= wu;
        }
        sum += w * f(x);
    }
    return sum * std::pow(size, dim);
}

inline bool origin_is_corner(const Point& lo, double size, int dim) {
    const double tol = 1e-9 * size;
    for (int j = 0; j < dim; ++j)
        if (std::abs(lo[j]) > tol && std::abs(lo[j] + size) > tol) return false;
    return true;
}

} // namespace detail

// Integral of f over the cube [lo, lo+size]^dim. Cubes with a corner at the origin are
// refined geometrically towards that corner so integrable point singularities converge.
inline double box_integral(const std::function<double(const Point&)>& f, const Point& lo, double size, int dim) {
    if (!detail::origin_is_corner(lo, size, dim)) return detail::box_integral_gl(f, lo, size, dim);
    const int depth = dim == 1 ? 40 : (dim == 2 ? 24 : 16);
    // Snap the corner onto the origin exactly; rounding in cell coordinates would otherwise
    // steer the refinement away from the singularity.
    std::array<bool, 3> low_side{};
    Point cur = lo;
    for (int j = 0; j < dim; ++j) {
        low_side[j] = std::abs(lo[j]) <= 1e-9 * size;
        cur[j] = low_side[j] ? 0.0 : -size;
    }
    double sum = 0.0;
    double s = size;
    for (int level = 0; level < depth; ++level) {
        const double half = 0.5 * s;
        Point next = cur;
        for (int j = 0; j < dim; ++j) next[j] = low_side[j] ? cur[j] : cur[j] + half;
        for (int c = 0; c < (1 << dim); ++c) {
            Point sub = cur;
            bool is_origin_child = true;
            for (int j = 0; j < dim; ++j) {
                const bool upper = (c >> j) & 1;
                sub[j] = cur[j] + (upper ? half : 0.0);
                if (sub[j] != next[j]) is_origin_child = false;
            }
            if (!is_origin_child) sum += detail::box_integral_gl(f, sub, half, dim);
        }
        cur = next;
        s = half;
    }
    return sum + detail::box_integral_gl(f, cur, s, dim);
}

inline Point cell_low_corner(const Grid& g, std::size_t flat_index) {
    Point x = g.point(flat_index);
    for (int j = 0; j < g.dim; ++j) x[j] -= 0.5 * g.h;
    return x;
}

inline bool cell_touches_origin(const Grid& g, std::size_t flat_index) {
    return detail::origin_is_corner(cell_low_corner(g, flat_index), g.h, g.dim);
}

inline double cell_mean_of_power(const Grid& g, std::size_t flat_index, double p) {
    auto f = [&](const Point& x) { return std::pow(radius(x, g.dim), p); };
    return box_integral(f, cell_low_corner(g, flat_index), g.h, g.dim) / g.cell_volume();
}

// Per-cell weight |x|^p, cell-averaged on cells within 2h of the origin.
inline std::vector<double> power_weights(const Grid& g, double p) {
    std::vector<double> w(g.size(), 1.0);
    if (p == 0.0) return w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double r = radius(g.point(i), g.dim);
        w[i] = r <= 2.0 * g.h ? cell_mean_of_power(g, i, p) : std::pow(r, p);
    }
    return w;
}

inline double norm(const Field& f, const NormSpec& spec) {
    if (!(spec.q >= 1.0)) fail(ErrorKind::InvalidArgument, "norm exponent q must be >= 1");
    if (!(spec.gamma >= 0.0)) fail(ErrorKind::InvalidArgument, "weight power must be >= 0");
    const Grid& g = f.grid;
    const bool weighted = spec.gamma != 0.0;
    std::vector<double> w;
    if (weighted) w = power_weights(g, spec.gamma);
    if (std::isinf(spec.q)) {
        double m = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i)
            m = std::max(m, (weighted ? w[i] : 1.0) * std::abs(f.values[i]));
        return m;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double v = (weighted ? w[i] : 1.0) * std::abs(f.values[i]);
        if (v != 0.0) s += std::pow(v, spec.q);
    }
    return std::pow(s * g.cell_volume(), 1.0 / spec.q);
}

} // namespace lifespan
