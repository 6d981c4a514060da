// SPDX-License-Identifier: Apache-2.0
#include "lamlab/lamhull.hpp"

#include <algorithm>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

BigInt grid_index(const Rational& v, const Rational& step) {
    const Rational q = v / step;
    if (boost::multiprecision::denominator(q) != 1) {
        throw ParameterError("grid oracle: coordinate " + to_string(v) + " is not on the grid");
    }
    return boost::multiprecision::numerator(q);
}

void paint(GridPointSet& g, const BoxSet& s) {
    for (const auto& b : s.boxes) {
        BigInt x0 = grid_index(b.x_lo, g.step) - g.ix0;
        BigInt x1 = grid_index(b.x_hi, g.step) - g.ix0;
        BigInt y0 = grid_index(b.y_lo, g.step) - g.iy0;
        BigInt y1 = grid_index(b.y_hi, g.step) - g.iy0;
        const BigInt nx = g.nx, ny = g.ny;
        x0 = std::max<BigInt>(x0, 0);
        y0 = std::max<BigInt>(y0, 0);
        x1 = std::min<BigInt>(x1, nx - 1);
        y1 = std::min<BigInt>(y1, ny - 1);
        if (x0 > x1 || y0 > y1) continue;
        for (auto iy = y0.convert_to<std::size_t>(); iy <= y1.convert_to<std::size_t>(); ++iy) {
            for (auto ix = x0.convert_to<std::size_t>(); ix <= x1.convert_to<std::size_t>(); ++ix) {
                g.mask[iy * g.nx + ix] = 1;
            }
        }
    }
}

} // namespace

DiagMatQ GridPointSet::point(std::size_t ix, std::size_t iy) const {
    return {Rational(ix0 + BigInt(ix)) * step, Rational(iy0 + BigInt(iy)) * step};
}

std::size_t GridPointSet::count() const {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), static_cast<unsigned char>(1)));
}

std::vector<DiagMatQ> GridPointSet::points() const {
    std::vector<DiagMatQ> out;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            if (test(ix, iy)) out.push_back(point(ix, iy));
        }
    }
    return out;
}

GridPointSet grid_hull_oracle(const BoxSet& k, const Rational& grid_step, int i) {
    if (grid_step <= 0) {
        throw ParameterError("grid oracle: step must be positive");
    }
    GridPointSet g;
    g.step = grid_step;
    if (k.boxes.empty()) return g;
    BigInt x0 = grid_index(k.boxes[0].x_lo, grid_step), x1 = grid_index(k.boxes[0].x_hi, grid_step);
    BigInt y0 = grid_index(k.boxes[0].y_lo, grid_step), y1 = grid_index(k.boxes[0].y_hi, grid_step);
    for (const auto& b : k.boxes) {
        x0 = std::min(x0, grid_index(b.x_lo, grid_step));
        x1 = std::max(x1, grid_index(b.x_hi, grid_step));
        y0 = std::min(y0, grid_index(b.y_lo, grid_step));
        y1 = std::max(y1, grid_index(b.y_hi, grid_step));
    }
    g.ix0 = x0;
    g.iy0 = y0;
    g.nx = (x1 - x0 + 1).convert_to<std::size_t>();
    g.ny = (y1 - y0 + 1).convert_to<std::size_t>();
    if (g.nx * g.ny > (std::size_t{1} << 28)) {
        throw ParameterError("grid oracle: grid too large");
    }
    g.mask.assign(g.nx * g.ny, 0);
    paint(g, k);

    for (int it = 0; it < i; ++it) {
        std::vector<unsigned char> next = g.mask;
        for (std::size_t iy = 0; iy < g.ny; ++iy) {
            std::size_t lo = g.nx, hi = 0;
            for (std::size_t ix = 0; ix < g.nx; ++ix) {
                if (g.test(ix, iy)) {
                    lo = std::min(lo, ix);
                    hi = ix;
                }
            }
            for (std::size_t ix = lo; ix <= hi && lo < g.nx; ++ix) next[iy * g.nx + ix] = 1;
        }
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            std::size_t lo = g.ny, hi = 0;
            for (std::size_t iy = 0; iy < g.ny; ++iy) {
                if (g.test(ix, iy)) {
                    lo = std::min(lo, iy);
                    hi = iy;
                }
            }
            for (std::size_t iy = lo; iy <= hi && lo < g.ny; ++iy) next[iy * g.nx + ix] = 1;
        }
        g.mask = std::move(next);
    }
    return g;
}

GridPointSet grid_restriction(const BoxSet& s, const GridPointSet& like) {
    GridPointSet g;
    g.step = like.step;
    g.ix0 = like.ix0;
    g.iy0 = like.iy0;
    g.nx = like.nx;
    g.ny = like.ny;
    g.mask.assign(g.nx * g.ny, 0);
    // Hull boxes need not be grid aligned in general; snap inward.
    for (const auto& b : s.boxes) {
        using boost::multiprecision::numerator;
        using boost::multiprecision::denominator;
        auto ceil_idx = [&](const Rational& v) {
            const Rational q = v / g.step;
            BigInt n = numerator(q), d = denominator(q);
            BigInt f = n / d;
            if (f * d != n && n > 0) f += 1;
            return f;
        };
        auto floor_idx = [&](const Rational& v) {
            const Rational q = v / g.step;
            BigInt n = numerator(q), d = denominator(q);
            BigInt f = n / d;
            if (f * d != n && n < 0) f -= 1;
            return f;
        };
        BigInt x0 = std::max<BigInt>(ceil_idx(b.x_lo) - g.ix0, 0);
        BigInt y0 = std::max<BigInt>(ceil_idx(b.y_lo) - g.iy0, 0);
        BigInt x1 = std::min<BigInt>(floor_idx(b.x_hi) - g.ix0, BigInt(g.nx) - 1);
        BigInt y1 = std::min<BigInt>(floor_idx(b.y_hi) - g.iy0, BigInt(g.ny) - 1);
        if (x0 > x1 || y0 > y1) continue;
        for (auto iy = y0.convert_to<std::size_t>(); iy <= y1.convert_to<std::size_t>(); ++iy) {
            for (auto ix = x0.convert_to<std::size_t>(); ix <= x1.convert_to<std::size_t>(); ++ix) {
                g.mask[iy * g.nx + ix] = 1;
            }
        }
    }
    return g;
}

} // namespace lamlab
