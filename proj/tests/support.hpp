// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "lamlab/construct.hpp"
#include "lamlab/lamhull.hpp"

namespace testing {

inline lamlab::BoxSet points(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<lamlab::DiagMatQ> v;
    for (auto [a, b] : pts) v.push_back({a, b});
    return lamlab::BoxSet::from_points(v);
}

inline lamlab::BoxSet square_corners() { return points({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}); }
inline lamlab::BoxSet two_points_e1() { return points({{1, 0}, {-1, 0}}); }
inline lamlab::BoxSet two_points_e2() { return points({{0, -1}, {0, 1}}); }
// Rectangle top where two of the four corners are not in K and need a further laminate.
inline lamlab::BoxSet skew_rectangle() { return points({{2, 1}, {2, -3}, {-1, 2}, {-1, -1}}); }

struct FdResult {
    int probed = 0;
    double worst = 0.0;
};

// Central differences of the value at points whose reported margin leaves room for the stencil.
template <class F>
FdResult fd_audit(const F& field, std::mt19937& rng, double x0, double y0, double x1, double y1, int samples,
                  double min_step) {
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    FdResult r;
    for (int i = 0; i < samples; ++i) {
        const lamlab::Vec2 x{ux(rng), uy(rng)};
        const lamlab::Sample s = field.sample(x);
        const double d = std::min(0.25 * s.margin, 1e-3);
        if (!(d > min_step)) continue;
        ++r.probed;
        const lamlab::Vec2 px = field.sample({x.x + d, x.y}).value, mx = field.sample({x.x - d, x.y}).value;
        const lamlab::Vec2 py = field.sample({x.x, x.y + d}).value, my = field.sample({x.x, x.y - d}).value;
        const double g[4] = {(px.x - mx.x) / (2 * d), (py.x - my.x) / (2 * d), (px.y - mx.y) / (2 * d),
                             (py.y - my.y) / (2 * d)};
        const double e[4] = {s.grad.a11, s.grad.a12, s.grad.a21, s.grad.a22};
        for (int k = 0; k < 4; ++k) {
            r.worst = std::max(r.worst, std::abs(g[k] - e[k]) / std::max(1.0, std::abs(e[k])));
        }
    }
    return r;
}

} // namespace testing
