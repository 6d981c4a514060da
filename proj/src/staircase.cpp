// SPDX-License-Identifier: Apache-2.0
#include "lamlab/lamhull.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

// Midpoint between v and the nearest other value on the axis in direction `side` (+1 or -1),
// or v + side when there is none.
Rational toward_neighbour(const std::vector<DiagMatQ>& w, int axis, const Rational& v, int side, std::size_t skip) {
    bool found = false;
    Rational best;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == skip) continue;
        const Rational& c = w[i][axis];
        if ((side > 0 && c > v) || (side < 0 && c < v)) {
            if (!found || (side > 0 ? c < best : c > best)) best = c;
            found = true;
        }
    }
    if (found) return (v + best) / 2;
    return v + side;
}

} // namespace

BoxSet staircase(int n) {
    if (n < 1) {
        throw ParameterError("staircase: n must be at least 1");
    }
    std::vector<DiagMatQ> w;
    if (n == 1) {
        w = {{0, -1}, {0, 1}};
    } else {
        w = {{0, -1}, {1, 1}, {-1, 1}};
        // Step s moves W_s a little toward W_{s-2} (even s, second entry) or W_{s-3} (odd s,
        // first entry) and appends W_{s+1} a little past the old W_s on the same line. "A little"
        // means halfway to the nearest coordinate already in use, so the new segment crosses no
        // line through another point and no shortcut to 0 appears.
        for (int s = 2; s < n; ++s) {
            const auto u = static_cast<std::size_t>(s);
            const DiagMatQ old = w[u];
            const int axis = s % 2 == 0 ? 2 : 1;
            const DiagMatQ& target = w[u - (s % 2 == 0 ? 2 : 3)];
            const int side = target[axis] < old[axis] ? -1 : 1;
            w[u][axis] = toward_neighbour(w, axis, old[axis], side, u);
            DiagMatQ next = old;
            next[axis] = toward_neighbour(w, axis, old[axis], -side, u);
            w.push_back(next);
        }
    }
    BoxSet k = BoxSet::from_points(w);
    const Level lv = lamination_level(k, n);
    if (!lv.is_finite() || lv.value() != n) {
        throw std::logic_error("staircase(" + std::to_string(n) + ") does not have the expected level");
    }
    return k;
}

} // namespace lamlab
