// SPDX-License-Identifier: Apache-2.0
#include "lamlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double signed_area(const std::vector<Vec2>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    if (d1 == 0 && on_segment(a, c, d)) return true;
    if (d2 == 0 && on_segment(b, c, d)) return true;
    if (d3 == 0 && on_segment(c, a, b)) return true;
    if (d4 == 0 && on_segment(d, a, b)) return true;
    return false;
}

} // namespace

Polygon::Polygon(std::vector<Vec2> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) {
        throw ParameterError("polygon needs at least three vertices");
    }
    for (const auto& p : v_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ParameterError("polygon vertex is not finite");
    }
    const double a = signed_area(v_);
    if (!(std::abs(a) > 0.0)) {
        throw ParameterError("polygon has zero area");
    }
    if (a < 0) std::reverse(v_.begin(), v_.end());
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Adjacent edges share a vertex by construction.
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(v_[i], v_[(i + 1) % n], v_[j], v_[(j + 1) % n])) {
                throw ParameterError("polygon is not simple");
            }
        }
    }
    if (n == 4) {
        double x0 = v_[0].x, x1 = v_[0].x, y0 = v_[0].y, y1 = v_[0].y;
        for (const auto& p : v_) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        bool axis = true;
        for (const auto& p : v_) {
            axis = axis && (p.x == x0 || p.x == x1) && (p.y == y0 || p.y == y1);
        }
        for (std::size_t i = 0; i < n && axis; ++i) {
            const Vec2& p = v_[i];
            const Vec2& q = v_[(i + 1) % n];
            axis = (p.x == q.x) != (p.y == q.y);
        }
        if (axis) {
            rect_ = true;
            rx0_ = x0;
            ry0_ = y0;
            rx1_ = x1;
            ry1_ = y1;
        }
    }
}

Polygon Polygon::rectangle(double x0, double y0, double x1, double y1) {
    if (!(x0 < x1 && y0 < y1)) {
        throw ParameterError("rectangle needs x0 < x1 and y0 < y1");
    }
    return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

double Polygon::area() const {
    if (rect_) return (rx1_ - rx0_) * (ry1_ - ry0_);
    return signed_area(v_);
}

double Polygon::perimeter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Vec2& a = v_[i];
        const Vec2& b = v_[(i + 1) % v_.size()];
        s += std::hypot(b.x - a.x, b.y - a.y);
    }
    return s;
}

double Polygon::diameter() const {
    double d = 0.0;
    for (const auto& a : v_) {
        for (const auto& b : v_) d = std::max(d, std::hypot(b.x - a.x, b.y - a.y));
    }
    return d;
}

bool Polygon::contains(const Vec2& p) const {
    if (rect_) return rx0_ <= p.x && p.x <= rx1_ && ry0_ <= p.y && p.y <= ry1_;
    bool inside = false;
    const std::size_t n = v_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = v_[i];
        const Vec2& b = v_[j];
        if (on_segment(p, a, b) && cross(a, b, p) == 0) return true;
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) inside = !inside;
    }
    return inside;
}

BoundaryDistance Polygon::boundary_distance(const Vec2& p) const {
    BoundaryDistance out;
    if (rect_) {
        const double d[4] = {p.x - rx0_, rx1_ - p.x, p.y - ry0_, ry1_ - p.y};
        const Vec2 g[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        int best = 0;
        for (int i = 1; i < 4; ++i) {
            if (d[i] < d[best]) best = i;
        }
        double second = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 4; ++i) {
            if (i != best) second = std::min(second, d[i]);
        }
        out.dist = std::max(0.0, d[best]);
        out.grad = g[best];
        out.margin = std::min(0.5 * (second - d[best]), std::abs(d[best]));
        return out;
    }
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    Vec2 foot;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Vec2& a = v_[i];
        const Vec2& b = v_[(i + 1) % v_.size()];
        const double ex = b.x - a.x, ey = b.y - a.y;
        double t = ((p.x - a.x) * ex + (p.y - a.y) * ey) / (ex * ex + ey * ey);
        t = std::clamp(t, 0.0, 1.0);
        const Vec2 q{a.x + t * ex, a.y + t * ey};
        const double d = std::hypot(p.x - q.x, p.y - q.y);
        if (d < best) {
            second = best;
            best = d;
            foot = q;
        } else if (d < second) {
            second = d;
        }
    }
    out.dist = contains(p) ? best : 0.0;
    if (best > 0) out.grad = {(p.x - foot.x) / best, (p.y - foot.y) / best};
    out.margin = std::min(0.5 * (second - best), best);
    return out;
}

std::optional<std::vector<double>> Polygon::as_rectangle() const {
    if (!rect_) return std::nullopt;
    return std::vector<double>{rx0_, ry0_, rx1_, ry1_};
}

} // namespace lamlab
