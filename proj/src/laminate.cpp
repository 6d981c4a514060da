// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "lamlab/construct.hpp"
#include "lamlab/errors.hpp"

namespace lamlab {

Rect::Rect(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (!(a < b && c < d)) {
        throw ParameterError("rectangle needs a < b and c < d");
    }
}

int chi(double mu, double tau) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw ParameterError("chi: mu must lie in (0, 1)");
    }
    // Representative of tau mod 1 in (0, 1].
    double t = tau - std::floor(tau);
    if (t == 0.0) t = 1.0;
    return t <= mu ? 1 : 0;
}

namespace {

double period_of(const StripCell& s, const Vec2& size) { return size[s.dir] / s.k; }

// Integral of min(2 r t, D) over t in [0, len].
double capped_tent_integral(double r, double len, double d) {
    const double full = 2.0 * r * len;
    if (full <= d) return r * len * len;
    const double ts = d / (2.0 * r);
    return r * ts * ts + d * (len - ts);
}

} // namespace

double strip_peak(const StripCell& s, const Vec2& size) { return s.rise() * s.mu * period_of(s, size); }

Vec2 strip_child_size(const StripCell& s, const Vec2& size, int phase) {
    const int e = 3 - s.dir;
    const double period = period_of(s, size);
    const double split = s.mu * period;
    Vec2 out;
    out[s.dir] = phase == 0 ? split : period - split;
    out[e] = size[e] - 2.0 * strip_peak(s, size);
    return out;
}

StripHit eval_strip(const StripCell& s, const Vec2& size, const Vec2& u) {
    const int d = s.dir;
    const int e = 3 - d;
    const double period = period_of(s, size);
    const double split = s.mu * period;
    const double rise = s.rise();
    const double fall = s.fall();
    const double peak = rise * split;

    double p = std::floor(u[d] / period);
    p = std::clamp(p, 0.0, double(s.k - 1));
    const double t0 = p * period;
    const double tl = std::clamp(u[d] - t0, 0.0, period);

    StripHit hit;
    double g, slope;
    if (tl <= split) {
        hit.phase = 0;
        g = rise * tl;
        slope = rise;
    } else {
        hit.phase = 1;
        g = -fall * (period - tl);
        slope = fall;
    }
    const double perp = size[e];
    const double sv = u[e];
    const double below = sv, above = perp - sv;
    const double dp = std::min(below, above);
    if (g <= dp) {
        hit.dev = g;
        hit.on_tent = true;
    } else {
        hit.dev = dp;
        hit.on_tent = false;
        hit.perp_sign = below <= above ? 1 : -1;
    }
    double m = std::min({tl, period - tl, std::abs(tl - split), std::abs(g - dp) / (std::abs(slope) + 1.0),
                         std::abs(sv - 0.5 * perp), std::abs(below), std::abs(above), std::abs(dp - peak)});
    hit.margin = m;
    if (hit.on_tent && dp >= peak && perp > 2.0 * peak) {
        hit.inner = true;
        hit.child_u[d] = hit.phase == 0 ? tl : tl - split;
        hit.child_u[e] = sv - peak;
    }
    return hit;
}

double strip_bad_measure(const StripCell& s, const Vec2& size) {
    const double period = period_of(s, size);
    const double split = s.mu * period;
    const double perp = size[3 - s.dir];
    const double a = capped_tent_integral(s.rise(), split, perp);
    const double b = capped_tent_integral(-s.fall(), period - split, perp);
    return s.k * (a + b);
}

StripLaminate::StripLaminate(const Rect& q, const Vec2& v_at_corner, const DiagMat& w, const StripCell& cell, double lambda)
    : q_(q), v0_(v_at_corner), w_(w), cell_(cell), lambda_(lambda) {}

Vec2 StripLaminate::base(const Vec2& x) const {
    return {v0_.x + w_.d1 * (x.x - q_.a), v0_.y + w_.d2 * (x.y - q_.c)};
}

Sample StripLaminate::sample(const Vec2& x) const {
    Sample s;
    s.value = base(x);
    s.grad = Mat2::diag(w_);
    const Vec2 size{q_.delta1(), q_.delta2()};
    const Vec2 u{x.x - q_.a, x.y - q_.c};
    const StripHit hit = eval_strip(cell_, size, u);
    const int d = cell_.dir;
    s.value[d] += hit.dev;
    if (hit.on_tent) {
        const double gd = (hit.phase == 0 ? cell_.first : cell_.second)[d];
        (d == 1 ? s.grad.a11 : s.grad.a22) = gd;
    } else {
        (d == 1 ? s.grad.a12 : s.grad.a21) = hit.perp_sign;
    }
    s.margin = hit.margin;
    return s;
}

double StripLaminate::exact_bad_measure() const { return strip_bad_measure(cell_, {q_.delta1(), q_.delta2()}); }

double StripLaminate::bad_measure_bound() const {
    const double side = q_.side(cell_.dir);
    return norm(cell_.first - cell_.second) * cell_.mu * side * side / cell_.k;
}

double StripLaminate::gradient_bound() const { return 2.0 * (1.0 + norm(w_)); }

double StripLaminate::lipschitz_bound() const {
    return std::max({norm(cell_.first), norm(cell_.second), std::sqrt(norm(w_) * norm(w_) + 1.0)});
}

StripLaminate simple_laminate(const Rect& q, const Vec2& v0, const DiagMat& w, const DiagMat& f, const DiagMat& g,
                              double lambda, int k) {
    if (k < 1) {
        throw ParameterError("simple_laminate: k must be at least 1");
    }
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ParameterError("simple_laminate: lambda must lie in (0, 1)");
    }
    const int dir = direction_of(rank_one_direction(f, g));
    if (dir == 0) {
        throw ParameterError("simple_laminate: F and G are not rank-one compatible in a single direction");
    }
    const DiagMat comb = convex_combination(f, g, lambda);
    const double scale = std::max({1.0, norm(f), norm(g)});
    if (norm(comb - w) > 1e-12 * scale) {
        throw ParameterError("simple_laminate: W is not lambda F + (1 - lambda) G");
    }
    StripCell cell;
    cell.dir = dir;
    cell.k = k;
    // W's coordinate in dir comes from the exact combination; the other one is shared by F and G.
    cell.w = w;
    cell.w[dir] = comb[dir];
    if (f[dir] > g[dir]) {
        cell.first = f;
        cell.second = g;
        cell.mu = lambda;
    } else {
        cell.first = g;
        cell.second = f;
        cell.mu = 1.0 - lambda;
    }
    return StripLaminate(q, v0, cell.w, cell, lambda);
}

} // namespace lamlab
