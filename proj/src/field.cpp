// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "lamlab/construct.hpp"

namespace lamlab {

Field::Field(Polygon domain, FieldInfo info) : domain_(std::move(domain)), info_(std::move(info)) { info_.lipschitz = 0.0; }

Field::Field(Polygon domain, TopLayout top, std::vector<PlanNode> plan, FieldInfo info)
    : domain_(std::move(domain)), zero_(false), top_(top), plan_(std::move(plan)), info_(std::move(info)) {
    info_.plan_nodes = plan_.size();
}

namespace {

// Sawtooth on one axis: slope_lo on [0, split], slope_hi on [split, period], zero at both ends.
double saw(double u, double split, double period, double lo, double hi) {
    return u <= split ? lo * u : hi * (u - period);
}

void set_entry(Mat2& m, int row, int col, double v) {
    if (row == 1) {
        (col == 1 ? m.a11 : m.a12) = v;
    } else {
        (col == 1 ? m.a21 : m.a22) = v;
    }
}

} // namespace

Sample Field::sample_uncut(const Vec2& x) const {
    Sample s;
    if (zero_) return s;
    Vec2 u;
    int cell[3] = {0, 0, 0};
    for (int l = 1; l <= 2; ++l) {
        const double per = top_.period[l];
        const double rel = x[l] - top_.origin[l];
        double ul = rel - per * std::floor(rel / per);
        ul = std::clamp(ul, 0.0, per);
        u[l] = ul;
        const double sp = top_.split[l];
        cell[l] = ul <= sp ? 0 : 1;
        s.value[l] = saw(ul, sp, per, top_.slope_lo[l], top_.slope_hi[l]);
        double m = std::min(ul, per - ul);
        if (sp < per) m = std::min(m, std::abs(ul - sp));
        s.margin = std::min(s.margin, m);
    }
    s.grad = Mat2::diag({cell[1] == 0 ? top_.slope_lo.x : top_.slope_hi.x, cell[2] == 0 ? top_.slope_lo.y : top_.slope_hi.y});
    const int node = top_.cell_plan[cell[1]][cell[2]];
    if (node >= 0 && plan_[static_cast<std::size_t>(node)].refined) {
        const Vec2 cu{cell[1] == 0 ? u.x : u.x - top_.split.x, cell[2] == 0 ? u.y : u.y - top_.split.y};
        refine(node, cu, s);
    }
    return s;
}

void Field::refine(int node, const Vec2& u, Sample& s) const {
    const PlanNode& n = plan_[static_cast<std::size_t>(node)];
    const StripHit hit = eval_strip(n.strip, n.size, u);
    const int d = n.strip.dir;
    s.value[d] += hit.dev;
    s.margin = std::min(s.margin, hit.margin);
    if (hit.on_tent) {
        set_entry(s.grad, d, d, (hit.phase == 0 ? n.strip.first : n.strip.second)[d]);
        const int child = hit.phase == 0 ? n.first : n.second;
        if (hit.inner && child >= 0 && plan_[static_cast<std::size_t>(child)].refined) {
            refine(child, hit.child_u, s);
        }
    } else {
        set_entry(s.grad, d, 3 - d, hit.perp_sign);
    }
}

Sample Field::sample(const Vec2& x) const {
    Sample s = sample_uncut(x);
    const BoundaryDistance bd = domain_.boundary_distance(x);
    const double lip = info_.lipschitz + 1.0;
    for (int i = 1; i <= 2; ++i) {
        const double vi = s.value[i];
        if (bd.dist < vi) {
            s.value[i] = bd.dist;
            set_entry(s.grad, i, 1, bd.grad.x);
            set_entry(s.grad, i, 2, bd.grad.y);
            s.margin = std::min(s.margin, bd.margin);
        }
        if (!zero_) s.margin = std::min(s.margin, std::abs(vi - bd.dist) / lip);
    }
    return s;
}

double plan_lipschitz(const std::vector<PlanNode>& plan) {
    double m1 = 1.0, m2 = 1.0;
    for (const auto& n : plan) {
        m1 = std::max(m1, std::abs(n.value.d1));
        m2 = std::max(m2, std::abs(n.value.d2));
        if (n.refined) {
            for (const DiagMat* v : {&n.strip.first, &n.strip.second}) {
                m1 = std::max(m1, std::abs(v->d1));
                m2 = std::max(m2, std::abs(v->d2));
            }
        }
    }
    // Off-diagonal entries come only from unit-slope cutoffs.
    return std::sqrt(m1 * m1 + m2 * m2 + 2.0);
}

} // namespace lamlab
