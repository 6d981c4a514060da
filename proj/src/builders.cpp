// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <string>

#include "lamlab/construct.hpp"
#include "lamlab/errors.hpp"

namespace lamlab {

void check_admissible(double h, double alpha, const Polygon& domain) {
    if (!(h > 0.0 && h < 1.0)) {
        throw AdmissibilityError("mesh size h = " + std::to_string(h) + " must lie in (0, 1)");
    }
    if (std::pow(h, alpha) > domain.diameter()) {
        throw AdmissibilityError("cell size h^alpha exceeds the domain diameter");
    }
}

namespace {

struct PlanBuilder {
    const WitnessTree& tree;
    const std::vector<int>& ks;
    std::vector<PlanNode> plan;
    std::size_t unresolved = 0;
    int max_stage = 1;

    DiagMat value_of(int id) const { return to_double(tree.node(id).value); }

    int leaf(const DiagMat& v, const Vec2& size, int stage, bool in_sigma) {
        PlanNode n;
        n.value = v;
        n.size = size;
        n.stage = stage;
        n.in_sigma = in_sigma;
        plan.push_back(n);
        return static_cast<int>(plan.size()) - 1;
    }

    int from_tree(int id, const Vec2& size, int stage) {
        const WitnessNode& t = tree.node(id);
        if (t.is_leaf()) {
            return leaf(value_of(id), size, stage, t.in_k);
        }
        return add(value_of(id), t.left, t.right, t.direction, to_double(1 - t.weight), size, stage);
    }

    // Internal node with children lo (smaller coordinate in dir) and hi; mu is the weight of hi.
    int add(const DiagMat& value, int lo, int hi, int dir, double mu, const Vec2& size, int stage) {
        if (mu <= 0.0) return from_tree(lo, size, stage);
        if (mu >= 1.0) return from_tree(hi, size, stage);
        const std::size_t ki = static_cast<std::size_t>(stage - 2);
        if (stage < 2 || ki >= ks.size()) {
            ++unresolved;
            return leaf(value, size, stage, false);
        }
        PlanNode n;
        n.value = value;
        n.size = size;
        n.stage = stage;
        n.refined = true;
        n.strip.dir = dir;
        n.strip.k = ks[ki];
        n.strip.mu = mu;
        n.strip.w = value;
        n.strip.first = value_of(hi);
        n.strip.second = value_of(lo);
        max_stage = std::max(max_stage, stage);
        plan.push_back(n);
        const int me = static_cast<int>(plan.size()) - 1;
        const int e = 3 - dir;
        int kids[2] = {-1, -1};
        const int tids[2] = {hi, lo};
        for (int phase = 0; phase < 2; ++phase) {
            const Vec2 cs = strip_child_size(n.strip, size, phase);
            const bool internal = !tree.node(tids[phase]).is_leaf();
            if (cs[e] > 0.0 && cs[dir] > 0.0) {
                kids[phase] = from_tree(tids[phase], cs, stage + 1);
            } else if (internal) {
                ++unresolved;
            }
        }
        plan[static_cast<std::size_t>(me)].first = kids[0];
        plan[static_cast<std::size_t>(me)].second = kids[1];
        return me;
    }
};

Vec2 domain_origin(const Polygon& domain) {
    Vec2 o = domain.vertices().front();
    for (const auto& v : domain.vertices()) {
        o.x = std::min(o.x, v.x);
        o.y = std::min(o.y, v.y);
    }
    return o;
}

Field build_core(const WitnessTree& tree, double alpha, double h, const std::vector<int>& ks, const Polygon& domain) {
    check_admissible(h, alpha, domain);
    FieldInfo info;
    info.top = tree.top;
    info.lamination_level = tree.lamination_level;
    info.h = h;
    info.alpha = alpha;
    info.k_list = ks;
    if (tree.top == TopConfig::Leaf) {
        return Field(domain, info);
    }
    const WitnessNode& root = tree.node(tree.root);
    const int l = root.direction;
    const int e = 3 - l;
    const double p = std::pow(h, alpha);
    PlanBuilder pb{tree, ks, {}, 0, 1};
    TopLayout top;
    top.origin = domain_origin(domain);
    const DiagMat pos = to_double(tree.node(root.right).value);
    const DiagMat neg = to_double(tree.node(root.left).value);

    auto cell_ref = [&](int il, int ie) -> int& {
        return l == 1 ? top.cell_plan[il][ie] : top.cell_plan[ie][il];
    };

    if (tree.top == TopConfig::Line || tree.top == TopConfig::Tri) {
        const double mu = to_double(1 - root.weight);
        top.period[l] = p;
        top.period[e] = p;
        top.split[l] = mu * p;
        top.split[e] = p;
        top.slope_lo[l] = pos[l];
        top.slope_hi[l] = neg[l];
        Vec2 s0, s1;
        s0[l] = top.split[l];
        s0[e] = p;
        s1[l] = p - top.split[l];
        s1[e] = p;
        cell_ref(0, 0) = pb.from_tree(root.right, s0, 2);
        cell_ref(1, 0) = pb.from_tree(root.left, s1, 2);
    } else {
        const WitnessNode& cp = tree.node(root.right);
        const WitnessNode& cn = tree.node(root.left);
        if (cp.direction != e || cn.direction != e) {
            throw ParameterError("rectangle top: children must laminate orthogonally to the root");
        }
        const double b_hi = std::min(to_double(tree.node(cp.right).value[e]), to_double(tree.node(cn.right).value[e]));
        const double b_lo = std::max(to_double(tree.node(cp.left).value[e]), to_double(tree.node(cn.left).value[e]));
        if (!(b_hi > 0.0 && b_lo < 0.0)) {
            throw ParameterError("rectangle top: children do not straddle zero");
        }
        const double a_hi = pos[l], a_lo = neg[l];
        const double q = 2.0 * p;
        top.period = {q, q};
        top.split[l] = q * (a_lo / (a_lo - a_hi));
        top.split[e] = q * (b_lo / (b_lo - b_hi));
        top.slope_lo[l] = a_hi;
        top.slope_hi[l] = a_lo;
        top.slope_lo[e] = b_hi;
        top.slope_hi[e] = b_lo;
        for (int il = 0; il < 2; ++il) {
            const WitnessNode& owner = il == 0 ? cp : cn;
            for (int ie = 0; ie < 2; ++ie) {
                DiagMat corner;
                corner[l] = il == 0 ? a_hi : a_lo;
                corner[e] = ie == 0 ? b_hi : b_lo;
                Vec2 size;
                size[l] = il == 0 ? top.split[l] : q - top.split[l];
                size[e] = ie == 0 ? top.split[e] : q - top.split[e];
                const DiagMat hi = to_double(tree.node(owner.right).value);
                const DiagMat lo = to_double(tree.node(owner.left).value);
                int id;
                if (corner == hi) {
                    id = pb.from_tree(owner.right, size, 2);
                } else if (corner == lo) {
                    id = pb.from_tree(owner.left, size, 2);
                } else {
                    const double mu = (corner[e] - lo[e]) / (hi[e] - lo[e]);
                    id = pb.add(corner, owner.left, owner.right, e, mu, size, 2);
                }
                cell_ref(il, ie) = id;
            }
        }
    }
    info.period = top.period;
    info.max_stage = pb.max_stage;
    info.unresolved = pb.unresolved;
    info.lipschitz = plan_lipschitz(pb.plan);
    return Field(domain, top, std::move(pb.plan), info);
}

void require_top(const WitnessTree& tree, TopConfig top, int level, const char* what) {
    if (tree.top != top || tree.lamination_level != level) {
        throw ParameterError(std::string(what) + ": tree has top '" + to_string(tree.top) + "' and level " +
                             std::to_string(tree.lamination_level));
    }
}

} // namespace

Field build_L1(const WitnessTree& tree, double alpha, double h, const Polygon& domain) {
    require_top(tree, TopConfig::Line, 1, "build_L1");
    return build_core(tree, alpha, h, {}, domain);
}

Field build_L2_rect(const WitnessTree& tree, double alpha, double h, int k, const Polygon& domain) {
    require_top(tree, TopConfig::Rec, 2, "build_L2_rect");
    if (k < 1) throw ParameterError("k must be at least 1");
    return build_core(tree, alpha, h, {k}, domain);
}

Field build_L2_tri(const WitnessTree& tree, double alpha, double h, int k, const Polygon& domain) {
    require_top(tree, TopConfig::Tri, 2, "build_L2_tri");
    if (k < 1) throw ParameterError("k must be at least 1");
    return build_core(tree, alpha, h, {k}, domain);
}

Field build_general(const WitnessTree& tree, const Params& params, double h, const Polygon& domain) {
    if (params.L != tree.lamination_level) {
        throw ParameterError("parameter level " + std::to_string(params.L) + " does not match tree level " +
                             std::to_string(tree.lamination_level));
    }
    if (tree.lamination_level < 2) {
        throw ParameterError("build_general needs a tree of level at least 2");
    }
    if (params.k_list.size() != static_cast<std::size_t>(params.L - 1)) {
        throw ParameterError("k list must hold L - 1 entries");
    }
    check_k_list(params);
    return build_core(tree, params.alpha, h, params.k_list, domain);
}

Field build_field(const WitnessTree& tree, const Params& params, double h, const Polygon& domain) {
    switch (tree.lamination_level) {
    case 0:
        return build_core(tree, params.alpha, h, {}, domain);
    case 1:
        return build_L1(tree, params.alpha, h, domain);
    default:
        return build_general(tree, params, h, domain);
    }
}

} // namespace lamlab
