// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "lamlab/geometry.hpp"
#include "lamlab/lamhull.hpp"
#include "lamlab/matgeom.hpp"

namespace lamlab {

/// Open rectangle (a,b) x (c,d).
struct Rect {
    double a = 0, b = 1, c = 0, d = 1;

    Rect() = default;
    /// Throws ParameterError unless a < b and c < d.
    Rect(double a, double b, double c, double d);
    double delta1() const { return b - a; }
    double delta2() const { return d - c; }
    double side(int l) const { return l == 1 ? delta1() : delta2(); }
};

/// Value, a.e. gradient (row = component) and a lower bound on the distance to the nearest kink.
struct Sample {
    Vec2 value;
    Mat2 grad;
    double margin = std::numeric_limits<double>::infinity();
};

/// Indicator of (0, mu] for the 1-periodic extension. Throws ParameterError unless 0 < mu < 1.
int chi(double mu, double tau);

/// Strip pattern of one laminate refinement in a cell. `first` is the endpoint whose
/// coordinate in `dir` exceeds that of `w`; it occupies the leading fraction `mu` of every strip.
struct StripCell {
    int dir = 1;
    int k = 1;
    double mu = 0.5;
    DiagMat w, first, second;

    double rise() const { return first[dir] - w[dir]; }
    double fall() const { return second[dir] - w[dir]; }
};

/// Point evaluation of a strip refinement in cell-local coordinates u, cell size `size`.
struct StripHit {
    double dev = 0.0;     // added to component dir
    bool on_tent = true;  // gradient is first or second in this point
    int phase = 0;        // 0 first, 1 second
    int perp_sign = 0;    // derivative of the boundary cutoff across the strips (off tent)
    double margin = 0.0;
    bool inner = false;   // inside the rectangle that carries the next refinement
    Vec2 child_u;
};

StripHit eval_strip(const StripCell& s, const Vec2& size, const Vec2& u);
/// Peak of the tent: rise * mu * period.
double strip_peak(const StripCell& s, const Vec2& size);
/// Size of the rectangle carrying the next refinement in a phase (0 or 1); zero or negative
/// perpendicular extent means there is no such rectangle.
Vec2 strip_child_size(const StripCell& s, const Vec2& size, int phase);
/// Exact area of the cell where the gradient is neither first nor second.
double strip_bad_measure(const StripCell& s, const Vec2& size);

/// Single laminate on a rectangle replacing an affine field with gradient W.
class StripLaminate {
public:
    StripLaminate(const Rect& q, const Vec2& v_at_corner, const DiagMat& w, const StripCell& cell, double lambda);

    Sample sample(const Vec2& x) const;
    Vec2 value(const Vec2& x) const { return sample(x).value; }
    /// The affine field being replaced.
    Vec2 base(const Vec2& x) const;

    double exact_bad_measure() const;
    /// |F-G| * weight * side^2 / k with weight the fraction of the first phase.
    double bad_measure_bound() const;
    /// 2 (1 + |W|).
    double gradient_bound() const;
    /// Largest gradient norm the laminate actually takes.
    double lipschitz_bound() const;

    const Rect& rect() const { return q_; }
    const StripCell& cell() const { return cell_; }
    double lambda() const { return lambda_; }

private:
    Rect q_;
    Vec2 v0_;
    DiagMat w_;
    StripCell cell_;
    double lambda_;
};

/// Laminate between F and G with k strips replacing v(x) = v0 + W (x - (a,c)) on Q, W = lambda F + (1-lambda) G.
/// Throws ParameterError when F and G are not rank-one compatible or W is off the segment.
StripLaminate simple_laminate(const Rect& q, const Vec2& v0, const DiagMat& w, const DiagMat& f, const DiagMat& g,
                              double lambda, int k);

/// Node of the refinement plan: the gradient of a cell and how it is split further.
struct PlanNode {
    DiagMat value;
    bool refined = false; // false: keeps its affine gradient
    StripCell strip;
    Vec2 size;            // physical size of every cell with this node
    int stage = 1;
    int first = -1;       // child plan nodes, -1 when the phase is not refined
    int second = -1;
    bool in_sigma = false;
};

struct FieldInfo {
    TopConfig top = TopConfig::Leaf;
    int lamination_level = 0;
    double h = 0.0;
    double alpha = 0.0;
    Vec2 period;
    std::vector<int> k_list;
    int max_stage = 1;
    double lipschitz = 0.0;
    /// Cells whose gradient is an internal node but which are too thin to be refined.
    std::size_t unresolved = 0;
    std::size_t plan_nodes = 0;
};

/// Periodic top layout: each axis is a sawtooth (or constant) split into at most two cells.
struct TopLayout {
    Vec2 origin;
    Vec2 period{1.0, 1.0};
    Vec2 split{1.0, 1.0};        // equal to the period on an axis without a sawtooth
    Vec2 slope_lo, slope_hi;     // slopes before and after the split, per axis
    int cell_plan[2][2] = {{-1, -1}, {-1, -1}}; // [x cell][y cell]
};

/// Analytic candidate field with the boundary cutoff min(w_i, dist(x, boundary)).
class Field {
public:
    /// The zero field on a domain.
    explicit Field(Polygon domain, FieldInfo info = {});
    Field(Polygon domain, TopLayout top, std::vector<PlanNode> plan, FieldInfo info);

    Sample sample(const Vec2& x) const;
    Vec2 value(const Vec2& x) const { return sample(x).value; }
    /// Field before the boundary cutoff.
    Sample sample_uncut(const Vec2& x) const;

    const FieldInfo& info() const { return info_; }
    const Polygon& domain() const { return domain_; }
    const std::vector<PlanNode>& plan() const { return plan_; }
    const TopLayout& top() const { return top_; }
    bool is_zero() const { return zero_; }

private:
    void refine(int node, const Vec2& u, Sample& s) const;

    Polygon domain_;
    bool zero_ = true;
    TopLayout top_;
    std::vector<PlanNode> plan_;
    FieldInfo info_;
};

struct Params {
    int L = 0;
    double alpha = 0.5;
    std::vector<int> k_list; // k_2 .. k_L
    double Lambda = 0.0;
    double M = 0.0;
    std::vector<double> theta, gamma, x; // indexed by stage - 2
    std::vector<int> k_hat;
};

Params select_params(int L, double h, const WitnessTree& tree);

/// Throws ParameterError when some k_i <= Lambda k_{i-1}.
void check_k_list(const Params& p);

/// Requires h < 1 and h^alpha <= diam(domain); throws AdmissibilityError otherwise.
void check_admissible(double h, double alpha, const Polygon& domain);

Field build_L1(const WitnessTree& tree, double alpha, double h, const Polygon& domain);
Field build_L2_rect(const WitnessTree& tree, double alpha, double h, int k, const Polygon& domain);
Field build_L2_tri(const WitnessTree& tree, double alpha, double h, int k, const Polygon& domain);
Field build_general(const WitnessTree& tree, const Params& params, double h, const Polygon& domain);
/// Dispatch on the level and top configuration.
Field build_field(const WitnessTree& tree, const Params& params, double h, const Polygon& domain);

/// Largest exact entrywise bound over the plan, combined into a norm bound.
double plan_lipschitz(const std::vector<PlanNode>& plan);

} // namespace lamlab
