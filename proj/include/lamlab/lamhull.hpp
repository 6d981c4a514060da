// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lamlab/matgeom.hpp"
#include "lamlab/rational.hpp"

namespace lamlab {

inline constexpr int kDefaultLevelCap = 16;

/// Closed axis-aligned box [x_lo, x_hi] x [y_lo, y_hi]; segments and points are degenerate boxes.
struct Box {
    Rational x_lo, x_hi, y_lo, y_hi;

    Box() = default;
    /// Throws ParameterError when an interval is reversed.
    Box(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi);
    static Box point(const Rational& x, const Rational& y) { return Box(x, x, y, y); }
    static Box point(const DiagMatQ& p) { return point(p.d1, p.d2); }

    bool is_point() const { return x_lo == x_hi && y_lo == y_hi; }
    bool contains(const DiagMatQ& p) const;
    bool contains(const Box& other) const;

    friend bool operator==(const Box&, const Box&) = default;
};

/// Where a box of a hull level came from.
struct Provenance {
    enum class Kind { Input, Copy, Generated };
    Kind kind = Kind::Input;
    // Copy: first = index in the previous level. Generated: both parents in the previous level.
    std::size_t first = 0;
    std::size_t second = 0;
    int direction = 0; // fill direction of a generated box (1 or 2)
};

/// Finite union of closed boxes representing K or one of its lamination hulls.
struct BoxSet {
    std::vector<Box> boxes;
    int level_tag = 0;
    std::vector<Provenance> provenance; // empty or parallel to boxes

    static BoxSet from_points(const std::vector<DiagMatQ>& points);

    std::size_t size() const { return boxes.size(); }
    bool empty() const { return boxes.empty(); }
};

/// Drops boxes contained in another box and sorts by (x_lo, y_lo, x_hi, y_hi).
BoxSet normalize(const BoxSet& s);

/// One lamination step: every rank-one segment between points of two boxes, for every pair.
BoxSet lamination_step(const BoxSet& s);

/// Levels 0..levels of the lamination hull of K, each with provenance into the previous one.
std::vector<BoxSet> lamination_chain(const BoxSet& k, int levels);

BoxSet lamination_hull(const BoxSet& k, int i);

bool contains(const BoxSet& s, const DiagMatQ& p);

/// Set-level containment: every box of `inner` lies in a single box of `outer`.
bool covers(const BoxSet& outer, const BoxSet& inner);

/// Lamination level, truncated at a cap.
class Level {
public:
    static Level finite(int l) { return Level(l); }
    static Level exceeds_cap() { return Level(-1); }

    bool is_finite() const { return value_ >= 0; }
    /// Throws LevelError when the level exceeds the cap.
    int value() const;

    friend bool operator==(const Level&, const Level&) = default;

private:
    explicit Level(int v) : value_(v) {}
    int value_;
};

Level lamination_level(const BoxSet& k, int cap = kDefaultLevelCap);

/// Extreme points of S on the line a + span(E_l). Throws PreconditionError if the line misses S.
std::pair<DiagMatQ, DiagMatQ> maximal_interval(const DiagMatQ& a, int l, const BoxSet& s);

/// Top geometry of a witness tree.
enum class TopConfig {
    Leaf, // 0 is in K
    Line, // both children of the root are in K
    Tri,  // exactly one child of the root is in K
    Rec,  // both children are laminated further, spanning a rank-one rectangle around 0
};

const char* to_string(TopConfig c);

struct WitnessNode {
    DiagMatQ value;
    Rational weight; // value = weight * left + (1 - weight) * right
    int direction = 0;
    int left = -1;
    int right = -1;
    bool in_k = false;
    int level = 0; // smallest hull level containing value

    bool is_leaf() const { return left < 0; }
};

/// Binary lamination tree from 0 down to a finite set of points of K.
struct WitnessTree {
    std::vector<WitnessNode> nodes;
    int root = 0;
    int lamination_level = 0;
    TopConfig top = TopConfig::Leaf;

    const WitnessNode& node(int i) const { return nodes.at(static_cast<std::size_t>(i)); }
    int depth() const;
    std::size_t leaf_count() const;
    /// Distinct leaf values, sorted.
    std::vector<DiagMatQ> sigma() const;
};

WitnessTree extract_witness(const BoxSet& k, int cap = kDefaultLevelCap);

/// Recomputes every internal node from its children; true when all match exactly.
bool verify_tree_arithmetic(const WitnessTree& t);

/// n+1 points whose lamination level is exactly n.
BoxSet staircase(int n);

/// Grid points on step*Z^2 inside the bounding box of K, as a dense mask.
struct GridPointSet {
    Rational step;
    BigInt ix0, iy0; // grid index of the lower-left corner
    std::size_t nx = 0, ny = 0;
    std::vector<unsigned char> mask; // row-major, ny rows of nx

    bool test(std::size_t ix, std::size_t iy) const { return mask[iy * nx + ix] != 0; }
    DiagMatQ point(std::size_t ix, std::size_t iy) const;
    std::size_t count() const;
    std::vector<DiagMatQ> points() const;
};

/// Brute-force discrete lamination on the grid, independent of the box representation.
GridPointSet grid_hull_oracle(const BoxSet& k, const Rational& grid_step, int i);

/// Grid restriction of a box set on the same grid as `like`.
GridPointSet grid_restriction(const BoxSet& s, const GridPointSet& like);

} // namespace lamlab
