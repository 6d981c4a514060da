// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "lamlab/errors.hpp"
#include "lamlab/lamhull.hpp"

using namespace lamlab;

namespace {

BoxSet points(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<DiagMatQ> v;
    for (auto [a, b] : pts) v.push_back({a, b});
    return BoxSet::from_points(v);
}

void check_sound(const BoxSet& k, int level) {
    const WitnessTree t = extract_witness(k, level + 2);
    CHECK(t.lamination_level == level);
    CHECK(t.node(t.root).value == DiagMatQ{0, 0});
    CHECK(verify_tree_arithmetic(t));
    CHECK(t.leaf_count() <= (std::size_t{1} << (level + 1)));
    for (const auto& n : t.nodes) {
        if (n.is_leaf()) {
            CHECK(n.in_k);
            CHECK(contains(k, n.value));
        } else {
            CHECK(n.weight > 0);
            CHECK(n.weight < 1);
            const auto& a = t.node(n.left).value;
            const auto& b = t.node(n.right).value;
            CHECK(direction_of(rank_one_direction(a, b)) == n.direction);
        }
    }
    const std::vector<DiagMatQ> sigma = t.sigma();
    CHECK(contains(lamination_hull(BoxSet::from_points(sigma), level), DiagMatQ{0, 0}));
    if (level > 0) CHECK_FALSE(contains(lamination_hull(BoxSet::from_points(sigma), level - 1), DiagMatQ{0, 0}));
}

} // namespace

TEST_CASE("witness for the two-point set") {
    const WitnessTree t = extract_witness(points({{0, -1}, {0, 1}}));
    CHECK(t.top == TopConfig::Line);
    CHECK(t.nodes.size() == 3);
    const WitnessNode& r = t.node(t.root);
    CHECK(r.weight == Rational(1, 2));
    CHECK(r.direction == 2);
    CHECK(t.node(r.left).in_k);
    CHECK(t.node(r.right).in_k);
    CHECK(t.node(r.left).value == DiagMatQ{0, -1});
    CHECK(t.node(r.right).value == DiagMatQ{0, 1});
}

TEST_CASE("witness for the square corners") {
    const WitnessTree t = extract_witness(points({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}));
    CHECK(t.top == TopConfig::Rec);
    CHECK(t.depth() == 2);
    CHECK(t.sigma().size() == 4);
    const WitnessNode& r = t.node(t.root);
    const DiagMatQ a = t.node(r.left).value, b = t.node(r.right).value;
    CHECK(a + b == DiagMatQ{0, 0}); // opposite edge midpoints
    CHECK(!t.node(r.left).in_k);
}

TEST_CASE("witness when 0 is in K") {
    BoxSet k;
    k.boxes = {Box(-1, 1, -2, 3), Box::point(5, 5)};
    const WitnessTree t = extract_witness(k);
    CHECK(t.top == TopConfig::Leaf);
    CHECK(t.nodes.size() == 1);
    CHECK(t.sigma() == std::vector<DiagMatQ>{{0, 0}});
    CHECK(t.lamination_level == 0);
}

TEST_CASE("witness soundness on the level fixtures") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        check_sound(staircase(n), n);
    }
    check_sound(points({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}), 2);
    check_sound(points({{0, -1}, {0, 1}}), 1);
}

TEST_CASE("witness on box-valued K") {
    BoxSet k;
    k.boxes = {Box(1, 2, -1, 1), Box(-3, -1, Rational(-1, 2), 4)};
    check_sound(k, 1);
    BoxSet k2;
    k2.boxes = {Box(1, 2, 1, 2), Box(-2, -1, 1, 2), Box(-2, 2, -3, -1)};
    const WitnessTree t = extract_witness(k2);
    CHECK(verify_tree_arithmetic(t));
    check_sound(k2, t.lamination_level);
}

TEST_CASE("witness top configurations") {
    CHECK(extract_witness(staircase(2)).top == TopConfig::Tri);
    CHECK(extract_witness(staircase(3)).top == TopConfig::Tri);
}

TEST_CASE("witness rejects unreachable zero") {
    CHECK_THROWS_AS(extract_witness(points({{1, 1}, {2, 3}}), 5), LevelError);
}

TEST_CASE("verify_tree_arithmetic catches a corrupted node") {
    WitnessTree t = extract_witness(staircase(3));
    REQUIRE(verify_tree_arithmetic(t));
    t.nodes[static_cast<std::size_t>(t.root)].value.d1 = Rational(1, 7);
    CHECK_FALSE(verify_tree_arithmetic(t));
}
