// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "lamlab/boxset_json.hpp"
#include "lamlab/errors.hpp"
#include "lamlab/matgeom.hpp"
#include "lamlab/rational.hpp"

using namespace lamlab;

TEST_CASE("rank_one_direction examples") {
    CHECK(rank_one_direction(DiagMat{1, 0}, DiagMat{2, 0}) == RankOne::Dir1);
    CHECK(rank_one_direction(DiagMat{1, 1}, DiagMat{1, 1}) == RankOne::Rank0);
    CHECK(rank_one_direction(DiagMat{1, 1}, DiagMat{2, 3}) == RankOne::Incompatible);
    CHECK(rank_one_direction(DiagMat{1, 5}, DiagMat{1, -3}) == RankOne::Dir2);
}

TEST_CASE("rank_one_direction float tolerance and exact variant") {
    CHECK(rank_one_direction(DiagMat{1, 0}, DiagMat{2, 1e-13}) == RankOne::Incompatible);
    CHECK(rank_one_direction(DiagMat{1, 0}, DiagMat{2, 1e-13}, 1e-12) == RankOne::Dir1);
    CHECK(rank_one_direction(DiagMatQ{Rational(1, 3), 2}, DiagMatQ{Rational(1, 3), 5}) == RankOne::Dir2);
    CHECK(rank_one_direction(DiagMatQ{Rational(1, 3), 2}, DiagMatQ{Rational(1, 3), 2}) == RankOne::Rank0);
}

TEST_CASE("rank_one_direction is symmetric") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < 200; ++i) {
        const DiagMat a{double(d(rng)), double(d(rng))}, b{double(d(rng)), double(d(rng))};
        CHECK(rank_one_direction(a, b) == rank_one_direction(b, a));
    }
}

TEST_CASE("convex_combination examples") {
    CHECK(convex_combination(DiagMat{1, 0}, DiagMat{-1, 0}, 0.5) == DiagMat{0, 0});
    const DiagMat f{3.5, -2}, g{0.25, 7};
    CHECK(convex_combination(f, g, 1.0) == f);
    CHECK(convex_combination(f, g, 0.0) == g);
    CHECK(convex_combination(DiagMat{4, 2}, DiagMat{0, 2}, 0.25) == DiagMat{1, 2});
    CHECK_THROWS_AS(convex_combination(f, g, 1.5), ParameterError);
    CHECK_THROWS_AS(convex_combination(f, g, -0.1), ParameterError);
}

TEST_CASE("convex_combination distance identity, exact") {
    const DiagMatQ f{Rational(7, 3), 1}, g{Rational(-1, 2), 1};
    for (int n = 0; n <= 8; ++n) {
        const Rational lam(n, 8);
        const DiagMatQ c = convex_combination(f, g, lam);
        CHECK(c.d2 == 1);
        CHECK(c - g == lam * (f - g));
    }
}

TEST_CASE("convex_combination stays on the rank-one line") {
    const DiagMat f{2, -1}, g{-3, -1};
    for (double lam : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        CHECK(convex_combination(f, g, lam).d2 == -1.0);
        CHECK(std::abs(norm(convex_combination(f, g, lam) - g) - lam * norm(f - g)) < 1e-14);
    }
}

TEST_CASE("norm") {
    CHECK(norm(DiagMat{3, 4}) == 5.0);
    CHECK(norm(DiagMat{0, 0}) == 0.0);
    CHECK(norm(DiagMatQ{3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("2.5e-3") == Rational(1, 400));
    CHECK(parse_rational("7/8") == Rational(7, 8));
    CHECK(parse_rational("-7/8") == Rational(-7, 8));
    CHECK(parse_rational("1E2") == 100);
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("-0.0625e1") == Rational(-5, 8));
    CHECK(parse_rational("08/010") == Rational(4, 5));
    CHECK_THROWS_AS(parse_rational(""), ParameterError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
    CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParameterError);
}

TEST_CASE("rational text round trip") {
    for (const Rational& r : {Rational(1, 3), Rational(-5, 4), Rational(0), Rational(123456789, 1000), Rational(-2, 7)}) {
        CHECK(parse_rational(to_string(r)) == r);
    }
    CHECK(to_string(Rational(-5, 4)) == "-1.25");
    CHECK(to_string(Rational(1, 3)) == "1/3");
    CHECK(rational_from_double(0.1) != Rational(1, 10));
    CHECK(to_double(rational_from_double(0.1)) == 0.1);
}

TEST_CASE("boxset JSON: accepted coordinate forms") {
    const BoxSet s = boxset_from_json_text(R"({"points": [[1, "0.5"], [[1,3], -2]], "boxes": [[0, 1, "1/2", 2.5]]})");
    REQUIRE(s.size() == 3);
    bool p1 = false, p2 = false, b = false;
    for (const auto& x : s.boxes) {
        p1 |= x == Box::point(1, Rational(1, 2));
        p2 |= x == Box::point(Rational(1, 3), -2);
        b |= x == Box(0, 1, Rational(1, 2), Rational(5, 2));
    }
    CHECK(p1);
    CHECK(p2);
    CHECK(b);
    // Floats are read through their shortest decimal form.
    CHECK(boxset_from_json_text(R"({"points": [[0.1, 0]]})").boxes[0].x_lo == Rational(1, 10));
}

TEST_CASE("boxset JSON: errors name the offending field") {
    auto msg = [](const char* text) {
        try {
            boxset_from_json_text(text);
        } catch (const ParameterError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg(R"({"points": [[1, 2], [3, "x"]]})").find("points[1][1]") != std::string::npos);
    CHECK(msg(R"({"boxes": [[0, 1, 2]]})").find("boxes[0]") != std::string::npos);
    CHECK(msg(R"({"boxes": [[1, 0, 0, 1]]})").find("boxes[0]") != std::string::npos);
    CHECK(msg(R"({"pointz": []})").find("pointz") != std::string::npos);
    CHECK(!msg("{not json").empty());
    CHECK(!msg("[1,2]").empty());
}

TEST_CASE("boxset JSON round trip") {
    BoxSet s;
    s.boxes = {Box::point(Rational(1, 3), -1), Box(-1, 2, Rational(1, 4), Rational(1, 4)), Box(0, 1, 0, 1)};
    const BoxSet back = boxset_from_json(boxset_to_json(s));
    CHECK(normalize(back).boxes == normalize(s).boxes);
    CHECK(boxset_to_json(staircase(1)).dump() == R"({"points":[[0,-1],[0,1]]})");
    CHECK(boxset_to_json(BoxSet{}).dump() == R"({"points":[]})");
}
