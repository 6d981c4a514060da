// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: lamlab_acceptance [criterion numbers...]
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lamlab/construct.hpp"
#include "lamlab/fem.hpp"
#include "lamlab/harness.hpp"
#include "lamlab/lamhull.hpp"
#include "lamlab/simd/kernels.hpp"

using namespace lamlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

BoxSet points(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<DiagMatQ> v;
    for (auto [a, b] : pts) v.push_back({a, b});
    return BoxSet::from_points(v);
}

BoxSet random_grid_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 6), coord(-16, 16), kind(0, 2);
    BoxSet s;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        int x0 = coord(rng), x1 = coord(rng), y0 = coord(rng), y1 = coord(rng);
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        switch (kind(rng)) {
        case 0: x1 = x0, y1 = y0; break;
        case 1: (rng() & 1) ? void(x1 = x0) : void(y1 = y0); break;
        default: break;
        }
        s.boxes.emplace_back(Rational(x0, 4), Rational(x1, 4), Rational(y0, 4), Rational(y1, 4));
    }
    return s;
}

std::vector<double> dyadic(int from, int to) {
    std::vector<double> h;
    for (int e = from; e <= to; ++e) h.push_back(std::ldexp(1.0, -e));
    return h;
}

Sigma sigma_of(const BoxSet& k) {
    Sigma s;
    for (const auto& p : extract_witness(k).sigma()) s.push_back(to_double(p));
    return s;
}

// Sweeps of criteria 5-7 are shared with criterion 8.
struct RateRun {
    SweepResult result;
    double seconds = 0;
    bool done = false;
};
RateRun g_rate[3];

const RateRun& rate_run(int which) {
    RateRun& r = g_rate[which];
    if (r.done) return r;
    BoxSet k;
    std::vector<double> hs;
    if (which == 0) {
        k = points({{1, 0}, {-1, 0}});
        hs = dyadic(5, 12);
    } else if (which == 1) {
        k = points({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}});
        hs = dyadic(5, 11);
    } else {
        k = staircase(3);
        hs = dyadic(10, 14);
    }
    const Sigma sigma = sigma_of(k);
    CaseOptions opt;
    opt.extra = {indicator_integrand(sigma, opt.tol), dist2_integrand(sigma)};
    if (which == 2) opt.alpha = 0.25;
    const auto t0 = Clock::now();
    r.result = sweep(k, Polygon::unit_square(), hs, opt);
    r.seconds = seconds_since(t0);
    r.done = true;
    return r;
}

Outcome c1_hull_oracle() {
    const auto t0 = Clock::now();
    std::mt19937 rng(1);
    int mismatches = 0, checks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const BoxSet k = random_grid_set(rng);
        for (int i = 0; i <= 4; ++i) {
            const GridPointSet oracle = grid_hull_oracle(k, Rational(1, 4), i);
            const GridPointSet mine = grid_restriction(lamination_hull(k, i), oracle);
            ++checks;
            if (oracle.mask != mine.mask) ++mismatches;
        }
    }
    const double s = seconds_since(t0);
    return {mismatches == 0 && s < 60.0, std::to_string(checks) + " (K, i) pairs, " + std::to_string(mismatches) +
                                             " mismatches, " + fmt("%.2f s (limit 60 s)", s)};
}

struct Fixture {
    std::string name;
    BoxSet k;
    int level;
};

std::vector<Fixture> level_fixtures() {
    std::vector<Fixture> f;
    for (int n = 1; n <= 8; ++n) f.push_back({"staircase(" + std::to_string(n) + ")", staircase(n), n});
    f.push_back({"square corners", points({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}), 2});
    f.push_back({"{(0,-1),(0,1)}", points({{0, -1}, {0, 1}}), 1});
    return f;
}

Outcome c2_levels() {
    const auto t0 = Clock::now();
    std::string bad;
    for (const auto& f : level_fixtures()) {
        const Level l = lamination_level(f.k, kDefaultLevelCap);
        if (!(l == Level::finite(f.level))) bad += " " + f.name;
    }
    const double s = seconds_since(t0);
    return {bad.empty() && s < 5.0,
            bad.empty() ? "10 fixtures exact, " + fmt("%.2f s (limit 5 s)", s) : "wrong level:" + bad};
}

Outcome c3_witness() {
    std::string bad;
    for (const auto& f : level_fixtures()) {
        const WitnessTree t = extract_witness(f.k);
        bool ok = t.node(t.root).value == DiagMatQ{0, 0} && verify_tree_arithmetic(t) &&
                  t.leaf_count() <= (std::size_t{1} << (f.level + 1)) && t.lamination_level == f.level;
        for (const auto& n : t.nodes) {
            if (n.is_leaf()) ok = ok && n.in_k && contains(f.k, n.value);
        }
        ok = ok && contains(lamination_hull(BoxSet::from_points(t.sigma()), f.level), DiagMatQ{0, 0});
        if (!ok) bad += " " + f.name;
    }
    return {bad.empty(), bad.empty() ? "10 trees: root 0, leaves in K, leaf bound, 0 in the hull of the leaves"
                                     : "failed:" + bad};
}

Outcome c4_strip() {
    std::mt19937 rng(20241014);
    std::uniform_real_distribution<double> u(-1.0, 1.0), side(0.1, 2.0), lam(0.05, 0.95), t(0.0, 1.0);
    std::uniform_int_distribution<int> kk(1, 40), dir(1, 2);
    double worst_boundary = 0, worst_grad_excess = -INFINITY;
    int bound_fail = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const double a = u(rng), c = u(rng);
        const Rect q(a, a + side(rng), c, c + side(rng));
        const int l = dir(rng);
        DiagMat f{u(rng), u(rng)}, g = f;
        do g[l] = u(rng); while (g[l] == f[l]);
        const double lambda = lam(rng);
        const DiagMat w = convex_combination(f, g, lambda);
        const StripLaminate s = simple_laminate(q, {u(rng), u(rng)}, w, f, g, lambda, kk(rng));
        for (int i = 0; i < 1000; ++i) {
            const double tau = t(rng);
            const Vec2 x = i % 4 == 0 ? Vec2{q.a, q.c + tau * q.delta2()}
                         : i % 4 == 1 ? Vec2{q.b, q.c + tau * q.delta2()}
                         : i % 4 == 2 ? Vec2{q.a + tau * q.delta1(), q.c}
                                      : Vec2{q.a + tau * q.delta1(), q.d};
            const Vec2 d{s.value(x).x - s.base(x).x, s.value(x).y - s.base(x).y};
            worst_boundary = std::max({worst_boundary, std::abs(d.x), std::abs(d.y)});
        }
        const double limit = 2.0 * (1.0 + norm(w)) + 1e-9;
        for (int i = 0; i < 1000; ++i) {
            const Vec2 x{q.a + t(rng) * q.delta1(), q.c + t(rng) * q.delta2()};
            worst_grad_excess = std::max(worst_grad_excess, frobenius(s.sample(x).grad) - limit);
        }
        if (!(s.exact_bad_measure() <= s.bad_measure_bound())) ++bound_fail;
    }
    const bool ok = worst_boundary <= 1e-12 && worst_grad_excess <= 0.0 && bound_fail == 0;
    return {ok, "50 laminates: max |w-v| on boundary " + fmt("%.3g", worst_boundary) + ", max |grad w| - bound " +
                    fmt("%.3g", worst_grad_excess) + ", bad-set bound violations " + std::to_string(bound_fail)};
}

Outcome c5_rate_l1() {
    const RateRun& r = rate_run(0);
    const SweepResult& s = r.result;
    if (!s.fit || s.cases.size() != 8) return {false, "sweep did not produce a fit over 8 mesh sizes"};
    // Envelope constant of E_h <= C h^(1/2) fitted on the coarse half, tested on the fine half.
    const std::size_t half = s.cases.size() / 2;
    double c_env = 0, worst = 0;
    for (std::size_t i = 0; i < s.cases.size(); ++i) {
        const double ratio = s.cases[i].E_h / std::sqrt(s.cases[i].h);
        if (i < half) {
            c_env = std::max(c_env, ratio);
        } else {
            worst = std::max(worst, ratio);
        }
    }
    const bool ok = s.fit->slope >= 0.40 && worst <= c_env && s.skipped.empty() && s.zero.empty() && r.seconds < 300;
    return {ok, "slope " + fmt("%.4f", s.fit->slope) + " (>= 0.40, target 0.5), LS C " + fmt("%.4f", s.fit->C) +
                    "; C fitted on h >= 2^-8: " + fmt("%.4f", c_env) + ", max E_h/h^0.5 on h <= 2^-9: " +
                    fmt("%.4f", worst) + ", " + fmt("%.1f s (limit 300 s)", r.seconds)};
}

Outcome c6_rate_l2() {
    const RateRun& r = rate_run(1);
    const SweepResult& s = r.result;
    if (!s.fit) return {false, "no fit"};
    bool alpha_ok = true;
    for (const auto& c : s.cases) alpha_ok = alpha_ok && c.alpha == 1.0 / 3 && c.top == "rec";
    const bool ok = s.fit->slope >= 0.23 && alpha_ok && s.cases.size() == 7 && r.seconds < 600;
    return {ok, "slope " + fmt("%.4f", s.fit->slope) + " (>= 0.23, target 1/3), alpha 1/3 from select_params, " +
                    fmt("%.1f s (limit 600 s)", r.seconds)};
}

Outcome c7_rate_l3() {
    const RateRun& r = rate_run(2);
    const SweepResult& s = r.result;
    if (!s.fit) return {false, "no fit"};
    double lo = INFINITY, hi = 0;
    for (const auto& c : s.cases) {
        lo = std::min(lo, c.sup_grad);
        hi = std::max(hi, c.sup_grad);
    }
    const double var = (hi - lo) / hi;
    const bool ok = s.fit->slope >= 0.17 && var < 0.05 && s.cases.size() == 5;
    return {ok, "h = 2^-10..2^-14, slope " + fmt("%.4f", s.fit->slope) + " (>= 0.17, target 1/4), sup_grad in [" +
                    fmt("%.6f", lo) + ", " + fmt("%.6f", hi) + "], variation " + fmt("%.2e", var) + " (< 5%), " +
                    fmt("%.1f s", r.seconds)};
}

Outcome c8_energy() {
    int cases = 0, exact = 0, dist_ok = 0;
    for (int w = 0; w < 3; ++w) {
        for (const auto& c : rate_run(w).result.cases) {
            ++cases;
            if (c.extra_energy.size() == 2 && std::memcmp(&c.extra_energy[0], &c.E_h, sizeof(double)) == 0) ++exact;
            if (c.extra_energy.size() == 2 && c.extra_energy[1] <= c.E_h && c.energy_dist2 <= c.E_h) ++dist_ok;
        }
    }
    return {cases == 20 && exact == cases && dist_ok == cases,
            std::to_string(cases) + " cases: indicator energy bit-identical in " + std::to_string(exact) +
                ", f_dist^2 energy <= bad measure in " + std::to_string(dist_ok)};
}

Outcome c9_determinism() {
    const BoxSet sq = points({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}});
    const BoxSet l1 = points({{1, 0}, {-1, 0}});
    const auto hs = dyadic(5, 10);
    int identical = 0, pairs = 0;
    for (const BoxSet* k : {&l1, &sq}) {
        const std::string a = emit_csv(sweep(*k, Polygon::unit_square(), hs));
        const std::string b = emit_csv(sweep(*k, Polygon::unit_square(), hs));
        const std::string c = emit_csv(sweep(*k, Polygon::unit_square(), hs, {}, 3));
        pairs += 2;
        identical += (a == b) + (a == c);
    }
    const std::string a3 = emit_csv(sweep(staircase(3), Polygon::unit_square(), dyadic(6, 10)));
    const std::string b3 = emit_csv(sweep(staircase(3), Polygon::unit_square(), dyadic(6, 10), {}, 2));
    pairs += 1;
    identical += a3 == b3;
    return {identical == pairs, std::to_string(identical) + "/" + std::to_string(pairs) +
                                    " repeated sweeps byte-identical (1 and several worker threads)"};
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"hull oracle equivalence", c1_hull_oracle},
        {"level fixtures", c2_levels},
        {"witness soundness", c3_witness},
        {"strip laminate bounds", c4_strip},
        {"rate L=1", c5_rate_l1},
        {"rate L=2 (rectangle)", c6_rate_l2},
        {"rate L=3", c7_rate_l3},
        {"energy consistency", c8_energy},
        {"determinism", c9_determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    std::printf("row kernel: %s\n", simd::active_kernel_name());
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
