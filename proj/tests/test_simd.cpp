// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

#include "lamlab/simd/kernels.hpp"

using namespace lamlab::simd;

namespace {

struct Rows {
    std::vector<double> b1, b2, t1, t2, sd1, sd2;
};

Rows random_rows(std::mt19937_64& rng, std::size_t n, std::size_t ns) {
    std::uniform_real_distribution<double> u(-2, 2);
    std::uniform_int_distribution<int> pick(0, 5);
    Rows r;
    for (auto* v : {&r.b1, &r.b2, &r.t1, &r.t2}) {
        v->resize(n + 1);
        for (auto& x : *v) {
            // Repeated values and exact zeros produce gradients exactly on Sigma and ties in min/max.
            const int p = pick(rng);
            x = p == 0 ? 0.0 : p == 1 ? 0.5 : p == 2 ? -0.0 : u(rng);
        }
    }
    for (std::size_t s = 0; s < ns; ++s) {
        r.sd1.push_back(s % 2 ? 0.0 : u(rng));
        r.sd2.push_back(s % 3 ? -0.0 : u(rng));
    }
    return r;
}

bool same(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

} // namespace

TEST_CASE("AVX2 row kernel is bit-identical to the scalar kernel") {
    RowKernel vec = avx2_row_kernel();
    if (vec == nullptr) {
        MESSAGE("AVX2 kernel unavailable on this machine; only the scalar path is exercised");
        return;
    }
    std::mt19937_64 rng(77);
    for (std::size_t n : {1, 2, 3, 4, 5, 7, 8, 31, 64, 100, 257}) {
        for (std::size_t ns : {0, 1, 2, 4, 5}) {
            for (double tol : {0.0, 1e-7, 0.25, 1.0}) {
                for (double s1 : {1.0 / 64, 1.0 / 3, 0.5}) {
                    const Rows r = random_rows(rng, n, ns);
                    const RowInput in{r.b1.data(), r.b2.data(), r.t1.data(), r.t2.data(), n, s1, 0.7 * s1,
                                      r.sd1.data(), r.sd2.data(), ns, tol};
                    std::vector<double> ba(2 * n), da(2 * n), na(2 * n), bb(2 * n), db(2 * n), nb(2 * n);
                    row_kernel_scalar(in, {ba.data(), da.data(), na.data()});
                    vec(in, {bb.data(), db.data(), nb.data()});
                    REQUIRE(same(ba, bb));
                    REQUIRE(same(da, db));
                    REQUIRE(same(na, nb));
                }
            }
        }
    }
}

TEST_CASE("kernel dispatch honours LAMLAB_SIMD") {
    setenv("LAMLAB_SIMD", "scalar", 1);
    CHECK(active_row_kernel() == &row_kernel_scalar);
    CHECK(std::strcmp(active_kernel_name(), "scalar") == 0);
    unsetenv("LAMLAB_SIMD");
    if (avx2_available()) {
        CHECK(active_row_kernel() == avx2_row_kernel());
        CHECK(std::strcmp(active_kernel_name(), "avx2") == 0);
    } else {
        CHECK(active_row_kernel() == &row_kernel_scalar);
    }
}

TEST_CASE("scalar kernel classifies a known row") {
    // One cell, u = (x, 0) on a unit cell: both triangles have gradient diag(1, 0).
    const double b1[] = {0, 1}, b2[] = {0, 0}, t1[] = {0, 1}, t2[] = {0, 0};
    const double sd1[] = {1}, sd2[] = {0};
    const RowInput in{b1, b2, t1, t2, 1, 1.0, 1.0, sd1, sd2, 1, 1e-7};
    double bad[2], dist2[2], norm2[2];
    row_kernel_scalar(in, {bad, dist2, norm2});
    CHECK(bad[0] == 0.0);
    CHECK(bad[1] == 0.0);
    CHECK(norm2[0] == 1.0);
    const RowInput in0{b1, b2, t1, t2, 1, 1.0, 1.0, sd1, sd2, 0, 1e-7};
    row_kernel_scalar(in0, {bad, dist2, norm2});
    CHECK(bad[0] == 1.0);
    CHECK(dist2[0] == 1.0);
}
