// SPDX-License-Identifier: Apache-2.0
#include <immintrin.h>

#include <cmath>

#include "lamlab/simd/kernels.hpp"

namespace lamlab::simd {

void row_kernel_avx2_impl(const RowInput& in, const RowOutput& out);

namespace {

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }
// Operand order mirrors std::max(a, b) == (a < b ? b : a) and std::min(a, b) == (b < a ? b : a).
inline __m256d vmax(__m256d a, __m256d b) { return _mm256_blendv_pd(a, b, _mm256_cmp_pd(a, b, _CMP_LT_OQ)); }
inline __m256d vmin(__m256d a, __m256d b) { return _mm256_blendv_pd(a, b, _mm256_cmp_pd(b, a, _CMP_LT_OQ)); }

struct Classified {
    __m256d bad, dist2, norm2;
};

inline Classified classify(__m256d g11, __m256d g12, __m256d g21, __m256d g22, const RowInput& in) {
    const __m256d offmax = vmax(vabs(g12), vabs(g21));
    const __m256d off2 = _mm256_add_pd(_mm256_mul_pd(g12, g12), _mm256_mul_pd(g21, g21));
    __m256d best, bestd;
    if (in.nsigma == 0) {
        best = vmax(vmax(vabs(g11), vabs(g22)), offmax);
        bestd = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(g11, g11), _mm256_mul_pd(g22, g22)), off2);
    } else {
        best = _mm256_set1_pd(INFINITY);
        bestd = _mm256_set1_pd(INFINITY);
        for (std::size_t s = 0; s < in.nsigma; ++s) {
            const __m256d a = _mm256_sub_pd(g11, _mm256_set1_pd(in.sd1[s]));
            const __m256d b = _mm256_sub_pd(g22, _mm256_set1_pd(in.sd2[s]));
            const __m256d e = vmax(vmax(vabs(a), vabs(b)), offmax);
            best = vmin(e, best);
            const __m256d dd = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b)), off2);
            bestd = vmin(dd, bestd);
        }
    }
    Classified c;
    c.bad = _mm256_and_pd(_mm256_cmp_pd(best, _mm256_set1_pd(in.tol), _CMP_GT_OQ), _mm256_set1_pd(1.0));
    c.dist2 = vmin(bestd, _mm256_set1_pd(1.0));
    c.norm2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(g11, g11), _mm256_mul_pd(g12, g12)),
                            _mm256_add_pd(_mm256_mul_pd(g21, g21), _mm256_mul_pd(g22, g22)));
    return c;
}

inline void store_pair(double* dst, __m256d first, __m256d second) {
    alignas(32) double a[4], b[4];
    _mm256_store_pd(a, first);
    _mm256_store_pd(b, second);
    for (int i = 0; i < 4; ++i) {
        dst[2 * i] = a[i];
        dst[2 * i + 1] = b[i];
    }
}

} // namespace

void row_kernel_avx2_impl(const RowInput& in, const RowOutput& out) {
    const __m256d s1 = _mm256_set1_pd(in.s1);
    const __m256d s2 = _mm256_set1_pd(in.s2);
    std::size_t c = 0;
    for (; c + 4 <= in.ncells; c += 4) {
        const __m256d b1l = _mm256_loadu_pd(in.b1 + c), b1r = _mm256_loadu_pd(in.b1 + c + 1);
        const __m256d b2l = _mm256_loadu_pd(in.b2 + c), b2r = _mm256_loadu_pd(in.b2 + c + 1);
        const __m256d t1l = _mm256_loadu_pd(in.t1 + c), t1r = _mm256_loadu_pd(in.t1 + c + 1);
        const __m256d t2l = _mm256_loadu_pd(in.t2 + c), t2r = _mm256_loadu_pd(in.t2 + c + 1);
        const Classified p = classify(_mm256_div_pd(_mm256_sub_pd(b1r, b1l), s1), _mm256_div_pd(_mm256_sub_pd(t1r, b1r), s2),
                                      _mm256_div_pd(_mm256_sub_pd(b2r, b2l), s1), _mm256_div_pd(_mm256_sub_pd(t2r, b2r), s2), in);
        const Classified q = classify(_mm256_div_pd(_mm256_sub_pd(t1r, t1l), s1), _mm256_div_pd(_mm256_sub_pd(t1l, b1l), s2),
                                      _mm256_div_pd(_mm256_sub_pd(t2r, t2l), s1), _mm256_div_pd(_mm256_sub_pd(t2l, b2l), s2), in);
        store_pair(out.bad + 2 * c, p.bad, q.bad);
        store_pair(out.dist2 + 2 * c, p.dist2, q.dist2);
        store_pair(out.norm2 + 2 * c, p.norm2, q.norm2);
    }
    if (c < in.ncells) {
        RowInput rest = in;
        rest.b1 += c;
        rest.b2 += c;
        rest.t1 += c;
        rest.t2 += c;
        rest.ncells = in.ncells - c;
        const RowOutput tail{out.bad + 2 * c, out.dist2 + 2 * c, out.norm2 + 2 * c};
        row_kernel_scalar(rest, tail);
    }
}

} // namespace lamlab::simd
