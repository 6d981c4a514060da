// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "lamlab/simd/kernels.hpp"

namespace lamlab::simd {

namespace {

// The AVX2 variant repeats these operations lane by lane in the same order.
inline void classify(double g11, double g12, double g21, double g22, const RowInput& in, double& bad, double& dist2,
                     double& norm2) {
    const double offmax = std::max(std::fabs(g12), std::fabs(g21));
    const double off2 = g12 * g12 + g21 * g21;
    double best;
    double bestd;
    if (in.nsigma == 0) {
        best = std::max(std::max(std::fabs(g11), std::fabs(g22)), offmax);
        bestd = (g11 * g11 + g22 * g22) + off2;
    } else {
        best = INFINITY;
        bestd = INFINITY;
        for (std::size_t s = 0; s < in.nsigma; ++s) {
            const double a = g11 - in.sd1[s];
            const double b = g22 - in.sd2[s];
            const double e = std::max(std::max(std::fabs(a), std::fabs(b)), offmax);
            best = std::min(e, best);
            const double dd = (a * a + b * b) + off2;
            bestd = std::min(dd, bestd);
        }
    }
    bad = best > in.tol ? 1.0 : 0.0;
    dist2 = std::min(bestd, 1.0);
    norm2 = (g11 * g11 + g12 * g12) + (g21 * g21 + g22 * g22);
}

} // namespace

void row_kernel_scalar(const RowInput& in, const RowOutput& out) {
    for (std::size_t c = 0; c < in.ncells; ++c) {
        const double b1l = in.b1[c], b1r = in.b1[c + 1], b2l = in.b2[c], b2r = in.b2[c + 1];
        const double t1l = in.t1[c], t1r = in.t1[c + 1], t2l = in.t2[c], t2r = in.t2[c + 1];
        // T1 = (v00, v10, v11)
        classify((b1r - b1l) / in.s1, (t1r - b1r) / in.s2, (b2r - b2l) / in.s1, (t2r - b2r) / in.s2, in, out.bad[2 * c],
                 out.dist2[2 * c], out.norm2[2 * c]);
        // T2 = (v00, v11, v01)
        classify((t1r - t1l) / in.s1, (t1l - b1l) / in.s2, (t2r - t2l) / in.s1, (t2l - b2l) / in.s2, in,
                 out.bad[2 * c + 1], out.dist2[2 * c + 1], out.norm2[2 * c + 1]);
    }
}

} // namespace lamlab::simd
