// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace lamlab::simd {

/// Two vertex rows of a structured mesh: bottom (b) and top (t), components 1 and 2,
/// ncells + 1 entries each.
struct RowInput {
    const double* b1;
    const double* b2;
    const double* t1;
    const double* t2;
    std::size_t ncells;
    double s1, s2;
    const double* sd1; // Sigma entries, nsigma each; nsigma == 0 acts as {0}
    const double* sd2;
    std::size_t nsigma;
    double tol;
};

/// Per triangle, in mesh order (T1, T2 of cell 0, then cell 1, ...).
struct RowOutput {
    double* bad;   // 1.0 or 0.0
    double* dist2; // min(1, squared distance to Sigma)
    double* norm2; // squared Frobenius norm
};

using RowKernel = void (*)(const RowInput&, const RowOutput&);

void row_kernel_scalar(const RowInput& in, const RowOutput& out);
/// nullptr unless the AVX2 variant is compiled in and the CPU supports it.
RowKernel avx2_row_kernel();

bool avx2_available();
/// AVX2 when compiled in and supported by the CPU, unless LAMLAB_SIMD=scalar.
RowKernel active_row_kernel();
const char* active_kernel_name();

} // namespace lamlab::simd
