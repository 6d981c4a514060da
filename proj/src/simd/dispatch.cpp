// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <cstring>

#include "lamlab/simd/kernels.hpp"

namespace lamlab::simd {

#if defined(LAMLAB_BUILD_AVX2)
void row_kernel_avx2_impl(const RowInput& in, const RowOutput& out);
#endif

bool avx2_available() {
#if defined(LAMLAB_BUILD_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

RowKernel avx2_row_kernel() {
#if defined(LAMLAB_BUILD_AVX2)
    if (avx2_available()) return &row_kernel_avx2_impl;
#endif
    return nullptr;
}

namespace {

bool forced_scalar() {
    const char* v = std::getenv("LAMLAB_SIMD");
    return v != nullptr && std::strcmp(v, "scalar") == 0;
}

} // namespace

RowKernel active_row_kernel() {
    if (!forced_scalar()) {
        if (RowKernel k = avx2_row_kernel()) return k;
    }
    return &row_kernel_scalar;
}

const char* active_kernel_name() { return active_row_kernel() == &row_kernel_scalar ? "scalar" : "avx2"; }

} // namespace lamlab::simd
