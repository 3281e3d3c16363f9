/*
   Copyright 2026 The gop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gop/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define GOP_HAVE_X86 1
#endif

namespace gop::kernels {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] + a * x[i]) % p;
}

void scale_mod_scalar(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) y[i] = (a * y[i]) % p;
}

#ifdef GOP_HAVE_X86

namespace {

// v mod p for 0 <= v < 2^31 in eight lanes: quotient from a double reciprocal, then one
// correction step either way.
__attribute__((target("avx2"))) inline __m256i reduce_lanes(__m256i v, __m256i vp, __m256d inv) {
    __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(v));
    __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(v, 1));
    lo = _mm256_floor_pd(_mm256_mul_pd(lo, inv));
    hi = _mm256_floor_pd(_mm256_mul_pd(hi, inv));
    __m256i q = _mm256_set_m128i(_mm256_cvttpd_epi32(hi), _mm256_cvttpd_epi32(lo));
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, vp));
    __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
    __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vp, _mm256_set1_epi32(1)));
    return _mm256_sub_epi32(r, _mm256_and_si256(big, vp));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a,
                                                   std::size_t n, std::uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i v = _mm256_add_epi32(vy, _mm256_mullo_epi32(va, vx));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_lanes(v, vp, inv));
    }
    axpy_mod_scalar(y + i, x + i, a, n - i, p);
}

__attribute__((target("avx2"))) void scale_mod_avx2(std::uint32_t* y, std::uint32_t a, std::size_t n,
                                                    std::uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_lanes(_mm256_mullo_epi32(va, vy), vp, inv));
    }
    scale_mod_scalar(y + i, a, n - i, p);
}

bool avx2_available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

#else

void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
    axpy_mod_scalar(y, x, a, n, p);
}
void scale_mod_avx2(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
    scale_mod_scalar(y, a, n, p);
}
bool avx2_available() { return false; }

#endif

namespace {

bool use_avx2() {
    static const bool on = [] {
        const char* env = std::getenv("GOP_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return false;
        return avx2_available();
    }();
    return on;
}

}  // namespace

// Short vectors stay scalar: the AVX2 body needs at least one full lane group.
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
    if (n >= 8 && use_avx2())
        axpy_mod_avx2(y, x, a, n, p);
    else
        axpy_mod_scalar(y, x, a, n, p);
}

void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
    if (n >= 8 && use_avx2())
        scale_mod_avx2(y, a, n, p);
    else
        scale_mod_scalar(y, a, n, p);
}

const char* active_variant() { return use_avx2() ? "avx2" : "scalar"; }

}  // namespace gop::kernels
