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

// Vector kernels over Z/pZ for p < 2^15. Every product a*x + y then fits in a signed
// 32-bit lane, which is what the AVX2 path relies on.

#ifndef GOP_KERNELS_HPP
#define GOP_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace gop::kernels {

inline constexpr std::uint32_t kMaxPrime = 1U << 15;

/// y[i] = (y[i] + a * x[i]) mod p.
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
/// y[i] = (a * y[i]) mod p.
void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
void scale_mod_scalar(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
void scale_mod_avx2(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);

bool avx2_available();
/// "avx2" or "scalar": the variant the dispatchers use. GOP_SIMD=scalar forces scalar.
const char* active_variant();

}  // namespace gop::kernels

#endif  // GOP_KERNELS_HPP
