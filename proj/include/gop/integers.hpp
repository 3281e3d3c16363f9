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

#ifndef GOP_INTEGERS_HPP
#define GOP_INTEGERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gop/common.hpp"

namespace gop {

/// Prime factorization of |n| (n != 0), primes ascending. Trial division then Pollard rho.
std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n);

/// All positive divisors of |n|, ascending.
std::vector<BigInt> divisors(const BigInt& n);

bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi);

/// v_p of a nonzero integer.
long vp(const BigInt& n, std::uint32_t p);

}  // namespace gop

#endif  // GOP_INTEGERS_HPP
