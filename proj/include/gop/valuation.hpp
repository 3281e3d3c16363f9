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

#ifndef GOP_VALUATION_HPP
#define GOP_VALUATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gop/fp.hpp"
#include "gop/ratfn.hpp"

namespace gop {

/// p-adic Gauss valuation: an integer, or +infinity for the zero function.
class GaussVal {
public:
    enum class Kind { Finite, Infinite };

    static GaussVal finite(long v) { return GaussVal(Kind::Finite, v); }
    static GaussVal infinity() { return GaussVal(Kind::Infinite, 0); }

    Kind kind() const noexcept { return kind_; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
    /// The integer value; throws for +infinity.
    long value() const;

    friend GaussVal operator+(const GaussVal& a, const GaussVal& b);
    friend bool operator==(const GaussVal& a, const GaussVal& b) {
        return a.kind_ == b.kind_ && (a.kind_ == Kind::Infinite || a.v_ == b.v_);
    }
    friend bool operator<(const GaussVal& a, const GaussVal& b);
    friend bool operator<=(const GaussVal& a, const GaussVal& b) { return !(b < a); }
    friend bool operator>(const GaussVal& a, const GaussVal& b) { return b < a; }
    friend bool operator>=(const GaussVal& a, const GaussVal& b) { return !(a < b); }

    std::string to_string() const;

private:
    GaussVal(Kind k, long v) : kind_(k), v_(v) {}
    Kind kind_;
    long v_;
};

GaussVal min(const GaussVal& a, const GaussVal& b);

/// v_p of a rational; +infinity for 0.
GaussVal vp_rat(const BigRat& q, std::uint32_t p);
/// Minimum coefficient valuation of a polynomial.
GaussVal vp_poly(const Poly& f, std::uint32_t p);
GaussVal vp_zpoly(const ZPoly& f, std::uint32_t p);

GaussVal gauss_valuation(const RatFn& f, std::uint32_t p);
GaussVal series_gauss_valuation(const std::vector<BigRat>& c, std::uint32_t p);

/// v_p(n!) through the base-p digit sum.
unsigned long kummer_vp_factorial(unsigned long n, std::uint32_t p);
/// v_p(n!) as the sum of floor(n / p^k); the independent form of the same quantity.
unsigned long legendre_vp_factorial(unsigned long n, std::uint32_t p);

/// {s, m}_p as a valuation: minus the sum of the m largest v_p(lambda), lambda in 1..s.
GaussVal accolade(unsigned long s, unsigned long m, std::uint32_t p);

BigInt lcm_upto(unsigned long n);
BigInt common_denominator(const std::vector<BigRat>& values);

FpRatFn reduce_ratfn_mod_p(const RatFn& f, std::uint32_t p);
FpPoly reduce_poly_mod_p(const Poly& f, std::uint32_t p);

}  // namespace gop

#endif  // GOP_VALUATION_HPP
