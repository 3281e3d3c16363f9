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

#include "gop/valuation.hpp"

#include <algorithm>

#include "gop/integers.hpp"

namespace gop {

long GaussVal::value() const {
    if (is_infinite()) throw std::logic_error("value of an infinite valuation");
    return v_;
}

GaussVal operator+(const GaussVal& a, const GaussVal& b) {
    if (a.is_infinite() || b.is_infinite()) return GaussVal::infinity();
    return GaussVal::finite(a.v_ + b.v_);
}

bool operator<(const GaussVal& a, const GaussVal& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.v_ < b.v_;
}

std::string GaussVal::to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

GaussVal min(const GaussVal& a, const GaussVal& b) { return b < a ? b : a; }

GaussVal vp_rat(const BigRat& q, std::uint32_t p) {
    if (q == 0) return GaussVal::infinity();
    return GaussVal::finite(vp(q.get_num(), p) - vp(q.get_den(), p));
}

GaussVal vp_poly(const Poly& f, std::uint32_t p) {
    GaussVal v = GaussVal::infinity();
    for (const auto& c : f.coeffs()) v = min(v, vp_rat(c, p));
    return v;
}

GaussVal vp_zpoly(const ZPoly& f, std::uint32_t p) {
    if (f.is_zero()) return GaussVal::infinity();
    return GaussVal::finite(vp(f.content(), p));
}

GaussVal gauss_valuation(const RatFn& f, std::uint32_t p) {
    if (f.is_zero()) return GaussVal::infinity();
    return GaussVal::finite(vp_poly(f.num(), p).value() - vp_poly(f.den(), p).value());
}

GaussVal series_gauss_valuation(const std::vector<BigRat>& c, std::uint32_t p) {
    GaussVal v = GaussVal::infinity();
    for (const auto& x : c) v = min(v, vp_rat(x, p));
    return v;
}

unsigned long kummer_vp_factorial(unsigned long n, std::uint32_t p) {
    unsigned long digits = 0;
    for (unsigned long m = n; m; m /= p) digits += m % p;
    return (n - digits) / (p - 1);
}

unsigned long legendre_vp_factorial(unsigned long n, std::uint32_t p) {
    unsigned long s = 0;
    for (unsigned long q = n / p; q; q /= p) s += q;
    return s;
}

GaussVal accolade(unsigned long s, unsigned long m, std::uint32_t p) {
    if (m == 0 || s < p) return GaussVal::finite(0);
    std::vector<long> v;
    v.reserve(s);
    for (unsigned long l = 1; l <= s; ++l) {
        long e = 0;
        for (unsigned long x = l; x % p == 0; x /= p) ++e;
        v.push_back(e);
    }
    const std::size_t k = std::min<std::size_t>(m, v.size());
    std::partial_sort(v.begin(), v.begin() + static_cast<long>(k), v.end(), std::greater<>());
    long total = 0;
    for (std::size_t i = 0; i < k; ++i) total += v[i];
    return GaussVal::finite(-total);
}

BigInt lcm_upto(unsigned long n) {
    BigInt l = 1;
    for (unsigned long k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
    return l;
}

BigInt common_denominator(const std::vector<BigRat>& values) {
    BigInt l = 1;
    for (const auto& q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

FpPoly reduce_poly_mod_p(const Poly& f, std::uint32_t p) {
    std::vector<std::uint32_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) c.push_back(fp_from_rat(q, p));
    return FpPoly(p, std::move(c));
}

FpRatFn reduce_ratfn_mod_p(const RatFn& f, std::uint32_t p) {
    if (f.is_zero()) return FpRatFn(p);
    GaussVal vn = vp_poly(f.num(), p), vd = vp_poly(f.den(), p);
    if (vn.value() < vd.value()) throw BadPrime(p, "negative Gauss valuation " + f.to_string());
    // Dividing by the denominator's content makes it primitive, so it has a unit coefficient.
    BigRat c = content(f.den());
    FpPoly num = reduce_poly_mod_p(f.num() * BigRat(1 / c), p);
    FpPoly den = reduce_poly_mod_p(f.den() * BigRat(1 / c), p);
    return FpRatFn(std::move(num), std::move(den));
}

}  // namespace gop
