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

#ifndef GOP_FP_HPP
#define GOP_FP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gop/common.hpp"

namespace gop {

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);
/// Image of a p-integral rational in F_p; throws BadPrime when p divides the denominator.
std::uint32_t fp_from_rat(const BigRat& q, std::uint32_t p);

/// Dense polynomial over F_p, p < 2^15.
class FpPoly {
public:
    explicit FpPoly(std::uint32_t p) : p_(p) { check_prime(); }
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
    static FpPoly constant(std::uint32_t p, std::uint32_t c);
    static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t k);

    std::uint32_t prime() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }

    FpPoly operator-() const;
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    FpPoly scaled(std::uint32_t s) const;
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    FpPoly derivative() const;
    FpPoly monic() const;
    std::uint32_t eval(std::uint32_t x) const;
    std::string to_string(const std::string& var = "z") const;

private:
    void check_prime() const;
    void trim();
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

/// Element of F_p(z) in lowest terms with monic denominator.
class FpRatFn {
public:
    explicit FpRatFn(std::uint32_t p) : num_(p), den_(FpPoly::constant(p, 1)) {}
    FpRatFn(FpPoly num, FpPoly den);
    explicit FpRatFn(const FpPoly& num) : FpRatFn(num, FpPoly::constant(num.prime(), 1)) {}

    std::uint32_t prime() const noexcept { return num_.prime(); }
    const FpPoly& num() const noexcept { return num_; }
    const FpPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend FpRatFn operator+(const FpRatFn& a, const FpRatFn& b);
    friend FpRatFn operator-(const FpRatFn& a, const FpRatFn& b);
    friend FpRatFn operator*(const FpRatFn& a, const FpRatFn& b);
    friend FpRatFn operator/(const FpRatFn& a, const FpRatFn& b);
    friend bool operator==(const FpRatFn& a, const FpRatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    FpRatFn derivative() const;
    std::string to_string(const std::string& var = "z") const;

private:
    FpPoly num_, den_;
};

}  // namespace gop

#endif  // GOP_FP_HPP
