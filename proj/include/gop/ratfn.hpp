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

#ifndef GOP_RATFN_HPP
#define GOP_RATFN_HPP

#include <optional>
#include <string>
#include <vector>

#include "gop/poly.hpp"

namespace gop {

/// Element of Q(z) in lowest terms with a monic denominator.
class RatFn {
public:
    RatFn() : den_(Poly::constant(1)) {}
    RatFn(const Poly& p) : num_(p), den_(Poly::constant(1)) {}  // NOLINT: implicit lift
    RatFn(const BigRat& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
    RatFn(long c) : RatFn(BigRat(c)) {}  // NOLINT
    RatFn(Poly num, Poly den);

    static RatFn z() { return RatFn(Poly::z()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFn derivative() const;
    RatFn pow(int k) const;
    /// Value at x; throws std::domain_error at a pole.
    BigRat eval(const BigRat& x) const;
    /// f(z + a).
    RatFn shift(const BigRat& a) const;
    /// f(1/z).
    RatFn invert_variable() const;
    /// ord_0(f): positive for zeros at 0, negative for poles; nullopt for f = 0.
    std::optional<int> order_at_zero() const;
    /// Pole order at z = a (0 when f is finite there).
    int pole_order_at(const BigRat& a) const;
    /// Laurent coefficients c_v, ..., c_{v+count-1} with v = order_at_zero(); empty for f = 0.
    std::vector<BigRat> laurent(int count) const;
    /// Taylor coefficients c_0..c_{count-1}; requires no pole at 0.
    std::vector<BigRat> taylor(int count) const;

    std::string to_string(const std::string& var = "z") const;

private:
    Poly num_, den_;
};

}  // namespace gop

#endif  // GOP_RATFN_HPP
