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

#include "gop/ratfn.hpp"

#include <stdexcept>

namespace gop {

RatFn::RatFn(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (den.degree() > 0) {
        Poly g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    BigRat lc = den.leading();
    num_ = num * BigRat(1 / lc);
    den_ = den * BigRat(1 / lc);
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    Poly ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
    return RatFn(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) {
        RatFn r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    // Cross-cancel before multiplying so the final gcd stays small.
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Poly n1 = exact_div(a.num_, g1), d2 = exact_div(b.den_, g1);
    Poly n2 = exact_div(b.num_, g2), d1 = exact_div(a.den_, g2);
    RatFn r;
    Poly num = n1 * n2, den = d1 * d2;
    BigRat lc = den.leading();
    r.num_ = num * BigRat(1 / lc);
    r.den_ = den * BigRat(1 / lc);
    return r;
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    RatFn inv;
    BigRat lc = b.num_.leading();
    inv.num_ = b.den_ * BigRat(1 / lc);
    inv.den_ = b.num_ * BigRat(1 / lc);
    return a * inv;
}

RatFn RatFn::derivative() const {
    if (is_polynomial()) return RatFn(num_.derivative() * BigRat(1 / den_.leading()));
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFn RatFn::pow(int k) const {
    if (k < 0) return RatFn(1) / pow(-k);
    RatFn r(1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

BigRat RatFn::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RatFn RatFn::shift(const BigRat& a) const { return RatFn(num_.shift(a), den_.shift(a)); }

RatFn RatFn::invert_variable() const {
    if (is_zero()) return {};
    const int dn = num_.degree(), dd = den_.degree();
    const int m = std::max(dn, dd);
    // f(1/u) = u^{m-dn} rev(num) / (u^{m-dd} rev(den)).
    return RatFn(num_.reversed(dn) * Poly::monomial(1, static_cast<std::size_t>(m - dn)),
                 den_.reversed(dd) * Poly::monomial(1, static_cast<std::size_t>(m - dd)));
}

std::optional<int> RatFn::order_at_zero() const {
    if (is_zero()) return std::nullopt;
    return *num_.order_at_zero() - *den_.order_at_zero();
}

int RatFn::pole_order_at(const BigRat& a) const {
    if (is_zero()) return 0;
    auto o = shift(a).order_at_zero();
    return *o < 0 ? -*o : 0;
}

std::vector<BigRat> RatFn::laurent(int count) const {
    if (is_zero() || count <= 0) return {};
    const int vn = *num_.order_at_zero(), vd = *den_.order_at_zero();
    Poly n = num_.drop_low(static_cast<std::size_t>(vn));
    Poly d = den_.drop_low(static_cast<std::size_t>(vd));
    // Power-series division n / d with d(0) != 0.
    std::vector<BigRat> out(static_cast<std::size_t>(count));
    const BigRat inv = 1 / d.coeff(0);
    for (int k = 0; k < count; ++k) {
        BigRat acc = n.coeff(static_cast<std::size_t>(k));
        const int lim = std::min(k, d.degree());
        for (int j = 1; j <= lim; ++j) acc -= d.coeffs()[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc * inv;
    }
    return out;
}

std::vector<BigRat> RatFn::taylor(int count) const {
    std::vector<BigRat> out(static_cast<std::size_t>(std::max(count, 0)));
    if (is_zero()) return out;
    const int v = *order_at_zero();
    if (v < 0) throw std::domain_error("taylor: pole at 0");
    if (v >= count) return out;
    auto l = laurent(count - v);
    for (int k = 0; k < count - v; ++k) out[static_cast<std::size_t>(k + v)] = l[static_cast<std::size_t>(k)];
    return out;
}

std::string RatFn::to_string(const std::string& var) const {
    if (is_polynomial()) {
        Poly p = num_ * BigRat(1 / den_.leading());
        return p.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace gop
