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

#include "gop/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gop/integers.hpp"

namespace gop {

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
Poly::Poly(std::initializer_list<BigRat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const BigRat& c) { return Poly(std::vector<BigRat>{c}); }

Poly Poly::monomial(const BigRat& c, std::size_t k) {
    std::vector<BigRat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::z() { return monomial(1, 1); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const BigRat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(r));
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shift(const BigRat& a) const {
    if (a == 0 || is_constant()) return *this;
    // Taylor shift by repeated synthetic division.
    std::vector<BigRat> v = c_;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) v[j - 1] += a * v[j];
    return Poly(std::move(v));
}

Poly Poly::reversed(int nominal_degree) const {
    if (nominal_degree < degree()) throw std::invalid_argument("reversed: nominal degree too small");
    std::vector<BigRat> v(static_cast<std::size_t>(nominal_degree) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(nominal_degree) - i] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * BigRat(1 / leading());
}

std::optional<int> Poly::order_at_zero() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

Poly Poly::drop_low(std::size_t k) const {
    if (k >= c_.size()) return {};
    return Poly(std::vector<BigRat>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::truncate(std::size_t n) const {
    if (n >= c_.size()) return *this;
    return Poly(std::vector<BigRat>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigRat c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigRat a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<BigRat> r = a.coeffs();
    const int db = b.degree();
    std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - db) + 1);
    const BigRat inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        BigRat c = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

BigRat content(const Poly& p) {
    if (p.is_zero()) return 0;
    BigInt g = 0, l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRat r(g, l);
    r.canonicalize();
    if (p.leading() < 0) r = -r;
    return r;
}

ZPoly primitive_part(const Poly& p) {
    if (p.is_zero()) return {};
    BigRat c = content(p);
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        BigRat q = x / c;
        v.push_back(q.get_num());
    }
    return ZPoly(std::move(v));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.is_zero() ? a : primitive_part(a).to_poly();
    Poly y = b.is_zero() ? b : primitive_part(b).to_poly();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : primitive_part(r).to_poly();
    }
    return x.monic();
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    BigRat inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly pow(const Poly& p, unsigned k) {
    Poly r = Poly::constant(1), b = p;
    while (k) {
        if (k & 1U) r = r * b;
        k >>= 1U;
        if (k) b = b * b;
    }
    return r;
}

Poly compose(const Poly& p, const Poly& q) {
    Poly acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly::constant(p.coeffs()[static_cast<std::size_t>(i)]);
    return acc;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm.
    Poly f = p.monic();
    Poly df = f.derivative();
    Poly a = gcd(f, df);
    Poly b = exact_div(f, a);
    Poly c = exact_div(df, a);
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    return out;
}

BigRat resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int da = a.degree(), db = b.degree();
    if (da == 0) {
        BigRat r = 1;
        for (int i = 0; i < db; ++i) r *= a.leading();
        return r;
    }
    if (db == 0) {
        BigRat r = 1;
        for (int i = 0; i < da; ++i) r *= b.leading();
        return r;
    }
    Poly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    const int dr = r.degree();
    BigRat factor = 1;
    for (int i = 0; i < da - dr; ++i) factor *= b.leading();
    if ((da * db) % 2 != 0) factor = -factor;
    return factor * resultant(b, r);
}

RationalRootSplit rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    RationalRootSplit out;
    Poly f = p;
    int z0 = *f.order_at_zero();
    if (z0 > 0) {
        out.roots.emplace_back(BigRat(0), z0);
        f = f.drop_low(static_cast<std::size_t>(z0));
    }
    if (f.degree() > 0) {
        ZPoly zf = primitive_part(f);
        const BigInt lead = zf.coeffs().back();
        const BigInt tail = zf.coeffs().front();
        // Cauchy bound 1 + max |a_i / a_n|.
        BigRat bound = 0;
        for (const auto& c : zf.coeffs()) bound = std::max(bound, BigRat(abs(c), abs(lead)));
        bound += 1;
        std::vector<BigInt> us = divisors(tail), vs = divisors(lead);
        std::vector<BigRat> cands;
        for (const auto& u : us)
            for (const auto& v : vs) {
                BigInt g = gcd(u, v);
                if (g != 1) continue;
                BigRat q(u, v);
                if (q > bound) continue;
                cands.push_back(q);
                cands.push_back(-q);
            }
        std::sort(cands.begin(), cands.end());
        for (const auto& q : cands) {
            if (f.degree() <= 0) break;
            int mult = 0;
            Poly lin{-q, BigRat(1)};
            while (f.degree() > 0 && f.eval(q) == 0) {
                f = exact_div(f, lin);
                ++mult;
            }
            if (mult) out.roots.emplace_back(q, mult);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.cofactor = f.degree() > 0 ? f.monic() : Poly::constant(1);
    return out;
}

Poly interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
    // Newton divided differences.
    std::vector<BigRat> c = ys;
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
    Poly p;
    for (std::size_t k = n; k-- > 0;) p = p * Poly{-xs[k], BigRat(1)} + Poly::constant(c[k]);
    return p;
}

Poly falling_factorial(unsigned k) {
    Poly r = Poly::constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * Poly{BigRat(-static_cast<long>(i)), BigRat(1)};
    return r;
}

Poly rising_factorial(unsigned k) {
    Poly r = Poly::constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * Poly{BigRat(static_cast<long>(i)), BigRat(1)};
    return r;
}

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const BigInt& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(r));
}

BigInt ZPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Poly ZPoly::to_poly() const {
    std::vector<BigRat> v(c_.begin(), c_.end());
    return Poly(std::move(v));
}

}  // namespace gop
