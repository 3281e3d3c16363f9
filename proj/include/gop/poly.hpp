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

#ifndef GOP_POLY_HPP
#define GOP_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gop/common.hpp"

namespace gop {

class ZPoly;

/// Dense univariate polynomial over Q. Index = degree; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRat> coeffs);
    Poly(std::initializer_list<BigRat> coeffs);

    static Poly constant(const BigRat& c);
    static Poly monomial(const BigRat& c, std::size_t k);
    /// The polynomial z.
    static Poly z();

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<BigRat>& coeffs() const noexcept { return c_; }
    /// Coefficient of z^i, zero past the degree.
    BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }
    const BigRat& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const BigRat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }
    friend Poly operator*(const BigRat& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    BigRat eval(const BigRat& x) const;
    /// p(z + a).
    Poly shift(const BigRat& a) const;
    /// z^deg * p(1/z) with the given nominal degree (>= degree()).
    Poly reversed(int nominal_degree) const;
    Poly monic() const;
    /// Multiplicity of z as a factor; nullopt for the zero polynomial.
    std::optional<int> order_at_zero() const;
    /// p / z^k, assuming z^k divides p.
    Poly drop_low(std::size_t k) const;
    Poly truncate(std::size_t n) const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned k);
/// p(q(z)).
Poly compose(const Poly& p, const Poly& q);

/// Positive rational c such that p / c has coprime integer coefficients with positive leading term.
BigRat content(const Poly& p);
ZPoly primitive_part(const Poly& p);

/// Squarefree decomposition over Q: pairs (factor, multiplicity), factors monic and squarefree.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);
/// Resultant over Q.
BigRat resultant(const Poly& a, const Poly& b);

/// Distinct rational roots with multiplicity, and the cofactor free of rational roots.
struct RationalRootSplit {
    std::vector<std::pair<BigRat, int>> roots;
    Poly cofactor;
};
RationalRootSplit rational_roots(const Poly& p);

/// Interpolating polynomial through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys);

/// Falling factorial x(x-1)...(x-k+1) and rising factorial x(x+1)...(x+k-1).
Poly falling_factorial(unsigned k);
Poly rising_factorial(unsigned k);

/// Dense polynomial over Z; the workhorse for denominator-free recurrences.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const BigInt& s);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const BigInt& s) { return a *= s; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    ZPoly derivative() const;
    /// gcd of the coefficients (non-negative); 0 for the zero polynomial.
    BigInt content() const;
    Poly to_poly() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

}  // namespace gop

#endif  // GOP_POLY_HPP
