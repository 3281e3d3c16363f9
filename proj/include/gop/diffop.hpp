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

#ifndef GOP_DIFFOP_HPP
#define GOP_DIFFOP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gop/ratfn.hpp"

namespace gop {

enum class Basis { D, Theta };

/// Linear differential operator sum c_k * X^k over Q(z), X = d/dz or theta = z d/dz.
class DiffOp {
public:
    DiffOp() : DiffOp(Basis::D, {RatFn(1)}) {}
    DiffOp(Basis basis, std::vector<RatFn> coeffs);

    static DiffOp D();
    static DiffOp theta();
    static DiffOp scalar(const RatFn& c, Basis basis);

    Basis basis() const noexcept { return basis_; }
    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.size() == 1 && c_[0].is_zero(); }
    const std::vector<RatFn>& coeffs() const noexcept { return c_; }
    const RatFn& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    const RatFn& leading() const { return c_.back(); }

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    DiffOp operator-() const;
    /// Left multiplication by a rational function.
    friend DiffOp operator*(const RatFn& r, const DiffOp& L);
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.basis_ == b.basis_ && a.c_ == b.c_; }

    /// Leading coefficient made 1 in the current basis.
    DiffOp monic() const;
    std::string to_string() const;

private:
    Basis basis_;
    std::vector<RatFn> c_;
};

DiffOp op_mul(const DiffOp& a, const DiffOp& b);
/// A = Q*B + R with ord R < ord B.
std::pair<DiffOp, DiffOp> op_div_right(const DiffOp& a, const DiffOp& b);

/// Same operator in the other basis, no normalization.
DiffOp convert_basis(const DiffOp& L, Basis target);
/// As convert_basis, but a Theta result is made monic.
DiffOp change_basis(const DiffOp& L, Basis target);

/// A point of the projective line over Q.
struct Point {
    bool infinite = false;
    BigRat a;
    static Point at(const BigRat& x) { return {false, x}; }
    static Point infinity() { return {true, 0}; }
    std::string to_string() const { return infinite ? "inf" : a.get_str(); }
    friend bool operator==(const Point& x, const Point& y) {
        return x.infinite == y.infinite && (x.infinite || x.a == y.a);
    }
};

/// L in the local variable u = z - a (or u = 1/z), returned in the theta_u basis.
DiffOp translate_to_point(const DiffOp& L, const Point& pt);
/// L with z replaced by u + a, kept in the D basis (D_z = D_u).
DiffOp shift_operator(const DiffOp& L, const BigRat& a);

/// Square matrix over Q(z).
class RatMat {
public:
    explicit RatMat(std::size_t n);
    RatMat(std::size_t n, std::vector<RatFn> entries);
    static RatMat identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    const RatFn& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    RatFn& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const std::vector<RatFn>& entries() const noexcept { return e_; }

    friend RatMat operator+(const RatMat& a, const RatMat& b);
    friend RatMat operator-(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const RatFn& s, const RatMat& a);
    friend bool operator==(const RatMat& a, const RatMat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    RatMat derivative() const;
    bool is_zero() const;
    std::string to_string() const;

private:
    std::size_t n_;
    std::vector<RatFn> e_;
};

/// Companion matrix of L normalized monic in the D basis.
RatMat companion(const DiffOp& L);
/// [G_1 = G, ..., G_smax] with G_{s+1} = G_s G + G_s'.
std::vector<RatMat> gs_sequence(const RatMat& G, int s_max);

/// Power series over Q known modulo z^N; coeffs.size() == N.
struct TruncatedSeries {
    std::vector<BigRat> coeffs;
    int trunc_order() const noexcept { return static_cast<int>(coeffs.size()); }
    /// Index of the first nonzero known coefficient, or nullopt.
    std::optional<int> valuation() const;
    bool is_zero() const;
};

TruncatedSeries series_derivative(const TruncatedSeries& f);
TruncatedSeries series_theta(const TruncatedSeries& f);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_from_ratfn(const RatFn& f, int N);

/// L(f) to its provable order. Throws PoleAtOrigin when a known negative power survives.
TruncatedSeries apply_operator(const DiffOp& L, const TruncatedSeries& f);

/// L(z^s) = z^offset * sum_k phi_k(s) z^k for the monic theta form of L.
struct PowerExpansion {
    int offset = 0;
    std::vector<Poly> phi;       // phi_k as polynomials in x
    std::vector<BigRat> values;  // phi_k(s)
};
PowerExpansion apply_to_power(const DiffOp& L, long s, int depth = 1);

/// Power-series basis f_i = z^i + O(z^n) at an ordinary point 0, each known modulo z^order.
std::vector<TruncatedSeries> ordinary_series_basis(const DiffOp& L, int order);

}  // namespace gop

#endif  // GOP_DIFFOP_HPP
