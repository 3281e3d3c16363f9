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

#include "gop/pade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gop/growth.hpp"
#include "gop/valuation.hpp"

namespace gop {

namespace {

double log_abs(const BigInt& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<BigRat>>& A, int cols) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int c = 0; c < cols && row < A.size(); ++c) {
        std::size_t piv = row;
        while (piv < A.size() && A[piv][static_cast<std::size_t>(c)] == 0) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[row], A[piv]);
        const BigRat inv = 1 / A[row][static_cast<std::size_t>(c)];
        for (auto& x : A[row]) x *= inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][static_cast<std::size_t>(c)] == 0) continue;
            const BigRat f = A[r][static_cast<std::size_t>(c)];
            for (int k = 0; k < cols; ++k) A[r][static_cast<std::size_t>(k)] -= f * A[row][static_cast<std::size_t>(k)];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

BigRat det_rat(std::vector<std::vector<BigRat>> A) {
    const std::size_t n = A.size();
    BigRat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && A[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(A[piv], A[c]);
            det = -det;
        }
        det *= A[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (A[r][c] == 0) continue;
            BigRat f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
        }
    }
    return det;
}

Poly series_times_poly_truncated(const Poly& Q, const TruncatedSeries& f, int keep) {
    std::vector<BigRat> out(static_cast<std::size_t>(keep));
    for (int k = 0; k < keep; ++k)
        for (int j = 0; j <= std::min(k, Q.degree()); ++j)
            if (k - j < f.trunc_order()) out[static_cast<std::size_t>(k)] += Q.coeff(static_cast<std::size_t>(j)) * f.coeffs[static_cast<std::size_t>(k - j)];
    return Poly(std::move(out));
}

}  // namespace

PadeApproximant pade_type2(const std::vector<TruncatedSeries>& f, int N, int M) {
    if (N < 0 || M < 1 || f.empty()) throw InvalidParameters("need N >= 0, M >= 1 and at least one series");
    const int need = N + M + 1;
    for (const auto& s : f)
        if (s.trunc_order() < need)
            throw InsufficientTruncation("series known to order " + std::to_string(s.trunc_order()) + ", need " +
                                         std::to_string(need));
    PadeApproximant out;
    std::vector<BigRat> all;
    for (const auto& s : f) all.insert(all.end(), s.coeffs.begin(), s.coeffs.begin() + need);
    out.scale = common_denominator(all);

    const int cols = N + 1;
    std::vector<std::vector<BigRat>> A;
    BigInt height = 0;
    for (const auto& s : f)
        for (int k = N + 1; k <= N + M; ++k) {
            std::vector<BigRat> row(static_cast<std::size_t>(cols));
            bool nonzero = false;
            for (int j = 0; j <= N; ++j) {
                BigRat c = s.coeffs[static_cast<std::size_t>(k - j)] * BigRat(out.scale);
                row[static_cast<std::size_t>(j)] = c;
                if (c != 0) {
                    nonzero = true;
                    if (abs(c.get_num()) > height) height = abs(c.get_num());
                }
            }
            if (nonzero) A.push_back(std::move(row));
        }
    out.equations = static_cast<int>(A.size());
    out.unknowns = cols;
    if (out.unknowns > out.equations && height > 0) {
        const double m = out.equations, n = out.unknowns;
        out.log_siegel_bound = m / (n - m) * (std::log(n) + log_abs(height));
    } else {
        out.log_siegel_bound = out.unknowns > out.equations ? 0 : std::numeric_limits<double>::infinity();
    }

    std::vector<int> pivots = rref(A, cols);
    out.kernel_dimension = cols - static_cast<int>(pivots.size());
    if (out.kernel_dimension == 0) throw NoSolution("only the zero polynomial satisfies the order conditions");
    int free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<BigRat> x(static_cast<std::size_t>(cols));
    x[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = -A[r][static_cast<std::size_t>(free_col)];

    Poly Q(x);
    ZPoly zq = primitive_part(Q);
    Q = zq.to_poly();
    if (Q.coeff(static_cast<std::size_t>(*Q.order_at_zero())) < 0) Q = -Q;
    out.Q = Q;
    BigInt hq = 0;
    for (const auto& c : Q.coeffs()) hq = std::max(hq, BigInt(abs(c.get_num())));
    out.log_height_Q = log_abs(hq);
    for (const auto& s : f) out.P.push_back(series_times_poly_truncated(Q, s, N + 1));
    return out;
}

ResidualOrder residual_order(const Poly& Q, const PolyVec& P, const std::vector<TruncatedSeries>& f) {
    if (P.size() != f.size()) throw InvalidParameters("P and f have different lengths");
    ResidualOrder out;
    int horizon = INT32_MAX;
    for (const auto& s : f) horizon = std::min(horizon, s.trunc_order());
    int maxdeg = Q.degree();
    for (const auto& p : P) maxdeg = std::max(maxdeg, p.degree());
    if (horizon <= maxdeg) throw InsufficientTruncation("series truncation does not reach the approximant degree");
    out.order = horizon;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Poly r = series_times_poly_truncated(Q, f[i], horizon) - P[i];
        auto v = r.order_at_zero();
        if (v && *v < out.order) out.order = *v;
    }
    out.reached_horizon = out.order == horizon;
    return out;
}

std::vector<PolyVec> derived_tower(const PolyVec& P, const RatMat& G, const Poly& T, int h_max) {
    const std::size_t n = G.dim();
    if (P.size() != n) throw InvalidParameters("P length does not match the system dimension");
    std::vector<std::vector<Poly>> TG(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFn r = RatFn(T) * G(i, j);
            if (!r.is_polynomial()) throw InvalidParameters("T*G is not polynomial");
            TG[i][j] = r.num();
        }
    const Poly dT = T.derivative();
    std::vector<PolyVec> tower{P};
    PolyVec X = P;  // T^m (D - G)^m P
    BigInt fact = 1;
    for (int m = 0; m < h_max; ++m) {
        // T^{m+1}(D-G)^{m+1}P = T X' - (TG) X - m T' X.
        PolyVec next(n);
        for (std::size_t i = 0; i < n; ++i) {
            Poly acc = T * X[i].derivative() - dT * X[i] * BigRat(m);
            for (std::size_t k = 0; k < n; ++k) acc -= TG[i][k] * X[k];
            next[i] = std::move(acc);
        }
        X = std::move(next);
        fact *= (m + 1);
        PolyVec el;
        const BigRat inv = BigRat(1) / BigRat(fact);
        for (const auto& x : X) el.push_back(x * inv);
        tower.push_back(std::move(el));
    }
    return tower;
}

Poly poly_det(const PolyMat& M) {
    const std::size_t n = M.size();
    if (n == 0) return Poly::constant(1);
    int bound = 0;
    for (std::size_t j = 0; j < n; ++j) {
        int d = 0;
        for (std::size_t i = 0; i < n; ++i) d = std::max(d, M[i][j].degree());
        bound += d;
    }
    std::vector<BigRat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        BigRat x = k;
        std::vector<std::vector<BigRat>> A(n, std::vector<BigRat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A[i][j] = M[i][j].eval(x);
        xs.push_back(x);
        ys.push_back(det_rat(std::move(A)));
    }
    return interpolate(xs, ys);
}

ShidlovskiiData shidlovskii_matrix(const std::vector<PolyVec>& tower) {
    if (tower.empty()) throw InvalidParameters("empty tower");
    const std::size_t n = tower[0].size();
    if (tower.size() < n) throw InvalidParameters("tower shorter than the system dimension");
    ShidlovskiiData d;
    d.R0.assign(n, std::vector<Poly>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) d.R0[i][j] = tower[j][i];
    d.delta = poly_det(d.R0);
    return d;
}

bool verify_similileibniz(const RatMat& G, const PolyVec& P, int s_max) {
    const std::size_t n = G.dim();
    if (P.size() != n) throw InvalidParameters("P length does not match the system dimension");
    std::vector<RatMat> gs = gs_sequence(G, s_max);
    // Y_j = (D - G)^j P.
    std::vector<std::vector<RatFn>> Y{std::vector<RatFn>(P.begin(), P.end())};
    for (int j = 1; j <= s_max; ++j) {
        const auto& prev = Y.back();
        std::vector<RatFn> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            RatFn acc = prev[i].derivative();
            for (std::size_t k = 0; k < n; ++k) acc -= G(i, k) * prev[k];
            next[i] = acc;
        }
        Y.push_back(std::move(next));
    }
    BigInt fs = 1;
    for (int s = 1; s <= s_max; ++s) {
        fs *= s;
        const RatMat& Gs = gs[static_cast<std::size_t>(s - 1)];
        std::vector<RatFn> lhs(n), rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            RatFn acc;
            for (std::size_t k = 0; k < n; ++k) acc += Gs(i, k) * RatFn(P[k]);
            lhs[i] = acc * RatFn(BigRat(1) / BigRat(fs));
        }
        for (int j = 0; j <= s; ++j) {
            BigInt a, b;
            mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(s - j));
            mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(j));
            BigRat coef(j % 2 ? -1 : 1);
            coef /= BigRat(a * b);
            for (std::size_t i = 0; i < n; ++i) {
                RatFn term = Y[static_cast<std::size_t>(j)][i];
                for (int d = 0; d < s - j; ++d) term = term.derivative();
                rhs[i] += RatFn(coef) * term;
            }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

PadeSystem build_pade_system(const std::vector<TruncatedSeries>& f, const RatMat& G, int N, int M) {
    PadeSystem sys;
    sys.N = N;
    sys.M = M;
    sys.f = f;
    sys.approx = pade_type2(f, N, M);
    sys.residual = residual_order(sys.approx.Q, sys.approx.P, f);
    sys.T = minimal_T(G);
    sys.t = t_degree(G);
    const int n = static_cast<int>(G.dim());
    sys.tower = derived_tower(sys.approx.P, G, sys.T, std::max(n - 1, 0));
    sys.degree_bound_ok = true;
    for (std::size_t m = 0; m < sys.tower.size(); ++m)
        for (const auto& p : sys.tower[m])
            if (p.degree() > N + sys.t * static_cast<int>(m)) sys.degree_bound_ok = false;
    sys.shidlovskii = shidlovskii_matrix(sys.tower);
    return sys;
}

}  // namespace gop
