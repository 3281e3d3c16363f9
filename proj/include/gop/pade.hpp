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

#ifndef GOP_PADE_HPP
#define GOP_PADE_HPP

#include <vector>

#include "gop/diffop.hpp"

namespace gop {

using PolyVec = std::vector<Poly>;
using PolyMat = std::vector<std::vector<Poly>>;  // [row][column]

struct PadeApproximant {
    Poly Q;
    PolyVec P;
    BigInt scale;              // lcm of the coefficient denominators of f up to z^(N+M)
    int equations = 0;
    int unknowns = 0;
    int kernel_dimension = 0;
    double log_siegel_bound = 0;  // log of (unknowns * A)^(equations / (unknowns - equations)), reported only
    double log_height_Q = 0;      // log max |coefficient of Q|
};

/// Q of degree <= N with integer coprime coefficients and Q*f_i - P_i = O(z^(N+M+1)), deg P_i <= N.
PadeApproximant pade_type2(const std::vector<TruncatedSeries>& f, int N, int M);

/// Smallest valuation of Q*f_i - P_i, or the truncation horizon when all vanish there.
struct ResidualOrder {
    int order = 0;
    bool reached_horizon = false;
};
ResidualOrder residual_order(const Poly& Q, const PolyVec& P, const std::vector<TruncatedSeries>& f);

/// Tower element m: T^m/m! (D - G)^m P, m = 0..h_max. Index 0 is P.
std::vector<PolyVec> derived_tower(const PolyVec& P, const RatMat& G, const Poly& T, int h_max);

/// Matrix with column j the tower element j (j = 0..n-1) and its determinant.
struct ShidlovskiiData {
    PolyMat R0;
    Poly delta;
};
ShidlovskiiData shidlovskii_matrix(const std::vector<PolyVec>& tower);

/// (G_s/s!) P = sum_j (-1)^j / ((s-j)! j!) D^(s-j) (D-G)^j P for s = 1..s_max.
bool verify_similileibniz(const RatMat& G, const PolyVec& P, int s_max);

/// Determinant over Q[z] by evaluation and interpolation.
Poly poly_det(const PolyMat& M);

struct PadeSystem {
    int N = 0, M = 0;
    PadeApproximant approx;
    std::vector<TruncatedSeries> f;
    Poly T;
    int t = 0;
    std::vector<PolyVec> tower;
    ShidlovskiiData shidlovskii;
    ResidualOrder residual;
    bool degree_bound_ok = false;
};
PadeSystem build_pade_system(const std::vector<TruncatedSeries>& f, const RatMat& G, int N, int M);

}  // namespace gop

#endif  // GOP_PADE_HPP
