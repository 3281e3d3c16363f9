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

#ifndef GOP_CATALOG_HPP
#define GOP_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "gop/diffop.hpp"

namespace gop {

/// a + b*sqrt(d) with d squarefree and d != 0, 1.
struct QuadParam {
    BigRat a;
    BigRat b;
    long d = 2;

    static QuadParam rational(const BigRat& x) { return {x, 0, 2}; }
    bool is_rational() const { return b == 0; }
    std::string to_string() const;
};

/// Closed-form coefficient rule a_n.
class CoeffGenerator {
public:
    enum class Kind { Polylog, Factorial, InverseFactorial, Constant, Geometric, Binomial, Hypergeometric };

    static CoeffGenerator polylog(int s);              // a_0 = 0, a_n = 1/n^s
    static CoeffGenerator factorial();                 // n!
    static CoeffGenerator inverse_factorial();         // 1/n!
    static CoeffGenerator constant(const BigRat& c);   // a_0 = c, a_n = 0
    static CoeffGenerator geometric(const BigRat& r);  // r^n
    /// Coefficients of (1 - z)^alpha * factor.
    static CoeffGenerator binomial(const BigRat& alpha, const Poly& factor = Poly::constant(1));
    /// prod (alpha_i)_n / (prod (beta_j)_n * n!).
    static CoeffGenerator hypergeometric(std::vector<BigRat> alphas, std::vector<BigRat> betas);

    Kind kind() const noexcept { return kind_; }
    std::vector<BigRat> coefficients(int count) const;
    BigRat coefficient(int n) const;
    TruncatedSeries series(int N) const { return {coefficients(N)}; }
    std::string rule() const;

private:
    Kind kind_ = Kind::Constant;
    int s_ = 0;
    BigRat value_;
    Poly factor_;
    std::vector<BigRat> alphas_, betas_;
};

/// Operator D (1 - z) D theta^(s-1) in the D basis; annihilates Li_s.
DiffOp polylog_operator(int s);
/// System for (1, Li_1, ..., Li_s): G[1][0] = 1/(1-z), G[k][k-1] = 1/z.
RatMat polylog_system(int s);

/// theta prod (theta + beta_j - 1) - z prod (theta + alpha_i), theta basis.
DiffOp hypergeom_operator(const std::vector<BigRat>& alphas, const std::vector<BigRat>& betas);

/// True when the non-rational parameters pair up as (alpha_i, beta_j) with alpha_i - beta_j in N.
bool hypergeom_is_gfunction(const std::vector<QuadParam>& alphas, const std::vector<QuadParam>& betas);

/// D - sum r_j / (z - a_j).
DiffOp order1_g_operator(const std::vector<BigRat>& residues, const std::vector<BigRat>& poles);

DiffOp counterexample_theta2_minus_2();

struct GrowthReport {
    int n_max = 0;
    double log_C = 0;
    bool pass = false;
    std::optional<int> first_failure;  // least n violating either bound
    double min_log_C = 0;              // max over n of log max(|a_n|, den_n) / (n + 1)
};
/// |a_n| <= C^(n+1) and den(a_0..a_n) <= C^(n+1), n <= n_max, with C exact.
GrowthReport gfunction_growth_check(const CoeffGenerator& g, int n_max, const BigRat& C);
/// Same test with C = exp(log_C); comparisons in double precision on exact logarithms.
GrowthReport gfunction_growth_check_log(const CoeffGenerator& g, int n_max, double log_C);

/// c^n a_n is an integer for every n <= n_max.
bool eisenstein_check(const CoeffGenerator& g, const BigInt& c, int n_max);

struct CatalogEntry {
    std::string id;
    std::string description;
    DiffOp op;
    RatMat system{1};
    bool system_is_companion = true;
    std::optional<CoeffGenerator> series;  // a solution of op, when it is a power series at 0
};

std::vector<std::string> catalog_ids();
/// Accepts the listed ids and polylog:s for 1 <= s <= 8.
CatalogEntry catalog_get(const std::string& id);
std::vector<CatalogEntry> catalog_all();

/// Power-series solution vector of the entry's system known modulo z^N: (1, Li_1, ..., Li_s) for
/// polylog entries, (g, g', ..., g^(n-1)) for companion systems. Empty when the entry has no series.
std::vector<TruncatedSeries> system_solution(const CatalogEntry& e, int N);

}  // namespace gop

#endif  // GOP_CATALOG_HPP
