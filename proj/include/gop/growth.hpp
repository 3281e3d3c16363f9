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

#ifndef GOP_GROWTH_HPP
#define GOP_GROWTH_HPP

#include <cstdint>
#include <vector>

#include "gop/diffop.hpp"
#include "gop/valuation.hpp"

namespace gop {

using ZMat = std::vector<ZPoly>;  // row-major n x n

/// Monic lcm of the entry denominators, times the least k > 0 making T and T*G integral.
Poly minimal_T(const RatMat& G);

/// H_s = T^s G_s as integer polynomial matrices, s = 1..s_max, with T = minimal_T(G).
struct ScaledSequence {
    std::size_t n = 0;
    ZPoly T;
    std::vector<ZMat> H;  // H[s-1]
    /// Gauss valuation v_p(G_s / s!) (s >= 1), exact.
    GaussVal vp_normalized(int s, std::uint32_t p) const;
    /// Gauss valuation v_p(G_s) (s >= 0, G_0 = identity).
    GaussVal vp_gs(int s, std::uint32_t p) const;
};
ScaledSequence scaled_sequence(const RatMat& G, int s_max);

/// Max degree of T and of the entries of T*G.
int t_degree(const RatMat& G);

struct GalochkinTrace {
    Poly T;
    std::vector<int> s;
    std::vector<BigInt> q;
    std::vector<double> log_q_over_s;
};
GalochkinTrace galochkin_trace(const RatMat& G, int s_max);
GalochkinTrace galochkin_trace(const ScaledSequence& seq, const Poly& T);

/// h(s, p) = k * log p; k = max over m <= s of max(0, -v_p(G_m / m!)).
struct LogTerm {
    std::uint32_t prime = 0;
    BigRat exponent;  // value = exponent * log(prime)
    double value() const;
};
LogTerm h_s_p(const ScaledSequence& seq, int s, std::uint32_t p);

struct SizeEstimate {
    int s = 0;
    std::uint32_t P = 0;
    std::vector<LogTerm> terms;  // h(s, p) for every prime p <= P
    double sigma_hat = 0;
};
SizeEstimate size_estimate(const ScaledSequence& seq, int s, std::uint32_t P);

/// log+(1/R_p) with R_p = min over n <= s <= s_max of |G_s/s!|^(-1/s). Throws BadPrime when |G|_p > 1.
LogTerm radius_estimate(const ScaledSequence& seq, std::uint32_t p, int s_max);
/// Same quantity without the integrality precondition.
LogTerm radius_estimate_unchecked(const ScaledSequence& seq, std::uint32_t p, int s_max);
/// Hadamard estimate after removing the {s, n-1}_p and sup |G_i| factors of the Dwork-Robba bound.
LogTerm radius_estimate_corrected(const ScaledSequence& seq, std::uint32_t p, int s_max);

/// Per s = 1..s_max: v_p(G_s/s!) >= {s, n-1}_p + min_{i<n} v_p(G_i). Throws BadPrime when |G|_p > 1.
std::vector<bool> dwork_robba_check(const ScaledSequence& seq, std::uint32_t p, int s_max);

struct SizeRadiusReport {
    std::size_t n = 0;
    int s = 0;
    std::uint32_t P = 0;
    std::vector<LogTerm> h_terms;
    std::vector<LogTerm> rho_terms;
    std::vector<LogTerm> rho_corrected_terms;
    std::vector<std::uint32_t> bad_primes;
    double sigma_hat = 0;
    double rho_hat = 0;
    double rho_hat_corrected = 0;
    double slack = 0.3;
    double log_coefficient = 0;
    bool lower_ok = false;  // rho_hat <= sigma_hat + slack
    bool upper_ok = false;  // sigma_hat <= rho_hat + (n-1)(1 + c log s / s) + slack
    bool sandwich_ok = false;
};
SizeRadiusReport bombieri_report(const RatMat& G, int s, std::uint32_t P, double slack = 0.3, double c = 0.0);

/// h^+(T) and h^-(T) over primes <= P: sums of max(0, -v_p(T)) log p and min(0, -v_p(T)) log p.
std::pair<double, double> h_plus_minus(const Poly& T, std::uint32_t P);

}  // namespace gop

#endif  // GOP_GROWTH_HPP
