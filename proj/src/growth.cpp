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

#include "gop/growth.hpp"

#include <algorithm>
#include <cmath>

#include "gop/integers.hpp"

namespace gop {

namespace {

ZPoly to_zpoly(const Poly& p) {
    std::vector<BigInt> v;
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw std::logic_error("expected an integral polynomial");
        v.push_back(c.get_num());
    }
    return ZPoly(std::move(v));
}

BigInt matrix_content(const ZMat& M) {
    BigInt g = 0;
    for (const auto& e : M) {
        BigInt c = e.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

BigInt factorial(unsigned long m) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

void require_integral(const ScaledSequence& seq, std::uint32_t p) {
    GaussVal v = seq.vp_gs(1, p);
    if (!v.is_infinite() && v.value() < 0) throw BadPrime(p, "system has negative Gauss valuation");
}

}  // namespace

Poly minimal_T(const RatMat& G) {
    Poly L = Poly::constant(1);
    for (const auto& e : G.entries())
        if (!e.is_zero()) L = exact_div(L * e.den(), gcd(L, e.den()));
    std::vector<BigRat> all = L.coeffs();
    for (const auto& e : G.entries()) {
        RatFn r = RatFn(L) * e;
        if (!r.is_polynomial()) throw std::logic_error("minimal_T: denominator not cleared");
        all.insert(all.end(), r.num().coeffs().begin(), r.num().coeffs().end());
    }
    return L * BigRat(common_denominator(all));
}

int t_degree(const RatMat& G) {
    Poly T = minimal_T(G);
    int t = T.degree();
    for (const auto& e : G.entries()) {
        RatFn r = RatFn(T) * e;
        t = std::max(t, r.num().degree());
    }
    return t;
}

GaussVal ScaledSequence::vp_normalized(int s, std::uint32_t p) const {
    const ZMat& M = H.at(static_cast<std::size_t>(s - 1));
    BigInt c = matrix_content(M);
    if (c == 0) return GaussVal::infinity();
    long v = vp(c, p) - static_cast<long>(s) * vp(T.content(), p) -
             static_cast<long>(kummer_vp_factorial(static_cast<unsigned long>(s), p));
    return GaussVal::finite(v);
}

GaussVal ScaledSequence::vp_gs(int s, std::uint32_t p) const {
    if (s == 0) return GaussVal::finite(0);
    const ZMat& M = H.at(static_cast<std::size_t>(s - 1));
    BigInt c = matrix_content(M);
    if (c == 0) return GaussVal::infinity();
    return GaussVal::finite(vp(c, p) - static_cast<long>(s) * vp(T.content(), p));
}

ScaledSequence scaled_sequence(const RatMat& G, int s_max) {
    if (s_max < 1) throw InvalidParameters("s_max must be at least 1");
    ScaledSequence seq;
    const std::size_t n = G.dim();
    seq.n = n;
    Poly T = minimal_T(G);
    seq.T = to_zpoly(T);
    const ZPoly dT = seq.T.derivative();
    ZMat TG(n * n);
    for (std::size_t i = 0; i < n * n; ++i) TG[i] = to_zpoly((RatFn(T) * G.entries()[i]).num());
    seq.H.push_back(TG);
    // H_{s+1} = H_s (TG) + T H_s' - s T' H_s.
    for (int s = 1; s < s_max; ++s) {
        const ZMat& Hs = seq.H.back();
        ZMat next(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ZPoly acc = seq.T * Hs[i * n + j].derivative() - dT * Hs[i * n + j] * BigInt(s);
                for (std::size_t k = 0; k < n; ++k)
                    if (!Hs[i * n + k].is_zero() && !TG[k * n + j].is_zero()) acc += Hs[i * n + k] * TG[k * n + j];
                next[i * n + j] = std::move(acc);
            }
        seq.H.push_back(std::move(next));
    }
    return seq;
}

GalochkinTrace galochkin_trace(const ScaledSequence& seq, const Poly& T) {
    GalochkinTrace tr;
    tr.T = T;
    BigInt q = 1;
    for (int s = 1; s <= static_cast<int>(seq.H.size()); ++s) {
        BigInt fact = factorial(static_cast<unsigned long>(s));
        BigInt c = matrix_content(seq.H[static_cast<std::size_t>(s - 1)]);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), fact.get_mpz_t(), c.get_mpz_t());
        BigInt den = fact / g;
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
        tr.s.push_back(s);
        tr.q.push_back(q);
        long e = 0;
        double mant = mpz_get_d_2exp(&e, q.get_mpz_t());
        tr.log_q_over_s.push_back((std::log(mant) + static_cast<double>(e) * std::log(2.0)) / s);
    }
    return tr;
}

GalochkinTrace galochkin_trace(const RatMat& G, int s_max) {
    return galochkin_trace(scaled_sequence(G, s_max), minimal_T(G));
}

double LogTerm::value() const { return exponent.get_d() * std::log(static_cast<double>(prime)); }

LogTerm h_s_p(const ScaledSequence& seq, int s, std::uint32_t p) {
    LogTerm t{p, 0};
    for (int m = 1; m <= s; ++m) {
        GaussVal v = seq.vp_normalized(m, p);
        if (!v.is_infinite() && -v.value() > t.exponent) t.exponent = -v.value();
    }
    return t;
}

SizeEstimate size_estimate(const ScaledSequence& seq, int s, std::uint32_t P) {
    if (s < 1 || s > static_cast<int>(seq.H.size())) throw InvalidParameters("s outside the computed range");
    SizeEstimate est;
    est.s = s;
    est.P = P;
    double total = 0;
    for (std::uint32_t p : primes_in(2, P)) {
        LogTerm t = h_s_p(seq, s, p);
        total += t.value();
        est.terms.push_back(t);
    }
    est.sigma_hat = total / s;
    return est;
}

LogTerm radius_estimate_unchecked(const ScaledSequence& seq, std::uint32_t p, int s_max) {
    if (s_max < static_cast<int>(seq.n) || s_max > static_cast<int>(seq.H.size()))
        throw InvalidParameters("s_max must lie between n and the computed range");
    LogTerm t{p, 0};
    for (int s = static_cast<int>(seq.n); s <= s_max; ++s) {
        GaussVal v = seq.vp_normalized(s, p);
        if (v.is_infinite()) continue;
        BigRat r(-v.value(), s);
        r.canonicalize();
        if (r > t.exponent) t.exponent = r;
    }
    return t;
}

LogTerm radius_estimate(const ScaledSequence& seq, std::uint32_t p, int s_max) {
    require_integral(seq, p);
    return radius_estimate_unchecked(seq, p, s_max);
}

LogTerm radius_estimate_corrected(const ScaledSequence& seq, std::uint32_t p, int s_max) {
    const int n = static_cast<int>(seq.n);
    GaussVal base = GaussVal::infinity();
    for (int i = 0; i < n && i <= static_cast<int>(seq.H.size()); ++i) base = min(base, seq.vp_gs(i, p));
    LogTerm t{p, 0};
    for (int s = 1; s <= s_max; ++s) {
        GaussVal v = seq.vp_normalized(s, p);
        if (v.is_infinite()) continue;
        long excess = -v.value() + accolade(static_cast<unsigned long>(s), static_cast<unsigned long>(n - 1), p).value() +
                      base.value();
        BigRat r(excess, s);
        r.canonicalize();
        if (r > t.exponent) t.exponent = r;
    }
    return t;
}

std::vector<bool> dwork_robba_check(const ScaledSequence& seq, std::uint32_t p, int s_max) {
    require_integral(seq, p);
    if (s_max > static_cast<int>(seq.H.size())) throw InvalidParameters("s_max beyond the computed range");
    const int n = static_cast<int>(seq.n);
    GaussVal base = GaussVal::infinity();
    for (int i = 0; i < n && i <= static_cast<int>(seq.H.size()); ++i) base = min(base, seq.vp_gs(i, p));
    std::vector<bool> out;
    for (int s = 1; s <= s_max; ++s) {
        GaussVal lhs = seq.vp_normalized(s, p);
        GaussVal rhs = accolade(static_cast<unsigned long>(s), static_cast<unsigned long>(n - 1), p) + base;
        out.push_back(lhs >= rhs);
    }
    return out;
}

SizeRadiusReport bombieri_report(const RatMat& G, int s, std::uint32_t P, double slack, double c) {
    SizeRadiusReport rep;
    rep.n = G.dim();
    rep.s = s;
    rep.P = P;
    rep.slack = slack;
    rep.log_coefficient = c;
    const int s_eff = std::max(s, static_cast<int>(G.dim()));
    ScaledSequence seq = scaled_sequence(G, s_eff);
    SizeEstimate est = size_estimate(seq, s, P);
    rep.h_terms = est.terms;
    rep.sigma_hat = est.sigma_hat;
    for (std::uint32_t p : primes_in(2, P)) {
        GaussVal v = seq.vp_gs(1, p);
        if (!v.is_infinite() && v.value() < 0) rep.bad_primes.push_back(p);
        LogTerm r = radius_estimate_unchecked(seq, p, s_eff);
        rep.rho_hat += r.value();
        rep.rho_terms.push_back(r);
        LogTerm rc = radius_estimate_corrected(seq, p, s_eff);
        rep.rho_hat_corrected += rc.value();
        rep.rho_corrected_terms.push_back(rc);
    }
    const double n1 = static_cast<double>(rep.n) - 1;
    rep.lower_ok = rep.rho_hat <= rep.sigma_hat + slack;
    rep.upper_ok = rep.sigma_hat <= rep.rho_hat + n1 * (1 + c * std::log(static_cast<double>(s)) / s) + slack;
    rep.sandwich_ok = rep.lower_ok && rep.upper_ok;
    return rep;
}

std::pair<double, double> h_plus_minus(const Poly& T, std::uint32_t P) {
    double plus = 0, minus = 0;
    for (std::uint32_t p : primes_in(2, P)) {
        GaussVal v = vp_poly(T, p);
        if (v.is_infinite()) continue;
        double l = -static_cast<double>(v.value()) * std::log(static_cast<double>(p));
        if (l > 0) plus += l;
        else minus += l;
    }
    return {plus, minus};
}

}  // namespace gop
