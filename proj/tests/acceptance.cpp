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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "gop/catalog.hpp"
#include "gop/growth.hpp"
#include "gop/integers.hpp"
#include "gop/local.hpp"
#include "gop/pade.hpp"
#include "gop/pcurv.hpp"
#include "gop/valuation.hpp"

using namespace gop;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

const IndicialData* find_point(const OperatorProfile& prof, const Location& loc) {
    for (const auto& d : prof.points) {
        const Location& l = d.point.location;
        if (l.kind != loc.kind) continue;
        if (l.kind == LocationKind::Infinity || (l.kind == LocationKind::Finite && l.a == loc.a)) return &d;
        if (l.kind == LocationKind::AlgebraicClass && l.f == loc.f) return &d;
    }
    return nullptr;
}

bool exponents_are(const IndicialData* d, const std::vector<std::pair<BigRat, int>>& want) {
    return d && d->point.regular && d->nonrational_factors.empty() && d->rational_exponents == want;
}

Outcome c1_hypergeometric_profile() {
    const BigRat h(1, 2);
    OperatorProfile prof = classify_operator(hypergeom_operator({h, h}, {BigRat(1)}));
    std::set<std::string> sing;
    bool all_regular = true;
    for (const auto& d : prof.points) {
        if (!d.ordinary) sing.insert(d.point.location.to_string());
        all_regular &= d.point.regular;
    }
    bool ok = sing == std::set<std::string>{"0", "1", "inf"} && all_regular && prof.fuchsian &&
              exponents_are(find_point(prof, Location::finite(0)), {{BigRat(0), 2}}) &&
              exponents_are(find_point(prof, Location::infinity()), {{h, 2}});
    return {ok, "singular points 0, 1, inf; exponents {0,0} at 0 and {1/2,1/2} at inf"};
}

Outcome c2_katz_negative_control() {
    OperatorProfile prof = classify_operator(counterexample_theta2_minus_2());
    const Poly x2m2{BigRat(-2), BigRat(0), BigRat(1)};
    auto irrational = [&](const IndicialData* d) {
        return d && d->point.regular && d->rational_exponents.empty() && d->nonrational_factors == std::vector<Poly>{x2m2};
    };
    bool ok = prof.fuchsian && !prof.all_exponents_rational && !prof.katz_consistent &&
              irrational(find_point(prof, Location::finite(0))) && irrational(find_point(prof, Location::infinity()));
    return {ok, "fuchsian, factor x^2 - 2 at 0 and inf, katz_consistent = false"};
}

Outcome c3_pcurvature_scan() {
    GlobalScan poly = global_scan("polylog:2", polylog_system(2), nullptr, 2, 50);
    int good = 0;
    bool ok = poly.verdict == ScanVerdict::AllGoodNilpotent;
    for (const auto& r : poly.reports) {
        if (r.status == PStatus::BadPrime) continue;
        ++good;
        ok &= r.status == PStatus::Nilpotent;
    }
    const DiffOp dm1(Basis::D, {RatFn(-1), RatFn(1)});
    GlobalScan e = global_scan("D-1", companion(dm1), &dm1, 2, 50);
    for (const auto& r : e.reports) ok &= r.status == PStatus::NonNilpotent;
    ok &= e.reports.size() == primes_in(2, 50).size() && good > 0;
    return {ok, std::to_string(good) + " good primes nilpotent for polylog:2; D - 1 non-nilpotent at all " +
                    std::to_string(e.reports.size()) + " primes"};
}

Outcome c4_nilpotence_cross_validation() {
    int compared = 0, disagreements = 0;
    for (const auto& e : catalog_all()) {
        const RatMat G = companion(e.op);
        for (std::uint32_t p : primes_in(2, 20)) {
            PCurvatureReport r = pcurvature_report(G, &e.op, p);
            if (r.status == PStatus::BadPrime || !r.division_checked) continue;
            ++compared;
            if (!r.method_agreement) ++disagreements;
        }
    }
    return {disagreements == 0 && compared > 0,
            std::to_string(compared) + " (operator, prime) pairs compared, " + std::to_string(disagreements) + " disagreements"};
}

Outcome c5_gp_powers() {
    int checked = 0;
    bool ok = true;
    for (const auto& e : catalog_all()) {
        for (std::uint32_t p : primes_in(2, 20)) {
            std::vector<FpMat> seq;
            try {
                seq = fp_gs_sequence(reduce_system(e.system, p), static_cast<int>(3 * p));
            } catch (const BadPrime&) {
                continue;
            }
            const FpMat& gp = seq[p - 1];
            for (unsigned k = 1; k <= 3; ++k) {
                ok &= seq[k * p - 1] == gp.pow(k);
                ++checked;
            }
        }
    }
    return {ok && checked > 0, std::to_string(checked) + " identities G_pk = (G_p)^k checked"};
}

Outcome c6_kummer() {
    bool ok = true;
    for (std::uint32_t p : {2U, 3U, 5U, 7U})
        for (unsigned long n = 0; n <= 1000; ++n) ok &= kummer_vp_factorial(n, p) == legendre_vp_factorial(n, p);
    return {ok, "n <= 1000, p in {2, 3, 5, 7}"};
}

Outcome c7_galochkin_li1() {
    GalochkinTrace tr = galochkin_trace(companion(polylog_operator(1)), 30);
    bool ok = tr.q.size() == 30;
    for (int s = 1; s <= 30 && ok; ++s) ok &= tr.q[static_cast<std::size_t>(s - 1)] == lcm_upto(static_cast<unsigned long>(s));
    const double l = tr.log_q_over_s.back();
    ok &= l >= 0.90 && l <= 1.10;
    char buf[96];
    std::snprintf(buf, sizeof buf, "q_s = lcm(1..s) for s <= 30, log q_30 / 30 = %.6f", l);
    return {ok, buf};
}

Outcome c8_dwork_robba() {
    int checked = 0, failures = 0;
    std::map<std::string, std::vector<std::uint32_t>> where;
    for (const auto& e : catalog_all()) {
        if (e.system.dim() < 2) continue;
        ScaledSequence seq = scaled_sequence(e.system, 40);
        for (std::uint32_t p : primes_in(2, 20)) {
            std::vector<bool> r;
            try {
                r = dwork_robba_check(seq, p, 40);
            } catch (const BadPrime&) {
                continue;
            }
            bool bad = false;
            for (bool holds : r) {
                ++checked;
                if (!holds) {
                    ++failures;
                    bad = true;
                }
            }
            if (bad) where[e.id].push_back(p);
        }
    }
    std::string detail = std::to_string(checked) + " inequalities checked, " + std::to_string(failures) + " violated";
    for (const auto& [id, ps] : where) {
        detail += "; " + id + " at p =";
        for (auto p : ps) detail += " " + std::to_string(p);
    }
    return {failures == 0 && checked > 0, detail};
}

Outcome c9_bombieri() {
    bool ok = true;
    std::ostringstream os;
    for (int w : {1, 2}) {
        SizeRadiusReport r = bombieri_report(polylog_system(w), 40, 43);
        ok &= r.lower_ok && r.upper_ok;
        char buf[200];
        std::snprintf(buf, sizeof buf, "%sLi_%d: sigma = %.4f, rho = %.4f (lower %s, upper %s)", w == 1 ? "" : "; ", w,
                      r.sigma_hat, r.rho_hat, r.lower_ok ? "ok" : "violated", r.upper_ok ? "ok" : "violated");
        os << buf;
    }
    return {ok, os.str()};
}

Outcome c10_pade() {
    // Geometric series at N = M = 1.
    PadeApproximant g = pade_type2({CoeffGenerator::geometric(1).series(3)}, 1, 1);
    bool geo = g.Q == Poly{BigRat(1), BigRat(-1)} && g.P.size() == 1 && g.P[0] == Poly{BigRat(1)};

    // (1, Li_1, Li_2) at N = 12, M = 6.
    const int N = 12, M = 6;
    const RatMat G = polylog_system(2);
    std::vector<TruncatedSeries> f = system_solution(catalog_get("polylog:2"), 40);
    PadeSystem sys = build_pade_system(f, G, N, M);
    bool li = sys.residual.order >= N + M && verify_similileibniz(G, sys.approx.P, 6) && sys.degree_bound_ok &&
              !sys.shidlovskii.delta.is_zero();

    // (1, Li_1, 2 Li_1) is linearly dependent.
    RatMat Gd(3);
    const RatFn inv1mz = RatFn(1) / RatFn(Poly{BigRat(1), BigRat(-1)});
    Gd(1, 0) = inv1mz;
    Gd(2, 0) = RatFn(2) * inv1mz;
    std::vector<TruncatedSeries> fd{f[0], f[1], f[1]};
    for (auto& c : fd[2].coeffs) c *= 2;
    PadeSystem dep = build_pade_system(fd, Gd, N, M);
    bool negative = dep.shidlovskii.delta.is_zero();

    return {geo && li && negative, std::string("geometric (1 - z, 1) ") + (geo ? "ok" : "wrong") + "; Li system residual order " +
                                       std::to_string(sys.residual.order) + ", Delta " +
                                       (sys.shidlovskii.delta.is_zero() ? "= 0" : "!= 0") + "; dependent vector Delta " +
                                       (negative ? "= 0" : "!= 0")};
}

Outcome c11_growth() {
    GrowthReport li2 = gfunction_growth_check_log(CoeffGenerator::polylog(2), 100, 1.1);
    GrowthReport fact = gfunction_growth_check_log(CoeffGenerator::factorial(), 100, 1.1);
    bool eis = eisenstein_check(CoeffGenerator::binomial(BigRat(1, 2)), 4, 50);
    char buf[240];
    std::snprintf(buf, sizeof buf, "Li_2 %s (min log C = %.4f%s), n! %s, sqrt(1 - z) eisenstein c = 4 %s",
                  li2.pass ? "passes" : "fails", li2.min_log_C,
                  li2.first_failure ? (", first failure n = " + std::to_string(*li2.first_failure)).c_str() : "",
                  fact.pass ? "passes" : "fails", eis ? "passes" : "fails");
    return {li2.pass && !fact.pass && eis, buf};
}

BigRat ordinary_point(const DiffOp& L) {
    const DiffOp P = polynomial_form(L);
    const Poly& B0 = P.coeff(P.order()).num();
    for (BigRat a : {BigRat(0), BigRat(-1), BigRat(1, 2), BigRat(2), BigRat(-2), BigRat(3), BigRat(-3), BigRat(5)})
        if (B0.eval(a) != 0) return a;
    return BigRat(7);
}

Outcome c12_ordinary_bases() {
    int series = 0;
    bool ok = true;
    for (const auto& e : catalog_all()) {
        const DiffOp L = shift_operator(convert_basis(e.op, Basis::D), ordinary_point(e.op));
        for (const auto& f : ordinary_series_basis(L, 30)) {
            TruncatedSeries r = apply_operator(L, f);
            ok &= r.is_zero() && r.trunc_order() >= 30 - L.order();
            ++series;
        }
    }
    return {ok && series > 0, std::to_string(series) + " basis series, residuals zero to the known order"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hypergeometric profile", c1_hypergeometric_profile},
        {"Katz negative control", c2_katz_negative_control},
        {"p-curvature scan", c3_pcurvature_scan},
        {"nilpotence cross-validation", c4_nilpotence_cross_validation},
        {"G_pk = (G_p)^k", c5_gp_powers},
        {"Kummer formula", c6_kummer},
        {"Galochkin trace for Li_1", c7_galochkin_li1},
        {"Dwork-Robba inequality", c8_dwork_robba},
        {"size/radius sandwich", c9_bombieri},
        {"Pade bench", c10_pade},
        {"growth checks", c11_growth},
        {"ordinary-point bases", c12_ordinary_bases},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(), sec);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
