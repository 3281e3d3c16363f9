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

#include "doctest.h"
#include "gop/catalog.hpp"
#include "gop/growth.hpp"
#include "gop/pade.hpp"
#include "support.hpp"

using namespace gop;
using namespace gop::testing;

namespace {

TruncatedSeries geometric(int N) { return {std::vector<BigRat>(static_cast<std::size_t>(N), BigRat(1))}; }

std::vector<TruncatedSeries> log_vector(int N) { return system_solution(catalog_get("polylog:1"), N); }

// Q f - P computed directly as series products.
int direct_residual(const Poly& Q, const PolyVec& P, const std::vector<TruncatedSeries>& f, int horizon) {
    int best = horizon;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (int k = 0; k < horizon; ++k) {
            BigRat c = -P[i].coeff(static_cast<std::size_t>(k));
            for (int j = 0; j <= std::min(k, Q.degree()); ++j)
                c += Q.coeff(static_cast<std::size_t>(j)) * f[i].coeffs[static_cast<std::size_t>(k - j)];
            if (c != 0) {
                best = std::min(best, k);
                break;
            }
        }
    }
    return best;
}

bool integral(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

}  // namespace

TEST_SUITE("pade_lab") {
    TEST_CASE("geometric series") {
        PadeApproximant a = pade_type2({geometric(10)}, 1, 1);
        CHECK(a.Q == Poly{BigRat(1), BigRat(-1)});
        REQUIRE(a.P.size() == 1);
        CHECK(a.P[0] == Poly::constant(1));
        ResidualOrder r = residual_order(a.Q, a.P, {geometric(10)});
        CHECK(r.reached_horizon);
        CHECK(r.order == 10);
        CHECK_THROWS_AS(pade_type2({geometric(10)}, 0, 3), NoSolution);
        CHECK_THROWS_AS(pade_type2({geometric(3)}, 1, 2), InsufficientTruncation);
    }

    TEST_CASE("logarithm vector") {
        auto f = log_vector(30);
        PadeApproximant a = pade_type2(f, 6, 3);
        CHECK(a.Q.degree() <= 6);
        CHECK(integral(a.Q));
        CHECK(abs(content(a.Q)) == 1);
        for (const auto& p : a.P) CHECK(p.degree() <= 6);
        ResidualOrder r = residual_order(a.Q, a.P, f);
        CHECK(r.order >= 9);
        CHECK(r.order == direct_residual(a.Q, a.P, f, 30));
        CHECK(a.unknowns == 7);
        CHECK(a.log_siegel_bound > 0);
    }

    TEST_CASE("residual order detects perturbations") {
        auto f = log_vector(30);
        PadeApproximant a = pade_type2(f, 6, 3);
        for (int k = 0; k <= 6; ++k) {
            PolyVec bad = a.P;
            bad[1] = bad[1] + Poly::monomial(1, static_cast<unsigned>(k));
            ResidualOrder r = residual_order(a.Q, bad, f);
            CHECK(r.order == k);
            CHECK(r.order < 9);
        }
        std::vector<TruncatedSeries> zero{{std::vector<BigRat>(12)}};
        ResidualOrder z = residual_order(Poly::constant(1), {Poly{}}, zero);
        CHECK(z.reached_horizon);
        CHECK(z.order == 12);
        CHECK_THROWS_AS(residual_order(Poly::monomial(1, 15), {Poly{}}, zero), InsufficientTruncation);
    }

    TEST_CASE("random vectors meet the order condition") {
        for (int t = 0; t < 10; ++t) {
            const int n = static_cast<int>(uniform(1, 3));
            const int M = static_cast<int>(uniform(1, 3));
            const int N = n * M + static_cast<int>(uniform(0, 2));
            std::vector<TruncatedSeries> f;
            for (int i = 0; i < n; ++i) {
                TruncatedSeries s;
                for (int k = 0; k < N + M + 4; ++k) s.coeffs.push_back(small_rat());
                f.push_back(s);
            }
            PadeApproximant a = pade_type2(f, N, M);
            CHECK_FALSE(a.Q.is_zero());
            CHECK(residual_order(a.Q, a.P, f).order >= N + M + 1);
            CHECK(direct_residual(a.Q, a.P, f, N + M + 4) >= N + M + 1);
        }
    }

    TEST_CASE("derived tower") {
        auto f = log_vector(40);
        RatMat G = polylog_system(1);
        Poly T = minimal_T(G);
        const int t = t_degree(G);
        const int N = 10, M = 5;
        PadeApproximant a = pade_type2(f, N, M);
        auto tower = derived_tower(a.P, G, T, 5);
        REQUIRE(tower.size() == 6);
        CHECK(tower[0] == a.P);
        // m = 1: T (P' - G P).
        for (std::size_t i = 0; i < 2; ++i) {
            RatFn acc = RatFn(a.P[i].derivative());
            for (std::size_t k = 0; k < 2; ++k) acc -= G(i, k) * RatFn(a.P[k]);
            CHECK(RatFn(T) * acc == RatFn(tower[1][i]));
        }
        Poly Qm = a.Q;
        BigRat fact = 1;
        Poly Tm = Poly::constant(1);
        for (int m = 0; m <= 5; ++m) {
            if (m > 0) {
                Qm = Qm.derivative();
                fact *= m;
                Tm = Tm * T;
            }
            for (const auto& p : tower[static_cast<std::size_t>(m)]) CHECK(p.degree() <= N + t * m);
            // (T^m/m!) Q^(m) f - P_m = O(z^(N+M+1-m)).
            Poly Qd = Tm * Qm * (BigRat(1) / fact);
            CHECK(residual_order(Qd, tower[static_cast<std::size_t>(m)], f).order >= N + M + 1 - m);
            if (m * (t + 1) <= M)
                for (const auto& p : tower[static_cast<std::size_t>(m)]) CHECK(integral(p * BigRat(a.scale)));
        }
        auto zero = derived_tower({Poly{}, Poly{}}, G, T, 3);
        for (const auto& v : zero)
            for (const auto& p : v) CHECK(p.is_zero());
    }

    TEST_CASE("simili-Leibniz identity") {
        RatMat G = polylog_system(1);
        PolyVec P{Poly{BigRat(1), BigRat(2)}, Poly{BigRat(0), BigRat(-1), BigRat(3)}};
        CHECK(verify_similileibniz(G, P, 6));
        CHECK(verify_similileibniz(G, {Poly{}, Poly{}}, 6));
        for (const auto& e : catalog_all()) {
            PolyVec Q;
            for (std::size_t i = 0; i < e.system.dim(); ++i) Q.push_back(random_poly(4));
            CHECK_MESSAGE(verify_similileibniz(e.system, Q, 6), e.id);
        }
    }

    TEST_CASE("determinants") {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
            PolyMat M(n, std::vector<Poly>(n));
            for (auto& row : M)
                for (auto& x : row) x = random_poly(3, 4);
            Poly d = poly_det(M);
            for (int k = -3; k <= 3; ++k) {
                std::vector<std::vector<BigRat>> A(n, std::vector<BigRat>(n));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) A[i][j] = M[i][j].eval(BigRat(k, 2));
                CHECK(d.eval(BigRat(k, 2)) == cofactor_det(A));
            }
        }
    }

    TEST_CASE("Shidlovskii determinant") {
        PadeApproximant g = pade_type2({geometric(10)}, 1, 1);
        ShidlovskiiData one = shidlovskii_matrix({g.P});
        CHECK(one.delta == Poly::constant(1));

        CatalogEntry li2 = catalog_get("polylog:2");
        auto f = system_solution(li2, 40);
        PadeSystem sys = build_pade_system(f, li2.system, 12, 6);
        CHECK(sys.residual.order >= 19);
        CHECK(sys.degree_bound_ok);
        CHECK(sys.tower.size() == 3);
        CHECK_FALSE(sys.shidlovskii.delta.is_zero());

        // f_2 = 2 f_1: the columns of R0 are dependent.
        std::vector<TruncatedSeries> dep{f[0], f[1], {}};
        for (const auto& c : f[1].coeffs) dep[2].coeffs.push_back(2 * c);
        RatMat Gd(3);
        Gd(1, 0) = RatFn(Poly{BigRat(1)}, Poly{BigRat(1), BigRat(-1)});
        Gd(2, 0) = RatFn(Poly{BigRat(2)}, Poly{BigRat(1), BigRat(-1)});
        PadeSystem ds = build_pade_system(dep, Gd, 12, 6);
        CHECK(ds.residual.order >= 19);
        CHECK(ds.shidlovskii.delta.is_zero());

        ShidlovskiiData zero = shidlovskii_matrix({{Poly{}, Poly{}}, {Poly{}, Poly{}}});
        CHECK(zero.delta.is_zero());
        CHECK_THROWS_AS(shidlovskii_matrix({{Poly{}, Poly{}}}), InvalidParameters);
    }
}
