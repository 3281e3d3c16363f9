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

#include <cmath>

#include "doctest.h"
#include "gop/fp.hpp"
#include "gop/integers.hpp"
#include "gop/valuation.hpp"
#include "support.hpp"

using namespace gop;
using namespace gop::testing;

namespace {

long naive_vp(long n, long p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Sylvester matrix resultant; independent of the Euclidean recursion.
BigRat sylvester_resultant(const Poly& a, const Poly& b) {
    const int m = a.degree(), n = b.degree();
    const int N = m + n;
    std::vector<std::vector<BigRat>> S(static_cast<std::size_t>(N), std::vector<BigRat>(static_cast<std::size_t>(N)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a.coeff(static_cast<std::size_t>(m - i));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            S[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b.coeff(static_cast<std::size_t>(n - i));
    return cofactor_det(S);
}

}  // namespace

TEST_SUITE("exact_arith") {
    TEST_CASE("integer factorization against trial division") {
        for (int t = 0; t < 200; ++t) {
            long n = uniform(2, 2000000);
            BigInt prod = 1;
            for (const auto& [p, e] : factor_integer(BigInt(n))) {
                CHECK(is_prime(p.get_ui()));
                CHECK(naive_vp(n, p.get_si()) == e);
                for (int i = 0; i < e; ++i) prod *= p;
            }
            CHECK(prod == n);
        }
        // Needs Pollard rho: two primes above the trial-division bound.
        BigInt big = BigInt(1000003) * BigInt(998244353);
        auto f = factor_integer(big);
        REQUIRE(f.size() == 2);
        CHECK(f[0].first == 1000003);
        CHECK(f[1].first == 998244353);
        CHECK(divisors(BigInt(12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
    }

    TEST_CASE("primes against a sieve") {
        std::vector<bool> composite(2001, false);
        std::vector<std::uint32_t> sieve;
        for (std::uint32_t i = 2; i <= 2000; ++i) {
            if (composite[i]) continue;
            sieve.push_back(i);
            for (std::uint32_t j = i * i; j <= 2000; j += i) composite[j] = true;
        }
        CHECK(primes_in(0, 2000) == sieve);
        CHECK(primes_in(14, 16).empty());
        CHECK(primes_in(2, 50).size() == 15);
    }

    TEST_CASE("rationals are canonical") {
        BigRat q = parse_rational("6/-4");
        CHECK(q == BigRat(-3, 2));
        CHECK(q.get_den() > 0);
        CHECK(to_string(q) == "-3/2");
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    }

    TEST_CASE("polynomial division and gcd") {
        for (int t = 0; t < 60; ++t) {
            Poly a = random_poly(6), b = nonzero_poly(4);
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
            Poly c = nonzero_poly(3);
            Poly g = gcd(a * c, b * c);
            if (!g.is_zero()) {
                CHECK(g.leading() == 1);
                CHECK(divmod(a * c, g).second.is_zero());
                CHECK(divmod(b * c, g).second.is_zero());
                CHECK(divmod(g, c.monic()).second.is_zero());
            }
            auto [h, s, u] = xgcd(a, b);
            CHECK(s * a + u * b == h);
        }
        CHECK(gcd(Poly{}, Poly{}).is_zero());
    }

    TEST_CASE("resultant matches the Sylvester determinant") {
        CHECK(resultant(Poly{BigRat(-2), BigRat(0), BigRat(1)}, Poly{BigRat(0), BigRat(1)}) == -2);
        for (int t = 0; t < 30; ++t) {
            Poly a = nonzero_poly(4), b = nonzero_poly(3);
            if (a.degree() < 1 || b.degree() < 1) continue;
            CHECK(resultant(a, b) == sylvester_resultant(a, b));
        }
    }

    TEST_CASE("rational roots and squarefree parts") {
        std::vector<BigRat> roots{BigRat(-3, 2), BigRat(1), BigRat(1), BigRat(0), BigRat(5, 7)};
        Poly irr{BigRat(-2), BigRat(0), BigRat(1)};
        Poly p = from_roots(roots) * irr * BigRat(6);
        RationalRootSplit rs = rational_roots(p);
        std::vector<std::pair<BigRat, int>> want{{BigRat(-3, 2), 1}, {BigRat(0), 1}, {BigRat(5, 7), 1}, {BigRat(1), 2}};
        auto got = rs.roots;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(rs.cofactor == irr);

        Poly q = pow(Poly{BigRat(1), BigRat(1)}, 3) * pow(irr, 2) * Poly{BigRat(3), BigRat(1)};
        Poly rebuilt = Poly::constant(1);
        for (const auto& [f, m] : squarefree_decomposition(q)) {
            CHECK(f.leading() == 1);
            CHECK(gcd(f, f.derivative()).degree() == 0);
            rebuilt = rebuilt * pow(f, static_cast<unsigned>(m));
        }
        CHECK(rebuilt == q.monic());
    }

    TEST_CASE("interpolation reproduces the polynomial") {
        for (int t = 0; t < 20; ++t) {
            Poly p = random_poly(6);
            std::vector<BigRat> xs, ys;
            for (int k = 0; k <= 7; ++k) {
                xs.push_back(BigRat(k * 2 - 5, 3));
                ys.push_back(p.eval(xs.back()));
            }
            CHECK(interpolate(xs, ys) == p);
        }
    }

    TEST_CASE("rational functions form a differential field") {
        for (int t = 0; t < 40; ++t) {
            RatFn f = random_ratfn(), g = random_ratfn(), h = random_ratfn();
            CHECK((f + g) * h == f * h + g * h);
            CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
            CHECK(f.den().leading() == 1);
            CHECK(gcd(f.num(), f.den()).degree() <= 0);
            if (!g.is_zero()) CHECK((f / g) * g == f);
        }
        RatFn r(Poly{BigRat(1)}, Poly{BigRat(1), BigRat(-1)});
        CHECK(r.taylor(5) == std::vector<BigRat>(5, BigRat(1)));
        CHECK(r.pole_order_at(1) == 1);
        CHECK_THROWS_AS(r.eval(1), std::domain_error);
        CHECK(RatFn(Poly{BigRat(0), BigRat(0), BigRat(3)}, Poly{BigRat(1), BigRat(1)}).order_at_zero() == 2);
    }

    TEST_CASE("finite-field polynomials against naive products") {
        for (std::uint32_t p : {2U, 3U, 7U, 101U, 32749U}) {
            for (int t = 0; t < 10; ++t) {
                std::vector<std::uint32_t> a, b;
                for (int i = 0; i < 20; ++i) a.push_back(static_cast<std::uint32_t>(uniform(0, p - 1)));
                for (int i = 0; i < 13; ++i) b.push_back(static_cast<std::uint32_t>(uniform(0, p - 1)));
                b.back() = 1;
                FpPoly A(p, a), B(p, b);
                std::vector<std::uint64_t> naive(a.size() + b.size() - 1, 0);
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j) naive[i + j] = (naive[i + j] + std::uint64_t(a[i]) * b[j]) % p;
                FpPoly prod = A * B;
                for (std::size_t k = 0; k < naive.size(); ++k) CHECK(prod.coeff(k) == naive[k]);
                auto [q, r] = divmod(A, B);
                CHECK(q * B + r == A);
                FpPoly g = gcd(A * B, B);
                CHECK(g == B.monic());
            }
        }
        CHECK_THROWS_AS(FpPoly(40000), UnsupportedParameters);
        CHECK(fp_inv(3, 7) == 5);
        CHECK_THROWS_AS(fp_from_rat(BigRat(1, 6), 3), BadPrime);
    }

    TEST_CASE("gauss valuation examples") {
        RatFn f(Poly{BigRat(6), BigRat(3)}, Poly{BigRat(4), BigRat(0), BigRat(2)});
        CHECK(gauss_valuation(f, 3) == GaussVal::finite(1));
        CHECK(gauss_valuation(RatFn(1), 7) == GaussVal::finite(0));
        CHECK(gauss_valuation(RatFn(0), 5).is_infinite());
        CHECK(GaussVal::infinity().to_string() == "inf");
        CHECK_THROWS(GaussVal::infinity().value());
    }

    TEST_CASE("gauss valuation is a valuation") {
        for (std::uint32_t p : {2U, 3U, 5U}) {
            for (int t = 0; t < 40; ++t) {
                RatFn f = random_ratfn(), g = random_ratfn();
                CHECK(gauss_valuation(f * g, p) == gauss_valuation(f, p) + gauss_valuation(g, p));
                CHECK(gauss_valuation(f + g, p) >= min(gauss_valuation(f, p), gauss_valuation(g, p)));
            }
        }
    }

    TEST_CASE("series valuation examples") {
        CHECK(series_gauss_valuation(std::vector<BigRat>(10, BigRat(1)), 5) == GaussVal::finite(0));
        std::vector<BigRat> geo;
        BigRat x = 1;
        for (int i = 0; i < 10; ++i, x *= 3) geo.push_back(x);
        CHECK(series_gauss_valuation(geo, 3) == GaussVal::finite(0));
        CHECK(series_gauss_valuation(std::vector<BigRat>(10, BigRat(7)), 7) == GaussVal::finite(1));
    }

    TEST_CASE("series valuation agrees with the gauss valuation") {
        for (std::uint32_t p : {2U, 3U, 5U}) {
            for (int t = 0; t < 20; ++t) {
                // Denominator with unit constant term and integral coefficients: no pole in |z| < 1.
                std::vector<BigRat> d{BigRat(1)};
                for (int i = 0; i < static_cast<int>(uniform(1, 3)); ++i) d.push_back(BigRat(uniform(-6, 6)));
                Poly den(d);
                RatFn f(random_poly(3), den);
                if (f.is_zero()) continue;
                GaussVal v = series_gauss_valuation(f.taylor(50), p);
                CHECK(v >= gauss_valuation(f, p));
                CHECK(v == gauss_valuation(f, p));
            }
        }
    }

    TEST_CASE("factorial valuations") {
        CHECK(kummer_vp_factorial(4, 2) == 3);
        CHECK(kummer_vp_factorial(9, 3) == 4);
        CHECK(kummer_vp_factorial(0, 5) == 0);
        for (std::uint32_t p : {2U, 3U, 5U, 7U})
            for (unsigned long n = 0; n <= 1000; ++n) {
                unsigned long sum = 0;
                for (unsigned long q = p; q <= n; q *= p) sum += n / q;
                CHECK(kummer_vp_factorial(n, p) == sum);
            }
    }

    TEST_CASE("accolade") {
        CHECK(accolade(8, 1, 2) == GaussVal::finite(-3));
        CHECK(accolade(4, 2, 5) == GaussVal::finite(0));
        CHECK(accolade(17, 0, 3) == GaussVal::finite(0));
        for (std::uint32_t p : {2U, 3U, 5U})
            for (unsigned long s = 1; s <= 30; ++s)
                for (unsigned long m = 0; m <= 4; ++m) {
                    // Brute force: the m largest v_p among 1..s.
                    std::vector<long> v;
                    for (unsigned long l = 1; l <= s; ++l) v.push_back(naive_vp(static_cast<long>(l), p));
                    std::sort(v.rbegin(), v.rend());
                    long sum = 0;
                    for (unsigned long i = 0; i < std::min<unsigned long>(m, s); ++i) sum += v[i];
                    const GaussVal a = accolade(s, m, p);
                    CHECK(a == GaussVal::finite(-sum));
                    CHECK(accolade(s, m + 1, p) <= a);
                    CHECK(accolade(s + 1, m, p) <= a);
                    if (p <= s) CHECK(std::pow(double(p), double(-a.value())) <= std::pow(double(s), double(m)));
                    else CHECK(a == GaussVal::finite(0));
                }
    }

    TEST_CASE("lcm and common denominators") {
        CHECK(lcm_upto(1) == 1);
        CHECK(lcm_upto(6) == 60);
        CHECK(lcm_upto(10) == 2520);
        BigInt l = 1;
        for (unsigned long n = 1; n <= 100; ++n) {
            BigInt k(static_cast<unsigned long>(n));
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.get_mpz_t());
            CHECK(lcm_upto(n) == l);
        }
        const double ratio = std::log(lcm_upto(100).get_d()) / 100;
        CHECK(ratio >= 0.90);
        CHECK(ratio <= 1.05);
        CHECK(common_denominator({BigRat(1, 2), BigRat(1, 3)}) == 6);
        CHECK(common_denominator({BigRat(0), BigRat(5)}) == 1);
        CHECK(common_denominator({BigRat(1, 4), BigRat(3, 8), BigRat(5, 6)}) == 24);
    }

    TEST_CASE("reduction modulo p") {
        FpRatFn r = reduce_ratfn_mod_p(RatFn(Poly{BigRat(2), BigRat(1)}, Poly{BigRat(-1), BigRat(1)}), 5);
        CHECK(r.num() == FpPoly(5, {2, 1}));
        CHECK(r.den() == FpPoly(5, {4, 1}));
        CHECK_THROWS_AS(reduce_ratfn_mod_p(RatFn(Poly{BigRat(1)}, Poly{BigRat(0), BigRat(2)}), 2), BadPrime);
        CHECK(reduce_ratfn_mod_p(RatFn(Poly{BigRat(3)}, Poly{BigRat(6), BigRat(1)}), 3).is_zero());
        // Reduction is a ring map on p-integral elements.
        for (int t = 0; t < 30; ++t) {
            RatFn f = random_ratfn(), g = random_ratfn();
            for (std::uint32_t p : {7U, 11U}) {
                FpRatFn a(p), b(p), prod(p), deriv(p);
                try {
                    a = reduce_ratfn_mod_p(f, p);
                    b = reduce_ratfn_mod_p(g, p);
                    prod = reduce_ratfn_mod_p(f * g, p);
                    deriv = reduce_ratfn_mod_p(f.derivative(), p);
                } catch (const BadPrime&) {
                    continue;
                }
                CHECK(prod == a * b);
                CHECK(deriv == a.derivative());
            }
        }
    }

    TEST_CASE("derivatives contract the gauss norm") {
        for (std::uint32_t p : {2U, 3U, 5U})
            for (int t = 0; t < 15; ++t) {
                RatFn f = random_ratfn(2);
                if (f.is_zero()) continue;
                RatFn d = f;
                BigInt fact = 1;
                for (int s = 1; s <= 10; ++s) {
                    d = d.derivative();
                    fact *= s;
                    CHECK(gauss_valuation(d * RatFn(BigRat(BigInt(1), fact)), p) >= gauss_valuation(f, p));
                }
            }
    }
}
