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

#include "gop/integers.hpp"

#include <algorithm>
#include <map>

namespace gop {

namespace {

BigInt pollard_rho(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto f = [&](const BigInt& v) {
            BigInt r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            BigInt diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(const BigInt& n, std::map<BigInt, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    BigInt m = abs(n);
    std::map<BigInt, int> found;
    for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= m; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++found[BigInt(p)];
            m /= p;
        }
    }
    factor_into(m, found);
    return {found.begin(), found.end()};
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t base = out.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

long vp(const BigInt& n, std::uint32_t p) {
    if (n == 0) throw std::invalid_argument("vp: zero");
    BigInt m = abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

BigRat parse_rational(const std::string& text) {
    BigRat q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace gop
