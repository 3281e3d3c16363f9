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

// Shared fixtures and reference implementations for the test suites.

#ifndef GOP_TESTS_SUPPORT_HPP
#define GOP_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "gop/diffop.hpp"

namespace gop::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261019);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline BigRat small_rat(long range = 9, long den_range = 6) {
    BigRat q(uniform(-range, range), uniform(1, den_range));
    q.canonicalize();
    return q;
}

inline Poly random_poly(int max_degree, long range = 9) {
    std::vector<BigRat> c;
    const int d = static_cast<int>(uniform(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(small_rat(range));
    return Poly(std::move(c));
}

inline Poly nonzero_poly(int max_degree, long range = 9) {
    for (;;) {
        Poly p = random_poly(max_degree, range);
        if (!p.is_zero()) return p;
    }
}

inline RatFn random_ratfn(int max_degree = 3) { return RatFn(random_poly(max_degree), nonzero_poly(max_degree)); }

/// Product of (z - r) over the list.
inline Poly from_roots(const std::vector<BigRat>& roots) {
    Poly p = Poly::constant(1);
    for (const auto& r : roots) p = p * Poly{-r, BigRat(1)};
    return p;
}

/// Determinant by cofactor expansion; the slow oracle for small matrices.
inline BigRat cofactor_det(const std::vector<std::vector<BigRat>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigRat d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<BigRat>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigRat> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        d += (j % 2 ? -1 : 1) * m[0][j] * cofactor_det(minor);
    }
    return d;
}

/// Applies L to f term by term through exact rational-function arithmetic, f a polynomial.
inline RatFn apply_exact(const DiffOp& L, const RatFn& f) {
    RatFn acc, g = f;
    for (int k = 0; k <= L.order(); ++k) {
        acc += L.coeff(k) * g;
        g = L.basis() == Basis::D ? g.derivative() : RatFn::z() * g.derivative();
    }
    return acc;
}

}  // namespace gop::testing

#endif  // GOP_TESTS_SUPPORT_HPP
