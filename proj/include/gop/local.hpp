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

#ifndef GOP_LOCAL_HPP
#define GOP_LOCAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "gop/diffop.hpp"

namespace gop {

enum class LocationKind { Finite, Infinity, AlgebraicClass };

struct Location {
    LocationKind kind = LocationKind::Finite;
    BigRat a;  // Finite
    Poly f;    // AlgebraicClass: squarefree, no rational roots; stands for all its roots
    static Location finite(const BigRat& x) { return {LocationKind::Finite, x, {}}; }
    static Location infinity() { return {LocationKind::Infinity, 0, {}}; }
    static Location algebraic(const Poly& f) { return {LocationKind::AlgebraicClass, 0, f}; }
    static Location from_point(const Point& p) { return p.infinite ? infinity() : finite(p.a); }
    std::string to_string() const;
};

/// One Fuchs inequality: the pole order of B_j/B_0 at the location against its bound.
/// At finite places the bound is j; at infinity the entry is deg B_j - deg B_0 with bound -j.
struct PoleEntry {
    int j = 0;
    int pole_order = 0;
    int bound = 0;
};

struct SingularPoint {
    Location location;
    bool regular = false;
    std::vector<PoleEntry> pole_profile;
};

struct FuchsResult {
    bool regular = false;
    std::vector<PoleEntry> pole_profile;
};

struct IndicialData {
    SingularPoint point;
    bool ordinary = false;
    Poly phi;
    std::vector<std::pair<BigRat, int>> rational_exponents;
    std::vector<Poly> nonrational_factors;
    /// Heuristic only: distinct non-negative integer exponents with an unobstructed local expansion.
    bool apparent_candidate = false;
};

struct OperatorProfile {
    DiffOp op;
    std::vector<IndicialData> points;
    bool fuchsian = false;
    bool all_exponents_rational = false;
    bool katz_consistent = false;
};

struct ExponentSplit {
    std::vector<std::pair<BigRat, int>> rational;
    std::vector<Poly> nonrational;
};

/// D-basis form with coprime polynomial coefficients B_0 (leading), ..., B_n.
DiffOp polynomial_form(const DiffOp& L);

FuchsResult fuchs_test(const DiffOp& L, const Point& pt);
Poly indicial_polynomial(const DiffOp& L, const Point& pt);
ExponentSplit exponents(const DiffOp& L, const Point& pt);
/// Splits a polynomial into rational roots and squarefree factors without rational roots.
ExponentSplit split_rational(const Poly& phi);
/// Heuristic apparent-singularity test at a finite regular point.
bool apparent_candidate(const DiffOp& L, const Point& pt, int depth = 40);
/// Indicial data at the roots of a squarefree f without rational roots.
IndicialData algebraic_point_data(const DiffOp& L, const Poly& f);

OperatorProfile classify_operator(const DiffOp& L);

}  // namespace gop

#endif  // GOP_LOCAL_HPP
