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

#include "gop/local.hpp"

#include <algorithm>

namespace gop {

std::string Location::to_string() const {
    switch (kind) {
        case LocationKind::Finite: return a.get_str();
        case LocationKind::Infinity: return "inf";
        case LocationKind::AlgebraicClass: return "root of " + f.to_string("z");
    }
    return "";
}

DiffOp polynomial_form(const DiffOp& L) {
    DiffOp d = convert_basis(L, Basis::D);
    if (d.is_zero()) throw DivisionByZeroOperator("zero operator");
    Poly den = Poly::constant(1);
    for (const auto& c : d.coeffs())
        if (!c.is_zero()) den = exact_div(den * c.den(), gcd(den, c.den()));
    std::vector<Poly> polys;
    Poly g;
    for (const auto& c : d.coeffs()) {
        Poly p = c.is_zero() ? Poly{} : c.num() * exact_div(den, c.den());
        g = gcd(g, p);
        polys.push_back(std::move(p));
    }
    std::vector<BigRat> all;
    for (auto& p : polys) {
        p = exact_div(p, g);
        all.insert(all.end(), p.coeffs().begin(), p.coeffs().end());
    }
    // One rational scale making all coefficients coprime integers, leading term positive.
    BigRat scale = content(Poly(all));
    if (polys.back().leading() / scale < 0) scale = -scale;
    std::vector<RatFn> out;
    for (auto& p : polys) out.emplace_back(p * BigRat(1 / scale));
    return DiffOp(Basis::D, std::move(out));
}

namespace {

DiffOp theta_form_at(const DiffOp& L, const Point& pt) { return change_basis(translate_to_point(L, pt), Basis::Theta); }

bool analytic_at_zero(const RatFn& c) { return c.is_zero() || *c.order_at_zero() >= 0; }

int degree_of(const RatFn& r) { return r.num().degree() - r.den().degree(); }

bool is_ordinary(const DiffOp& L, const Point& pt) {
    DiffOp d = convert_basis(translate_to_point(L, pt), Basis::D).monic();
    return std::all_of(d.coeffs().begin(), d.coeffs().end(), analytic_at_zero);
}

// Polynomial arithmetic in Q[y]/(f).
struct QuotientRing {
    Poly f;
    Poly reduce(const Poly& a) const { return divmod(a, f).second; }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly inv(const Poly& a) const {
        auto [g, s, t] = xgcd(reduce(a), f);
        if (g.degree() != 0) throw std::logic_error("non-invertible element in quotient ring");
        return reduce(s);
    }
};

// Multiplicity of the squarefree f in B (every root of f shares it after refinement).
int multiplicity(const Poly& f, Poly B) {
    if (B.is_zero()) return INT32_MAX;
    int m = 0;
    for (;;) {
        auto [q, r] = divmod(B, f);
        if (!r.is_zero()) return m;
        B = std::move(q);
        ++m;
    }
}

// Split f so that each piece has a uniform multiplicity in B.
void refine(const Poly& f, Poly B, std::vector<Poly>& out) {
    if (B.is_zero()) {
        out.push_back(f);
        return;
    }
    for (;;) {
        Poly g = gcd(f, B);
        if (g.degree() <= 0) {
            out.push_back(f);
            return;
        }
        if (g.degree() == f.degree()) {
            B = exact_div(B, f);
            continue;
        }
        refine(g, B, out);
        refine(exact_div(f, g), B, out);
        return;
    }
}

}  // namespace

FuchsResult fuchs_test(const DiffOp& L, const Point& pt) {
    FuchsResult res;
    DiffOp t = theta_form_at(L, pt);
    res.regular = std::all_of(t.coeffs().begin(), t.coeffs().end(), analytic_at_zero);
    DiffOp P = polynomial_form(L);
    const int n = P.order();
    RatFn B0 = P.coeff(n);
    for (int j = 1; j <= n; ++j) {
        RatFn r = P.coeff(n - j) / B0;
        if (pt.infinite) {
            if (r.is_zero()) continue;
            res.pole_profile.push_back({j, degree_of(r), -j});
        } else {
            res.pole_profile.push_back({j, r.pole_order_at(pt.a), j});
        }
    }
    return res;
}

Poly indicial_polynomial(const DiffOp& L, const Point& pt) {
    DiffOp t = theta_form_at(L, pt);
    if (!std::all_of(t.coeffs().begin(), t.coeffs().end(), analytic_at_zero))
        throw IrregularPoint("irregular singular point at " + pt.to_string());
    std::vector<BigRat> c;
    for (const auto& x : t.coeffs()) c.push_back(x.is_zero() ? BigRat(0) : x.eval(0));
    return Poly(std::move(c));
}

ExponentSplit split_rational(const Poly& phi) {
    ExponentSplit out;
    auto rr = rational_roots(phi);
    out.rational = rr.roots;
    for (const auto& [f, m] : squarefree_decomposition(rr.cofactor))
        for (int i = 0; i < m; ++i) out.nonrational.push_back(f);
    return out;
}

ExponentSplit exponents(const DiffOp& L, const Point& pt) { return split_rational(indicial_polynomial(L, pt)); }

bool apparent_candidate(const DiffOp& L, const Point& pt, int depth) {
    DiffOp t = theta_form_at(L, pt);
    if (!std::all_of(t.coeffs().begin(), t.coeffs().end(), analytic_at_zero)) return false;
    const int n = t.order();
    PowerExpansion ex = apply_to_power(t, 0, depth);
    auto split = split_rational(ex.phi[0]);
    if (!split.nonrational.empty() || static_cast<int>(split.rational.size()) != n) return false;
    for (const auto& [e, m] : split.rational)
        if (m != 1 || e < 0 || e.get_den() != 1) return false;
    if (is_ordinary(L, pt)) return false;
    for (const auto& [e, m] : split.rational) {
        std::vector<BigRat> y{BigRat(1)};
        for (int M = 1; M < depth; ++M) {
            BigRat rhs = 0;
            for (int N = 0; N < M; ++N)
                if (y[static_cast<std::size_t>(N)] != 0)
                    rhs -= y[static_cast<std::size_t>(N)] * ex.phi[static_cast<std::size_t>(M - N)].eval(e + N);
            BigRat lead = ex.phi[0].eval(e + M);
            if (lead == 0) {
                if (rhs != 0) return false;
                y.push_back(0);
            } else {
                y.push_back(rhs / lead);
            }
        }
    }
    return true;
}

IndicialData algebraic_point_data(const DiffOp& L, const Poly& f) {
    IndicialData out;
    out.point.location = Location::algebraic(f);
    DiffOp P = polynomial_form(L);
    const int n = P.order();
    const Poly& B0 = P.coeff(n).num();
    const int mu0 = multiplicity(f, B0);
    QuotientRing R{f};
    const Poly fprime = f.derivative();
    Poly R0 = B0;
    for (int i = 0; i < mu0; ++i) R0 = exact_div(R0, f);
    const Poly R0inv = R.inv(R0);
    const Poly fpinv = R.inv(fprime);
    std::vector<Poly> a(static_cast<std::size_t>(n + 1));
    a[0] = Poly::constant(1);
    out.point.regular = true;
    for (int j = 1; j <= n; ++j) {
        const Poly& Bj = P.coeff(n - j).num();
        const int muj = multiplicity(f, Bj);
        const int pole = Bj.is_zero() ? 0 : std::max(0, mu0 - muj);
        out.point.pole_profile.push_back({j, pole, j});
        if (pole > j) out.point.regular = false;
        if (pole == j) {
            Poly Rj = Bj;
            for (int i = 0; i < muj; ++i) Rj = exact_div(Rj, f);
            Poly v = R.mul(R.reduce(Rj), R0inv);
            for (int i = 0; i < j; ++i) v = R.mul(v, fpinv);
            a[static_cast<std::size_t>(j)] = v;
        }
    }
    if (!out.point.regular) return out;
    // Phi(y, x) = sum_j a_j(y) x(x-1)...(x-n+j+1), stored by powers of x.
    std::vector<Poly> phi_coef(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        if (a[static_cast<std::size_t>(j)].is_zero()) continue;
        Poly ff = falling_factorial(static_cast<unsigned>(n - j));
        for (int i = 0; i <= ff.degree(); ++i)
            phi_coef[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(j)] * ff.coeff(static_cast<std::size_t>(i));
    }
    const int deg = n * f.degree();
    std::vector<BigRat> xs, ys;
    for (int k = 0; k <= deg; ++k) {
        BigRat x = k;
        Poly at;
        BigRat xp = 1;
        for (int i = 0; i <= n; ++i, xp *= x) at += phi_coef[static_cast<std::size_t>(i)] * xp;
        xs.push_back(x);
        ys.push_back(resultant(f, R.reduce(at)));
    }
    out.phi = interpolate(xs, ys).monic();
    auto rr = rational_roots(out.phi);
    for (const auto& [e, m] : rr.roots) out.rational_exponents.emplace_back(e, m / f.degree());
    for (const auto& [g, m] : squarefree_decomposition(rr.cofactor)) {
        (void)m;
        out.nonrational_factors.push_back(g);
    }
    return out;
}

OperatorProfile classify_operator(const DiffOp& L) {
    OperatorProfile prof;
    prof.op = L;
    DiffOp P = polynomial_form(L);
    const int n = P.order();
    const Poly& B0 = P.coeff(n).num();

    std::vector<Point> pts;
    std::vector<Poly> classes;
    if (B0.degree() > 0) {
        auto rr = rational_roots(B0);
        for (const auto& [r, m] : rr.roots) pts.push_back(Point::at(r));
        for (const auto& [f, m] : squarefree_decomposition(rr.cofactor)) {
            std::vector<Poly> pieces{f};
            for (int j = 0; j <= n; ++j) {
                std::vector<Poly> next;
                for (const auto& q : pieces) refine(q, P.coeff(j).num(), next);
                pieces = std::move(next);
            }
            for (auto& q : pieces) classes.push_back(q.monic());
        }
    }
    pts.push_back(Point::infinity());

    prof.fuchsian = true;
    prof.all_exponents_rational = true;
    for (const auto& pt : pts) {
        IndicialData d;
        FuchsResult fr = fuchs_test(L, pt);
        d.point.location = Location::from_point(pt);
        d.point.regular = fr.regular;
        d.point.pole_profile = fr.pole_profile;
        if (!fr.regular) {
            prof.fuchsian = false;
            prof.points.push_back(std::move(d));
            continue;
        }
        d.ordinary = is_ordinary(L, pt);
        d.phi = indicial_polynomial(L, pt);
        auto split = split_rational(d.phi);
        d.rational_exponents = split.rational;
        d.nonrational_factors = split.nonrational;
        if (!d.nonrational_factors.empty()) prof.all_exponents_rational = false;
        if (!pt.infinite) d.apparent_candidate = apparent_candidate(L, pt);
        prof.points.push_back(std::move(d));
    }
    for (const auto& f : classes) {
        IndicialData d = algebraic_point_data(L, f);
        if (!d.point.regular) prof.fuchsian = false;
        else if (!d.nonrational_factors.empty()) prof.all_exponents_rational = false;
        prof.points.push_back(std::move(d));
    }
    prof.katz_consistent = prof.fuchsian && prof.all_exponents_rational;
    return prof;
}

}  // namespace gop
