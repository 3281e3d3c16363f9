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

#include "gop/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "gop/integers.hpp"
#include "gop/valuation.hpp"

namespace gop {

std::string QuadParam::to_string() const {
    if (b == 0) return a.get_str();
    return a.get_str() + (b < 0 ? " - " : " + ") + BigRat(abs(b)).get_str() + "*sqrt(" + std::to_string(d) + ")";
}

// --- coefficient generators ---

CoeffGenerator CoeffGenerator::polylog(int s) {
    if (s < 0) throw InvalidParameters("polylog weight must be non-negative");
    CoeffGenerator g;
    g.kind_ = Kind::Polylog;
    g.s_ = s;
    return g;
}

CoeffGenerator CoeffGenerator::factorial() {
    CoeffGenerator g;
    g.kind_ = Kind::Factorial;
    return g;
}

CoeffGenerator CoeffGenerator::inverse_factorial() {
    CoeffGenerator g;
    g.kind_ = Kind::InverseFactorial;
    return g;
}

CoeffGenerator CoeffGenerator::constant(const BigRat& c) {
    CoeffGenerator g;
    g.kind_ = Kind::Constant;
    g.value_ = c;
    return g;
}

CoeffGenerator CoeffGenerator::geometric(const BigRat& r) {
    CoeffGenerator g;
    g.kind_ = Kind::Geometric;
    g.value_ = r;
    return g;
}

CoeffGenerator CoeffGenerator::binomial(const BigRat& alpha, const Poly& factor) {
    CoeffGenerator g;
    g.kind_ = Kind::Binomial;
    g.value_ = alpha;
    g.factor_ = factor;
    return g;
}

CoeffGenerator CoeffGenerator::hypergeometric(std::vector<BigRat> alphas, std::vector<BigRat> betas) {
    for (const auto& b : betas)
        if (b <= 0 && b.get_den() == 1) throw InvalidParameters("beta parameter is a non-positive integer");
    CoeffGenerator g;
    g.kind_ = Kind::Hypergeometric;
    g.alphas_ = std::move(alphas);
    g.betas_ = std::move(betas);
    return g;
}

std::vector<BigRat> CoeffGenerator::coefficients(int count) const {
    std::vector<BigRat> out;
    if (count <= 0) return out;
    out.reserve(static_cast<std::size_t>(count));
    switch (kind_) {
        case Kind::Polylog:
            out.push_back(BigRat(0));
            for (int n = 1; n < count; ++n) {
                BigInt d;
                mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s_));
                out.emplace_back(BigInt(1), d);
            }
            break;
        case Kind::Factorial:
        case Kind::InverseFactorial: {
            BigInt f = 1;
            for (int n = 0; n < count; ++n) {
                if (n > 0) f *= n;
                out.push_back(kind_ == Kind::Factorial ? BigRat(f) : BigRat(BigInt(1), f));
            }
            break;
        }
        case Kind::Constant:
            out.assign(static_cast<std::size_t>(count), BigRat(0));
            out[0] = value_;
            break;
        case Kind::Geometric: {
            BigRat r = 1;
            for (int n = 0; n < count; ++n, r *= value_) out.push_back(r);
            break;
        }
        case Kind::Binomial: {
            // (1 - z)^alpha = sum (-alpha)_n / n! z^n.
            std::vector<BigRat> b;
            BigRat c = 1;
            for (int n = 0; n < count; ++n) {
                b.push_back(c);
                c *= (-value_ + n) / BigRat(n + 1);
            }
            for (int n = 0; n < count; ++n) {
                BigRat acc = 0;
                for (int j = 0; j <= std::min(n, factor_.degree()); ++j)
                    acc += factor_.coeff(static_cast<std::size_t>(j)) * b[static_cast<std::size_t>(n - j)];
                out.push_back(acc);
            }
            break;
        }
        case Kind::Hypergeometric: {
            BigRat c = 1;
            for (int n = 0; n < count; ++n) {
                out.push_back(c);
                BigRat num = 1, den = n + 1;
                for (const auto& a : alphas_) num *= a + n;
                for (const auto& b : betas_) den *= b + n;
                c *= num / den;
            }
            break;
        }
    }
    return out;
}

BigRat CoeffGenerator::coefficient(int n) const {
    if (n < 0) throw InvalidParameters("negative coefficient index");
    switch (kind_) {
        case Kind::Polylog: {
            if (n == 0) return 0;
            BigInt d;
            mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s_));
            return BigRat(BigInt(1), d);
        }
        case Kind::Constant: return n == 0 ? value_ : BigRat(0);
        default: return coefficients(n + 1).back();
    }
}

std::string CoeffGenerator::rule() const {
    auto list = [](const std::vector<BigRat>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
        return s;
    };
    switch (kind_) {
        case Kind::Polylog: return "1/n^" + std::to_string(s_);
        case Kind::Factorial: return "n!";
        case Kind::InverseFactorial: return "1/n!";
        case Kind::Constant: return "constant " + value_.get_str();
        case Kind::Geometric: return "(" + value_.get_str() + ")^n";
        case Kind::Binomial: return "(1 - z)^(" + value_.get_str() + ") * (" + factor_.to_string("z") + ")";
        case Kind::Hypergeometric: return "hypergeometric [" + list(alphas_) + "; " + list(betas_) + "]";
    }
    return "";
}

// --- operators ---

DiffOp polylog_operator(int s) {
    if (s < 1) throw InvalidParameters("polylog weight must be at least 1");
    const DiffOp D = DiffOp::D();
    const RatFn one_minus_z(Poly{BigRat(1), BigRat(-1)});
    DiffOp L = op_mul(D, op_mul(DiffOp::scalar(one_minus_z, Basis::D), D));
    const DiffOp theta = convert_basis(DiffOp::theta(), Basis::D);
    for (int k = 1; k < s; ++k) L = op_mul(L, theta);
    return L;
}

RatMat polylog_system(int s) {
    if (s < 1) throw InvalidParameters("polylog weight must be at least 1");
    const std::size_t n = static_cast<std::size_t>(s) + 1;
    RatMat G(n);
    G(1, 0) = RatFn(1) / RatFn(Poly{BigRat(1), BigRat(-1)});
    for (std::size_t k = 2; k < n; ++k) G(k, k - 1) = RatFn(1) / RatFn(Poly::z());
    return G;
}

DiffOp hypergeom_operator(const std::vector<BigRat>& alphas, const std::vector<BigRat>& betas) {
    if (alphas.empty() || betas.size() + 1 != alphas.size())
        throw InvalidParameters("need n alphas and n-1 betas");
    for (const auto& b : betas)
        if (b <= 0 && b.get_den() == 1) throw InvalidParameters("beta parameter is a non-positive integer");
    const DiffOp theta = DiffOp::theta();
    auto shifted = [&](const BigRat& c) { return theta + DiffOp::scalar(RatFn(c), Basis::Theta); };
    DiffOp left = theta;
    for (const auto& b : betas) left = op_mul(left, shifted(b - 1));
    DiffOp right = shifted(alphas[0]);
    for (std::size_t i = 1; i < alphas.size(); ++i) right = op_mul(right, shifted(alphas[i]));
    return left - RatFn(Poly::z()) * right;
}

namespace {

bool squarefree(long d) {
    if (d == 0) return false;
    for (const auto& [p, e] : factor_integer(BigInt(d)))
        if (e > 1) return false;
    return true;
}

bool pair_ok(const QuadParam& a, const QuadParam& b) {
    if (a.b != b.b) return false;
    BigRat diff = a.a - b.a;
    return diff.get_den() == 1 && diff >= 0;
}

bool match(const std::vector<QuadParam>& A, const std::vector<QuadParam>& B, std::size_t i, std::vector<bool>& used) {
    if (i == A.size()) return true;
    for (std::size_t j = 0; j < B.size(); ++j) {
        if (used[j] || !pair_ok(A[i], B[j])) continue;
        used[j] = true;
        if (match(A, B, i + 1, used)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

bool hypergeom_is_gfunction(const std::vector<QuadParam>& alphas, const std::vector<QuadParam>& betas) {
    if (alphas.size() + betas.size() > 16) throw UnsupportedParameters("too many parameters for exhaustive matching");
    std::set<long> radicands;
    for (const auto* list : {&alphas, &betas})
        for (const auto& q : *list) {
            if (q.is_rational()) continue;
            if (q.d == 1 || !squarefree(q.d)) throw InvalidParameters("radicand must be squarefree and not 0 or 1");
            radicands.insert(q.d);
        }
    if (radicands.size() > 1) throw UnsupportedParameters("parameters over different quadratic fields");
    for (const auto& a : alphas)
        for (const auto& b : betas)
            if (a.a == b.a && a.b == b.b) throw InvalidParameters("an alpha parameter equals a beta parameter");
    for (const auto& b : betas)
        if (b.is_rational() && b.a <= 0 && b.a.get_den() == 1) throw InvalidParameters("beta parameter is a non-positive integer");
    std::vector<QuadParam> A, B;
    for (const auto& a : alphas)
        if (!a.is_rational()) A.push_back(a);
    for (const auto& b : betas)
        if (!b.is_rational()) B.push_back(b);
    if (A.empty() && B.empty()) return true;
    if (A.size() != B.size()) return false;
    std::vector<bool> used(B.size(), false);
    return match(A, B, 0, used);
}

DiffOp order1_g_operator(const std::vector<BigRat>& residues, const std::vector<BigRat>& poles) {
    if (residues.size() != poles.size()) throw InvalidParameters("residue and pole lists differ in length");
    std::set<BigRat> seen(poles.begin(), poles.end());
    if (seen.size() != poles.size()) throw InvalidParameters("poles must be distinct");
    RatFn sum;
    for (std::size_t j = 0; j < poles.size(); ++j)
        sum += RatFn(residues[j]) / RatFn(Poly{-poles[j], BigRat(1)});
    return DiffOp(Basis::D, {-sum, RatFn(1)});
}

DiffOp counterexample_theta2_minus_2() {
    return DiffOp(Basis::Theta, {RatFn(-2), RatFn(0), RatFn(1)});
}

// --- growth checks ---

namespace {

double log_abs(const BigInt& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs(const BigRat& q) { return log_abs(q.get_num()) - log_abs(BigInt(q.get_den())); }

// Calls visit(n, a_n, den(a_0..a_n)) for n = 0..n_max.
template <class F>
void walk(const CoeffGenerator& g, int n_max, F&& visit) {
    if (n_max < 1) throw InvalidParameters("n_max must be at least 1");
    std::vector<BigRat> a = g.coefficients(n_max + 1);
    BigInt den = 1;
    for (int n = 0; n <= n_max; ++n) {
        const BigRat& c = a[static_cast<std::size_t>(n)];
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        visit(n, c, den);
    }
}

}  // namespace

GrowthReport gfunction_growth_check(const CoeffGenerator& g, int n_max, const BigRat& C) {
    if (C <= 0) throw InvalidParameters("C must be positive");
    GrowthReport rep;
    rep.n_max = n_max;
    rep.log_C = log_abs(C);
    BigRat bound = C;  // C^(n+1)
    walk(g, n_max, [&](int n, const BigRat& a, const BigInt& den) {
        if (!rep.first_failure && (abs(a) > bound || BigRat(den) > bound)) rep.first_failure = n;
        double l = std::max(a == 0 ? 0.0 : log_abs(a), log_abs(den)) / (n + 1);
        rep.min_log_C = std::max(rep.min_log_C, l);
        bound *= C;
    });
    rep.pass = !rep.first_failure;
    return rep;
}

GrowthReport gfunction_growth_check_log(const CoeffGenerator& g, int n_max, double log_C) {
    GrowthReport rep;
    rep.n_max = n_max;
    rep.log_C = log_C;
    walk(g, n_max, [&](int n, const BigRat& a, const BigInt& den) {
        const double size = std::max(a == 0 ? 0.0 : log_abs(a), log_abs(den));
        if (!rep.first_failure && size > (n + 1) * log_C) rep.first_failure = n;
        rep.min_log_C = std::max(rep.min_log_C, size / (n + 1));
    });
    rep.pass = !rep.first_failure;
    return rep;
}

bool eisenstein_check(const CoeffGenerator& g, const BigInt& c, int n_max) {
    if (c <= 0) throw InvalidParameters("c must be a positive integer");
    std::vector<BigRat> a = g.coefficients(n_max + 1);
    BigInt cn = 1;
    for (int n = 0; n <= n_max; ++n, cn *= c) {
        BigRat v = a[static_cast<std::size_t>(n)] * BigRat(cn);
        if (v.get_den() != 1) return false;
    }
    return true;
}

// --- registry ---

namespace {

CatalogEntry with_companion(std::string id, std::string description, DiffOp op, std::optional<CoeffGenerator> series) {
    CatalogEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.system = companion(op);
    e.op = std::move(op);
    e.system_is_companion = true;
    e.series = std::move(series);
    return e;
}

const std::vector<std::string> kIds = {"polylog:1", "polylog:2", "polylog:3", "exp",  "2f1",
                                       "theta2m2",  "order1",    "f0",        "sqrt1mz", "geometric"};

}  // namespace

std::vector<std::string> catalog_ids() { return kIds; }

CatalogEntry catalog_get(const std::string& id) {
    if (id.rfind("polylog:", 0) == 0) {
        int s = 0;
        try {
            std::size_t pos = 0;
            s = std::stoi(id.substr(8), &pos);
            if (pos != id.size() - 8) s = 0;
        } catch (const std::exception&) {
            s = 0;
        }
        if (s < 1 || s > 8) throw InvalidParameters("unknown catalog id: " + id);
        CatalogEntry e;
        e.id = id;
        const std::string k = std::to_string(s);
        e.description = "Li_" + k + "(z) = sum z^n/n^" + k + "; system for (1, Li_1" +
                        (s == 1 ? std::string(")") : (s == 2 ? ", Li_2)" : ", ..., Li_" + k + ")"));
        e.op = polylog_operator(s);
        e.system = polylog_system(s);
        e.system_is_companion = false;
        e.series = CoeffGenerator::polylog(s);
        return e;
    }
    if (id == "exp")
        return with_companion(id, "exp(z), operator D - 1", DiffOp(Basis::D, {RatFn(-1), RatFn(1)}),
                              CoeffGenerator::inverse_factorial());
    if (id == "2f1") {
        const BigRat h(1, 2);
        return with_companion(id, "2F1(1/2, 1/2; 1; z)", hypergeom_operator({h, h}, {BigRat(1)}),
                              CoeffGenerator::hypergeometric({h, h}, {BigRat(1)}));
    }
    if (id == "theta2m2")
        return with_companion(id, "theta^2 - 2, exponents +-sqrt(2) at 0 and infinity", counterexample_theta2_minus_2(),
                              std::nullopt);
    if (id == "order1")
        return with_companion(id, "D - (1/2)/(z - 1), solution (1 - z)^(1/2)",
                              order1_g_operator({BigRat(1, 2)}, {BigRat(1)}), CoeffGenerator::binomial(BigRat(1, 2)));
    if (id == "f0") {
        // 2(1 - z)(4 - 3z) D - (6 - 3z), solution (1 - z)^(-3/2) (1 - 3z/4).
        Poly lead = Poly{BigRat(2), BigRat(-2)} * Poly{BigRat(4), BigRat(-3)};
        DiffOp L(Basis::D, {RatFn(Poly{BigRat(-6), BigRat(3)}), RatFn(lead)});
        return with_companion(id, "2F1(3, 1/2; 2; z) = (1 - z)^(-1/2) + z/(4 (1 - z)^(3/2))", L,
                              CoeffGenerator::binomial(BigRat(-3, 2), Poly{BigRat(1), BigRat(-3, 4)}));
    }
    if (id == "sqrt1mz")
        return with_companion(id, "sqrt(1 - z), operator 2(1 - z) D + 1",
                              DiffOp(Basis::D, {RatFn(1), RatFn(Poly{BigRat(2), BigRat(-2)})}),
                              CoeffGenerator::binomial(BigRat(1, 2)));
    if (id == "geometric")
        return with_companion(id, "1/(1 - z), operator (1 - z) D - 1",
                              DiffOp(Basis::D, {RatFn(-1), RatFn(Poly{BigRat(1), BigRat(-1)})}),
                              CoeffGenerator::geometric(BigRat(1)));
    throw InvalidParameters("unknown catalog id: " + id);
}

std::vector<CatalogEntry> catalog_all() {
    std::vector<CatalogEntry> out;
    for (const auto& id : kIds) out.push_back(catalog_get(id));
    return out;
}

std::vector<TruncatedSeries> system_solution(const CatalogEntry& e, int N) {
    if (N < 1) throw InvalidParameters("truncation must be positive");
    std::vector<TruncatedSeries> out;
    if (!e.series) return out;
    const int n = static_cast<int>(e.system.dim());
    if (!e.system_is_companion) {
        TruncatedSeries one{std::vector<BigRat>(static_cast<std::size_t>(N))};
        one.coeffs[0] = 1;
        out.push_back(one);
        for (int k = 1; k < n; ++k) out.push_back(CoeffGenerator::polylog(k).series(N));
        return out;
    }
    TruncatedSeries g = e.series->series(N + n - 1);
    for (int k = 0; k < n; ++k) {
        TruncatedSeries cut{std::vector<BigRat>(g.coeffs.begin(), g.coeffs.begin() + N)};
        out.push_back(std::move(cut));
        g = series_derivative(g);
    }
    return out;
}

}  // namespace gop
