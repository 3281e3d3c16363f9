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

#include "gop/diffop.hpp"

#include <algorithm>
#include <sstream>

namespace gop {

namespace {

BigInt binom(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// S(j, k), Stirling numbers of the second kind, rows 0..n.
std::vector<std::vector<BigInt>> stirling2(unsigned n) {
    std::vector<std::vector<BigInt>> S(n + 1, std::vector<BigInt>(n + 1));
    S[0][0] = 1;
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = 1; k <= j; ++k) S[j][k] = S[j - 1][k - 1] + BigInt(k) * S[j - 1][k];
    return S;
}

RatFn theta_apply(const RatFn& f) { return RatFn::z() * f.derivative(); }

std::string basis_symbol(Basis b) { return b == Basis::D ? "D" : "theta"; }

}  // namespace

DiffOp::DiffOp(Basis basis, std::vector<RatFn> coeffs) : basis_(basis), c_(std::move(coeffs)) {
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) c_.emplace_back(0);
}

DiffOp DiffOp::D() { return DiffOp(Basis::D, {RatFn(0), RatFn(1)}); }
DiffOp DiffOp::theta() { return DiffOp(Basis::Theta, {RatFn(0), RatFn(1)}); }
DiffOp DiffOp::scalar(const RatFn& c, Basis basis) { return DiffOp(basis, {c}); }

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    if (a.basis_ != b.basis_) throw std::invalid_argument("operator sum across bases");
    std::vector<RatFn> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return DiffOp(a.basis_, std::move(c));
}

DiffOp DiffOp::operator-() const {
    DiffOp r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp operator*(const RatFn& r, const DiffOp& L) {
    std::vector<RatFn> c = L.c_;
    for (auto& x : c) x = r * x;
    return DiffOp(L.basis_, std::move(c));
}

DiffOp DiffOp::monic() const {
    if (is_zero()) throw DivisionByZeroOperator("normalizing the zero operator");
    return (RatFn(1) / leading()) * *this;
}

std::string DiffOp::to_string() const {
    if (is_zero()) return "0";
    const std::string sym = basis_symbol(basis_);
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        const RatFn& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string power = k == 0 ? "" : (k == 1 ? sym : sym + "^" + std::to_string(k));
        bool neg = c.is_polynomial() && c.num().is_constant() && c.num().leading() < 0;
        RatFn mag = neg ? -c : c;
        std::string coef;
        if (mag == RatFn(1)) {
            coef = k == 0 ? "1" : "";
        } else if (mag.is_polynomial() && mag.num().is_constant()) {
            coef = mag.num().leading().get_str();
        } else {
            coef = "(" + mag.to_string() + ")";
        }
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        os << coef;
        if (!coef.empty() && !power.empty()) os << "*";
        os << power;
        first = false;
    }
    return os.str();
}

DiffOp op_mul(const DiffOp& a, const DiffOp& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("operator product across bases");
    const int na = a.order(), nb = b.order();
    std::vector<RatFn> out(static_cast<std::size_t>(na + nb + 1));
    for (int j = 0; j <= nb; ++j) {
        // X^i * b_j = sum_k C(i,k) X^k(b_j) X^(i-k), where X^k acts by derivation.
        std::vector<RatFn> ders{b.coeff(j)};
        for (int k = 1; k <= na; ++k)
            ders.push_back(a.basis() == Basis::D ? ders.back().derivative() : theta_apply(ders.back()));
        for (int i = 0; i <= na; ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int k = 0; k <= i; ++k) {
                if (ders[static_cast<std::size_t>(k)].is_zero()) continue;
                out[static_cast<std::size_t>(i - k + j)] +=
                    a.coeff(i) * RatFn(BigRat(binom(static_cast<unsigned>(i), static_cast<unsigned>(k)))) *
                    ders[static_cast<std::size_t>(k)];
            }
        }
    }
    return DiffOp(a.basis(), std::move(out));
}

std::pair<DiffOp, DiffOp> op_div_right(const DiffOp& a, const DiffOp& b) {
    if (b.is_zero()) throw DivisionByZeroOperator("right division by the zero operator");
    if (a.basis() != b.basis()) throw std::invalid_argument("operator division across bases");
    const Basis basis = a.basis();
    DiffOp q = DiffOp::scalar(0, basis), r = a;
    while (!r.is_zero() && r.order() >= b.order()) {
        const int m = r.order() - b.order();
        RatFn c = r.leading() / b.leading();
        std::vector<RatFn> mono(static_cast<std::size_t>(m + 1));
        mono[static_cast<std::size_t>(m)] = c;
        DiffOp t(basis, std::move(mono));
        q = q + t;
        DiffOp next = r - op_mul(t, b);
        // Force the leading term off exactly even if cancellation left a zero coefficient.
        std::vector<RatFn> nc = next.coeffs();
        if (static_cast<int>(nc.size()) > r.order()) nc.resize(static_cast<std::size_t>(r.order()));
        r = nc.empty() ? DiffOp::scalar(0, basis) : DiffOp(basis, std::move(nc));
    }
    return {q, r};
}

DiffOp convert_basis(const DiffOp& L, Basis target) {
    if (L.basis() == target) return L;
    const unsigned n = static_cast<unsigned>(L.order());
    std::vector<RatFn> out(n + 1);
    if (target == Basis::Theta) {
        // D^k = z^-k * theta(theta-1)...(theta-k+1).
        for (unsigned k = 0; k <= n; ++k) {
            if (L.coeff(static_cast<int>(k)).is_zero()) continue;
            RatFn ck = L.coeff(static_cast<int>(k)) * RatFn(Poly::constant(1), Poly::monomial(1, k));
            Poly ff = falling_factorial(k);
            for (int j = 0; j <= ff.degree(); ++j)
                if (ff.coeff(static_cast<std::size_t>(j)) != 0)
                    out[static_cast<std::size_t>(j)] += ck * RatFn(ff.coeff(static_cast<std::size_t>(j)));
        }
    } else {
        // theta^j = sum_k S(j,k) z^k D^k.
        auto S = stirling2(n);
        for (unsigned j = 0; j <= n; ++j) {
            if (L.coeff(static_cast<int>(j)).is_zero()) continue;
            for (unsigned k = 0; k <= j; ++k)
                if (S[j][k] != 0)
                    out[k] += L.coeff(static_cast<int>(j)) * RatFn(Poly::monomial(BigRat(S[j][k]), k));
        }
    }
    return DiffOp(target, std::move(out));
}

DiffOp change_basis(const DiffOp& L, Basis target) {
    DiffOp r = convert_basis(L, target);
    return target == Basis::Theta && !r.is_zero() ? r.monic() : r;
}

DiffOp shift_operator(const DiffOp& L, const BigRat& a) {
    DiffOp d = convert_basis(L, Basis::D);
    std::vector<RatFn> c;
    for (const auto& x : d.coeffs()) c.push_back(x.shift(a));
    return DiffOp(Basis::D, std::move(c));
}

DiffOp translate_to_point(const DiffOp& L, const Point& pt) {
    if (!pt.infinite) return convert_basis(shift_operator(L, pt.a), Basis::Theta);
    // theta_z = -theta_u for u = 1/z; the overall sign keeps a monic input monic.
    DiffOp t = convert_basis(L, Basis::Theta);
    const int n = t.order();
    std::vector<RatFn> c;
    for (int j = 0; j <= n; ++j) {
        RatFn x = t.coeff(j).invert_variable();
        c.push_back((j + n) % 2 ? -x : x);
    }
    return DiffOp(Basis::Theta, std::move(c));
}

RatMat::RatMat(std::size_t n) : n_(n), e_(n * n) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

RatMat::RatMat(std::size_t n, std::vector<RatFn> entries) : n_(n), e_(std::move(entries)) {
    if (n == 0 || e_.size() != n * n) throw std::invalid_argument("matrix entries do not match dimension");
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFn(1);
    return m;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    RatMat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
    RatMat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    const std::size_t n = a.n_;
    RatMat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const RatFn& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

RatMat operator*(const RatFn& s, const RatMat& a) {
    RatMat r = a;
    for (auto& x : r.e_) x = s * x;
    return r;
}

RatMat RatMat::derivative() const {
    RatMat r = *this;
    for (auto& x : r.e_) x = x.derivative();
    return r;
}

bool RatMat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const RatFn& x) { return x.is_zero(); });
}

std::string RatMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMat companion(const DiffOp& L) {
    DiffOp m = convert_basis(L, Basis::D).monic();
    const std::size_t n = static_cast<std::size_t>(m.order());
    if (n == 0) throw InvalidParameters("companion matrix of an order-0 operator");
    RatMat A(n);
    for (std::size_t i = 0; i + 1 < n; ++i) A(i, i + 1) = RatFn(1);
    for (std::size_t j = 0; j < n; ++j) A(n - 1, j) = -m.coeff(static_cast<int>(j));
    return A;
}

std::vector<RatMat> gs_sequence(const RatMat& G, int s_max) {
    if (s_max < 1) throw InvalidParameters("s_max must be at least 1");
    std::vector<RatMat> out{G};
    for (int s = 1; s < s_max; ++s) out.push_back(out.back() * G + out.back().derivative());
    return out;
}

std::optional<int> TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

bool TruncatedSeries::is_zero() const { return !valuation().has_value(); }

TruncatedSeries series_derivative(const TruncatedSeries& f) {
    TruncatedSeries r;
    for (std::size_t i = 1; i < f.coeffs.size(); ++i) r.coeffs.push_back(f.coeffs[i] * static_cast<unsigned long>(i));
    return r;
}

TruncatedSeries series_theta(const TruncatedSeries& f) {
    TruncatedSeries r = f;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] *= static_cast<unsigned long>(i);
    return r;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    TruncatedSeries r;
    r.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    TruncatedSeries r;
    r.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

TruncatedSeries series_from_ratfn(const RatFn& f, int N) { return {f.taylor(N)}; }

TruncatedSeries apply_operator(const DiffOp& L, const TruncatedSeries& f) {
    const int N = f.trunc_order();
    if (L.is_zero()) return {std::vector<BigRat>(static_cast<std::size_t>(N))};
    const bool dbasis = L.basis() == Basis::D;
    // Series X^k f, each known modulo z^(known_k).
    std::vector<TruncatedSeries> g{f};
    for (int k = 1; k <= L.order(); ++k)
        g.push_back(dbasis ? series_derivative(g.back()) : series_theta(g.back()));

    int out_order = INT32_MAX, lo = 0;
    for (int k = 0; k <= L.order(); ++k) {
        if (L.coeff(k).is_zero()) continue;
        const int v = *L.coeff(k).order_at_zero();
        out_order = std::min(out_order, g[static_cast<std::size_t>(k)].trunc_order() + v);
        lo = std::min(lo, v);
    }
    const int hi = std::max(out_order, 0);
    std::vector<BigRat> acc(static_cast<std::size_t>(std::max(hi - lo, 0)));
    for (int k = 0; k <= L.order(); ++k) {
        const RatFn& c = L.coeff(k);
        if (c.is_zero()) continue;
        const int v = *c.order_at_zero();
        const int span = out_order - v;
        if (span <= 0) continue;
        std::vector<BigRat> l = c.laurent(span);
        const auto& gk = g[static_cast<std::size_t>(k)].coeffs;
        for (int e = v; e < out_order; ++e) {
            BigRat s = 0;
            for (int i = 0; i <= e - v; ++i) {
                const BigRat& li = l[static_cast<std::size_t>(i)];
                const BigRat& gi = gk[static_cast<std::size_t>(e - v - i)];
                if (li != 0 && gi != 0) s += li * gi;
            }
            acc[static_cast<std::size_t>(e - lo)] += s;
        }
    }
    for (int e = lo; e < std::min(0, out_order); ++e)
        if (acc[static_cast<std::size_t>(e - lo)] != 0)
            throw PoleAtOrigin("L(f) has a nonzero coefficient at z^" + std::to_string(e));
    TruncatedSeries r;
    for (int e = 0; e < out_order; ++e) r.coeffs.push_back(acc[static_cast<std::size_t>(e - lo)]);
    return r;
}

PowerExpansion apply_to_power(const DiffOp& L, long s, int depth) {
    DiffOp t = change_basis(L, Basis::Theta);
    int m = INT32_MAX;
    for (const auto& c : t.coeffs())
        if (!c.is_zero()) m = std::min(m, *c.order_at_zero());
    PowerExpansion out;
    out.offset = m + static_cast<int>(s);
    std::vector<std::vector<BigRat>> lau;
    for (const auto& c : t.coeffs()) {
        std::vector<BigRat> l(static_cast<std::size_t>(depth));
        if (!c.is_zero()) {
            const int v = *c.order_at_zero();
            auto raw = c.laurent(depth);
            for (int k = 0; k < depth; ++k)
                if (m + k - v >= 0 && m + k - v < depth) l[static_cast<std::size_t>(k)] = raw[static_cast<std::size_t>(m + k - v)];
        }
        lau.push_back(std::move(l));
    }
    for (int k = 0; k < depth; ++k) {
        std::vector<BigRat> pc;
        for (const auto& l : lau) pc.push_back(l[static_cast<std::size_t>(k)]);
        Poly phi(std::move(pc));
        out.values.push_back(phi.eval(BigRat(s)));
        out.phi.push_back(std::move(phi));
    }
    return out;
}

std::vector<TruncatedSeries> ordinary_series_basis(const DiffOp& L, int order) {
    DiffOp d = convert_basis(L, Basis::D);
    const int n = d.order();
    if (n < 1) throw InvalidParameters("operator of order 0 has no solution basis");
    if (order < n) throw InsufficientTruncation("series order must be at least the operator order");
    d = d.monic();
    std::vector<std::vector<BigRat>> b;
    for (int i = 0; i < n; ++i) {
        const RatFn& c = d.coeff(i);
        if (!c.is_zero() && *c.order_at_zero() < 0)
            throw NotOrdinaryPoint("0 is a singular point of " + L.to_string());
        b.push_back(c.taylor(order));
    }
    // (t+i)!/t!
    auto ff = [](int t, int i) {
        BigInt r = 1;
        for (int q = t + 1; q <= t + i; ++q) r *= q;
        return r;
    };
    std::vector<TruncatedSeries> out;
    for (int seed = 0; seed < n; ++seed) {
        std::vector<BigRat> y(static_cast<std::size_t>(order));
        y[static_cast<std::size_t>(seed)] = 1;
        for (int m = 0; m + n < order; ++m) {
            BigRat acc = 0;
            for (int i = 0; i < n; ++i)
                for (int l = 0; l <= m; ++l) {
                    const BigRat& bl = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                    const BigRat& yv = y[static_cast<std::size_t>(m - l + i)];
                    if (bl != 0 && yv != 0) acc += bl * BigRat(ff(m - l, i)) * yv;
                }
            y[static_cast<std::size_t>(m + n)] = -acc / BigRat(ff(m, n));
        }
        out.push_back({std::move(y)});
    }
    return out;
}

}  // namespace gop
