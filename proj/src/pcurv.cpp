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

#include "gop/pcurv.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "gop/integers.hpp"
#include "gop/local.hpp"
#include "gop/valuation.hpp"

namespace gop {

FpMat::FpMat(std::uint32_t p, std::size_t n) : p_(p), n_(n), e_(n * n, FpRatFn(p)) {}

FpMat FpMat::identity(std::uint32_t p, std::size_t n) {
    FpMat m(p, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FpRatFn(FpPoly::constant(p, 1));
    return m;
}

FpMat operator+(const FpMat& a, const FpMat& b) {
    FpMat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
}

FpMat operator*(const FpMat& a, const FpMat& b) {
    const std::size_t n = a.n_;
    FpMat r(a.p_, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero()) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

FpMat FpMat::derivative() const {
    FpMat r = *this;
    for (auto& x : r.e_) x = x.derivative();
    return r;
}

FpMat FpMat::pow(unsigned k) const {
    FpMat r = identity(p_, n_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool FpMat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const FpRatFn& x) { return x.is_zero(); });
}

std::string FpMat::to_string() const {
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

FpMat reduce_system(const RatMat& G, std::uint32_t p) {
    FpMat m(p, G.dim());
    for (std::size_t i = 0; i < G.dim(); ++i)
        for (std::size_t j = 0; j < G.dim(); ++j) m(i, j) = reduce_ratfn_mod_p(G(i, j), p);
    return m;
}

std::vector<FpMat> fp_gs_sequence(const FpMat& G, int s_max) {
    std::vector<FpMat> out{G};
    for (int s = 1; s < s_max; ++s) out.push_back(out.back() * G + out.back().derivative());
    return out;
}

FpMat p_curvature(const RatMat& G, std::uint32_t p) {
    FpMat g = reduce_system(G, p);
    FpMat m = g;
    for (std::uint32_t s = 1; s < p; ++s) m = m * g + m.derivative();
    return m;
}

NilpotenceResult is_nilpotent(const FpMat& M) {
    FpMat pw = M;
    for (std::size_t k = 1; k <= M.dim(); ++k) {
        if (pw.is_zero()) return {true, static_cast<int>(k)};
        if (k < M.dim()) pw = pw * M;
    }
    return {false, std::nullopt};
}

namespace {

std::vector<FpRatFn> reduce_monic_operator(const DiffOp& L, std::uint32_t p) {
    DiffOp m = convert_basis(L, Basis::D).monic();
    std::vector<FpRatFn> b;
    for (const auto& c : m.coeffs()) b.push_back(reduce_ratfn_mod_p(c, p));
    return b;
}

}  // namespace

bool operator_nilpotence_by_division(const DiffOp& L, std::uint32_t p) {
    std::vector<FpRatFn> b = reduce_monic_operator(L, p);
    const std::size_t n = b.size() - 1;
    if (n == 0) return true;
    // r represents sum r_i D^i with i < n; start from D^0 and apply D on the left p*n times.
    std::vector<FpRatFn> r(n, FpRatFn(p));
    r[0] = FpRatFn(FpPoly::constant(p, 1));
    for (std::size_t step = 0; step < p * n; ++step) {
        std::vector<FpRatFn> next(n, FpRatFn(p));
        FpRatFn top(p);
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = next[i] + r[i].derivative();
            if (i + 1 < n) next[i + 1] = next[i + 1] + r[i];
            else top = r[i];
        }
        if (!top.is_zero())
            for (std::size_t i = 0; i < n; ++i) next[i] = next[i] - top * b[i];
        r = std::move(next);
    }
    return std::all_of(r.begin(), r.end(), [](const FpRatFn& x) { return x.is_zero(); });
}

bool katz_honda_check(const DiffOp& L, std::uint32_t p) {
    Poly phi = indicial_polynomial(L, Point::at(0));
    FpPoly g = reduce_poly_mod_p(phi, p);
    if (g.degree() < phi.degree()) throw BadPrime(p, "indicial polynomial drops degree");
    const FpPoly x = FpPoly::monomial(p, 1, 1);
    while (g.degree() > 0) {
        FpPoly xp = powmod(x, p, g);
        FpPoly h = gcd(g, xp - x);
        if (h.degree() <= 0) break;
        g = divmod(g, h).first;
    }
    return g.degree() <= 0;
}

std::string to_string(PStatus s) {
    switch (s) {
        case PStatus::Nilpotent: return "Nilpotent";
        case PStatus::NonNilpotent: return "NonNilpotent";
        case PStatus::BadPrime: return "BadPrime";
    }
    return "";
}

std::string to_string(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::AllGoodNilpotent: return "AllGoodNilpotent";
        case ScanVerdict::FoundNonNilpotent: return "FoundNonNilpotent";
        case ScanVerdict::Mixed: return "Mixed";
    }
    return "";
}

PCurvatureReport pcurvature_report(const RatMat& G, const DiffOp* L, std::uint32_t p) {
    PCurvatureReport rep;
    rep.prime = p;
    try {
        NilpotenceResult nr = is_nilpotent(p_curvature(G, p));
        rep.status = nr.nilpotent ? PStatus::Nilpotent : PStatus::NonNilpotent;
        rep.nilpotence_index = nr.index;
    } catch (const BadPrime& e) {
        rep.status = PStatus::BadPrime;
        rep.note = e.what();
        return rep;
    }
    if (L) {
        try {
            bool div = operator_nilpotence_by_division(*L, p);
            rep.division_checked = true;
            rep.method_agreement = div == (rep.status == PStatus::Nilpotent);
        } catch (const BadPrime& e) {
            rep.note = std::string("division test skipped: ") + e.what();
        }
    }
    return rep;
}

unsigned worker_count() {
    if (const char* env = std::getenv("GOP_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

GlobalScan global_scan(const std::string& id, const RatMat& G, const DiffOp* L, std::uint32_t lo, std::uint32_t hi) {
    GlobalScan scan;
    scan.id = id;
    scan.lo = lo;
    scan.hi = hi;
    const auto primes = primes_in(lo, hi);
    scan.reports.resize(primes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) scan.reports[i] = pcurvature_report(G, L, primes[i]);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next.store(primes.size());
        }
    };
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    bool any_nil = false, any_non = false;
    for (const auto& r : scan.reports) {
        any_nil |= r.status == PStatus::Nilpotent;
        any_non |= r.status == PStatus::NonNilpotent;
    }
    scan.verdict = any_non ? (any_nil ? ScanVerdict::Mixed : ScanVerdict::FoundNonNilpotent) : ScanVerdict::AllGoodNilpotent;
    return scan;
}

}  // namespace gop
