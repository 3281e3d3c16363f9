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

#include "gop/fp.hpp"

#include <sstream>

#include "gop/kernels.hpp"

namespace gop {

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1U) r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t fp_from_rat(const BigRat& q, std::uint32_t p) {
    unsigned long d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (d == 0) throw BadPrime(p, "denominator divisible by p");
    unsigned long n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return static_cast<std::uint32_t>(n * fp_inv(static_cast<std::uint32_t>(d), p) % p);
}

void FpPoly::check_prime() const {
    if (p_ < 2 || p_ >= kernels::kMaxPrime) throw UnsupportedParameters("prime outside the supported range 2..32767");
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    check_prime();
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::uint32_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t k) {
    std::vector<std::uint32_t> v(k + 1);
    v[k] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = c ? p_ - c : 0;
    return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    FpPoly r = a.c_.size() >= b.c_.size() ? a : b;
    const FpPoly& s = a.c_.size() >= b.c_.size() ? b : a;
    kernels::axpy_mod(r.c_.data(), s.c_.data(), 1, s.c_.size(), r.p_);
    r.trim();
    return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    FpPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i]) kernels::axpy_mod(r.c_.data() + i, b.c_.data(), a.c_[i], b.c_.size(), r.p_);
    r.trim();
    return r;
}

FpPoly FpPoly::scaled(std::uint32_t s) const {
    FpPoly r = *this;
    kernels::scale_mod(r.c_.data(), s % p_, r.c_.size(), p_);
    r.trim();
    return r;
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = static_cast<std::uint32_t>(c_[i] * (i % p_) % p_);
    r.trim();
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(leading(), p_));
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return static_cast<std::uint32_t>(acc);
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        std::uint32_t c = c_[static_cast<std::size_t>(i)];
        if (!c) continue;
        if (!first) os << " + ";
        if (i == 0 || c != 1) os << c;
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::domain_error("F_p polynomial division by zero");
    const std::uint32_t p = a.prime();
    if (a.degree() < b.degree()) return {FpPoly(p), a};
    std::vector<std::uint32_t> r = a.coeffs();
    const int db = b.degree();
    std::vector<std::uint32_t> q(static_cast<std::size_t>(a.degree() - db) + 1);
    const std::uint32_t inv = fp_inv(b.leading(), p);
    for (int i = a.degree(); i >= db; --i) {
        std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(r[static_cast<std::size_t>(i)]) * inv % p);
        q[static_cast<std::size_t>(i - db)] = c;
        if (c) kernels::axpy_mod(r.data() + (i - db), b.coeffs().data(), p - c, b.coeffs().size(), p);
    }
    r.resize(static_cast<std::size_t>(db));
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
    FpPoly r = divmod(FpPoly::constant(base.prime(), 1), m).second;
    FpPoly b = divmod(base, m).second;
    while (e) {
        if (e & 1U) r = divmod(r * b, m).second;
        e >>= 1U;
        if (e) b = divmod(b * b, m).second;
    }
    return r;
}

FpRatFn::FpRatFn(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("F_p rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num_.prime(), 1);
        return;
    }
    if (den_.degree() > 0) {
        FpPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    std::uint32_t inv = fp_inv(den_.leading(), den_.prime());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

FpRatFn operator+(const FpRatFn& a, const FpRatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return FpRatFn(a.num_ + b.num_, a.den_);
    FpPoly g = gcd(a.den_, b.den_);
    FpPoly ad = divmod(a.den_, g).first, bd = divmod(b.den_, g).first;
    return FpRatFn(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

FpRatFn operator-(const FpRatFn& a, const FpRatFn& b) {
    FpRatFn nb = b;
    nb.num_ = -nb.num_;
    return a + nb;
}

FpRatFn operator*(const FpRatFn& a, const FpRatFn& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return FpRatFn(a.num_ * b.num_, a.den_ * b.den_);
}

FpRatFn operator/(const FpRatFn& a, const FpRatFn& b) {
    if (b.is_zero()) throw std::domain_error("F_p rational function division by zero");
    return FpRatFn(a.num_ * b.den_, a.den_ * b.num_);
}

FpRatFn FpRatFn::derivative() const {
    if (den_.degree() == 0) return FpRatFn(num_.derivative(), den_);
    return FpRatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string FpRatFn::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace gop
