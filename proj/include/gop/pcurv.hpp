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

#ifndef GOP_PCURV_HPP
#define GOP_PCURV_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gop/diffop.hpp"
#include "gop/fp.hpp"

namespace gop {

/// Square matrix over F_p(z).
class FpMat {
public:
    FpMat(std::uint32_t p, std::size_t n);
    static FpMat identity(std::uint32_t p, std::size_t n);

    std::uint32_t prime() const noexcept { return p_; }
    std::size_t dim() const noexcept { return n_; }
    const FpRatFn& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    FpRatFn& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    friend FpMat operator+(const FpMat& a, const FpMat& b);
    friend FpMat operator*(const FpMat& a, const FpMat& b);
    friend bool operator==(const FpMat& a, const FpMat& b) { return a.p_ == b.p_ && a.e_ == b.e_; }
    FpMat derivative() const;
    FpMat pow(unsigned k) const;
    bool is_zero() const;
    std::string to_string() const;

private:
    std::uint32_t p_;
    std::size_t n_;
    std::vector<FpRatFn> e_;
};

FpMat reduce_system(const RatMat& G, std::uint32_t p);
/// [G_1, ..., G_smax] computed entirely over F_p(z).
std::vector<FpMat> fp_gs_sequence(const FpMat& G, int s_max);
/// G_p of the reduced system.
FpMat p_curvature(const RatMat& G, std::uint32_t p);

struct NilpotenceResult {
    bool nilpotent = false;
    std::optional<int> index;
};
NilpotenceResult is_nilpotent(const FpMat& M);

/// Right remainder of D^(p*n) by L in F_p(z)[D] is zero.
bool operator_nilpotence_by_division(const DiffOp& L, std::uint32_t p);
/// The mod-p indicial polynomial at 0 splits over F_p.
bool katz_honda_check(const DiffOp& L, std::uint32_t p);

enum class PStatus { Nilpotent, NonNilpotent, BadPrime };
std::string to_string(PStatus s);

struct PCurvatureReport {
    std::uint32_t prime = 0;
    PStatus status = PStatus::BadPrime;
    std::optional<int> nilpotence_index;
    bool division_checked = false;
    bool method_agreement = true;
    std::string note;
};

/// Matrix test on G, plus the division test when an operator is supplied.
PCurvatureReport pcurvature_report(const RatMat& G, const DiffOp* L, std::uint32_t p);

enum class ScanVerdict { AllGoodNilpotent, FoundNonNilpotent, Mixed };
std::string to_string(ScanVerdict v);

struct GlobalScan {
    std::string id;
    std::uint32_t lo = 2, hi = 50;
    std::vector<PCurvatureReport> reports;
    ScanVerdict verdict = ScanVerdict::AllGoodNilpotent;
};

/// Per-prime reports over the primes in [lo, hi]; bad primes are recorded but do not vote.
GlobalScan global_scan(const std::string& id, const RatMat& G, const DiffOp* L, std::uint32_t lo, std::uint32_t hi);

/// Worker count from GOP_THREADS, defaulting to the hardware concurrency.
unsigned worker_count();

}  // namespace gop

#endif  // GOP_PCURV_HPP
