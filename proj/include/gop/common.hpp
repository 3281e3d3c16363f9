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

#ifndef GOP_COMMON_HPP
#define GOP_COMMON_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gop {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Base of every domain error the library raises. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient has negative Gauss valuation at the prime, so no reduction mod p exists.
class BadPrime : public DomainError {
public:
    explicit BadPrime(std::uint32_t p, const std::string& what = "")
        : DomainError("bad prime " + std::to_string(p) + (what.empty() ? "" : ": " + what)), prime_(p) {}
    std::uint32_t prime() const noexcept { return prime_; }

private:
    std::uint32_t prime_;
};

class IrregularPoint : public DomainError {
public:
    using DomainError::DomainError;
};

class NotOrdinaryPoint : public DomainError {
public:
    using DomainError::DomainError;
};

class PoleAtOrigin : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisionByZeroOperator : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidParameters : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedParameters : public DomainError {
public:
    using DomainError::DomainError;
};

class NoSolution : public DomainError {
public:
    using DomainError::DomainError;
};

class InsufficientTruncation : public DomainError {
public:
    using DomainError::DomainError;
};

/// Exact string form of a rational, "-3/2" or "7".
inline std::string to_string(const BigRat& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

BigRat parse_rational(const std::string& text);

}  // namespace gop

#endif  // GOP_COMMON_HPP
