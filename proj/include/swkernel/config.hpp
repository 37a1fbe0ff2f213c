// Copyright 2026 The swkernel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWKERNEL_CONFIG_HPP
#define SWKERNEL_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace swk {

/// Numerical thresholds shared by every module.
struct Tolerances {
    double algebraic = 1e-12;   // identities that hold up to round-off
    double spectral = 1e-10;    // eigenvalue/trace level checks, unitarity
    double degeneracy = 1e-9;   // eigenvalue gap below which values are merged
    double positivity = 1e-10;  // allowed negative eigenvalue of a density matrix
    double generator = 1e-14;   // entrywise check on basis generators
};

inline constexpr Tolerances kTol{};

/// Argument outside the domain of an operation (n < 2, nu outside its interval, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input object fails a structural check (non-Hermitian, non-unitary, wrong size).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix is not a density matrix. Carries the offending eigenvalue.
class InvalidStateError : public std::invalid_argument {
public:
    InvalidStateError(const std::string& what, double min_eigenvalue)
        : std::invalid_argument(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

/// A quantity that must be real (or exact) came out with a residue above tolerance.
class NumericalIntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace swk

#endif  // SWKERNEL_CONFIG_HPP
