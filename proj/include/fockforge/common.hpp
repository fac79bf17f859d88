// Copyright 2026 The fockforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fockforge {

using Complex = std::complex<double>;

// Absolute tolerance used for unitarity checks, normalization thresholds and
// near-zero tests. Overridable per call; the CLI exposes it as --tol and the
// FOCKFORGE_TOL environment variable.
struct ComplexTolerance {
    double eps = 1e-10;
};

// Precondition violations and ill-posed requests (mismatched dimensions,
// invalid mode indices, states outside a required subspace, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// normalize() on a state whose squared norm is at or below eps^2.
struct NotNormalizable : DomainError {
    using DomainError::DomainError;
};

// Post-selection (or a detector projection) left no probability mass.
struct PostSelectionEmpty : DomainError {
    using DomainError::DomainError;
};

}  // namespace fockforge
