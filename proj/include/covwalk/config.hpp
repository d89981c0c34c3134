// Copyright 2026 The covwalk Authors
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

#include <cstddef>

namespace covwalk {

// Hard cap on dense problem sizes (vertices, group orders, matrix dimension).
inline constexpr std::size_t kDefaultMaxVertices = 4096;

// Centralized numerical tolerances.
namespace tol {

// Structural predicates: cover verification, regularity, eigenpair checks.
inline constexpr double kStructural = 1e-9;
// Pull-back isometry identities P P^T = I, (P^T P)^2 = P^T P.
inline constexpr double kIsometry = 1e-12;
// Quotient-walk and propagator residuals.
inline constexpr double kEvolution = 1e-9;
// Eigenvalues closer than this are treated as one eigenspace.
inline constexpr double kEigenGap = 1e-8;
// Unit-norm check on quantum states.
inline constexpr double kNorm = 1e-10;
// Membership in the image of P^T.
inline constexpr double kFibreConstant = 1e-10;
// is_regular: max_v |d_v - d_0|.
inline constexpr double kRegular = 1e-12;

}  // namespace tol
}  // namespace covwalk
