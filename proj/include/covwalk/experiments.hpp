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
#include <cstdint>
#include <string>
#include <vector>

#include "covwalk/covering.hpp"
#include "covwalk/io.hpp"

namespace covwalk {

/// Outcome of one reproducible experiment. `data` holds only values that
/// are deterministic for a given seed (no timings).
struct ExperimentResult {
  bool pass = false;
  Json data;
};

struct CoverCase {
  std::string name;
  CoveringMap cover;
};

/// Q_n over the weighted path for n = 2..10 and C_n over C_p for
/// (n, p) in {(6,3), (15,3), (15,5), (35,7)}; with `dihedral`, also
/// X(D_n, {s, s^-1, t}) over its Schreier graph for <t>, n = 3..9.
std::vector<CoverCase> cover_corpus(bool dihedral);

/// Y with the weight of its first edge changed, so the triple is no longer
/// a cover.
WeightedGraph corrupt_first_edge(const WeightedGraph& y);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Random unit vector with independent normal real and imaginary parts.
QuantumState random_state(std::size_t dim, std::uint64_t seed, std::uint64_t stream);

ExperimentResult cover_verification_experiment();
ExperimentResult quotient_walk_experiment(std::uint64_t seed, std::size_t states = 20);
ExperimentResult spectrum_containment_experiment();
ExperimentResult circulant_experiment();
ExperimentResult gate_compiler_experiment();
ExperimentResult trotter_experiment();
ExperimentResult hidden_cover_experiment(std::uint64_t seed, std::size_t trials = 200);
ExperimentResult confinement_experiment(std::uint64_t seed, std::size_t samples = 10000);
ExperimentResult dihedral_experiment();

/// Quotient-walk residuals of Q_n over the weighted path for basis and
/// random initial states.
ExperimentResult hypercube_experiment(std::size_t n, std::uint64_t seed);

}  // namespace covwalk
