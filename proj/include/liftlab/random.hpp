// Copyright 2026 The liftlab Authors
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

// Seeded generators for verification trials. Draws are reproducible across
// platforms: only the raw mt19937_64 stream is used, never the library's
// distribution objects, whose output is implementation-defined.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "liftlab/circulant.hpp"
#include "liftlab/classical.hpp"
#include "liftlab/clift.hpp"
#include "liftlab/matcore.hpp"
#include "liftlab/qlift.hpp"

namespace liftlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  /// Uniform on {0, ..., n-1}; n must be positive.
  std::size_t below(std::size_t n);
  /// Real and imaginary parts independent N(0, 1/2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
};

ProbabilityVector random_probability(Rng& rng, std::size_t n);
Permutation random_permutation(Rng& rng, std::size_t n);
/// Haar-distributed unitary from the QR factorization of a Ginibre matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t d);
/// Full-rank with probability one.
DensityOperator random_density(Rng& rng, std::size_t d);
/// Rows sum to one.
StochasticChannel random_stochastic(Rng& rng, std::size_t n1, std::size_t n2);
/// Columns sum to one: conditional(a, b) = p_{a|b}.
Eigen::MatrixXd random_conditional(Rng& rng, std::size_t n);
/// x -> sum_k K_k^dagger x K_k from a random isometry, so unital and CP.
LinearMap random_unital_cp(Rng& rng, std::size_t d, std::size_t kraus_rank);
/// G G^dagger for a d x rank Ginibre G, scaled to unit trace.
ComplexMatrix random_psd(Rng& rng, std::size_t d, std::size_t rank);
/// Block ranks vary so both PPT and NPT states occur.
CirculantSpec random_circulant_spec(Rng& rng, std::size_t d);
/// Entries uniform on [-1, 1].
std::vector<double> random_observable(Rng& rng, std::size_t n);

}  // namespace liftlab
