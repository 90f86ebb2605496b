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

// Classical probability on a finite sample space, embedded as diagonal
// operators in the quantum framework.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "liftlab/matcore.hpp"

namespace liftlab {

/// Tolerance on sum(p) = 1.
inline constexpr double kProbabilityTol = 1e-12;

class ProbabilityVector {
 public:
  /// Throws kNegativeEntry, kNonFinite, or kNotAState (sum != 1).
  explicit ProbabilityVector(std::vector<double> weights);

  static ProbabilityVector uniform(std::size_t n);
  /// The pure state e_i.
  static ProbabilityVector point(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

class Permutation {
 public:
  /// images[i] = pi(i). Throws kSchema unless a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// i -> i+1 mod n.
  static Permutation cycle(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  Permutation inverse() const;

 private:
  std::vector<std::size_t> images_;
};

/// Transition weights Lambda(i, j) >= 0 from input letter i in Omega_1
/// (n1 rows) to output letter j in Omega_2 (n2 columns).
///
/// The weights act on diagonal vectors as b_j = sum_i a_i Lambda(i, j).
/// Neither column nor row normalization is required at construction; the
/// predicates below report which one holds.
class StochasticChannel {
 public:
  /// Throws kNegativeEntry or kNonFinite.
  explicit StochasticChannel(Eigen::MatrixXd weights);

  static StochasticChannel identity(std::size_t n);
  /// Lambda(i, j) = 1 / n1.
  static StochasticChannel depolarizing(std::size_t n1, std::size_t n2);

  std::size_t inputs() const noexcept { return static_cast<std::size_t>(weights_.rows()); }
  std::size_t outputs() const noexcept { return static_cast<std::size_t>(weights_.cols()); }
  const Eigen::MatrixXd& weights() const noexcept { return weights_; }
  double operator()(std::size_t i, std::size_t j) const {
    return weights_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Every column sums to one: the channel maps the unit to the unit.
  bool is_unital(double tol = kProbabilityTol) const;
  /// Every row sums to one: the state action keeps total probability.
  bool preserves_normalization(double tol = kProbabilityTol) const;
  bool is_doubly_stochastic(double tol = kProbabilityTol) const;

  /// b_j = sum_i a_i Lambda(i, j), no normalization assumed.
  std::vector<double> act(std::span<const double> a) const;

 private:
  Eigen::MatrixXd weights_;
};

/// diag(p) as a single-factor density operator.
DensityOperator embed_diagonal(const ProbabilityVector& p);

/// diag(a) for a real random variable a.
ComplexMatrix diagonal_operator(std::span<const double> a);

/// <a, p> = sum_i a_i p_i.
double expectation(std::span<const double> a, const ProbabilityVector& p);

/// Schroedinger picture: b_j = sum_i Lambda(i, j) p_i. Throws
/// kDimensionMismatch, or kNotAState when the rows of the channel are not
/// normalized and the output leaves the simplex.
ProbabilityVector apply_to_state(const StochasticChannel& channel,
                                 const ProbabilityVector& p);

/// Heisenberg picture, dual to apply_to_state under <a, p>:
/// (Lambda a)_i = sum_j Lambda(i, j) a_j.
std::vector<double> apply_to_observable(const StochasticChannel& channel,
                                        std::span<const double> a);

struct KrausOperator {
  std::size_t input;   // i
  std::size_t output;  // j
  ComplexMatrix op;    // sqrt(Lambda_ij) |f_j><e_i|, n2 x n1
};

/// One operator per nonzero weight, using the nonnegative real root.
std::vector<KrausOperator> kraus_from_channel(const StochasticChannel& channel);

/// sum_k K_k a K_k^dagger.
ComplexMatrix apply_kraus(std::span<const KrausOperator> kraus,
                          const ComplexMatrix& a);

/// Lambda(i, j) = delta_{j, pi(i)}.
StochasticChannel permutation_channel(const Permutation& perm);

/// U(i, j) = delta_{i, pi(j)}, i.e. U e_j = e_{pi(j)}.
ComplexMatrix permutation_unitary(const Permutation& perm);

/// The channel rho -> Tr_ancilla(U (rho (x) sigma) U^*) on diagonal states,
/// where U permutes the n^2 product labels. Label (i, k) is encoded as
/// i * n + k with i the system letter and k the ancilla letter. The result
/// is in the StochasticChannel convention (input row, output column).
/// Throws kSizeMismatch unless perm.size() == sigma.size()^2.
StochasticChannel channel_from_dilation(const Permutation& perm,
                                        const ProbabilityVector& sigma);

/// P_pi = (1/n) sum_i e_ii (x) e_pi(i)pi(i), dims {n, n}.
DensityOperator max_correlated_state(const Permutation& perm);

/// sum_ij (Lambda_ij / n) e_ii (x) e_jj for a square unital channel.
/// Throws kNotUnital or kDimensionMismatch.
DensityOperator classical_choi(const StochasticChannel& channel);

struct TeleportResult {
  ProbabilityVector bob_state;  // p_{pi^-1(i)}
  ProbabilityVector corrected;  // bob_state relabelled by pi, equals p
};

TeleportResult classical_teleport(const ProbabilityVector& p,
                                  const Permutation& perm);

/// Bob's operator n^2 Tr_{12}((P_0 (x) I_B)(rho_A (x) P_pi)) evaluated on
/// the full three-party space H_A (x) H (x) H_B.
FactoredOperator teleport_bob_operator(const ProbabilityVector& p,
                                       const Permutation& perm);

}  // namespace liftlab
