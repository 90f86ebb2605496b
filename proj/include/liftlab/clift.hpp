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

// Classical liftings: states on Omega_1 mapped to diagonal states on
// Omega_2 x Omega_1 (or Omega_N x ... x Omega_1), plus Markov chains.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "liftlab/classical.hpp"
#include "liftlab/matcore.hpp"

namespace liftlab {

/// Linear classical lifting E(i, j, k): probability that input letter i in
/// Omega_1 is lifted to the pair (j, k) with j in Omega_2 the new factor and
/// k in Omega_1 the retained factor. Stored flat in (i, j, k) lexicographic
/// order.
class LiftingTensor {
 public:
  /// Throws kSizeMismatch on a wrong data length, kNegativeEntry, or
  /// kNotAState when some input letter is not mapped to a distribution.
  LiftingTensor(std::size_t n1, std::size_t n2, std::vector<double> data);

  /// E(i, j, k) = delta_ik q_j.
  static LiftingTensor product(const ProbabilityVector& q, std::size_t n1);
  /// E(i, j, k) = delta_ik delta_jk.
  static LiftingTensor ohya(std::size_t n);
  /// E(i, j, k) = delta_ik delta_{j, s(i)}, with s(i) < n2.
  static LiftingTensor pure(const std::vector<std::size_t>& s, std::size_t n2);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n2_ + j) * n1_ + k];
  }
  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t n1_;
  std::size_t n2_;
  std::vector<double> data_;
};

/// p_jk = sum_i E(i, j, k) p_i as a diagonal state with dims {n2, n1}.
DensityOperator lift(const LiftingTensor& tensor, const ProbabilityVector& p);

/// sum_j E(i, j, k) = delta_ik, i.e. tracing out the new factor returns the
/// input for every state.
bool is_nondemolition(const LiftingTensor& tensor, double tol = kProbabilityTol);

struct MarkovianLifting {
  bool markovian;
  /// conditional(j, i) = p_{j|i}; columns sum to one. Empty when not
  /// markovian.
  Eigen::MatrixXd conditional;
};

/// True iff E(i, j, k) = p_{j|i} delta_ik.
MarkovianLifting is_markovian_lifting(const LiftingTensor& tensor,
                                      double tol = kProbabilityTol);

/// Gamma applied (Schroedinger picture) to sigma (x) p. Gamma acts on the
/// joint label j * n1 + k of Omega_2 x Omega_1.
DensityOperator gamma_lifting(const StochasticChannel& gamma,
                              const ProbabilityVector& sigma,
                              const ProbabilityVector& p);

/// N-party lifting from a square tensor by the recurrence
/// E_N = (id_{N-1} (x) ... (x) id_2 (x) E) o E_{N-1}: each step lifts the
/// rightmost factor (system 1) and inserts the new factor just left of it.
DensityOperator n_lift(const LiftingTensor& tensor, const ProbabilityVector& p,
                       std::size_t parties);

/// Pure N-lifting e_ii -> e_{s_N(i)} (x) ... (x) e_{s_2(i)} (x) e_ii.
/// `maps` and `sizes` are given in slot order (s_N first); maps[m][i] must be
/// below sizes[m].
DensityOperator pure_n_lift(const std::vector<std::vector<std::size_t>>& maps,
                            const std::vector<std::size_t>& sizes,
                            const ProbabilityVector& p);

class MarkovSpec {
 public:
  /// conditional(j, i) = p_{j|i}. Throws kDimensionMismatch, kNegativeEntry,
  /// or kNotAState when a column does not sum to one.
  MarkovSpec(Eigen::MatrixXd conditional, ProbabilityVector initial);

  std::size_t n() const noexcept { return initial_.size(); }
  const Eigen::MatrixXd& conditional() const noexcept { return conditional_; }
  const ProbabilityVector& initial() const noexcept { return initial_; }

 private:
  Eigen::MatrixXd conditional_;
  ProbabilityVector initial_;
};

/// Weights p_{i_N|i_{N-1}} ... p_{i_2|i_1} p_{i_1} on N diagonal factors.
DensityOperator markov_state(const MarkovSpec& spec, std::size_t parties);

/// Markov operator P(b)_j = sum_i p_{i|j} b_i.
std::vector<double> markov_operator(const MarkovSpec& spec,
                                    std::span<const double> b);

/// Transition expectation E(b (x) a) = P(b) a on diagonal observables, b on
/// the new factor and a on the retained one.
std::vector<double> transition_expectation(const MarkovSpec& spec,
                                           std::span<const double> b,
                                           std::span<const double> a);

/// Tr(rho_1 E(E(... E(a_N (x) a_{N-1}) ...) (x) a_1)) with rho_1 the initial
/// distribution. Observables are listed in slot order, a_N first.
double nested_expectation(const MarkovSpec& spec,
                          const std::vector<std::vector<double>>& observables);

/// Tr(rho (a_N (x) ... (x) a_1)) for a diagonal N-party state, observables
/// in slot order.
double product_expectation(const DensityOperator& state,
                           const std::vector<std::vector<double>>& observables);

/// Compares product_expectation(markov_state(spec, N)) with
/// nested_expectation(spec) within an absolute tolerance.
bool verify_transition_expectation(
    const MarkovSpec& spec, std::size_t parties,
    const std::vector<std::vector<double>>& observables, double tol = 1e-12);

/// A positive map given by the images phi(e_ii) of the diagonal units.
struct DiagonalUnitMap {
  std::vector<ComplexMatrix> images;

  static DiagonalUnitMap identity(std::size_t n);
  /// e_ii -> e_pi(i)pi(i).
  static DiagonalUnitMap permutation(const Permutation& perm);
  /// e_ii -> I / n.
  static DiagonalUnitMap depolarizing(std::size_t n);
};

/// sum_i p_i phi_first(e_ii) (x) ... (x) phi_last(e_ii), maps in slot order.
/// Throws kMapNotPositive if an image is not PSD, kDimensionMismatch on
/// size disagreement.
DensityOperator separable_n_state(const ProbabilityVector& p,
                                  const std::vector<DiagonalUnitMap>& maps);

}  // namespace liftlab
