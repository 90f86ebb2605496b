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

// Circulant states on C^d (x) C^d. A pair (i, k) is basis index i * d + k;
// all index arithmetic is mod d. The partial transpose acts on the second
// (rightmost) factor.

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "liftlab/classical.hpp"
#include "liftlab/matcore.hpp"

namespace liftlab {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Sigma_alpha = span{e_i (x) e_{i+alpha}} for alpha = 0..d-1.
std::vector<std::vector<IndexPair>> circulant_subspaces(std::size_t d);

/// The decomposition used by the partial transpose, span{e_i (x)
/// e_{pi(i)+alpha}} with pi(i) = -i mod d.
std::vector<std::vector<IndexPair>> permuted_circulant_subspaces(std::size_t d);

/// S e_k = e_{k+1}.
ComplexMatrix shift_operator(std::size_t d);

/// d blocks a^(alpha), each PSD, with total trace 1. Zero blocks are allowed.
class CirculantSpec {
 public:
  /// Throws kDimensionMismatch, kBlockNotPsd, or kTraceNotOne.
  explicit CirculantSpec(std::vector<ComplexMatrix> blocks);

  std::size_t d() const noexcept { return blocks_.size(); }
  const std::vector<ComplexMatrix>& blocks() const noexcept { return blocks_; }
  const ComplexMatrix& block(std::size_t alpha) const { return blocks_[alpha]; }

 private:
  std::vector<ComplexMatrix> blocks_;
};

/// rho = sum_alpha sum_ij a^(alpha)_ij e_ij (x) S^alpha e_ij S^alpha*.
DensityOperator build_circulant(const CirculantSpec& spec);

/// The blocks of rho^Gamma in the permuted decomposition, computed by the
/// Hadamard-product formula sum_beta a^(alpha+beta) o (Pi S^beta).
std::vector<ComplexMatrix> circulant_partial_transpose(const CirculantSpec& spec);

/// sum_alpha sum_ij b^(alpha)_ij e_ij (x) S^alpha e_{pi(i)pi(j)} S^alpha*.
FactoredOperator assemble_permuted_circulant(const std::vector<ComplexMatrix>& blocks);

struct PptReport {
  bool ppt;
  std::vector<double> block_min_eigenvalues;
};

/// PPT iff every block of circulant_partial_transpose is PSD. Negativity is
/// judged relative to the largest block eigenvalue magnitude.
PptReport is_ppt_circulant(const CirculantSpec& spec, double tol = kPsdTol);

/// Blocks a^(alpha) = rho_{alpha alpha} c^(alpha). Each c^(alpha) must be
/// PSD with unit trace (kBlockNotPsd, kTraceNotOne).
DensityOperator circulant_lift(const std::vector<ComplexMatrix>& cs,
                               const DensityOperator& rho);

/// V e_alpha = sum_j c^(alpha)_j e_j (x) e_{j+alpha}; throws kNotNormalized
/// unless every vector has unit norm.
ComplexMatrix lift_isometry(const std::vector<ComplexVector>& cvecs);

/// V D(rho) V^*.
DensityOperator circulant_lift_isometry(const std::vector<ComplexVector>& cvecs,
                                        const DensityOperator& rho);

/// U_mn e_k = lambda^{mk} e_{k+n}, lambda = exp(2 pi i / d).
ComplexMatrix bell_unitary(std::size_t m, std::size_t n, std::size_t d);

/// P_mn = (I (x) U_mn) P+_d (I (x) U_mn^dagger).
DensityOperator bell_state(std::size_t m, std::size_t n, std::size_t d);

/// Weights p_mn, indexed (m, n); nonnegative with unit sum.
class BellSpectrum {
 public:
  /// Throws kDimensionMismatch, kNegativeEntry, or kNotAState.
  explicit BellSpectrum(Eigen::MatrixXd weights);

  std::size_t d() const noexcept { return static_cast<std::size_t>(weights_.rows()); }
  const Eigen::MatrixXd& weights() const noexcept { return weights_; }

 private:
  Eigen::MatrixXd weights_;
};

/// sum_mn p_mn P_mn.
DensityOperator bell_diagonal_state(const BellSpectrum& spectrum);

/// Tr(P_mn X) for every (m, n).
Eigen::MatrixXd bell_projections(const ComplexMatrix& x, std::size_t d);

/// c_kl = (1/d) sum_m p_m lambda^{m(k-l)}.
ComplexMatrix bell_circulant_matrix(const ProbabilityVector& p);

struct BellLift {
  DensityOperator state;
  BellSpectrum spectrum;  // projections of state onto the Bell basis
};

/// circulant_lift with every c^(alpha) equal to bell_circulant_matrix(p).
BellLift bell_diagonal_lift(const ProbabilityVector& p, const DensityOperator& rho);

}  // namespace liftlab
