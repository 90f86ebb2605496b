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

// Quantum liftings on H_2 (x) H_1 with H_2 the first (leftmost) slot.
// "Tracing system 2" therefore removes the first slot, which is how the
// marginal identities Tr_2 E(rho) = rho are checked.

#include <cstddef>
#include <functional>
#include <vector>

#include "liftlab/matcore.hpp"

namespace liftlab {

using MatrixFunction = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// A linear map M_{d_in} -> M_{d_out} stored by its images of the matrix
/// units, units[i * d_in + j] = L(e_ij). Complete positivity and unitality
/// are properties to test, not construction invariants.
class LinearMap {
 public:
  /// Throws kSizeMismatch or kDimensionMismatch on malformed units.
  LinearMap(std::size_t d_in, std::size_t d_out, std::vector<ComplexMatrix> units);

  static LinearMap from_function(std::size_t d_in, std::size_t d_out,
                                 const MatrixFunction& f);
  static LinearMap identity(std::size_t d);
  /// a -> U a U^dagger.
  static LinearMap unitary_conjugation(const ComplexMatrix& u);
  /// a -> sum_k K_k a K_k^dagger.
  static LinearMap from_kraus(const std::vector<ComplexMatrix>& kraus);
  /// a -> sum_i Tr(a e_ii) e_ii.
  static LinearMap diagonal_projection(std::size_t d);
  /// e_aa -> sum_b p_{a|b} e_bb and e_ab -> 0 for a != b, with
  /// conditional(a, b) = p_{a|b}.
  static LinearMap classical(const Eigen::MatrixXd& conditional);
  /// x -> I Tr(omega^T x).
  static LinearMap trace_replacement(const ComplexMatrix& omega);

  std::size_t d_in() const noexcept { return d_in_; }
  std::size_t d_out() const noexcept { return d_out_; }
  const ComplexMatrix& unit(std::size_t i, std::size_t j) const {
    return units_[i * d_in_ + j];
  }
  const std::vector<ComplexMatrix>& units() const noexcept { return units_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;

  /// The dual on states, fixed by Tr(L(a) rho) = Tr(a L^#(rho)).
  ComplexMatrix apply_dual(const ComplexMatrix& rho) const;

  /// sum_ij e_ij (x) L(e_ij), dims {d_in, d_out}.
  FactoredOperator unnormalized_choi() const;

  bool is_unital(double tol = 1e-10) const;
  bool is_hermiticity_preserving(double tol = 1e-10) const;
  bool is_cp(double tol = kPsdTol) const;

 private:
  std::size_t d_in_;
  std::size_t d_out_;
  std::vector<ComplexMatrix> units_;
};

/// Quantum conditional probability operator pi = sum_ij e_ij (x) L(e_ij)
/// on H_2 (x) H_1 for a unital CP map L. PSD with Tr_2 pi = I.
class QcpOperator {
 public:
  const FactoredOperator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  /// pi^{1/2}.
  const ComplexMatrix& root() const noexcept { return root_; }
  const LinearMap& source() const noexcept { return source_; }
  std::size_t d() const noexcept { return source_.d_in(); }

 private:
  friend QcpOperator qcp_from_channel(const LinearMap& channel);
  QcpOperator(FactoredOperator op, ComplexMatrix root, LinearMap source);

  FactoredOperator op_;
  ComplexMatrix root_;
  LinearMap source_;
};

/// Throws kDimensionMismatch (d_in != d_out), kNotCp, or kNotUnital.
QcpOperator qcp_from_channel(const LinearMap& channel);

/// omega (x) rho, dims {d_omega, d_rho}.
DensityOperator product_lifting(const DensityOperator& omega,
                                const DensityOperator& rho);

/// Tr_2[U (omega (x) rho) U^*], the reduced dynamics of a product lifting.
DensityOperator reduced_dynamics(const DensityOperator& omega,
                                 const DensityOperator& rho,
                                 const ComplexMatrix& unitary);

/// (I (x) rho^{1/2}) pi (I (x) rho^{1/2}).
DensityOperator nonlinear_lift(const QcpOperator& pi, const DensityOperator& rho);

/// sum_k p_k E_k^{(x) parties} from the spectral decomposition of rho. Within
/// a degenerate eigenspace the eigensolver's basis is used as returned.
DensityOperator ohya_lift(const DensityOperator& rho, std::size_t parties = 2);

/// (I (x) pi1^{1/2}) (pi2 (x) I) (I (x) pi1^{1/2}) on H_3 (x) H_2 (x) H_1.
FactoredOperator compose_qcp(const QcpOperator& pi1, const QcpOperator& pi2);

/// pi_1 o ... o pi_{N-1} by the right-nested recurrence. A single operator
/// is returned as is.
FactoredOperator n_compose_qcp(const std::vector<QcpOperator>& pis);

/// (I (x) ... (x) I (x) rho^{1/2}) (pi o ... o pi) (... (x) rho^{1/2}) with
/// N-1 copies of pi.
DensityOperator n_nonlinear_lift(const QcpOperator& pi, const DensityOperator& rho,
                                 std::size_t parties);

/// Recovers the unital CP map L with nonlinear_lift(qcp(L), rho) = theta,
/// L(a) = rho^{-1/2} phi(a) rho^{-1/2} where phi(e_ij) is the (i, j) block of
/// theta. Throws kNotFaithful if rho is singular, kNotCompatible if rho is
/// not the system-1 marginal of theta.
LinearMap channel_from_compound(const DensityOperator& theta,
                                const DensityOperator& rho);

/// R(X) = I Tr X - X.
ComplexMatrix reduction_map(const ComplexMatrix& x);

/// The positive, non-CP map on M_4 = M_2 (x) M_2 acting on the 2x2 block
/// decomposition X = sum_ij e_ij (x) X_ij. Throws kDimensionMismatch unless
/// x is 4x4.
ComplexMatrix robertson_map(const ComplexMatrix& x);

/// phi(rho) = Tr_omega[psi(E(rho))] for the product lifting E(rho) =
/// omega (x) rho. psi is evaluated with its block index on the lifted
/// system, i.e. on the reordering rho (x) omega, and the omega factor is
/// traced out afterwards.
LinearMap lifting_assisted_map(const MatrixFunction& psi,
                               const DensityOperator& omega, std::size_t d);

/// (1/d) sum_ij e_ij (x) phi(e_ij), dims {d_in, d_out}.
FactoredOperator choi_matrix(const LinearMap& phi);

}  // namespace liftlab
