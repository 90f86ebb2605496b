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

// Dense complex matrices over tensor products of small Hilbert spaces.
//
// Tensor factors are addressed by *system label*: a FactoredOperator with
// dims {d_N, ..., d_2, d_1} lives on H_N (x) ... (x) H_1, so the leftmost
// slot is system N and the rightmost slot is system 1. Basis indices inside
// a factor are 0-based.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace liftlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

/// Relative tolerance for Hermiticity and positivity, scaled by the
/// operator's spectral norm.
inline constexpr double kPsdTol = 1e-9;

/// Absolute tolerance on Tr(rho) = 1 for density operators.
inline constexpr double kTraceTol = 1e-9;

class FactoredOperator {
 public:
  /// Throws kDimensionMismatch unless the matrix is square with side equal
  /// to the product of dims, kNonFinite on NaN/Inf entries.
  FactoredOperator(ComplexMatrix matrix, Dims dims);

  /// A single-factor operator.
  explicit FactoredOperator(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t parties() const noexcept { return dims_.size(); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

  /// Slot position (0 = leftmost) of a system label in 1..parties().
  std::size_t slot_of(std::size_t system) const;

 private:
  ComplexMatrix matrix_;
  Dims dims_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
FactoredOperator kron(const FactoredOperator& a, const FactoredOperator& b);

/// Matrix unit e_ij = |i><j| in dimension d.
ComplexMatrix unit_matrix(std::size_t d, std::size_t i, std::size_t j);

/// P+_d = (1/d) sum_ij e_ij (x) e_ij.
ComplexMatrix max_entangled(std::size_t d);

/// Swap operator on C^a (x) C^b, mapping e_i (x) f_j to f_j (x) e_i.
ComplexMatrix swap_operator(std::size_t a, std::size_t b);

/// Reduces onto the systems in `keep` (labels 1..N), tracing out the rest.
/// The kept factors retain their relative order.
FactoredOperator partial_trace(const FactoredOperator& op,
                               const std::vector<std::size_t>& keep);

/// Traces out the listed systems (labels 1..N).
FactoredOperator trace_out(const FactoredOperator& op,
                           const std::vector<std::size_t>& systems);

/// Transposes the given system's factor in the product basis.
FactoredOperator partial_transpose(const FactoredOperator& op,
                                   std::size_t system);

/// ||m - m^dagger||_F.
double hermiticity_defect(const ComplexMatrix& m);

/// Spectrum of a Hermitian matrix in ascending order with orthonormal
/// eigenvectors as columns. Throws kNotHermitian if the defect exceeds
/// tol * max(1, ||m||_F).
struct HermitianEigen {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};
HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol = kPsdTol);

struct PsdReport {
  bool psd;
  double min_eigenvalue;
};

/// PSD iff the smallest eigenvalue is >= -tol * max|eigenvalue|.
PsdReport is_psd(const ComplexMatrix& m, double tol = kPsdTol);

/// Principal square root of a PSD matrix. Eigenvalues that are negative
/// within tolerance are clipped to zero; larger violations throw kNotPsd.
ComplexMatrix herm_sqrt(const ComplexMatrix& m, double tol = kPsdTol);

/// Largest absolute entry of a - b; the shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// A positive semidefinite, unit-trace FactoredOperator.
class DensityOperator {
 public:
  /// Throws kNotHermitian, kNotPsd, or kNotAState (trace != 1).
  explicit DensityOperator(FactoredOperator op);
  explicit DensityOperator(ComplexMatrix matrix);

  const FactoredOperator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  const Dims& dims() const noexcept { return op_.dims(); }
  std::size_t dim() const noexcept { return op_.dim(); }

 private:
  FactoredOperator op_;
};

/// Reduced state on the kept systems.
DensityOperator reduce(const DensityOperator& state,
                       const std::vector<std::size_t>& keep);

}  // namespace liftlab
