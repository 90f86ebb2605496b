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

#include "liftlab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "liftlab/error.hpp"

namespace liftlab {
namespace {

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

// Row-major strides: stride[s] = product of dims to the right of slot s.
std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t s = dims.size(); s-- > 1;) {
    strides[s - 1] = strides[s] * dims[s];
  }
  return strides;
}

}  // namespace

FactoredOperator::FactoredOperator(ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw Error(Errc::kDimensionMismatch, "factor list is empty");
  }
  for (std::size_t d : dims_) {
    if (d == 0) throw Error(Errc::kDimensionMismatch, "zero factor dimension");
  }
  const auto total = static_cast<Eigen::Index>(product(dims_));
  if (matrix_.rows() != total || matrix_.cols() != total) {
    throw Error(Errc::kDimensionMismatch,
                "matrix is " + std::to_string(matrix_.rows()) + "x" +
                    std::to_string(matrix_.cols()) +
                    " but factor dims multiply to " + std::to_string(total));
  }
  if (!matrix_.allFinite()) {
    throw Error(Errc::kNonFinite, "operator has NaN or Inf entries");
  }
}

FactoredOperator::FactoredOperator(ComplexMatrix matrix)
    : FactoredOperator(matrix, Dims{static_cast<std::size_t>(matrix.rows())}) {}

std::size_t FactoredOperator::slot_of(std::size_t system) const {
  if (system < 1 || system > dims_.size()) {
    throw Error(Errc::kInvalidFactor,
                "system " + std::to_string(system) + " not in 1.." +
                    std::to_string(dims_.size()));
  }
  return dims_.size() - system;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

FactoredOperator kron(const FactoredOperator& a, const FactoredOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return FactoredOperator(kron(a.matrix(), b.matrix()), std::move(dims));
}

ComplexMatrix unit_matrix(std::size_t d, std::size_t i, std::size_t j) {
  if (i >= d || j >= d) {
    throw Error(Errc::kIndexOutOfRange, "matrix unit index outside dimension");
  }
  ComplexMatrix e = ComplexMatrix::Zero(static_cast<Eigen::Index>(d),
                                        static_cast<Eigen::Index>(d));
  e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return e;
}

ComplexMatrix max_entangled(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix p = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      p(i * n + i, j * n + j) = 1.0 / static_cast<double>(d);
    }
  }
  return p;
}

ComplexMatrix swap_operator(std::size_t a, std::size_t b) {
  const auto na = static_cast<Eigen::Index>(a);
  const auto nb = static_cast<Eigen::Index>(b);
  ComplexMatrix s = ComplexMatrix::Zero(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) {
      s(j * na + i, i * nb + j) = 1.0;
    }
  }
  return s;
}

FactoredOperator partial_trace(const FactoredOperator& op,
                               const std::vector<std::size_t>& keep) {
  if (keep.empty()) {
    throw Error(Errc::kInvalidFactor, "at least one system must be kept");
  }
  const Dims& dims = op.dims();
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t system : keep) {
    const std::size_t slot = op.slot_of(system);
    if (kept[slot]) {
      throw Error(Errc::kInvalidFactor,
                  "system " + std::to_string(system) + " listed twice");
    }
    kept[slot] = true;
  }

  Dims kept_dims;
  Dims traced_dims;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    (kept[s] ? kept_dims : traced_dims).push_back(dims[s]);
  }
  const std::size_t dk = product(kept_dims);
  const std::size_t dt = product(traced_dims);
  const std::size_t total = op.dim();

  // Split every full index into its (kept, traced) coordinates.
  std::vector<std::size_t> kept_of(total);
  std::vector<std::size_t> traced_of(total);
  std::vector<std::size_t> full_of(total);
  const auto strides = strides_of(dims);
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t k = 0;
    std::size_t t = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      const std::size_t digit = (x / strides[s]) % dims[s];
      if (kept[s]) {
        k = k * dims[s] + digit;
      } else {
        t = t * dims[s] + digit;
      }
    }
    kept_of[x] = k;
    traced_of[x] = t;
    full_of[k * dt + t] = x;
  }

  const ComplexMatrix& m = op.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dk),
                                          static_cast<Eigen::Index>(dk));
  for (std::size_t r = 0; r < total; ++r) {
    const std::size_t kr = kept_of[r];
    const std::size_t t = traced_of[r];
    for (std::size_t kc = 0; kc < dk; ++kc) {
      const std::size_t c = full_of[kc * dt + t];
      out(static_cast<Eigen::Index>(kr), static_cast<Eigen::Index>(kc)) +=
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return FactoredOperator(std::move(out), std::move(kept_dims));
}

FactoredOperator trace_out(const FactoredOperator& op,
                           const std::vector<std::size_t>& systems) {
  std::vector<bool> drop(op.parties() + 1, false);
  for (std::size_t system : systems) {
    op.slot_of(system);  // validates the label
    drop[system] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t system = op.parties(); system >= 1; --system) {
    if (!drop[system]) keep.push_back(system);
  }
  return partial_trace(op, keep);
}

FactoredOperator partial_transpose(const FactoredOperator& op,
                                   std::size_t system) {
  const std::size_t slot = op.slot_of(system);
  const auto d = static_cast<Eigen::Index>(op.dims()[slot]);
  const auto stride = static_cast<Eigen::Index>(strides_of(op.dims())[slot]);
  const ComplexMatrix& m = op.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const Eigen::Index dr = (r / stride) % d;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Eigen::Index dc = (c / stride) % d;
      out(r + (dc - dr) * stride, c + (dr - dc) * stride) = m(r, c);
    }
  }
  return FactoredOperator(std::move(out), op.dims());
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::kDimensionMismatch, "matrix is not square");
  }
  return (m - m.adjoint()).norm();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol) {
  const double defect = hermiticity_defect(m);
  if (defect > tol * m.norm()) {
    throw Error(Errc::kNotHermitian,
                "||m - m^dagger|| = " + std::to_string(defect));
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

double spectral_scale(const Eigen::VectorXd& values) {
  return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
}

}  // namespace

PsdReport is_psd(const ComplexMatrix& m, double tol) {
  const HermitianEigen eig = hermitian_eigen(m, tol);
  if (eig.values.size() == 0) return {true, 0.0};
  const double min_ev = eig.values.minCoeff();
  return {min_ev >= -tol * spectral_scale(eig.values), min_ev};
}

ComplexMatrix herm_sqrt(const ComplexMatrix& m, double tol) {
  HermitianEigen eig = hermitian_eigen(m, tol);
  const double floor = -tol * spectral_scale(eig.values);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    double& v = eig.values(k);
    if (v < floor) {
      throw Error(Errc::kNotPsd, "eigenvalue " + std::to_string(v));
    }
    v = std::sqrt(std::max(v, 0.0));
  }
  return eig.vectors * eig.values.cast<Complex>().asDiagonal() *
         eig.vectors.adjoint();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::kDimensionMismatch, "shapes differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

DensityOperator::DensityOperator(FactoredOperator op) : op_(std::move(op)) {
  const PsdReport report = is_psd(op_.matrix());
  if (!report.psd) {
    throw Error(Errc::kNotPsd,
                "min eigenvalue " + std::to_string(report.min_eigenvalue));
  }
  const Complex tr = op_.matrix().trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(Errc::kNotAState, "trace is " + std::to_string(tr.real()) +
                                      (tr.imag() != 0.0 ? " (complex)" : ""));
  }
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : DensityOperator(FactoredOperator(std::move(matrix))) {}

DensityOperator reduce(const DensityOperator& state,
                       const std::vector<std::size_t>& keep) {
  return DensityOperator(partial_trace(state.op(), keep));
}

}  // namespace liftlab
