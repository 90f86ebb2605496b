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

#include "liftlab/qlift.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "liftlab/error.hpp"

namespace liftlab {

namespace {

ComplexMatrix identity_matrix(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return ComplexMatrix::Identity(n, n);
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out *= base;
  return out;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::kDimensionMismatch, std::string(what) + " is not square");
  }
}

}  // namespace

LinearMap::LinearMap(std::size_t d_in, std::size_t d_out,
                     std::vector<ComplexMatrix> units)
    : d_in_(d_in), d_out_(d_out), units_(std::move(units)) {
  if (d_in_ == 0 || d_out_ == 0) {
    throw Error(Errc::kDimensionMismatch, "map dimensions must be positive");
  }
  if (units_.size() != d_in_ * d_in_) {
    throw Error(Errc::kSizeMismatch, "expected " + std::to_string(d_in_ * d_in_) +
                                         " unit images, got " +
                                         std::to_string(units_.size()));
  }
  const auto n = static_cast<Eigen::Index>(d_out_);
  for (const ComplexMatrix& u : units_) {
    if (u.rows() != n || u.cols() != n) {
      throw Error(Errc::kDimensionMismatch, "unit image has wrong shape");
    }
    if (!u.allFinite()) throw Error(Errc::kNonFinite, "unit image not finite");
  }
}

LinearMap LinearMap::from_function(std::size_t d_in, std::size_t d_out,
                                   const MatrixFunction& f) {
  std::vector<ComplexMatrix> units;
  units.reserve(d_in * d_in);
  for (std::size_t i = 0; i < d_in; ++i) {
    for (std::size_t j = 0; j < d_in; ++j) units.push_back(f(unit_matrix(d_in, i, j)));
  }
  return LinearMap(d_in, d_out, std::move(units));
}

LinearMap LinearMap::identity(std::size_t d) {
  return from_function(d, d, [](const ComplexMatrix& x) { return x; });
}

LinearMap LinearMap::unitary_conjugation(const ComplexMatrix& u) {
  require_square(u, "unitary");
  const auto d = static_cast<std::size_t>(u.rows());
  return from_function(d, d, [&u](const ComplexMatrix& x) -> ComplexMatrix {
    return u * x * u.adjoint();
  });
}

LinearMap LinearMap::from_kraus(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw Error(Errc::kSchema, "empty Kraus list");
  const auto d_out = static_cast<std::size_t>(kraus.front().rows());
  const auto d_in = static_cast<std::size_t>(kraus.front().cols());
  for (const ComplexMatrix& k : kraus) {
    if (static_cast<std::size_t>(k.rows()) != d_out ||
        static_cast<std::size_t>(k.cols()) != d_in) {
      throw Error(Errc::kDimensionMismatch, "Kraus operators differ in shape");
    }
  }
  return from_function(d_in, d_out, [&kraus](const ComplexMatrix& x) {
    ComplexMatrix out = ComplexMatrix::Zero(kraus.front().rows(), kraus.front().rows());
    for (const ComplexMatrix& k : kraus) out += k * x * k.adjoint();
    return out;
  });
}

LinearMap LinearMap::diagonal_projection(std::size_t d) {
  return from_function(d, d, [](const ComplexMatrix& x) -> ComplexMatrix {
    return x.diagonal().asDiagonal();
  });
}

LinearMap LinearMap::classical(const Eigen::MatrixXd& conditional) {
  if (conditional.rows() != conditional.cols() || conditional.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, "conditional matrix must be square");
  }
  const auto d = static_cast<std::size_t>(conditional.rows());
  std::vector<ComplexMatrix> units;
  units.reserve(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      ComplexMatrix u = ComplexMatrix::Zero(conditional.rows(), conditional.rows());
      if (a == b) {
        const Eigen::VectorXd row = conditional.row(static_cast<Eigen::Index>(a));
        u.diagonal() = row.cast<Complex>();
      }
      units.push_back(std::move(u));
    }
  }
  return LinearMap(d, d, std::move(units));
}

LinearMap LinearMap::trace_replacement(const ComplexMatrix& omega) {
  require_square(omega, "omega");
  const auto d = static_cast<std::size_t>(omega.rows());
  std::vector<ComplexMatrix> units;
  units.reserve(d * d);
  for (Eigen::Index i = 0; i < omega.rows(); ++i) {
    for (Eigen::Index j = 0; j < omega.rows(); ++j) {
      units.push_back(omega(i, j) * identity_matrix(d));
    }
  }
  return LinearMap(d, d, std::move(units));
}

ComplexMatrix LinearMap::apply(const ComplexMatrix& x) const {
  const auto n = static_cast<Eigen::Index>(d_in_);
  if (x.rows() != n || x.cols() != n) {
    throw Error(Errc::kDimensionMismatch, "argument has wrong shape");
  }
  const auto m = static_cast<Eigen::Index>(d_out_);
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (x(i, j) != Complex(0.0)) {
        out += x(i, j) * unit(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  return out;
}

ComplexMatrix LinearMap::apply_dual(const ComplexMatrix& rho) const {
  const auto m = static_cast<Eigen::Index>(d_out_);
  if (rho.rows() != m || rho.cols() != m) {
    throw Error(Errc::kDimensionMismatch, "state has wrong shape");
  }
  const auto n = static_cast<Eigen::Index>(d_in_);
  ComplexMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // Tr(L(e_ij) rho) is the (j, i) entry of the dual.
      out(j, i) = (unit(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                   rho).trace();
    }
  }
  return out;
}

FactoredOperator LinearMap::unnormalized_choi() const {
  const auto m = static_cast<Eigen::Index>(d_out_);
  const auto n = static_cast<Eigen::Index>(d_in_);
  ComplexMatrix out = ComplexMatrix::Zero(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.block(i * m, j * m, m, m) =
          unit(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return FactoredOperator(std::move(out), {d_in_, d_out_});
}

bool LinearMap::is_unital(double tol) const {
  ComplexMatrix sum = ComplexMatrix::Zero(static_cast<Eigen::Index>(d_out_),
                                          static_cast<Eigen::Index>(d_out_));
  for (std::size_t i = 0; i < d_in_; ++i) sum += unit(i, i);
  return max_abs_diff(sum, identity_matrix(d_out_)) <= tol;
}

bool LinearMap::is_hermiticity_preserving(double tol) const {
  for (std::size_t i = 0; i < d_in_; ++i) {
    for (std::size_t j = 0; j < d_in_; ++j) {
      if (max_abs_diff(unit(i, j).adjoint(), unit(j, i)) > tol) return false;
    }
  }
  return true;
}

bool LinearMap::is_cp(double tol) const {
  if (!is_hermiticity_preserving(1e-10)) return false;
  return is_psd(unnormalized_choi().matrix(), tol).psd;
}

QcpOperator::QcpOperator(FactoredOperator op, ComplexMatrix root, LinearMap source)
    : op_(std::move(op)), root_(std::move(root)), source_(std::move(source)) {}

QcpOperator qcp_from_channel(const LinearMap& channel) {
  if (channel.d_in() != channel.d_out()) {
    throw Error(Errc::kDimensionMismatch, "conditional operator needs d_in == d_out");
  }
  if (!channel.is_cp()) throw Error(Errc::kNotCp, "map is not completely positive");
  if (!channel.is_unital()) throw Error(Errc::kNotUnital, "map is not unital");
  FactoredOperator op = channel.unnormalized_choi();
  ComplexMatrix root = herm_sqrt(op.matrix());
  return QcpOperator(std::move(op), std::move(root), channel);
}

DensityOperator product_lifting(const DensityOperator& omega,
                                const DensityOperator& rho) {
  return DensityOperator(kron(omega.op(), rho.op()));
}

DensityOperator reduced_dynamics(const DensityOperator& omega,
                                 const DensityOperator& rho,
                                 const ComplexMatrix& unitary) {
  const FactoredOperator joint = kron(omega.op(), rho.op());
  const auto n = static_cast<Eigen::Index>(joint.dim());
  if (unitary.rows() != n || unitary.cols() != n) {
    throw Error(Errc::kDimensionMismatch, "unitary does not match omega (x) rho");
  }
  const FactoredOperator evolved(unitary * joint.matrix() * unitary.adjoint(),
                                 joint.dims());
  // Systems 1..k of rho sit right of omega's single factor.
  std::vector<std::size_t> keep;
  for (std::size_t s = 1; s < joint.parties(); ++s) keep.push_back(s);
  return DensityOperator(partial_trace(evolved, keep));
}

DensityOperator nonlinear_lift(const QcpOperator& pi, const DensityOperator& rho) {
  if (rho.dim() != pi.d()) {
    throw Error(Errc::kDimensionMismatch, "state and conditional operator differ in dimension");
  }
  const ComplexMatrix side = kron(identity_matrix(pi.d()), herm_sqrt(rho.matrix()));
  return DensityOperator(
      FactoredOperator(side * pi.matrix() * side, {pi.d(), pi.d()}));
}

DensityOperator ohya_lift(const DensityOperator& rho, std::size_t parties) {
  if (parties < 1) throw Error(Errc::kInvalidFactor, "parties must be >= 1");
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  const std::size_t d = rho.dim();
  const std::size_t total = power(d, parties);
  const auto n = static_cast<Eigen::Index>(total);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double p = std::max(eig.values(k), 0.0);
    if (p == 0.0) continue;
    ComplexVector v = eig.vectors.col(k);
    ComplexVector tensor = v;
    for (std::size_t m = 1; m < parties; ++m) {
      ComplexVector next(tensor.size() * v.size());
      for (Eigen::Index a = 0; a < tensor.size(); ++a) {
        next.segment(a * v.size(), v.size()) = tensor(a) * v;
      }
      tensor = std::move(next);
    }
    out += p * tensor * tensor.adjoint();
  }
  return DensityOperator(FactoredOperator(std::move(out), Dims(parties, d)));
}

FactoredOperator compose_qcp(const QcpOperator& pi1, const QcpOperator& pi2) {
  return n_compose_qcp({pi1, pi2});
}

FactoredOperator n_compose_qcp(const std::vector<QcpOperator>& pis) {
  if (pis.empty()) throw Error(Errc::kSchema, "no conditional operators");
  const std::size_t d = pis.front().d();
  for (const QcpOperator& pi : pis) {
    if (pi.d() != d) {
      throw Error(Errc::kDimensionMismatch, "conditional operators differ in dimension");
    }
  }
  if (pis.size() == 1) return pis.front().op();
  // pi_1 acts on the two rightmost slots; the rest compose to its left.
  const FactoredOperator inner =
      n_compose_qcp(std::vector<QcpOperator>(pis.begin() + 1, pis.end()));
  const std::size_t left = inner.dim() / d;
  const ComplexMatrix side = kron(identity_matrix(left), pis.front().root());
  const ComplexMatrix middle = kron(inner.matrix(), identity_matrix(d));
  Dims dims = inner.dims();
  dims.push_back(d);
  return FactoredOperator(side * middle * side, std::move(dims));
}

DensityOperator n_nonlinear_lift(const QcpOperator& pi, const DensityOperator& rho,
                                 std::size_t parties) {
  if (parties < 2) throw Error(Errc::kInvalidFactor, "parties must be >= 2");
  if (rho.dim() != pi.d()) {
    throw Error(Errc::kDimensionMismatch, "state and conditional operator differ in dimension");
  }
  const FactoredOperator chain = n_compose_qcp(std::vector<QcpOperator>(parties - 1, pi));
  const ComplexMatrix side =
      kron(identity_matrix(chain.dim() / pi.d()), herm_sqrt(rho.matrix()));
  return DensityOperator(FactoredOperator(side * chain.matrix() * side, chain.dims()));
}

LinearMap channel_from_compound(const DensityOperator& theta,
                                const DensityOperator& rho) {
  const std::size_t d = rho.dim();
  if (theta.dims().size() != 2 || theta.dims()[0] != d || theta.dims()[1] != d) {
    throw Error(Errc::kDimensionMismatch, "compound state must have dims {d, d}");
  }
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  const double min_ev = eig.values.minCoeff();
  if (min_ev <= kPsdTol * eig.values.cwiseAbs().maxCoeff()) {
    throw Error(Errc::kNotFaithful, "min eigenvalue " + std::to_string(min_ev));
  }
  const FactoredOperator marginal = partial_trace(theta.op(), {1});
  const double gap = max_abs_diff(marginal.matrix(), rho.matrix());
  if (gap > kTraceTol) {
    throw Error(Errc::kNotCompatible, "system-1 marginal differs by " + std::to_string(gap));
  }
  Eigen::VectorXd inv_root = eig.values.cwiseSqrt().cwiseInverse();
  const ComplexMatrix rho_inv_half =
      eig.vectors * inv_root.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> units;
  units.reserve(d * d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      units.push_back(rho_inv_half * theta.matrix().block(i * n, j * n, n, n) *
                      rho_inv_half);
    }
  }
  return LinearMap(d, d, std::move(units));
}

ComplexMatrix reduction_map(const ComplexMatrix& x) {
  require_square(x, "argument");
  return x.trace() * ComplexMatrix::Identity(x.rows(), x.cols()) - x;
}

ComplexMatrix robertson_map(const ComplexMatrix& x) {
  if (x.rows() != 4 || x.cols() != 4) {
    throw Error(Errc::kDimensionMismatch, "robertson map acts on 4x4 matrices");
  }
  const ComplexMatrix x00 = x.block(0, 0, 2, 2);
  const ComplexMatrix x01 = x.block(0, 2, 2, 2);
  const ComplexMatrix x10 = x.block(2, 0, 2, 2);
  const ComplexMatrix x11 = x.block(2, 2, 2, 2);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out(4, 4);
  out.block(0, 0, 2, 2) = id * x11.trace();
  out.block(0, 2, 2, 2) = x01 + reduction_map(x10);
  out.block(2, 0, 2, 2) = x10 + reduction_map(x01);
  out.block(2, 2, 2, 2) = id * x00.trace();
  return 0.5 * out;
}

LinearMap lifting_assisted_map(const MatrixFunction& psi,
                               const DensityOperator& omega, std::size_t d) {
  const std::size_t w = omega.dim();
  // Maps C^w (x) C^d onto C^d (x) C^w.
  const ComplexMatrix swap = swap_operator(w, d);
  return LinearMap::from_function(d, d, [&](const ComplexMatrix& x) {
    const ComplexMatrix lifted = kron(omega.matrix(), x);
    const ComplexMatrix image = psi(swap * lifted * swap.adjoint());
    const auto n = static_cast<Eigen::Index>(d * w);
    if (image.rows() != n || image.cols() != n) {
      throw Error(Errc::kDimensionMismatch, "psi changed the dimension");
    }
    // System 1 is the omega factor on the right.
    return partial_trace(FactoredOperator(image, {d, w}), {2}).matrix();
  });
}

FactoredOperator choi_matrix(const LinearMap& phi) {
  const FactoredOperator raw = phi.unnormalized_choi();
  return FactoredOperator(raw.matrix() / static_cast<double>(phi.d_in()), raw.dims());
}

}  // namespace liftlab
