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

#include "liftlab/classical.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "liftlab/error.hpp"

namespace liftlab {

ProbabilityVector::ProbabilityVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw Error(Errc::kSchema, "probability vector is empty");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w)) throw Error(Errc::kNonFinite, "non-finite weight");
    if (w < 0.0) {
      throw Error(Errc::kNegativeEntry, "weight " + std::to_string(w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kProbabilityTol) {
    throw Error(Errc::kNotAState, "weights sum to " + std::to_string(sum));
  }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::point(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(Errc::kIndexOutOfRange, "point outside simplex");
  std::vector<double> w(n, 0.0);
  w[i] = 1.0;
  return ProbabilityVector(std::move(w));
}

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw Error(Errc::kSchema, "permutation images are not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

StochasticChannel::StochasticChannel(Eigen::MatrixXd weights)
    : weights_(std::move(weights)) {
  if (weights_.size() == 0) {
    throw Error(Errc::kSchema, "channel matrix is empty");
  }
  if (!weights_.allFinite()) {
    throw Error(Errc::kNonFinite, "channel has non-finite weights");
  }
  if (weights_.minCoeff() < 0.0) {
    throw Error(Errc::kNegativeEntry,
                "channel weight " + std::to_string(weights_.minCoeff()));
  }
}

StochasticChannel StochasticChannel::identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return StochasticChannel(Eigen::MatrixXd::Identity(m, m));
}

StochasticChannel StochasticChannel::depolarizing(std::size_t n1,
                                                  std::size_t n2) {
  return StochasticChannel(Eigen::MatrixXd::Constant(
      static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2),
      1.0 / static_cast<double>(n1)));
}

bool StochasticChannel::is_unital(double tol) const {
  return ((weights_.colwise().sum().array() - 1.0).abs() <= tol).all();
}

bool StochasticChannel::preserves_normalization(double tol) const {
  return ((weights_.rowwise().sum().array() - 1.0).abs() <= tol).all();
}

bool StochasticChannel::is_doubly_stochastic(double tol) const {
  return is_unital(tol) && preserves_normalization(tol);
}

std::vector<double> StochasticChannel::act(std::span<const double> a) const {
  if (a.size() != inputs()) {
    throw Error(Errc::kDimensionMismatch,
                "input has " + std::to_string(a.size()) + " entries, channel " +
                    std::to_string(inputs()));
  }
  std::vector<double> b(outputs(), 0.0);
  for (std::size_t i = 0; i < inputs(); ++i) {
    for (std::size_t j = 0; j < outputs(); ++j) b[j] += a[i] * (*this)(i, j);
  }
  return b;
}

DensityOperator embed_diagonal(const ProbabilityVector& p) {
  return DensityOperator(diagonal_operator(p.weights()));
}

ComplexMatrix diagonal_operator(std::span<const double> a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = a[static_cast<std::size_t>(i)];
  return m;
}

double expectation(std::span<const double> a, const ProbabilityVector& p) {
  if (a.size() != p.size()) {
    throw Error(Errc::kDimensionMismatch, "observable and state sizes differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * p[i];
  return sum;
}

ProbabilityVector apply_to_state(const StochasticChannel& channel,
                                 const ProbabilityVector& p) {
  return ProbabilityVector(channel.act(p.weights()));
}

std::vector<double> apply_to_observable(const StochasticChannel& channel,
                                        std::span<const double> a) {
  if (a.size() != channel.outputs()) {
    throw Error(Errc::kDimensionMismatch, "observable lives on the output space");
  }
  std::vector<double> out(channel.inputs(), 0.0);
  for (std::size_t i = 0; i < channel.inputs(); ++i) {
    for (std::size_t j = 0; j < channel.outputs(); ++j) {
      out[i] += channel(i, j) * a[j];
    }
  }
  return out;
}

std::vector<KrausOperator> kraus_from_channel(const StochasticChannel& channel) {
  std::vector<KrausOperator> kraus;
  const auto n1 = static_cast<Eigen::Index>(channel.inputs());
  const auto n2 = static_cast<Eigen::Index>(channel.outputs());
  for (Eigen::Index i = 0; i < n1; ++i) {
    for (Eigen::Index j = 0; j < n2; ++j) {
      const double w = channel.weights()(i, j);
      if (w == 0.0) continue;
      ComplexMatrix k = ComplexMatrix::Zero(n2, n1);
      k(j, i) = std::sqrt(w);
      kraus.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                       std::move(k)});
    }
  }
  return kraus;
}

ComplexMatrix apply_kraus(std::span<const KrausOperator> kraus,
                          const ComplexMatrix& a) {
  if (kraus.empty()) {
    throw Error(Errc::kSchema, "empty Kraus list");
  }
  const ComplexMatrix& k0 = kraus.front().op;
  if (a.rows() != k0.cols() || a.cols() != k0.cols()) {
    throw Error(Errc::kDimensionMismatch, "input does not match Kraus domain");
  }
  ComplexMatrix out = ComplexMatrix::Zero(k0.rows(), k0.rows());
  for (const KrausOperator& k : kraus) out += k.op * a * k.op.adjoint();
  return out;
}

StochasticChannel permutation_channel(const Permutation& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm(i))) = 1.0;
  }
  return StochasticChannel(std::move(w));
}

ComplexMatrix permutation_unitary(const Permutation& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    u(static_cast<Eigen::Index>(perm(j)), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return u;
}

StochasticChannel channel_from_dilation(const Permutation& perm,
                                        const ProbabilityVector& sigma) {
  const std::size_t n = sigma.size();
  if (perm.size() != n * n) {
    throw Error(Errc::kSizeMismatch,
                "dilation permutation acts on " + std::to_string(perm.size()) +
                    " labels, expected " + std::to_string(n * n));
  }
  // U (e_i (x) e_k) = e_perm(i*n+k); tracing the ancilla keeps the system
  // letter of the image.
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t out = perm(i * n + k) / n;
      w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(out)) += sigma[k];
    }
  }
  return StochasticChannel(std::move(w));
}

DensityOperator max_correlated_state(const Permutation& perm) {
  const std::size_t n = perm.size();
  const auto m = static_cast<Eigen::Index>(n * n);
  ComplexMatrix p = ComplexMatrix::Zero(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Eigen::Index>(i * n + perm(i));
    p(x, x) = 1.0 / static_cast<double>(n);
  }
  return DensityOperator(FactoredOperator(std::move(p), {n, n}));
}

DensityOperator classical_choi(const StochasticChannel& channel) {
  if (channel.inputs() != channel.outputs()) {
    throw Error(Errc::kDimensionMismatch, "classical Choi needs a square channel");
  }
  if (!channel.is_unital()) {
    throw Error(Errc::kNotUnital, "columns of the channel must sum to one");
  }
  const std::size_t n = channel.inputs();
  const auto m = static_cast<Eigen::Index>(n * n);
  ComplexMatrix rho = ComplexMatrix::Zero(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = static_cast<Eigen::Index>(i * n + j);
      rho(x, x) = channel(i, j) / static_cast<double>(n);
    }
  }
  return DensityOperator(FactoredOperator(std::move(rho), {n, n}));
}

TeleportResult classical_teleport(const ProbabilityVector& p,
                                  const Permutation& perm) {
  if (p.size() != perm.size()) {
    throw Error(Errc::kDimensionMismatch, "state and permutation sizes differ");
  }
  const Permutation inv = perm.inverse();
  std::vector<double> bob(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) bob[i] = p[inv(i)];
  // Bob undoes the relabelling: corrected_i = bob_{pi(i)}.
  std::vector<double> corrected(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) corrected[i] = bob[perm(i)];
  return {ProbabilityVector(std::move(bob)),
          ProbabilityVector(std::move(corrected))};
}

FactoredOperator teleport_bob_operator(const ProbabilityVector& p,
                                       const Permutation& perm) {
  const std::size_t n = p.size();
  if (perm.size() != n) {
    throw Error(Errc::kDimensionMismatch, "state and permutation sizes differ");
  }
  const FactoredOperator rho_a(diagonal_operator(p.weights()));
  const FactoredOperator joint = kron(rho_a, max_correlated_state(perm).op());
  const FactoredOperator measurement =
      kron(max_correlated_state(Permutation::identity(n)).op(),
           FactoredOperator(ComplexMatrix::Identity(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n))));
  const double scale = static_cast<double>(n * n);
  const FactoredOperator product(scale * measurement.matrix() * joint.matrix(),
                                 joint.dims());
  return partial_trace(product, {1});
}

}  // namespace liftlab
