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

#include "liftlab/random.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "liftlab/error.hpp"

namespace liftlab {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u = uniform();
  while (u == 0.0) u = uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw Error(Errc::kIndexOutOfRange, "empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

Complex Rng::complex_normal() {
  const double s = std::sqrt(0.5);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

namespace {

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < g.cols(); ++c) {
    for (Eigen::Index r = 0; r < g.rows(); ++r) g(r, c) = rng.complex_normal();
  }
  return g;
}

std::vector<double> positive_weights(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    const double g = rng.normal();
    x = g * g + 1e-3;
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace

ProbabilityVector random_probability(Rng& rng, std::size_t n) {
  std::vector<double> w = positive_weights(rng, n);
  // Absorb rounding into the last entry so the sum is exactly one.
  double head = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) head += w[i];
  if (n > 0) w[n - 1] = std::max(0.0, 1.0 - head);
  return ProbabilityVector(std::move(w));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  return Permutation(std::move(images));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t d) {
  const ComplexMatrix g = ginibre(rng, d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

DensityOperator random_density(Rng& rng, std::size_t d) {
  const ProbabilityVector p = random_probability(rng, d);
  const ComplexMatrix u = random_unitary(rng, d);
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(p.weights().data(),
                                                        static_cast<Eigen::Index>(d));
  ComplexMatrix rho = u * w.cast<Complex>().asDiagonal() * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace();
  return DensityOperator(std::move(rho));
}

StochasticChannel random_stochastic(Rng& rng, std::size_t n1, std::size_t n2) {
  Eigen::MatrixXd w(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2));
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    const std::vector<double> row = positive_weights(rng, n2);
    for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = row[static_cast<std::size_t>(j)];
  }
  return StochasticChannel(std::move(w));
}

Eigen::MatrixXd random_conditional(Rng& rng, std::size_t n) {
  Eigen::MatrixXd c(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index b = 0; b < c.cols(); ++b) {
    const std::vector<double> col = positive_weights(rng, n);
    for (Eigen::Index a = 0; a < c.rows(); ++a) c(a, b) = col[static_cast<std::size_t>(a)];
  }
  return c;
}

LinearMap random_unital_cp(Rng& rng, std::size_t d, std::size_t kraus_rank) {
  if (kraus_rank == 0) throw Error(Errc::kInvalidFactor, "Kraus rank must be positive");
  // Columns of an (r d) x d isometry stacked as K_1, ..., K_r give
  // sum_k K_k^dagger K_k = I.
  const ComplexMatrix u = random_unitary(rng, kraus_rank * d);
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> adjoints;
  for (std::size_t k = 0; k < kraus_rank; ++k) {
    adjoints.push_back(u.block(static_cast<Eigen::Index>(k) * n, 0, n, n).adjoint());
  }
  return LinearMap::from_kraus(adjoints);
}

ComplexMatrix random_psd(Rng& rng, std::size_t d, std::size_t rank) {
  const ComplexMatrix g = ginibre(rng, d, rank);
  ComplexMatrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint());
  const Complex tr = m.trace();
  if (std::abs(tr) > 0.0) m /= tr.real();
  return m;
}

CirculantSpec random_circulant_spec(Rng& rng, std::size_t d) {
  std::vector<ComplexMatrix> blocks;
  std::vector<double> weights = positive_weights(rng, d);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    const std::size_t rank = 1 + rng.below(d);
    blocks.push_back(weights[alpha] * random_psd(rng, d, rank));
  }
  return CirculantSpec(std::move(blocks));
}

std::vector<double> random_observable(Rng& rng, std::size_t n) {
  std::vector<double> a(n);
  for (double& x : a) x = 2.0 * rng.uniform() - 1.0;
  return a;
}

}  // namespace liftlab
