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

#include "liftlab/clift.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "liftlab/error.hpp"

namespace liftlab {
namespace {

DensityOperator diagonal_state(const std::vector<double>& weights, Dims dims) {
  return DensityOperator(FactoredOperator(diagonal_operator(weights), std::move(dims)));
}

}  // namespace

LiftingTensor::LiftingTensor(std::size_t n1, std::size_t n2,
                             std::vector<double> data)
    : n1_(n1), n2_(n2), data_(std::move(data)) {
  if (n1_ == 0 || n2_ == 0) {
    throw Error(Errc::kSizeMismatch, "lifting tensor has an empty index range");
  }
  if (data_.size() != n1_ * n2_ * n1_) {
    throw Error(Errc::kSizeMismatch,
                "lifting tensor needs " + std::to_string(n1_ * n2_ * n1_) +
                    " weights, got " + std::to_string(data_.size()));
  }
  for (double w : data_) {
    if (!std::isfinite(w)) throw Error(Errc::kNonFinite, "non-finite weight");
    if (w < 0.0) throw Error(Errc::kNegativeEntry, "weight " + std::to_string(w));
  }
  for (std::size_t i = 0; i < n1_; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n2_; ++j) {
      for (std::size_t k = 0; k < n1_; ++k) sum += (*this)(i, j, k);
    }
    if (std::abs(sum - 1.0) > kProbabilityTol) {
      throw Error(Errc::kNotAState, "input letter " + std::to_string(i) +
                                        " lifts to total weight " +
                                        std::to_string(sum));
    }
  }
}

LiftingTensor LiftingTensor::product(const ProbabilityVector& q,
                                     std::size_t n1) {
  const std::size_t n2 = q.size();
  std::vector<double> data(n1 * n2 * n1, 0.0);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) data[(i * n2 + j) * n1 + i] = q[j];
  }
  return LiftingTensor(n1, n2, std::move(data));
}

LiftingTensor LiftingTensor::ohya(std::size_t n) {
  std::vector<double> data(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[(i * n + i) * n + i] = 1.0;
  return LiftingTensor(n, n, std::move(data));
}

LiftingTensor LiftingTensor::pure(const std::vector<std::size_t>& s,
                                  std::size_t n2) {
  const std::size_t n1 = s.size();
  std::vector<double> data(n1 * n2 * n1, 0.0);
  for (std::size_t i = 0; i < n1; ++i) {
    if (s[i] >= n2) throw Error(Errc::kIndexOutOfRange, "s(i) outside Omega_2");
    data[(i * n2 + s[i]) * n1 + i] = 1.0;
  }
  return LiftingTensor(n1, n2, std::move(data));
}

DensityOperator lift(const LiftingTensor& tensor, const ProbabilityVector& p) {
  if (p.size() != tensor.n1()) {
    throw Error(Errc::kDimensionMismatch, "state does not live on Omega_1");
  }
  const std::size_t n1 = tensor.n1();
  const std::size_t n2 = tensor.n2();
  std::vector<double> joint(n2 * n1, 0.0);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      for (std::size_t k = 0; k < n1; ++k) {
        joint[j * n1 + k] += tensor(i, j, k) * p[i];
      }
    }
  }
  return diagonal_state(joint, {n2, n1});
}

bool is_nondemolition(const LiftingTensor& tensor, double tol) {
  for (std::size_t i = 0; i < tensor.n1(); ++i) {
    for (std::size_t k = 0; k < tensor.n1(); ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j < tensor.n2(); ++j) sum += tensor(i, j, k);
      if (std::abs(sum - (i == k ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

MarkovianLifting is_markovian_lifting(const LiftingTensor& tensor, double tol) {
  const std::size_t n1 = tensor.n1();
  const std::size_t n2 = tensor.n2();
  Eigen::MatrixXd conditional(static_cast<Eigen::Index>(n2),
                              static_cast<Eigen::Index>(n1));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      for (std::size_t k = 0; k < n1; ++k) {
        if (k != i && std::abs(tensor(i, j, k)) > tol) return {false, {}};
      }
      conditional(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          tensor(i, j, i);
    }
  }
  // Column normalization follows from the tensor invariant once the
  // off-diagonal weights vanish.
  return {true, std::move(conditional)};
}

DensityOperator gamma_lifting(const StochasticChannel& gamma,
                              const ProbabilityVector& sigma,
                              const ProbabilityVector& p) {
  const std::size_t n2 = sigma.size();
  const std::size_t n1 = p.size();
  if (gamma.inputs() != n2 * n1 || gamma.outputs() != n2 * n1) {
    throw Error(Errc::kDimensionMismatch,
                "gamma must act on the joint space of size " +
                    std::to_string(n2 * n1));
  }
  std::vector<double> product(n2 * n1);
  for (std::size_t j = 0; j < n2; ++j) {
    for (std::size_t k = 0; k < n1; ++k) product[j * n1 + k] = sigma[j] * p[k];
  }
  const ProbabilityVector out = apply_to_state(gamma, ProbabilityVector(product));
  return diagonal_state(out.weights(), {n2, n1});
}

DensityOperator n_lift(const LiftingTensor& tensor, const ProbabilityVector& p,
                       std::size_t parties) {
  if (parties < 2) {
    throw Error(Errc::kSchema, "an N-lifting needs at least two parties");
  }
  if (tensor.n1() != tensor.n2()) {
    throw Error(Errc::kDimensionMismatch, "the recurrence needs a square tensor");
  }
  if (p.size() != tensor.n1()) {
    throw Error(Errc::kDimensionMismatch, "state does not live on Omega_1");
  }
  const std::size_t n = tensor.n1();
  std::vector<double> weights = p.weights();
  for (std::size_t step = 1; step < parties; ++step) {
    // weights indexed (prefix, k); next indexed (prefix, j, k').
    const std::size_t prefixes = weights.size() / n;
    std::vector<double> next(prefixes * n * n, 0.0);
    for (std::size_t x = 0; x < prefixes; ++x) {
      for (std::size_t k = 0; k < n; ++k) {
        const double w = weights[x * n + k];
        if (w == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k2 = 0; k2 < n; ++k2) {
            next[(x * n + j) * n + k2] += w * tensor(k, j, k2);
          }
        }
      }
    }
    weights = std::move(next);
  }
  return diagonal_state(weights, Dims(parties, n));
}

DensityOperator pure_n_lift(const std::vector<std::vector<std::size_t>>& maps,
                            const std::vector<std::size_t>& sizes,
                            const ProbabilityVector& p) {
  if (maps.size() != sizes.size()) {
    throw Error(Errc::kSizeMismatch, "one target size per map is required");
  }
  Dims dims = sizes;
  dims.push_back(p.size());
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  std::vector<double> weights(total, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t index = 0;
    for (std::size_t m = 0; m < maps.size(); ++m) {
      if (maps[m].size() != p.size() || maps[m][i] >= sizes[m]) {
        throw Error(Errc::kIndexOutOfRange, "map value outside its target space");
      }
      index = index * sizes[m] + maps[m][i];
    }
    weights[index * p.size() + i] += p[i];
  }
  return diagonal_state(weights, std::move(dims));
}

MarkovSpec::MarkovSpec(Eigen::MatrixXd conditional, ProbabilityVector initial)
    : conditional_(std::move(conditional)), initial_(std::move(initial)) {
  const auto n = static_cast<Eigen::Index>(initial_.size());
  if (conditional_.rows() != n || conditional_.cols() != n) {
    throw Error(Errc::kDimensionMismatch, "conditional must be n x n");
  }
  if (!conditional_.allFinite()) {
    throw Error(Errc::kNonFinite, "conditional has non-finite entries");
  }
  if (conditional_.minCoeff() < 0.0) {
    throw Error(Errc::kNegativeEntry, "conditional has a negative entry");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(conditional_.col(i).sum() - 1.0) > kProbabilityTol) {
      throw Error(Errc::kNotAState,
                  "column " + std::to_string(i) + " of the conditional does not sum to one");
    }
  }
}

DensityOperator markov_state(const MarkovSpec& spec, std::size_t parties) {
  if (parties < 1) throw Error(Errc::kSchema, "at least one party is required");
  const std::size_t n = spec.n();
  // weights indexed (i_m, ..., i_1) with the newest letter leftmost.
  std::vector<double> weights = spec.initial().weights();
  for (std::size_t m = 2; m <= parties; ++m) {
    std::vector<double> next(weights.size() * n, 0.0);
    const std::size_t suffixes = weights.size() / n;
    for (std::size_t prev = 0; prev < n; ++prev) {
      for (std::size_t rest = 0; rest < suffixes; ++rest) {
        const double w = weights[prev * suffixes + rest];
        for (std::size_t cur = 0; cur < n; ++cur) {
          next[(cur * n + prev) * suffixes + rest] =
              spec.conditional()(static_cast<Eigen::Index>(cur),
                                 static_cast<Eigen::Index>(prev)) *
              w;
        }
      }
    }
    weights = std::move(next);
  }
  return diagonal_state(weights, Dims(parties, n));
}

std::vector<double> markov_operator(const MarkovSpec& spec,
                                    std::span<const double> b) {
  if (b.size() != spec.n()) {
    throw Error(Errc::kDimensionMismatch, "observable size differs from n");
  }
  std::vector<double> out(spec.n(), 0.0);
  for (std::size_t j = 0; j < spec.n(); ++j) {
    for (std::size_t i = 0; i < spec.n(); ++i) {
      out[j] += spec.conditional()(static_cast<Eigen::Index>(i),
                                   static_cast<Eigen::Index>(j)) *
                b[i];
    }
  }
  return out;
}

std::vector<double> transition_expectation(const MarkovSpec& spec,
                                           std::span<const double> b,
                                           std::span<const double> a) {
  if (a.size() != spec.n()) {
    throw Error(Errc::kDimensionMismatch, "observable size differs from n");
  }
  std::vector<double> out = markov_operator(spec, b);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= a[j];
  return out;
}

double nested_expectation(const MarkovSpec& spec,
                          const std::vector<std::vector<double>>& observables) {
  if (observables.empty()) {
    throw Error(Errc::kSchema, "at least one observable is required");
  }
  std::vector<double> inner = observables.front();
  if (inner.size() != spec.n()) {
    throw Error(Errc::kDimensionMismatch, "observable size differs from n");
  }
  for (std::size_t m = 1; m < observables.size(); ++m) {
    inner = transition_expectation(spec, inner, observables[m]);
  }
  return expectation(inner, spec.initial());
}

double product_expectation(const DensityOperator& state,
                           const std::vector<std::vector<double>>& observables) {
  const Dims& dims = state.dims();
  if (observables.size() != dims.size()) {
    throw Error(Errc::kDimensionMismatch, "one observable per party is required");
  }
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (observables[s].size() != dims[s]) {
      throw Error(Errc::kDimensionMismatch, "observable does not match its factor");
    }
  }
  double total = 0.0;
  for (Eigen::Index x = 0; x < state.matrix().rows(); ++x) {
    auto rest = static_cast<std::size_t>(x);
    double value = state.matrix()(x, x).real();
    for (std::size_t s = dims.size(); s-- > 0;) {
      value *= observables[s][rest % dims[s]];
      rest /= dims[s];
    }
    total += value;
  }
  return total;
}

bool verify_transition_expectation(
    const MarkovSpec& spec, std::size_t parties,
    const std::vector<std::vector<double>>& observables, double tol) {
  if (observables.size() != parties) {
    throw Error(Errc::kDimensionMismatch, "one observable per party is required");
  }
  const double direct = product_expectation(markov_state(spec, parties), observables);
  const double nested = nested_expectation(spec, observables);
  return std::abs(direct - nested) <= tol;
}

DiagonalUnitMap DiagonalUnitMap::identity(std::size_t n) {
  DiagonalUnitMap map;
  for (std::size_t i = 0; i < n; ++i) map.images.push_back(unit_matrix(n, i, i));
  return map;
}

DiagonalUnitMap DiagonalUnitMap::permutation(const Permutation& perm) {
  DiagonalUnitMap map;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    map.images.push_back(unit_matrix(perm.size(), perm(i), perm(i)));
  }
  return map;
}

DiagonalUnitMap DiagonalUnitMap::depolarizing(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  DiagonalUnitMap map;
  map.images.assign(n, ComplexMatrix::Identity(m, m) / static_cast<double>(n));
  return map;
}

DensityOperator separable_n_state(const ProbabilityVector& p,
                                  const std::vector<DiagonalUnitMap>& maps) {
  if (maps.empty()) throw Error(Errc::kSchema, "at least one map is required");
  Dims dims;
  for (const DiagonalUnitMap& map : maps) {
    if (map.images.size() != p.size()) {
      throw Error(Errc::kDimensionMismatch, "map must define one image per letter");
    }
    const Eigen::Index d = map.images.front().rows();
    for (const ComplexMatrix& image : map.images) {
      if (image.rows() != d || image.cols() != d) {
        throw Error(Errc::kDimensionMismatch, "images of one map differ in size");
      }
      if (!is_psd(image).psd) {
        throw Error(Errc::kMapNotPositive, "image of a diagonal unit is not PSD");
      }
    }
    dims.push_back(static_cast<std::size_t>(d));
  }
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  const auto m = static_cast<Eigen::Index>(total);
  ComplexMatrix rho = ComplexMatrix::Zero(m, m);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    ComplexMatrix term = maps.front().images[i];
    for (std::size_t s = 1; s < maps.size(); ++s) term = kron(term, maps[s].images[i]);
    rho += p[i] * term;
  }
  return DensityOperator(FactoredOperator(std::move(rho), std::move(dims)));
}

}  // namespace liftlab
