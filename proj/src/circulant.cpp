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

#include "liftlab/circulant.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "liftlab/error.hpp"

namespace liftlab {

namespace {

constexpr double kBlockTraceTol = 1e-9;
constexpr double kSpectrumTol = 1e-12;

std::size_t mod(long long x, std::size_t d) {
  const auto n = static_cast<long long>(d);
  return static_cast<std::size_t>(((x % n) + n) % n);
}

Eigen::Index at(std::size_t i, std::size_t k, std::size_t d) {
  return static_cast<Eigen::Index>(i * d + k);
}

Complex root_of_unity(long long power, std::size_t d) {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(mod(power, d)) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

void require_psd_block(const ComplexMatrix& b, std::size_t alpha) {
  // A zero block has no spectral scale; is_psd treats it as PSD.
  PsdReport report{true, 0.0};
  try {
    report = is_psd(b);
  } catch (const Error& e) {
    throw Error(Errc::kBlockNotPsd,
                "block " + std::to_string(alpha) + " is not Hermitian");
  }
  if (!report.psd) {
    throw Error(Errc::kBlockNotPsd, "block " + std::to_string(alpha) +
                                        " has eigenvalue " +
                                        std::to_string(report.min_eigenvalue));
  }
}

void require_square_blocks(const std::vector<ComplexMatrix>& blocks) {
  const auto d = static_cast<Eigen::Index>(blocks.size());
  if (d == 0) throw Error(Errc::kDimensionMismatch, "no blocks");
  for (const ComplexMatrix& b : blocks) {
    if (b.rows() != d || b.cols() != d) {
      throw Error(Errc::kDimensionMismatch,
                  "expected " + std::to_string(d) + "x" + std::to_string(d) + " blocks");
    }
    if (!b.allFinite()) throw Error(Errc::kNonFinite, "block not finite");
  }
}

}  // namespace

std::vector<std::vector<IndexPair>> circulant_subspaces(std::size_t d) {
  std::vector<std::vector<IndexPair>> out(d);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    for (std::size_t i = 0; i < d; ++i) out[alpha].emplace_back(i, (i + alpha) % d);
  }
  return out;
}

std::vector<std::vector<IndexPair>> permuted_circulant_subspaces(std::size_t d) {
  std::vector<std::vector<IndexPair>> out(d);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    for (std::size_t i = 0; i < d; ++i) {
      out[alpha].emplace_back(i, mod(static_cast<long long>(alpha) - static_cast<long long>(i), d));
    }
  }
  return out;
}

ComplexMatrix shift_operator(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < d; ++k) {
    s(static_cast<Eigen::Index>((k + 1) % d), static_cast<Eigen::Index>(k)) = 1.0;
  }
  return s;
}

CirculantSpec::CirculantSpec(std::vector<ComplexMatrix> blocks) : blocks_(std::move(blocks)) {
  require_square_blocks(blocks_);
  Complex total = 0.0;
  for (std::size_t alpha = 0; alpha < blocks_.size(); ++alpha) {
    require_psd_block(blocks_[alpha], alpha);
    total += blocks_[alpha].trace();
  }
  if (std::abs(total - 1.0) > kBlockTraceTol) {
    throw Error(Errc::kTraceNotOne, "total trace " + std::to_string(total.real()));
  }
}

DensityOperator build_circulant(const CirculantSpec& spec) {
  const std::size_t d = spec.d();
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    const ComplexMatrix& a = spec.block(alpha);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        out(at(i, (i + alpha) % d, d), at(j, (j + alpha) % d, d)) =
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return DensityOperator(FactoredOperator(std::move(out), {d, d}));
}

std::vector<ComplexMatrix> circulant_partial_transpose(const CirculantSpec& spec) {
  const std::size_t d = spec.d();
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix pi = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < d; ++j) {
    pi(static_cast<Eigen::Index>(mod(-static_cast<long long>(j), d)),
       static_cast<Eigen::Index>(j)) = 1.0;
  }
  const ComplexMatrix shift = shift_operator(d);
  std::vector<ComplexMatrix> pattern;  // Pi S^beta
  ComplexMatrix power = ComplexMatrix::Identity(n, n);
  for (std::size_t beta = 0; beta < d; ++beta) {
    pattern.push_back(pi * power);
    power = shift * power;
  }
  std::vector<ComplexMatrix> out;
  out.reserve(d);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    for (std::size_t beta = 0; beta < d; ++beta) {
      acc += spec.block((alpha + beta) % d).cwiseProduct(pattern[beta]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

FactoredOperator assemble_permuted_circulant(const std::vector<ComplexMatrix>& blocks) {
  require_square_blocks(blocks);
  const std::size_t d = blocks.size();
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t ki = mod(static_cast<long long>(alpha) - static_cast<long long>(i), d);
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t kj = mod(static_cast<long long>(alpha) - static_cast<long long>(j), d);
        out(at(i, ki, d), at(j, kj, d)) =
            blocks[alpha](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return FactoredOperator(std::move(out), {d, d});
}

PptReport is_ppt_circulant(const CirculantSpec& spec, double tol) {
  const std::vector<ComplexMatrix> blocks = circulant_partial_transpose(spec);
  PptReport report{true, {}};
  double scale = 0.0;
  for (const ComplexMatrix& b : blocks) {
    const HermitianEigen eig = hermitian_eigen(b);
    report.block_min_eigenvalues.push_back(eig.values.minCoeff());
    scale = std::max(scale, eig.values.cwiseAbs().maxCoeff());
  }
  for (double v : report.block_min_eigenvalues) {
    if (v < -tol * scale) report.ppt = false;
  }
  return report;
}

DensityOperator circulant_lift(const std::vector<ComplexMatrix>& cs,
                               const DensityOperator& rho) {
  require_square_blocks(cs);
  const std::size_t d = cs.size();
  if (rho.dim() != d) throw Error(Errc::kDimensionMismatch, "rho must be d x d");
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(d);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    require_psd_block(cs[alpha], alpha);
    if (std::abs(cs[alpha].trace() - 1.0) > kBlockTraceTol) {
      throw Error(Errc::kTraceNotOne, "c block " + std::to_string(alpha) +
                                          " has trace " +
                                          std::to_string(cs[alpha].trace().real()));
    }
    const auto a = static_cast<Eigen::Index>(alpha);
    blocks.push_back(rho.matrix()(a, a).real() * cs[alpha]);
  }
  return build_circulant(CirculantSpec(std::move(blocks)));
}

ComplexMatrix lift_isometry(const std::vector<ComplexVector>& cvecs) {
  const std::size_t d = cvecs.size();
  if (d == 0) throw Error(Errc::kDimensionMismatch, "no vectors");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix v = ComplexMatrix::Zero(n * n, n);
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    const ComplexVector& c = cvecs[alpha];
    if (c.size() != n) throw Error(Errc::kDimensionMismatch, "vector has wrong length");
    if (std::abs(c.squaredNorm() - 1.0) > kBlockTraceTol) {
      throw Error(Errc::kNotNormalized, "vector " + std::to_string(alpha) +
                                            " has squared norm " +
                                            std::to_string(c.squaredNorm()));
    }
    for (std::size_t j = 0; j < d; ++j) {
      v(at(j, (j + alpha) % d, d), static_cast<Eigen::Index>(alpha)) =
          c(static_cast<Eigen::Index>(j));
    }
  }
  return v;
}

DensityOperator circulant_lift_isometry(const std::vector<ComplexVector>& cvecs,
                                        const DensityOperator& rho) {
  const ComplexMatrix v = lift_isometry(cvecs);
  if (static_cast<std::size_t>(v.cols()) != rho.dim()) {
    throw Error(Errc::kDimensionMismatch, "rho must be d x d");
  }
  const ComplexMatrix diag = rho.matrix().diagonal().asDiagonal();
  const std::size_t d = rho.dim();
  return DensityOperator(FactoredOperator(v * diag * v.adjoint(), {d, d}));
}

ComplexMatrix bell_unitary(std::size_t m, std::size_t n, std::size_t d) {
  if (d == 0 || m >= d || n >= d) {
    throw Error(Errc::kIndexOutOfRange, "Bell indices must lie in [0, d)");
  }
  const auto size = static_cast<Eigen::Index>(d);
  ComplexMatrix u = ComplexMatrix::Zero(size, size);
  for (std::size_t k = 0; k < d; ++k) {
    u(static_cast<Eigen::Index>((k + n) % d), static_cast<Eigen::Index>(k)) =
        root_of_unity(static_cast<long long>(m * k), d);
  }
  return u;
}

DensityOperator bell_state(std::size_t m, std::size_t n, std::size_t d) {
  const auto size = static_cast<Eigen::Index>(d);
  const ComplexMatrix side = kron(ComplexMatrix::Identity(size, size), bell_unitary(m, n, d));
  return DensityOperator(
      FactoredOperator(side * max_entangled(d) * side.adjoint(), {d, d}));
}

BellSpectrum::BellSpectrum(Eigen::MatrixXd weights) : weights_(std::move(weights)) {
  if (weights_.rows() != weights_.cols() || weights_.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, "Bell spectrum must be d x d");
  }
  if (!weights_.allFinite()) throw Error(Errc::kNonFinite, "Bell spectrum not finite");
  if (weights_.minCoeff() < -kSpectrumTol) {
    throw Error(Errc::kNegativeEntry, "Bell weight " + std::to_string(weights_.minCoeff()));
  }
  if (std::abs(weights_.sum() - 1.0) > kSpectrumTol) {
    throw Error(Errc::kNotAState, "Bell weights sum to " + std::to_string(weights_.sum()));
  }
}

DensityOperator bell_diagonal_state(const BellSpectrum& spectrum) {
  const std::size_t d = spectrum.d();
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t k = 0; k < d; ++k) {
      const double w =
          spectrum.weights()(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
      if (w != 0.0) out += w * bell_state(m, k, d).matrix();
    }
  }
  return DensityOperator(FactoredOperator(std::move(out), {d, d}));
}

Eigen::MatrixXd bell_projections(const ComplexMatrix& x, std::size_t d) {
  const auto size = static_cast<Eigen::Index>(d);
  if (x.rows() != size * size || x.cols() != size * size) {
    throw Error(Errc::kDimensionMismatch, "operator must be d^2 x d^2");
  }
  Eigen::MatrixXd out(size, size);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) {
      // psi_mn = d^{-1/2} sum_i lambda^{mi} e_i (x) e_{i+n}.
      ComplexVector psi = ComplexVector::Zero(size * size);
      for (std::size_t i = 0; i < d; ++i) {
        psi(at(i, (i + n) % d, d)) = norm * root_of_unity(static_cast<long long>(m * i), d);
      }
      out(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
          psi.dot(x * psi).real();
    }
  }
  return out;
}

ComplexMatrix bell_circulant_matrix(const ProbabilityVector& p) {
  const std::size_t d = p.size();
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      Complex sum = 0.0;
      for (std::size_t m = 0; m < d; ++m) {
        sum += p[m] * root_of_unity(static_cast<long long>(m) *
                                        (static_cast<long long>(k) - static_cast<long long>(l)),
                                    d);
      }
      c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
          sum / static_cast<double>(d);
    }
  }
  return c;
}

BellLift bell_diagonal_lift(const ProbabilityVector& p, const DensityOperator& rho) {
  const std::size_t d = p.size();
  if (rho.dim() != d) throw Error(Errc::kDimensionMismatch, "rho must be d x d");
  const ComplexMatrix c = bell_circulant_matrix(p);
  DensityOperator state = circulant_lift(std::vector<ComplexMatrix>(d, c), rho);
  BellSpectrum spectrum(bell_projections(state.matrix(), d));
  return BellLift{std::move(state), std::move(spectrum)};
}

}  // namespace liftlab
