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

// Acceptance gate. One line per criterion; the exit status is nonzero if any
// criterion fails. Draw counts, tolerances and runtime limits are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "liftlab/circulant.hpp"
#include "liftlab/classical.hpp"
#include "liftlab/clift.hpp"
#include "liftlab/matcore.hpp"
#include "liftlab/qlift.hpp"
#include "liftlab/random.hpp"
#include "support/oracles.hpp"

using namespace liftlab;
using oracle::Idx;
using oracle::Mat;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("threw: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit_seconds;
  const bool passed = outcome.passed && in_time;
  if (!passed) ++failures;
  std::printf("%s %-3s %-28s %s; %.3f s (limit %.0f s%s)\n", passed ? "PASS" : "FAIL", id, name,
              outcome.detail.c_str(), seconds, limit_seconds, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return m;
}

// Marginal on slot k (0 = leftmost) of an operator on (C^d)^{(x) parties}.
Mat slot_marginal(const Mat& m, Idx d, std::size_t parties, std::size_t k) {
  Idx left = 1;
  for (std::size_t s = 0; s < k; ++s) left *= d;
  Idx right = 1;
  for (std::size_t s = k + 1; s < parties; ++s) right *= d;
  const Mat tail = oracle::partial_trace(m, left, d * right, false);
  return oracle::partial_trace(tail, d, right, true);
}

// psi_mn = d^{-1/2} sum_i lambda^{mi} e_i (x) e_{i+n}, lambda = exp(2 pi i / d).
Eigen::VectorXcd bell_vector(std::size_t m, std::size_t n, std::size_t d) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Idx>(d * d));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>((m * i) % d) / static_cast<double>(d);
    v(static_cast<Idx>(i * d + (i + n) % d)) = scale * std::polar(1.0, phase);
  }
  return v;
}

bool psd_oracle(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (m + m.adjoint()));
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  return solver.eigenvalues().minCoeff() >= -kPsdTol * scale;
}

Outcome dilation_s4() {
  const std::vector<double> sigma{0.7, 0.3};
  const std::vector<Eigen::MatrixXd> expected{mat2(1, 0, 0, 1), mat2(0, 1, 1, 0),
                                              mat2(0.7, 0.3, 0.3, 0.7), mat2(0.3, 0.7, 0.7, 0.3)};
  std::vector<bool> found(expected.size(), false);
  std::vector<std::size_t> images{0, 1, 2, 3};
  std::size_t total = 0;
  std::size_t doubly = 0;
  double oracle_gap = 0.0;
  do {
    ++total;
    const StochasticChannel ch = channel_from_dilation(Permutation(images), ProbabilityVector(sigma));
    oracle_gap = std::max(oracle_gap, (ch.weights() - oracle::dilation_by_trace(images, sigma)).cwiseAbs().maxCoeff());
    if (ch.is_doubly_stochastic()) ++doubly;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (ch.weights() == expected[k]) found[k] = true;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  const auto hits = static_cast<std::size_t>(std::count(found.begin(), found.end(), true));
  const bool ok = doubly == total && hits == expected.size() && oracle_gap <= 1e-15;
  return {ok, "doubly stochastic " + std::to_string(doubly) + "/" + std::to_string(total) +
                  " (required all), Lambda(1..4) found " + std::to_string(hits) +
                  "/4, trace-oracle gap " + fmt(oracle_gap)};
}

Outcome kraus_equivalence() {
  Rng rng(2002);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n1 = pick(rng, 1, 4);
    const std::size_t n2 = pick(rng, 1, 4);
    const StochasticChannel ch = random_stochastic(rng, n1, n2);
    const ProbabilityVector p = random_probability(rng, n1);
    Mat expected = Mat::Zero(static_cast<Idx>(n2), static_cast<Idx>(n2));
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n2; ++j) {
        expected(static_cast<Idx>(j), static_cast<Idx>(j)) += p[i] * ch.weights()(static_cast<Idx>(i), static_cast<Idx>(j));
      }
    }
    const Mat got = apply_kraus(kraus_from_channel(ch), diagonal_operator(p.weights()));
    worst = std::max(worst, oracle::max_diff(got, expected));
  }
  return {worst <= 1e-12, "200 channels, max residual " + fmt(worst) + " (tol 1e-12)"};
}

Outcome teleport_roundtrip() {
  Rng rng(3003);
  std::vector<std::size_t> images{0, 1, 2};
  std::size_t cases = 0;
  std::size_t exact = 0;
  do {
    const Permutation perm(images);
    const Permutation inv = perm.inverse();
    for (int trial = 0; trial < 50; ++trial) {
      ++cases;
      const ProbabilityVector p = random_probability(rng, 3);
      const std::vector<double> bob = oracle::teleport_contraction(p.weights(), images);
      bool ok = true;
      for (std::size_t i = 0; i < 3; ++i) ok = ok && bob[i] == p[inv(i)];
      const TeleportResult res = classical_teleport(p, perm);
      ok = ok && res.bob_state.weights() == bob && res.corrected.weights() == p.weights();
      if (ok) ++exact;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return {exact == cases, std::to_string(exact) + "/" + std::to_string(cases) + " exact round trips"};
}

Outcome markov_identity() {
  Rng rng(4004);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = pick(rng, 1, 3);
    const std::size_t parties = pick(rng, 2, 4);
    const MarkovSpec spec(random_conditional(rng, n), random_probability(rng, n));
    std::vector<std::vector<double>> observables;
    for (std::size_t k = 0; k < parties; ++k) observables.push_back(random_observable(rng, n));
    const double lhs = product_expectation(markov_state(spec, parties), observables);
    const double rhs = nested_expectation(spec, observables);
    const double path = oracle::markov_expectation(spec.conditional(), spec.initial().weights(), observables);
    worst = std::max({worst, std::abs(lhs - rhs), std::abs(lhs - path)});
  }
  return {worst <= 1e-12, "100 chains, max |lhs - rhs| " + fmt(worst) + " (tol 1e-12)"};
}

Outcome nonlinear_marginals() {
  Rng rng(5005);
  double first = 0.0;
  double second = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = pick(rng, 2, 4);
    const auto di = static_cast<Idx>(d);
    const LinearMap channel = random_unital_cp(rng, d, pick(rng, 1, 3));
    const DensityOperator rho = random_density(rng, d);
    const Mat theta = nonlinear_lift(qcp_from_channel(channel), rho).matrix();
    // Dual map by its defining pairing: dual(rho)_{ji} = Tr(L(e_ij) rho).
    Mat dual(di, di);
    for (Idx i = 0; i < di; ++i) {
      for (Idx j = 0; j < di; ++j) {
        Mat e = Mat::Zero(di, di);
        e(i, j) = 1.0;
        dual(j, i) = (channel.apply(e) * rho.matrix()).trace();
      }
    }
    first = std::max(first, oracle::max_diff(oracle::partial_trace(theta, di, di, false), rho.matrix()));
    second = std::max(second, oracle::max_diff(oracle::partial_trace(theta, di, di, true), dual.transpose()));
  }
  const bool ok = first <= 1e-10 && second <= 1e-10;
  return {ok, "100 maps, Tr_first residual " + fmt(first) + ", Tr_second residual " + fmt(second) +
                  " (tol 1e-10)"};
}

Outcome qcp_chain() {
  Rng rng(6006);
  double worst = 0.0;
  std::size_t not_psd = 0;
  std::size_t composites = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t parties = pick(rng, 2, 4);
    std::vector<QcpOperator> pis;
    for (std::size_t k = 0; k + 1 < parties; ++k) {
      pis.push_back(qcp_from_channel(random_unital_cp(rng, 2, pick(rng, 1, 3))));
    }
    Mat chain = n_compose_qcp(pis).matrix();
    while (true) {
      ++composites;
      if (!psd_oracle(chain)) ++not_psd;
      const Mat peeled = oracle::partial_trace(chain, 2, chain.rows() / 2, false);
      if (pis.size() == 1) {
        worst = std::max(worst, oracle::max_diff(peeled, Mat::Identity(2, 2)));
        break;
      }
      pis.pop_back();
      chain = n_compose_qcp(pis).matrix();
      worst = std::max(worst, oracle::max_diff(peeled, chain));
    }
  }
  return {worst <= 1e-9 && not_psd == 0,
          "peeling residual " + fmt(worst) + " (tol 1e-9), " + std::to_string(composites - not_psd) + "/" +
              std::to_string(composites) + " composites PSD"};
}

Outcome robertson() {
  Rng rng(7007);
  double closed = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const DensityOperator omega = random_density(rng, 2);
    const Mat r = random_density(rng, 2).matrix();
    Mat expected(2, 2);
    expected << r(1, 1), 0.5 * (r(0, 1) + r(1, 0)), 0.5 * (r(0, 1) + r(1, 0)), r(0, 0);
    closed = std::max(closed, oracle::max_diff(lifting_assisted_map(robertson_map, omega, 2).apply(r), expected));
  }
  const DensityOperator half(Mat(0.5 * Mat::Identity(2, 2)));
  const Mat choi = choi_matrix(lifting_assisted_map(robertson_map, half, 2)).matrix();
  const double choi_gap = oracle::max_diff(choi, oracle::robertson_choi());
  const double min_eig = oracle::min_eigenvalue(choi);
  const bool ok = closed <= 1e-12 && choi_gap == 0.0 && std::abs(min_eig + 0.25) <= 1e-12;
  return {ok, "closed-form residual " + fmt(closed) + " (tol 1e-12), Choi gap " + fmt(choi_gap) +
                  " (exact), min eigenvalue " + fmt(min_eig)};
}

Outcome circulant_ppt() {
  Rng rng(8008);
  double worst = 0.0;
  std::size_t agree = 0;
  std::size_t ppt_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = pick(rng, 2, 4);
    const CirculantSpec spec = random_circulant_spec(rng, d);
    const Mat full = build_circulant(spec).matrix();
    const Mat pt = oracle::partial_transpose_second(full, static_cast<Idx>(d), static_cast<Idx>(d));
    const Mat rebuilt = assemble_permuted_circulant(circulant_partial_transpose(spec)).matrix();
    worst = std::max(worst, oracle::max_diff(rebuilt, pt));
    const bool ppt = is_ppt_circulant(spec).ppt;
    if (ppt) ++ppt_count;
    if (ppt == psd_oracle(pt)) ++agree;
  }
  return {worst <= 1e-12 && agree == 1000,
          "reconstruction residual " + fmt(worst) + " (tol 1e-12), PPT agreement " + std::to_string(agree) +
              "/1000 (" + std::to_string(ppt_count) + " PPT)"};
}

Outcome bell_lifting() {
  Rng rng(9009);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = pick(rng, 2, 3);
    const ProbabilityVector p = random_probability(rng, d);
    const DensityOperator rho = random_density(rng, d);
    const Mat lifted = bell_diagonal_lift(p, rho).state.matrix();
    for (std::size_t m = 0; m < d; ++m) {
      for (std::size_t n = 0; n < d; ++n) {
        const Eigen::VectorXcd v = bell_vector(m, n, d);
        const Complex proj = v.adjoint() * lifted * v;
        const double want = p[m] * rho.matrix()(static_cast<Idx>(n), static_cast<Idx>(n)).real();
        worst = std::max(worst, std::abs(proj - want));
      }
    }
  }
  const BellLift example = bell_diagonal_lift(ProbabilityVector({0.75, 0.25}),
                                              DensityOperator(Mat(diagonal_operator(std::vector<double>{0.6, 0.4}))));
  const double example_gap = (example.spectrum.weights() - mat2(0.45, 0.30, 0.15, 0.10)).cwiseAbs().maxCoeff();
  return {worst < 1e-12 && example_gap < 1e-12,
          "100 draws, projection residual " + fmt(worst) + " (tol 1e-12), worked example gap " + fmt(example_gap)};
}

Outcome ohya_cloning() {
  Rng rng(10010);
  double classical = 0.0;
  double quantum = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = pick(rng, 2, 4);
    const std::size_t parties = pick(rng, 2, 4);
    const ProbabilityVector p = random_probability(rng, n);
    const Mat cl = n_lift(LiftingTensor::ohya(n), p, parties).matrix();
    const Mat target = diagonal_operator(p.weights());
    const DensityOperator rho = random_density(rng, n);
    const Mat qu = ohya_lift(rho, parties).matrix();
    for (std::size_t k = 0; k < parties; ++k) {
      classical = std::max(classical, oracle::max_diff(slot_marginal(cl, static_cast<Idx>(n), parties, k), target));
      quantum = std::max(quantum, oracle::max_diff(slot_marginal(qu, static_cast<Idx>(n), parties, k), rho.matrix()));
    }
  }
  return {classical <= 1e-12 && quantum <= 1e-10,
          "N <= 4, classical marginal residual " + fmt(classical) + " (tol 1e-12), quantum " + fmt(quantum) +
              " (tol 1e-10)"};
}

}  // namespace

int main() {
  criterion("1", "dilation-s4", 1, dilation_s4);
  criterion("2", "kraus-equivalence", 1, kraus_equivalence);
  criterion("3", "teleport-roundtrip", 1, teleport_roundtrip);
  criterion("4", "transition-expectation", 5, markov_identity);
  criterion("5", "nonlinear-marginals", 5, nonlinear_marginals);
  criterion("6", "qcp-chain", 5, qcp_chain);
  criterion("7", "robertson-map", 1, robertson);
  criterion("8", "circulant-ppt", 10, circulant_ppt);
  criterion("9", "bell-diagonal-lifting", 2, bell_lifting);
  criterion("10", "ohya-cloning", 2, ohya_cloning);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
