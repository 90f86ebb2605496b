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

#include "liftlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <utility>

#include "liftlab/circulant.hpp"
#include "liftlab/classical.hpp"
#include "liftlab/clift.hpp"
#include "liftlab/error.hpp"
#include "liftlab/matcore.hpp"
#include "liftlab/qlift.hpp"
#include "liftlab/random.hpp"

namespace liftlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Accumulates the worst residual of one named check.
class Tracker {
 public:
  Tracker(std::string name, double tolerance, std::string anchor, bool counts = false)
      : name_(std::move(name)), tolerance_(tolerance), anchor_(std::move(anchor)),
        counts_(counts) {}

  void observe(double residual) {
    if (std::isnan(residual)) residual = kInf;
    worst_ = std::max(worst_, residual);
  }
  void fail_if(bool failed) { observe(failed ? ++failures_ : 0.0); }

  // Runs body, charging any library error to this check.
  void guard(const std::function<void()>& body) {
    try {
      body();
    } catch (const Error&) {
      observe(kInf);
    }
  }

  Check finish(const std::optional<double>& tol_override) const {
    const double tol = (tol_override && !counts_) ? *tol_override : tolerance_;
    return Check{name_, worst_ <= tol, worst_, tol, anchor_};
  }

 private:
  std::string name_;
  double tolerance_;
  std::string anchor_;
  bool counts_;
  double worst_ = 0.0;
  double failures_ = 0.0;
};

using Trackers = std::vector<Tracker>;

ComplexMatrix eye(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return ComplexMatrix::Identity(n, n);
}

ComplexMatrix diag_of(const ProbabilityVector& p) { return diagonal_operator(p.weights()); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

void matcore_suite(Rng& rng, std::size_t trials, Trackers& t) {
  t.emplace_back("partial-trace-product", 1e-12, "marginals of a product state");
  t.emplace_back("partial-trace-order", 1e-12, "kept factors stay in order");
  t.emplace_back("partial-transpose-involution", 0.0, "transpose is an involution");
  t.emplace_back("partial-transpose-product", 0.0, "transpose acts on one factor");
  t.emplace_back("swap-conjugation", 0.0, "factor swap");
  t.emplace_back("herm-sqrt-square", 1e-12, "positive square root");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t d1 = pick(rng, 2, 3);
    const std::size_t d2 = pick(rng, 2, 3);
    const std::size_t d3 = pick(rng, 1, 2);
    const DensityOperator a = random_density(rng, d1);
    const DensityOperator b = random_density(rng, d2);
    const DensityOperator c = random_density(rng, d3);
    const FactoredOperator ab = kron(a.op(), b.op());
    t[0].guard([&] {
      t[0].observe(std::max(max_abs_diff(partial_trace(ab, {1}).matrix(), b.matrix()),
                            max_abs_diff(partial_trace(ab, {2}).matrix(), a.matrix())));
    });
    t[1].guard([&] {
      const FactoredOperator abc = kron(ab, c.op());
      t[1].observe(max_abs_diff(partial_trace(abc, {3, 1}).matrix(),
                                kron(a.matrix(), c.matrix())));
    });
    t[2].guard([&] {
      t[2].observe(max_abs_diff(partial_transpose(partial_transpose(ab, 1), 1).matrix(),
                                ab.matrix()));
    });
    t[3].guard([&] {
      t[3].observe(max_abs_diff(partial_transpose(ab, 1).matrix(),
                                kron(a.matrix(), ComplexMatrix(b.matrix().transpose()))));
    });
    t[4].guard([&] {
      const ComplexMatrix s = swap_operator(d1, d2);
      t[4].observe(max_abs_diff(s * ab.matrix() * s.adjoint(), kron(b.matrix(), a.matrix())));
    });
    t[5].guard([&] {
      const ComplexMatrix r = herm_sqrt(a.matrix());
      t[5].observe(max_abs_diff(r * r, a.matrix()));
    });
  }
}

void classical_suite(Rng& rng, std::size_t trials, Trackers& t) {
  t.emplace_back("kraus-equivalence", 1e-12, "Kraus form of a stochastic channel");
  t.emplace_back("observable-state-duality", 1e-12, "channel acts dually on observables");
  t.emplace_back("dilation-row-normalized", 1e-12, "dilation yields a channel");
  t.emplace_back("dilation-uniform-doubly-stochastic", 1e-12,
                 "uniform ancilla gives a doubly stochastic channel");
  t.emplace_back("teleport-bob-state", 1e-14, "classical teleportation");
  t.emplace_back("teleport-correction", 0.0, "Bob recovers the input");
  t.emplace_back("classical-choi-marginals", 1e-12, "Choi state of a unital channel");
  t.emplace_back("max-correlated-marginals", 1e-15, "maximally correlated state");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n1 = pick(rng, 1, 4);
    const std::size_t n2 = pick(rng, 1, 4);
    const StochasticChannel ch = random_stochastic(rng, n1, n2);
    const ProbabilityVector p = random_probability(rng, n1);
    t[0].guard([&] {
      const std::vector<KrausOperator> kraus = kraus_from_channel(ch);
      const std::vector<double> out = ch.act(p.weights());
      t[0].observe(max_abs_diff(apply_kraus(kraus, diag_of(p)), diagonal_operator(out)));
    });
    t[1].guard([&] {
      const std::vector<double> a = random_observable(rng, n2);
      const std::vector<double> dual = apply_to_observable(ch, a);
      t[1].observe(std::abs(expectation(dual, p) - expectation(a, apply_to_state(ch, p))));
    });
    const std::size_t n = pick(rng, 2, 3);
    const Permutation big = random_permutation(rng, n * n);
    t[2].guard([&] {
      const StochasticChannel d = channel_from_dilation(big, random_probability(rng, n));
      double worst = 0.0;
      for (Eigen::Index i = 0; i < d.weights().rows(); ++i) {
        worst = std::max(worst, std::abs(d.weights().row(i).sum() - 1.0));
      }
      t[2].observe(worst);
    });
    t[3].guard([&] {
      const StochasticChannel d = channel_from_dilation(big, ProbabilityVector::uniform(n));
      double worst = 0.0;
      for (Eigen::Index j = 0; j < d.weights().cols(); ++j) {
        worst = std::max(worst, std::abs(d.weights().col(j).sum() - 1.0));
      }
      t[3].observe(worst);
    });
    const std::size_t m = pick(rng, 2, 4);
    const Permutation perm = random_permutation(rng, m);
    const ProbabilityVector q = random_probability(rng, m);
    t[4].guard([&] {
      const FactoredOperator bob = teleport_bob_operator(q, perm);
      const TeleportResult res = classical_teleport(q, perm);
      t[4].observe(max_abs_diff(bob.matrix(), diag_of(res.bob_state)));
    });
    t[5].guard([&] {
      const TeleportResult res = classical_teleport(q, perm);
      double worst = 0.0;
      for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, std::abs(res.corrected[i] - q[i]));
      t[5].observe(worst);
    });
    t[6].guard([&] {
      // A convex mix of permutation channels is doubly stochastic.
      Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                                static_cast<Eigen::Index>(m));
      const ProbabilityVector mix = random_probability(rng, 3);
      for (std::size_t k = 0; k < 3; ++k) {
        w += mix[k] * permutation_channel(random_permutation(rng, m)).weights();
      }
      const DensityOperator choi = classical_choi(StochasticChannel(w));
      const ComplexMatrix flat = eye(m) / static_cast<double>(m);
      t[6].observe(std::max(max_abs_diff(reduce(choi, {1}).matrix(), flat),
                            max_abs_diff(reduce(choi, {2}).matrix(), flat)));
    });
    t[7].guard([&] {
      const DensityOperator mc = max_correlated_state(perm);
      const ComplexMatrix flat = eye(m) / static_cast<double>(m);
      t[7].observe(std::max(max_abs_diff(reduce(mc, {1}).matrix(), flat),
                            max_abs_diff(reduce(mc, {2}).matrix(), flat)));
    });
  }
}

void clift_suite(Rng& rng, std::size_t trials, Trackers& t) {
  t.emplace_back("nondemolition-marginal", 1e-12, "non-demolition lifting keeps the input");
  t.emplace_back("nondemolition-detected", 0.0, "non-demolition criterion", true);
  t.emplace_back("product-lifting-marginals", 1e-12, "product lifting");
  t.emplace_back("markov-transition-expectation", 1e-12,
                 "Markov state from a transition expectation");
  t.emplace_back("ohya-classical-marginals", 1e-12, "classical cloning by Ohya lifting");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n1 = pick(rng, 1, 4);
    const std::size_t n2 = pick(rng, 1, 4);
    const ProbabilityVector p = random_probability(rng, n1);
    const StochasticChannel q = random_stochastic(rng, n1, n2);
    t[0].guard([&] {
      // E_ijk = delta_ik q(j | i).
      const std::size_t m = q.outputs();
      std::vector<double> data(n1 * m * n1, 0.0);
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < m; ++j) data[(i * m + j) * n1 + i] = q(i, j);
      }
      const LiftingTensor tensor(n1, m, std::move(data));
      const DensityOperator lifted = lift(tensor, p);
      t[0].observe(max_abs_diff(reduce(lifted, {1}).matrix(), diag_of(p)));
      t[1].fail_if(!is_nondemolition(tensor));
    });
    t[2].guard([&] {
      const ProbabilityVector r = random_probability(rng, n2);
      const DensityOperator lifted = lift(LiftingTensor::product(r, n1), p);
      t[2].observe(std::max(max_abs_diff(reduce(lifted, {1}).matrix(), diag_of(p)),
                            max_abs_diff(reduce(lifted, {2}).matrix(), diag_of(r))));
    });
    const std::size_t n = pick(rng, 1, 3);
    const std::size_t parties = pick(rng, 2, 4);
    t[3].guard([&] {
      const MarkovSpec spec(random_conditional(rng, n), random_probability(rng, n));
      std::vector<std::vector<double>> obs;
      for (std::size_t k = 0; k < parties; ++k) obs.push_back(random_observable(rng, n));
      t[3].observe(std::abs(nested_expectation(spec, obs) -
                            product_expectation(markov_state(spec, parties), obs)));
    });
    t[4].guard([&] {
      const std::size_t m = pick(rng, 2, 4);
      const ProbabilityVector r = random_probability(rng, m);
      const DensityOperator cloned = n_lift(LiftingTensor::ohya(m), r, parties);
      double worst = 0.0;
      for (std::size_t s = 1; s <= parties; ++s) {
        worst = std::max(worst, max_abs_diff(reduce(cloned, {s}).matrix(), diag_of(r)));
      }
      t[4].observe(worst);
    });
  }
}

ComplexMatrix robertson_closed_form(const ComplexMatrix& rho) {
  ComplexMatrix out(2, 2);
  out(0, 0) = 2.0 * rho(1, 1);
  out(1, 1) = 2.0 * rho(0, 0);
  out(0, 1) = rho(0, 1) + rho(1, 0);
  out(1, 0) = rho(0, 1) + rho(1, 0);
  return 0.5 * out;
}

void qlift_suite(Rng& rng, std::size_t trials, Trackers& t) {
  t.emplace_back("qcp-marginal-identity", 1e-10, "Tr_2 pi = I");
  t.emplace_back("nonlinear-first-marginal", 1e-10, "nonlinear lifting marginals");
  t.emplace_back("nonlinear-second-marginal", 1e-10, "nonlinear lifting marginals");
  t.emplace_back("compound-channel-roundtrip", 1e-8, "channel recovered from a compound state");
  t.emplace_back("qcp-chain-peeling", 1e-9, "trace peeling of composed QCP operators");
  t.emplace_back("qcp-chain-psd", 0.0, "composed QCP operators are positive", true);
  t.emplace_back("n-nonlinear-consistency", 1e-10, "Tr_N of the N-party lift");
  t.emplace_back("ohya-quantum-marginals", 1e-10, "quantum Ohya lifting marginals");
  t.emplace_back("robertson-closed-form", 1e-12, "lifting-assisted map is independent of omega");
  t.emplace_back("robertson-choi-min-eigenvalue", 1e-12, "Choi matrix eigenvalue -1/4");
  t.emplace_back("robertson-map-positive", 0.0, "Robertson map is positive", true);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t d = pick(rng, 2, 4);
    const LinearMap channel = random_unital_cp(rng, d, pick(rng, 1, 3));
    const DensityOperator rho = random_density(rng, d);
    t[0].guard([&] {
      const QcpOperator pi = qcp_from_channel(channel);
      t[0].observe(max_abs_diff(partial_trace(pi.op(), {1}).matrix(), eye(d)));
      const DensityOperator theta = nonlinear_lift(pi, rho);
      t[1].observe(max_abs_diff(reduce(theta, {1}).matrix(), rho.matrix()));
      t[2].observe(max_abs_diff(reduce(theta, {2}).matrix(),
                                channel.apply_dual(rho.matrix()).transpose()));
      const LinearMap back = channel_from_compound(theta, rho);
      double worst = 0.0;
      for (std::size_t k = 0; k < back.units().size(); ++k) {
        worst = std::max(worst, max_abs_diff(back.units()[k], channel.units()[k]));
      }
      t[3].observe(worst);
    });
    t[4].guard([&] {
      const std::size_t parties = pick(rng, 3, 4);
      std::vector<QcpOperator> pis;
      for (std::size_t k = 0; k + 1 < parties; ++k) {
        pis.push_back(qcp_from_channel(random_unital_cp(rng, 2, pick(rng, 1, 3))));
      }
      FactoredOperator chain = n_compose_qcp(pis);
      t[5].fail_if(!is_psd(chain.matrix()).psd);
      while (pis.size() > 1) {
        // Tracing the leftmost slot drops the last operator of the chain.
        const FactoredOperator peeled = trace_out(chain, {chain.parties()});
        pis.pop_back();
        chain = n_compose_qcp(pis);
        t[4].observe(max_abs_diff(peeled.matrix(), chain.matrix()));
        t[5].fail_if(!is_psd(chain.matrix()).psd);
      }
      t[4].observe(max_abs_diff(trace_out(chain, {2}).matrix(), eye(2)));
    });
    t[6].guard([&] {
      const QcpOperator pi = qcp_from_channel(channel);
      const std::size_t parties = pick(rng, 3, 4);
      const DensityOperator big = n_nonlinear_lift(pi, rho, parties);
      const DensityOperator small = parties == 3 ? nonlinear_lift(pi, rho)
                                                 : n_nonlinear_lift(pi, rho, parties - 1);
      t[6].observe(max_abs_diff(trace_out(big.op(), {parties}).matrix(), small.matrix()));
    });
    t[7].guard([&] {
      const std::size_t parties = pick(rng, 2, 4);
      const DensityOperator cloned = ohya_lift(rho, parties);
      double worst = 0.0;
      for (std::size_t s = 1; s <= parties; ++s) {
        worst = std::max(worst, max_abs_diff(reduce(cloned, {s}).matrix(), rho.matrix()));
      }
      t[7].observe(worst);
    });
    const DensityOperator omega = random_density(rng, 2);
    const DensityOperator rho2 = random_density(rng, 2);
    t[8].guard([&] {
      const LinearMap phi = lifting_assisted_map(robertson_map, omega, 2);
      t[8].observe(max_abs_diff(phi.apply(rho2.matrix()), robertson_closed_form(rho2.matrix())));
      const HermitianEigen eig = hermitian_eigen(choi_matrix(phi).matrix());
      t[9].observe(std::abs(eig.values.minCoeff() + 0.25));
    });
    t[10].guard([&] {
      const ComplexVector v = random_unitary(rng, 4).col(0);
      const ComplexMatrix image = robertson_map(v * v.adjoint());
      t[10].fail_if(!is_psd(image).psd);
    });
  }
}

void circulant_suite(Rng& rng, std::size_t trials, Trackers& t) {
  t.emplace_back("circulant-support", 0.0, "circulant decomposition support");
  t.emplace_back("partial-transpose-reconstruction", 1e-12, "Hadamard-product transpose formula");
  t.emplace_back("ppt-oracle-agreement", 0.0, "blockwise PPT test", true);
  t.emplace_back("circulant-lift-diagonal-dependence", 0.0, "lift depends on diag(rho) only");
  t.emplace_back("circulant-lift-trace", 1e-12, "circulant lifting is a state");
  t.emplace_back("isometry-agreement", 1e-12, "isometry form of the circulant lifting");
  t.emplace_back("isometry-unitality", 1e-12, "V*V = I");
  t.emplace_back("bell-spectrum-product", 1e-12, "Bell spectrum is p_m rho_nn");
  t.emplace_back("bell-reconstruction", 1e-12, "Bell diagonal lifting");
  t.emplace_back("bell-completeness", 1e-10, "Bell projectors resolve the identity");
  t.emplace_back("bell-orthogonality", 1e-10, "Tr(U_mn U_rs^dagger) = d delta");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t d = pick(rng, 2, 4);
    const CirculantSpec spec = random_circulant_spec(rng, d);
    t[0].guard([&] {
      const DensityOperator rho = build_circulant(spec);
      // (i, k) and (j, l) share a block iff k - i = l - j mod d.
      double worst = 0.0;
      for (std::size_t r = 0; r < d * d; ++r) {
        for (std::size_t c = 0; c < d * d; ++c) {
          const std::size_t ar = (r % d + d - r / d) % d;
          const std::size_t ac = (c % d + d - c / d) % d;
          if (ar != ac) {
            worst = std::max(worst, std::abs(rho.matrix()(static_cast<Eigen::Index>(r),
                                                          static_cast<Eigen::Index>(c))));
          }
        }
      }
      t[0].observe(worst);
      const FactoredOperator oracle = partial_transpose(rho.op(), 1);
      const FactoredOperator blocks = assemble_permuted_circulant(circulant_partial_transpose(spec));
      t[1].observe(max_abs_diff(blocks.matrix(), oracle.matrix()));
      t[2].fail_if(is_ppt_circulant(spec).ppt != is_psd(oracle.matrix()).psd);
    });
    const DensityOperator rho = random_density(rng, d);
    std::vector<ComplexMatrix> cs;
    for (std::size_t a = 0; a < d; ++a) cs.push_back(random_psd(rng, d, pick(rng, 1, d)));
    t[3].guard([&] {
      const ComplexMatrix diag = rho.matrix().diagonal().asDiagonal();
      const DensityOperator lifted = circulant_lift(cs, rho);
      t[3].observe(max_abs_diff(lifted.matrix(), circulant_lift(cs, DensityOperator(diag)).matrix()));
      t[4].observe(std::abs(lifted.matrix().trace() - 1.0));
    });
    t[5].guard([&] {
      std::vector<ComplexVector> cvecs;
      std::vector<ComplexMatrix> grams;
      for (std::size_t a = 0; a < d; ++a) {
        const ComplexVector c = random_unitary(rng, d).col(0);
        cvecs.push_back(c);
        grams.push_back(c * c.adjoint());
      }
      t[5].observe(max_abs_diff(circulant_lift_isometry(cvecs, rho).matrix(),
                                circulant_lift(grams, rho).matrix()));
      const ComplexMatrix v = lift_isometry(cvecs);
      t[6].observe(max_abs_diff(v.adjoint() * v, eye(d)));
    });
    const std::size_t b = pick(rng, 2, 3);
    t[7].guard([&] {
      const ProbabilityVector p = random_probability(rng, b);
      const DensityOperator sigma = random_density(rng, b);
      const BellLift lifted = bell_diagonal_lift(p, sigma);
      double worst = 0.0;
      for (std::size_t m = 0; m < b; ++m) {
        for (std::size_t n = 0; n < b; ++n) {
          const auto nn = static_cast<Eigen::Index>(n);
          worst = std::max(worst, std::abs(lifted.spectrum.weights()(static_cast<Eigen::Index>(m), nn) -
                                           p[m] * sigma.matrix()(nn, nn).real()));
        }
      }
      t[7].observe(worst);
      t[8].observe(max_abs_diff(bell_diagonal_state(lifted.spectrum).matrix(),
                                lifted.state.matrix()));
    });
    t[9].guard([&] {
      ComplexMatrix sum = ComplexMatrix::Zero(static_cast<Eigen::Index>(b * b),
                                              static_cast<Eigen::Index>(b * b));
      double worst = 0.0;
      for (std::size_t m = 0; m < b; ++m) {
        for (std::size_t n = 0; n < b; ++n) {
          sum += bell_state(m, n, b).matrix();
          const ComplexMatrix u = bell_unitary(m, n, b);
          for (std::size_t r = 0; r < b; ++r) {
            for (std::size_t s = 0; s < b; ++s) {
              const double expect = (m == r && n == s) ? static_cast<double>(b) : 0.0;
              worst = std::max(worst, std::abs((u * bell_unitary(r, s, b).adjoint()).trace() - expect));
            }
          }
        }
      }
      t[9].observe(max_abs_diff(sum, eye(b * b)));
      t[10].observe(worst);
    });
  }
}

using Suite = void (*)(Rng&, std::size_t, Trackers&);

const std::map<std::string, Suite>& suite_table() {
  static const std::map<std::string, Suite> table{{"matcore", matcore_suite},
                                                  {"classical", classical_suite},
                                                  {"clift", clift_suite},
                                                  {"qlift", qlift_suite},
                                                  {"circulant", circulant_suite}};
  return table;
}

std::vector<Check> run_suite(const std::string& name, const VerifyOptions& options) {
  // Each suite draws from its own stream so "all" reproduces single-suite runs.
  std::uint64_t salt = 0;
  for (char ch : name) salt = salt * 131 + static_cast<unsigned char>(ch);
  Rng rng(options.seed ^ salt);
  Trackers trackers;
  suite_table().at(name)(rng, options.trials, trackers);
  std::vector<Check> checks;
  for (const Tracker& tr : trackers) checks.push_back(tr.finish(options.tol));
  return checks;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names{"all", "matcore", "classical", "clift", "qlift",
                                              "circulant"};
  return names;
}

VerificationReport run_verification(const std::string& suite, const VerifyOptions& options) {
  VerificationReport report{suite, options.seed, options.trials, {}, std::nullopt};
  if (suite == "all") {
    for (const auto& [name, fn] : suite_table()) {
      for (Check c : run_suite(name, options)) {
        c.name = name + "/" + c.name;
        report.checks.push_back(std::move(c));
      }
    }
  } else if (suite_table().count(suite) != 0) {
    report.checks = run_suite(suite, options);
  } else {
    throw Error(Errc::kSchema, "unknown suite \"" + suite + "\"");
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  return report;
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", std::isfinite(c.measured) ? Json(c.measured) : Json(nullptr)},
                      {"tolerance", c.tolerance},
                      {"anchor", c.anchor}});
  }
  return Json{{"suite", report.suite},
              {"seed", report.seed},
              {"trials", report.trials},
              {"passed", report.passed()},
              {"checks", std::move(checks)},
              {"timestamp", report.timestamp ? Json(*report.timestamp) : Json(nullptr)}};
}

}  // namespace liftlab
