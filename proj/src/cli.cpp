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

#include "liftlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "liftlab/circulant.hpp"
#include "liftlab/classical.hpp"
#include "liftlab/clift.hpp"
#include "liftlab/error.hpp"
#include "liftlab/json_io.hpp"
#include "liftlab/qlift.hpp"
#include "liftlab/verify.hpp"

namespace liftlab {

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::kSchema, what); }

// Inline JSON, or the contents of a file for "@path".
std::string slurp(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) usage("cannot read " + value.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load(const std::string& value) { return parse_json(slurp(value)); }

bool is_identity_word(const std::string& s) { return s == "I" || s == "identity"; }

// A matrix JSON, a real array (the diagonal), or "diag(a, b, ...)".
ComplexMatrix load_rho_matrix(const std::string& value) {
  std::string text = slurp(value);
  if (text.rfind("diag(", 0) == 0) {
    if (text.back() != ')') usage("diag(...) is missing ')'");
    text = "[" + text.substr(5, text.size() - 6) + "]";
  }
  const Json j = parse_json(text);
  if (j.is_array() && (j.empty() || j[0].is_number())) {
    return diagonal_operator(real_vector_from_json(j));
  }
  return operator_from_json(j).matrix();
}

DensityOperator load_rho(const std::string& value) {
  const std::string text = slurp(value);
  if (text.rfind("diag(", 0) != 0) {
    const Json j = parse_json(text);
    if (j.is_object() && j.contains("dims")) return DensityOperator(operator_from_json(j));
  }
  return DensityOperator(load_rho_matrix(value));
}

LinearMap load_map(const std::string& value, std::size_t d) {
  if (is_identity_word(value)) return LinearMap::identity(d);
  return linear_map_from_json(load(value));
}

std::vector<Json> marginals(const DensityOperator& state) {
  std::vector<Json> out;
  for (std::size_t s = state.op().parties(); s >= 1; --s) {
    out.push_back(operator_to_json(reduce(state, {s}).op()));
  }
  return out;
}

struct Inputs {
  std::string matrix, p, perm, sigma, tensor, rho, map, spec, cs, observable;
  std::size_t n = 0;
  std::size_t parties = 2;
  bool verify = false;
};

int cmd_channel(const std::string& sub, const Inputs& in, std::ostream& out) {
  Json result;
  int code = kExitOk;
  if (sub == "dilate") {
    if (in.perm.empty() || in.sigma.empty()) usage("dilate needs --perm and --sigma");
    const Permutation perm = permutation_from_json(load(in.perm));
    const ProbabilityVector sigma = probability_from_json(load(in.sigma));
    if (in.n != 0 && in.n != sigma.size()) usage("--n disagrees with --sigma");
    const StochasticChannel ch = channel_from_dilation(perm, sigma);
    result = {{"channel", channel_to_json(ch)},
              {"doubly_stochastic", ch.is_doubly_stochastic()}};
  } else {
    if (in.matrix.empty()) usage(sub + " needs --matrix");
    const bool identity = is_identity_word(in.matrix);
    if (sub == "kraus") {
      if (identity && in.n == 0) usage("--matrix I needs --n");
      const StochasticChannel ch = identity ? StochasticChannel::identity(in.n)
                                            : channel_from_json(load(in.matrix));
      const std::vector<KrausOperator> kraus = kraus_from_channel(ch);
      result = {{"kraus", kraus_to_json(kraus)}};
      if (in.verify) {
        // Compare the two actions on every point mass.
        double worst = 0.0;
        for (std::size_t i = 0; i < ch.inputs(); ++i) {
          const ProbabilityVector e = ProbabilityVector::point(ch.inputs(), i);
          worst = std::max(worst, max_abs_diff(apply_kraus(kraus, diagonal_operator(e.weights())),
                                               diagonal_operator(ch.act(e.weights()))));
        }
        const bool ok = worst <= 1e-12;
        result["verify"] = {{"residual", worst}, {"tolerance", 1e-12}, {"passed", ok}};
        if (!ok) code = kExitCheckFailed;
      }
    } else if (sub == "apply") {
      if (!in.p.empty() == !in.observable.empty()) usage("apply needs exactly one of --p, --observable");
      if (!in.p.empty()) {
        const ProbabilityVector p = probability_from_json(load(in.p));
        const StochasticChannel ch = identity ? StochasticChannel::identity(p.size())
                                              : channel_from_json(load(in.matrix));
        result = {{"state", probability_to_json(apply_to_state(ch, p))}};
      } else {
        const std::vector<double> a = real_vector_from_json(load(in.observable));
        const StochasticChannel ch = identity ? StochasticChannel::identity(a.size())
                                              : channel_from_json(load(in.matrix));
        result = {{"observable", apply_to_observable(ch, a)}};
      }
    } else {
      usage("unknown channel subcommand " + sub);
    }
  }
  out << result.dump(2) << "\n";
  return code;
}

int cmd_lift(const std::string& sub, const Inputs& in, std::ostream& out) {
  Json result;
  if (sub == "classical") {
    if (in.tensor.empty() || in.p.empty()) usage("classical needs --tensor and --p");
    const DensityOperator state =
        lift(tensor_from_json(load(in.tensor)), probability_from_json(load(in.p)));
    result = {{"state", operator_to_json(state.op())}};
  } else if (sub == "ohya") {
    if (in.rho.empty()) usage("ohya needs --rho");
    const DensityOperator state = ohya_lift(load_rho(in.rho), in.parties);
    result = {{"state", operator_to_json(state.op())}, {"marginals", marginals(state)}};
  } else if (sub == "qcp") {
    if (in.map.empty()) usage("qcp needs --map");
    if (is_identity_word(in.map) && in.n == 0) usage("--map I needs --n");
    const QcpOperator pi = qcp_from_channel(load_map(in.map, in.n));
    result = {{"qcp", operator_to_json(pi.op())}};
  } else if (sub == "nonlinear" || sub == "nlift") {
    if (sub == "nlift" && !in.tensor.empty()) {
      if (in.p.empty()) usage("nlift with --tensor needs --p");
      const DensityOperator state =
          n_lift(tensor_from_json(load(in.tensor)), probability_from_json(load(in.p)), in.parties);
      result = {{"state", operator_to_json(state.op())}, {"marginals", marginals(state)}};
    } else {
      if (in.map.empty() || in.rho.empty()) usage(sub + " needs --map and --rho");
      const DensityOperator rho = load_rho(in.rho);
      const QcpOperator pi = qcp_from_channel(load_map(in.map, rho.dim()));
      const DensityOperator state = sub == "nonlinear" ? nonlinear_lift(pi, rho)
                                                       : n_nonlinear_lift(pi, rho, in.parties);
      result = {{"state", operator_to_json(state.op())}, {"marginals", marginals(state)}};
    }
  } else if (sub == "circulant") {
    if (!in.spec.empty()) {
      const CirculantSpec spec = circulant_from_json(load(in.spec));
      const PptReport ppt = is_ppt_circulant(spec);
      Json blocks = Json::array();
      for (const ComplexMatrix& b : circulant_partial_transpose(spec)) {
        blocks.push_back(matrix_to_json(b));
      }
      result = {{"state", operator_to_json(build_circulant(spec).op())},
                {"ppt", ppt.ppt},
                {"block_min_eigenvalues", ppt.block_min_eigenvalues},
                {"partial_transpose_blocks", std::move(blocks)}};
    } else {
      if (in.cs.empty() || in.rho.empty()) usage("circulant needs --spec, or --cs and --rho");
      const Json cs = load(in.cs);
      if (!cs.is_array()) usage("--cs must be an array of matrices");
      std::vector<ComplexMatrix> blocks;
      for (const Json& c : cs) blocks.push_back(matrix_from_json(c));
      const DensityOperator state = circulant_lift(blocks, load_rho(in.rho));
      result = {{"state", operator_to_json(state.op())}};
    }
  } else if (sub == "bell") {
    if (in.p.empty() || in.rho.empty()) usage("bell needs --p and --rho");
    const BellLift lifted =
        bell_diagonal_lift(probability_from_json(load(in.p)), load_rho(in.rho));
    result = {{"state", operator_to_json(lifted.state.op())},
              {"spectrum", bell_spectrum_to_json(lifted.spectrum)}};
  } else {
    usage("unknown lift subcommand " + sub);
  }
  out << result.dump(2) << "\n";
  return kExitOk;
}

int cmd_teleport(const Inputs& in, std::ostream& out) {
  if (in.p.empty() || in.perm.empty()) usage("teleport needs --p and --perm");
  const ProbabilityVector p = probability_from_json(load(in.p));
  const Permutation perm = permutation_from_json(load(in.perm));
  const TeleportResult res = classical_teleport(p, perm);
  const FactoredOperator bob = teleport_bob_operator(p, perm);
  std::vector<double> bob_diag;
  for (Eigen::Index i = 0; i < bob.matrix().rows(); ++i) bob_diag.push_back(bob.matrix()(i, i).real());
  const bool recovered = res.corrected.weights() == p.weights();
  out << Json{{"rho_a", probability_to_json(p)},
              {"p_pi", operator_to_json(max_correlated_state(perm).op())},
              {"bob_state", probability_to_json(res.bob_state)},
              {"bob_operator_diagonal", bob_diag},
              {"corrected", probability_to_json(res.corrected)},
              {"recovered", recovered}}
             .dump(2)
      << "\n";
  return recovered ? kExitOk : kExitCheckFailed;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

int cmd_verify(const std::string& suite, const std::optional<std::uint64_t>& seed,
               std::size_t trials, const std::optional<double>& tol, const std::string& path,
               bool stamp, std::ostream& out) {
  VerifyOptions options;
  options.trials = trials;
  options.tol = tol;
  if (seed) {
    options.seed = *seed;
  } else if (const char* env = std::getenv("LIFTLAB_SEED")) {
    try {
      std::size_t used = 0;
      options.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      usage(std::string("LIFTLAB_SEED is not an unsigned integer: ") + env);
    }
  }
  VerificationReport report = run_verification(suite, options);
  if (stamp) report.timestamp = utc_now();
  const std::string text = report_to_json(report).dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
  } else {
    std::ofstream file(path);
    if (!file) usage("cannot write " + path);
    file << text;
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--matrix", in.matrix, "stochastic matrix (rows = inputs), or I");
  cmd->add_option("--p", in.p, "probability vector");
  cmd->add_option("--perm", in.perm, "permutation images");
  cmd->add_option("--sigma", in.sigma, "ancilla distribution");
  cmd->add_option("--tensor", in.tensor, "lifting tensor");
  cmd->add_option("--rho", in.rho, "state: matrix JSON, real diagonal, or diag(...)");
  cmd->add_option("--map", in.map, "linear map JSON, or I");
  cmd->add_option("--spec", in.spec, "circulant spec");
  cmd->add_option("--cs", in.cs, "array of d blocks c^(alpha)");
  cmd->add_option("--observable", in.observable, "real observable");
  cmd->add_option("--n", in.n, "dimension for identity shorthands");
  cmd->add_option("--parties", in.parties, "number of parties")->check(CLI::PositiveNumber);
  cmd->add_flag("--verify", in.verify, "self-check the output");
}

void report_error(const Error& e, std::ostream& err) {
  err << Json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifting constructions for classical and quantum states", "liftlab"};
  app.require_subcommand(1);

  Inputs in;
  std::string channel_sub, lift_sub, suite = "all", out_path;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100;
  std::optional<double> tol;
  bool stamp = false;

  CLI::App* channel = app.add_subcommand("channel", "classical channels");
  channel->add_option("action", channel_sub, "kraus | dilate | apply")
      ->required()
      ->check(CLI::IsMember({"kraus", "dilate", "apply"}));
  add_inputs(channel, in);

  CLI::App* lift_cmd = app.add_subcommand("lift", "liftings");
  lift_cmd->add_option("kind", lift_sub, "classical | ohya | qcp | nonlinear | circulant | bell | nlift")
      ->required()
      ->check(CLI::IsMember({"classical", "ohya", "qcp", "nonlinear", "circulant", "bell", "nlift"}));
  add_inputs(lift_cmd, in);

  CLI::App* verify = app.add_subcommand("verify", "randomized invariant suites");
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(verification_suites()));
  verify->add_option("--seed", seed, "RNG seed (default: $LIFTLAB_SEED, else 0)");
  verify->add_option("--trials", trials, "trials per check")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "override residual tolerances")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", out_path, "report path (default stdout)");
  verify->add_flag("--stamp", stamp, "record a UTC timestamp in the report");

  CLI::App* teleport = app.add_subcommand("teleport", "classical teleportation transcript");
  add_inputs(teleport, in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*channel) return cmd_channel(channel_sub, in, out);
    if (*lift_cmd) return cmd_lift(lift_sub, in, out);
    if (*verify) return cmd_verify(suite, seed, trials, tol, out_path, stamp, out);
    return cmd_teleport(in, out);
  } catch (const Error& e) {
    report_error(e, err);
    return is_input_error(e.code()) ? kExitUsage : kExitMath;
  } catch (const Json::exception& e) {
    report_error(Error(Errc::kSchema, e.what()), err);
    return kExitUsage;
  }
}

}  // namespace liftlab
