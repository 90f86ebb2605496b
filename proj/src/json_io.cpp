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

#include "liftlab/json_io.hpp"

#include <cmath>
#include <utility>

#include "liftlab/error.hpp"

namespace liftlab {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::kSchema, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) schema(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    schema(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing \"") + key + "\"");
  return j.at(key);
}

Complex entry(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  schema("matrix entry must be a number or [re, im]");
}

Json encode(double x) {
  // JSON has no NaN/Inf; constructors reject them before they get here.
  return x == 0.0 ? Json(0.0) : Json(x);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back(Json::array({encode(m(r, c).real()), encode(m(r, c).imag())}));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (j.is_array()) {
    const Eigen::MatrixXd real = real_matrix_from_json(j);
    return real.cast<Complex>();
  }
  const std::size_t rows = count(j, "rows");
  const std::size_t cols = count(j, "cols");
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != rows * cols) {
    schema("\"data\" must hold rows * cols entries");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry(data[r * cols + c]);
    }
  }
  if (!m.allFinite()) throw Error(Errc::kNonFinite, "matrix entry not finite");
  return m;
}

Json real_matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd real_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) schema("expected a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) schema("rows must be nonempty arrays");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) schema("rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = number(j[r][c], "entry");
    }
  }
  return m;
}

Json operator_to_json(const FactoredOperator& op) {
  Json j = matrix_to_json(op.matrix());
  j["dims"] = op.dims();
  return j;
}

FactoredOperator operator_from_json(const Json& j) {
  ComplexMatrix m = matrix_from_json(j);
  if (j.is_object() && j.contains("dims")) {
    const Json& dims = j.at("dims");
    if (!dims.is_array()) schema("\"dims\" must be an array");
    Dims out;
    for (const Json& d : dims) {
      if (!d.is_number_integer() || d.get<long long>() <= 0) schema("dims must be positive integers");
      out.push_back(d.get<std::size_t>());
    }
    return FactoredOperator(std::move(m), std::move(out));
  }
  return FactoredOperator(std::move(m));
}

std::vector<double> real_vector_from_json(const Json& j) {
  if (!j.is_array()) schema("expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(number(x, "vector entry"));
  return out;
}

Json probability_to_json(const ProbabilityVector& p) {
  Json out = Json::array();
  for (double w : p.weights()) out.push_back(encode(w));
  return out;
}

ProbabilityVector probability_from_json(const Json& j) {
  return ProbabilityVector(real_vector_from_json(j));
}

Json channel_to_json(const StochasticChannel& c) { return real_matrix_to_json(c.weights()); }

StochasticChannel channel_from_json(const Json& j) {
  return StochasticChannel(real_matrix_from_json(j));
}

Json permutation_to_json(const Permutation& p) { return Json(p.images()); }

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) schema("permutation must be an array of images");
  std::vector<std::size_t> images;
  for (const Json& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      schema("permutation images must be nonnegative integers");
    }
    images.push_back(x.get<std::size_t>());
  }
  return Permutation(std::move(images));
}

Json kraus_to_json(const std::vector<KrausOperator>& kraus) {
  Json out = Json::array();
  for (const KrausOperator& k : kraus) {
    out.push_back({{"input", k.input}, {"output", k.output}, {"op", matrix_to_json(k.op)}});
  }
  return out;
}

Json tensor_to_json(const LiftingTensor& t) {
  return Json{{"n1", t.n1()}, {"n2", t.n2()}, {"data", t.data()}};
}

LiftingTensor tensor_from_json(const Json& j) {
  return LiftingTensor(count(j, "n1"), count(j, "n2"), real_vector_from_json(field(j, "data")));
}

Json markov_to_json(const MarkovSpec& m) {
  return Json{{"conditional", real_matrix_to_json(m.conditional())},
              {"initial", probability_to_json(m.initial())}};
}

MarkovSpec markov_from_json(const Json& j) {
  return MarkovSpec(real_matrix_from_json(field(j, "conditional")),
                    probability_from_json(field(j, "initial")));
}

Json linear_map_to_json(const LinearMap& m) {
  Json units = Json::array();
  for (const ComplexMatrix& u : m.units()) units.push_back(matrix_to_json(u));
  Json out{{"d", m.d_in()}, {"units", std::move(units)}};
  if (m.d_out() != m.d_in()) out["d_out"] = m.d_out();
  return out;
}

LinearMap linear_map_from_json(const Json& j) {
  const std::size_t d = count(j, "d");
  const std::size_t d_out = j.contains("d_out") ? count(j, "d_out") : d;
  const Json& units = field(j, "units");
  if (!units.is_array()) schema("\"units\" must be an array of matrices");
  std::vector<ComplexMatrix> images;
  for (const Json& u : units) images.push_back(matrix_from_json(u));
  return LinearMap(d, d_out, std::move(images));
}

Json circulant_to_json(const CirculantSpec& s) {
  Json blocks = Json::array();
  for (const ComplexMatrix& b : s.blocks()) blocks.push_back(matrix_to_json(b));
  return Json{{"d", s.d()}, {"blocks", std::move(blocks)}};
}

CirculantSpec circulant_from_json(const Json& j) {
  const std::size_t d = count(j, "d");
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array() || blocks.size() != d) schema("\"blocks\" must hold d matrices");
  std::vector<ComplexMatrix> out;
  for (const Json& b : blocks) out.push_back(matrix_from_json(b));
  return CirculantSpec(std::move(out));
}

Json bell_spectrum_to_json(const BellSpectrum& s) {
  return Json{{"d", s.d()}, {"p", real_matrix_to_json(s.weights())}};
}

BellSpectrum bell_spectrum_from_json(const Json& j) {
  const std::size_t d = count(j, "d");
  Eigen::MatrixXd p = real_matrix_from_json(field(j, "p"));
  if (static_cast<std::size_t>(p.rows()) != d) schema("\"p\" must be d x d");
  return BellSpectrum(std::move(p));
}

}  // namespace liftlab
