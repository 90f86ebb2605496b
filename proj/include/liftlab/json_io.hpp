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

#pragma once

// JSON encodings. Complex matrices are {"rows", "cols", "data"} with data a
// row-major array of [re, im] pairs; a bare number is accepted for a real
// entry, and a bare array of real rows is accepted for a real matrix.
// Malformed input throws Error(kSchema).

#include <string>
#include <vector>

#include <json.hpp>

#include "liftlab/circulant.hpp"
#include "liftlab/classical.hpp"
#include "liftlab/clift.hpp"
#include "liftlab/matcore.hpp"
#include "liftlab/qlift.hpp"

namespace liftlab {

using Json = nlohmann::json;

/// Parses text, throwing kSchema on syntax errors.
Json parse_json(const std::string& text);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json real_matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd real_matrix_from_json(const Json& j);

/// A matrix object with an extra "dims" array.
Json operator_to_json(const FactoredOperator& op);
/// "dims" is optional; without it the operator has one factor.
FactoredOperator operator_from_json(const Json& j);

std::vector<double> real_vector_from_json(const Json& j);

Json probability_to_json(const ProbabilityVector& p);
ProbabilityVector probability_from_json(const Json& j);

Json channel_to_json(const StochasticChannel& c);
StochasticChannel channel_from_json(const Json& j);

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json kraus_to_json(const std::vector<KrausOperator>& kraus);

/// {"n1", "n2", "data"} with data flat in (i, j, k) order.
Json tensor_to_json(const LiftingTensor& t);
LiftingTensor tensor_from_json(const Json& j);

/// {"conditional": rows of p_{a|b}, "initial": [...]}.
Json markov_to_json(const MarkovSpec& m);
MarkovSpec markov_from_json(const Json& j);

/// {"d": d, "units": [d^2 matrices]} with units in (i, j) row-major order.
/// An optional "d_out" gives a different output dimension.
Json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const Json& j);

/// {"d": d, "blocks": [d matrices]}.
Json circulant_to_json(const CirculantSpec& s);
CirculantSpec circulant_from_json(const Json& j);

/// {"d": d, "p": rows indexed by m}.
Json bell_spectrum_to_json(const BellSpectrum& s);
BellSpectrum bell_spectrum_from_json(const Json& j);

}  // namespace liftlab
