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

// Randomized invariant suites behind `liftlab verify`. Each check reports
// the worst residual over all trials; it passes iff measured <= tolerance.
// Count-type checks (measured = number of failing trials) use tolerance 0
// and ignore a --tol override.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftlab/json_io.hpp"

namespace liftlab {

struct Check {
  std::string name;
  bool passed;
  double measured;  // +inf if a trial threw
  double tolerance;
  std::string anchor;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed;
  std::size_t trials;
  std::vector<Check> checks;  // sorted by name
  std::optional<std::string> timestamp;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::optional<double> tol;
};

/// "matcore", "classical", "clift", "qlift", "circulant", and "all".
const std::vector<std::string>& verification_suites();

/// Throws kSchema for an unknown suite name.
VerificationReport run_verification(const std::string& suite, const VerifyOptions& options);

Json report_to_json(const VerificationReport& report);

}  // namespace liftlab
