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

#include <stdexcept>
#include <string>

namespace liftlab {

enum class Errc {
  kSchema,
  kNonFinite,
  kDimensionMismatch,
  kSizeMismatch,
  kInvalidFactor,
  kIndexOutOfRange,
  kNotHermitian,
  kNotPsd,
  kNotAState,
  kNegativeEntry,
  kNotUnital,
  kNotCp,
  kNotFaithful,
  kNotCompatible,
  kNotNormalized,
  kBlockNotPsd,
  kTraceNotOne,
  kMapNotPositive,
};

/// Stable identifier, e.g. "NotPSD".
const char* errc_name(Errc code) noexcept;

/// True for malformed input (shape, schema, index range); false for
/// violations of a mathematical precondition such as positivity.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace liftlab
