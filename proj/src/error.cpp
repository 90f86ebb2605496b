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

#include "liftlab/error.hpp"

namespace liftlab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kSchema: return "Schema";
    case Errc::kNonFinite: return "NonFinite";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kInvalidFactor: return "InvalidFactor";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kNotHermitian: return "NotHermitian";
    case Errc::kNotPsd: return "NotPSD";
    case Errc::kNotAState: return "NotAState";
    case Errc::kNegativeEntry: return "NegativeEntry";
    case Errc::kNotUnital: return "NotUnital";
    case Errc::kNotCp: return "NotCP";
    case Errc::kNotFaithful: return "NotFaithful";
    case Errc::kNotCompatible: return "NotCompatible";
    case Errc::kNotNormalized: return "NotNormalized";
    case Errc::kBlockNotPsd: return "BlockNotPSD";
    case Errc::kTraceNotOne: return "TraceNotOne";
    case Errc::kMapNotPositive: return "MapNotPositive";
  }
  return "Unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::kSchema:
    case Errc::kNonFinite:
    case Errc::kDimensionMismatch:
    case Errc::kSizeMismatch:
    case Errc::kInvalidFactor:
    case Errc::kIndexOutOfRange:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

}  // namespace liftlab
