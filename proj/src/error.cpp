// Copyright 2026 The equimot Authors
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

#include "equimot/error.hpp"

namespace equimot {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_group: return "invalid group";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::non_invertible_denominator: return "non-invertible denominator";
    case ErrorCode::uncovered_generator: return "uncovered generator";
    case ErrorCode::unsupported_scenario: return "unsupported scenario";
    case ErrorCode::too_large: return "enumeration too large";
    case ErrorCode::inconsistent_counts: return "inconsistent counts";
    case ErrorCode::singular_curve: return "singular curve";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::parse_error: return "parse error";
  }
  return "unknown";
}

}  // namespace equimot
