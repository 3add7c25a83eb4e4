// Copyright 2026 The ahlfors Authors
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

#include "ahlfors/error.hpp"

namespace ahlfors {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation: return "validation error";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kAccuracy: return "accuracy error";
    case ErrorKind::kConditioning: return "conditioning error";
    case ErrorKind::kSolver: return "solver error";
    case ErrorKind::kGeometry: return "geometry error";
    case ErrorKind::kDegeneracy: return "degeneracy error";
    case ErrorKind::kAdmissibility: return "admissibility error";
    case ErrorKind::kStatus: return "status error";
    case ErrorKind::kFormat: return "format error";
    case ErrorKind::kInconclusive: return "inconclusive";
  }
  return "error";
}

}  // namespace ahlfors
