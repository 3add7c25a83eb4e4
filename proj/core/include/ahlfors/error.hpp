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

#ifndef AHLFORS_ERROR_HPP_
#define AHLFORS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ahlfors {

enum class ErrorKind {
  kValidation,
  kDomain,
  kAccuracy,
  kConditioning,
  kSolver,
  kGeometry,
  kDegeneracy,
  kAdmissibility,
  kStatus,
  kFormat,
  kInconclusive,
};

const char* error_kind_name(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ahlfors

#endif  // AHLFORS_ERROR_HPP_
