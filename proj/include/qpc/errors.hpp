// Copyright 2026 The qpc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPC_ERRORS_HPP
#define QPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpc {

/// Which contract an input violated.
enum class ErrorKind {
  Dimension,
  NotFinite,
  NotHermitian,
  NotSymmetric,
  Trace,
  NotPositive,
  NotNormalized,
  NotLeftUnitary,
  Domain,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Raised when an input fails a precondition or a type invariant.
/// `magnitude()` carries the size of the violation where one is meaningful
/// (e.g. max |M - M^dagger| for a non-hermitian matrix), otherwise 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        magnitude_(magnitude) {}

  ErrorKind kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorKind kind_;
  double magnitude_;
};

}  // namespace qpc

#endif  // QPC_ERRORS_HPP
