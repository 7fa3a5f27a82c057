// Copyright 2026 The polqpdf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace polqpdf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad dimension, non-orthonormal
/// basis, out-of-range order parameter, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Both amplitudes of a pair vanish, so no polarization direction exists.
class DegenerateInputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The index of polarization would be infinite (x amplitude is zero).
class PoleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// s = 1 makes the 1/(1-s) factors of the kernel diverge.
class SingularOrderError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The Fock truncation discards more weight than allowed.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, int required_dim)
      : Error(what), required_dim_(required_dim) {}

  /// Smallest per-mode dimension that would have satisfied the check, or 0
  /// when not applicable.
  int required_dim() const noexcept { return required_dim_; }

 private:
  int required_dim_;
};

}  // namespace polqpdf
