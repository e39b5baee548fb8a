// Copyright 2026 The qmm Authors
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

namespace qmm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions of the operands do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a value precondition (not Hermitian, not PSD, not prime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A family of effects or Kraus operators fails to sum to the identity.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// The fidelity of a state pair is below the exclusion band of a ratio.
class NearOrthogonalError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A document could not be parsed into a library object.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A built-in reproduction found an identity that does not hold.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qmm
