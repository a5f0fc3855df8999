// Copyright 2026 The oomkit Authors.
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

namespace oom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed model file or textual argument (JSON, word, cylinder syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The model violates an OOM/HMM invariant (negative probability,
/// non-stochastic rows, non-stationary initial state, ...).
class InvalidModel : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

/// An enumeration or lift would exceed its configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation that needs P(w) > 0 was handed a zero-probability word.
class ZeroProbability : public Error {
 public:
  using Error::Error;
};

/// Precondition violation on an argument that is not a model or a word.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace oom
