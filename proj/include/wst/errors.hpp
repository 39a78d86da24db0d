// Copyright 2026 The wst Authors
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

namespace wst {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in different fields / conductors / groups.
class Mismatch : public Error {
 public:
  using Error::Error;
};

/// Division by zero or inversion of a singular matrix.
class Singular : public Error {
 public:
  using Error::Error;
};

/// Group order exceeds the configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal construction failed a self-check (wrong generators, failed
/// orthogonality, inconsistent assembly, ...). Always a hard failure.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace wst
