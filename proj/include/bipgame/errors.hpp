// Copyright 2026 The bipgame Authors
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

#ifndef BIPGAME_ERRORS_HPP
#define BIPGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bipgame {

/// Base of every error raised by the library. `exit_code()` is the status the
/// command-line front end reports for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
  virtual const char* kind() const noexcept = 0;
};

/// Malformed or inconsistent input: unknown node, bad rational, t = 0 where a
/// positive horizon is required, allocation/network mismatch.
class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
  const char* kind() const noexcept override { return "input"; }
};

/// The attenuation factor is outside the convergence interval of the coalition
/// (or network) the request refers to.
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
  const char* kind() const noexcept override { return "domain"; }
};

/// The request exceeds an enumeration or integer-width bound.
class CapacityError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
  const char* kind() const noexcept override { return "capacity"; }
};

}  // namespace bipgame

#endif  // BIPGAME_ERRORS_HPP
