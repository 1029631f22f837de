// Copyright 2026 The demikit Authors.
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

namespace demikit {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that does not have the required shape (wrong table length,
// rho(empty) != 0, mask bits outside the ground set, bad JSON).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// A well-formed argument outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Reaching this is a bug or a broken
// identity, never a user error.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A substitution or expansion that would leave the Laurent ring.
class UnsupportedSubstitution : public Error {
 public:
  using Error::Error;
};

}  // namespace demikit
