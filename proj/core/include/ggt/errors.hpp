// Copyright 2026 The ggt Authors
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

#ifndef GGT_ERRORS_HPP_
#define GGT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ggt {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid construction parameters (d = 0, n <= 1, unknown group spec, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A vertex cap or node budget was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Checked fixed-width arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An element or vertex lies outside the materialized domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A word length could not be resolved within the available radius.
class EnlargeBallError : public Error {
 public:
  using Error::Error;
};

// Generator images do not satisfy the relators of the acting group.
class HomomorphismError : public Error {
 public:
  using Error::Error;
};

// A claimed action has a nonidentity element with a fixed point.
class FreenessError : public Error {
 public:
  using Error::Error;
};

// An action table lists two different images for the same (s, x).
class InconsistentTableError : public Error {
 public:
  using Error::Error;
};

}  // namespace ggt

#endif  // GGT_ERRORS_HPP_
