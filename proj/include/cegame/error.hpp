// Copyright 2026 The cegame Authors.
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

#ifndef CEGAME_ERROR_HPP_
#define CEGAME_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cegame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance text or schema violations.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input outside an operation's domain: non-SME players in a
// cooperative model, size guards, rate rules without complementary exporters.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A checked structural property failed; indicates a solver bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace cegame

#endif  // CEGAME_ERROR_HPP_
