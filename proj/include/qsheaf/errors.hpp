/*
   Copyright 2026 The qsheaf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace qsheaf {

/// Bad arguments to an operation (precondition violations).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A presentation matrix failed its validity gates.
class InvalidPresentation : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// Malformed text or JSON input.
class ParseError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// An enumeration or sampling budget was exhausted.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computation contradicted a structural statement it relies on
/// (e.g. an unsolvable syzygy system on the domain where it must be solvable).
class LemmaViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace qsheaf
