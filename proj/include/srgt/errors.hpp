// Copyright 2026 The SRGT Authors
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

#ifndef SRGT_ERRORS_HPP_
#define SRGT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace srgt {

// Base class for every error raised by the library. `code()` is a stable
// machine-readable tag; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Input documents (game files, type-space files, strategy files) that do not
// parse or violate a format invariant. Mapped to exit code 2 by the CLI.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error("parse_error", message) {}
};

class DifferentActionSets : public Error {
 public:
  explicit DifferentActionSets(const std::string& message)
      : Error("different_action_sets", message) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& message)
      : Error("dimension_mismatch", message) {}
};

class NotTwoPlayers : public Error {
 public:
  explicit NotTwoPlayers(const std::string& message)
      : Error("not_two_players", message) {}
};

class TypeSetsDiffer : public Error {
 public:
  explicit TypeSetsDiffer(const std::string& message)
      : Error("type_sets_differ", message) {}
};

class UnknownType : public Error {
 public:
  explicit UnknownType(const std::string& message)
      : Error("unknown_type", message) {}
};

class ModeMismatch : public Error {
 public:
  explicit ModeMismatch(const std::string& message)
      : Error("mode_mismatch", message) {}
};

class BadCoordinate : public Error {
 public:
  explicit BadCoordinate(const std::string& message)
      : Error("bad_coordinate", message) {}
};

class NotAPartition : public Error {
 public:
  explicit NotAPartition(const std::string& message)
      : Error("not_a_partition", message) {}
};

}  // namespace srgt

#endif  // SRGT_ERRORS_HPP_
