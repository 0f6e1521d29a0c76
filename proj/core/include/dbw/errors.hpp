// Copyright 2026 The DBW Authors
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

#ifndef DBW_ERRORS_HPP_
#define DBW_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dbw {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unrecoverable I/O problem (open/read/write/decompress failure).
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid ontology or mapping configuration input. Carries the 1-based
// line number when known, 0 otherwise.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The subclass graph declared in the ontology source contains a cycle.
class CyclicHierarchyError : public Error {
 public:
  explicit CyclicHierarchyError(const std::string& member)
      : Error("cyclic class hierarchy involving " + member), member_(member) {}
  const std::string& member() const { return member_; }

 private:
  std::string member_;
};

// A value transformation names a `$` function that does not exist.
class UnknownFunctionError : public Error {
 public:
  explicit UnknownFunctionError(const std::string& name)
      : Error("unknown mapping function $" + name) {}
};

// Invalid run configuration (missing files, bad worker count, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A validate/stats run did not find the expected prior extraction output.
class MissingDatasetError : public Error {
 public:
  using Error::Error;
};

}  // namespace dbw

#endif  // DBW_ERRORS_HPP_
