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

#ifndef DBW_TESTS_NT_ORACLE_HPP_
#define DBW_TESTS_NT_ORACLE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dbw_test {

// Independent N-Triples reader used as the round-trip oracle. It is a
// strict character-level recognizer of the W3C N-Triples grammar
// (IRIREF, STRING_LITERAL_QUOTE, LANGTAG, no blank nodes) and shares no
// code with the serializer under test.
struct OracleTerm {
  enum class Kind { kIri, kLiteral, kLangLiteral, kTypedLiteral };
  Kind kind = Kind::kIri;
  std::string value;     // IRI or literal body (unescaped)
  std::string qualifier; // language tag or datatype IRI
  bool operator==(const OracleTerm&) const = default;
};

struct OracleTriple {
  OracleTerm subject;
  OracleTerm predicate;
  OracleTerm object;
  bool operator==(const OracleTriple&) const = default;
};

struct OracleResult {
  std::vector<OracleTriple> triples;
  std::vector<std::string> errors;  // one entry per offending line
};

std::optional<OracleTriple> OracleParseLine(std::string_view line);

// Parses a whole document (text, one statement per line).
OracleResult OracleParseDocument(std::string_view text);

}  // namespace dbw_test

#endif  // DBW_TESTS_NT_ORACLE_HPP_
