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

#ifndef DBW_NTRIPLES_HPP_
#define DBW_NTRIPLES_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "dbw/triple.hpp"

namespace dbw {

// Escapes a literal body: backslash, quote, newline, carriage return,
// tab; other control characters become \u00XX.
std::string EscapeNtLiteral(std::string_view s);

// Inverse of EscapeNtLiteral (plus \uXXXX/\UXXXXXXXX decoding). nullopt
// on bad escapes.
std::optional<std::string> UnescapeNtLiteral(std::string_view s);

// Cheap structural validity check: absolute IRI, no spaces, no control
// characters, none of <>"{}|^`\.
bool IsValidIri(std::string_view iri);

void AppendTerm(std::string& out, const Term& term);

// One N-Triples statement without the trailing newline:
// `<s> <p> <o> .`
std::string SerializeTriple(const Triple& t);

struct ParsedLine {
  std::string subject;
  std::string predicate;
  Term object;
};

// Parses one N-Triples line written by this library (no blank nodes,
// no comments). Returns nullopt for empty lines and anything malformed.
std::optional<ParsedLine> ParseNtLine(std::string_view line);

}  // namespace dbw

#endif  // DBW_NTRIPLES_HPP_
