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

#ifndef DBW_VALUES_HPP_
#define DBW_VALUES_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "dbw/entity.hpp"
#include "dbw/triple.hpp"

namespace dbw {

// Shortest round-tripping decimal form of a double ("52.51667").
std::string FormatDouble(double d);

// Converts a Wikidata time value into (lexical, datatype IRI) following
// the precision: >= 11 day precision -> xsd:date "Y-M-D" without zero
// padding, 10 -> xsd:gYearMonth, 9 -> xsd:gYear. Lower precisions have no
// representation and yield nullopt. Accepts "+1991-11-25T00:00:00Z" as
// well as bare "1991-11-25" time strings.
std::optional<std::pair<std::string, std::string>> DateLexical(
    const TimeValue& t);

// Converts a snak value into the term used by the raw datasets:
// items -> dw IRIs, times per the precision rule, coordinates -> a
// "lat lon" point literal, quantities -> xsd:decimal, strings -> simple
// literals, monolingual text -> language-tagged literals. When
// url_string_as_iri is set, string values carrying an http(s) URL become
// IRI terms instead (used for reference snaks). nullopt when the value
// cannot be represented.
std::optional<Term> RawTermForValue(const SnakValue& v,
                                    bool url_string_as_iri = false);

// Lexical form spliced into `$1` templates: the entity id for items, the
// converted lexical for everything else.
std::optional<std::string> SpliceLexical(const SnakValue& v);

// Lexical form hashed into literal statement IRIs. Items yield nullopt
// (they use the Q-part form instead).
std::optional<std::string> HashLexical(const SnakValue& v);

// Normalized quantity amount: strips the Wikidata leading '+'.
std::string NormalizeAmount(std::string_view amount);

}  // namespace dbw

#endif  // DBW_VALUES_HPP_
