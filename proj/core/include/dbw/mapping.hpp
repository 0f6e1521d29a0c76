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

#ifndef DBW_MAPPING_HPP_
#define DBW_MAPPING_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbw/entity.hpp"
#include "dbw/ontology.hpp"
#include "dbw/triple.hpp"

namespace dbw {

// A value transformation string. Templates contain at most one `$`
// placeholder with optional surrounding text; a string without `$` is a
// constant.
class Template {
 public:
  enum class Kind {
    kConstant,
    kRaw,            // $1
    kWikiTitle,      // $2
    kDbpediaClass,   // $getDBpediaClass
    kLatitude,       // $getLatitude
    kLongitude,      // $getLongitude
    kGeoRss,         // $getGeoRss
  };

  // Throws UnknownFunctionError for an unrecognized `$name` and
  // ParseError for more than one placeholder.
  static Template Parse(std::string_view text);

  static Template Constant(std::string text);

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::kConstant; }
  // Placeholder-surrounding text (for constants, prefix is the whole text).
  const std::string& prefix() const { return prefix_; }
  const std::string& suffix() const { return suffix_; }
  bool has_surrounding_text() const {
    return !prefix_.empty() || !suffix_.empty();
  }

  bool operator==(const Template&) const = default;

 private:
  Kind kind_ = Kind::kConstant;
  std::string prefix_;
  std::string suffix_;
};

struct Binding {
  std::string predicate;  // as written: "rdf:type", "geo:lat", "logo", ...
  Template object;
  bool operator==(const Binding&) const = default;
};

// One or more bindings attached to a Wikidata property.
struct MappingRule {
  EntityId property;
  std::vector<Binding> bindings;  // config file order
};

using MappingTable = std::map<EntityId, MappingRule>;

// Parses the mapping configuration: a JSON object keyed by "P<number>"
// whose values are an object or a list of objects of predicate ->
// template pairs. Binding order follows the file. Throws ParseError /
// UnknownFunctionError.
MappingTable ParseMappingConfig(std::string_view json_text);
MappingTable LoadMappingConfigFile(const std::filesystem::path& path);

// Resolves a predicate token: CURIEs via the built-in prefix table, full
// IRIs as-is, and bare names into the DBpedia ontology namespace.
std::string ResolvePredicate(std::string_view token);

// Applies one value transformation to a snak value. nullopt when the
// function is inapplicable to the value kind (counted by the caller).
std::optional<Term> EvalTemplate(const Template& t, const SnakValue& v,
                                 const EquivalenceMap& em);

enum class RejectReason { kRangeKindMismatch };
std::string_view RejectReasonName(RejectReason r);

struct MappedTriple {
  std::string predicate;
  Term object;
  bool operator==(const MappedTriple&) const = default;
};

struct RejectedTriple {
  std::string predicate;
  Term object;
  RejectReason reason = RejectReason::kRangeKindMismatch;
};

// Evaluation result before dataset routing. `triples` passed range
// validation, `rejected` did not; bindings whose templates did not both
// evaluate contribute to `inapplicable` only.
struct MappedEmission {
  std::vector<MappedTriple> triples;
  std::vector<RejectedTriple> rejected;
  int inapplicable = 0;
};

// Maps a statement: looks up the value-transformation rule for the
// property (falling back to a schema-equivalence default binding of
// predicate = equivalent property, object = `$1`), evaluates every
// binding and checks the object kind against the predicate's declared
// range. SomeValue/NoValue/unsupported values and Deprecated statements
// emit nothing.
MappedEmission MapStatement(const Statement& s, const MappingTable& rules,
                            const EquivalenceMap& em, const Ontology& onto);

// Same evaluation semantics for one qualifier pair; the caller attaches
// the reified statement IRI as subject.
MappedEmission MapQualifier(const Snak& qualifier, const MappingTable& rules,
                            const EquivalenceMap& em, const Ontology& onto);

// True when the property has either a transformation rule or a schema
// equivalence (the unit counted by the mapping-coverage statistic).
bool HasMappingFor(const EntityId& property, const MappingTable& rules,
                   const EquivalenceMap& em);

}  // namespace dbw

#endif  // DBW_MAPPING_HPP_
