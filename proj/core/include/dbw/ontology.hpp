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

#ifndef DBW_ONTOLOGY_HPP_
#define DBW_ONTOLOGY_HPP_

#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "dbw/entity.hpp"

namespace dbw {

struct Unconstrained {
  bool operator==(const Unconstrained&) const = default;
};
struct ObjectRange {
  std::string class_iri;
  bool operator==(const ObjectRange&) const = default;
};
struct LiteralRange {
  std::string datatype_iri;
  bool operator==(const LiteralRange&) const = default;
};
using RangeSpec = std::variant<Unconstrained, ObjectRange, LiteralRange>;

// DBpedia ontology view: class hierarchy, property ranges, disjointness.
// Immutable once loaded; superclass closures are precomputed so every
// query is a lock-free lookup, safe for unrestricted concurrent use.
class Ontology {
 public:
  bool HasClass(std::string_view class_iri) const;

  // Transitive superclasses of c, excluding c, in lexicographic order.
  // Unknown classes yield an empty set.
  const std::vector<std::string>& SuperclassesOf(std::string_view c) const;

  RangeSpec RangeOf(std::string_view property_iri) const;

  // True iff some superclass-or-self of a and some superclass-or-self of
  // b form a declared disjoint pair. Symmetric.
  bool AreDisjoint(std::string_view a, std::string_view b) const;

  size_t class_count() const { return classes_.size(); }
  const std::set<std::pair<std::string, std::string>>& subclass_edges() const {
    return edges_;
  }

 private:
  friend struct OntologyLoader;

  std::unordered_set<std::string> classes_;
  std::set<std::pair<std::string, std::string>> edges_;  // (child, parent)
  std::unordered_map<std::string, std::vector<std::string>> closure_;
  std::unordered_map<std::string, RangeSpec> ranges_;
  std::set<std::pair<std::string, std::string>> disjoint_;  // normalized
};

// Schema mappings: Wikidata property/item -> DBpedia property/class.
struct EquivalenceMap {
  std::unordered_map<uint64_t, std::string> property_equiv;  // P-number
  std::unordered_map<uint64_t, std::string> class_equiv;     // Q-number

  std::optional<std::string> PropertyFor(const EntityId& p) const;
  std::optional<std::string> ClassFor(const EntityId& q) const;
};

struct OntologyBundle {
  Ontology ontology;
  EquivalenceMap equivalences;
  std::vector<std::string> warnings;  // duplicate equivalence declarations
};

// Parses the line-oriented ontology format:
//   class <IRI>
//   subclass <child> <parent>
//   range <property> literal <datatype>
//   range <property> object <class>
//   disjoint <classA> <classB>
//   equivprop <P-id> <property IRI>
//   equivclass <Q-id> <class IRI>
// IRIs may be written in full or as CURIEs with the built-in prefixes.
// `#` starts a comment. Throws ParseError / CyclicHierarchyError.
OntologyBundle LoadOntology(std::istream& in);
OntologyBundle LoadOntologyText(std::string_view text);
OntologyBundle LoadOntologyFile(const std::filesystem::path& path);

}  // namespace dbw

#endif  // DBW_ONTOLOGY_HPP_
