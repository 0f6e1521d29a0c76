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

#ifndef DBW_POSTPROCESS_HPP_
#define DBW_POSTPROCESS_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dbw/entity.hpp"
#include "dbw/ontology.hpp"
#include "dbw/triple.hpp"

namespace dbw {

// Fully collapsed redirect map. `resolved` values are never themselves
// redirect sources; ids on a cycle (or leading into one) are excluded
// and listed in `cyclic`.
struct RedirectClosure {
  std::map<EntityId, EntityId> resolved;
  std::set<EntityId> cyclic;

  bool empty() const { return resolved.empty() && cyclic.empty(); }
};

RedirectClosure BuildRedirectClosure(const std::vector<RedirectRecord>& records);

// Rewrites a dw-namespace IRI through the closure: entity IRIs get their
// id replaced, statement IRIs get both the subject part and an item
// value part re-minted. Returns nullopt when nothing changes.
std::optional<std::string> RewriteDwIri(std::string_view iri,
                                        const RedirectClosure& closure);

// In-memory resolution pass; returns the number of triples rewritten.
size_t ResolveTriples(std::vector<Triple>* triples,
                      const RedirectClosure& closure);

// Streams an N-Triples dataset file through the closure, writing the
// rewritten file in place (via a temp file). Returns the number of lines
// rewritten. Understands .nt and .nt.gz.
uint64_t ResolveDatasetFile(const std::filesystem::path& file,
                            const RedirectClosure& closure);

// Direct rdf:type assertions from the mapped types dataset.
struct TypeIndex {
  // subject IRI -> sorted unique class IRIs
  std::unordered_map<std::string, std::vector<std::string>> direct_types;

  void Add(const std::string& subject, const std::string& class_iri);
  const std::vector<std::string>* TypesOf(const std::string& subject) const;
};

TypeIndex BuildTypeIndex(const std::vector<Triple>& mapped_type_triples);

// All ontology ancestors of every subject's direct types, minus the
// direct types themselves, one rdf:type triple each, deduplicated per
// subject, in deterministic order.
std::vector<Triple> InferTransitiveTypes(const TypeIndex& index,
                                         const Ontology& onto);

struct DisjointnessPartition {
  std::vector<Triple> accepted;
  std::vector<Triple> rejected;  // routed to OntologyErrors
};

// Validation step two: rejects a triple iff its predicate declares
// ObjectRange(C) and some direct type of the object is disjoint with C.
// Objects without known types and literal objects are accepted.
DisjointnessPartition ValidateDisjointness(const std::vector<Triple>& facts,
                                           const TypeIndex& index,
                                           const Ontology& onto);

}  // namespace dbw

#endif  // DBW_POSTPROCESS_HPP_
