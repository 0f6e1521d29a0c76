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

#ifndef DBW_EXTRACTORS_HPP_
#define DBW_EXTRACTORS_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dbw/entity.hpp"
#include "dbw/iri.hpp"
#include "dbw/mapping.hpp"
#include "dbw/ontology.hpp"
#include "dbw/stats.hpp"
#include "dbw/triple.hpp"

namespace dbw {

// Wikipedia language edition for a sitelink site key ("enwiki" -> "en").
// Commons and other non-Wikipedia projects yield nullopt.
std::optional<std::string> WikipediaLanguage(std::string_view site_key);

// rdfs:label / dbo:alias / dbo:description, one language-tagged literal
// each, into the Labels/Aliases/Descriptions datasets.
std::vector<Triple> ExtractTerminology(const Entity& e);

// Three sitelink-driven outputs: the dw -> Wikidata sameAs link, one
// dw -> DBpedia sameAs link per Wikipedia sitelink, and cross-language
// DBpedia sameAs links for every ordered pair of mapped languages
// present in the sitelinks.
std::vector<Triple> ExtractSitelinks(const Entity& e,
                                     const std::set<std::string>& mapped_languages,
                                     ExtractionCounters* counters = nullptr);

// dbo:wikiPageID / dbo:wikiPageRevisionID as xsd:integer literals.
std::vector<Triple> ExtractProvenance(const Entity& e);

// The explicit redirect triple (dw:from, dbo:wikiPageRedirects, dw:to).
std::vector<Triple> ExtractRedirect(const RedirectRecord& r);

// Raw statements with the original Wikidata properties: simple facts,
// the 4-triple reification quad per fact, and qualifier triples attached
// to the statement IRI.
std::vector<Triple> ExtractRawStatements(const Entity& e,
                                         ExtractionCounters* counters = nullptr);

// Mapped statements: applies the value transformations, routes accepted
// triples into the per-kind datasets (types/coordinates/images/external
// sameAs/facts), reifies each accepted statement under the shared
// statement IRI, attaches mapped qualifiers, and sends range-incompatible
// emissions to MappingErrors.
std::vector<Triple> ExtractMappedStatements(const Entity& e,
                                            const MappingTable& rules,
                                            const EquivalenceMap& em,
                                            const Ontology& onto,
                                            ExtractionCounters* counters = nullptr);

// Statement references on the reified statement IRI with dbo:reference.
std::vector<Triple> ExtractReferences(const Entity& e,
                                      ExtractionCounters* counters = nullptr);

// Runs every extractor over one entity.
std::vector<Triple> ExtractAll(const Entity& e, const MappingTable& rules,
                               const EquivalenceMap& em, const Ontology& onto,
                               const std::set<std::string>& mapped_languages,
                               ExtractionCounters* counters = nullptr);

// Dataset routing for one accepted mapped emission; exposed so the
// routing rule can be checked as a fixpoint.
DatasetId RouteMappedTriple(const std::string& predicate, const Term& object);

inline const std::string kDboAlias = std::string(kDbpediaOntology) + "alias";
inline const std::string kDboDescription =
    std::string(kDbpediaOntology) + "description";
inline const std::string kDboWikiPageId =
    std::string(kDbpediaOntology) + "wikiPageID";
inline const std::string kDboWikiPageRevisionId =
    std::string(kDbpediaOntology) + "wikiPageRevisionID";
inline const std::string kDboWikiPageRedirects =
    std::string(kDbpediaOntology) + "wikiPageRedirects";
inline const std::string kDboReference =
    std::string(kDbpediaOntology) + "reference";
inline const std::string kRdfsLabel = std::string(kRdfsNs) + "label";

}  // namespace dbw

#endif  // DBW_EXTRACTORS_HPP_
