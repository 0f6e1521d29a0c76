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

#ifndef DBW_IRI_HPP_
#define DBW_IRI_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "dbw/entity.hpp"

namespace dbw {

// Namespaces used throughout the generated datasets.
inline constexpr std::string_view kDwResource =
    "http://wikidata.dbpedia.org/resource/";
inline constexpr std::string_view kWikidataEntity =
    "http://wikidata.org/entity/";
inline constexpr std::string_view kDbpediaOntology =
    "http://dbpedia.org/ontology/";
inline constexpr std::string_view kRdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs =
    "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kGeoNs =
    "http://www.w3.org/2003/01/geo/wgs84_pos#";
inline constexpr std::string_view kGeoRssNs = "http://www.georss.org/georss/";
inline constexpr std::string_view kFoafNs = "http://xmlns.com/foaf/0.1/";

// Frequently used terms.
inline const std::string kRdfType = std::string(kRdfNs) + "type";
inline const std::string kRdfStatement = std::string(kRdfNs) + "Statement";
inline const std::string kRdfSubject = std::string(kRdfNs) + "subject";
inline const std::string kRdfPredicate = std::string(kRdfNs) + "predicate";
inline const std::string kRdfObject = std::string(kRdfNs) + "object";
inline const std::string kOwlSameAs = std::string(kOwlNs) + "sameAs";
inline const std::string kGeoSpatialThing =
    std::string(kGeoNs) + "SpatialThing";
inline const std::string kXsdDate = std::string(kXsdNs) + "date";
inline const std::string kXsdGYear = std::string(kXsdNs) + "gYear";
inline const std::string kXsdGYearMonth = std::string(kXsdNs) + "gYearMonth";
inline const std::string kXsdFloat = std::string(kXsdNs) + "float";
inline const std::string kXsdInteger = std::string(kXsdNs) + "integer";
inline const std::string kXsdDecimal = std::string(kXsdNs) + "decimal";

// Expands a CURIE with a built-in prefix (rdf, rdfs, owl, xsd, dbo, geo,
// georss, foaf, dw, wd, wkdt) to a full IRI. Full http/https IRIs pass
// through unchanged. Anything else yields nullopt.
std::optional<std::string> ExpandCurie(std::string_view token);

// True when the string starts with an http:// or https:// scheme.
bool LooksLikeIri(std::string_view s);

// dw:Q42 -> http://wikidata.dbpedia.org/resource/Q42 (and dw:P31 for
// property pages).
std::string EntityIri(const EntityId& id);

// The original Wikidata IRI, http://wikidata.org/entity/Q42.
std::string WikidataIri(const EntityId& id);

// Percent-encodes a Wikipedia title into an IRI path segment: spaces
// become underscores, characters that are illegal inside an IRI are
// percent-encoded, everything else (including non-ASCII UTF-8) is kept.
std::string EncodeTitleSegment(std::string_view title);

// DBpedia page IRI for a language edition: "en" maps to dbpedia.org, any
// other language to <lang>.dbpedia.org.
std::string DbpediaPageIri(std::string_view language, std::string_view title);

// First n lowercase hex characters of SHA-256(lexical). n >= 1.
std::string LiteralHash(std::string_view lexical, int n);

// Reified statement IRI dw:Qs_Px_Qv for item values, dw:Qs_Px_<hash5> for
// everything else (the hash is taken over the converted literal lexical
// form, without datatype). nullopt when the value has no lexical form
// (SomeValue/NoValue/unsupported/unconvertible).
std::optional<std::string> StatementIri(const EntityId& subject,
                                        const EntityId& property,
                                        const SnakValue& value);

}  // namespace dbw

#endif  // DBW_IRI_HPP_
