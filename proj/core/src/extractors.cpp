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

#include "dbw/extractors.hpp"

#include <algorithm>
#include <unordered_map>

#include "dbw/iri.hpp"
#include "dbw/values.hpp"

namespace dbw {
namespace {

const std::string kFoafDepiction = std::string(kFoafNs) + "depiction";
const std::string kDboThumbnail = std::string(kDbpediaOntology) + "thumbnail";
const std::string kGeoLat = std::string(kGeoNs) + "lat";
const std::string kGeoLong = std::string(kGeoNs) + "long";
const std::string kGeoRssPoint = std::string(kGeoRssNs) + "point";
constexpr std::string_view kCommonsFilePath =
    "http://commons.wikimedia.org/wiki/Special:FilePath/";

// Projects that end in "wiki" but are not Wikipedia language editions.
constexpr std::string_view kNonLanguageSites[] = {
    "commons", "species",  "meta",     "wikidata", "mediawiki",
    "sources", "incubator", "outreach", "wikimania", "foundation",
};

void Count(uint64_t* counter) { ++*counter; }

bool IsDbpediaHost(std::string_view iri) {
  if (!iri.starts_with("http://") && !iri.starts_with("https://")) {
    return false;
  }
  size_t start = iri.find("//") + 2;
  size_t end = iri.find('/', start);
  std::string_view host = iri.substr(
      start, end == std::string_view::npos ? std::string_view::npos
                                           : end - start);
  return host == "dbpedia.org" || host.ends_with(".dbpedia.org");
}

// Detects literal-hash collisions within one subject: two distinct
// lexical forms of the same property hashing to the same statement IRI.
class CollisionDetector {
 public:
  explicit CollisionDetector(ExtractionCounters* counters)
      : counters_(counters) {}

  void Observe(const std::string& statement_iri, const SnakValue& value) {
    if (counters_ == nullptr) return;
    if (std::holds_alternative<EntityId>(value)) return;
    auto lexical = HashLexical(value);
    if (!lexical) return;
    auto [it, inserted] = seen_.emplace(statement_iri, *lexical);
    if (!inserted && it->second != *lexical) {
      Count(&counters_->hash_collisions);
    }
  }

 private:
  ExtractionCounters* counters_;
  std::unordered_map<std::string, std::string> seen_;
};

}  // namespace

std::optional<std::string> WikipediaLanguage(std::string_view site_key) {
  if (!site_key.ends_with("wiki")) return std::nullopt;
  std::string_view base = site_key.substr(0, site_key.size() - 4);
  if (base.empty()) return std::nullopt;
  for (std::string_view blocked : kNonLanguageSites) {
    if (base == blocked) return std::nullopt;
  }
  std::string lang;
  lang.reserve(base.size());
  for (char c : base) {
    if (c == '_') {
      lang += '-';
    } else if (c >= 'a' && c <= 'z') {
      lang += c;
    } else {
      return std::nullopt;
    }
  }
  return lang;
}

std::vector<Triple> ExtractTerminology(const Entity& e) {
  std::vector<Triple> out;
  std::string subject = EntityIri(e.id);
  for (const auto& [lang, text] : e.labels) {
    out.push_back({subject, kRdfsLabel, LangLiteral{text, lang},
                   DatasetId::kLabels});
  }
  for (const auto& [lang, texts] : e.aliases) {
    for (const auto& text : texts) {
      out.push_back({subject, kDboAlias, LangLiteral{text, lang},
                     DatasetId::kAliases});
    }
  }
  for (const auto& [lang, text] : e.descriptions) {
    out.push_back({subject, kDboDescription, LangLiteral{text, lang},
                   DatasetId::kDescriptions});
  }
  return out;
}

std::vector<Triple> ExtractSitelinks(const Entity& e,
                                     const std::set<std::string>& mapped_languages,
                                     ExtractionCounters* counters) {
  std::vector<Triple> out;
  std::string subject = EntityIri(e.id);
  out.push_back({subject, kOwlSameAs, IriTerm{WikidataIri(e.id)},
                 DatasetId::kWikidataLinks});

  std::map<std::string, std::string> titles_by_language;
  for (const auto& [site, title] : e.sitelinks) {
    auto lang = WikipediaLanguage(site);
    if (!lang) {
      if (counters != nullptr) Count(&counters->sitelinks_skipped);
      continue;
    }
    out.push_back({subject, kOwlSameAs, IriTerm{DbpediaPageIri(*lang, title)},
                   DatasetId::kSitelinks});
    titles_by_language.emplace(*lang, title);
  }

  // Cross-language links for every ordered pair of mapped languages.
  for (const auto& [lang_a, title_a] : titles_by_language) {
    if (!mapped_languages.contains(lang_a)) continue;
    for (const auto& [lang_b, title_b] : titles_by_language) {
      if (lang_a == lang_b || !mapped_languages.contains(lang_b)) continue;
      out.push_back({DbpediaPageIri(lang_a, title_a), kOwlSameAs,
                     IriTerm{DbpediaPageIri(lang_b, title_b)},
                     DatasetId::kSitelinks});
    }
  }
  return out;
}

std::vector<Triple> ExtractProvenance(const Entity& e) {
  std::string subject = EntityIri(e.id);
  return {
      {subject, kDboWikiPageId,
       Literal{std::to_string(e.page_id), kXsdInteger}, DatasetId::kProvenance},
      {subject, kDboWikiPageRevisionId,
       Literal{std::to_string(e.revision_id), kXsdInteger},
       DatasetId::kProvenance},
  };
}

std::vector<Triple> ExtractRedirect(const RedirectRecord& r) {
  return {{EntityIri(r.from), kDboWikiPageRedirects, IriTerm{EntityIri(r.to)},
           DatasetId::kRedirects}};
}

std::vector<Triple> ExtractRawStatements(const Entity& e,
                                         ExtractionCounters* counters) {
  std::vector<Triple> out;
  std::string subject = EntityIri(e.id);
  CollisionDetector collisions(counters);

  for (const Statement& statement : e.statements) {
    auto term = RawTermForValue(statement.value);
    if (!term) {
      if (counters != nullptr) {
        if (IsSkippableValue(statement.value)) {
          Count(&counters->snaks_skipped);
        } else {
          Count(&counters->low_precision_skipped);
        }
      }
      continue;
    }
    auto statement_iri = StatementIri(e.id, statement.property,
                                      statement.value);
    if (!statement_iri) continue;
    std::string predicate = WikidataIri(statement.property);
    collisions.Observe(*statement_iri, statement.value);

    out.push_back({subject, predicate, *term, DatasetId::kRawFacts});
    out.push_back({*statement_iri, kRdfType, IriTerm{kRdfStatement},
                   DatasetId::kRawFactsReified});
    out.push_back({*statement_iri, kRdfSubject, IriTerm{subject},
                   DatasetId::kRawFactsReified});
    out.push_back({*statement_iri, kRdfPredicate, IriTerm{predicate},
                   DatasetId::kRawFactsReified});
    out.push_back({*statement_iri, kRdfObject, *term,
                   DatasetId::kRawFactsReified});

    for (const Snak& qualifier : statement.qualifiers) {
      auto qualifier_term = RawTermForValue(qualifier.value);
      if (!qualifier_term) {
        if (counters != nullptr) Count(&counters->snaks_skipped);
        continue;
      }
      out.push_back({*statement_iri, WikidataIri(qualifier.property),
                     *qualifier_term, DatasetId::kRawQualifiers});
    }
  }
  return out;
}

DatasetId RouteMappedTriple(const std::string& predicate, const Term& object) {
  const auto* iri = std::get_if<IriTerm>(&object);
  if (predicate == kGeoLat || predicate == kGeoLong ||
      predicate == kGeoRssPoint ||
      (predicate == kRdfType && iri != nullptr &&
       iri->iri == kGeoSpatialThing)) {
    return DatasetId::kMappedCoordinates;
  }
  if (predicate == kRdfType) return DatasetId::kMappedTypes;
  if (predicate == kFoafDepiction || predicate == kDboThumbnail ||
      (iri != nullptr && iri->iri.starts_with(kCommonsFilePath))) {
    return DatasetId::kMappedImages;
  }
  if (predicate == kOwlSameAs && iri != nullptr && !IsDbpediaHost(iri->iri)) {
    return DatasetId::kMappedExternalSameAs;
  }
  return DatasetId::kMappedFacts;
}

std::vector<Triple> ExtractMappedStatements(const Entity& e,
                                            const MappingTable& rules,
                                            const EquivalenceMap& em,
                                            const Ontology& onto,
                                            ExtractionCounters* counters) {
  std::vector<Triple> out;
  std::string subject = EntityIri(e.id);

  for (const Statement& statement : e.statements) {
    if (counters != nullptr) {
      Count(&counters->statements_total);
      if (HasMappingFor(statement.property, rules, em)) {
        Count(&counters->statements_with_mapping);
      }
      if (statement.rank == Rank::kDeprecated &&
          HasMappingFor(statement.property, rules, em)) {
        Count(&counters->deprecated_skipped);
      }
    }

    MappedEmission emission = MapStatement(statement, rules, em, onto);
    if (counters != nullptr) {
      counters->template_inapplicable +=
          static_cast<uint64_t>(emission.inapplicable);
    }
    for (const RejectedTriple& rejected : emission.rejected) {
      out.push_back({subject, rejected.predicate, rejected.object,
                     DatasetId::kMappingErrors});
    }
    if (emission.triples.empty()) continue;

    for (const MappedTriple& accepted : emission.triples) {
      out.push_back({subject, accepted.predicate, accepted.object,
                     RouteMappedTriple(accepted.predicate, accepted.object)});
    }

    auto statement_iri =
        StatementIri(e.id, statement.property, statement.value);
    if (!statement_iri) continue;

    // One reification quad per accepted binding; the type and subject
    // legs are shared within the statement.
    out.push_back({*statement_iri, kRdfType, IriTerm{kRdfStatement},
                   DatasetId::kMappedFactsReified});
    out.push_back({*statement_iri, kRdfSubject, IriTerm{subject},
                   DatasetId::kMappedFactsReified});
    for (const MappedTriple& accepted : emission.triples) {
      out.push_back({*statement_iri, kRdfPredicate,
                     IriTerm{accepted.predicate},
                     DatasetId::kMappedFactsReified});
      out.push_back({*statement_iri, kRdfObject, accepted.object,
                     DatasetId::kMappedFactsReified});
    }

    for (const Snak& qualifier : statement.qualifiers) {
      MappedEmission qualifier_emission =
          MapQualifier(qualifier, rules, em, onto);
      if (counters != nullptr) {
        counters->template_inapplicable +=
            static_cast<uint64_t>(qualifier_emission.inapplicable);
      }
      for (const MappedTriple& accepted : qualifier_emission.triples) {
        out.push_back({*statement_iri, accepted.predicate, accepted.object,
                       DatasetId::kMappedQualifiers});
      }
      for (const RejectedTriple& rejected : qualifier_emission.rejected) {
        out.push_back({*statement_iri, rejected.predicate, rejected.object,
                       DatasetId::kMappingErrors});
      }
    }
  }
  return out;
}

std::vector<Triple> ExtractReferences(const Entity& e,
                                      ExtractionCounters* counters) {
  std::vector<Triple> out;
  for (const Statement& statement : e.statements) {
    if (statement.references.empty()) continue;
    auto statement_iri =
        StatementIri(e.id, statement.property, statement.value);
    if (!statement_iri) continue;
    for (const auto& reference : statement.references) {
      for (const Snak& snak : reference) {
        auto term = RawTermForValue(snak.value, /*url_string_as_iri=*/true);
        if (!term) {
          if (counters != nullptr) Count(&counters->snaks_skipped);
          continue;
        }
        out.push_back({*statement_iri, kDboReference, *term,
                       DatasetId::kReferences});
      }
    }
  }
  return out;
}

std::vector<Triple> ExtractAll(const Entity& e, const MappingTable& rules,
                               const EquivalenceMap& em, const Ontology& onto,
                               const std::set<std::string>& mapped_languages,
                               ExtractionCounters* counters) {
  if (counters != nullptr) Count(&counters->entities);
  std::vector<Triple> out = ExtractTerminology(e);
  auto append = [&out](std::vector<Triple>&& triples) {
    out.insert(out.end(), std::make_move_iterator(triples.begin()),
               std::make_move_iterator(triples.end()));
  };
  append(ExtractSitelinks(e, mapped_languages, counters));
  append(ExtractProvenance(e));
  append(ExtractRawStatements(e, counters));
  append(ExtractMappedStatements(e, rules, em, onto, counters));
  append(ExtractReferences(e, counters));
  return out;
}

}  // namespace dbw
