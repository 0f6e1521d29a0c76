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

#include "dbw/triple.hpp"

namespace dbw {
namespace {

struct DatasetInfo {
  std::string_view stem;
  std::string_view title;
};

constexpr std::array<DatasetInfo, kDatasetCount> kDatasetInfo = {{
    {"provenance", "Provenance (page IDs & revisions)"},
    {"redirects", "Explicit & transitive redirects"},
    {"aliases", "Resource aliases with dbo:alias"},
    {"labels", "Labels with rdfs:label"},
    {"descriptions", "Descriptions with dbo:description"},
    {"sitelinks", "DBpedia inter-language links"},
    {"wikidata-links", "Links to original Wikidata IRIs"},
    {"mapped-types", "Direct types from the DBpedia ontology"},
    {"mapped-transitive-types", "Transitive types from the DBpedia ontology"},
    {"mapped-coordinates", "Geo coordinates"},
    {"mapped-images", "Depictions and other image links"},
    {"mapped-facts", "Wikidata statements with DBpedia ontology"},
    {"mapped-external-sameas", "sameAs links to external databases"},
    {"mapped-facts-reified", "Mapped statements reified"},
    {"mapped-qualifiers", "Mapped qualifiers"},
    {"raw-facts", "Raw simple statements (not mapped)"},
    {"raw-facts-reified", "Raw statements reified"},
    {"raw-qualifiers", "Raw qualifiers"},
    {"references", "Reified statement references with dbo:reference"},
    {"mapping-errors", "Facts from incorrect mappings"},
    {"ontology-errors", "Facts excluded due to ontology inconsistencies"},
}};

}  // namespace

bool IsIriTerm(const Term& t) { return std::holds_alternative<IriTerm>(t); }

std::string_view DatasetStem(DatasetId id) {
  return kDatasetInfo[static_cast<size_t>(id)].stem;
}

std::string_view DatasetTitle(DatasetId id) {
  return kDatasetInfo[static_cast<size_t>(id)].title;
}

std::optional<DatasetId> DatasetFromStem(std::string_view stem) {
  for (int i = 0; i < kDatasetCount; ++i) {
    if (kDatasetInfo[static_cast<size_t>(i)].stem == stem) {
      return static_cast<DatasetId>(i);
    }
  }
  return std::nullopt;
}

}  // namespace dbw
