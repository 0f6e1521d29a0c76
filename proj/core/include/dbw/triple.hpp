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

#ifndef DBW_TRIPLE_HPP_
#define DBW_TRIPLE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dbw {

struct IriTerm {
  std::string iri;
  bool operator==(const IriTerm&) const = default;
};

// Typed or simple literal. An empty datatype means a simple literal.
struct Literal {
  std::string lexical;
  std::string datatype;
  bool operator==(const Literal&) const = default;
};

struct LangLiteral {
  std::string lexical;
  std::string lang;
  bool operator==(const LangLiteral&) const = default;
};

using Term = std::variant<IriTerm, Literal, LangLiteral>;

bool IsIriTerm(const Term& t);

// The dataset family. One output file per member.
enum class DatasetId {
  kProvenance,
  kRedirects,
  kAliases,
  kLabels,
  kDescriptions,
  kSitelinks,
  kWikidataLinks,
  kMappedTypes,
  kMappedTransitiveTypes,
  kMappedCoordinates,
  kMappedImages,
  kMappedFacts,
  kMappedExternalSameAs,
  kMappedFactsReified,
  kMappedQualifiers,
  kRawFacts,
  kRawFactsReified,
  kRawQualifiers,
  kReferences,
  kMappingErrors,
  kOntologyErrors,
};

inline constexpr int kDatasetCount = 21;

inline constexpr std::array<DatasetId, kDatasetCount> kAllDatasets = {
    DatasetId::kProvenance,       DatasetId::kRedirects,
    DatasetId::kAliases,          DatasetId::kLabels,
    DatasetId::kDescriptions,     DatasetId::kSitelinks,
    DatasetId::kWikidataLinks,    DatasetId::kMappedTypes,
    DatasetId::kMappedTransitiveTypes, DatasetId::kMappedCoordinates,
    DatasetId::kMappedImages,     DatasetId::kMappedFacts,
    DatasetId::kMappedExternalSameAs, DatasetId::kMappedFactsReified,
    DatasetId::kMappedQualifiers, DatasetId::kRawFacts,
    DatasetId::kRawFactsReified,  DatasetId::kRawQualifiers,
    DatasetId::kReferences,       DatasetId::kMappingErrors,
    DatasetId::kOntologyErrors,
};

// Kebab-case file stem, e.g. "mapped-facts-reified".
std::string_view DatasetStem(DatasetId id);

// Human-readable dataset title for reports.
std::string_view DatasetTitle(DatasetId id);

std::optional<DatasetId> DatasetFromStem(std::string_view stem);

struct Triple {
  std::string subject;
  std::string predicate;
  Term object;
  DatasetId dataset = DatasetId::kRawFacts;
  bool operator==(const Triple&) const = default;
};

}  // namespace dbw

#endif  // DBW_TRIPLE_HPP_
