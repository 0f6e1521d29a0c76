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

#ifndef DBW_ENTITY_HPP_
#define DBW_ENTITY_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dbw {

enum class EntityKind { kItem, kProperty };

// A Wikidata entity id: Q<number> for items, P<number> for properties.
struct EntityId {
  EntityKind kind = EntityKind::kItem;
  uint64_t number = 0;

  // "Q42" / "P26". Rejects anything else (leading zeros, zero, other pages).
  static std::optional<EntityId> Parse(std::string_view text);
  std::string ToString() const;

  bool is_item() const { return kind == EntityKind::kItem; }
  bool is_property() const { return kind == EntityKind::kProperty; }

  auto operator<=>(const EntityId&) const = default;
};

inline EntityId Qid(uint64_t n) { return {EntityKind::kItem, n}; }
inline EntityId Pid(uint64_t n) { return {EntityKind::kProperty, n}; }

enum class Rank { kPreferred, kNormal, kDeprecated };

// Time value with Wikidata precision (0..14; 9 = year, 10 = month,
// 11 = day). The time string is kept as found in the record.
struct TimeValue {
  std::string time;
  int precision = 11;
  EntityId calendar = Qid(1985727);
  bool operator==(const TimeValue&) const = default;
};

struct GlobeCoordinate {
  double latitude = 0;
  double longitude = 0;
  double precision = 0;
  bool operator==(const GlobeCoordinate&) const = default;
};

// Decimal amount kept verbatim ("+3520031"); unit is an entity IRI or "1".
struct QuantityValue {
  std::string amount;
  std::string unit = "1";
  bool operator==(const QuantityValue&) const = default;
};

struct MonolingualText {
  std::string text;
  std::string language;
  bool operator==(const MonolingualText&) const = default;
};

struct SomeValueMarker {
  bool operator==(const SomeValueMarker&) const = default;
};

struct NoValueMarker {
  bool operator==(const NoValueMarker&) const = default;
};

// Skip marker for datatypes the converter does not understand. Not an
// error: the snak parses, downstream conversion skips and counts it.
struct UnsupportedValue {
  std::string datatype;
  bool operator==(const UnsupportedValue&) const = default;
};

// EntityId covers item/property values, std::string plain string values.
using SnakValue =
    std::variant<EntityId, std::string, TimeValue, GlobeCoordinate,
                 QuantityValue, MonolingualText, SomeValueMarker, NoValueMarker,
                 UnsupportedValue>;

// True for SomeValue/NoValue/Unsupported: nothing can be emitted for these.
bool IsSkippableValue(const SnakValue& v);

// One property-value pair inside qualifiers or references.
struct Snak {
  EntityId property;
  SnakValue value;
  bool operator==(const Snak&) const = default;
};

// A claim with optional qualifiers and references.
struct Statement {
  EntityId property;
  SnakValue value;
  std::vector<Snak> qualifiers;              // input order preserved
  std::vector<std::vector<Snak>> references;  // one record per reference
  Rank rank = Rank::kNormal;
  bool operator==(const Statement&) const = default;
};

// One parsed item or property page.
struct Entity {
  EntityId id;
  std::map<std::string, std::string> labels;        // language -> text
  std::map<std::string, std::string> descriptions;  // language -> text
  std::map<std::string, std::vector<std::string>> aliases;
  std::map<std::string, std::string> sitelinks;  // site key -> page title
  std::vector<Statement> statements;
  uint64_t page_id = 0;
  uint64_t revision_id = 0;
  bool operator==(const Entity&) const = default;
};

struct RedirectRecord {
  EntityId from;
  EntityId to;
  bool operator==(const RedirectRecord&) const = default;
};

}  // namespace dbw

#endif  // DBW_ENTITY_HPP_
