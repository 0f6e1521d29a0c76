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

#include "dbw/dump_reader.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <boost/iostreams/filter/bzip2.hpp>
#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>
#include <json.hpp>

#include "dbw/errors.hpp"

namespace dbw {
namespace {

using Json = nlohmann::ordered_json;

std::string Lowercased(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// "labels"/"descriptions": language -> {"language":..,"value":..} or a
// bare string in older dumps.
void ParseTermMap(const Json& node, std::map<std::string, std::string>* out) {
  if (!node.is_object()) return;
  for (const auto& [lang, value] : node.items()) {
    if (lang.empty()) continue;
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_object() && value.contains("value") &&
               value["value"].is_string()) {
      text = value["value"].get<std::string>();
    } else {
      continue;
    }
    (*out)[Lowercased(lang)] = std::move(text);
  }
}

std::optional<EntityId> ParseEntityIdNode(const Json& node) {
  if (node.is_string()) return EntityId::Parse(node.get<std::string>());
  if (!node.is_object()) return std::nullopt;
  if (node.contains("id") && node["id"].is_string()) {
    return EntityId::Parse(node["id"].get<std::string>());
  }
  if (node.contains("entity-type") && node.contains("numeric-id") &&
      node["numeric-id"].is_number_unsigned()) {
    std::string kind = node["entity-type"].get<std::string>();
    uint64_t number = node["numeric-id"].get<uint64_t>();
    if (number == 0) return std::nullopt;
    if (kind == "item") return Qid(number);
    if (kind == "property") return Pid(number);
  }
  return std::nullopt;
}

// Entity id at the tail of a calendar-model IRI.
EntityId ParseCalendar(const Json& snak_value) {
  if (snak_value.contains("calendarmodel") &&
      snak_value["calendarmodel"].is_string()) {
    std::string iri = snak_value["calendarmodel"].get<std::string>();
    size_t slash = iri.find_last_of('/');
    if (slash != std::string::npos) {
      if (auto id = EntityId::Parse(std::string_view(iri).substr(slash + 1))) {
        return *id;
      }
    }
  }
  return Qid(1985727);  // proleptic Gregorian
}

SnakValue ParseSnakValue(const Json& snak) {
  std::string snaktype = snak.value("snaktype", "value");
  if (snaktype == "somevalue") return SomeValueMarker{};
  if (snaktype == "novalue") return NoValueMarker{};

  if (!snak.contains("datavalue") || !snak["datavalue"].is_object()) {
    return UnsupportedValue{"missing-datavalue"};
  }
  const Json& dv = snak["datavalue"];
  std::string type = dv.value("type", "");
  const Json& value = dv.contains("value") ? dv["value"] : Json();

  if (type == "wikibase-entityid") {
    if (auto id = ParseEntityIdNode(value)) return *id;
    return UnsupportedValue{"wikibase-entityid"};
  }
  if (type == "string") {
    if (value.is_string()) return value.get<std::string>();
    return UnsupportedValue{"string"};
  }
  if (type == "time") {
    if (!value.is_object() || !value.contains("time") ||
        !value["time"].is_string()) {
      return UnsupportedValue{"time"};
    }
    int precision = value.value("precision", 11);
    if (precision < 0 || precision > 14) return UnsupportedValue{"time"};
    return TimeValue{value["time"].get<std::string>(), precision,
                     ParseCalendar(value)};
  }
  if (type == "globecoordinate") {
    if (!value.is_object() || !value.contains("latitude") ||
        !value.contains("longitude") || !value["latitude"].is_number() ||
        !value["longitude"].is_number()) {
      return UnsupportedValue{"globecoordinate"};
    }
    double lat = value["latitude"].get<double>();
    double lon = value["longitude"].get<double>();
    if (lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0) {
      return UnsupportedValue{"globecoordinate"};
    }
    double precision = 0;
    if (value.contains("precision") && value["precision"].is_number()) {
      precision = value["precision"].get<double>();
    }
    return GlobeCoordinate{lat, lon, precision};
  }
  if (type == "quantity") {
    if (!value.is_object() || !value.contains("amount") ||
        !value["amount"].is_string()) {
      return UnsupportedValue{"quantity"};
    }
    return QuantityValue{value["amount"].get<std::string>(),
                         value.value("unit", "1")};
  }
  if (type == "monolingualtext") {
    if (!value.is_object() || !value.contains("text") ||
        !value["text"].is_string()) {
      return UnsupportedValue{"monolingualtext"};
    }
    return MonolingualText{value["text"].get<std::string>(),
                           Lowercased(value.value("language", ""))};
  }
  return UnsupportedValue{type.empty() ? "unknown" : type};
}

// Qualifier / reference snak groups keyed by property, with an optional
// explicit order array ("qualifiers-order" / "snaks-order").
std::vector<Snak> ParseSnakGroup(const Json& snaks, const Json& order) {
  std::vector<Snak> out;
  auto parse_group = [&out](const Json& group) {
    if (!group.is_array()) return;
    for (const auto& snak : group) {
      if (!snak.is_object()) continue;
      auto property = EntityId::Parse(snak.value("property", ""));
      if (!property || !property->is_property()) continue;
      out.push_back({*property, ParseSnakValue(snak)});
    }
  };
  if (!snaks.is_object()) return out;
  if (order.is_array()) {
    for (const auto& key : order) {
      if (!key.is_string()) continue;
      auto it = snaks.find(key.get<std::string>());
      if (it != snaks.end()) parse_group(*it);
    }
    return out;
  }
  for (const auto& [unused_key, group] : snaks.items()) parse_group(group);
  return out;
}

Rank ParseRank(const Json& claim) {
  std::string rank = claim.value("rank", "normal");
  if (rank == "preferred") return Rank::kPreferred;
  if (rank == "deprecated") return Rank::kDeprecated;
  return Rank::kNormal;
}

std::optional<Statement> ParseClaim(const Json& claim,
                                    const std::string& outer_property) {
  if (!claim.is_object()) return std::nullopt;
  std::string property_text = outer_property;
  if (claim.contains("mainsnak") && claim["mainsnak"].is_object()) {
    property_text = claim["mainsnak"].value("property", outer_property);
  }
  auto property = EntityId::Parse(property_text);
  if (!property || !property->is_property()) return std::nullopt;

  Statement statement;
  statement.property = *property;
  statement.rank = ParseRank(claim);
  if (claim.contains("mainsnak") && claim["mainsnak"].is_object()) {
    statement.value = ParseSnakValue(claim["mainsnak"]);
  } else {
    statement.value = UnsupportedValue{"missing-mainsnak"};
  }
  if (claim.contains("qualifiers")) {
    statement.qualifiers = ParseSnakGroup(
        claim["qualifiers"],
        claim.contains("qualifiers-order") ? claim["qualifiers-order"]
                                           : Json());
  }
  if (claim.contains("references") && claim["references"].is_array()) {
    for (const auto& reference : claim["references"]) {
      if (!reference.is_object() || !reference.contains("snaks")) continue;
      auto snaks = ParseSnakGroup(
          reference["snaks"], reference.contains("snaks-order")
                                  ? reference["snaks-order"]
                                  : Json());
      statement.references.push_back(std::move(snaks));
    }
  }
  return statement;
}

bool IsWhitespaceOnly(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

}  // namespace

ParseOutcome ParseEntityRecord(std::string_view json_text) {
  Json record = Json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded() || !record.is_object()) {
    return RecordError{"invalid JSON record"};
  }
  if (!record.contains("id") || !record["id"].is_string()) {
    return RecordError{"record has no \"id\""};
  }
  std::string id_text = record["id"].get<std::string>();
  auto id = EntityId::Parse(id_text);
  if (!id) {
    return SkippedRecord{id_text,
                         "unsupported entity type " + record.value("type", "")};
  }

  if (record.contains("redirect") && record["redirect"].is_string()) {
    auto target = EntityId::Parse(record["redirect"].get<std::string>());
    if (!target) return RecordError{"redirect target is not an entity id"};
    if (*target == *id) return RecordError{"redirect to itself"};
    return RedirectRecord{*id, *target};
  }

  try {
    Entity entity;
    entity.id = *id;
    if (record.contains("labels")) {
      ParseTermMap(record["labels"], &entity.labels);
    }
    if (record.contains("descriptions")) {
      ParseTermMap(record["descriptions"], &entity.descriptions);
    }
    if (record.contains("aliases") && record["aliases"].is_object()) {
      for (const auto& [lang, list] : record["aliases"].items()) {
        if (lang.empty() || !list.is_array()) continue;
        std::vector<std::string> values;
        for (const auto& alias : list) {
          if (alias.is_string()) {
            values.push_back(alias.get<std::string>());
          } else if (alias.is_object() && alias.contains("value") &&
                     alias["value"].is_string()) {
            values.push_back(alias["value"].get<std::string>());
          }
        }
        if (!values.empty()) entity.aliases[Lowercased(lang)] = std::move(values);
      }
    }
    if (record.contains("sitelinks") && record["sitelinks"].is_object()) {
      for (const auto& [site, link] : record["sitelinks"].items()) {
        std::string title;
        if (link.is_string()) {
          title = link.get<std::string>();
        } else if (link.is_object() && link.contains("title") &&
                   link["title"].is_string()) {
          title = link["title"].get<std::string>();
        }
        if (!site.empty() && !title.empty()) entity.sitelinks[site] = title;
      }
    }
    if (record.contains("claims") && record["claims"].is_object()) {
      for (const auto& [property, claims] : record["claims"].items()) {
        if (!claims.is_array()) continue;
        for (const auto& claim : claims) {
          if (auto statement = ParseClaim(claim, property)) {
            entity.statements.push_back(std::move(*statement));
          }
        }
      }
    }
    if (record.contains("pageid") && record["pageid"].is_number_unsigned()) {
      entity.page_id = record["pageid"].get<uint64_t>();
    }
    if (record.contains("lastrevid") &&
        record["lastrevid"].is_number_unsigned()) {
      entity.revision_id = record["lastrevid"].get<uint64_t>();
    }
    return entity;
  } catch (const std::exception& e) {
    return RecordError{std::string("record rejected: ") + e.what()};
  }
}

// ---------------------------------------------------------------------------
// Dump streaming

struct DumpLineSource::Impl {
  std::ifstream file;
  boost::iostreams::filtering_istream in;
  uint64_t offset = 0;
  bool array_layout = false;
  bool layout_known = false;

  explicit Impl(const std::filesystem::path& path) {
    file.open(path, std::ios::binary);
    if (!file) throw IoError("cannot open dump " + path.string());
    auto ext = path.extension().string();
    if (ext == ".gz") {
      in.push(boost::iostreams::gzip_decompressor());
    } else if (ext == ".bz2") {
      in.push(boost::iostreams::bzip2_decompressor());
    }
    in.push(file);
  }

  std::optional<std::string> NextLine() {
    std::string line;
    try {
      if (!std::getline(in, line)) {
        if (in.bad()) throw IoError("read failure in dump stream");
        return std::nullopt;
      }
    } catch (const boost::iostreams::gzip_error&) {
      throw IoError("corrupt gzip stream");
    } catch (const boost::iostreams::bzip2_error&) {
      throw IoError("corrupt bzip2 stream");
    }
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }
};

DumpLineSource::DumpLineSource(const std::filesystem::path& path)
    : impl_(std::make_unique<Impl>(path)) {}
DumpLineSource::~DumpLineSource() = default;
DumpLineSource::DumpLineSource(DumpLineSource&&) noexcept = default;
DumpLineSource& DumpLineSource::operator=(DumpLineSource&&) noexcept = default;

std::optional<RawRecord> DumpLineSource::Next() {
  while (true) {
    uint64_t record_offset = impl_->offset;
    auto line = impl_->NextLine();
    if (!line) return std::nullopt;

    std::string_view text(*line);
    // Trim outer whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(
                                text.front()))) {
      text.remove_prefix(1);
      ++record_offset;
    }
    while (!text.empty() &&
           std::isspace(static_cast<unsigned char>(text.back()))) {
      text.remove_suffix(1);
    }
    if (text.empty()) continue;

    if (!impl_->layout_known) {
      impl_->layout_known = true;
      impl_->array_layout = text.front() == '[';
    }
    if (impl_->array_layout) {
      // Bracket lines and the trailing comma are layout, not content.
      if (text == "[" || text == "]" || text == "[]") continue;
      if (text.front() == '[') {
        text.remove_prefix(1);
        ++record_offset;
      }
      if (!text.empty() && text.back() == ']') text.remove_suffix(1);
      if (!text.empty() && text.back() == ',') text.remove_suffix(1);
      if (IsWhitespaceOnly(text)) continue;
    }
    return RawRecord{std::string(text), record_offset};
  }
}

std::optional<StreamItem> EntityStream::Next() {
  auto record = source_.Next();
  if (!record) return std::nullopt;
  return StreamItem{ParseEntityRecord(record->text), record->offset};
}

}  // namespace dbw
