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

#include "dbw/mapping.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dbw/errors.hpp"
#include "dbw/iri.hpp"
#include "dbw/ntriples.hpp"
#include "dbw/values.hpp"

namespace dbw {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::pair<std::string_view, Template::Kind> kFunctions[] = {
    {"getDBpediaClass", Template::Kind::kDbpediaClass},
    {"getLatitude", Template::Kind::kLatitude},
    {"getLongitude", Template::Kind::kLongitude},
    {"getGeoRss", Template::Kind::kGeoRss},
    {"1", Template::Kind::kRaw},
    {"2", Template::Kind::kWikiTitle},
};

// Wraps a spliced string into a term: an IRI when the result carries an
// http(s) scheme, a simple literal otherwise.
Term TermFromSpliced(std::string text) {
  if (LooksLikeIri(text)) return IriTerm{std::move(text)};
  return Literal{std::move(text), ""};
}

bool RangeCompatible(const RangeSpec& range, const Term& object) {
  if (std::holds_alternative<Unconstrained>(range)) return true;
  if (std::holds_alternative<ObjectRange>(range)) return IsIriTerm(object);
  return !IsIriTerm(object);
}

// The schema-equivalence fallback: predicate = equivalent property,
// object = bare `$1`.
std::optional<MappingRule> DefaultRuleFor(const EntityId& property,
                                          const EquivalenceMap& em) {
  auto equivalent = em.PropertyFor(property);
  if (!equivalent) return std::nullopt;
  MappingRule rule{property, {}};
  rule.bindings.push_back(
      {*equivalent, Template::Parse("$1")});
  return rule;
}

MappedEmission ApplyBindings(const MappingRule& rule, const SnakValue& value,
                             const EquivalenceMap& em, const Ontology& onto) {
  MappedEmission out;
  for (const Binding& binding : rule.bindings) {
    std::string predicate = ResolvePredicate(binding.predicate);
    if (!IsValidIri(predicate)) {
      ++out.inapplicable;
      continue;
    }
    auto object = EvalTemplate(binding.object, value, em);
    if (!object) {
      ++out.inapplicable;
      continue;
    }
    if (RangeCompatible(onto.RangeOf(predicate), *object)) {
      out.triples.push_back({std::move(predicate), std::move(*object)});
    } else {
      out.rejected.push_back({std::move(predicate), std::move(*object),
                              RejectReason::kRangeKindMismatch});
    }
  }
  return out;
}

void ParseRuleValue(const Json& value, MappingRule* rule) {
  if (value.is_array()) {
    for (const auto& element : value) ParseRuleValue(element, rule);
    return;
  }
  if (!value.is_object()) {
    throw ParseError("mapping for " + rule->property.ToString() +
                     " must be an object or a list of objects");
  }
  for (const auto& [predicate, tmpl] : value.items()) {
    if (!tmpl.is_string()) {
      throw ParseError("template for '" + predicate + "' must be a string");
    }
    rule->bindings.push_back(
        {predicate, Template::Parse(tmpl.get<std::string>())});
  }
}

}  // namespace

Template Template::Parse(std::string_view text) {
  size_t dollar = text.find('$');
  Template t;
  if (dollar == std::string_view::npos) {
    t.kind_ = Kind::kConstant;
    t.prefix_ = std::string(text);
    return t;
  }
  t.prefix_ = std::string(text.substr(0, dollar));
  std::string_view rest = text.substr(dollar + 1);
  for (const auto& [name, kind] : kFunctions) {
    if (rest.starts_with(name)) {
      t.kind_ = kind;
      t.suffix_ = std::string(rest.substr(name.size()));
      if (t.suffix_.find('$') != std::string::npos) {
        throw ParseError("template '" + std::string(text) +
                         "' has more than one placeholder");
      }
      return t;
    }
  }
  size_t end = 0;
  while (end < rest.size() &&
         (std::isalnum(static_cast<unsigned char>(rest[end])) != 0)) {
    ++end;
  }
  throw UnknownFunctionError(std::string(rest.substr(0, end)));
}

Template Template::Constant(std::string text) {
  Template t;
  t.kind_ = Kind::kConstant;
  t.prefix_ = std::move(text);
  return t;
}

std::string ResolvePredicate(std::string_view token) {
  if (auto iri = ExpandCurie(token)) return *iri;
  // Bare names live in the DBpedia ontology namespace ("logo").
  return std::string(kDbpediaOntology) + std::string(token);
}

std::string_view RejectReasonName(RejectReason r) {
  switch (r) {
    case RejectReason::kRangeKindMismatch:
      return "range-kind-mismatch";
  }
  return "unknown";
}

MappingTable ParseMappingConfig(std::string_view json_text) {
  Json config = Json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (config.is_discarded() || !config.is_object()) {
    throw ParseError("mapping config is not a JSON object");
  }
  MappingTable table;
  for (const auto& [key, value] : config.items()) {
    auto property = EntityId::Parse(key);
    if (!property || !property->is_property()) {
      throw ParseError("mapping key '" + key + "' is not a P-id");
    }
    MappingRule rule{*property, {}};
    ParseRuleValue(value, &rule);
    if (rule.bindings.empty()) {
      throw ParseError("mapping for " + key + " has no bindings");
    }
    table[*property] = std::move(rule);
  }
  return table;
}

MappingTable LoadMappingConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mapping config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseMappingConfig(buffer.str());
}

std::optional<Term> EvalTemplate(const Template& t, const SnakValue& v,
                                 const EquivalenceMap& em) {
  switch (t.kind()) {
    case Template::Kind::kConstant: {
      if (auto iri = ExpandCurie(t.prefix())) return Term(IriTerm{*iri});
      return Term(Literal{t.prefix(), ""});
    }
    case Template::Kind::kRaw: {
      if (!t.has_surrounding_text()) return RawTermForValue(v);
      auto lexical = SpliceLexical(v);
      if (!lexical) return std::nullopt;
      return TermFromSpliced(t.prefix() + *lexical + t.suffix());
    }
    case Template::Kind::kWikiTitle: {
      const auto* title = std::get_if<std::string>(&v);
      if (!title) return std::nullopt;
      return TermFromSpliced(t.prefix() + EncodeTitleSegment(*title) +
                             t.suffix());
    }
    case Template::Kind::kDbpediaClass: {
      const auto* id = std::get_if<EntityId>(&v);
      if (!id) return std::nullopt;
      auto class_iri = em.ClassFor(*id);
      if (!class_iri) return std::nullopt;
      if (!t.has_surrounding_text()) return Term(IriTerm{*class_iri});
      return TermFromSpliced(t.prefix() + *class_iri + t.suffix());
    }
    case Template::Kind::kLatitude:
    case Template::Kind::kLongitude: {
      const auto* coord = std::get_if<GlobeCoordinate>(&v);
      if (!coord) return std::nullopt;
      std::string lexical = FormatDouble(t.kind() == Template::Kind::kLatitude
                                             ? coord->latitude
                                             : coord->longitude);
      if (!t.has_surrounding_text()) {
        return Term(Literal{std::move(lexical), kXsdFloat});
      }
      return TermFromSpliced(t.prefix() + lexical + t.suffix());
    }
    case Template::Kind::kGeoRss: {
      const auto* coord = std::get_if<GlobeCoordinate>(&v);
      if (!coord) return std::nullopt;
      std::string lexical =
          FormatDouble(coord->latitude) + " " + FormatDouble(coord->longitude);
      if (!t.has_surrounding_text()) return Term(Literal{std::move(lexical), ""});
      return TermFromSpliced(t.prefix() + lexical + t.suffix());
    }
  }
  return std::nullopt;
}

MappedEmission MapStatement(const Statement& s, const MappingTable& rules,
                            const EquivalenceMap& em, const Ontology& onto) {
  if (s.rank == Rank::kDeprecated || IsSkippableValue(s.value)) return {};
  if (auto it = rules.find(s.property); it != rules.end()) {
    return ApplyBindings(it->second, s.value, em, onto);
  }
  if (auto fallback = DefaultRuleFor(s.property, em)) {
    return ApplyBindings(*fallback, s.value, em, onto);
  }
  return {};
}

MappedEmission MapQualifier(const Snak& qualifier, const MappingTable& rules,
                            const EquivalenceMap& em, const Ontology& onto) {
  if (IsSkippableValue(qualifier.value)) return {};
  if (auto it = rules.find(qualifier.property); it != rules.end()) {
    return ApplyBindings(it->second, qualifier.value, em, onto);
  }
  if (auto fallback = DefaultRuleFor(qualifier.property, em)) {
    return ApplyBindings(*fallback, qualifier.value, em, onto);
  }
  return {};
}

bool HasMappingFor(const EntityId& property, const MappingTable& rules,
                   const EquivalenceMap& em) {
  return rules.contains(property) || em.PropertyFor(property).has_value();
}

}  // namespace dbw
