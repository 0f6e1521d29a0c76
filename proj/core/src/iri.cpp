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

#include "dbw/iri.hpp"

#include <openssl/sha.h>

#include <array>
#include <utility>

#include "dbw/values.hpp"

namespace dbw {
namespace {

constexpr std::pair<std::string_view, std::string_view> kPrefixes[] = {
    {"rdf", kRdfNs},      {"rdfs", kRdfsNs},  {"owl", kOwlNs},
    {"xsd", kXsdNs},      {"dbo", kDbpediaOntology},
    {"geo", kGeoNs},      {"georss", kGeoRssNs},
    {"foaf", kFoafNs},    {"dw", kDwResource},
    {"wd", kWikidataEntity}, {"wkdt", kWikidataEntity},
};

// Characters that may not appear raw inside an IRI. Non-ASCII UTF-8
// bytes are legal in IRIs and stay as they are.
bool NeedsPercentEncoding(unsigned char c) {
  if (c <= 0x20 || c == 0x7F) return true;
  switch (c) {
    case '"': case '<': case '>': case '\\': case '^': case '`':
    case '{': case '|': case '}': case '#': case '%': case '?':
    case '[': case ']':
      return true;
    default:
      return false;
  }
}

}  // namespace

bool LooksLikeIri(std::string_view s) {
  return s.starts_with("http://") || s.starts_with("https://");
}

std::optional<std::string> ExpandCurie(std::string_view token) {
  if (LooksLikeIri(token)) return std::string(token);
  size_t colon = token.find(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  std::string_view prefix = token.substr(0, colon);
  std::string_view local = token.substr(colon + 1);
  for (const auto& [name, ns] : kPrefixes) {
    if (prefix == name) return std::string(ns) + std::string(local);
  }
  return std::nullopt;
}

std::string EntityIri(const EntityId& id) {
  return std::string(kDwResource) + id.ToString();
}

std::string WikidataIri(const EntityId& id) {
  return std::string(kWikidataEntity) + id.ToString();
}

std::string EncodeTitleSegment(std::string_view title) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(title.size());
  for (unsigned char c : title) {
    if (c == ' ') {
      out += '_';
    } else if (NeedsPercentEncoding(c)) {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

std::string DbpediaPageIri(std::string_view language, std::string_view title) {
  std::string iri = "http://";
  if (language != "en") {
    iri += language;
    iri += '.';
  }
  iri += "dbpedia.org/resource/";
  iri += EncodeTitleSegment(title);
  return iri;
}

std::string LiteralHash(std::string_view lexical, int n) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(lexical.data()),
         lexical.size(), digest);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    unsigned char byte = digest[i / 2];
    out += kHex[(i % 2 == 0) ? (byte >> 4) : (byte & 0xF)];
  }
  return out;
}

std::optional<std::string> StatementIri(const EntityId& subject,
                                        const EntityId& property,
                                        const SnakValue& value) {
  std::string iri = EntityIri(subject);
  iri += '_';
  iri += property.ToString();
  iri += '_';
  if (const auto* id = std::get_if<EntityId>(&value)) {
    iri += id->ToString();
    return iri;
  }
  auto lexical = HashLexical(value);
  if (!lexical) return std::nullopt;
  iri += LiteralHash(*lexical, 5);
  return iri;
}

}  // namespace dbw
