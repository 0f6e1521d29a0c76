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

#include "dbw/ntriples.hpp"

#include <cctype>
#include <charconv>

namespace dbw {
namespace {

void AppendCodepointUtf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool ParseHex(std::string_view s, uint32_t* out) {
  uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || p != s.data() + s.size()) return false;
  *out = v;
  return true;
}

void SkipSpace(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
}

// Consumes `<iri>` from the front of s.
std::optional<std::string> TakeIriRef(std::string_view& s) {
  if (s.empty() || s.front() != '<') return std::nullopt;
  size_t end = s.find('>');
  if (end == std::string_view::npos) return std::nullopt;
  std::string iri(s.substr(1, end - 1));
  s.remove_prefix(end + 1);
  if (!IsValidIri(iri)) return std::nullopt;
  return iri;
}

}  // namespace

std::string EscapeNtLiteral(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          static constexpr char kHex[] = "0123456789ABCDEF";
          out += "\\u00";
          out += kHex[c >> 4];
          out += kHex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::optional<std::string> UnescapeNtLiteral(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (++i >= s.size()) return std::nullopt;
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case '"': out += '"'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case 'u': {
        if (i + 4 >= s.size()) return std::nullopt;
        uint32_t cp = 0;
        if (!ParseHex(s.substr(i + 1, 4), &cp)) return std::nullopt;
        AppendCodepointUtf8(out, cp);
        i += 4;
        break;
      }
      case 'U': {
        if (i + 8 >= s.size()) return std::nullopt;
        uint32_t cp = 0;
        if (!ParseHex(s.substr(i + 1, 8), &cp)) return std::nullopt;
        AppendCodepointUtf8(out, cp);
        i += 8;
        break;
      }
      default:
        return std::nullopt;
    }
  }
  return out;
}

bool IsValidIri(std::string_view iri) {
  size_t colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (unsigned char c : iri) {
    if (c <= 0x20 || c == 0x7F) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

void AppendTerm(std::string& out, const Term& term) {
  if (const auto* iri = std::get_if<IriTerm>(&term)) {
    out += '<';
    out += iri->iri;
    out += '>';
    return;
  }
  if (const auto* lit = std::get_if<Literal>(&term)) {
    out += '"';
    out += EscapeNtLiteral(lit->lexical);
    out += '"';
    if (!lit->datatype.empty()) {
      out += "^^<";
      out += lit->datatype;
      out += '>';
    }
    return;
  }
  const auto& ll = std::get<LangLiteral>(term);
  out += '"';
  out += EscapeNtLiteral(ll.lexical);
  out += "\"@";
  out += ll.lang;
}

std::string SerializeTriple(const Triple& t) {
  std::string out;
  out.reserve(t.subject.size() + t.predicate.size() + 64);
  out += '<';
  out += t.subject;
  out += "> <";
  out += t.predicate;
  out += "> ";
  AppendTerm(out, t.object);
  out += " .";
  return out;
}

std::optional<ParsedLine> ParseNtLine(std::string_view line) {
  SkipSpace(line);
  if (line.empty() || line.front() == '#') return std::nullopt;

  ParsedLine result;
  auto subject = TakeIriRef(line);
  if (!subject) return std::nullopt;
  result.subject = std::move(*subject);

  SkipSpace(line);
  auto predicate = TakeIriRef(line);
  if (!predicate) return std::nullopt;
  result.predicate = std::move(*predicate);

  SkipSpace(line);
  if (line.empty()) return std::nullopt;
  if (line.front() == '<') {
    auto object = TakeIriRef(line);
    if (!object) return std::nullopt;
    result.object = IriTerm{std::move(*object)};
  } else if (line.front() == '"') {
    // Find the closing quote, honoring backslash escapes.
    size_t end = std::string_view::npos;
    for (size_t i = 1; i < line.size(); ++i) {
      if (line[i] == '\\') {
        ++i;
      } else if (line[i] == '"') {
        end = i;
        break;
      }
    }
    if (end == std::string_view::npos) return std::nullopt;
    auto lexical = UnescapeNtLiteral(line.substr(1, end - 1));
    if (!lexical) return std::nullopt;
    line.remove_prefix(end + 1);
    if (line.starts_with("^^")) {
      line.remove_prefix(2);
      auto datatype = TakeIriRef(line);
      if (!datatype) return std::nullopt;
      result.object = Literal{std::move(*lexical), std::move(*datatype)};
    } else if (line.starts_with("@")) {
      line.remove_prefix(1);
      size_t n = 0;
      while (n < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[n])) ||
              line[n] == '-')) {
        ++n;
      }
      if (n == 0) return std::nullopt;
      result.object = LangLiteral{std::move(*lexical), std::string(line.substr(0, n))};
      line.remove_prefix(n);
    } else {
      result.object = Literal{std::move(*lexical), ""};
    }
  } else {
    return std::nullopt;
  }

  SkipSpace(line);
  if (line.empty() || line.front() != '.') return std::nullopt;
  line.remove_prefix(1);
  SkipSpace(line);
  if (!line.empty() && !line.starts_with("\r")) return std::nullopt;
  return result;
}

}  // namespace dbw
