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

#include "dbw/values.hpp"

#include <charconv>
#include <cstdlib>

#include "dbw/iri.hpp"

namespace dbw {
namespace {

// Splits "±YYYY-MM-DD..." (optionally followed by a 'T' time part) into
// signed year, month, day. Returns false on anything unparsable.
bool SplitDate(std::string_view time, long long* year, int* month, int* day) {
  bool negative = false;
  if (!time.empty() && (time[0] == '+' || time[0] == '-')) {
    negative = time[0] == '-';
    time.remove_prefix(1);
  }
  size_t t = time.find('T');
  if (t != std::string_view::npos) time = time.substr(0, t);

  long long parts[3] = {0, 0, 0};
  int n = 0;
  size_t pos = 0;
  while (n < 3 && pos <= time.size()) {
    size_t dash = time.find('-', pos);
    std::string_view field = time.substr(
        pos, dash == std::string_view::npos ? std::string_view::npos
                                            : dash - pos);
    if (field.empty()) return false;
    long long v = 0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || p != field.data() + field.size()) return false;
    parts[n++] = v;
    if (dash == std::string_view::npos) break;
    pos = dash + 1;
  }
  if (n == 0) return false;
  *year = negative ? -parts[0] : parts[0];
  *month = n > 1 ? static_cast<int>(parts[1]) : 0;
  *day = n > 2 ? static_cast<int>(parts[2]) : 0;
  return true;
}

}  // namespace

std::string FormatDouble(double d) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  return ec == std::errc() ? std::string(buf, p) : std::string("0");
}

std::optional<std::pair<std::string, std::string>> DateLexical(
    const TimeValue& t) {
  if (t.precision < 9) return std::nullopt;
  long long year = 0;
  int month = 0, day = 0;
  if (!SplitDate(t.time, &year, &month, &day)) return std::nullopt;
  if (t.precision == 9) {
    return std::make_pair(std::to_string(year), kXsdGYear);
  }
  if (t.precision == 10) {
    if (month < 1 || month > 12) return std::nullopt;
    return std::make_pair(std::to_string(year) + "-" + std::to_string(month),
                          kXsdGYearMonth);
  }
  if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
  return std::make_pair(std::to_string(year) + "-" + std::to_string(month) +
                            "-" + std::to_string(day),
                        kXsdDate);
}

std::string NormalizeAmount(std::string_view amount) {
  if (!amount.empty() && amount[0] == '+') amount.remove_prefix(1);
  return std::string(amount);
}

std::optional<Term> RawTermForValue(const SnakValue& v,
                                    bool url_string_as_iri) {
  if (const auto* id = std::get_if<EntityId>(&v)) {
    return Term(IriTerm{EntityIri(*id)});
  }
  if (const auto* s = std::get_if<std::string>(&v)) {
    if (url_string_as_iri && LooksLikeIri(*s)) return Term(IriTerm{*s});
    return Term(Literal{*s, ""});
  }
  if (const auto* t = std::get_if<TimeValue>(&v)) {
    auto date = DateLexical(*t);
    if (!date) return std::nullopt;
    return Term(Literal{date->first, date->second});
  }
  if (const auto* g = std::get_if<GlobeCoordinate>(&v)) {
    return Term(Literal{
        FormatDouble(g->latitude) + " " + FormatDouble(g->longitude), ""});
  }
  if (const auto* q = std::get_if<QuantityValue>(&v)) {
    return Term(Literal{NormalizeAmount(q->amount), kXsdDecimal});
  }
  if (const auto* m = std::get_if<MonolingualText>(&v)) {
    return Term(LangLiteral{m->text, m->language});
  }
  return std::nullopt;  // SomeValue / NoValue / Unsupported
}

std::optional<std::string> SpliceLexical(const SnakValue& v) {
  if (const auto* id = std::get_if<EntityId>(&v)) return id->ToString();
  auto term = RawTermForValue(v);
  if (!term) return std::nullopt;
  if (const auto* lit = std::get_if<Literal>(&*term)) return lit->lexical;
  if (const auto* ll = std::get_if<LangLiteral>(&*term)) return ll->lexical;
  return std::get<IriTerm>(*term).iri;
}

std::optional<std::string> HashLexical(const SnakValue& v) {
  if (std::holds_alternative<EntityId>(v)) return std::nullopt;
  auto term = RawTermForValue(v);
  if (!term) return std::nullopt;
  if (const auto* lit = std::get_if<Literal>(&*term)) return lit->lexical;
  if (const auto* ll = std::get_if<LangLiteral>(&*term)) return ll->lexical;
  return std::get<IriTerm>(*term).iri;
}

}  // namespace dbw
