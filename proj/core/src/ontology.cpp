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

#include "dbw/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dbw/errors.hpp"
#include "dbw/iri.hpp"

namespace dbw {
namespace {

std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string ResolveIriToken(const std::string& token, int line) {
  auto iri = ExpandCurie(token);
  if (!iri) throw ParseError("cannot resolve IRI token '" + token + "'", line);
  return *iri;
}

std::pair<std::string, std::string> NormalizedPair(std::string a,
                                                   std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

std::optional<std::string> EquivalenceMap::PropertyFor(
    const EntityId& p) const {
  if (!p.is_property()) return std::nullopt;
  auto it = property_equiv.find(p.number);
  if (it == property_equiv.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> EquivalenceMap::ClassFor(const EntityId& q) const {
  if (!q.is_item()) return std::nullopt;
  auto it = class_equiv.find(q.number);
  if (it == class_equiv.end()) return std::nullopt;
  return it->second;
}

bool Ontology::HasClass(std::string_view class_iri) const {
  return classes_.contains(std::string(class_iri));
}

const std::vector<std::string>& Ontology::SuperclassesOf(
    std::string_view c) const {
  static const std::vector<std::string> kEmpty;
  auto it = closure_.find(std::string(c));
  return it == closure_.end() ? kEmpty : it->second;
}

RangeSpec Ontology::RangeOf(std::string_view property_iri) const {
  auto it = ranges_.find(std::string(property_iri));
  return it == ranges_.end() ? RangeSpec(Unconstrained{}) : it->second;
}

bool Ontology::AreDisjoint(std::string_view a, std::string_view b) const {
  if (disjoint_.empty()) return false;
  std::vector<std::string> as(SuperclassesOf(a));
  as.emplace_back(a);
  std::vector<std::string> bs(SuperclassesOf(b));
  bs.emplace_back(b);
  for (const auto& ca : as) {
    for (const auto& cb : bs) {
      if (disjoint_.contains(NormalizedPair(ca, cb))) return true;
    }
  }
  return false;
}

struct OntologyLoader {
  Ontology onto;
  EquivalenceMap equiv;
  std::vector<std::string> warnings;
  std::unordered_map<std::string, std::vector<std::string>> parents;

  void AddClass(const std::string& iri) { onto.classes_.insert(iri); }

  void AddEdge(const std::string& child, const std::string& parent) {
    AddClass(child);
    AddClass(parent);
    if (onto.edges_.emplace(child, parent).second) {
      parents[child].push_back(parent);
    }
  }

  // Iterative DFS with an explicit color map; reports one cycle member.
  void RejectCycles() {
    enum Color { kWhite, kGray, kBlack };
    std::unordered_map<std::string, Color> color;
    for (const auto& c : onto.classes_) {
      if (color[c] != kWhite) continue;
      std::vector<std::pair<std::string, size_t>> stack{{c, 0}};
      color[c] = kGray;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        const auto& ps = parents[node];
        if (next < ps.size()) {
          const std::string& parent = ps[next++];
          if (color[parent] == kGray) throw CyclicHierarchyError(parent);
          if (color[parent] == kWhite) {
            color[parent] = kGray;
            stack.emplace_back(parent, 0);
          }
        } else {
          color[node] = kBlack;
          stack.pop_back();
        }
      }
    }
  }

  // Precomputes the sorted transitive superclass set of every class.
  void ComputeClosures() {
    for (const auto& c : onto.classes_) {
      std::set<std::string> seen;
      std::vector<std::string> work(parents[c]);
      while (!work.empty()) {
        std::string cur = std::move(work.back());
        work.pop_back();
        if (!seen.insert(cur).second) continue;
        for (const auto& p : parents[cur]) work.push_back(p);
      }
      onto.closure_[c] = {seen.begin(), seen.end()};
    }
  }

  void Line(const std::vector<std::string>& tokens, int line) {
    const std::string& directive = tokens[0];
    auto expect = [&](size_t n) {
      if (tokens.size() != n) {
        throw ParseError("'" + directive + "' expects " +
                             std::to_string(n - 1) + " arguments",
                         line);
      }
    };
    if (directive == "class") {
      expect(2);
      AddClass(ResolveIriToken(tokens[1], line));
    } else if (directive == "subclass") {
      expect(3);
      AddEdge(ResolveIriToken(tokens[1], line),
              ResolveIriToken(tokens[2], line));
    } else if (directive == "range") {
      expect(4);
      std::string prop = ResolveIriToken(tokens[1], line);
      std::string target = ResolveIriToken(tokens[3], line);
      if (tokens[2] == "literal") {
        onto.ranges_[prop] = LiteralRange{target};
      } else if (tokens[2] == "object") {
        onto.ranges_[prop] = ObjectRange{target};
      } else {
        throw ParseError("range kind must be 'literal' or 'object'", line);
      }
    } else if (directive == "disjoint") {
      expect(3);
      onto.disjoint_.insert(NormalizedPair(ResolveIriToken(tokens[1], line),
                                           ResolveIriToken(tokens[2], line)));
    } else if (directive == "equivprop") {
      expect(3);
      auto id = EntityId::Parse(tokens[1]);
      if (!id || !id->is_property()) {
        throw ParseError("equivprop expects a P-id, got '" + tokens[1] + "'",
                         line);
      }
      std::string iri = ResolveIriToken(tokens[2], line);
      if (!equiv.property_equiv.emplace(id->number, iri).second) {
        warnings.push_back("line " + std::to_string(line) +
                           ": duplicate equivprop for " + tokens[1] +
                           " ignored");
      }
    } else if (directive == "equivclass") {
      expect(3);
      auto id = EntityId::Parse(tokens[1]);
      if (!id || !id->is_item()) {
        throw ParseError("equivclass expects a Q-id, got '" + tokens[1] + "'",
                         line);
      }
      std::string iri = ResolveIriToken(tokens[2], line);
      if (!equiv.class_equiv.emplace(id->number, iri).second) {
        warnings.push_back("line " + std::to_string(line) +
                           ": duplicate equivclass for " + tokens[1] +
                           " ignored");
      }
    } else {
      throw ParseError("unknown directive '" + directive + "'", line);
    }
  }
};

OntologyBundle LoadOntology(std::istream& in) {
  OntologyLoader loader;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = Tokenize(line);
    if (tokens.empty()) continue;
    loader.Line(tokens, line_no);
  }
  loader.RejectCycles();
  loader.ComputeClosures();
  return {std::move(loader.onto), std::move(loader.equiv),
          std::move(loader.warnings)};
}

OntologyBundle LoadOntologyText(std::string_view text) {
  std::istringstream in{std::string(text)};
  return LoadOntology(in);
}

OntologyBundle LoadOntologyFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ontology file " + path.string());
  return LoadOntology(in);
}

}  // namespace dbw
