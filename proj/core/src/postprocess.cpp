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

#include "dbw/postprocess.hpp"

#include <algorithm>
#include <fstream>

#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>

#include "dbw/errors.hpp"
#include "dbw/iri.hpp"
#include "dbw/ntriples.hpp"

namespace dbw {
namespace {

// Chain walk with memoization. Every node on or leading into a cycle is
// unresolvable and lands in `cyclic`.
void ResolveFrom(const EntityId& start,
                 const std::map<EntityId, EntityId>& edges,
                 RedirectClosure* closure) {
  if (closure->resolved.contains(start) || closure->cyclic.contains(start)) {
    return;
  }
  std::vector<EntityId> path;
  std::set<EntityId> on_path;
  EntityId current = start;
  while (true) {
    path.push_back(current);
    on_path.insert(current);
    auto edge = edges.find(current);
    if (edge == edges.end()) {
      // `current` is a final target; everything on the path resolves to it.
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        closure->resolved[path[i]] = current;
      }
      return;
    }
    const EntityId& next = edge->second;
    if (auto known = closure->resolved.find(next);
        known != closure->resolved.end()) {
      for (const EntityId& node : path) {
        closure->resolved[node] = known->second;
      }
      return;
    }
    if (closure->cyclic.contains(next) || on_path.contains(next)) {
      // The whole path either sits on the cycle or leads into it; nothing
      // on it has a final target.
      for (const EntityId& node : path) closure->cyclic.insert(node);
      return;
    }
    current = next;
  }
}

std::optional<EntityId> RewriteIdToken(std::string_view token,
                                       const RedirectClosure& closure) {
  auto id = EntityId::Parse(token);
  if (!id) return std::nullopt;
  auto it = closure.resolved.find(*id);
  if (it == closure.resolved.end()) return std::nullopt;
  return it->second;
}

bool IsGzipPath(const std::filesystem::path& p) {
  return p.extension() == ".gz";
}

}  // namespace

RedirectClosure BuildRedirectClosure(
    const std::vector<RedirectRecord>& records) {
  std::map<EntityId, EntityId> edges;
  for (const RedirectRecord& r : records) {
    if (r.from == r.to) continue;
    edges[r.from] = r.to;  // last record wins
  }
  RedirectClosure closure;
  for (const auto& [from, unused_to] : edges) {
    ResolveFrom(from, edges, &closure);
  }
  return closure;
}

std::optional<std::string> RewriteDwIri(std::string_view iri,
                                        const RedirectClosure& closure) {
  if (closure.resolved.empty() || !iri.starts_with(kDwResource)) {
    return std::nullopt;
  }
  std::string_view local = iri.substr(kDwResource.size());

  // Entity IRI: a single id token.
  size_t first_sep = local.find('_');
  if (first_sep == std::string_view::npos) {
    auto target = RewriteIdToken(local, closure);
    if (!target) return std::nullopt;
    return std::string(kDwResource) + target->ToString();
  }

  // Statement IRI: Qs_Px_{Qv|hash}. Rewrite the subject and, when the
  // third token is an item id, the value part.
  size_t second_sep = local.find('_', first_sep + 1);
  if (second_sep == std::string_view::npos) return std::nullopt;
  std::string_view subject_token = local.substr(0, first_sep);
  std::string_view property_token =
      local.substr(first_sep + 1, second_sep - first_sep - 1);
  std::string_view value_token = local.substr(second_sep + 1);

  auto new_subject = RewriteIdToken(subject_token, closure);
  auto new_value = RewriteIdToken(value_token, closure);
  if (!new_subject && !new_value) return std::nullopt;

  std::string out(kDwResource);
  out += new_subject ? new_subject->ToString() : std::string(subject_token);
  out += '_';
  out += property_token;
  out += '_';
  out += new_value ? new_value->ToString() : std::string(value_token);
  return out;
}

size_t ResolveTriples(std::vector<Triple>* triples,
                      const RedirectClosure& closure) {
  size_t rewritten = 0;
  for (Triple& triple : *triples) {
    bool changed = false;
    if (auto subject = RewriteDwIri(triple.subject, closure)) {
      triple.subject = std::move(*subject);
      changed = true;
    }
    if (auto* object = std::get_if<IriTerm>(&triple.object)) {
      if (auto rewritten_object = RewriteDwIri(object->iri, closure)) {
        object->iri = std::move(*rewritten_object);
        changed = true;
      }
    }
    if (changed) ++rewritten;
  }
  return rewritten;
}

uint64_t ResolveDatasetFile(const std::filesystem::path& file,
                            const RedirectClosure& closure) {
  namespace io = boost::iostreams;
  if (!std::filesystem::exists(file)) return 0;

  std::filesystem::path tmp = file;
  tmp += ".tmp";
  uint64_t rewritten = 0;
  {
    std::ifstream raw_in(file, std::ios::binary);
    if (!raw_in) throw IoError("cannot open dataset " + file.string());
    io::filtering_istream in;
    if (IsGzipPath(file)) in.push(io::gzip_decompressor());
    in.push(raw_in);

    std::ofstream raw_out(tmp, std::ios::binary | std::ios::trunc);
    if (!raw_out) throw IoError("cannot write " + tmp.string());
    io::filtering_ostream out;
    if (IsGzipPath(file)) out.push(io::gzip_compressor());
    out.push(raw_out);

    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto parsed = ParseNtLine(line);
      if (parsed) {
        bool changed = false;
        if (auto subject = RewriteDwIri(parsed->subject, closure)) {
          parsed->subject = std::move(*subject);
          changed = true;
        }
        if (auto* object = std::get_if<IriTerm>(&parsed->object)) {
          if (auto target = RewriteDwIri(object->iri, closure)) {
            object->iri = std::move(*target);
            changed = true;
          }
        }
        if (changed) {
          ++rewritten;
          Triple t{parsed->subject, parsed->predicate, parsed->object,
                   DatasetId::kRawFacts};
          out << SerializeTriple(t) << '\n';
          continue;
        }
      }
      out << line << '\n';
    }
  }
  std::filesystem::rename(tmp, file);
  return rewritten;
}

void TypeIndex::Add(const std::string& subject, const std::string& class_iri) {
  auto& types = direct_types[subject];
  auto it = std::lower_bound(types.begin(), types.end(), class_iri);
  if (it == types.end() || *it != class_iri) types.insert(it, class_iri);
}

const std::vector<std::string>* TypeIndex::TypesOf(
    const std::string& subject) const {
  auto it = direct_types.find(subject);
  return it == direct_types.end() ? nullptr : &it->second;
}

TypeIndex BuildTypeIndex(const std::vector<Triple>& mapped_type_triples) {
  TypeIndex index;
  for (const Triple& t : mapped_type_triples) {
    if (t.predicate != kRdfType) continue;
    if (const auto* object = std::get_if<IriTerm>(&t.object)) {
      index.Add(t.subject, object->iri);
    }
  }
  return index;
}

std::vector<Triple> InferTransitiveTypes(const TypeIndex& index,
                                         const Ontology& onto) {
  std::vector<std::string> subjects;
  subjects.reserve(index.direct_types.size());
  for (const auto& [subject, unused] : index.direct_types) {
    subjects.push_back(subject);
  }
  std::sort(subjects.begin(), subjects.end());

  std::vector<Triple> out;
  for (const std::string& subject : subjects) {
    const auto& direct = index.direct_types.at(subject);
    std::set<std::string> ancestors;
    for (const std::string& type : direct) {
      const auto& supers = onto.SuperclassesOf(type);
      ancestors.insert(supers.begin(), supers.end());
    }
    for (const std::string& type : direct) ancestors.erase(type);
    for (const std::string& ancestor : ancestors) {
      out.push_back({subject, kRdfType, IriTerm{ancestor},
                     DatasetId::kMappedTransitiveTypes});
    }
  }
  return out;
}

DisjointnessPartition ValidateDisjointness(const std::vector<Triple>& facts,
                                           const TypeIndex& index,
                                           const Ontology& onto) {
  DisjointnessPartition partition;
  for (const Triple& fact : facts) {
    const auto* object = std::get_if<IriTerm>(&fact.object);
    bool rejected = false;
    if (object != nullptr) {
      const auto range = onto.RangeOf(fact.predicate);
      if (const auto* object_range = std::get_if<ObjectRange>(&range)) {
        if (const auto* types = index.TypesOf(object->iri)) {
          rejected = std::any_of(
              types->begin(), types->end(), [&](const std::string& type) {
                return onto.AreDisjoint(type, object_range->class_iri);
              });
        }
      }
    }
    if (rejected) {
      Triple moved = fact;
      moved.dataset = DatasetId::kOntologyErrors;
      partition.rejected.push_back(std::move(moved));
    } else {
      partition.accepted.push_back(fact);
    }
  }
  return partition;
}

}  // namespace dbw
