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

#include "dbw/entity.hpp"

namespace dbw {

std::optional<EntityId> EntityId::Parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  EntityKind kind;
  if (text[0] == 'Q') {
    kind = EntityKind::kItem;
  } else if (text[0] == 'P') {
    kind = EntityKind::kProperty;
  } else {
    return std::nullopt;
  }
  if (text[1] == '0') return std::nullopt;  // no leading zeros, no zero
  uint64_t number = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    if (number > (UINT64_MAX - 9) / 10) return std::nullopt;
    number = number * 10 + static_cast<uint64_t>(c - '0');
  }
  return EntityId{kind, number};
}

std::string EntityId::ToString() const {
  return (kind == EntityKind::kItem ? "Q" : "P") + std::to_string(number);
}

bool IsSkippableValue(const SnakValue& v) {
  return std::holds_alternative<SomeValueMarker>(v) ||
         std::holds_alternative<NoValueMarker>(v) ||
         std::holds_alternative<UnsupportedValue>(v);
}

}  // namespace dbw
