/*
 * Copyright 2026 The Kaleido PSI Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kaleido/domain.h"

#include <algorithm>
#include <fstream>

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

bool IsDecimal(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view StripLineEnding(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace

std::string CanonicalValue(std::string_view raw) {
  if (!IsDecimal(raw)) return std::string(raw);
  size_t first = raw.find_first_not_of('0');
  if (first == std::string_view::npos) return "0";
  return std::string(raw.substr(first));
}

absl::StatusOr<DomainCatalog> DomainCatalog::Create(
    std::vector<std::string> values) {
  DomainCatalog catalog;
  catalog.index_.reserve(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (CanonicalValue(values[i]) != values[i]) {
      return ParameterError(absl::StrCat("domain value '", values[i],
                                         "' at position ", i,
                                         " is not canonical"));
    }
    if (i > 0 && !(values[i - 1] < values[i])) {
      return ParameterError(absl::StrCat(
          "domain values not strictly sorted at position ", i, ": '",
          values[i - 1], "' then '", values[i], "'"));
    }
    catalog.index_.emplace(values[i], i);
  }
  catalog.values_ = std::move(values);
  return catalog;
}

DomainCatalog DomainCatalog::FromUnsorted(std::span<const std::string> values) {
  std::vector<std::string> canonical;
  canonical.reserve(values.size());
  for (const std::string& v : values) canonical.push_back(CanonicalValue(v));
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()),
                  canonical.end());
  return *Create(std::move(canonical));
}

DomainCatalog DomainCatalog::Range(size_t n) {
  std::vector<std::string> values;
  values.reserve(n);
  for (size_t i = 0; i < n; ++i) values.push_back(std::to_string(i));
  return FromUnsorted(values);
}

std::optional<size_t> DomainCatalog::Find(std::string_view value) const {
  auto it = index_.find(CanonicalValue(value));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<BitVector> Vectorize(const Relation& relation,
                                    const DomainCatalog& catalog) {
  BitVector bits(catalog.size(), 0);
  for (const std::string& item : relation.items) {
    std::optional<size_t> pos = catalog.Find(item);
    if (!pos.has_value()) {
      return ParameterError(absl::StrCat("client ", relation.owner_id,
                                         ": value '", item,
                                         "' is not in the attribute domain"));
    }
    bits[*pos] = 1;
  }
  return bits;
}

absl::StatusOr<std::vector<int>> HolderCounts(
    std::span<const Relation> relations, const DomainCatalog& catalog) {
  std::vector<int> counts(catalog.size(), 0);
  for (const Relation& relation : relations) {
    KALEIDO_ASSIGN_OR_RETURN(BitVector bits, Vectorize(relation, catalog));
    for (size_t i = 0; i < bits.size(); ++i) counts[i] += bits[i];
  }
  return counts;
}

absl::StatusOr<std::set<size_t>> CardK(std::span<const Relation> relations,
                                       const DomainCatalog& catalog, int k) {
  const int m = static_cast<int>(relations.size());
  if (k < 0 || k > m) {
    return ParameterError(absl::StrCat("k=", k, " outside [0, ", m, "]"));
  }
  KALEIDO_ASSIGN_OR_RETURN(std::vector<int> counts,
                           HolderCounts(relations, catalog));
  std::set<size_t> out;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == k) out.insert(i);
  }
  return out;
}

absl::StatusOr<std::set<size_t>> TrueIntersection(
    std::span<const Relation> relations, const DomainCatalog& catalog) {
  if (relations.empty()) return ParameterError("no relations");
  return CardK(relations, catalog, static_cast<int>(relations.size()));
}

absl::StatusOr<DomainCatalog> LoadDomainFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return IoError(absl::StrCat("cannot open domain file ", path));
  std::vector<std::string> values;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view value = StripLineEnding(line);
    if (value.empty()) continue;
    if (!values.empty() && !(values.back() < value)) {
      return ParameterError(absl::StrCat(path, ":", line_no, ": '", AsAbsl(value),
                                         "' breaks sorted order"));
    }
    if (CanonicalValue(value) != value) {
      return ParameterError(absl::StrCat(path, ":", line_no, ": '", AsAbsl(value),
                                         "' is not canonical"));
    }
    values.emplace_back(value);
  }
  return DomainCatalog::Create(std::move(values));
}

absl::Status WriteDomainFile(const std::string& path,
                             const DomainCatalog& catalog) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return IoError(absl::StrCat("cannot write ", path));
  for (const std::string& v : catalog.values()) out << v << '\n';
  if (!out) return IoError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<Relation> LoadRelationCsv(const std::string& path, int owner_id) {
  std::ifstream in(path);
  if (!in) return IoError(absl::StrCat("cannot open relation file ", path));
  Relation relation{.owner_id = owner_id, .items = {}};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view value = StripLineEnding(line);
    if (line_no == 1) {
      if (value != "value") {
        return ParameterError(absl::StrCat(path, ":1: expected header 'value'"));
      }
      continue;
    }
    if (value.empty()) continue;
    if (value.find(',') != std::string_view::npos) {
      return ParameterError(absl::StrCat(path, ":", line_no,
                                         ": expected a single column"));
    }
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    relation.items.push_back(CanonicalValue(value));
  }
  if (line_no == 0) {
    return ParameterError(absl::StrCat(path, ": missing header 'value'"));
  }
  return relation;
}

absl::Status WriteRelationCsv(const std::string& path,
                              const Relation& relation) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return IoError(absl::StrCat("cannot write ", path));
  out << "value\n";
  for (const std::string& v : relation.items) out << v << '\n';
  if (!out) return IoError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace kaleido
