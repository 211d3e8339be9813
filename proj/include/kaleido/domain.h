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

#ifndef KALEIDO_DOMAIN_H_
#define KALEIDO_DOMAIN_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "kaleido/sharing.h"

namespace kaleido {

// Canonical string form of an attribute value. Pure decimal integers lose
// their leading zeros ("007" -> "7"); anything else is kept verbatim.
std::string CanonicalValue(std::string_view raw);

// The agreed, ordered attribute domain. Values are distinct canonical strings
// sorted byte-wise, so every client derives the same positions.
class DomainCatalog {
 public:
  DomainCatalog() = default;

  // Values must already be canonical, distinct and sorted.
  static absl::StatusOr<DomainCatalog> Create(std::vector<std::string> values);

  // Canonicalizes, sorts and de-duplicates.
  static DomainCatalog FromUnsorted(std::span<const std::string> values);

  // Integers [0, n) as a domain (in canonical byte order, so "10" < "2").
  static DomainCatalog Range(size_t n);

  size_t size() const { return values_.size(); }
  const std::string& value(size_t position) const { return values_[position]; }
  const std::vector<std::string>& values() const { return values_; }

  // Position of a (raw or canonical) value.
  std::optional<size_t> Find(std::string_view value) const;

 private:
  std::vector<std::string> values_;
  std::unordered_map<std::string, size_t> index_;
};

// One owner's single-attribute relation; duplicates are allowed.
struct Relation {
  int owner_id = 0;
  std::vector<std::string> items;
};

// Position j is 1 iff the j-th domain value occurs in the relation.
absl::StatusOr<BitVector> Vectorize(const Relation& relation,
                                    const DomainCatalog& catalog);

// Per-position number of relations holding the value (presence, not
// multiplicity).
absl::StatusOr<std::vector<int>> HolderCounts(std::span<const Relation> relations,
                                              const DomainCatalog& catalog);

// Positions held by exactly k of the relations.
absl::StatusOr<std::set<size_t>> CardK(std::span<const Relation> relations,
                                       const DomainCatalog& catalog, int k);

// CardK with k = number of relations.
absl::StatusOr<std::set<size_t>> TrueIntersection(
    std::span<const Relation> relations, const DomainCatalog& catalog);

// Domain file: one canonical value per line, already sorted.
absl::StatusOr<DomainCatalog> LoadDomainFile(const std::string& path);
absl::Status WriteDomainFile(const std::string& path,
                             const DomainCatalog& catalog);

// Relation file: single-column CSV with header `value`.
absl::StatusOr<Relation> LoadRelationCsv(const std::string& path, int owner_id);
absl::Status WriteRelationCsv(const std::string& path, const Relation& relation);

}  // namespace kaleido

#endif  // KALEIDO_DOMAIN_H_
