// Copyright 2026 The lps Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lps {

/// Dense atom index into a Universe. Ids follow the universe order, which is
/// also the total order used when comparing atom sets.
using AtomId = std::uint32_t;

/// Finite set of atoms stored as a sorted, duplicate-free vector of ids.
/// Comparison operators give the lexicographic order on the sorted id lists.
class AtomSet {
public:
    AtomSet() = default;
    AtomSet(std::initializer_list<AtomId> ids);
    explicit AtomSet(std::vector<AtomId> ids);

    static AtomSet from_mask(std::uint64_t mask);
    std::uint64_t to_mask() const;

    bool empty() const noexcept { return ids_.empty(); }
    std::size_t size() const noexcept { return ids_.size(); }
    bool contains(AtomId a) const;
    void insert(AtomId a);
    void erase(AtomId a);

    bool subset_of(const AtomSet& other) const;
    bool intersects(const AtomSet& other) const;
    std::size_t intersection_size(const AtomSet& other) const;
    AtomSet unite(const AtomSet& other) const;
    AtomSet intersect(const AtomSet& other) const;
    AtomSet minus(const AtomSet& other) const;

    /// Largest id; undefined on the empty set.
    AtomId max() const { return ids_.back(); }

    std::span<const AtomId> ids() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    friend auto operator<=>(const AtomSet& a, const AtomSet& b) { return a.ids_ <=> b.ids_; }

private:
    std::vector<AtomId> ids_;
};

/// A candidate model: the atoms assigned true.
using Interpretation = AtomSet;

struct AtomSetHash {
    std::size_t operator()(const AtomSet& s) const noexcept;
};

/// Ordered, interned atom names. Ids are dense in insertion order.
class Universe {
public:
    AtomId intern(std::string_view name);
    std::optional<AtomId> find(std::string_view name) const;
    /// Throws Error(UnknownAtom) when the name is not interned.
    AtomId at(std::string_view name) const;
    const std::string& name(AtomId id) const { return names_.at(id); }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    AtomSet all() const;

    std::vector<std::string> names_of(const AtomSet& s) const;
    /// Parses a comma-separated list of atom names ("p,q,s"); blanks ignored.
    AtomSet parse_list(std::string_view csv) const;

    friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

bool is_valid_atom_name(std::string_view name);

/// Sorts interpretations by their sorted id lists (lexicographic in atom order).
void sort_models(std::vector<Interpretation>& models);

} // namespace lps
