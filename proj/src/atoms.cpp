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

#include "lps/atoms.hpp"

#include "lps/error.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace lps {

AtomSet::AtomSet(std::initializer_list<AtomId> ids) : AtomSet(std::vector<AtomId>(ids)) {}

AtomSet::AtomSet(std::vector<AtomId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

AtomSet AtomSet::from_mask(std::uint64_t mask) {
    AtomSet s;
    for (AtomId i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1u) s.ids_.push_back(i);
    }
    return s;
}

std::uint64_t AtomSet::to_mask() const {
    std::uint64_t m = 0;
    for (AtomId a : ids_) {
        if (a >= 64) throw Error(ErrorCode::TooManyAtoms, "atom id does not fit a 64-bit mask");
        m |= std::uint64_t{1} << a;
    }
    return m;
}

bool AtomSet::contains(AtomId a) const { return std::binary_search(ids_.begin(), ids_.end(), a); }

void AtomSet::insert(AtomId a) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), a);
    if (it == ids_.end() || *it != a) ids_.insert(it, a);
}

void AtomSet::erase(AtomId a) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), a);
    if (it != ids_.end() && *it == a) ids_.erase(it);
}

bool AtomSet::subset_of(const AtomSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool AtomSet::intersects(const AtomSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
    }
    return false;
}

std::size_t AtomSet::intersection_size(const AtomSet& other) const {
    std::size_t n = 0;
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) {
            ++n;
            ++a;
            ++b;
        } else if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return n;
}

AtomSet AtomSet::unite(const AtomSet& other) const {
    AtomSet r;
    r.ids_.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(r.ids_));
    return r;
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
    AtomSet r;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(r.ids_));
    return r;
}

AtomSet AtomSet::minus(const AtomSet& other) const {
    AtomSet r;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(r.ids_));
    return r;
}

std::size_t AtomSetHash::operator()(const AtomSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (AtomId a : s) {
        h ^= a + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

AtomId Universe::intern(std::string_view name) {
    std::string key(name);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    auto id = static_cast<AtomId>(names_.size());
    names_.push_back(key);
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<AtomId> Universe::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

AtomId Universe::at(std::string_view name) const {
    if (auto id = find(name)) return *id;
    throw Error(ErrorCode::UnknownAtom, "unknown atom '" + std::string(name) + "'");
}

AtomSet Universe::all() const {
    std::vector<AtomId> ids(names_.size());
    for (AtomId i = 0; i < ids.size(); ++i) ids[i] = i;
    return AtomSet(std::move(ids));
}

std::vector<std::string> Universe::names_of(const AtomSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (AtomId a : s) out.push_back(name(a));
    return out;
}

AtomSet Universe::parse_list(std::string_view csv) const {
    std::vector<AtomId> ids;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto next = csv.find(',', pos);
        if (next == std::string_view::npos) next = csv.size();
        auto item = csv.substr(pos, next - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (!item.empty()) ids.push_back(at(item));
        pos = next + 1;
    }
    return AtomSet(std::move(ids));
}

bool is_valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    auto c0 = static_cast<unsigned char>(name.front());
    if (std::isdigit(c0)) {
        if (name.front() == '0') return false;
        return std::all_of(name.begin(), name.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    }
    if (!(std::isalpha(c0) || c0 == '_')) return false;
    if (name == "not") return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

void sort_models(std::vector<Interpretation>& models) { std::sort(models.begin(), models.end()); }

} // namespace lps
