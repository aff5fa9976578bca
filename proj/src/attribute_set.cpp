#include "condep/attribute_set.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <ostream>

#include "condep/error.hpp"

namespace condep {

namespace {

constexpr std::size_t kMaxSubsetEnumeration = 24;

void canonicalize(std::vector<Attribute>& names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

} // namespace

bool is_valid_attribute_name(std::string_view name) {
  if (name.empty() || name == "_") return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || c == '|' || c == '#' || c == '>' || c == ':' ||
           std::isspace(static_cast<unsigned char>(c));
  });
}

AttributeSet::AttributeSet(std::initializer_list<Attribute> names) : names_(names) {
  canonicalize(names_);
}

AttributeSet::AttributeSet(std::vector<Attribute> names) : names_(std::move(names)) {
  canonicalize(names_);
}

AttributeSet AttributeSet::from_distinct(const std::vector<Attribute>& names) {
  for (const auto& name : names)
    if (name.empty()) throw ValidationError("empty attribute name");
  AttributeSet set(names);
  if (set.size() != names.size()) {
    std::vector<Attribute> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    throw ValidationError("duplicate attribute '" + *dup + "'");
  }
  return set;
}

bool AttributeSet::contains(const Attribute& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

bool AttributeSet::is_subset_of(const AttributeSet& other) const {
  return std::includes(other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
}

bool AttributeSet::is_disjoint_from(const AttributeSet& other) const {
  auto a = names_.begin();
  auto b = other.names_.begin();
  while (a != names_.end() && b != other.names_.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

std::size_t AttributeSet::index_of(const Attribute& name) const {
  const auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw SchemaError("attribute '" + name + "' not in {" + str() + "}");
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> AttributeSet::positions_of(const AttributeSet& subset) const {
  if (!subset.is_subset_of(*this))
    throw SchemaError("{" + subset.str() + "} is not a subset of {" + str() + "}");
  std::vector<std::size_t> positions;
  positions.reserve(subset.size());
  std::size_t i = 0;
  for (const auto& name : subset.names_) {
    while (names_[i] != name) ++i;
    positions.push_back(i);
  }
  return positions;
}

AttributeSet AttributeSet::unite(const AttributeSet& other) const {
  AttributeSet out;
  std::set_union(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                 std::back_inserter(out.names_));
  return out;
}

AttributeSet AttributeSet::intersect(const AttributeSet& other) const {
  AttributeSet out;
  std::set_intersection(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                        std::back_inserter(out.names_));
  return out;
}

AttributeSet AttributeSet::minus(const AttributeSet& other) const {
  AttributeSet out;
  std::set_difference(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                      std::back_inserter(out.names_));
  return out;
}

std::vector<AttributeSet> AttributeSet::subsets() const {
  if (names_.size() > kMaxSubsetEnumeration)
    throw ResourceError("refusing to enumerate subsets of a " + std::to_string(names_.size()) +
                        "-attribute set");
  const std::size_t count = std::size_t{1} << names_.size();
  std::vector<AttributeSet> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    AttributeSet s;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.names_.push_back(names_[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::string AttributeSet::str() const {
  if (names_.empty()) return "_";
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AttributeSet& set) { return os << set.str(); }

} // namespace condep
