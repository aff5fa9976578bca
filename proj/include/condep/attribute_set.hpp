#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace condep {

using Attribute = std::string;

/// Attribute names: non-empty, not `_`, no whitespace, and none of `,|#>:`.
bool is_valid_attribute_name(std::string_view name);

/// A finite set of attribute names kept in canonical (lexicographic) order.
/// Every set operation returns a canonical set, so two sets compare equal
/// iff they hold the same names.
class AttributeSet {
public:
  AttributeSet() = default;
  AttributeSet(std::initializer_list<Attribute> names);
  explicit AttributeSet(std::vector<Attribute> names);

  /// Builds a set from names, throwing ValidationError on an empty name or
  /// a repeated one. Use this for user input; the constructors above
  /// silently collapse duplicates.
  static AttributeSet from_distinct(const std::vector<Attribute>& names);

  const std::vector<Attribute>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  auto begin() const noexcept { return names_.begin(); }
  auto end() const noexcept { return names_.end(); }

  bool contains(const Attribute& name) const;
  bool is_subset_of(const AttributeSet& other) const;
  bool is_disjoint_from(const AttributeSet& other) const;

  /// Position of `name` in canonical order; throws SchemaError if absent.
  std::size_t index_of(const Attribute& name) const;

  /// Positions of each member of `subset` within *this, in the subset's
  /// canonical order. Throws SchemaError unless subset ⊆ *this.
  std::vector<std::size_t> positions_of(const AttributeSet& subset) const;

  AttributeSet unite(const AttributeSet& other) const;
  AttributeSet intersect(const AttributeSet& other) const;
  AttributeSet minus(const AttributeSet& other) const;

  /// All subsets in increasing-bitmask order over the canonical order.
  /// Throws ResourceError past 24 members.
  std::vector<AttributeSet> subsets() const;

  /// `A,B,C`, or `_` for the empty set (the statement-grammar spelling).
  std::string str() const;

  friend bool operator==(const AttributeSet&, const AttributeSet&) = default;
  friend auto operator<=>(const AttributeSet& lhs, const AttributeSet& rhs) {
    return lhs.names_ <=> rhs.names_;
  }

private:
  std::vector<Attribute> names_;
};

std::ostream& operator<<(std::ostream& os, const AttributeSet& set);

} // namespace condep
