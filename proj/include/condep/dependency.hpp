#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

#include "condep/attribute_set.hpp"
#include "condep/relation.hpp"

namespace condep {

enum class DependencyKind { MVD, EMVD, GMVD, GEMVD, CI };

std::string_view to_string(DependencyKind kind);
/// Accepts the lower-case names used on the command line (`mvd`, `ci`, ...).
DependencyKind parse_dependency_kind(std::string_view text);

/// X ↠ Y|Z with X, Y, Z pairwise disjoint. For kind CI the statement reads
/// "Y and Z are conditionally independent given X".
struct DependencyStatement {
  AttributeSet lhs;
  AttributeSet first;
  AttributeSet second;
  DependencyKind kind = DependencyKind::EMVD;

  DependencyStatement() = default;
  /// Throws ValidationError naming the overlapping components.
  DependencyStatement(AttributeSet x, AttributeSet y, AttributeSet z,
                      DependencyKind k = DependencyKind::EMVD);

  AttributeSet attributes() const { return lhs.unite(first).unite(second); }

  /// Y = ∅ or Z = ∅ (given disjointness, the same as Y ⊆ X or Z ⊆ X).
  bool trivial() const { return first.empty() || second.empty(); }

  /// `X ->> Y | Z`, `_` for empty components.
  std::string str() const;

  friend bool operator==(const DependencyStatement&, const DependencyStatement&) = default;
  friend auto operator<=>(const DependencyStatement&, const DependencyStatement&) = default;
};

std::ostream& operator<<(std::ostream& os, const DependencyStatement& s);

/// Parses `X ->> Y | Z` where each side is a comma-separated attribute list
/// or `_`. Throws ParseError (with the 1-based column) on syntax errors and
/// ValidationError when components overlap.
DependencyStatement parse_statement(std::string_view text,
                                    DependencyKind kind = DependencyKind::EMVD);

/// Z_r(x): the target-values that co-occur with a fixed key configuration.
struct ValueSet {
  Tuple key;
  AttributeSet target;
  std::set<Row> values;

  std::size_t size() const noexcept { return values.size(); }
  bool contains(const Row& value) const { return values.count(value) != 0; }
};

/// { t(target) | t ∈ r, t(key.attributes) = key.values }. Key attributes and
/// target must be disjoint subsets of r.schema (SchemaError otherwise).
ValueSet value_set(const ClassicRelation& r, const Tuple& key, const AttributeSet& target);

enum class MvdMethod {
  Definition, ///< swap-tuple existence over all pairs agreeing on X
  Lemma1,     ///< Z_r(x) = Z_r(xy) for every xy
  Lemma2,     ///< |YZ(x)| = |Z(xy)|·|Y(xz)| for every xyz
};

std::string_view to_string(MvdMethod method);
MvdMethod parse_mvd_method(std::string_view text);

/// MVD on a relation over exactly X ∪ Y ∪ Z.
bool check_mvd(const ClassicRelation& r, const DependencyStatement& s,
               MvdMethod method = MvdMethod::Definition);

/// MVD on the projection of r onto X ∪ Y ∪ Z.
bool check_emvd(const ClassicRelation& r, const DependencyStatement& s,
                MvdMethod method = MvdMethod::Definition);

/// Φ = Φ↓XY ⊗ Φ↓XZ, compared as row maps. Requires X ∪ Y ∪ Z = schema and
/// strictly positive weights (DomainError otherwise).
bool check_gmvd(const WeightedRelation& phi, const DependencyStatement& s);

/// GMVD on Φ↓XYZ.
bool check_gemvd(const WeightedRelation& phi, const DependencyStatement& s);

/// Y ⫫ Z | X: tests φ_XYZ·φ_X = φ_XY·φ_XZ pointwise on the support and that
/// every configuration with positive right-hand side lies in the support.
/// Works on unnormalized weights; requires strictly positive weights.
bool check_ci(const WeightedRelation& phi, const DependencyStatement& s);

/// Dispatches on s.kind. MVD/EMVD run on the support of phi.
bool check(const WeightedRelation& phi, const DependencyStatement& s,
           MvdMethod method = MvdMethod::Definition);

} // namespace condep
