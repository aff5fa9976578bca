#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "condep/attribute_set.hpp"
#include "condep/rational.hpp"

namespace condep {

using Value = std::string;

/// Values of one tuple, laid out in the canonical order of the owning
/// schema. Rows compare lexicographically, which fixes the canonical row
/// order used for output.
using Row = std::vector<Value>;

/// A tuple together with the attributes it binds. Used where a tuple
/// travels without its relation (keys of value-set queries, API results).
struct Tuple {
  AttributeSet attributes;
  Row values;

  Tuple() = default;
  Tuple(AttributeSet attrs, Row vals);

  const Value& at(const Attribute& name) const;

  /// t(Y): keeps the bindings of Y only. Throws SchemaError unless
  /// Y ⊆ attributes.
  Tuple restrict_to(const AttributeSet& subset) const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

/// Picks the values at `positions` out of `row`.
Row select(const Row& row, const std::vector<std::size_t>& positions);

/// A conventional relation: a set of tuples over a schema.
class ClassicRelation {
public:
  ClassicRelation() = default;
  /// Rows must have one value per schema attribute (SchemaError otherwise).
  /// Repeated rows collapse.
  ClassicRelation(AttributeSet schema, const std::vector<Row>& rows);
  ClassicRelation(AttributeSet schema, std::set<Row> rows);

  const AttributeSet& schema() const noexcept { return schema_; }
  const std::set<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  bool contains(const Row& row) const { return rows_.count(row) != 0; }

  friend bool operator==(const ClassicRelation&, const ClassicRelation&) = default;

private:
  AttributeSet schema_;
  std::set<Row> rows_;
};

/// A relation whose tuples carry an exact rational weight. Only the
/// support (nonzero-weight rows) is stored; absent rows weigh zero.
class WeightedRelation {
public:
  using RowMap = std::map<Row, Rational>;

  WeightedRelation() = default;
  /// Zero weights are dropped. Throws SchemaError on wrong arity and
  /// ValidationError when the same row appears twice.
  WeightedRelation(AttributeSet schema, const std::vector<std::pair<Row, Rational>>& rows);
  WeightedRelation(AttributeSet schema, RowMap rows);

  /// The relation over the empty schema holding one empty tuple of weight 1;
  /// the identity of product_join.
  static WeightedRelation unit();

  /// Weight 1 on every row of r.
  static WeightedRelation constant(const ClassicRelation& r, const Rational& weight = 1);

  const AttributeSet& schema() const noexcept { return schema_; }
  const RowMap& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Weight of `row`, zero when it lies outside the support.
  Rational weight(const Row& row) const;
  Rational total_weight() const;
  bool all_positive() const;

  ClassicRelation support() const;

  /// Every weight multiplied by `factor` (nonzero; DomainError otherwise).
  WeightedRelation scaled(const Rational& factor) const;

  friend bool operator==(const WeightedRelation&, const WeightedRelation&) = default;

private:
  AttributeSet schema_;
  RowMap rows_;
};

/// r(Y). Throws SchemaError unless Y ⊆ r.schema.
ClassicRelation project(const ClassicRelation& r, const AttributeSet& onto);

/// r1 ⋈ r2 over R1 ∪ R2; disjoint schemas give the Cartesian product.
ClassicRelation natural_join(const ClassicRelation& lhs, const ClassicRelation& rhs);

/// Φ↓X: sums the weights of rows sharing an X-value. Rows whose sum is zero
/// are dropped. X may be empty. Throws SchemaError unless X ⊆ schema.
WeightedRelation marginalize(const WeightedRelation& phi, const AttributeSet& onto);

/// Φ × Ψ: natural join of the supports, weight φ(t(X))·ψ(t(Y)).
WeightedRelation product_join(const WeightedRelation& phi, const WeightedRelation& psi);

/// Φ⁻¹: same support, reciprocal weights.
WeightedRelation inverse(const WeightedRelation& phi);

/// Φ↓V × Φ↓W × (Φ↓V∩W)⁻¹. Throws SchemaError unless V, W ⊆ schema.
WeightedRelation monotone_join(const WeightedRelation& phi, const AttributeSet& left,
                               const AttributeSet& right);

} // namespace condep
