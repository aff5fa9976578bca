#include "condep/relation.hpp"

#include <utility>

#include "condep/error.hpp"

namespace condep {

namespace {

void check_arity(const AttributeSet& schema, const Row& row) {
  if (row.size() != schema.size())
    throw SchemaError("row with " + std::to_string(row.size()) + " values for schema {" +
                      schema.str() + "}");
}

// Column layout for joining two schemas: where each output column comes from,
// and where the shared attributes sit on either side.
struct JoinPlan {
  AttributeSet schema;
  std::vector<std::pair<bool, std::size_t>> sources; // (from_left, position)
  std::vector<std::size_t> left_shared;
  std::vector<std::size_t> right_shared;

  JoinPlan(const AttributeSet& left, const AttributeSet& right)
      : schema(left.unite(right)) {
    const AttributeSet shared = left.intersect(right);
    left_shared = left.positions_of(shared);
    right_shared = right.positions_of(shared);
    sources.reserve(schema.size());
    for (const auto& name : schema) {
      if (left.contains(name))
        sources.emplace_back(true, left.index_of(name));
      else
        sources.emplace_back(false, right.index_of(name));
    }
  }

  Row combine(const Row& l, const Row& r) const {
    Row out;
    out.reserve(sources.size());
    for (const auto& [from_left, pos] : sources) out.push_back(from_left ? l[pos] : r[pos]);
    return out;
  }
};

// Calls visit(left_row, right_row, joined_row) for every matching pair.
template <typename LeftRange, typename RightRange, typename LeftKey, typename RightKey,
          typename Visit>
void hash_join(const JoinPlan& plan, const LeftRange& left, const RightRange& right,
               LeftKey left_row_of, RightKey right_row_of, Visit visit) {
  std::map<Row, std::vector<const typename RightRange::value_type*>> index;
  for (const auto& entry : right) index[select(right_row_of(entry), plan.right_shared)].push_back(&entry);
  for (const auto& l : left) {
    const Row& lrow = left_row_of(l);
    const auto it = index.find(select(lrow, plan.left_shared));
    if (it == index.end()) continue;
    for (const auto* r : it->second) visit(l, *r, plan.combine(lrow, right_row_of(*r)));
  }
}

} // namespace

Tuple::Tuple(AttributeSet attrs, Row vals) : attributes(std::move(attrs)), values(std::move(vals)) {
  check_arity(attributes, values);
}

const Value& Tuple::at(const Attribute& name) const { return values[attributes.index_of(name)]; }

Tuple Tuple::restrict_to(const AttributeSet& subset) const {
  return Tuple(subset, select(values, attributes.positions_of(subset)));
}

Row select(const Row& row, const std::vector<std::size_t>& positions) {
  Row out;
  out.reserve(positions.size());
  for (const auto p : positions) out.push_back(row[p]);
  return out;
}

ClassicRelation::ClassicRelation(AttributeSet schema, const std::vector<Row>& rows)
    : schema_(std::move(schema)) {
  for (const auto& row : rows) {
    check_arity(schema_, row);
    rows_.insert(row);
  }
}

ClassicRelation::ClassicRelation(AttributeSet schema, std::set<Row> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  for (const auto& row : rows_) check_arity(schema_, row);
}

WeightedRelation::WeightedRelation(AttributeSet schema,
                                   const std::vector<std::pair<Row, Rational>>& rows)
    : schema_(std::move(schema)) {
  std::set<Row> seen;
  for (const auto& [row, w] : rows) {
    check_arity(schema_, row);
    if (!seen.insert(row).second) throw ValidationError("duplicate tuple in weighted relation");
    if (!w.is_zero()) rows_.emplace(row, w);
  }
}

WeightedRelation::WeightedRelation(AttributeSet schema, RowMap rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  for (auto it = rows_.begin(); it != rows_.end();) {
    check_arity(schema_, it->first);
    if (it->second.is_zero())
      it = rows_.erase(it);
    else
      ++it;
  }
}

WeightedRelation WeightedRelation::unit() {
  RowMap rows;
  rows.emplace(Row{}, Rational(1));
  return WeightedRelation(AttributeSet{}, std::move(rows));
}

WeightedRelation WeightedRelation::constant(const ClassicRelation& r, const Rational& weight) {
  RowMap rows;
  for (const auto& row : r.rows()) rows.emplace(row, weight);
  return WeightedRelation(r.schema(), std::move(rows));
}

Rational WeightedRelation::weight(const Row& row) const {
  const auto it = rows_.find(row);
  return it == rows_.end() ? Rational(0) : it->second;
}

Rational WeightedRelation::total_weight() const {
  Rational total;
  for (const auto& [row, w] : rows_) total += w;
  return total;
}

bool WeightedRelation::all_positive() const {
  for (const auto& [row, w] : rows_)
    if (w.sign() <= 0) return false;
  return true;
}

ClassicRelation WeightedRelation::support() const {
  std::set<Row> rows;
  for (const auto& [row, w] : rows_) rows.insert(rows.end(), row);
  return ClassicRelation(schema_, std::move(rows));
}

WeightedRelation WeightedRelation::scaled(const Rational& factor) const {
  if (factor.is_zero()) throw DomainError("scaling a relation by zero");
  RowMap rows;
  for (const auto& [row, w] : rows_) rows.emplace_hint(rows.end(), row, w * factor);
  return WeightedRelation(schema_, std::move(rows));
}

ClassicRelation project(const ClassicRelation& r, const AttributeSet& onto) {
  const auto positions = r.schema().positions_of(onto);
  std::set<Row> rows;
  for (const auto& row : r.rows()) rows.insert(select(row, positions));
  return ClassicRelation(onto, std::move(rows));
}

ClassicRelation natural_join(const ClassicRelation& lhs, const ClassicRelation& rhs) {
  const JoinPlan plan(lhs.schema(), rhs.schema());
  std::set<Row> rows;
  const auto identity = [](const Row& row) -> const Row& { return row; };
  hash_join(plan, lhs.rows(), rhs.rows(), identity, identity,
            [&](const Row&, const Row&, Row joined) { rows.insert(std::move(joined)); });
  return ClassicRelation(plan.schema, std::move(rows));
}

WeightedRelation marginalize(const WeightedRelation& phi, const AttributeSet& onto) {
  const auto positions = phi.schema().positions_of(onto);
  WeightedRelation::RowMap sums;
  for (const auto& [row, w] : phi.rows()) sums[select(row, positions)] += w;
  return WeightedRelation(onto, std::move(sums));
}

WeightedRelation product_join(const WeightedRelation& phi, const WeightedRelation& psi) {
  const JoinPlan plan(phi.schema(), psi.schema());
  WeightedRelation::RowMap rows;
  const auto key = [](const auto& entry) -> const Row& { return entry.first; };
  hash_join(plan, phi.rows(), psi.rows(), key, key,
            [&](const auto& l, const auto& r, Row joined) {
              rows.emplace(std::move(joined), l.second * r.second);
            });
  return WeightedRelation(plan.schema, std::move(rows));
}

WeightedRelation inverse(const WeightedRelation& phi) {
  WeightedRelation::RowMap rows;
  for (const auto& [row, w] : phi.rows()) rows.emplace_hint(rows.end(), row, w.reciprocal());
  return WeightedRelation(phi.schema(), std::move(rows));
}

WeightedRelation monotone_join(const WeightedRelation& phi, const AttributeSet& left,
                               const AttributeSet& right) {
  if (!left.is_subset_of(phi.schema()) || !right.is_subset_of(phi.schema()))
    throw SchemaError("monotone join over {" + left.str() + "} and {" + right.str() +
                      "} outside schema {" + phi.schema().str() + "}");
  return product_join(product_join(marginalize(phi, left), marginalize(phi, right)),
                      inverse(marginalize(phi, left.intersect(right))));
}

} // namespace condep
