#include "condep/dependency.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>
#include <utility>

#include "condep/error.hpp"

namespace condep {

namespace {

void require_disjoint(const AttributeSet& x, const AttributeSet& y, const AttributeSet& z) {
  const auto overlap = [](const char* a, const AttributeSet& p, const char* b,
                          const AttributeSet& q) {
    const auto common = p.intersect(q);
    if (!common.empty())
      throw ValidationError(std::string(a) + " and " + b + " overlap on {" + common.str() + "}");
  };
  overlap("X", x, "Y", y);
  overlap("X", x, "Z", z);
  overlap("Y", y, "Z", z);
}

void require_exact_schema(const AttributeSet& schema, const DependencyStatement& s) {
  require_disjoint(s.lhs, s.first, s.second);
  if (s.attributes() != schema)
    throw SchemaError("statement " + s.str() + " does not cover schema {" + schema.str() +
                      "} exactly");
}

void require_embedded(const AttributeSet& schema, const DependencyStatement& s) {
  require_disjoint(s.lhs, s.first, s.second);
  if (!s.attributes().is_subset_of(schema))
    throw SchemaError("statement " + s.str() + " mentions attributes outside schema {" +
                      schema.str() + "}");
}

void require_positive(const WeightedRelation& phi) {
  if (!phi.all_positive())
    throw DomainError("GMVD and CI checks require strictly positive weights");
}

// Row positions of X, Y, Z inside a schema equal to X ∪ Y ∪ Z.
struct Split {
  std::vector<std::size_t> x, y, z;

  Split(const AttributeSet& schema, const DependencyStatement& s)
      : x(schema.positions_of(s.lhs)), y(schema.positions_of(s.first)),
        z(schema.positions_of(s.second)) {}
};

bool mvd_by_definition(const ClassicRelation& r, const Split& split) {
  std::map<Row, std::vector<const Row*>> by_x;
  for (const auto& row : r.rows()) by_x[select(row, split.x)].push_back(&row);
  for (const auto& [x, group] : by_x) {
    for (const Row* t1 : group) {
      for (const Row* t2 : group) {
        Row swapped = *t1;
        for (const auto p : split.z) swapped[p] = (*t2)[p];
        if (!r.contains(swapped)) return false;
      }
    }
  }
  return true;
}

bool mvd_by_lemma1(const ClassicRelation& r, const Split& split) {
  std::map<Row, std::set<Row>> z_of_x;
  std::map<std::pair<Row, Row>, std::set<Row>> z_of_xy;
  for (const auto& row : r.rows()) {
    Row x = select(row, split.x);
    Row z = select(row, split.z);
    z_of_x[x].insert(z);
    z_of_xy[{std::move(x), select(row, split.y)}].insert(std::move(z));
  }
  for (const auto& [xy, zs] : z_of_xy)
    if (zs != z_of_x.at(xy.first)) return false;
  return true;
}

bool mvd_by_lemma2(const ClassicRelation& r, const Split& split) {
  // Over a schema of exactly XYZ each row is a distinct yz for its x, so the
  // counters below are the cardinalities of YZ(x), Z(xy) and Y(xz).
  std::map<Row, std::size_t> yz_of_x;
  std::map<std::pair<Row, Row>, std::size_t> z_of_xy;
  std::map<std::pair<Row, Row>, std::size_t> y_of_xz;
  for (const auto& row : r.rows()) {
    Row x = select(row, split.x);
    ++yz_of_x[x];
    ++z_of_xy[{x, select(row, split.y)}];
    ++y_of_xz[{std::move(x), select(row, split.z)}];
  }
  for (const auto& row : r.rows()) {
    Row x = select(row, split.x);
    const auto yz = yz_of_x.at(x);
    const auto z = z_of_xy.at({x, select(row, split.y)});
    const auto y = y_of_xz.at({std::move(x), select(row, split.z)});
    if (yz != z * y) return false;
  }
  return true;
}

} // namespace

std::string_view to_string(DependencyKind kind) {
  switch (kind) {
  case DependencyKind::MVD: return "mvd";
  case DependencyKind::EMVD: return "emvd";
  case DependencyKind::GMVD: return "gmvd";
  case DependencyKind::GEMVD: return "gemvd";
  case DependencyKind::CI: return "ci";
  }
  return "?";
}

DependencyKind parse_dependency_kind(std::string_view text) {
  for (const auto k : {DependencyKind::MVD, DependencyKind::EMVD, DependencyKind::GMVD,
                       DependencyKind::GEMVD, DependencyKind::CI})
    if (to_string(k) == text) return k;
  throw ValidationError("unknown dependency kind '" + std::string(text) + "'");
}

std::string_view to_string(MvdMethod method) {
  switch (method) {
  case MvdMethod::Definition: return "definition";
  case MvdMethod::Lemma1: return "lemma1";
  case MvdMethod::Lemma2: return "lemma2";
  }
  return "?";
}

MvdMethod parse_mvd_method(std::string_view text) {
  for (const auto m : {MvdMethod::Definition, MvdMethod::Lemma1, MvdMethod::Lemma2})
    if (to_string(m) == text) return m;
  throw ValidationError("unknown MVD method '" + std::string(text) + "'");
}

DependencyStatement::DependencyStatement(AttributeSet x, AttributeSet y, AttributeSet z,
                                         DependencyKind k)
    : lhs(std::move(x)), first(std::move(y)), second(std::move(z)), kind(k) {
  require_disjoint(lhs, first, second);
}

std::string DependencyStatement::str() const {
  return lhs.str() + " ->> " + first.str() + " | " + second.str();
}

std::ostream& operator<<(std::ostream& os, const DependencyStatement& s) { return os << s.str(); }

ValueSet value_set(const ClassicRelation& r, const Tuple& key, const AttributeSet& target) {
  if (!key.attributes.is_disjoint_from(target))
    throw SchemaError("key and target overlap");
  const auto key_pos = r.schema().positions_of(key.attributes);
  const auto target_pos = r.schema().positions_of(target);
  ValueSet out{key, target, {}};
  for (const auto& row : r.rows())
    if (select(row, key_pos) == key.values) out.values.insert(select(row, target_pos));
  return out;
}

bool check_mvd(const ClassicRelation& r, const DependencyStatement& s, MvdMethod method) {
  require_exact_schema(r.schema(), s);
  if (s.trivial()) return true;
  const Split split(r.schema(), s);
  switch (method) {
  case MvdMethod::Definition: return mvd_by_definition(r, split);
  case MvdMethod::Lemma1: return mvd_by_lemma1(r, split);
  case MvdMethod::Lemma2: return mvd_by_lemma2(r, split);
  }
  throw ValidationError("unknown MVD method");
}

bool check_emvd(const ClassicRelation& r, const DependencyStatement& s, MvdMethod method) {
  require_embedded(r.schema(), s);
  if (s.trivial()) return true;
  return check_mvd(project(r, s.attributes()), s, method);
}

bool check_gmvd(const WeightedRelation& phi, const DependencyStatement& s) {
  require_exact_schema(phi.schema(), s);
  require_positive(phi);
  if (s.trivial()) return true;
  return monotone_join(phi, s.lhs.unite(s.first), s.lhs.unite(s.second)) == phi;
}

bool check_gemvd(const WeightedRelation& phi, const DependencyStatement& s) {
  require_embedded(phi.schema(), s);
  require_positive(phi);
  if (s.trivial()) return true;
  return check_gmvd(marginalize(phi, s.attributes()), s);
}

bool check_ci(const WeightedRelation& phi, const DependencyStatement& s) {
  require_embedded(phi.schema(), s);
  require_positive(phi);
  if (s.trivial()) return true;

  // Marginals are summed directly here rather than through marginalize() so
  // this check stays an independent route to the GEMVD verdict.
  const auto xs = phi.schema().positions_of(s.lhs);
  const auto ys = phi.schema().positions_of(s.first);
  const auto zs = phi.schema().positions_of(s.second);
  std::map<std::tuple<Row, Row, Row>, Rational> joint;
  std::map<std::pair<Row, Row>, Rational> xy;
  std::map<std::pair<Row, Row>, Rational> xz;
  std::map<Row, Rational> x_only;
  for (const auto& [row, w] : phi.rows()) {
    Row x = select(row, xs);
    Row y = select(row, ys);
    Row z = select(row, zs);
    xy[{x, y}] += w;
    xz[{x, z}] += w;
    x_only[x] += w;
    joint[{std::move(x), std::move(y), std::move(z)}] += w;
  }

  std::map<Row, std::size_t> joint_count, xy_count, xz_count;
  for (const auto& [key, w] : joint) {
    const auto& [x, y, z] = key;
    if (w * x_only.at(x) != xy.at({x, y}) * xz.at({x, z})) return false;
    ++joint_count[x];
  }
  // Every marginal is positive, so the support of the right-hand side is the
  // join of the XY and XZ supports; it contains the joint support and equals
  // it exactly when the per-x counts agree.
  for (const auto& [key, w] : xy) ++xy_count[key.first];
  for (const auto& [key, w] : xz) ++xz_count[key.first];
  for (const auto& [x, n] : joint_count)
    if (n != xy_count.at(x) * xz_count.at(x)) return false;
  return true;
}

bool check(const WeightedRelation& phi, const DependencyStatement& s, MvdMethod method) {
  switch (s.kind) {
  case DependencyKind::MVD: return check_mvd(phi.support(), s, method);
  case DependencyKind::EMVD: return check_emvd(phi.support(), s, method);
  case DependencyKind::GMVD: return check_gmvd(phi, s);
  case DependencyKind::GEMVD: return check_gemvd(phi, s);
  case DependencyKind::CI: return check_ci(phi, s);
  }
  throw ValidationError("unknown dependency kind");
}

} // namespace condep
