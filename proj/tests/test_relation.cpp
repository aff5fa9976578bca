#include <random>

#include <gtest/gtest.h>

#include "condep/error.hpp"
#include "condep/relation.hpp"

using namespace condep;

namespace {

WeightedRelation weighted(AttributeSet schema, std::vector<std::pair<Row, Rational>> rows) {
  return WeightedRelation(std::move(schema), rows);
}

WeightedRelation sample8() {
  return weighted({"A1", "A2", "A3"}, {{{"0", "0", "0"}, 1},
                                       {{"0", "0", "1"}, 2},
                                       {{"0", "1", "0"}, 3},
                                       {{"0", "1", "1"}, 3},
                                       {{"1", "0", "0"}, 4},
                                       {{"1", "0", "1"}, 4},
                                       {{"1", "1", "0"}, 5},
                                       {{"1", "1", "1"}, 6}});
}

// Random relation over `schema` with values in {0,1,2} and positive weights
// p/q, 1 ≤ p ≤ 9, 1 ≤ q ≤ 4.
WeightedRelation random_relation(std::mt19937_64& rng, const AttributeSet& schema) {
  std::map<Row, Rational> rows;
  const int count = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < count; ++i) {
    Row row;
    for (std::size_t a = 0; a < schema.size(); ++a) row.push_back(std::to_string(rng() % 3));
    rows[row] = Rational(1 + static_cast<std::int64_t>(rng() % 9),
                         1 + static_cast<std::int64_t>(rng() % 4));
  }
  return WeightedRelation(schema, rows);
}

} // namespace

TEST(Tuple, Restriction) {
  const Tuple t({"A", "B", "C"}, {"1", "2", "3"});
  EXPECT_EQ(t.at("B"), "2");
  EXPECT_EQ(t.restrict_to({"C", "A"}), Tuple({"A", "C"}, {"1", "3"}));
  EXPECT_EQ(t.restrict_to({}).values.size(), 0u);
  EXPECT_THROW(t.restrict_to({"D"}), SchemaError);
  EXPECT_THROW(Tuple({"A"}, {"1", "2"}), SchemaError);
}

TEST(Project, CollapsesDuplicates) {
  const ClassicRelation r({"A", "B"}, std::vector<Row>{{"0", "0"}, {"0", "1"}});
  const auto p = project(r, {"A"});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.contains({"0"}));
  EXPECT_EQ(project(r, r.schema()), r);
  EXPECT_THROW(project(r, {"C"}), SchemaError);
}

TEST(Project, SampleSupportOntoA1A2) {
  const auto p = project(sample8().support(), {"A1", "A2"});
  EXPECT_EQ(p, ClassicRelation({"A1", "A2"},
                               std::vector<Row>{{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}}));
}

TEST(NaturalJoin, SharedAndDisjoint) {
  const ClassicRelation r1({"A"}, std::vector<Row>{{"0"}});
  const ClassicRelation r2({"A", "B"}, std::vector<Row>{{"0", "1"}, {"1", "1"}});
  EXPECT_EQ(natural_join(r1, r2), ClassicRelation({"A", "B"}, std::vector<Row>{{"0", "1"}}));

  const ClassicRelation a({"A"}, std::vector<Row>{{"0"}, {"1"}});
  const ClassicRelation b({"B"}, std::vector<Row>{{"0"}, {"1"}, {"2"}});
  EXPECT_EQ(natural_join(a, b).size(), 6u);
}

TEST(NaturalJoin, OverlappingSupports) {
  const ClassicRelation x({"A1", "A2"},
                          std::vector<Row>{{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}});
  const ClassicRelation y({"A2", "A3"},
                          std::vector<Row>{{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}});
  const auto j = natural_join(x, y);
  EXPECT_EQ(j.schema(), (AttributeSet{"A1", "A2", "A3"}));
  EXPECT_EQ(j.size(), 8u);
}

TEST(WeightedRelation, DropsZerosAndRejectsDuplicates) {
  const auto phi = weighted({"A"}, {{{"0"}, 0}, {{"1"}, 2}});
  EXPECT_EQ(phi.size(), 1u);
  EXPECT_EQ(phi.weight({"0"}), Rational(0));
  EXPECT_THROW(weighted({"A"}, {{{"0"}, 1}, {{"0"}, 2}}), ValidationError);
  EXPECT_THROW(weighted({"A"}, {{{"0", "1"}, 1}}), SchemaError);
}

TEST(Marginalize, OntoA1A2) {
  const auto m = marginalize(sample8(), {"A1", "A2"});
  EXPECT_EQ(m, weighted({"A1", "A2"}, {{{"0", "0"}, 3},
                                       {{"0", "1"}, 6},
                                       {{"1", "0"}, 8},
                                       {{"1", "1"}, 11}}));
}

TEST(Marginalize, IdentityAndEmpty) {
  const auto phi = sample8();
  EXPECT_EQ(marginalize(phi, phi.schema()), phi);
  const auto total = marginalize(phi, {});
  ASSERT_EQ(total.size(), 1u);
  EXPECT_EQ(total.weight({}), Rational(28));
  EXPECT_THROW(marginalize(phi, {"B"}), SchemaError);
}

TEST(Marginalize, ZeroSumsDropped) {
  const auto phi = weighted({"A", "B"}, {{{"0", "0"}, 1}, {{"0", "1"}, -1}, {{"1", "0"}, 2}});
  EXPECT_EQ(marginalize(phi, {"A"}), weighted({"A"}, {{{"1"}, 2}}));
}

TEST(ProductJoin, OverlapOnA2) {
  const auto phi = weighted({"A1", "A2"}, {{{"0", "0"}, 1},
                                           {{"0", "1"}, 2},
                                           {{"1", "0"}, 3},
                                           {{"1", "1"}, 4}});
  const auto psi = weighted({"A2", "A3"}, {{{"0", "0"}, Rational(1, 1)},
                                           {{"0", "1"}, Rational(1, 2)},
                                           {{"1", "0"}, Rational(1, 3)},
                                           {{"1", "1"}, Rational(1, 4)}});
  const Rational a[] = {1, 2, 3, 4};
  const Rational b[] = {1, Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  // (A1,A2,A3) = (i,j,k): a index 2i+j, b index 2j+k.
  std::vector<std::pair<Row, Rational>> expected;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        expected.push_back({{std::to_string(i), std::to_string(j), std::to_string(k)},
                            a[2 * i + j] * b[2 * j + k]});
  EXPECT_EQ(product_join(phi, psi), weighted({"A1", "A2", "A3"}, expected));
}

TEST(ProductJoin, UnitAndIndependentProduct) {
  const auto phi = sample8();
  EXPECT_EQ(product_join(phi, WeightedRelation::unit()), phi);
  EXPECT_EQ(product_join(WeightedRelation::unit(), phi), phi);

  const auto a = weighted({"A"}, {{{"0"}, Rational(1, 2)}, {{"1"}, Rational(1, 2)}});
  const auto b = weighted({"B"}, {{{"0"}, Rational(1, 3)}, {{"1"}, Rational(2, 3)}});
  EXPECT_EQ(product_join(a, b), weighted({"A", "B"}, {{{"0", "0"}, Rational(1, 6)},
                                                      {{"0", "1"}, Rational(1, 3)},
                                                      {{"1", "0"}, Rational(1, 6)},
                                                      {{"1", "1"}, Rational(1, 3)}}));
}

TEST(Inverse, Reciprocals) {
  EXPECT_EQ(inverse(weighted({"A"}, {{{"t"}, 2}})), weighted({"A"}, {{{"t"}, Rational(1, 2)}}));
  EXPECT_EQ(inverse(weighted({"A"}, {{{"1"}, Rational(3, 4)}, {{"2"}, 5}})),
            weighted({"A"}, {{{"1"}, Rational(4, 3)}, {{"2"}, Rational(1, 5)}}));
  const auto phi = sample8();
  EXPECT_EQ(inverse(inverse(phi)), phi);
}

TEST(MonotoneJoin, Examples) {
  const auto phi = sample8();
  EXPECT_EQ(monotone_join(phi, {"A1", "A2"}, {"A1", "A2"}), marginalize(phi, {"A1", "A2"}));

  const auto dist = phi.scaled(Rational(1, 28));
  EXPECT_EQ(monotone_join(dist, {"A1"}, {"A3"}),
            product_join(marginalize(dist, {"A1"}), marginalize(dist, {"A3"})));

  std::vector<std::pair<Row, Rational>> uniform;
  for (int i = 0; i < 8; ++i)
    uniform.push_back({{std::to_string(i >> 2), std::to_string((i >> 1) & 1), std::to_string(i & 1)},
                       Rational(1, 8)});
  const auto u = weighted({"A", "B", "C"}, uniform);
  EXPECT_EQ(monotone_join(u, {"A", "B"}, {"A", "C"}), u);
  EXPECT_THROW(monotone_join(u, {"A", "D"}, {"A"}), SchemaError);
}

TEST(RelationProperties, MarginalizationCascadeAndConservation) {
  std::mt19937_64 rng(11);
  const AttributeSet schema{"A", "B", "C", "D"};
  for (int trial = 0; trial < 200; ++trial) {
    const auto phi = random_relation(rng, schema);
    for (const auto& x : schema.subsets()) {
      const auto mx = marginalize(phi, x);
      EXPECT_EQ(mx.total_weight(), phi.total_weight());
      for (const auto& w : x.subsets()) EXPECT_EQ(marginalize(mx, w), marginalize(phi, w));
    }
  }
}

TEST(RelationProperties, MarginalMatchesDirectSum) {
  std::mt19937_64 rng(12);
  const AttributeSet schema{"A", "B", "C"};
  for (int trial = 0; trial < 100; ++trial) {
    const auto phi = random_relation(rng, schema);
    for (const auto& x : schema.subsets()) {
      const auto m = marginalize(phi, x);
      const auto pos = schema.positions_of(x);
      std::map<Row, Rational> sums;
      for (const auto& [row, w] : phi.rows()) {
        Row key;
        for (auto p : pos) key.push_back(row[p]);
        sums[key] += w;
      }
      for (const auto& [key, w] : sums) EXPECT_EQ(m.weight(key), w);
      EXPECT_EQ(m.size(), sums.size());
    }
  }
}

TEST(RelationProperties, ProductJoinLaws) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto phi = random_relation(rng, {"A", "B"});
    const auto psi = random_relation(rng, {"B", "C"});
    const auto chi = random_relation(rng, {"A", "C", "D"});
    const auto j = product_join(phi, psi);
    EXPECT_EQ(j.support(), natural_join(phi.support(), psi.support()));
    for (const auto& [row, w] : j.rows())
      EXPECT_EQ(w, phi.weight({row[0], row[1]}) * psi.weight({row[1], row[2]}));
    EXPECT_EQ(j, product_join(psi, phi));
    EXPECT_EQ(product_join(j, chi), product_join(phi, product_join(psi, chi)));

    const auto one = product_join(phi, inverse(phi));
    EXPECT_EQ(one, WeightedRelation::constant(phi.support()));
  }
}

TEST(RelationProperties, ScaledRejectsZero) {
  EXPECT_THROW(sample8().scaled(0), DomainError);
  EXPECT_EQ(sample8().scaled(2).total_weight(), Rational(56));
}
