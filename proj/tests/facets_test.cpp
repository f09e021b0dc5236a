#include <gtest/gtest.h>

#include "argfacets/facets.hpp"
#include "argfacets/oracle.hpp"
#include "argfacets/reductions.hpp"
#include "test_util.hpp"

using namespace argfacets;
using namespace argfacets::testing;

namespace {

struct Row {
  std::string literal;
  std::size_t remaining;
  Rational score;
};

std::vector<Row> rows(const ArgumentationFramework& af, const std::vector<SignificanceEntry>& t) {
  std::vector<Row> out;
  for (const auto& e : t) out.push_back({to_string(af, e.literal), e.remaining_facets, e.score});
  return out;
}

Constraints approving(const ArgumentationFramework& af, std::initializer_list<std::string_view> in) {
  auto c = Constraints::none(af);
  c.require_in = af.set_of(in);
  return c;
}

}  // namespace

TEST(Facets, Ex1Stable) {
  auto af = ex1();
  auto r = facet_report(af, Semantics::stab);
  EXPECT_EQ(names(af, r.facets), (NameSet{"w", "s", "b", "m", "t", "p"}));
  EXPECT_EQ(names(af, r.cred), (NameSet{"w", "s", "b", "m", "t", "p"}));
  EXPECT_TRUE(r.skep.empty());
  EXPECT_FALSE(is_facet(af, Semantics::stab, *af.find("e")));
  EXPECT_TRUE(is_facet(af, Semantics::stab, *af.find("w")));
}

TEST(Facets, Ex1StableConstrained) {
  auto af = ex1();
  auto s = facet_report(af, Semantics::stab, approving(af, {"s"}));
  EXPECT_EQ(names(af, s.facets), (NameSet{"p", "t"}));
  EXPECT_EQ(names(af, s.cred), (NameSet{"s", "b", "p", "t"}));
  EXPECT_EQ(names(af, s.skep), (NameSet{"s", "b"}));
  EXPECT_TRUE(facet_report(af, Semantics::stab, approving(af, {"w"})).facets.empty());
}

TEST(Facets, CountsOnTranslations) {
  for (auto sem : {Semantics::adm, Semantics::comp, Semantics::stab}) {
    EXPECT_EQ(count_facets(fx(), sem), 4U) << to_string(sem);
    EXPECT_EQ(count_facets(fxx(), sem), 4U) << to_string(sem);
  }
}

TEST(Facets, DecisionWrappers) {
  auto af = ex1();
  EXPECT_TRUE(has_at_least(af, Semantics::stab, 6));
  EXPECT_FALSE(has_at_least(af, Semantics::stab, 7));
  EXPECT_TRUE(has_at_most(af, Semantics::stab, 6));
  EXPECT_FALSE(has_at_most(af, Semantics::stab, 5));
  EXPECT_TRUE(has_exactly(af, Semantics::stab, 6));
  EXPECT_TRUE(has_at_least(af, Semantics::stab, 0));
}

TEST(Facets, ConflictFreeClosedForm) {
  FrameworkBuilder b;
  b.add_argument("a");
  b.add_argument("b");
  b.add_argument("z");
  b.add_attack("a", "b");
  b.add_attack("b", "a");
  b.add_attack("z", "z");
  auto af = std::move(b).build();
  EXPECT_EQ(names(af, facet_report(af, Semantics::cnf).facets), (NameSet{"a", "b"}));
  EXPECT_EQ(count_facets(af, Semantics::cnf), 2U);
}

TEST(Facets, NaiveUnattackedArgumentIsNotAFacet) {
  // c is unattacked and attacks nothing: in every naive extension.
  FrameworkBuilder b;
  for (auto n : {"a", "b", "c", "z"}) b.add_argument(n);
  b.add_attack("a", "b");
  b.add_attack("z", "z");
  b.add_attack("c", "z");
  auto af = std::move(b).build();
  EXPECT_EQ(names(af, facet_report(af, Semantics::nai).facets), (NameSet{"a", "b"}));
}

TEST(Facets, FastPathAgreesWithNarrowing) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto af = random_af(2 + seed % 7, std::array{0.1, 0.25, 0.5}[seed % 3], 40 + seed);
    for (auto sem : {Semantics::cnf, Semantics::nai}) {
      Reasoner reasoner(af, sem);
      auto slow = narrowing_facet_report(reasoner, Constraints::none(af));
      auto fast = facet_report(af, sem);
      EXPECT_EQ(fast.facets, slow.facets) << to_string(sem) << " seed " << seed;
      EXPECT_EQ(fast.cred, slow.cred);
      EXPECT_EQ(fast.skep, slow.skep);
    }
  }
}

TEST(Significance, Ex1StableTable) {
  auto af = ex1();
  auto got = rows(af, significance_table(af, Semantics::stab));
  std::vector<Row> expected{
      {"w", 0, {1, 1}},  {"-s", 0, {1, 1}}, {"-b", 0, {1, 1}},  {"m", 0, {1, 1}},
      {"t", 0, {1, 1}},  {"-p", 0, {1, 1}}, {"-w", 2, {2, 3}},  {"s", 2, {2, 3}},
      {"b", 2, {2, 3}},  {"-m", 2, {2, 3}}, {"-t", 4, {1, 3}},  {"p", 4, {1, 3}},
  };
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].literal, expected[i].literal) << i;
    EXPECT_EQ(got[i].remaining, expected[i].remaining) << got[i].literal;
    EXPECT_EQ(got[i].score, expected[i].score) << got[i].literal;
  }
}

TEST(Significance, FxTables) {
  auto af = fx();
  auto stab = significance_table(af, Semantics::stab);
  ASSERT_EQ(stab.size(), 8U);
  for (const auto& e : stab) EXPECT_EQ(e.score, Rational(1, 1));

  std::map<std::string, std::pair<std::size_t, Rational>> expected{
      {"phi", {0, {1, 1}}},     {"-phi", {3, {1, 4}}},   {"c1", {0, {1, 1}}},
      {"-c1", {3, {1, 4}}},     {"x1", {1, {3, 4}}},     {"-x1", {2, {1, 2}}},
      {"neg_x1", {1, {3, 4}}},  {"-neg_x1", {2, {1, 2}}},
  };
  auto adm = rows(af, significance_table(af, Semantics::adm));
  ASSERT_EQ(adm.size(), 8U);
  for (const auto& r : adm) {
    ASSERT_TRUE(expected.contains(r.literal)) << r.literal;
    EXPECT_EQ(r.remaining, expected[r.literal].first) << r.literal;
    EXPECT_EQ(r.score, expected[r.literal].second) << r.literal;
  }
}

TEST(Significance, NonFacetThrows) {
  auto af = ex1();
  EXPECT_THROW(significance(af, Semantics::stab, Literal::approve(*af.find("e"))), NotAFacet);
}

TEST(Significance, EmptyWhenNoExtensions) {
  FrameworkBuilder b;
  b.add_argument("a");
  b.add_attack("a", "a");
  auto af = std::move(b).build();
  EXPECT_TRUE(significance_table(af, Semantics::stab).empty());
}

TEST(Rational, Basics) {
  EXPECT_EQ(Rational(4, 6), Rational(2, 3));
  EXPECT_EQ(Rational(4, 6).to_string(), "2/3");
  EXPECT_EQ(Rational(3, 3).to_string(), "1");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}
