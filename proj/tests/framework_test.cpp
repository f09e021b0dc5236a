#include <gtest/gtest.h>

#include "argfacets/error.hpp"
#include "argfacets/framework.hpp"
#include "argfacets/reductions.hpp"
#include "test_util.hpp"

using namespace argfacets;
using argfacets::testing::ex1;

TEST(Framework, Ex1Shape) {
  auto af = ex1();
  EXPECT_EQ(af.size(), 7U);
  EXPECT_EQ(af.attack_count(), 10U);
  EXPECT_EQ(af.name(0), "w");
  EXPECT_EQ(af.name(6), "p");
  auto t = *af.find("t");
  auto e = *af.find("e");
  EXPECT_TRUE(af.attacks(t, e));
  EXPECT_FALSE(af.attacks(e, t));
}

TEST(Framework, AdjacencyReconstructsAttackSet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto af = random_af(9, 0.3, seed);
    std::vector<Attack> rebuilt;
    for (ArgumentIndex a = 0; a < af.size(); ++a) {
      for (auto b : af.attacked_by(a)) rebuilt.emplace_back(a, b);
      for (auto b : af.attackers_of(a)) EXPECT_TRUE(af.attacks(b, a));
      EXPECT_EQ(af.self_attacking(a), af.attacks(a, a));
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    EXPECT_EQ(rebuilt, af.attacks());
  }
}

TEST(Framework, BuilderDeduplicatesAttacks) {
  FrameworkBuilder b;
  b.add_argument("a");
  b.add_argument("b");
  b.add_attack("a", "b");
  b.add_attack("a", "b");
  EXPECT_EQ(std::move(b).build().attack_count(), 1U);
}

TEST(Framework, BuilderRejectsBadInput) {
  FrameworkBuilder b;
  b.add_argument("a");
  EXPECT_THROW(b.add_argument("a"), DuplicateArgument);
  EXPECT_THROW(b.add_argument("has space"), ParseError);
  EXPECT_THROW(b.add_argument("x,y"), ParseError);
  EXPECT_THROW(b.add_argument(""), ParseError);
  EXPECT_THROW(b.add_attack("a", "nope"), UnknownArgument);
  EXPECT_THROW(FrameworkBuilder{}.build(), ParseError);
}

TEST(Framework, SetOfAndNamesOf) {
  auto af = ex1();
  auto s = af.set_of({"w", "m"});
  EXPECT_EQ(af.names_of(s), (std::vector<std::string>{"w", "m"}));
  EXPECT_THROW(af.set_of({"zz"}), UnknownArgument);
}

TEST(Framework, SemanticsTags) {
  EXPECT_EQ(kAllSemantics.size(), 8U);
  for (auto s : kAllSemantics) EXPECT_EQ(parse_semantics(to_string(s)), s);
  EXPECT_FALSE(parse_semantics("grounded").has_value());
}
