#include <gtest/gtest.h>

#include "kanforge/category.hpp"
#include "kanforge/homotopy.hpp"

using namespace kanforge;

namespace {

// Associativity and unit laws straight from the table, independent of validate_category.
bool table_is_category(const FinCategory& C) {
  const auto n = C.num_morphisms();
  for (Index f = 0; f < n; ++f) {
    if (C.comp[C.identity[C.tgt[f]]][f] != f || C.comp[f][C.identity[C.src[f]]] != f) return false;
    for (Index g = 0; g < n; ++g) {
      if ((C.tgt[f] == C.src[g]) != (C.comp[g][f] != FinCategory::nocomp)) return false;
      if (C.tgt[f] != C.src[g]) continue;
      for (Index h = 0; h < n; ++h)
        if (C.tgt[g] == C.src[h] && C.comp[h][C.comp[g][f]] != C.comp[C.comp[h][g]][f]) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Category, StandardExamplesValidate) {
  for (const FinCategory& C : {group_category(cyclic_group(3)), group_category(symmetric_group3()), indiscrete_groupoid(3),
                               ordinal_category(2), discrete_category(4)}) {
    EXPECT_TRUE(validate_category(C).ok());
    EXPECT_TRUE(table_is_category(C));
  }
}

TEST(Category, IndiscreteHasOneArrowPerPair) {
  auto C = indiscrete_groupoid(3);
  EXPECT_EQ(C.num_morphisms(), 9u);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) EXPECT_EQ(C.hom(a, b).size(), 1u);
  EXPECT_TRUE(validate_groupoid(C).ok());
}

TEST(Category, OrdinalIsNotAGroupoid) {
  auto C = ordinal_category(1);
  EXPECT_TRUE(validate_category(C).ok());
  EXPECT_FALSE(validate_groupoid(C).ok());
}

TEST(Category, InversesCompose) {
  auto C = group_category(symmetric_group3());
  auto inv = inverse_table(C);
  for (Index f = 0; f < C.num_morphisms(); ++f) {
    EXPECT_EQ(C.compose(inv[f], f), C.identity[C.src[f]]);
    EXPECT_EQ(C.compose(f, inv[f]), C.identity[C.tgt[f]]);
  }
}

TEST(Category, BrokenAssociativityIsReported) {
  auto C = group_category(cyclic_group(3));
  std::swap(C.comp[1][1], C.comp[1][2]);
  EXPECT_FALSE(validate_category(C).ok());
}

TEST(Category, ComposingAcrossObjectsThrows) {
  auto C = ordinal_category(1);
  Index up = C.hom(0, 1).front();
  EXPECT_THROW(C.compose(up, up), Error);
}

TEST(Category, AutomorphismGroupOfGroupIsTheGroup) {
  for (const FiniteGroup& G : {cyclic_group(4), symmetric_group3()}) {
    auto A = automorphism_group(group_category(G));
    EXPECT_TRUE(validate_group(A).ok());
    EXPECT_EQ(A.size(), G.size());
    EXPECT_EQ(is_abelian(A), is_abelian(G));
    EXPECT_TRUE(find_group_isomorphism(A, G).has_value());
  }
}

TEST(Category, SameCategoryIsByTables) {
  EXPECT_TRUE(same_category(indiscrete_groupoid(2), indiscrete_groupoid(2)));
  EXPECT_FALSE(same_category(indiscrete_groupoid(2), discrete_category(2)));
}

TEST(Group, BuiltinsValidate) {
  EXPECT_TRUE(validate_group(cyclic_group(5)).ok());
  EXPECT_TRUE(validate_group(symmetric_group3()).ok());
  EXPECT_FALSE(is_abelian(symmetric_group3()));
  auto P = direct_product(cyclic_group(2), cyclic_group(3));
  EXPECT_EQ(P.size(), 6u);
  EXPECT_TRUE(find_group_isomorphism(P, cyclic_group(6)).has_value());
  EXPECT_FALSE(find_group_isomorphism(cyclic_group(6), symmetric_group3()).has_value());
}

TEST(Group, MissingInverseIsReported) {
  FiniteGroup G = cyclic_group(2);
  G.mul[1][1] = 1;
  EXPECT_FALSE(validate_group(G).ok());
}
