#include <gtest/gtest.h>

#include "kanforge/bisimplicial.hpp"
#include "kanforge/constructions.hpp"
#include "kanforge/hom.hpp"

using namespace kanforge;

TEST(BiSet, BoxSizesMultiply) {
  auto A = standard_simplex(1, 3), B = circle(3);
  auto X = box(A, B);
  ASSERT_TRUE(validate(X).ok());
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; q <= 3; ++q) EXPECT_EQ(X.size(p, q), A.size(p) * B.size(q));
}

TEST(BiSet, TotalCutsTheShape) {
  auto X = box(standard_simplex(1, 3), standard_simplex(1, 3), 3);
  EXPECT_TRUE(validate(X).ok());
  EXPECT_TRUE(X.in_shape(1, 2));
  EXPECT_FALSE(X.in_shape(2, 2));
  EXPECT_EQ(X.size(2, 2), 0u);
}

TEST(BiSet, DiagonalOfBoxIsProduct) {
  auto A = standard_simplex(1, 3), B = standard_simplex(1, 3);
  auto D = diag(box(A, B));
  auto P = product(A, B);
  ASSERT_TRUE(validate(D).ok());
  EXPECT_TRUE(find_isomorphism(D, P).has_value());
}

TEST(BiSet, ConstantSlices) {
  auto A = prism_quotient(1, 3);
  auto X = constant_in_p(A, 2);
  for (std::size_t p = 0; p <= 2; ++p) EXPECT_TRUE(find_isomorphism(vertical_slice(X, p), A).has_value());
  auto h = horizontal_slice(X, 1);
  for (std::size_t p = 0; p <= h.dim; ++p) EXPECT_EQ(h.size(p), A.size(1));
}

TEST(BiSet, SwappedFaceIsReported) {
  auto X = box(standard_simplex(1, 2), standard_simplex(1, 2));
  std::swap(X.hface[1][1][0], X.hface[1][1][1]);
  EXPECT_FALSE(validate(X).ok());
}

TEST(BiSet, RestrictShapeKeepsLevels) {
  auto X = box(circle(3), circle(3));
  auto Y = restrict_shape(X, 2, 2, 3);
  ASSERT_TRUE(validate(Y).ok());
  EXPECT_EQ(Y.size(1, 2), X.size(1, 2));
  EXPECT_EQ(Y.size(2, 2), 0u);
}

TEST(BiSet, HomCountsMatchLevelwiseProduct) {
  // maps box(A,B) -> box(C,D) contain the products of maps; for points the count is 1
  auto pt = point(2);
  auto X = box(circle(2), circle(2));
  EXPECT_EQ(hom_biset(X, box(pt, pt)).size(), 1u);
  // maps from a point are the (0,0)-simplices of the target
  auto Y = box(standard_simplex(1, 2), standard_simplex(1, 2));
  EXPECT_EQ(hom_biset(box(pt, pt), Y).size(), Y.size(0, 0));
}

TEST(BiSet, QuotientCollapsesBaseTimesFactor) {
  auto X = constant_in_p(circle(2), 2);
  auto Y = constant_in_q(standard_simplex(1, 2), 2);
  ASSERT_EQ(X.Q, Y.Q);
  auto XY = product(X, Y);
  auto Q = quotient(XY, product_mask(X, base_point_mask(X), Y, {}));
  ASSERT_TRUE(validate(Q).ok());
  // (X x Y)/(* x Y): everything off the base, plus one point per node
  for (auto [p, q] : Q.nodes()) EXPECT_EQ(Q.size(p, q), (X.size(p, q) - 1) * Y.size(p, q) + 1) << p << "," << q;
}

TEST(BiSet, RestrictionToTotalOnConstantSources) {
  auto X = constant_in_p(circle(4), 3, 4);
  auto r = restriction_to_total(X, X, 3);
  EXPECT_EQ(r.full_count, r.truncated_count);
  EXPECT_TRUE(r.bijective());
}
