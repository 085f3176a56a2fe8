#include <gtest/gtest.h>

#include <set>

#include "kanforge/constructions.hpp"
#include "kanforge/hom.hpp"
#include "kanforge/homotopy.hpp"

using namespace kanforge;

namespace {

// Counts tuples of m-simplices with the boundary relations by trying all of them.
std::size_t brute_boundary_count(const SSet& X, std::size_t m, std::optional<std::size_t> omit = std::nullopt) {
  const std::size_t len = m + 2;
  const std::size_t n = X.size(m);
  std::vector<Index> t(len, 0);
  std::size_t count = 0;
  std::set<Tuple> distinct;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i)
      for (std::size_t j = i + 1; j < len && ok; ++j) {
        if (omit && (i == *omit || j == *omit)) continue;
        if (m == 0) continue;
        if (X.d(m, i, t[j]) != X.d(m, j - 1, t[i])) ok = false;
      }
    if (ok) {
      Tuple h;
      for (std::size_t i = 0; i < len; ++i)
        if (!omit || i != *omit) h.push_back(t[i]);
      distinct.insert(h);
    }
    std::size_t p = 0;
    while (p < len && ++t[p] == n) t[p++] = 0;
    if (p == len) break;
  }
  count = distinct.size();
  return count;
}

SSet delta1() { return standard_simplex(1, 3); }

}  // namespace

TEST(Validate, StandardSimplexIsValid) {
  SSet D = standard_simplex(2, 3);
  EXPECT_TRUE(validate(D).ok());
  EXPECT_EQ(D.size(0), 3u);
  EXPECT_EQ(D.size(1), 6u);
  EXPECT_EQ(D.size(2), 10u);
  EXPECT_EQ(D.size(3), 15u);
}

TEST(Validate, SwappedFacesAreReported) {
  SSet D = standard_simplex(2, 3);
  Index e = D.at(1, "01");
  std::swap(D.face[1][0][e], D.face[1][1][e]);
  auto r = validate(D);
  ASSERT_FALSE(r.ok());
  bool dd = false;
  for (auto& v : r.violations) dd = dd || v.find("dd") != std::string::npos;
  EXPECT_TRUE(dd);
}

TEST(Validate, CoskeletalClaimIsChecked) {
  SSet D = delta1();
  D.coskeletal_at = 0;
  EXPECT_FALSE(validate(D).ok());
  D.coskeletal_at = 1;
  EXPECT_TRUE(validate(D).ok());
}

TEST(BoundaryTuples, Delta1InDimensionZero) {
  EXPECT_EQ(boundary_tuples(delta1(), 0).size(), 4u);
}

TEST(BoundaryTuples, MatchBruteForce) {
  for (const SSet& X : {standard_simplex(2, 3), boundary_simplex(2, 3), circle(3), prism_quotient(1, 3)})
    for (std::size_t m = 0; m + 1 <= X.dim; ++m) EXPECT_EQ(boundary_tuples(X, m).size(), brute_boundary_count(X, m));
}

TEST(BoundaryTuples, BoundaryOfTriangleMatchesMapCount) {
  SSet B = boundary_simplex(2, 2);
  SSet S = boundary_simplex(2, 2);
  // maps from the boundary of Delta^2 into itself, counted by the hom engine
  EXPECT_EQ(boundary_tuples(B, 1).size(), count_hom_sset(S, B));
}

TEST(BoundaryTuples, OutOfRange) {
  EXPECT_THROW(boundary_tuples(delta1(), 4), Error);
}

TEST(HornTuples, DimensionZeroIsOneVertex) {
  // a horn in dimension 0 is a single vertex, hit by the image of level 1
  for (const SSet& X : {delta1(), circle(3), standard_simplex(2, 3)})
    for (std::size_t k = 0; k <= 1; ++k) {
      EXPECT_EQ(horn_tuples(X, 0, k).size(), X.size(0));
      std::set<Tuple> image;
      for (Index e = 0; e < X.size(1); ++e) image.insert(horn_of(X, 0, k, e));
      EXPECT_EQ(image.size(), X.size(0));
    }
}

TEST(HornTuples, MatchBruteForce) {
  for (const SSet& X : {standard_simplex(2, 3), circle(3), prism_quotient(1, 3)})
    for (std::size_t m = 0; m + 1 <= X.dim; ++m)
      for (std::size_t k = 0; k <= m + 1; ++k) EXPECT_EQ(horn_tuples(X, m, k).size(), brute_boundary_count(X, m, k));
}

TEST(HornTuples, BadIndex) {
  EXPECT_THROW(horn_tuples(delta1(), 1, 3), Error);
}

TEST(Kan, Delta1FailsAtOuterHorn) {
  SSet X = delta1();
  auto row = kan_status(X, 1);
  EXPECT_FALSE(row.horns[0].surjective);
  ASSERT_TRUE(row.horns[0].unfilled.has_value());
  // the horn (a1, a2) = (s0(0), e) has no filler
  EXPECT_EQ(*row.horns[0].unfilled, (Tuple{X.at(1, "00"), X.at(1, "01")}));
  EXPECT_FALSE(row.kan());
}

TEST(Kan, DimensionZeroAlwaysSurjective) {
  for (const SSet& X : {delta1(), circle(3), boundary_simplex(2, 3), prism_quotient(2, 3)}) EXPECT_TRUE(kan_status(X, 0).kan());
}

TEST(Kan, GlennTriangle) {
  // horn of x is the boundary of x with one entry dropped
  for (const SSet& X : {standard_simplex(2, 3), circle(3)})
    for (std::size_t m = 0; m + 1 <= X.dim; ++m)
      for (Index x = 0; x < X.size(m + 1); ++x)
        for (std::size_t k = 0; k <= m + 1; ++k) {
          Tuple b = boundary_of(X, m, x);
          b.erase(b.begin() + static_cast<std::ptrdiff_t>(k));
          EXPECT_EQ(b, horn_of(X, m, k, x));
        }
}

TEST(Classify, ConstantSetIsZeroGroupoid) {
  auto c = classify(constant({"a", "b", "c"}, 3), 0);
  EXPECT_TRUE(c.n_kan_groupoid);
  EXPECT_TRUE(c.complete);
}

TEST(Classify, Delta1IsNotAGroupoid) {
  EXPECT_FALSE(classify(delta1(), 1).n_kan_groupoid);
}

TEST(Coskeletal, PointExtendsToPoints) {
  SSet P = point(0);
  P.coskeletal_at = 0;
  SSet E = coskeletal_extend(P, 4);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(E.size(k), 1u);
  EXPECT_TRUE(validate(E).ok());
}

TEST(Coskeletal, ZeroCoskeletonOfTwoPoints) {
  SSet X = constant({"p", "q"}, 0);
  X.coskeletal_at = 0;
  SSet E = coskeletal_extend(X, 2);
  EXPECT_EQ(E.size(1), 4u);
  EXPECT_EQ(E.size(2), 8u);
  EXPECT_TRUE(validate(E).ok());
}

TEST(Coskeletal, TruncationRecoversOriginal) {
  SSet X = standard_simplex(2, 2);
  X.coskeletal_at = 2;
  SSet E = coskeletal_extend(X, 4);
  SSet T = truncate(E, 2);
  EXPECT_EQ(T.ids, X.ids);
  EXPECT_EQ(T.face, X.face);
  EXPECT_EQ(T.degen, X.degen);
  EXPECT_TRUE(validate(E).ok());
  EXPECT_EQ(E.size(3), standard_simplex(2, 3).size(3));
}

TEST(Coskeletal, RequiresFlag) {
  EXPECT_THROW(coskeletal_extend(delta1(), 5), Error);
}

TEST(CsqPrime, Delta2InDegreeZero) {
  SSet X = standard_simplex(2, 3);
  SSet Y = csq_prime(X, 0);
  // 1-simplices of Delta^2 have distinct endpoint pairs: nothing is identified
  std::set<std::pair<Index, Index>> ends;
  for (Index e = 0; e < X.size(1); ++e) ends.insert({X.d(1, 0, e), X.d(1, 1, e)});
  EXPECT_EQ(Y.size(1), ends.size());
  EXPECT_TRUE(validate(Y).ok());
  EXPECT_TRUE(classify(Y, 0).weakly_n_coskeletal);
}

TEST(CsqPrime, CircleCollapsesLoops) {
  SSet X = circle(3);
  SSet Y = csq_prime(X, 0);
  EXPECT_EQ(Y.size(1), 1u);
  auto u = csq_prime_unit(X, Y, 0);
  EXPECT_TRUE(is_simplicial(X, Y, u));
}

TEST(Shift, LevelsAndValidity) {
  SSet X = standard_simplex(2, 3);
  SSet D = shift(X);
  EXPECT_EQ(D.dim, 2u);
  EXPECT_EQ(D.size(0), X.size(1));
  EXPECT_TRUE(validate(D).ok());
}

TEST(Shift, DeformationIdentities) {
  for (const SSet& X : {standard_simplex(2, 4), circle(4), prism_quotient(1, 3)}) {
    auto r = shift_deformation_check(X);
    EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
  }
}

TEST(Loop, ReducedCircleLevelZero) {
  SSet S = circle(3);
  SSet plain = loop_space(S, LoopVariant::plain);
  SSet red = loop_space(S, LoopVariant::reduced);
  EXPECT_EQ(plain.size(0), 2u);
  EXPECT_EQ(red.size(0), 1u);
  EXPECT_TRUE(validate(plain).ok());
  EXPECT_TRUE(validate(red).ok());
  EXPECT_EQ(plain.dim, 2u);
}

TEST(Loop, PointLoopsArePoint) {
  SSet L = loop_space(point(3), LoopVariant::plain);
  for (std::size_t k = 0; k <= L.dim; ++k) EXPECT_EQ(L.size(k), 1u);
}

TEST(Pi, ComponentsOfDisjointUnion) {
  SSet X = disjoint_union(standard_simplex(1, 2), point(2));
  EXPECT_EQ(pi(X, 0).order(), 2u);
}

TEST(Pi, NotKanIsRefused) {
  EXPECT_THROW(pi(circle(3), 1), Error);
}

TEST(Constructions, PrismQuotientCounts) {
  EXPECT_EQ(nondegenerate_counts(prism_quotient(1, 3)), (std::vector<std::size_t>{1, 3, 2, 0}));
  EXPECT_EQ(nondegenerate_counts(prism_quotient(2, 4)), (std::vector<std::size_t>{1, 6, 8, 3, 0}));
}

TEST(Constructions, SquareHasNothingAboveTwo) {
  SSet P = product(standard_simplex(1, 4), standard_simplex(1, 4));
  auto c = nondegenerate_counts(P);
  EXPECT_EQ(c[3], 0u);
  EXPECT_EQ(c[4], 0u);
  EXPECT_EQ(c[2], 2u);
  EXPECT_TRUE(validate(P).ok());
}

TEST(Constructions, CircleCounts) {
  SSet S = circle(3);
  EXPECT_EQ(nondegenerate_counts(S), (std::vector<std::size_t>{1, 1, 0, 0}));
  EXPECT_TRUE(validate(S).ok());
}

TEST(Constructions, QuotientNeedsSubcomplex) {
  SSet D = standard_simplex(1, 2);
  Mask m(3);
  for (std::size_t k = 0; k <= 2; ++k) m[k].assign(D.size(k), false);
  m[1][D.at(1, "01")] = true;
  EXPECT_THROW(quotient(D, m), Error);
}

TEST(Constructions, HornIsValid) {
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_TRUE(validate(horn(2, k, 3)).ok());
}

TEST(Hom, MapsFromCircleToCircle) {
  // S^1 -> S^1 sends the loop to a 1-simplex with equal ends: e or the degenerate one
  EXPECT_EQ(count_hom_sset(circle(3), circle(3)), 2u);
}

TEST(Hom, IsomorphismSearch) {
  SSet A = standard_simplex(2, 3);
  EXPECT_TRUE(find_isomorphism(A, A).has_value());
  EXPECT_FALSE(find_isomorphism(A, prism_quotient(1, 3)).has_value());
}
