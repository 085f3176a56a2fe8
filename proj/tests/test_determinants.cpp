#include <gtest/gtest.h>

#include "kanforge/corpus.hpp"
#include "kanforge/determinants.hpp"

using namespace kanforge;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Brute force over every D: X_1 -> H, checked only on the 2-simplices.
std::size_t brute_additive(const SSet& X, const FiniteGroup& H) {
  const std::size_t n = X.size(1);
  std::vector<Index> D(n, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = D[X.s(0, 0, 0)] == H.identity;
    for (Index x = 0; ok && x < X.size(2); ++x)
      ok = D[X.d(2, 1, x)] == H.mul[D[X.d(2, 2, x)]][D[X.d(2, 0, x)]];
    count += ok;
    std::size_t i = 0;
    while (i < n && ++D[i] == H.size()) D[i++] = 0;
    if (i == n) return count;
  }
}

}  // namespace

TEST(Additive, MatchesBruteForce) {
  for (auto& [xn, X] : corpus::reduced_sources())
    for (auto& [hn, H] : corpus::groups()) {
      EXPECT_EQ(enumerate_additive(X, H).size(), brute_additive(X, H)) << xn << " " << hn;
    }
}

TEST(Additive, ClosedFormCounts) {
  // free on the loop, on two edges of the triangle, and on the prism diagonal
  for (auto& [hn, H] : corpus::groups()) {
    EXPECT_EQ(enumerate_additive(circle(3), H).size(), H.size()) << hn;
    EXPECT_EQ(enumerate_additive(simplex_mod_vertices(2, 3), H).size(), H.size() * H.size()) << hn;
    EXPECT_EQ(enumerate_additive(prism_quotient(1, 3), H).size(), H.size()) << hn;
  }
}

TEST(Additive, BijectionWithMapsToTheNerve) {
  for (auto& [xn, X] : corpus::reduced_sources())
    for (auto& [hn, H] : corpus::groups()) EXPECT_TRUE(additive_bijection(X, H).verified()) << xn << " " << hn;
}

TEST(Additive, RequiresReducedSource) {
  EXPECT_THROW(enumerate_additive(standard_simplex(1, 2), cyclic_group(2)), Error);
}

TEST(Determinants, DiscreteTargetsAreAdditive) {
  // into Disc(K) only identities exist, so T is forced and D is additive
  for (std::size_t k : {2u, 3u}) {
    auto G = certified(disc(cyclic_group(k)));
    for (auto& [xn, X] : corpus::reduced_sources())
      EXPECT_EQ(enumerate_determinants(X, G).size(), brute_additive(X, cyclic_group(k))) << xn << " " << k;
  }
}

TEST(Determinants, OneObjectTargetsCountTwoSimplices) {
  // D is the unit; T is free on nondegenerate 2-simplices when no 3-simplex is nondegenerate
  for (std::size_t k : {2u, 3u}) {
    auto G = certified(one_obj(cyclic_group(k)));
    for (auto& [xn, X] : corpus::reduced_sources()) {
      auto nd = nondegenerate_counts(X);
      ASSERT_EQ(nd[3], 0u);
      EXPECT_EQ(enumerate_determinants(X, G).size(), ipow(k, nd[2])) << xn << " " << k;
    }
  }
}

TEST(Determinants, BijectionAndPi0ForEveryCannedPair) {
  for (auto& [gn, M] : corpus::two_groups()) {
    auto G = certified(M);
    for (auto& [xn, X] : corpus::reduced_sources()) {
      EXPECT_TRUE(determinant_bijection(X, G).verified()) << xn << " " << gn;
      auto p = pi0_det_comparison(X, G);
      EXPECT_TRUE(p.ok()) << xn << " " << gn;
      EXPECT_EQ(p.det.classes, p.mapping_classes) << xn << " " << gn;
    }
  }
}

TEST(Determinants, IdentityMorphismAlwaysExists) {
  auto G = certified(twisted_z2());
  auto X = prism_quotient(1, 3);
  for (auto& d : enumerate_determinants(X, G)) EXPECT_FALSE(det_morphisms(X, G, d, d, 1).empty());
}

TEST(Determinants, Pi0OfOneObjectTargetIsCohomology) {
  // OneObj(A): determinants up to morphism are classes in H^2(X; A)
  auto G = certified(one_obj(cyclic_group(3)));
  // Delta^2/vertices: the face has boundary e01 + e12 - e02, so H^2 = 0
  auto X = simplex_mod_vertices(2, 3);
  EXPECT_EQ(pi0_det(X, G, enumerate_determinants(X, G)).classes, 1u);
  // the sphere Delta^2/boundary has H^2 = A
  auto D = standard_simplex(2, 3);
  Mask boundary(D.dim + 1);
  for (std::size_t k = 0; k <= D.dim; ++k)
    for (auto& id : D.ids[k])
      boundary[k].push_back(id.find('0') == std::string::npos || id.find('1') == std::string::npos ||
                            id.find('2') == std::string::npos);
  auto S2 = quotient(D, boundary);
  EXPECT_EQ(nondegenerate_counts(S2), (std::vector<std::size_t>{1, 0, 1, 0}));
  auto dets = enumerate_determinants(S2, G);
  EXPECT_EQ(dets.size(), 3u);
  EXPECT_EQ(pi0_det(S2, G, dets).classes, 3u);
  auto c = pi0_det_comparison(S2, G);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.mapping_classes, 3u);
}

TEST(EnrichedHom, LevelsAndStrictness) {
  auto G = certified(one_obj(cyclic_group(2)));
  auto N = nerve_2group(G, 4);
  auto E = enriched_hom0(circle(4), N.X, 2);
  ASSERT_TRUE(validate(E.H).ok());
  EXPECT_EQ(E.H.size(0), 1u);
  EXPECT_EQ(E.H.size(1), 4u);
  EXPECT_EQ(E.H.size(2), 32u);
  EXPECT_FALSE(strict_in_dim1(E.H));
}

TEST(EnrichedHom, LevelZeroIsTheMapSet) {
  for (auto& [gn, M] : corpus::nerve_law_two_groups()) {
    auto N = nerve_2group(certified(M), 4);
    for (auto& [xn, X] : corpus::reduced_sources(4)) {
      auto E = enriched_hom0(X, N.X, 1);
      EXPECT_EQ(E.H.size(0), count_hom_sset(X, N.X)) << xn << " " << gn;
    }
  }
}

TEST(SegalDeterminants, BijectionForEveryCannedPair) {
  for (auto& [gn, M] : corpus::nerve_law_two_groups()) {
    auto G = certified(M);
    for (auto& [xn, X] : corpus::segal_sources()) {
      auto r = segal_bijection(X, G);
      EXPECT_TRUE(r.verified()) << xn << " " << gn;
    }
  }
}

TEST(SegalDeterminants, ConstantSourceMatchesReducedDeterminants) {
  // for a pre-monoid constant in p the Segal determinants are the reduced ones
  for (auto& [gn, M] : corpus::nerve_law_two_groups()) {
    auto G = certified(M);
    for (auto& [xn, A] : corpus::reduced_sources()) {
      auto X = constant_in_p(A, 3, 3);
      EXPECT_EQ(enumerate_segal_determinants(X, G).size(), enumerate_determinants(A, G).size()) << xn << " " << gn;
    }
  }
}

TEST(SegalDeterminants, Mu3IsDetermined) {
  for (auto& [gn, M] : corpus::nerve_law_two_groups())
    for (auto& [xn, A] : corpus::reduced_sources(4))
      EXPECT_TRUE(mu3_determined(constant_in_p(A, 3, 4), certified(M)).bijective()) << xn << " " << gn;
}

TEST(SegalDeterminants, HomOneIsStrictAndMatchesPi0) {
  auto G = certified(one_obj(cyclic_group(2)));
  auto X = constant_in_p(circle(3), 3, 3);
  auto H = segal_hom1(X, G, 2);
  EXPECT_TRUE(strict_in_dim1(H.H));
  auto p = segal_pi0(X, G);
  EXPECT_TRUE(p.ok());
}

TEST(SimplexCounts, PrismQuotients) {
  auto a = nondegenerate_counts(prism_quotient(1, 4));
  auto b = nondegenerate_counts(prism_quotient(2, 4));
  EXPECT_EQ(a, (std::vector<std::size_t>{1, 3, 2, 0, 0}));
  EXPECT_EQ(b, (std::vector<std::size_t>{1, 6, 8, 3, 0}));
}
