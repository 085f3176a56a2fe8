#include <gtest/gtest.h>

#include "kanforge/corpus.hpp"
#include "kanforge/hom.hpp"
#include "kanforge/nerve.hpp"

using namespace kanforge;

namespace {

// Composable strings of length n: sum over object sequences of the product of hom-set sizes.
std::size_t composable_strings(const FinCategory& C, std::size_t n) {
  const std::size_t k = C.num_objects();
  std::vector<std::size_t> ends(k, 1);  // strings ending at each object
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::size_t> next(k, 0);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) next[b] += ends[a] * C.hom(a, b).size();
    ends = next;
  }
  std::size_t total = 0;
  for (auto e : ends) total += e;
  return total;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(Nerve, LevelSizesAreComposableStrings) {
  for (const FinCategory& C : {group_category(symmetric_group3()), indiscrete_groupoid(3), ordinal_category(2), discrete_category(2)}) {
    auto N = nerve_category(C, 4);
    ASSERT_TRUE(validate(N).ok());
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(N.size(n), composable_strings(C, n)) << "level " << n;
  }
}

TEST(Nerve, GroupoidNervesAreStrictKan) {
  for (auto& [name, C] : corpus::groupoids()) {
    auto N = nerve_category(C, 4);
    for (std::size_t m = 1; m <= 3; ++m) EXPECT_TRUE(kan_status(N, m).strict()) << name << " m=" << m;
    EXPECT_TRUE(classify(N, 1).n_kan_groupoid) << name;
  }
}

TEST(Nerve, PosetNerveIsNotKan) {
  auto N = nerve_category(ordinal_category(1), 3);
  auto row = kan_status(N, 1);
  EXPECT_FALSE(row.kan());
  EXPECT_FALSE(row.horns.front().surjective);
  EXPECT_TRUE(row.horns[1].surjective);
}

TEST(Nerve, GroupoidRoundTrip) {
  for (auto& [name, C] : corpus::groupoids()) {
    auto back = groupoid_from_nerve(nerve_category(C, 3));
    EXPECT_TRUE(same_category(back, C)) << name;
  }
}

TEST(Nerve, ReconstructionRefusesNonGroupoid) {
  EXPECT_THROW(groupoid_from_nerve(nerve_category(ordinal_category(1), 3)), Error);
}

TEST(TwoGroupNerve, DiscreteLevelsArePowers) {
  // Disc(K): x_ij is determined by the consecutive x_{i,i+1}.
  for (std::size_t k : {2u, 3u}) {
    auto N = nerve_2group(certified(disc(cyclic_group(k))), 4);
    ASSERT_TRUE(validate(N.X).ok());
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(N.X.size(n), ipow(k, n));
  }
}

TEST(TwoGroupNerve, OneObjectLevelsCountCocycles) {
  // OneObj(A), A abelian: normalized 2-cocycles on the n-simplex, |A|^(n choose 2).
  for (std::size_t k : {2u, 3u}) {
    auto N = nerve_2group(certified(one_obj(cyclic_group(k))), 4);
    ASSERT_TRUE(validate(N.X).ok());
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(N.X.size(n), ipow(k, n * (n - (n > 0)) / 2)) << n;
  }
}

TEST(TwoGroupNerve, NervesAreTwoKanGroupoids) {
  for (auto& [name, M] : corpus::two_groups()) {
    auto N = nerve_2group(certified(M), 4);
    EXPECT_TRUE(validate(N.X).ok()) << name;
    auto c = classify(N.X, 2);
    EXPECT_TRUE(c.n_kan_groupoid) << name;
    // horns in dimension 3 and up have unique fillers
    EXPECT_TRUE(kan_status(N.X, 2).strict()) << name;
  }
}

TEST(TwoGroupNerve, ReconstructionRoundTrips) {
  for (auto& [name, M] : corpus::nerve_law_two_groups()) {
    auto G = certified(M);
    auto N = nerve_2group(G, 4);
    auto R = two_group_from_nerve(N.X);
    EXPECT_TRUE(R.round_trip) << name;
    auto F = duskin_comparison(G, N, R);
    EXPECT_TRUE(validate_lax_functor(G.M, R.G.M, F).ok()) << name;
    EXPECT_TRUE(is_weak_equivalence(G.M, R.G.M, F)) << name;
  }
}

TEST(TwoGroupNerve, GrhoAndLoopGamma) {
  for (auto& [name, M] : corpus::two_groups()) {
    auto G = certified(M);
    auto r = grho_check(G);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.pi0_G.size(), pi0_two_group(M).group.size()) << name;
    EXPECT_EQ(r.pi1_G.size(), pi1_two_group(M).size()) << name;
    EXPECT_TRUE(r.pi2_abelian) << name;
    EXPECT_TRUE(loop_gamma(G).ok()) << name;
  }
}

TEST(SegalNerve, ValidAndRowOneIsTheGroupoidNerve) {
  for (auto& [name, M] : corpus::nerve_law_two_groups()) {
    auto G = certified(M);
    auto S = segal_nerve(G, 2, 2);
    ASSERT_TRUE(validate(S).ok()) << name;
    auto row1 = horizontal_slice(S, 1);
    EXPECT_TRUE(find_isomorphism(row1, nerve_category(G.M.C, row1.dim)).has_value()) << name;
    // column 0 is the nerve itself
    auto col0 = vertical_slice(S, 0);
    EXPECT_EQ(col0.size(1), G.M.num_objects()) << name;
  }
}

TEST(SegalNerve, Fibrancy) {
  for (auto& [name, M] : corpus::two_groups()) {
    auto r = segal_fibrancy_check(segal_nerve(certified(M), 2, 3, 4));
    EXPECT_TRUE(r.ok()) << name << (r.violations.empty() ? "" : ": " + r.violations.front());
  }
}
