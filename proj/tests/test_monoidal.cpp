#include <gtest/gtest.h>

#include "kanforge/monoidal.hpp"

using namespace kanforge;

namespace {

std::vector<std::pair<std::string, MonoidalCategory>> samples() {
  return {{"disc_z3", disc(cyclic_group(3))},
          {"oneobj_z2", one_obj(cyclic_group(2))},
          {"oneobj_z3", one_obj(cyclic_group(3))},
          {"codiscrete_z2", codiscrete(cyclic_group(2))},
          {"product", product(disc(cyclic_group(2)), one_obj(cyclic_group(2)))},
          {"twisted_z2", twisted_z2()},
          {"trivial", trivial_two_group()}};
}

}  // namespace

TEST(Monoidal, SamplesSatisfyCoherence) {
  for (auto& [name, M] : samples()) {
    auto v = validate_monoidal(M);
    EXPECT_TRUE(v.ok()) << name << ": " << (v.ok() ? "" : v.violations.front());
  }
}

TEST(Monoidal, SamplesAreTwoGroups) {
  for (auto& [name, M] : samples()) {
    auto c = certify_two_group(M);
    ASSERT_TRUE(c.group.has_value()) << name;
    const auto& G = *c.group;
    // the witnesses are arrows X (inv X) -> 1 and (inv X) X -> 1
    for (Index X = 0; X < M.num_objects(); ++X) {
      EXPECT_EQ(M.C.src[G.alpha[X]], M.t(X, G.inv_d_obj[X])) << name;
      EXPECT_EQ(M.C.tgt[G.alpha[X]], M.unit) << name;
      EXPECT_EQ(M.C.src[G.beta[X]], M.t(G.inv_g_obj[X], X)) << name;
      EXPECT_EQ(M.C.tgt[G.beta[X]], M.unit) << name;
    }
  }
}

TEST(Monoidal, MaxMonoidIsNotATwoGroup) {
  auto M = disc_monoid_max();
  EXPECT_TRUE(validate_monoidal(M).ok());
  auto c = certify_two_group(M);
  EXPECT_FALSE(c.group.has_value());
  ASSERT_TRUE(c.non_invertible.has_value());
  EXPECT_EQ(M.C.objects[*c.non_invertible], "1");
  EXPECT_THROW(certified(M), Error);
}

TEST(Monoidal, BrokenAssociatorIsReported) {
  // on one object a constant associator c satisfies the pentagon only when c c = c c c
  auto M = one_obj(cyclic_group(3));
  M.assoc[0][0][0] = 1;
  EXPECT_FALSE(validate_monoidal(M).ok());
}

TEST(Monoidal, ProductSizesMultiply) {
  auto A = one_obj(cyclic_group(3));
  auto B = disc(cyclic_group(2));
  auto P = product(A, B);
  EXPECT_EQ(P.num_objects(), A.num_objects() * B.num_objects());
  EXPECT_EQ(P.num_morphisms(), A.num_morphisms() * B.num_morphisms());
}

TEST(Monoidal, HomotopyGroupsOfSamples) {
  EXPECT_EQ(pi0_two_group(disc(cyclic_group(3))).group.size(), 3u);
  EXPECT_EQ(pi1_two_group(disc(cyclic_group(3))).size(), 1u);
  EXPECT_EQ(pi0_two_group(one_obj(cyclic_group(3))).group.size(), 1u);
  EXPECT_EQ(pi1_two_group(one_obj(cyclic_group(3))).size(), 3u);
  // codiscrete: every object is isomorphic to every other
  EXPECT_EQ(pi0_two_group(codiscrete(cyclic_group(2))).group.size(), 1u);
  auto t = twisted_z2();
  EXPECT_EQ(pi0_two_group(t).group.size(), 2u);
  EXPECT_EQ(pi1_two_group(t).size(), 2u);
  EXPECT_TRUE(is_abelian(pi1_two_group(t)));
}

TEST(LaxFunctor, IdentityAndComposition) {
  auto M = one_obj(cyclic_group(2));
  auto I = identity_functor(M);
  EXPECT_TRUE(validate_lax_functor(M, M, I).ok());
  EXPECT_TRUE(same_functor(compose_lax(M, I, I), I));
  EXPECT_TRUE(is_weak_equivalence(M, M, I));
}

TEST(LaxFunctor, DiscreteHomomorphisms) {
  auto S = disc(cyclic_group(4));
  auto T = disc(cyclic_group(2));
  // reduction mod 2 is a homomorphism and not an equivalence
  auto F = disc_functor(S, T, {0, 1, 0, 1});
  EXPECT_TRUE(validate_lax_functor(S, T, F).ok());
  EXPECT_FALSE(is_weak_equivalence(S, T, F));
}

TEST(LaxFunctor, ProjectionToCodiscreteIsAnEquivalence) {
  // codiscrete K has pi0 = pi1 = 1, as does the trivial 2-group
  auto S = codiscrete(cyclic_group(3));
  auto T = trivial_two_group();
  auto F = disc_functor(S, T, {0, 0, 0});
  auto r = weak_equivalence_report(S, T, F);
  EXPECT_TRUE(r.pi0_iso);
  EXPECT_TRUE(r.pi1_iso);
}
