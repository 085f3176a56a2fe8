#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kanforge/corpus.hpp"
#include "kanforge/determinants.hpp"

namespace kanforge {

/// Outcome of one named verification: a verdict, human-readable lines and a
/// JSON report with the same content.
struct Check {
  explicit Check(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;
  json report = json::array();

  void record(const std::string& case_name, bool ok, const std::string& detail, json extra = json::object()) {
    if (!ok) passed = false;
    lines.push_back((ok ? "ok   " : "FAIL ") + case_name + ": " + detail);
    extra["case"] = case_name;
    extra["passed"] = ok;
    report.push_back(std::move(extra));
  }
};

namespace verify {

inline std::string sizes(const SSet& X) {
  std::vector<std::string> s;
  for (std::size_t k = 0; k <= X.dim; ++k) s.push_back(std::to_string(X.size(k)));
  return "(" + join(s, ",") + ")";
}

inline std::string yes(bool b) { return b ? "yes" : "no"; }

/// Same objects, morphisms, endpoints, identities and composition, matched by id.
inline bool same_by_ids(const FinCategory& A, const FinCategory& B) {
  if (A.num_objects() != B.num_objects() || A.num_morphisms() != B.num_morphisms()) return false;
  std::vector<Index> ob(A.num_objects()), mo(A.num_morphisms());
  for (Index a = 0; a < A.num_objects(); ++a) {
    auto b = B.object(A.objects[a]);
    if (!b) return false;
    ob[a] = *b;
  }
  for (Index f = 0; f < A.num_morphisms(); ++f) {
    auto g = B.morphism(A.morphisms[f]);
    if (!g) return false;
    mo[f] = *g;
  }
  for (Index a = 0; a < A.num_objects(); ++a)
    if (mo[A.identity[a]] != B.identity[ob[a]]) return false;
  for (Index f = 0; f < A.num_morphisms(); ++f) {
    if (ob[A.src[f]] != B.src[mo[f]] || ob[A.tgt[f]] != B.tgt[mo[f]]) return false;
    for (Index g = 0; g < A.num_morphisms(); ++g) {
      Index h = A.comp[g][f], h2 = B.comp[mo[g]][mo[f]];
      if ((h == FinCategory::nocomp) != (h2 == FinCategory::nocomp)) return false;
      if (h != FinCategory::nocomp && mo[h] != h2) return false;
    }
  }
  return true;
}

inline json bijection_json(const BijectionReport& r) {
  return {{"count", r.count}, {"oracle_count", r.oracle_count}, {"bijection_verified", r.verified()}};
}

using Named2Groups = std::vector<std::pair<std::string, MonoidalCategory>>;
using NamedSSets = std::vector<std::pair<std::string, SSet>>;

// 1
inline Check groupoid_nerve(const std::vector<std::pair<std::string, FinCategory>>& cats) {
  Check c("groupoid-nerve");
  for (auto& [name, C] : cats) {
    SSet N = nerve_category(C, 3);
    bool kan = classify(N, 1).n_kan_groupoid;
    bool iso = false;
    std::string why;
    try {
      iso = same_by_ids(groupoid_from_nerve(N), C);
    } catch (const Error& e) {
      why = std::string(" (") + e.what() + ")";
    }
    c.record(name, kan && iso, "nerve " + sizes(N) + ", 1-Kan groupoid " + yes(kan) + ", reconstruction equal " + yes(iso) + why,
             {{"n_kan_groupoid", kan}, {"reconstruction_equal", iso}});
  }
  return c;
}

// 2
inline Check two_group_nerve(const Named2Groups& gs) {
  Check c("twogroup-nerve");
  for (auto& [name, M] : gs) {
    TwoGroup G = certified(M);
    auto N = nerve_2group(G, 4);
    bool kan = classify(N.X, 2).n_kan_groupoid;
    bool we = false, lax = false, rt = false;
    std::string why;
    try {
      auto R = two_group_from_nerve(N.X);
      auto F = duskin_comparison(G, N, R);
      rt = R.round_trip;
      lax = validate_lax_functor(G.M, R.G.M, F).ok();
      we = lax && is_weak_equivalence(G.M, R.G.M, F);
    } catch (const Error& e) {
      why = std::string(" (") + e.what() + ")";
    }
    c.record(name, kan && we, "nerve " + sizes(N.X) + ", 2-Kan groupoid " + yes(kan) + ", comparison lax " + yes(lax) +
                                  ", weak equivalence " + yes(we) + why,
             {{"n_kan_groupoid", kan}, {"round_trip", rt}, {"lax_functor", lax}, {"weak_equivalence", we}});
  }
  return c;
}

inline json group_table(const FiniteGroup& G) {
  json rows = json::array();
  for (auto& r : G.mul) rows.push_back(io::ids_of(r, G.names));
  return {{"elements", G.names}, {"mul", rows}};
}

// 3
inline Check grho(const Named2Groups& gs) {
  Check c("grho");
  for (auto& [name, M] : gs) {
    auto r = grho_check(certified(M));
    std::string detail = "|pi0 G| = " + std::to_string(r.pi0_G.size()) + " = |pi1 N|, |pi1 G| = " + std::to_string(r.pi1_G.size()) +
                         " = |pi2 N|, alpha0 iso " + yes(r.alpha0_iso) + ", alpha1 iso " + yes(r.alpha1_iso);
    if (!r.violations.empty()) detail += " (" + r.violations.front() + ")";
    c.record(name, r.ok(), detail,
             {{"alpha0_iso", r.alpha0_iso},
              {"alpha1_iso", r.alpha1_iso},
              {"pi0_G", group_table(r.pi0_G)},
              {"pi1_N", group_table(r.pi1_N)},
              {"pi1_G", group_table(r.pi1_G)},
              {"pi2_N", group_table(r.pi2_N)}});
  }
  return c;
}

// 4
inline Check loop_gamma_check(const Named2Groups& gs) {
  Check c("loop-gamma");
  for (auto& [name, M] : gs) {
    auto r = loop_gamma(certified(M));
    c.record(name, r.ok(), "loops " + sizes(r.loops) + " -> " + sizes(r.target) + ", simplicial " + yes(r.simplicial) +
                               ", bijective " + yes(r.bijective),
             {{"simplicial", r.simplicial}, {"bijective", r.bijective}});
  }
  return c;
}

// 5
inline Check additive(const NamedSSets& xs, const std::vector<std::pair<std::string, FiniteGroup>>& hs) {
  Check c("additive");
  for (auto& [xn, X] : xs)
    for (auto& [hn, H] : hs) {
      auto r = additive_bijection(X, H);
      c.record(xn + " / " + hn, r.verified(),
               std::to_string(r.count) + " additive functions, " + std::to_string(r.oracle_count) + " maps, bijection " + yes(r.verified()),
               bijection_json(r));
    }
  return c;
}

// 6
inline Check determinants(const NamedSSets& xs, const Named2Groups& gs) {
  Check c("determinants");
  for (auto& [gn, M] : gs) {
    TwoGroup G = certified(M);
    for (auto& [xn, X] : xs) {
      auto r = determinant_bijection(X, G);
      auto p = pi0_det_comparison(X, G);
      json extra = bijection_json(r);
      extra["pi0_det"] = p.det.classes;
      extra["pi0_mapping"] = p.mapping_classes;
      extra["pi0_agree"] = p.ok();
      c.record(xn + " / " + gn, r.verified() && p.ok(),
               std::to_string(r.count) + " determinants, " + std::to_string(r.oracle_count) + " maps, bijection " + yes(r.verified()) +
                   ", pi0 " + std::to_string(p.det.classes) + " vs " + std::to_string(p.mapping_classes),
               extra);
    }
  }
  return c;
}

// 7
inline Check segal_determinants(const NamedSSets& xs, const Named2Groups& gs) {
  Check c("segal-determinants");
  for (auto& [gn, M] : gs) {
    TwoGroup G = certified(M);
    for (auto& [xn, A] : xs) {
      BiSet X3 = constant_in_p(truncate(A, 3), 3, 3);
      auto r = segal_bijection(X3, G);
      // mu_3: maps on the p+q <= 4 shape are fixed by the p+q <= 3 part
      BiSet X4 = constant_in_p(A, 3, 4);
      auto m = mu3_determined(X4, G);
      json extra = bijection_json(r);
      extra["mu3_determined"] = m.bijective();
      c.record(xn + " / " + gn, r.verified() && m.bijective(),
               std::to_string(r.count) + " Segal determinants, " + std::to_string(r.oracle_count) + " maps, bijection " +
                   yes(r.verified()) + ", mu3 " + std::to_string(m.full_count) + " -> " + std::to_string(m.truncated_count) + " " +
                   yes(m.bijective()),
               extra);
    }
  }
  return c;
}

// 8
inline Check simplex_counts(const std::vector<std::pair<std::string, std::pair<SSet, std::vector<std::size_t>>>>& cases) {
  Check c("simplex-counts");
  for (auto& [name, pr] : cases) {
    auto& [X, expected] = pr;
    auto got = nondegenerate_counts(X);
    bool ok = got.size() >= expected.size();
    for (std::size_t k = 0; k < got.size(); ++k) ok = ok && got[k] == (k < expected.size() ? expected[k] : 0);
    std::vector<std::string> s;
    for (auto v : got) s.push_back(std::to_string(v));
    c.record(name, ok, "nondegenerate counts (" + join(s, ",") + ")", {{"counts", got}});
  }
  return c;
}

inline std::vector<std::pair<std::string, std::pair<SSet, std::vector<std::size_t>>>> expected_count_cases() {
  return {{"prism_quotient", {prism_quotient(1, 4), {1, 3, 2}}}, {"prism_quotient2", {prism_quotient(2, 4), {1, 6, 8, 3}}}};
}

// 9
inline Check strictness(const SSet& X, const MonoidalCategory& M, const std::string& label) {
  Check c("strictness");
  TwoGroup G = certified(M);
  auto N = nerve_2group(G, 4);
  auto E = enriched_hom0(X, N.X, 2);
  bool e_strict = strict_in_dim1(E.H);
  c.record("enriched_hom0 / " + label, !e_strict,
           "levels " + sizes(E.H) + ", strict in dimension 1 " + yes(e_strict) + " (expected no)", {{"strict", e_strict}});
  auto S = segal_hom1(constant_in_p(truncate(X, 3), 3, 3), G, 2);
  bool s_strict = strict_in_dim1(S.H);
  c.record("segal_hom1 / " + label, s_strict,
           "levels " + sizes(S.H) + ", strict in dimension 1 " + yes(s_strict) + " (expected yes)", {{"strict", s_strict}});
  return c;
}

// 10
inline Check fibrancy(const Named2Groups& gs) {
  Check c("fibrancy");
  for (auto& [name, M] : gs) {
    BiSet X = segal_nerve(certified(M), 2, 3, 4);
    auto r = segal_fibrancy_check(X, 2);
    std::string detail = "shape (2,3), p+q <= 4: (i) " + yes(r.cond_i) + " (ii) " + yes(r.cond_ii) + " (iii) " + yes(r.cond_iii) +
                         " (iv) " + yes(r.cond_iv);
    if (!r.violations.empty()) detail += " (" + r.violations.front() + ")";
    c.record(name, r.ok(), detail, {{"i", r.cond_i}, {"ii", r.cond_ii}, {"iii", r.cond_iii}, {"iv", r.cond_iv}, {"checked", r.checked}});
  }
  return c;
}

// 11
inline Check coskeleton() {
  Check c("coskeleton");
  SSet direct = nerve_group(cyclic_group(2), 3);
  SSet t2 = truncate(direct, 2);
  t2.coskeletal_at = 2;
  SSet ext = coskeletal_extend(t2, 3);
  bool iso = find_isomorphism(ext, direct).has_value();
  c.record("extend tau_2 nerve Z/2 to 3", ext.size(3) == direct.size(3) && iso,
           "level 3 has " + std::to_string(ext.size(3)) + " elements, direct nerve " + std::to_string(direct.size(3)) +
               ", isomorphic " + yes(iso),
           {{"level3", ext.size(3)}, {"direct_level3", direct.size(3)}, {"isomorphic", iso}});
  struct Case {
    std::string name;
    SSet X;
    std::size_t n;
  };
  std::vector<Case> cases{{"nerve Z/2, n = 1", direct, 1},
                          {"nerve indiscrete3, n = 1", nerve_category(indiscrete_groupoid(3), 3), 1},
                          {"2-group nerve OneObj(Z/2), n = 2", nerve_2group(certified(one_obj(cyclic_group(2))), 4).X, 2}};
  for (auto& k : cases) {
    bool weak = classify(k.X, k.n).weakly_n_coskeletal;
    SSet Y = csq_prime(k.X, k.n);
    SMap u = csq_prime_unit(k.X, Y, k.n);
    bool bij = is_simplicial(k.X, Y, u) && is_levelwise_bijective(k.X, Y, u);
    c.record("csq' of " + k.name, weak && bij, "weakly coskeletal " + yes(weak) + ", unit " + sizes(k.X) + " -> " + sizes(Y) +
                                                   " bijective " + yes(bij),
             {{"weakly_coskeletal", weak}, {"unit_isomorphism", bij}});
  }
  return c;
}

/// The acceptance checks on the canned corpus, in order.
struct Named {
  std::string name;
  std::string summary;
  std::function<Check()> run;
};

inline std::vector<Named> acceptance() {
  auto three = [] {
    std::vector<std::pair<std::string, FiniteGroup>> hs;
    for (auto& [n, H] : corpus::groups())
      if (n != "z4") hs.emplace_back(n, H);
    return hs;
  };
  return {
      {"groupoid-nerve", "nerves of finite groupoids are 1-Kan groupoids and give the groupoid back",
       [] { return groupoid_nerve(corpus::groupoids()); }},
      {"twogroup-nerve", "2-group nerves are 2-Kan groupoids; the reconstruction is weakly equivalent",
       [] { return two_group_nerve(corpus::nerve_law_two_groups()); }},
      {"grho", "pi0 G = pi1 N(G) and pi1 G = pi2 N(G) through the alpha maps", [] { return grho(corpus::two_groups()); }},
      {"loop-gamma", "Gamma: loops of N(G) -> nerve of the underlying groupoid is an isomorphism",
       [] { return loop_gamma_check(corpus::two_groups()); }},
      {"additive", "additive functions correspond to maps into the nerve of H",
       [three] { return additive(corpus::reduced_sources(), three()); }},
      {"determinants", "determinants correspond to maps into N(G); pi0 agrees with the mapping object",
       [] { return determinants(corpus::reduced_sources(), corpus::two_groups()); }},
      {"segal-determinants", "Segal determinants correspond to maps into the Segal nerve; mu3 determines them",
       [] { return segal_determinants(corpus::reduced_sources(4), corpus::two_groups()); }},
      {"simplex-counts", "nondegenerate simplices of the two prism quotients", [] { return simplex_counts(expected_count_cases()); }},
      {"strictness", "enriched_hom0 into N(OneObj Z/2) is not strict; the Segal Hom^(1) is",
       [] { return strictness(circle(3), one_obj(cyclic_group(2)), "circle, OneObj(Z/2)"); }},
      {"fibrancy", "Segal nerves satisfy the fibrancy conditions (i)-(iv)", [] { return fibrancy(corpus::two_groups()); }},
      {"coskeleton", "coskeletal extension and csq' on weakly coskeletal inputs", [] { return coskeleton(); }},
  };
}

}  // namespace verify
}  // namespace kanforge
