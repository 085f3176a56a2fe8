#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kanforge/json_io.hpp"
#include "kanforge/nerve.hpp"

namespace kanforge {

/// Canned inputs shared by the CLI, the tests and the acceptance driver.
namespace corpus {

inline std::vector<std::pair<std::string, FiniteGroup>> groups() {
  return {{"z2", cyclic_group(2)}, {"z3", cyclic_group(3)}, {"z4", cyclic_group(4)}, {"s3", symmetric_group3()}};
}

/// Groupoids for the nerve law: two groups and two indiscrete groupoids.
inline std::vector<std::pair<std::string, FinCategory>> groupoids() {
  return {{"groupoid_z2", group_category(cyclic_group(2))},
          {"groupoid_z3", group_category(cyclic_group(3))},
          {"indiscrete2", indiscrete_groupoid(2)},
          {"indiscrete3", indiscrete_groupoid(3)}};
}

/// The 2-groups named in the nerve law.
inline std::vector<std::pair<std::string, MonoidalCategory>> nerve_law_two_groups() {
  return {{"disc_z2", disc(cyclic_group(2))},
          {"disc_z3", disc(cyclic_group(3))},
          {"oneobj_z2", one_obj(cyclic_group(2))},
          {"oneobj_z3", one_obj(cyclic_group(3))},
          {"disc_z2_x_oneobj_z2", product(disc(cyclic_group(2)), one_obj(cyclic_group(2)))}};
}

/// Every canned 2-group: the nerve-law list plus a few more.
inline std::vector<std::pair<std::string, MonoidalCategory>> two_groups() {
  auto out = nerve_law_two_groups();
  out.emplace_back("trivial", trivial_two_group());
  out.emplace_back("disc_z4", disc(cyclic_group(4)));
  out.emplace_back("twisted_z2", twisted_z2());
  return out;
}

/// Reduced simplicial sets used as determinant sources.
inline std::vector<std::pair<std::string, SSet>> reduced_sources(std::size_t dim = 3) {
  return {{"circle", circle(dim)}, {"simplex_mod_vertices", simplex_mod_vertices(2, dim)}, {"prism_quotient", prism_quotient(1, dim)}};
}

/// Segal pre-monoids p_2^* A (X_{p,q} = A_q) of the reduced sources, shape (3, 3) cut at p+q <= 3.
inline std::vector<std::pair<std::string, BiSet>> segal_sources() {
  std::vector<std::pair<std::string, BiSet>> out;
  for (auto& [name, A] : reduced_sources()) out.emplace_back("segal_" + name, constant_in_p(A, 3, 3));
  return out;
}

struct Entry {
  std::string id;
  DocKind kind;
  std::string summary;
  std::function<json()> build;
};

inline std::vector<Entry> entries() {
  std::vector<Entry> out;
  for (auto& [n, G] : groups()) out.push_back({n, DocKind::Group, "finite group", [G] { return to_json(G); }});
  for (auto& [n, C] : groupoids()) out.push_back({n, DocKind::Category, "finite groupoid", [C] { return to_json(C); }});
  out.push_back({"ordinal1", DocKind::Category, "the poset [1] (not a groupoid)", [] { return to_json(ordinal_category(1)); }});
  for (auto& [n, M] : two_groups())
    out.push_back({"twogroup_" + n, DocKind::Monoidal, "2-group", [M] { return to_json(M); }});
  out.push_back({"monoid_max", DocKind::Monoidal, "discrete monoidal category on ({0,1}, max), not a 2-group",
                 [] { return to_json(disc_monoid_max()); }});
  out.push_back({"delta1", DocKind::SSet, "standard 1-simplex, truncated at 2", [] { return to_json(standard_simplex(1, 2)); }});
  out.push_back({"delta2", DocKind::SSet, "standard 2-simplex, truncated at 3", [] { return to_json(standard_simplex(2, 3)); }});
  out.push_back({"boundary2", DocKind::SSet, "boundary of the 2-simplex, truncated at 2", [] { return to_json(boundary_simplex(2, 2)); }});
  for (auto& [n, X] : reduced_sources()) out.push_back({n, DocKind::SSet, "reduced simplicial set, truncated at 3", [X] { return to_json(X); }});
  out.push_back({"prism_quotient2", DocKind::SSet, "(Delta^1 x Delta^2)/(sq_0 Delta^1 x Delta^2), truncated at 3",
                 [] { return to_json(prism_quotient(2, 3)); }});
  out.push_back({"nerve_z2", DocKind::SSet, "nerve of Z/2, truncated at 3", [] { return to_json(nerve_group(cyclic_group(2), 3)); }});
  out.push_back({"nerve_z3", DocKind::SSet, "nerve of Z/3, truncated at 3", [] { return to_json(nerve_group(cyclic_group(3), 3)); }});
  for (auto& [n, X] : segal_sources())
    out.push_back({n, DocKind::BiSet, "Segal pre-monoid constant in p, shape (3,3), p+q <= 3", [X] { return to_json(X); }});
  return out;
}

inline const Entry* find(const std::string& id) {
  static const std::vector<Entry> all = entries();
  for (auto& e : all)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace corpus
}  // namespace kanforge
