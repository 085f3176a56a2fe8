#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kanforge/homotopy.hpp"

namespace kanforge {

/// Finite category with an explicit composition table.
///
/// comp[g][f] is g o f when tgt(f) = src(g) and `nocomp` otherwise.
struct FinCategory {
  static constexpr Index nocomp = static_cast<Index>(-1);

  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<Index> src, tgt;
  std::vector<Index> identity;
  std::vector<std::vector<Index>> comp;

  std::size_t num_objects() const noexcept { return objects.size(); }
  std::size_t num_morphisms() const noexcept { return morphisms.size(); }
  Index compose(Index g, Index f) const {
    Index h = comp[g][f];
    if (h == nocomp) throw Error(ErrorKind::Invalid, "'" + morphisms[g] + "' o '" + morphisms[f] + "' is not composable");
    return h;
  }

  const std::vector<Index>& hom(Index a, Index b) const { return homs_[a][b]; }

  std::optional<Index> object(const std::string& id) const {
    auto it = obj_lookup_.find(id);
    if (it == obj_lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<Index> morphism(const std::string& id) const {
    auto it = mor_lookup_.find(id);
    if (it == mor_lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Rebuilds lookups and hom-sets; call after editing the tables.
  void finalize() {
    obj_lookup_.clear();
    mor_lookup_.clear();
    for (Index a = 0; a < objects.size(); ++a) obj_lookup_.emplace(objects[a], a);
    for (Index f = 0; f < morphisms.size(); ++f) mor_lookup_.emplace(morphisms[f], f);
    homs_.assign(objects.size(), std::vector<std::vector<Index>>(objects.size()));
    for (Index f = 0; f < morphisms.size(); ++f)
      if (src[f] < objects.size() && tgt[f] < objects.size()) homs_[src[f]][tgt[f]].push_back(f);
  }

  /// Finds identities from the table: the endomorphism that is neutral on both sides.
  bool derive_identities() {
    identity.assign(objects.size(), nocomp);
    for (Index a = 0; a < objects.size(); ++a)
      for (Index e = 0; e < morphisms.size(); ++e) {
        if (src[e] != a || tgt[e] != a) continue;
        bool neutral = true;
        for (Index f = 0; f < morphisms.size() && neutral; ++f) {
          if (tgt[f] == a && comp[e][f] != f) neutral = false;
          if (src[f] == a && comp[f][e] != f) neutral = false;
        }
        if (neutral) {
          identity[a] = e;
          break;
        }
      }
    for (Index i : identity)
      if (i == nocomp) return false;
    return true;
  }

 private:
  std::unordered_map<std::string, Index> obj_lookup_, mor_lookup_;
  std::vector<std::vector<std::vector<Index>>> homs_;
};

inline ValidationReport validate_category(const FinCategory& C) {
  ValidationReport r;
  auto bad = [&](std::string s) { r.violations.push_back(std::move(s)); };
  const std::size_t no = C.num_objects(), nm = C.num_morphisms();
  if (C.src.size() != nm || C.tgt.size() != nm || C.comp.size() != nm || C.identity.size() != no) {
    bad("shape: tables do not match the object and morphism lists");
    return r;
  }
  for (Index f = 0; f < nm; ++f) {
    if (C.src[f] >= no || C.tgt[f] >= no) bad("shape: endpoint of '" + C.morphisms[f] + "' out of range");
    if (C.comp[f].size() != nm) {
      bad("shape: composition row of '" + C.morphisms[f] + "' is not total");
      return r;
    }
  }
  if (!r.ok()) return r;
  for (Index a = 0; a < no; ++a) {
    Index e = C.identity[a];
    if (e >= nm || C.src[e] != a || C.tgt[e] != a) bad("identity: object '" + C.objects[a] + "' has no identity");
  }
  if (!r.ok()) return r;
  for (Index g = 0; g < nm; ++g)
    for (Index f = 0; f < nm; ++f) {
      Index h = C.comp[g][f];
      if (C.tgt[f] == C.src[g]) {
        if (h >= nm) bad("composition: '" + C.morphisms[g] + "' o '" + C.morphisms[f] + "' undefined");
        else if (C.src[h] != C.src[f] || C.tgt[h] != C.tgt[g])
          bad("composition: '" + C.morphisms[g] + "' o '" + C.morphisms[f] + "' has the wrong endpoints");
      } else if (h != FinCategory::nocomp) {
        bad("composition: '" + C.morphisms[g] + "' o '" + C.morphisms[f] + "' defined on a non-composable pair");
      }
    }
  if (!r.ok()) return r;
  for (Index f = 0; f < nm; ++f) {
    if (C.comp[C.identity[C.tgt[f]]][f] != f) bad("unit: left identity fails on '" + C.morphisms[f] + "'");
    if (C.comp[f][C.identity[C.src[f]]] != f) bad("unit: right identity fails on '" + C.morphisms[f] + "'");
  }
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g) {
      if (C.tgt[f] != C.src[g]) continue;
      for (Index h = 0; h < nm; ++h) {
        if (C.tgt[g] != C.src[h]) continue;
        if (C.comp[h][C.comp[g][f]] != C.comp[C.comp[h][g]][f])
          bad("associativity: fails on ('" + C.morphisms[h] + "','" + C.morphisms[g] + "','" + C.morphisms[f] + "')");
      }
    }
  return r;
}

inline std::optional<Index> inverse_of(const FinCategory& C, Index f) {
  for (Index g : C.hom(C.tgt[f], C.src[f]))
    if (C.comp[g][f] == C.identity[C.src[f]] && C.comp[f][g] == C.identity[C.tgt[f]]) return g;
  return std::nullopt;
}

inline ValidationReport validate_groupoid(const FinCategory& C) {
  ValidationReport r = validate_category(C);
  if (!r.ok()) return r;
  for (Index f = 0; f < C.num_morphisms(); ++f)
    if (!inverse_of(C, f)) r.violations.push_back("groupoid: '" + C.morphisms[f] + "' is not invertible");
  return r;
}

inline std::vector<Index> inverse_table(const FinCategory& C) {
  std::vector<Index> inv(C.num_morphisms());
  for (Index f = 0; f < C.num_morphisms(); ++f) {
    auto g = inverse_of(C, f);
    if (!g) throw Error(ErrorKind::NotGroupoidBase, "'" + C.morphisms[f] + "' is not invertible");
    inv[f] = *g;
  }
  return inv;
}

/// One-object category of a group. Composition is diagrammatic: g o f is the
/// product f g, so a 2-simplex (f, g) of the nerve has d_1 = d_2 . d_0.
inline FinCategory group_category(const FiniteGroup& G) {
  FinCategory C;
  C.objects = {"*"};
  C.morphisms = G.names;
  C.src.assign(G.size(), 0);
  C.tgt.assign(G.size(), 0);
  C.identity = {G.identity};
  C.comp.assign(G.size(), std::vector<Index>(G.size()));
  for (Index g = 0; g < G.size(); ++g)
    for (Index f = 0; f < G.size(); ++f) C.comp[g][f] = G.mul[f][g];
  C.finalize();
  return C;
}

/// Exactly one morphism "i>j" between any two objects.
inline FinCategory indiscrete_groupoid(std::size_t n) {
  FinCategory C;
  for (std::size_t i = 0; i < n; ++i) C.objects.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      C.morphisms.push_back(std::to_string(i) + ">" + std::to_string(j));
      C.src.push_back(i);
      C.tgt.push_back(j);
    }
  C.comp.assign(n * n, std::vector<Index>(n * n, FinCategory::nocomp));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) C.comp[j * n + k][i * n + j] = i * n + k;
  for (std::size_t i = 0; i < n; ++i) C.identity.push_back(i * n + i);
  C.finalize();
  return C;
}

/// The poset [n] as a category: one morphism "i<=j" for i <= j.
inline FinCategory ordinal_category(std::size_t n) {
  FinCategory C;
  for (std::size_t i = 0; i <= n; ++i) C.objects.push_back(std::to_string(i));
  std::vector<std::vector<Index>> at(n + 1, std::vector<Index>(n + 1, FinCategory::nocomp));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      at[i][j] = C.morphisms.size();
      C.morphisms.push_back(std::to_string(i) + "<=" + std::to_string(j));
      C.src.push_back(i);
      C.tgt.push_back(j);
    }
  C.comp.assign(C.morphisms.size(), std::vector<Index>(C.morphisms.size(), FinCategory::nocomp));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k) C.comp[at[j][k]][at[i][j]] = at[i][k];
  for (std::size_t i = 0; i <= n; ++i) C.identity.push_back(at[i][i]);
  C.finalize();
  return C;
}

inline FinCategory discrete_category(std::size_t n) {
  FinCategory C;
  for (std::size_t i = 0; i < n; ++i) {
    C.objects.push_back(std::to_string(i));
    C.morphisms.push_back("id" + std::to_string(i));
    C.src.push_back(i);
    C.tgt.push_back(i);
    C.identity.push_back(i);
  }
  C.comp.assign(n, std::vector<Index>(n, FinCategory::nocomp));
  for (std::size_t i = 0; i < n; ++i) C.comp[i][i] = i;
  C.finalize();
  return C;
}

/// Automorphisms of an object, multiplied diagrammatically (a . b = b o a).
inline FiniteGroup automorphism_group(const FinCategory& C, Index a = 0) {
  FiniteGroup G;
  const auto& h = C.hom(a, a);
  std::vector<Index> pos(C.num_morphisms(), 0);
  for (Index i = 0; i < h.size(); ++i) {
    pos[h[i]] = i;
    G.names.push_back(C.morphisms[h[i]]);
  }
  G.mul.assign(h.size(), std::vector<Index>(h.size()));
  for (Index i = 0; i < h.size(); ++i)
    for (Index j = 0; j < h.size(); ++j) G.mul[i][j] = pos[C.comp[h[j]][h[i]]];
  G.identity = pos[C.identity[a]];
  return G;
}

/// Functor-level equality of two categories: same ids, endpoints and table.
inline bool same_category(const FinCategory& A, const FinCategory& B) {
  if (A.objects != B.objects || A.morphisms != B.morphisms) return false;
  return A.src == B.src && A.tgt == B.tgt && A.comp == B.comp && A.identity == B.identity;
}

}  // namespace kanforge
