#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kanforge/sset.hpp"

namespace kanforge {

struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<Index>> mul;
  Index identity = 0;

  std::size_t size() const noexcept { return names.size(); }
  Index op(Index a, Index b) const { return mul[a][b]; }
  Index inverse(Index a) const {
    for (Index b = 0; b < size(); ++b)
      if (mul[a][b] == identity) return b;
    throw Error(ErrorKind::Invalid, "element '" + names[a] + "' has no inverse");
  }
};

inline ValidationReport validate_group(const FiniteGroup& G) {
  ValidationReport r;
  const std::size_t n = G.size();
  if (n == 0 || G.mul.size() != n || G.identity >= n) {
    r.violations.push_back("group: empty or malformed table");
    return r;
  }
  for (Index a = 0; a < n; ++a) {
    if (G.mul[a].size() != n) {
      r.violations.push_back("group: row '" + G.names[a] + "' has wrong length");
      return r;
    }
    for (Index b = 0; b < n; ++b)
      if (G.mul[a][b] >= n) {
        r.violations.push_back("group: product out of range");
        return r;
      }
  }
  for (Index a = 0; a < n; ++a) {
    if (G.op(G.identity, a) != a || G.op(a, G.identity) != a)
      r.violations.push_back("group: identity fails on '" + G.names[a] + "'");
    bool inv = false;
    for (Index b = 0; b < n; ++b)
      if (G.op(a, b) == G.identity && G.op(b, a) == G.identity) inv = true;
    if (!inv) r.violations.push_back("group: '" + G.names[a] + "' has no inverse");
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
          r.violations.push_back("group: associativity fails on (" + G.names[a] + "," + G.names[b] + "," + G.names[c] + ")");
  }
  return r;
}

inline bool is_abelian(const FiniteGroup& G) {
  for (Index a = 0; a < G.size(); ++a)
    for (Index b = 0; b < G.size(); ++b)
      if (G.op(a, b) != G.op(b, a)) return false;
  return true;
}

inline bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<Index>& f) {
  if (f.size() != G.size()) return false;
  for (Index a = 0; a < G.size(); ++a)
    for (Index b = 0; b < G.size(); ++b)
      if (f[G.op(a, b)] != H.op(f[a], f[b])) return false;
  return true;
}

inline bool is_group_isomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<Index>& f) {
  if (G.size() != H.size() || !is_homomorphism(G, H, f)) return false;
  std::vector<bool> hit(H.size(), false);
  for (Index y : f) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

/// Brute-force search with multiplicative pruning.
inline std::optional<std::vector<Index>> find_group_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
  const std::size_t n = G.size();
  if (n != H.size()) return std::nullopt;
  std::vector<Index> f(n, n);
  std::vector<bool> used(n, false);
  f[G.identity] = H.identity;
  used[H.identity] = true;
  std::function<bool(Index)> rec = [&](Index a) -> bool {
    if (a == n) return is_group_isomorphism(G, H, f);
    if (f[a] != n) return rec(a + 1);
    for (Index y = 0; y < n; ++y) {
      if (used[y]) continue;
      f[a] = y;
      used[y] = true;
      bool ok = true;
      for (Index b = 0; b < n && ok; ++b) {
        if (f[b] == n) continue;
        Index ab = G.op(a, b), ba = G.op(b, a);
        if (f[ab] != n && f[ab] != H.op(f[a], f[b])) ok = false;
        if (f[ba] != n && f[ba] != H.op(f[b], f[a])) ok = false;
      }
      if (ok && rec(a + 1)) return true;
      f[a] = n;
      used[y] = false;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

inline FiniteGroup cyclic_group(std::size_t n) {
  FiniteGroup G;
  for (std::size_t i = 0; i < n; ++i) G.names.push_back(std::to_string(i));
  G.mul.assign(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) G.mul[a][b] = (a + b) % n;
  return G;
}

/// Permutations of {0,1,2} composed right to left, named by their images.
inline FiniteGroup symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup G;
  for (auto& q : perms) G.names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  G.mul.assign(6, std::vector<Index>(6));
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      G.mul[a][b] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return G;
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  FiniteGroup G;
  const std::size_t nb = B.size();
  for (Index a = 0; a < A.size(); ++a)
    for (Index b = 0; b < nb; ++b) G.names.push_back("(" + A.names[a] + "," + B.names[b] + ")");
  G.mul.assign(G.names.size(), std::vector<Index>(G.names.size()));
  for (Index x = 0; x < G.size(); ++x)
    for (Index y = 0; y < G.size(); ++y)
      G.mul[x][y] = A.op(x / nb, y / nb) * nb + B.op(x % nb, y % nb);
  G.identity = A.identity * nb + B.identity;
  return G;
}

/// Homotopy classes at a base vertex; for m >= 1 also the group table.
struct HomotopyGroup {
  std::size_t m = 0;
  Index base = 0;
  std::vector<Index> spheres;   // simplices of level m (all of level 0 when m = 0)
  std::vector<Index> class_of;  // per entry of `spheres`
  std::vector<Index> reps;      // class -> simplex of level m
  std::optional<FiniteGroup> group;
  std::vector<std::string> violations;

  std::size_t order() const noexcept { return reps.size(); }
  bool ok() const noexcept { return violations.empty(); }
  Index class_of_simplex(Index x) const {
    auto it = std::find(spheres.begin(), spheres.end(), x);
    if (it == spheres.end()) throw Error(ErrorKind::Invalid, "not a sphere at the base");
    return class_of[static_cast<std::size_t>(it - spheres.begin())];
  }
};

namespace detail {

inline HomotopyGroup pi_zero(const SSet& X) {
  HomotopyGroup h;
  UnionFind uf(X.size(0));
  if (X.dim >= 1)
    for (Index e = 0; e < X.size(1); ++e) uf.unite(X.d(1, 0, e), X.d(1, 1, e));
  std::map<Index, Index> cls;
  for (Index v = 0; v < X.size(0); ++v) {
    h.spheres.push_back(v);
    auto [it, fresh] = cls.emplace(uf.find(v), h.reps.size());
    if (fresh) h.reps.push_back(uf.find(v));
    h.class_of.push_back(it->second);
  }
  return h;
}

}  // namespace detail

/// pi_m computed from levels m and m+1 without Kan certification; the
/// relation and product are checked directly and failures land in violations.
inline HomotopyGroup pi_from_levels(const SSet& X, std::size_t m, Index a) {
  if (m == 0) return detail::pi_zero(X);
  if (X.dim < m + 1) throw Error(ErrorKind::DimensionOutOfRange, "pi_" + std::to_string(m) + " needs level " + std::to_string(m + 1));
  HomotopyGroup h;
  h.m = m;
  h.base = a;
  const Index am1 = degenerate_vertex(X, m - 1, a);
  const Index am = degenerate_vertex(X, m, a);
  std::vector<Index> pos(X.size(m), detail::hole);
  for (Index x = 0; x < X.size(m); ++x) {
    bool sphere = true;
    for (std::size_t i = 0; i <= m && sphere; ++i) sphere = X.d(m, i, x) == am1;
    if (sphere) {
      pos[x] = h.spheres.size();
      h.spheres.push_back(x);
    }
  }
  const std::size_t S = h.spheres.size();
  std::vector<std::vector<char>> rel(S, std::vector<char>(S, 0));
  for (Index w = 0; w < X.size(m + 1); ++w) {
    bool lower = true;
    for (std::size_t i = 0; i < m && lower; ++i) lower = X.d(m + 1, i, w) == am;
    if (!lower) continue;
    Index x = X.d(m + 1, m + 1, w), y = X.d(m + 1, m, w);
    if (pos[x] == detail::hole || pos[y] == detail::hole) continue;
    rel[pos[x]][pos[y]] = 1;
  }
  for (Index i = 0; i < S; ++i) {
    if (!rel[i][i]) h.violations.push_back("relation not reflexive at '" + X.ids[m][h.spheres[i]] + "'");
    for (Index j = 0; j < S; ++j) {
      if (rel[i][j] && !rel[j][i]) h.violations.push_back("relation not symmetric");
      for (Index k = 0; k < S && rel[i][j]; ++k)
        if (rel[j][k] && !rel[i][k]) h.violations.push_back("relation not transitive");
    }
  }
  UnionFind uf(S);
  for (Index i = 0; i < S; ++i)
    for (Index j = 0; j < S; ++j)
      if (rel[i][j]) uf.unite(i, j);
  std::map<Index, Index> cls;
  h.class_of.resize(S);
  for (Index i = 0; i < S; ++i) {
    auto [it, fresh] = cls.emplace(uf.find(i), h.reps.size());
    if (fresh) h.reps.push_back(h.spheres[uf.find(i)]);
    h.class_of[i] = it->second;
  }
  const std::size_t C = h.reps.size();
  const Index none = detail::hole;
  std::vector<std::vector<Index>> table(C, std::vector<Index>(C, none));
  for (Index z = 0; z < X.size(m + 1); ++z) {
    bool lower = true;
    for (std::size_t i = 0; i + 2 <= m && lower; ++i) lower = X.d(m + 1, i, z) == am;
    if (!lower) continue;
    Index x = X.d(m + 1, m + 1, z), w = X.d(m + 1, m, z), y = X.d(m + 1, m - 1, z);
    if (pos[x] == none || pos[y] == none || pos[w] == none) continue;
    Index cx = h.class_of[pos[x]], cy = h.class_of[pos[y]], cw = h.class_of[pos[w]];
    if (table[cx][cy] == none) table[cx][cy] = cw;
    else if (table[cx][cy] != cw) h.violations.push_back("product not well defined");
  }
  FiniteGroup G;
  for (Index c = 0; c < C; ++c) G.names.push_back(X.ids[m][h.reps[c]]);
  G.mul = table;
  G.identity = pos[am] == none ? 0 : h.class_of[pos[am]];
  for (auto& row : table)
    for (Index v : row)
      if (v == none) {
        h.violations.push_back("product not total");
        h.group = G;
        return h;
      }
  auto vr = validate_group(G);
  for (auto& v : vr.violations) h.violations.push_back(v);
  h.group = G;
  return h;
}

/// pi_m(X, a): for m >= 1 refuses unless X is Kan in dims 1..m+1.
inline HomotopyGroup pi(const SSet& X, std::size_t m, std::optional<Index> base = std::nullopt, Budget* budget = nullptr) {
  const Index a = base ? *base : X.base_point();
  if (a >= X.size(0)) throw Error(ErrorKind::Invalid, "base is not a 0-simplex");
  if (m == 0) {
    auto h = detail::pi_zero(X);
    h.base = a;
    return h;
  }
  if (X.dim < m + 1) throw Error(ErrorKind::DimensionOutOfRange, "pi_" + std::to_string(m) + " needs level " + std::to_string(m + 1));
  for (std::size_t d = 1; d <= m + 1; ++d) {
    auto row = kan_status(X, d, budget);
    if (!row.kan()) throw Error(ErrorKind::NotKan, "Kan condition fails in dimension " + std::to_string(d));
  }
  return pi_from_levels(X, m, a);
}

/// Map induced on homotopy classes by a simplicial map; nullopt if the image
/// of a sphere is not a sphere at the image base.
inline std::optional<std::vector<Index>> induced_on_pi(const HomotopyGroup& src, const HomotopyGroup& dst,
                                                       const std::vector<Index>& level_map) {
  std::vector<Index> out(src.order());
  for (Index c = 0; c < src.order(); ++c) {
    Index y = level_map[src.reps[c]];
    auto it = std::find(dst.spheres.begin(), dst.spheres.end(), y);
    if (it == dst.spheres.end()) return std::nullopt;
    out[c] = dst.class_of[static_cast<std::size_t>(it - dst.spheres.begin())];
  }
  for (Index i = 0; i < src.spheres.size(); ++i) {
    Index y = level_map[src.spheres[i]];
    auto it = std::find(dst.spheres.begin(), dst.spheres.end(), y);
    if (it == dst.spheres.end() || dst.class_of[static_cast<std::size_t>(it - dst.spheres.begin())] != out[src.class_of[i]])
      return std::nullopt;
  }
  return out;
}

}  // namespace kanforge
