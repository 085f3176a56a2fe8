#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kanforge/constructions.hpp"
#include "kanforge/hom.hpp"
#include "kanforge/homotopy.hpp"

namespace kanforge {

/// Truncated bisimplicial set on the shape p <= P, q <= Q and, when `total`
/// is set, p + q <= total.
///
/// hface[p][q][i]: X_{p,q} -> X_{p-1,q}, vface[p][q][i]: X_{p,q} -> X_{p,q-1};
/// hdegen and vdegen go up by one and exist where the target is in shape.
struct BiSet {
  std::size_t P = 0, Q = 0;
  std::optional<std::size_t> total;
  std::vector<std::vector<std::vector<std::string>>> ids;
  std::vector<std::vector<std::vector<std::vector<Index>>>> hface, vface, hdegen, vdegen;

  BiSet() = default;
  BiSet(std::size_t p, std::size_t q, std::optional<std::size_t> t = std::nullopt) { reshape(p, q, t); }

  void reshape(std::size_t p, std::size_t q, std::optional<std::size_t> t = std::nullopt) {
    P = p;
    Q = q;
    total = t;
    auto grid = [&](auto& v) { v.assign(P + 1, std::vector<std::vector<std::vector<Index>>>(Q + 1)); };
    ids.assign(P + 1, std::vector<std::vector<std::string>>(Q + 1));
    grid(hface);
    grid(vface);
    grid(hdegen);
    grid(vdegen);
    for (std::size_t a = 0; a <= P; ++a)
      for (std::size_t b = 0; b <= Q; ++b) {
        if (!in_shape(a, b)) continue;
        if (a >= 1) hface[a][b].assign(a + 1, {});
        if (b >= 1) vface[a][b].assign(b + 1, {});
        if (in_shape(a + 1, b)) hdegen[a][b].assign(a + 1, {});
        if (in_shape(a, b + 1)) vdegen[a][b].assign(b + 1, {});
      }
  }

  bool in_shape(std::size_t p, std::size_t q) const { return p <= P && q <= Q && (!total || p + q <= *total); }
  std::size_t size(std::size_t p, std::size_t q) const { return in_shape(p, q) ? ids[p][q].size() : 0; }

  /// Nodes ordered by p+q, then p; faces go to earlier nodes.
  std::vector<std::pair<std::size_t, std::size_t>> nodes() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t s = 0; s <= P + Q; ++s)
      for (std::size_t p = 0; p <= std::min(s, P); ++p)
        if (in_shape(p, s - p)) out.emplace_back(p, s - p);
    return out;
  }
};

inline ValidationReport validate(const BiSet& X) {
  ValidationReport r;
  auto bad = [&](std::string s) { r.violations.push_back(std::move(s)); };
  auto at = [](std::size_t p, std::size_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
  for (auto [p, q] : X.nodes()) {
    const std::size_t n = X.size(p, q);
    auto sized = [&](const std::vector<Index>& m, std::size_t target, const char* what) {
      if (m.size() != n) return bad(std::string("shape: ") + what + " at " + at(p, q) + " is not total");
      for (Index y : m)
        if (y >= target) return bad(std::string("shape: ") + what + " at " + at(p, q) + " out of range");
    };
    if (p >= 1)
      for (auto& m : X.hface[p][q]) sized(m, X.size(p - 1, q), "hface");
    if (q >= 1)
      for (auto& m : X.vface[p][q]) sized(m, X.size(p, q - 1), "vface");
    for (auto& m : X.hdegen[p][q]) sized(m, X.size(p + 1, q), "hdegen");
    for (auto& m : X.vdegen[p][q]) sized(m, X.size(p, q + 1), "vdegen");
  }
  if (!r.ok()) return r;

  // the simplicial identities in each direction, through generic accessors
  struct Dir {
    const char* name;
    const BiSet& X;
    bool horizontal;
    std::size_t lvl(std::size_t p, std::size_t q) const { return horizontal ? p : q; }
    Index d(std::size_t p, std::size_t q, std::size_t i, Index x) const {
      return horizontal ? X.hface[p][q][i][x] : X.vface[p][q][i][x];
    }
    Index s(std::size_t p, std::size_t q, std::size_t j, Index x) const {
      return horizontal ? X.hdegen[p][q][j][x] : X.vdegen[p][q][j][x];
    }
    std::pair<std::size_t, std::size_t> down(std::size_t p, std::size_t q) const {
      return horizontal ? std::make_pair(p - 1, q) : std::make_pair(p, q - 1);
    }
    std::pair<std::size_t, std::size_t> up(std::size_t p, std::size_t q) const {
      return horizontal ? std::make_pair(p + 1, q) : std::make_pair(p, q + 1);
    }
  };
  for (bool hz : {true, false}) {
    Dir D{hz ? "h" : "v", X, hz};
    for (auto [p, q] : X.nodes()) {
      const std::size_t k = D.lvl(p, q);
      auto [p1, q1] = D.down(p, q);
      auto [pu, qu] = D.up(p, q);
      for (Index x = 0; x < X.size(p, q); ++x) {
        if (k >= 2)
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j)
              if (D.d(p1, q1, i, D.d(p, q, j, x)) != D.d(p1, q1, j - 1, D.d(p, q, i, x)))
                bad(std::string("dd: ") + D.name + " identity fails at " + at(p, q) + " on '" + X.ids[p][q][x] + "'");
        if (!X.in_shape(pu, qu)) continue;
        auto [p2, q2] = D.up(pu, qu);
        if (X.in_shape(p2, q2))
          for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = i; j <= k; ++j)
              if (D.s(pu, qu, i, D.s(p, q, j, x)) != D.s(pu, qu, j + 1, D.s(p, q, i, x)))
                bad(std::string("ss: ") + D.name + " identity fails at " + at(p, q) + " on '" + X.ids[p][q][x] + "'");
        for (std::size_t j = 0; j <= k; ++j) {
          Index y = D.s(p, q, j, x);
          for (std::size_t i = 0; i <= k + 1; ++i) {
            Index lhs = D.d(pu, qu, i, y);
            Index rhs;
            if (i < j) rhs = D.s(p1, q1, j - 1, D.d(p, q, i, x));
            else if (i == j || i == j + 1) rhs = x;
            else rhs = D.s(p1, q1, j, D.d(p, q, i - 1, x));
            if ((i < j || i > j + 1) && k == 0) continue;
            if (lhs != rhs)
              bad(std::string("ds: ") + D.name + " identity fails at " + at(p, q) + " on '" + X.ids[p][q][x] + "'");
          }
        }
      }
    }
  }
  // horizontal and vertical operators commute
  for (auto [p, q] : X.nodes())
    for (Index x = 0; x < X.size(p, q); ++x) {
      const std::string where = at(p, q) + " on '" + X.ids[p][q][x] + "'";
      if (p >= 1 && q >= 1)
        for (std::size_t i = 0; i <= p; ++i)
          for (std::size_t j = 0; j <= q; ++j)
            if (X.hface[p][q - 1][i][X.vface[p][q][j][x]] != X.vface[p - 1][q][j][X.hface[p][q][i][x]])
              bad("mixed: hface/vface fail at " + where);
      if (p >= 1 && X.in_shape(p, q + 1))
        for (std::size_t i = 0; i <= p; ++i)
          for (std::size_t j = 0; j <= q; ++j)
            if (X.hface[p][q + 1][i][X.vdegen[p][q][j][x]] != X.vdegen[p - 1][q][j][X.hface[p][q][i][x]])
              bad("mixed: hface/vdegen fail at " + where);
      if (q >= 1 && X.in_shape(p + 1, q))
        for (std::size_t i = 0; i <= p; ++i)
          for (std::size_t j = 0; j <= q; ++j)
            if (X.vface[p + 1][q][j][X.hdegen[p][q][i][x]] != X.hdegen[p][q - 1][i][X.vface[p][q][j][x]])
              bad("mixed: vface/hdegen fail at " + where);
      if (X.in_shape(p + 1, q + 1))
        for (std::size_t i = 0; i <= p; ++i)
          for (std::size_t j = 0; j <= q; ++j)
            if (X.hdegen[p][q + 1][i][X.vdegen[p][q][j][x]] != X.vdegen[p + 1][q][j][X.hdegen[p][q][i][x]])
              bad("mixed: hdegen/vdegen fail at " + where);
    }
  return r;
}

/// X_{p,.} with the vertical operators, as far as the shape allows.
inline SSet vertical_slice(const BiSet& X, std::size_t p) {
  std::size_t top = 0;
  while (X.in_shape(p, top + 1)) ++top;
  SSet S(top);
  for (std::size_t q = 0; q <= top; ++q) S.ids[q] = X.ids[p][q];
  for (std::size_t q = 1; q <= top; ++q) S.face[q] = X.vface[p][q];
  for (std::size_t q = 0; q < top; ++q) S.degen[q] = X.vdegen[p][q];
  if (S.size(0) == 1) S.base = 0;
  S.reindex();
  return S;
}

/// X_{.,q} with the horizontal operators.
inline SSet horizontal_slice(const BiSet& X, std::size_t q) {
  std::size_t top = 0;
  while (X.in_shape(top + 1, q)) ++top;
  SSet S(top);
  for (std::size_t p = 0; p <= top; ++p) S.ids[p] = X.ids[p][q];
  for (std::size_t p = 1; p <= top; ++p) S.face[p] = X.hface[p][q];
  for (std::size_t p = 0; p < top; ++p) S.degen[p] = X.hdegen[p][q];
  S.reindex();
  return S;
}

/// Same data on a smaller shape.
inline BiSet restrict_shape(const BiSet& X, std::size_t P, std::size_t Q, std::optional<std::size_t> total) {
  BiSet Y(P, Q, total);
  for (auto [p, q] : Y.nodes()) {
    if (!X.in_shape(p, q)) throw Error(ErrorKind::DimensionOutOfRange, "restriction leaves the source shape");
    Y.ids[p][q] = X.ids[p][q];
    if (p >= 1) Y.hface[p][q] = X.hface[p][q];
    if (q >= 1) Y.vface[p][q] = X.vface[p][q];
    if (Y.in_shape(p + 1, q)) Y.hdegen[p][q] = X.hdegen[p][q];
    if (Y.in_shape(p, q + 1)) Y.vdegen[p][q] = X.vdegen[p][q];
  }
  return Y;
}

/// A (x) B: (A (x) B)_{p,q} = A_p x B_q with ids "(a|b)".
inline BiSet box(const SSet& A, const SSet& B, std::optional<std::size_t> total = std::nullopt) {
  BiSet X(A.dim, B.dim, total);
  auto idx = [&](std::size_t q, Index a, Index b) { return a * B.size(q) + b; };
  for (auto [p, q] : X.nodes()) {
    for (Index a = 0; a < A.size(p); ++a)
      for (Index b = 0; b < B.size(q); ++b) X.ids[p][q].push_back("(" + A.ids[p][a] + "|" + B.ids[q][b] + ")");
    const std::size_t n = X.size(p, q);
    auto fill = [&](std::vector<Index>& m, auto f) {
      m.resize(n);
      for (Index a = 0; a < A.size(p); ++a)
        for (Index b = 0; b < B.size(q); ++b) m[idx(q, a, b)] = f(a, b);
    };
    if (p >= 1)
      for (std::size_t i = 0; i <= p; ++i) fill(X.hface[p][q][i], [&](Index a, Index b) { return idx(q, A.d(p, i, a), b); });
    if (q >= 1)
      for (std::size_t i = 0; i <= q; ++i)
        fill(X.vface[p][q][i], [&](Index a, Index b) { return idx(q - 1, a, B.d(q, i, b)); });
    if (X.in_shape(p + 1, q))
      for (std::size_t j = 0; j <= p; ++j) fill(X.hdegen[p][q][j], [&](Index a, Index b) { return idx(q, A.s(p, j, a), b); });
    if (X.in_shape(p, q + 1))
      for (std::size_t j = 0; j <= q; ++j)
        fill(X.vdegen[p][q][j], [&](Index a, Index b) { return idx(q + 1, a, B.s(q, j, b)); });
  }
  return X;
}

/// X_{p,q} = A_q: the rows are copies of A, the horizontal operators identities.
inline BiSet constant_in_p(const SSet& A, std::size_t P, std::optional<std::size_t> total = std::nullopt) {
  return box(constant({"*"}, P), A, total);
}

/// X_{p,q} = A_p.
inline BiSet constant_in_q(const SSet& A, std::size_t Q, std::optional<std::size_t> total = std::nullopt) {
  return box(A, constant({"*"}, Q), total);
}

/// diag(X)_n = X_{n,n} with d_i = d^h_i d^v_i and s_j = s^h_j s^v_j.
inline SSet diag(const BiSet& X) {
  std::size_t top = 0;
  while (X.in_shape(top + 1, top + 1)) ++top;
  SSet D(top);
  for (std::size_t n = 0; n <= top; ++n) D.ids[n] = X.ids[n][n];
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      D.face[n][i].resize(X.size(n, n));
      for (Index x = 0; x < X.size(n, n); ++x) D.face[n][i][x] = X.hface[n][n - 1][i][X.vface[n][n][i][x]];
    }
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t j = 0; j <= n; ++j) {
      D.degen[n][j].resize(X.size(n, n));
      for (Index x = 0; x < X.size(n, n); ++x) D.degen[n][j][x] = X.hdegen[n][n + 1][j][X.vdegen[n][n][j][x]];
    }
  D.reindex();
  return D;
}

/// Nodewise product; (x, y) sits at index x * |Y_{p,q}| + y, ids "(x|y)".
inline BiSet product(const BiSet& X, const BiSet& Y) {
  if (X.P != Y.P || X.Q != Y.Q || X.total != Y.total) throw Error(ErrorKind::Invalid, "bisimplicial shapes differ");
  BiSet Z(X.P, X.Q, X.total);
  for (auto [p, q] : Z.nodes()) {
    for (auto& a : X.ids[p][q])
      for (auto& b : Y.ids[p][q]) Z.ids[p][q].push_back("(" + a + "|" + b + ")");
    auto pair = [&](const std::vector<Index>& fx, const std::vector<Index>& fy, std::size_t ny, std::vector<Index>& out) {
      out.clear();
      for (Index x = 0; x < X.size(p, q); ++x)
        for (Index y = 0; y < Y.size(p, q); ++y) out.push_back(fx[x] * ny + fy[y]);
    };
    if (p >= 1)
      for (std::size_t i = 0; i <= p; ++i) pair(X.hface[p][q][i], Y.hface[p][q][i], Y.size(p - 1, q), Z.hface[p][q][i]);
    if (q >= 1)
      for (std::size_t i = 0; i <= q; ++i) pair(X.vface[p][q][i], Y.vface[p][q][i], Y.size(p, q - 1), Z.vface[p][q][i]);
    if (Z.in_shape(p + 1, q))
      for (std::size_t j = 0; j <= p; ++j) pair(X.hdegen[p][q][j], Y.hdegen[p][q][j], Y.size(p + 1, q), Z.hdegen[p][q][j]);
    if (Z.in_shape(p, q + 1))
      for (std::size_t j = 0; j <= q; ++j) pair(X.vdegen[p][q][j], Y.vdegen[p][q][j], Y.size(p, q + 1), Z.vdegen[p][q][j]);
  }
  return Z;
}

using BiMask = std::vector<std::vector<std::vector<bool>>>;

/// Degeneracies of the single (0,0) element of a Segal pre-monoid.
inline BiMask base_point_mask(const BiSet& X) {
  if (X.size(0, 0) != 1) throw Error(ErrorKind::Invalid, "X_{0,0} is not a point");
  BiMask m(X.P + 1, std::vector<std::vector<bool>>(X.Q + 1));
  for (auto [p, q] : X.nodes()) {
    m[p][q].assign(X.size(p, q), false);
    Index x = 0;
    for (std::size_t a = 0; a < q; ++a) x = X.vdegen[0][a][0][x];
    for (std::size_t a = 0; a < p; ++a) x = X.hdegen[a][q][0][x];
    m[p][q][x] = true;
  }
  return m;
}

/// Nodewise product mask (an empty factor mask means "all").
inline BiMask product_mask(const BiSet& X, const BiMask& mx, const BiSet& Y, const BiMask& my) {
  BiMask m(X.P + 1, std::vector<std::vector<bool>>(X.Q + 1));
  for (auto [p, q] : X.nodes())
    for (Index x = 0; x < X.size(p, q); ++x)
      for (Index y = 0; y < Y.size(p, q); ++y)
        m[p][q].push_back((mx.empty() || mx[p][q][x]) && (my.empty() || my[p][q][y]));
  return m;
}

/// Collapses a sub-bisimplicial set to one element per node (named by its least id).
inline BiSet quotient(const BiSet& X, const BiMask& mask, std::vector<SMap>* projection = nullptr) {
  BiSet Z(X.P, X.Q, X.total);
  std::vector<std::vector<std::vector<Index>>> cls(X.P + 1, std::vector<std::vector<Index>>(X.Q + 1));
  for (auto [p, q] : Z.nodes()) {
    std::optional<Index> collapsed;
    auto& c = cls[p][q];
    c.assign(X.size(p, q), 0);
    for (Index x = 0; x < X.size(p, q); ++x) {
      if (mask[p][q][x]) {
        if (!collapsed) {
          collapsed = Z.ids[p][q].size();
          Z.ids[p][q].push_back(X.ids[p][q][x]);
        } else if (X.ids[p][q][x] < Z.ids[p][q][*collapsed]) {
          Z.ids[p][q][*collapsed] = X.ids[p][q][x];
        }
        c[x] = *collapsed;
      } else {
        c[x] = Z.ids[p][q].size();
        Z.ids[p][q].push_back(X.ids[p][q][x]);
      }
    }
  }
  auto push = [&](const std::vector<Index>& f, const std::vector<Index>& from, const std::vector<Index>& to, std::size_t n,
                  std::vector<Index>& out) {
    out.assign(n, 0);
    for (Index x = 0; x < f.size(); ++x) out[from[x]] = to[f[x]];
  };
  for (auto [p, q] : Z.nodes()) {
    const std::size_t n = Z.size(p, q);
    if (p >= 1)
      for (std::size_t i = 0; i <= p; ++i) push(X.hface[p][q][i], cls[p][q], cls[p - 1][q], n, Z.hface[p][q][i]);
    if (q >= 1)
      for (std::size_t i = 0; i <= q; ++i) push(X.vface[p][q][i], cls[p][q], cls[p][q - 1], n, Z.vface[p][q][i]);
    if (Z.in_shape(p + 1, q))
      for (std::size_t j = 0; j <= p; ++j) push(X.hdegen[p][q][j], cls[p][q], cls[p + 1][q], n, Z.hdegen[p][q][j]);
    if (Z.in_shape(p, q + 1))
      for (std::size_t j = 0; j <= q; ++j) push(X.vdegen[p][q][j], cls[p][q], cls[p][q + 1], n, Z.vdegen[p][q][j]);
  }
  if (projection) {
    projection->assign(X.P + 1, SMap(X.Q + 1));
    for (auto [p, q] : Z.nodes()) (*projection)[p][q] = cls[p][q];
  }
  return Z;
}

/// Presheaf view over the nodes of the shape, for map enumeration.
inline PresheafView view_of(const BiSet& X) {
  PresheafView v;
  auto nodes = X.nodes();
  std::vector<std::vector<std::size_t>> pos(X.P + 1, std::vector<std::size_t>(X.Q + 1, 0));
  for (std::size_t n = 0; n < nodes.size(); ++n) pos[nodes[n].first][nodes[n].second] = n;
  for (auto [p, q] : nodes) v.sizes.push_back(X.size(p, q));
  for (auto [p, q] : nodes) {
    const std::size_t at = pos[p][q];
    if (p >= 1)
      for (auto& m : X.hface[p][q]) v.arrows.push_back({at, pos[p - 1][q], false, &m});
    if (q >= 1)
      for (auto& m : X.vface[p][q]) v.arrows.push_back({at, pos[p][q - 1], false, &m});
    if (X.in_shape(p + 1, q))
      for (auto& m : X.hdegen[p][q]) v.arrows.push_back({at, pos[p + 1][q], true, &m});
    if (X.in_shape(p, q + 1))
      for (auto& m : X.vdegen[p][q]) v.arrows.push_back({at, pos[p][q + 1], true, &m});
  }
  return v;
}

/// All bisimplicial maps X -> Y on a common shape; maps are indexed by nodes().
inline std::vector<SMap> hom_biset(const BiSet& X, const BiSet& Y, Budget* budget = nullptr) {
  if (X.P != Y.P || X.Q != Y.Q || X.total != Y.total) throw Error(ErrorKind::Invalid, "bisimplicial shapes differ");
  std::vector<SMap> out;
  HomOptions opt;
  opt.budget = budget;
  enumerate_homs(view_of(X), view_of(Y), [&](const SMap& f) {
    out.push_back(f);
    return true;
  }, opt);
  return out;
}

/// Restriction of a map given on the nodes of `big` to the nodes of `small`.
inline SMap restrict_map(const BiSet& big, const BiSet& small, const SMap& f) {
  auto bn = big.nodes();
  SMap g;
  for (auto node : small.nodes()) {
    auto it = std::find(bn.begin(), bn.end(), node);
    g.push_back(f[static_cast<std::size_t>(it - bn.begin())]);
  }
  return g;
}

struct RestrictionReport {
  std::size_t full_count = 0;
  std::size_t truncated_count = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/// Compares maps X -> Y with maps of their p+q <= total truncations.
inline RestrictionReport restriction_to_total(const BiSet& X, const BiSet& Y, std::size_t total, Budget* budget = nullptr) {
  RestrictionReport r;
  auto full = hom_biset(X, Y, budget);
  BiSet Xt = restrict_shape(X, std::min(X.P, total), std::min(X.Q, total), total);
  BiSet Yt = restrict_shape(Y, std::min(Y.P, total), std::min(Y.Q, total), total);
  auto trunc = hom_biset(Xt, Yt, budget);
  r.full_count = full.size();
  r.truncated_count = trunc.size();
  std::set<SMap> image;
  for (auto& f : full) image.insert(restrict_map(X, Xt, f));
  std::set<SMap> all(trunc.begin(), trunc.end());
  r.injective = image.size() == full.size();
  r.surjective = image == all;
  return r;
}

struct FibrancyReport {
  std::size_t n = 2;
  bool cond_i = true, cond_ii = true, cond_iii = true, cond_iv = true;
  std::vector<std::string> violations;
  std::vector<std::string> checked;
  bool ok() const { return cond_i && cond_ii && cond_iii && cond_iv; }
};

namespace detail {

/// H_p = horn tuples of X_{p,.} at (m, k), a simplicial set in p with the
/// horizontal operators applied componentwise.
inline SSet horn_column(const BiSet& X, std::size_t top_p, std::size_t m, std::size_t k) {
  SSet H(top_p);
  std::vector<std::unordered_map<Tuple, Index, TupleHash>> where(top_p + 1);
  std::vector<std::vector<Tuple>> tuples(top_p + 1);
  for (std::size_t p = 0; p <= top_p; ++p) {
    tuples[p] = horn_tuples(vertical_slice(X, p), m, k);
    for (Index a = 0; a < tuples[p].size(); ++a) {
      where[p].emplace(tuples[p][a], a);
      std::vector<std::string> parts;
      for (Index y : tuples[p][a]) parts.push_back(X.ids[p][m][y]);
      H.ids[p].push_back("<" + join(parts, ",") + ">");
    }
  }
  auto apply = [&](const Tuple& t, const std::vector<Index>& op, std::size_t p2) {
    Tuple u(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) u[c] = op[t[c]];
    auto it = where[p2].find(u);
    if (it == where[p2].end()) throw Error(ErrorKind::Invalid, "horizontal operator does not preserve horns");
    return it->second;
  };
  for (std::size_t p = 1; p <= top_p; ++p)
    for (std::size_t i = 0; i <= p; ++i)
      for (auto& t : tuples[p]) H.face[p][i].push_back(apply(t, X.hface[p][m][i], p - 1));
  for (std::size_t p = 0; p < top_p; ++p)
    for (std::size_t j = 0; j <= p; ++j)
      for (auto& t : tuples[p]) H.degen[p][j].push_back(apply(t, X.hdegen[p][m][j], p + 1));
  H.reindex();
  return H;
}

}  // namespace detail

/// Conditions (i)-(iv) for fibrancy with n = 2, checked on the available shape.
///
/// (i) faces and degeneracies between the rows X_{p,.} induce isomorphisms on
/// pi_0, pi_1 and pi_2; (ii) rows are 2-Kan groupoids in the checked range;
/// (iii) and (iv) are the relative horn conditions for p <= 2 and q = 2.
inline FibrancyReport segal_fibrancy_check(const BiSet& X, std::size_t n = 2, Budget* budget = nullptr) {
  FibrancyReport r;
  r.n = n;
  auto bad = [&](bool& flag, std::string s) {
    flag = false;
    r.violations.push_back(std::move(s));
  };
  std::size_t top_p = 0;
  while (X.in_shape(top_p + 1, 0)) ++top_p;
  std::vector<SSet> rows;
  for (std::size_t p = 0; p <= top_p; ++p) rows.push_back(vertical_slice(X, p));

  // (i)
  auto pis = [&](const SSet& S, Index v) {
    std::vector<HomotopyGroup> out;
    for (std::size_t m = 0; m <= n && m + 1 <= S.dim; ++m) out.push_back(pi_from_levels(S, m, v));
    return out;
  };
  std::vector<std::vector<std::vector<HomotopyGroup>>> cache(rows.size());
  for (std::size_t p = 0; p < rows.size(); ++p) {
    cache[p].resize(rows[p].size(0));
    for (Index v = 0; v < rows[p].size(0); ++v) {
      cache[p][v] = pis(rows[p], v);
      for (auto& h : cache[p][v])
        if (!h.ok()) bad(r.cond_i, "(i): pi_" + std::to_string(h.m) + " of row " + std::to_string(p) + " is not a group");
    }
  }
  auto compare = [&](std::size_t from, std::size_t to, auto op, const std::string& what) {
    const SSet& A = rows[from];
    const SSet& B = rows[to];
    const std::size_t top = std::min(A.dim, B.dim);
    SMap f(top + 1);
    for (std::size_t q = 0; q <= top; ++q) {
      f[q].resize(A.size(q));
      for (Index x = 0; x < A.size(q); ++x) f[q][x] = op(q, x);
    }
    for (Index v = 0; v < A.size(0); ++v) {
      const auto& src = cache[from][v];
      const auto& dst = cache[to][f[0][v]];
      for (std::size_t m = 0; m < std::min(src.size(), dst.size()); ++m) {
        auto g = induced_on_pi(src[m], dst[m], f[m]);
        bool iso = g && (m == 0 ? src[m].order() == dst[m].order() &&
                                      std::set<Index>(g->begin(), g->end()).size() == g->size()
                                : src[m].group && dst[m].group && is_group_isomorphism(*src[m].group, *dst[m].group, *g));
        if (!iso) bad(r.cond_i, "(i): " + what + " is not an isomorphism on pi_" + std::to_string(m));
      }
    }
  };
  for (std::size_t p = 1; p < rows.size(); ++p)
    for (std::size_t i = 0; i <= p; ++i)
      compare(p, p - 1, [&](std::size_t q, Index x) { return X.hface[p][q][i][x]; },
              "d" + std::to_string(i) + " from row " + std::to_string(p));
  for (std::size_t p = 0; p + 1 < rows.size(); ++p)
    for (std::size_t j = 0; j <= p; ++j) {
      std::size_t top = std::min(rows[p].dim, rows[p + 1].dim);
      bool fits = true;
      for (std::size_t q = 0; q <= top; ++q) fits = fits && X.in_shape(p + 1, q);
      if (fits)
        compare(p, p + 1, [&](std::size_t q, Index x) { return X.hdegen[p][q][j][x]; },
                "s" + std::to_string(j) + " from row " + std::to_string(p));
    }
  r.checked.push_back("(i) rows 0.." + std::to_string(top_p) + ", pi_0..pi_" + std::to_string(n));

  // (ii)
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = 2; q <= rows[p].dim; ++q)
      for (std::size_t k = 0; k <= q; ++k) {
        auto h = horn_status(rows[p], q - 1, k, budget);
        if (!h.surjective) bad(r.cond_ii, "(ii): row " + std::to_string(p) + " has an unfilled horn at q=" + std::to_string(q));
        if (q >= n + 1 && !h.injective)
          bad(r.cond_ii, "(ii): row " + std::to_string(p) + " has non-unique fillers at q=" + std::to_string(q));
      }
  r.checked.push_back("(ii) rows 0.." + std::to_string(top_p));

  // (iii) and (iv) at q = 2 .. n
  for (std::size_t q = 2; q <= n; ++q) {
    std::size_t pmax = 0;
    while (pmax + 1 <= n && X.in_shape(pmax + 1, q)) ++pmax;
    if (pmax == 0) continue;
    SSet C = horizontal_slice(X, q);
    for (std::size_t k = 0; k <= q; ++k) {
      SSet H = detail::horn_column(X, pmax, q - 1, k);
      // componentwise horn of an element of X_{p,q}
      std::vector<std::unordered_map<Tuple, Index, TupleHash>> hwhere(pmax + 1);
      for (std::size_t p = 0; p <= pmax; ++p) {
        auto tuples = horn_tuples(rows[p], q - 1, k);
        for (Index a = 0; a < tuples.size(); ++a) hwhere[p].emplace(tuples[a], a);
      }
      auto hornx = [&](std::size_t p, Index x) { return hwhere[p].at(horn_of(rows[p], q - 1, k, x)); };
      for (std::size_t p = 2; p <= pmax; ++p) {
        std::set<Tuple> image;
        for (auto& b : boundary_tuples(C, p - 1, budget)) {
          Tuple t(b.size());
          for (std::size_t c = 0; c < b.size(); ++c) t[c] = hornx(p - 1, b[c]);
          image.insert(t);
        }
        for (auto& h : boundary_tuples(H, p - 1, budget))
          if (!image.count(h)) {
            bad(r.cond_iii, "(iii): p=" + std::to_string(p) + " q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                " has an unextended family");
            break;
          }
      }
      for (std::size_t p = 1; p <= pmax; ++p) {
        std::set<std::pair<Tuple, Index>> image;
        for (Index x = 0; x < X.size(p, q); ++x) image.insert({boundary_of(C, p - 1, x), hornx(p, x)});
        std::unordered_map<Tuple, std::vector<Index>, TupleHash> by_hb;
        for (Index h = 0; h < H.size(p); ++h) by_hb[boundary_of(H, p - 1, h)].push_back(h);
        bool surj = true;
        for (auto& b : boundary_tuples(C, p - 1, budget)) {
          Tuple hb(b.size());
          for (std::size_t c = 0; c < b.size(); ++c) hb[c] = hornx(p - 1, b[c]);
          auto it = by_hb.find(hb);
          if (it == by_hb.end()) continue;
          for (Index h : it->second)
            if (!image.count({b, h})) surj = false;
        }
        if (!surj)
          bad(r.cond_iv, "(iv): p=" + std::to_string(p) + " q=" + std::to_string(q) + " k=" + std::to_string(k) +
                             " has an unfilled pair");
      }
    }
    r.checked.push_back("(iii),(iv) at q=" + std::to_string(q) + ", p<=" + std::to_string(pmax));
  }
  return r;
}

}  // namespace kanforge
