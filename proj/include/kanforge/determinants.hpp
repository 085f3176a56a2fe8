#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "kanforge/bisimplicial.hpp"
#include "kanforge/constructions.hpp"
#include "kanforge/nerve.hpp"

namespace kanforge {

namespace detail {

inline void require_reduced(const SSet& X, std::size_t min_dim) {
  if (X.size(0) != 1) throw Error(ErrorKind::Invalid, "simplicial set is not reduced");
  if (X.dim < min_dim) throw Error(ErrorKind::DimensionOutOfRange, "needs level " + std::to_string(min_dim));
}

/// Constraint lists keyed by the largest variable they read, so a
/// depth-first assignment can test each one as soon as it is decidable.
inline std::vector<std::vector<Index>> by_last(std::size_t vars, std::size_t constraints,
                                               const std::function<Index(Index)>& last) {
  std::vector<std::vector<Index>> at(vars);
  for (Index c = 0; c < constraints; ++c) at[last(c)].push_back(c);
  return at;
}

inline Index max_face(const SSet& X, std::size_t k, Index x) {
  Index m = 0;
  for (std::size_t i = 0; i <= k; ++i) m = std::max(m, X.d(k, i, x));
  return m;
}

/// Vertices of each k-simplex of Delta^n, in standard_simplex order.
inline std::vector<std::vector<Seq>> simplex_seqs(std::size_t n, std::size_t dim) {
  std::vector<std::vector<Seq>> out(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) {
    Seq cur;
    nondecreasing(k + 1, n, cur, out[k]);
  }
  return out;
}

}  // namespace detail

/// Checks that a correspondence between two finite families is a bijection.
struct BijectionReport {
  std::size_t count = 0;
  std::size_t oracle_count = 0;
  bool into = false;
  bool injective = false;
  bool surjective = false;
  bool verified() const noexcept { return into && injective && surjective && count == oracle_count; }
};

// ---------------------------------------------------------------- additive

/// D: X_1 -> H with D(s_0 *) = e and D(d_1 a) = D(d_2 a) D(d_0 a).
inline std::vector<std::vector<Index>> enumerate_additive(const SSet& X, const FiniteGroup& H, Budget* budget = nullptr) {
  detail::require_reduced(X, 2);
  Budget local;
  Budget& b = budget ? *budget : local;
  const Index e1 = X.s(0, 0, 0);
  auto at = detail::by_last(X.size(1), X.size(2), [&](Index a) { return detail::max_face(X, 2, a); });
  std::vector<std::vector<Index>> out;
  std::vector<Index> D(X.size(1));
  std::function<void(Index)> rec = [&](Index i) {
    if (i == D.size()) {
      out.push_back(D);
      return;
    }
    for (Index v = 0; v < H.size(); ++v) {
      if (i == e1 && v != H.identity) continue;
      b.charge();
      D[i] = v;
      bool ok = true;
      for (Index a : at[i])
        if (H.op(D[X.d(2, 2, a)], D[X.d(2, 0, a)]) != D[X.d(2, 1, a)]) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// f |-> f_1 from maps X -> N(H) onto the additive functions.
inline BijectionReport additive_bijection(const SSet& X, const FiniteGroup& H, Budget* budget = nullptr) {
  auto adds = enumerate_additive(X, H, budget);
  auto maps = hom_sset(X, nerve_group(H, std::max<std::size_t>(X.dim, 2)), budget);
  std::set<std::vector<Index>> all(adds.begin(), adds.end()), image;
  BijectionReport r;
  r.count = adds.size();
  r.oracle_count = maps.size();
  r.into = true;
  for (auto& f : maps) {
    if (!all.count(f[1])) r.into = false;
    image.insert(f[1]);
  }
  r.injective = image.size() == maps.size();
  r.surjective = r.into && image.size() == all.size();
  return r;
}

// ------------------------------------------------------------ determinants

struct Determinant {
  std::vector<Index> D;  // X_1 -> objects
  std::vector<Index> T;  // X_2 -> morphisms
  auto operator<=>(const Determinant&) const = default;
};

namespace detail {

/// T(d_1 e) (T(d_3 e) (x) D A23) = T(d_2 e) (D A01 (x) T(d_0 e)) a.
inline bool det_pentagon(const MonoidalCategory& M, const SSet& X, const std::vector<Index>& D, const std::vector<Index>& T,
                         Index eta) {
  const Index f0 = X.d(3, 0, eta), f1 = X.d(3, 1, eta), f2 = X.d(3, 2, eta), f3 = X.d(3, 3, eta);
  const Index a01 = D[X.d(2, 2, f2)], a12 = D[X.d(2, 2, f0)], a23 = D[X.d(2, 0, f0)];
  Index lhs = M.comp(T[f1], M.tm(T[f3], M.id(a23)));
  Index rhs = M.comp(T[f2], M.tm(M.id(a01), T[f0]), M.a(a01, a12, a23));
  return lhs == rhs;
}

inline Index unit_triangle(const MonoidalCategory& M) {
  Index l = M.inv(M.l(M.unit)), r = M.inv(M.r(M.unit));
  if (l != r) throw Error(ErrorKind::Invalid, "l_1 != r_1: the structure is not coherent");
  return l;
}

}  // namespace detail

/// All (D, T): D fixed first with the unit forced, then T per 2-simplex from
/// its hom-set, with each 3-simplex checked once its faces are assigned.
inline std::vector<Determinant> enumerate_determinants(const SSet& X0, const TwoGroup& G, Budget* budget = nullptr) {
  SSet X = detail::with_levels(X0, 3);
  detail::require_reduced(X, 3);
  const MonoidalCategory& M = G.M;
  Budget local;
  Budget& b = budget ? *budget : local;
  const Index e1 = X.s(0, 0, 0), e2 = X.s(1, 0, e1);
  const Index l1inv = detail::unit_triangle(M);
  auto tri_at = detail::by_last(X.size(1), X.size(2), [&](Index a) { return detail::max_face(X, 2, a); });
  auto tet_at = detail::by_last(X.size(2), X.size(3), [&](Index e) { return detail::max_face(X, 3, e); });

  std::vector<Determinant> out;
  Determinant d;
  d.D.assign(X.size(1), 0);
  d.T.assign(X.size(2), 0);
  auto hom_of = [&](Index xi) -> const std::vector<Index>& {
    return M.C.hom(M.t(d.D[X.d(2, 2, xi)], d.D[X.d(2, 0, xi)]), d.D[X.d(2, 1, xi)]);
  };
  std::function<void(Index)> rec_t = [&](Index xi) {
    if (xi == d.T.size()) {
      out.push_back(d);
      return;
    }
    for (Index f : hom_of(xi)) {
      if (xi == e2 && f != l1inv) continue;
      b.charge();
      d.T[xi] = f;
      bool ok = true;
      for (Index eta : tet_at[xi])
        if (!detail::det_pentagon(M, X, d.D, d.T, eta)) {
          ok = false;
          break;
        }
      if (ok) rec_t(xi + 1);
    }
  };
  std::function<void(Index)> rec_d = [&](Index a) {
    if (a == d.D.size()) {
      rec_t(0);
      return;
    }
    for (Index x = 0; x < M.num_objects(); ++x) {
      if (a == e1 && x != M.unit) continue;
      b.charge();
      d.D[a] = x;
      bool ok = true;
      for (Index xi : tri_at[a])
        if (hom_of(xi).empty()) {
          ok = false;
          break;
        }
      if (ok) rec_d(a + 1);
    }
  };
  rec_d(0);
  return out;
}

/// The pair (f_1, f_2) of a map X -> N(G), read as (D, T).
inline Determinant determinant_of_map(const TwoGroupNerve& N, const SMap& f) {
  Determinant d;
  for (Index y : f[1]) d.D.push_back(N.data[1][y][0]);
  for (Index y : f[2]) d.T.push_back(N.data[2][y][3]);
  return d;
}

inline BijectionReport determinant_bijection(const SSet& X0, const TwoGroup& G, Budget* budget = nullptr) {
  SSet X = detail::with_levels(X0, 3);
  auto dets = enumerate_determinants(X, G, budget);
  auto N = nerve_2group(G, std::max<std::size_t>(X.dim, 3), budget);
  auto maps = hom_sset(X, N.X, budget);
  std::set<Determinant> all(dets.begin(), dets.end()), image;
  BijectionReport r;
  r.count = dets.size();
  r.oracle_count = maps.size();
  r.into = true;
  for (auto& f : maps) {
    auto d = determinant_of_map(N, f);
    if (!all.count(d)) r.into = false;
    image.insert(std::move(d));
  }
  r.injective = image.size() == maps.size();
  r.surjective = r.into && image.size() == all.size();
  return r;
}

/// H: X_1 -> morphisms with H(A): D(A) -> D'(A), H(s_0 *) = id and
/// H(d_1 x) T(x) = T'(x) (H(d_2 x) (x) H(d_0 x)) on every 2-simplex.
inline std::vector<std::vector<Index>> det_morphisms(const SSet& X0, const TwoGroup& G, const Determinant& d,
                                                     const Determinant& d2, std::size_t limit = SIZE_MAX,
                                                     Budget* budget = nullptr) {
  SSet X = detail::with_levels(X0, 3);
  detail::require_reduced(X, 2);
  const MonoidalCategory& M = G.M;
  Budget local;
  Budget& b = budget ? *budget : local;
  const Index e1 = X.s(0, 0, 0);
  auto tri_at = detail::by_last(X.size(1), X.size(2), [&](Index a) { return detail::max_face(X, 2, a); });
  std::vector<std::vector<Index>> out;
  std::vector<Index> H(X.size(1));
  std::function<void(Index)> rec = [&](Index a) {
    if (out.size() >= limit) return;
    if (a == H.size()) {
      out.push_back(H);
      return;
    }
    for (Index h : M.C.hom(d.D[a], d2.D[a])) {
      if (a == e1 && h != M.id(M.unit)) continue;
      b.charge();
      H[a] = h;
      bool ok = true;
      for (Index xi : tri_at[a]) {
        Index lhs = M.comp(H[X.d(2, 1, xi)], d.T[xi]);
        Index rhs = M.comp(d2.T[xi], M.tm(H[X.d(2, 2, xi)], H[X.d(2, 0, xi)]));
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) rec(a + 1);
    }
  };
  rec(0);
  return out;
}

struct Pi0Report {
  std::size_t count = 0;             // objects
  std::vector<Index> class_of;       // object -> least member of its class
  std::size_t classes = 0;
  bool symmetric = true;             // a morphism one way implies one back
  bool reflexive = true;
};

namespace detail {

inline Pi0Report pi0_from_relation(std::size_t n, const std::function<bool(Index, Index)>& related) {
  Pi0Report r;
  r.count = n;
  UnionFind uf(n);
  for (Index i = 0; i < n; ++i) {
    if (!related(i, i)) r.reflexive = false;
    for (Index j = i + 1; j < n; ++j) {
      bool ij = related(i, j), ji = related(j, i);
      if (ij != ji) r.symmetric = false;
      if (ij || ji) uf.unite(i, j);
    }
  }
  std::set<Index> roots;
  for (Index i = 0; i < n; ++i) {
    r.class_of.push_back(uf.find(i));
    roots.insert(r.class_of.back());
  }
  r.classes = roots.size();
  return r;
}

}  // namespace detail

/// Classes of determinants under "there is a morphism"; symmetry is checked.
inline Pi0Report pi0_det(const SSet& X, const TwoGroup& G, const std::vector<Determinant>& dets, Budget* budget = nullptr) {
  return detail::pi0_from_relation(dets.size(), [&](Index i, Index j) {
    return !det_morphisms(X, G, dets[i], dets[j], 1, budget).empty();
  });
}

// ------------------------------------------------------------ enriched hom

/// Hom(X, Y) with level n the maps (X x Delta^n)/(* x Delta^n) -> Y.
struct EnrichedHom {
  SSet H;
  std::vector<SSet> sources;
  std::vector<std::vector<SMap>> maps;
  SMap include0;  // X -> sources[0]
};

namespace detail {

/// Cylinder-like quotient (X x Delta^n)/(* x Delta^n) with its projection.
struct PointedCylinder {
  SSet Q;
  SMap cls;
  SMap rep;  // quotient element -> some product element
  std::vector<std::vector<Seq>> seqs;
  std::vector<std::map<Seq, Index>> where;
  std::size_t n = 0;
};

inline PointedCylinder pointed_cylinder(const SSet& X, std::size_t n) {
  PointedCylinder c;
  c.n = n;
  SSet D = standard_simplex(n, X.dim);
  SSet P = product(X, D);
  c.Q = quotient(P, product_mask(X, point_mask(X, X.base_point()), D, {}), &c.cls);
  c.seqs = simplex_seqs(n, X.dim);
  c.where.resize(X.dim + 1);
  for (std::size_t k = 0; k <= X.dim; ++k)
    for (Index y = 0; y < c.seqs[k].size(); ++y) c.where[k][c.seqs[k][y]] = y;
  c.rep.resize(X.dim + 1);
  for (std::size_t k = 0; k <= X.dim; ++k) {
    c.rep[k].assign(c.Q.size(k), hole);
    for (Index z = 0; z < c.cls[k].size(); ++z)
      if (c.rep[k][c.cls[k][z]] == hole) c.rep[k][c.cls[k][z]] = z;
  }
  return c;
}

/// Q_m -> Q_n induced by a monotone phi: [m] -> [n].
inline SMap cylinder_map(const PointedCylinder& from, const PointedCylinder& to, const std::vector<std::size_t>& phi,
                         std::size_t levels) {
  SMap f(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const std::size_t nf = from.seqs[k].size(), nt = to.seqs[k].size();
    for (Index z = 0; z < from.Q.size(k); ++z) {
      Index prod = from.rep[k][z];
      Index x = prod / nf, y = prod % nf;
      Seq s = from.seqs[k][y];
      for (auto& v : s) v = phi[v];
      f[k].push_back(to.cls[k][x * nt + to.where[k].at(s)]);
    }
  }
  return f;
}

/// Assembles a simplicial set from per-level map lists and structural maps.
template <class Compose>
inline SSet assemble_hom(const std::vector<std::vector<SMap>>& maps, std::size_t n_max, Compose&& restrict_along) {
  SSet H(n_max);
  std::vector<std::map<SMap, Index>> where(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    for (Index i = 0; i < maps[n].size(); ++i) {
      where[n].emplace(maps[n][i], i);
      H.ids[n].push_back("h" + std::to_string(n) + "." + std::to_string(i));
    }
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      for (auto& f : maps[n]) H.face[n][i].push_back(where[n - 1].at(restrict_along(f, n, n - 1, coface(n - 1, i))));
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (auto& f : maps[n]) H.degen[n][j].push_back(where[n + 1].at(restrict_along(f, n, n + 1, codegeneracy(n, j))));
  H.reindex();
  return H;
}

}  // namespace detail

inline EnrichedHom enriched_hom0(const SSet& X, const SSet& Y, std::size_t n_max, Budget* budget = nullptr) {
  detail::require_reduced(X, 1);
  EnrichedHom E;
  std::vector<detail::PointedCylinder> cyl;
  for (std::size_t n = 0; n <= n_max; ++n) {
    cyl.push_back(detail::pointed_cylinder(X, n));
    E.sources.push_back(cyl.back().Q);
    E.maps.push_back(hom_sset(cyl.back().Q, Y, budget));
  }
  const std::size_t levels = E.maps[0].empty() ? hom_level(E.sources[0], Y) + 1 : E.maps[0][0].size();
  E.H = detail::assemble_hom(E.maps, n_max, [&](const SMap& f, std::size_t n, std::size_t m, const std::vector<std::size_t>& phi) {
    return compose(f, detail::cylinder_map(cyl[m], cyl[n], phi, levels));
  });
  E.include0.resize(X.dim + 1);
  for (std::size_t k = 0; k <= X.dim; ++k)
    for (Index x = 0; x < X.size(k); ++x) E.include0[k].push_back(cyl[0].cls[k][x]);
  return E;
}

/// Every horn restriction alpha^{1,k} is bijective (unique 2-dimensional fillers).
inline bool strict_in_dim1(const SSet& H, Budget* budget = nullptr) { return kan_status(H, 1, budget).strict(); }

/// All faces equal and bijective in every level.
inline bool is_constant(const SSet& X) {
  for (std::size_t k = 1; k <= X.dim; ++k) {
    if (X.size(k) != X.size(k - 1)) return false;
    for (std::size_t i = 0; i <= k; ++i) {
      if (X.face[k][i] != X.face[k][0]) return false;
      std::vector<bool> hit(X.size(k - 1), false);
      for (Index y : X.face[k][i]) hit[y] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
    }
  }
  return true;
}

/// pi_0 of the mapping object against pi0_det, through the level-0 bijection.
struct Pi0Comparison {
  Pi0Report det;
  std::size_t mapping_classes = 0;
  bool partitions_agree = false;
  bool ok() const noexcept { return partitions_agree && det.symmetric && det.reflexive; }
};

inline Pi0Comparison pi0_det_comparison(const SSet& X0, const TwoGroup& G, Budget* budget = nullptr) {
  SSet X = detail::with_levels(X0, 3);
  Pi0Comparison c;
  auto dets = enumerate_determinants(X, G, budget);
  c.det = pi0_det(X, G, dets, budget);
  auto N = nerve_2group(G, std::max<std::size_t>(X.dim, 3), budget);
  auto E = enriched_hom0(X, N.X, 1, budget);
  auto h0 = detail::pi_zero(E.H);
  c.mapping_classes = h0.order();
  std::map<Determinant, Index> pos;
  for (Index i = 0; i < dets.size(); ++i) pos[dets[i]] = i;
  if (E.maps[0].size() != dets.size()) return c;
  // same partition: classes pulled back along level 0 -> dets must match
  std::map<Index, Index> fwd, back;
  bool agree = true;
  for (Index v = 0; v < E.maps[0].size(); ++v) {
    auto it = pos.find(determinant_of_map(N, compose(E.maps[0][v], E.include0)));
    if (it == pos.end()) return c;
    Index a = h0.class_of[v], b = c.det.class_of[it->second];
    if (fwd.emplace(a, b).first->second != b || back.emplace(b, a).first->second != a) agree = false;
  }
  c.partitions_agree = agree && c.det.classes == c.mapping_classes;
  return c;
}

// ------------------------------------------------------- Segal determinants

struct SegalDeterminant {
  SMap D;                // X_{.,1} -> N(underlying groupoid), levels 0..row top
  std::vector<Index> T;  // X_{0,2} -> morphisms
  auto operator<=>(const SegalDeterminant&) const = default;
};

namespace detail {

struct SegalSetup {
  SSet row1;
  SSet target;
  Index u1 = 0, u2 = 0;  // s^v_0 *, s^v_0 s^v_0 *
};

inline SegalSetup segal_setup(const BiSet& X, const TwoGroup& G) {
  for (std::size_t p = 0; p <= X.P; ++p)
    if (X.in_shape(p, 0) && X.size(p, 0) != 1) throw Error(ErrorKind::Invalid, "row 0 is not a point");
  if (!X.in_shape(2, 1) || !X.in_shape(1, 2) || !X.in_shape(0, 3))
    throw Error(ErrorKind::DimensionOutOfRange, "Segal determinants need X_{2,1}, X_{1,2} and X_{0,3}");
  SegalSetup s;
  s.row1 = horizontal_slice(X, 1);
  s.target = nerve_category(G.M.C, s.row1.dim);
  s.u1 = X.vdegen[0][0][0][0];
  s.u2 = X.vdegen[0][1][0][s.u1];
  return s;
}

inline bool segal_naturality(const MonoidalCategory& M, const BiSet& X, const SMap& D, const std::vector<Index>& T,
                             const SMap& D2, const std::vector<Index>& T2, const std::vector<Index>& H1, Index z) {
  // H1 = D1 for a single determinant; for a morphism it is the diagonal component
  Index v0 = X.vface[1][2][0][z], v1 = X.vface[1][2][1][z], v2 = X.vface[1][2][2][z];
  Index top = X.hface[1][2][1][z], bottom = X.hface[1][2][0][z];
  (void)D;
  (void)D2;
  Index lhs = M.comp(H1[v1], T[top]);
  Index rhs = M.comp(T2[bottom], M.tm(H1[v2], H1[v0]));
  return lhs == rhs;
}

inline bool segal_pentagon(const MonoidalCategory& M, const BiSet& X, const std::vector<Index>& D0, const std::vector<Index>& T,
                           Index eta) {
  const auto& vf3 = X.vface[0][3];
  const auto& vf2 = X.vface[0][2];
  const Index f0 = vf3[0][eta], f1 = vf3[1][eta], f2 = vf3[2][eta], f3 = vf3[3][eta];
  const Index a01 = D0[vf2[2][f2]], a12 = D0[vf2[2][f0]], a23 = D0[vf2[0][f0]];
  Index lhs = M.comp(T[f1], M.tm(T[f3], M.id(a23)));
  Index rhs = M.comp(T[f2], M.tm(M.id(a01), T[f0]), M.a(a01, a12, a23));
  return lhs == rhs;
}

}  // namespace detail

/// All (D, T): D ranges over simplicial maps X_{.,1} -> N(G), then T is
/// solved on X_{0,2} with naturality (X_{1,2}) and associativity (X_{0,3})
/// checked as soon as their T-values are known.
inline std::vector<SegalDeterminant> enumerate_segal_determinants(const BiSet& X, const TwoGroup& G, Budget* budget = nullptr) {
  const MonoidalCategory& M = G.M;
  auto s = detail::segal_setup(X, G);
  Budget local;
  Budget& b = budget ? *budget : local;
  const Index l1inv = detail::unit_triangle(M);
  const std::size_t n2 = X.size(0, 2);
  std::vector<std::vector<Index>> nat_at(n2), tet_at(n2);
  for (Index z = 0; z < X.size(1, 2); ++z)
    nat_at[std::max(X.hface[1][2][0][z], X.hface[1][2][1][z])].push_back(z);
  for (Index e = 0; e < X.size(0, 3); ++e) {
    Index m = 0;
    for (std::size_t i = 0; i <= 3; ++i) m = std::max(m, X.vface[0][3][i][e]);
    tet_at[m].push_back(e);
  }
  std::vector<SegalDeterminant> out;
  for (auto& D : hom_sset(s.row1, s.target, budget)) {
    if (D[0][s.u1] != M.unit) continue;
    const auto& D0 = D[0];
    const auto& D1 = D[1];
    SegalDeterminant d;
    d.D = D;
    d.T.assign(n2, 0);
    std::function<void(Index)> rec = [&](Index xi) {
      if (xi == n2) {
        out.push_back(d);
        return;
      }
      Index from = M.t(D0[X.vface[0][2][2][xi]], D0[X.vface[0][2][0][xi]]);
      for (Index f : M.C.hom(from, D0[X.vface[0][2][1][xi]])) {
        if (xi == s.u2 && f != l1inv) continue;
        b.charge();
        d.T[xi] = f;
        bool ok = true;
        for (Index z : nat_at[xi])
          if (!detail::segal_naturality(M, X, D, d.T, D, d.T, D1, z)) {
            ok = false;
            break;
          }
        if (ok)
          for (Index e : tet_at[xi])
            if (!detail::segal_pentagon(M, X, D0, d.T, e)) {
              ok = false;
              break;
            }
        if (ok) rec(xi + 1);
      }
    };
    rec(0);
  }
  return out;
}

namespace detail {

/// Edge a (from vertex a-1 to a) of a p-simplex.
inline Index edge_of(const SSet& S, std::size_t p, Index y, std::size_t a) {
  for (std::size_t k = p; k > a; --k) y = S.d(k, k, y);
  for (std::size_t k = a; k > 1; --k) y = S.d(k, 0, y);
  return y;
}

/// N_S(G)_{.,1} -> N(underlying groupoid), matched through ids.
inline SMap segal_row1_iso(const BiSet& Y, const TwoGroup& G, const SSet& target) {
  auto N = nerve_2group(G, 1);
  auto S1 = simplex_groupoid(G, N, 1);
  SSet row = horizontal_slice(Y, 1);
  SMap iso(target.dim + 1);
  for (Index x = 0; x < row.size(0); ++x) iso[0].push_back(target.at(0, G.M.C.objects[N.data[1][x][0]]));
  for (std::size_t p = 1; p <= target.dim; ++p)
    for (Index y = 0; y < row.size(p); ++y) {
      std::vector<std::string> names;
      for (std::size_t a = 1; a <= p; ++a) {
        Index e = p == 1 ? y : edge_of(row, p, y, a);
        names.push_back(G.M.C.morphisms[S1.family[e][0]]);
      }
      iso[p].push_back(target.at(p, join(names, ",")));
    }
  return iso;
}

inline std::size_t node_index(const BiSet& X, std::size_t p, std::size_t q) {
  auto nodes = X.nodes();
  return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), std::make_pair(p, q)) - nodes.begin());
}

}  // namespace detail

/// F |-> (F_{.,1}, morphism of F_{0,2}) against the enumerated determinants.
inline BijectionReport segal_bijection(const BiSet& X, const TwoGroup& G, Budget* budget = nullptr) {
  auto dets = enumerate_segal_determinants(X, G, budget);
  auto s = detail::segal_setup(X, G);
  BiSet Y = segal_nerve(G, X.P, X.Q, X.total, budget);
  auto iso = detail::segal_row1_iso(Y, G, s.target);
  auto N2 = nerve_2group(G, 2);
  auto maps = hom_biset(X, Y, budget);
  std::set<SegalDeterminant> all(dets.begin(), dets.end()), image;
  BijectionReport r;
  r.count = dets.size();
  r.oracle_count = maps.size();
  r.into = true;
  const std::size_t at02 = detail::node_index(X, 0, 2);
  for (auto& F : maps) {
    SegalDeterminant d;
    d.D.resize(s.row1.dim + 1);
    for (std::size_t p = 0; p <= s.row1.dim; ++p)
      for (Index y : F[detail::node_index(X, p, 1)]) d.D[p].push_back(iso[p][y]);
    for (Index y : F[at02]) d.T.push_back(N2.data[2][y][3]);
    if (!all.count(d)) r.into = false;
    image.insert(std::move(d));
  }
  r.injective = image.size() == maps.size();
  r.surjective = r.into && image.size() == all.size();
  return r;
}

/// Maps X -> N_S(G) on X's shape restrict bijectively to the p+q <= 3 part.
inline RestrictionReport mu3_determined(const BiSet& X, const TwoGroup& G, Budget* budget = nullptr) {
  BiSet Y = segal_nerve(G, X.P, X.Q, X.total, budget);
  return restriction_to_total(X, Y, 3, budget);
}

/// Morphisms of Segal determinants: maps H: X_{.,1} x Delta^1 -> N(G) with
/// ends D and D', pointed on the base, and natural over X_{1,2}.
struct SegalDetGroupoid {
  std::vector<SegalDeterminant> dets;
  struct Arrow {
    Index src = 0, tgt = 0;
    SMap H;
  };
  std::vector<Arrow> arrows;
  Pi0Report pi0;
};

inline SegalDetGroupoid segal_det_groupoid(const BiSet& X, const TwoGroup& G, Budget* budget = nullptr) {
  const MonoidalCategory& M = G.M;
  auto s = detail::segal_setup(X, G);
  SegalDetGroupoid out;
  out.dets = enumerate_segal_determinants(X, G, budget);
  const std::size_t top = s.row1.dim;
  SSet I = standard_simplex(1, top);
  SSet cyl = product(s.row1, I);
  auto at_vertex = [&](std::size_t k, Index x, std::size_t v) {
    return x * I.size(k) + I.at(k, std::string(k + 1, static_cast<char>('0' + v)));
  };
  std::map<SMap, std::vector<Index>> by_D;
  for (Index i = 0; i < out.dets.size(); ++i) by_D[out.dets[i].D].push_back(i);
  const Index edge01 = I.at(1, "01");
  std::set<std::pair<Index, Index>> related;
  for (auto& H : hom_sset(cyl, s.target, budget)) {
    // pointed: the base row maps to the unit
    bool pointed = true;
    Index base = s.u1;
    for (std::size_t k = 0; k <= top && pointed; ++k) {
      for (Index y = 0; y < I.size(k); ++y)
        if (H[k][base * I.size(k) + y] != degenerate_vertex(s.target, k, M.unit)) pointed = false;
      if (k < top) base = s.row1.s(k, 0, base);
    }
    if (!pointed) continue;
    SMap ends[2];
    for (std::size_t v = 0; v < 2; ++v) {
      ends[v].resize(top + 1);
      for (std::size_t k = 0; k <= top; ++k)
        for (Index x = 0; x < s.row1.size(k); ++x) ends[v][k].push_back(H[k][at_vertex(k, x, v)]);
    }
    auto a = by_D.find(ends[0]), b = by_D.find(ends[1]);
    if (a == by_D.end() || b == by_D.end()) continue;
    std::vector<Index> diag(s.row1.size(1));
    for (Index x = 0; x < diag.size(); ++x) diag[x] = H[1][x * I.size(1) + edge01];
    for (Index i : a->second)
      for (Index j : b->second) {
        bool ok = true;
        for (Index z = 0; z < X.size(1, 2) && ok; ++z)
          ok = detail::segal_naturality(M, X, out.dets[i].D, out.dets[i].T, out.dets[j].D, out.dets[j].T, diag, z);
        if (!ok) continue;
        out.arrows.push_back({i, j, H});
        related.emplace(i, j);
      }
  }
  out.pi0 = detail::pi0_from_relation(out.dets.size(), [&](Index i, Index j) { return related.count({i, j}) > 0; });
  return out;
}

/// Hom^(1)(X, Y) with level n the bisimplicial maps (X x p_1^* Delta^n)/(* x p_1^* Delta^n) -> Y.
struct SegalEnrichedHom {
  SSet H;
  std::vector<BiSet> sources;
  std::vector<std::vector<SMap>> maps;
};

namespace detail {

struct BiCylinder {
  BiSet Q;
  std::vector<SMap> cls;                                // [p][q][element]
  std::vector<SMap> rep;
  std::vector<std::vector<Seq>> seqs;                    // Delta^n simplices per p
  std::vector<std::map<Seq, Index>> where;
};

inline BiCylinder bi_cylinder(const BiSet& X, std::size_t n) {
  BiCylinder c;
  SSet D = standard_simplex(n, X.P);
  BiSet Dq = constant_in_q(D, X.Q, X.total);
  BiSet P = product(X, Dq);
  c.Q = quotient(P, product_mask(X, base_point_mask(X), Dq, {}), &c.cls);
  c.seqs = simplex_seqs(n, X.P);
  c.where.resize(X.P + 1);
  for (std::size_t p = 0; p <= X.P; ++p)
    for (Index y = 0; y < c.seqs[p].size(); ++y) c.where[p][c.seqs[p][y]] = y;
  c.rep.assign(X.P + 1, SMap(X.Q + 1));
  for (auto [p, q] : c.Q.nodes()) {
    c.rep[p][q].assign(c.Q.size(p, q), hole);
    for (Index z = 0; z < c.cls[p][q].size(); ++z)
      if (c.rep[p][q][c.cls[p][q][z]] == hole) c.rep[p][q][c.cls[p][q][z]] = z;
  }
  return c;
}

/// Node-indexed map Q_m -> Q_n induced by phi: [m] -> [n].
inline SMap bi_cylinder_map(const BiCylinder& from, const BiCylinder& to, const std::vector<std::size_t>& phi) {
  SMap f;
  for (auto [p, q] : from.Q.nodes()) {
    std::vector<Index> m;
    const std::size_t nf = from.seqs[p].size(), nt = to.seqs[p].size();
    for (Index z = 0; z < from.Q.size(p, q); ++z) {
      Index prod = from.rep[p][q][z];
      Index x = prod / nf, y = prod % nf;
      Seq sq = from.seqs[p][y];
      for (auto& v : sq) v = phi[v];
      m.push_back(to.cls[p][q][x * nt + to.where[p].at(sq)]);
    }
    f.push_back(std::move(m));
  }
  return f;
}

}  // namespace detail

inline SegalEnrichedHom segal_hom1(const BiSet& X, const TwoGroup& G, std::size_t n_max, Budget* budget = nullptr) {
  BiSet Y = segal_nerve(G, X.P, X.Q, X.total, budget);
  SegalEnrichedHom E;
  std::vector<detail::BiCylinder> cyl;
  for (std::size_t n = 0; n <= n_max; ++n) {
    cyl.push_back(detail::bi_cylinder(X, n));
    E.sources.push_back(cyl.back().Q);
    E.maps.push_back(hom_biset(cyl.back().Q, Y, budget));
  }
  E.H = detail::assemble_hom(E.maps, n_max, [&](const SMap& f, std::size_t n, std::size_t m, const std::vector<std::size_t>& phi) {
    return compose(f, detail::bi_cylinder_map(cyl[m], cyl[n], phi));
  });
  return E;
}

/// pi_0 of Hom^(1) against the classes of Segal determinants.
struct SegalPi0Comparison {
  Pi0Report det;
  std::size_t mapping_classes = 0;
  std::size_t arrows = 0;
  std::size_t level1 = 0;  // |Hom^(1)_1|, one per morphism of determinants
  bool partitions_agree = false;
  bool ok() const noexcept { return partitions_agree && det.symmetric && det.reflexive && arrows == level1; }
};

inline SegalPi0Comparison segal_pi0(const BiSet& X, const TwoGroup& G, Budget* budget = nullptr) {
  SegalPi0Comparison c;
  auto grp = segal_det_groupoid(X, G, budget);
  c.det = grp.pi0;
  c.arrows = grp.arrows.size();
  auto E = segal_hom1(X, G, 1, budget);
  c.level1 = E.maps[1].size();
  auto h0 = detail::pi_zero(E.H);
  c.mapping_classes = h0.order();
  if (E.maps[0].size() != grp.dets.size()) return c;
  // level 0 is Hom(X, N_S G); read each map as a determinant
  auto s = detail::segal_setup(X, G);
  BiSet Y = segal_nerve(G, X.P, X.Q, X.total, budget);
  auto iso = detail::segal_row1_iso(Y, G, s.target);
  auto N2 = nerve_2group(G, 2);
  std::map<SegalDeterminant, Index> pos;
  for (Index i = 0; i < grp.dets.size(); ++i) pos[grp.dets[i]] = i;
  const auto& Q0 = E.sources[0];
  auto cls0 = detail::bi_cylinder(X, 0).cls;
  std::map<Index, Index> fwd, back;
  bool agree = true;
  for (Index v = 0; v < E.maps[0].size(); ++v) {
    const SMap& F = E.maps[0][v];
    SegalDeterminant d;
    d.D.resize(s.row1.dim + 1);
    for (std::size_t p = 0; p <= s.row1.dim; ++p) {
      auto node = detail::node_index(Q0, p, 1);
      for (Index x = 0; x < X.size(p, 1); ++x) d.D[p].push_back(iso[p][F[node][cls0[p][1][x]]]);
    }
    auto node02 = detail::node_index(Q0, 0, 2);
    for (Index x = 0; x < X.size(0, 2); ++x) d.T.push_back(N2.data[2][F[node02][cls0[0][2][x]]][3]);
    auto it = pos.find(d);
    if (it == pos.end()) return c;
    Index a = h0.class_of[v], b = c.det.class_of[it->second];
    if (fwd.emplace(a, b).first->second != b || back.emplace(b, a).first->second != a) agree = false;
  }
  c.partitions_agree = agree && c.det.classes == c.mapping_classes;
  return c;
}

}  // namespace kanforge
