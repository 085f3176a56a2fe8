#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/category.hpp"

namespace kanforge {

/// Monoidal structure on a finite category with explicit coherence data.
///
/// a_{X,Y,Z}: (X Y) Z -> X (Y Z), l_X: X -> 1 X, r_X: X -> X 1.
struct MonoidalCategory {
  FinCategory C;
  std::vector<std::vector<Index>> tensor_obj;  // [X][Y]
  std::vector<std::vector<Index>> tensor_mor;  // [f][g]
  std::vector<std::vector<std::vector<Index>>> assoc;
  std::vector<Index> lunit, runit;
  Index unit = 0;

  Index t(Index X, Index Y) const { return tensor_obj[X][Y]; }
  Index tm(Index f, Index g) const { return tensor_mor[f][g]; }
  Index id(Index X) const { return C.identity[X]; }
  Index comp(Index g, Index f) const { return C.compose(g, f); }
  Index comp(Index h, Index g, Index f) const { return comp(h, comp(g, f)); }
  Index a(Index X, Index Y, Index Z) const { return assoc[X][Y][Z]; }
  Index l(Index X) const { return lunit[X]; }
  Index r(Index X) const { return runit[X]; }
  Index inv(Index f) const {
    auto g = inverse_of(C, f);
    if (!g) throw Error(ErrorKind::NotGroupoidBase, "'" + C.morphisms[f] + "' is not invertible");
    return *g;
  }
  std::size_t num_objects() const { return C.num_objects(); }
  std::size_t num_morphisms() const { return C.num_morphisms(); }
};

/// A monoidal groupoid together with inverse witnesses.
///
/// alpha[X]: X (inv_d X) -> 1 and beta[X]: (inv_g X) X -> 1; on morphisms
/// inv_d and inv_g are the functors making these natural.
struct TwoGroup {
  MonoidalCategory M;
  std::vector<Index> inv_d_obj, inv_g_obj;
  std::vector<Index> inv_d_mor, inv_g_mor;
  std::vector<Index> alpha, beta;
};

inline ValidationReport validate_monoidal(const MonoidalCategory& M) {
  ValidationReport r = validate_category(M.C);
  if (!r.ok()) return r;
  auto bad = [&](std::string s) { r.violations.push_back(std::move(s)); };
  const FinCategory& C = M.C;
  const std::size_t no = C.num_objects(), nm = C.num_morphisms();
  auto on = [&](Index x) { return "'" + C.objects[x] + "'"; };
  auto mn = [&](Index f) { return "'" + C.morphisms[f] + "'"; };

  bool shape = M.unit < no && M.tensor_obj.size() == no && M.tensor_mor.size() == nm && M.assoc.size() == no &&
               M.lunit.size() == no && M.runit.size() == no;
  for (std::size_t i = 0; shape && i < no; ++i) {
    shape = M.tensor_obj[i].size() == no && M.assoc[i].size() == no;
    for (std::size_t j = 0; shape && j < no; ++j) {
      shape = M.tensor_obj[i][j] < no && M.assoc[i][j].size() == no;
      for (std::size_t k = 0; shape && k < no; ++k) shape = M.assoc[i][j][k] < nm;
    }
  }
  for (std::size_t f = 0; shape && f < nm; ++f) {
    shape = M.tensor_mor[f].size() == nm;
    for (std::size_t g = 0; shape && g < nm; ++g) shape = M.tensor_mor[f][g] < nm;
  }
  for (std::size_t x = 0; shape && x < no; ++x) shape = M.lunit[x] < nm && M.runit[x] < nm;
  if (!shape) {
    bad("shape: monoidal tables do not match the base category");
    return r;
  }

  // tensor is a functor C x C -> C
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g) {
      Index h = M.tm(f, g);
      if (C.src[h] != M.t(C.src[f], C.src[g]) || C.tgt[h] != M.t(C.tgt[f], C.tgt[g]))
        bad("functoriality: " + mn(f) + " (x) " + mn(g) + " has the wrong endpoints");
    }
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y)
      if (M.tm(M.id(x), M.id(y)) != M.id(M.t(x, y))) bad("functoriality: id (x) id fails at (" + on(x) + "," + on(y) + ")");
  if (!r.ok()) return r;
  for (Index f = 0; f < nm; ++f)
    for (Index f2 = 0; f2 < nm; ++f2) {
      if (C.tgt[f] != C.src[f2]) continue;
      for (Index g = 0; g < nm; ++g)
        for (Index g2 = 0; g2 < nm; ++g2) {
          if (C.tgt[g] != C.src[g2]) continue;
          if (M.tm(M.comp(f2, f), M.comp(g2, g)) != M.comp(M.tm(f2, g2), M.tm(f, g)))
            bad("functoriality: interchange fails at (" + mn(f2) + "," + mn(f) + "," + mn(g2) + "," + mn(g) + ")");
        }
    }

  // components are isomorphisms with the right endpoints
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y)
      for (Index z = 0; z < no; ++z) {
        Index a = M.a(x, y, z);
        if (C.src[a] != M.t(M.t(x, y), z) || C.tgt[a] != M.t(x, M.t(y, z)))
          bad("naturality: a(" + on(x) + "," + on(y) + "," + on(z) + ") has the wrong endpoints");
        else if (!inverse_of(C, a))
          bad("naturality: a(" + on(x) + "," + on(y) + "," + on(z) + ") is not invertible");
      }
  for (Index x = 0; x < no; ++x) {
    Index l = M.l(x), rr = M.r(x);
    if (C.src[l] != x || C.tgt[l] != M.t(M.unit, x)) bad("naturality: l(" + on(x) + ") has the wrong endpoints");
    else if (!inverse_of(C, l)) bad("naturality: l(" + on(x) + ") is not invertible");
    if (C.src[rr] != x || C.tgt[rr] != M.t(x, M.unit)) bad("naturality: r(" + on(x) + ") has the wrong endpoints");
    else if (!inverse_of(C, rr)) bad("naturality: r(" + on(x) + ") is not invertible");
  }
  if (!r.ok()) return r;

  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g)
      for (Index h = 0; h < nm; ++h) {
        Index lhs = M.comp(M.a(C.tgt[f], C.tgt[g], C.tgt[h]), M.tm(M.tm(f, g), h));
        Index rhs = M.comp(M.tm(f, M.tm(g, h)), M.a(C.src[f], C.src[g], C.src[h]));
        if (lhs != rhs) bad("naturality: a fails on (" + mn(f) + "," + mn(g) + "," + mn(h) + ")");
      }
  for (Index f = 0; f < nm; ++f) {
    if (M.comp(M.l(C.tgt[f]), f) != M.comp(M.tm(M.id(M.unit), f), M.l(C.src[f]))) bad("naturality: l fails on " + mn(f));
    if (M.comp(M.r(C.tgt[f]), f) != M.comp(M.tm(f, M.id(M.unit)), M.r(C.src[f]))) bad("naturality: r fails on " + mn(f));
  }
  if (!r.ok()) return r;

  for (Index w = 0; w < no; ++w)
    for (Index x = 0; x < no; ++x)
      for (Index y = 0; y < no; ++y)
        for (Index z = 0; z < no; ++z) {
          Index lhs = M.comp(M.tm(M.id(w), M.a(x, y, z)), M.a(w, M.t(x, y), z), M.tm(M.a(w, x, y), M.id(z)));
          Index rhs = M.comp(M.a(w, x, M.t(y, z)), M.a(M.t(w, x), y, z));
          if (lhs != rhs) bad("pentagon: fails at (" + on(w) + "," + on(x) + "," + on(y) + "," + on(z) + ")");
        }
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y)
      if (M.comp(M.a(x, M.unit, y), M.tm(M.r(x), M.id(y))) != M.tm(M.id(x), M.l(y)))
        bad("triangle: fails at (" + on(x) + "," + on(y) + ")");
  if (!r.ok()) return r;

  // consequences of pentagon and triangle, kept as a cross-check
  if (M.l(M.unit) != M.r(M.unit)) bad("derived: l(1) != r(1)");
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y) {
      if (M.comp(M.a(x, y, M.unit), M.r(M.t(x, y))) != M.tm(M.id(x), M.r(y)))
        bad("derived: a(X,Y,1) r(XY) != X (x) r(Y) at (" + on(x) + "," + on(y) + ")");
      if (M.comp(M.a(M.unit, x, y), M.tm(M.l(x), M.id(y))) != M.l(M.t(x, y)))
        bad("derived: a(1,X,Y) (l(X) (x) Y) != l(XY) at (" + on(x) + "," + on(y) + ")");
    }
  return r;
}

struct CertifyResult {
  std::optional<TwoGroup> group;
  std::optional<Index> non_invertible;
  std::vector<std::string> violations;
};

namespace detail {

/// Chooses inverse objects and witnesses on one side, then the unique
/// morphism part making the witnesses natural.
inline bool choose_inverses(const MonoidalCategory& M, bool right, std::vector<Index>& obj, std::vector<Index>& mor,
                            std::vector<Index>& wit, std::optional<Index>& missing, std::vector<std::string>& why) {
  const FinCategory& C = M.C;
  const std::size_t no = C.num_objects(), nm = C.num_morphisms();
  obj.assign(no, 0);
  wit.assign(no, 0);
  for (Index x = 0; x < no; ++x) {
    bool found = false;
    for (Index y = 0; y < no && !found; ++y) {
      const auto& h = C.hom(right ? M.t(x, y) : M.t(y, x), M.unit);
      if (!h.empty()) {
        obj[x] = y;
        wit[x] = h.front();
        found = true;
      }
    }
    if (!found) {
      missing = x;
      return false;
    }
  }
  mor.assign(nm, 0);
  for (Index f = 0; f < nm; ++f) {
    const Index x = C.src[f], x2 = C.tgt[f];
    bool found = false;
    for (Index g : C.hom(obj[x], obj[x2])) {
      Index lhs = right ? M.comp(wit[x2], M.tm(f, g)) : M.comp(wit[x2], M.tm(g, f));
      if (lhs == wit[x]) {
        mor[f] = g;
        found = true;
        break;
      }
    }
    if (!found) {
      why.push_back(std::string(right ? "inv_d" : "inv_g") + ": no natural image of '" + C.morphisms[f] + "'");
      return false;
    }
  }
  for (Index x = 0; x < no; ++x)
    if (mor[M.id(x)] != M.id(obj[x])) why.push_back(std::string(right ? "inv_d" : "inv_g") + ": identity not preserved");
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g)
      if (C.tgt[f] == C.src[g] && mor[M.comp(g, f)] != M.comp(mor[g], mor[f]))
        why.push_back(std::string(right ? "inv_d" : "inv_g") + ": composition not preserved");
  return why.empty();
}

}  // namespace detail

/// Searches inverse witnesses in object order; the first found is kept.
inline CertifyResult certify_two_group(const MonoidalCategory& M) {
  CertifyResult out;
  auto v = validate_monoidal(M);
  if (!v.ok()) {
    out.violations = v.violations;
    return out;
  }
  if (!validate_groupoid(M.C).ok()) throw Error(ErrorKind::NotGroupoidBase, "base category is not a groupoid");
  TwoGroup G;
  G.M = M;
  if (!detail::choose_inverses(M, true, G.inv_d_obj, G.inv_d_mor, G.alpha, out.non_invertible, out.violations))
    return out;
  if (!detail::choose_inverses(M, false, G.inv_g_obj, G.inv_g_mor, G.beta, out.non_invertible, out.violations))
    return out;
  out.group = std::move(G);
  return out;
}

inline TwoGroup certified(const MonoidalCategory& M) {
  auto c = certify_two_group(M);
  if (!c.group) {
    std::string why = c.non_invertible ? "object '" + M.C.objects[*c.non_invertible] + "' is not invertible"
                                       : (c.violations.empty() ? "certification failed" : c.violations.front());
    throw Error(ErrorKind::Invalid, why);
  }
  return std::move(*c.group);
}

/// Components of a 2-group with the product induced by the tensor.
struct Pi0TwoGroup {
  FiniteGroup group;
  std::vector<Index> class_of;  // object -> class
  std::vector<std::string> violations;
};

inline Pi0TwoGroup pi0_two_group(const MonoidalCategory& M) {
  const FinCategory& C = M.C;
  UnionFind uf(C.num_objects());
  for (Index f = 0; f < C.num_morphisms(); ++f) uf.unite(C.src[f], C.tgt[f]);
  Pi0TwoGroup out;
  std::vector<Index> reps;
  std::vector<Index> cls(C.num_objects());
  std::vector<Index> slot(C.num_objects(), detail::hole);
  for (Index x = 0; x < C.num_objects(); ++x) {
    Index root = uf.find(x);
    if (slot[root] == detail::hole) {
      slot[root] = reps.size();
      reps.push_back(root);
    }
    cls[x] = slot[root];
  }
  const std::size_t n = reps.size();
  out.class_of = cls;
  out.group.mul.assign(n, std::vector<Index>(n, 0));
  for (Index i = 0; i < n; ++i) out.group.names.push_back(C.objects[reps[i]]);
  for (Index x = 0; x < C.num_objects(); ++x)
    for (Index y = 0; y < C.num_objects(); ++y) {
      Index c = cls[M.t(x, y)];
      if (x == reps[cls[x]] && y == reps[cls[y]]) out.group.mul[cls[x]][cls[y]] = c;
    }
  for (Index x = 0; x < C.num_objects(); ++x)
    for (Index y = 0; y < C.num_objects(); ++y)
      if (out.group.mul[cls[x]][cls[y]] != cls[M.t(x, y)])
        out.violations.push_back("pi0: product not well defined at ('" + C.objects[x] + "','" + C.objects[y] + "')");
  out.group.identity = cls[M.unit];
  auto g = validate_group(out.group);
  for (auto& s : g.violations) out.violations.push_back("pi0: " + s);
  return out;
}

/// Automorphisms of the unit object under composition.
inline FiniteGroup pi1_two_group(const MonoidalCategory& M) { return automorphism_group(M.C, M.unit); }

/// Lax unitary monoidal functor given by tables; m[X][Y]: FX (x) FY -> F(X (x) Y).
struct LaxFunctor {
  std::vector<Index> obj;
  std::vector<Index> mor;
  std::vector<std::vector<Index>> m;
};

inline ValidationReport validate_lax_functor(const MonoidalCategory& S, const MonoidalCategory& T, const LaxFunctor& F) {
  ValidationReport r;
  auto bad = [&](std::string s) { r.violations.push_back(std::move(s)); };
  const FinCategory& A = S.C;
  const FinCategory& B = T.C;
  const std::size_t no = A.num_objects(), nm = A.num_morphisms();
  bool shape = F.obj.size() == no && F.mor.size() == nm && F.m.size() == no;
  for (Index x = 0; shape && x < no; ++x) shape = F.obj[x] < B.num_objects() && F.m[x].size() == no;
  for (Index f = 0; shape && f < nm; ++f) shape = F.mor[f] < B.num_morphisms();
  for (Index x = 0; shape && x < no; ++x)
    for (Index y = 0; shape && y < no; ++y) shape = F.m[x][y] < B.num_morphisms();
  if (!shape) {
    bad("shape: functor tables do not match source and target");
    return r;
  }
  for (Index f = 0; f < nm; ++f)
    if (B.src[F.mor[f]] != F.obj[A.src[f]] || B.tgt[F.mor[f]] != F.obj[A.tgt[f]])
      bad("functor: image of '" + A.morphisms[f] + "' has the wrong endpoints");
  for (Index x = 0; x < no; ++x)
    if (F.mor[A.identity[x]] != B.identity[F.obj[x]]) bad("functor: identity of '" + A.objects[x] + "' not preserved");
  if (!r.ok()) return r;
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g)
      if (A.tgt[f] == A.src[g] && F.mor[A.comp[g][f]] != B.comp[F.mor[g]][F.mor[f]])
        bad("functor: composition not preserved at ('" + A.morphisms[g] + "','" + A.morphisms[f] + "')");
  if (F.obj[S.unit] != T.unit) bad("unit: F(1) != 1");
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y) {
      Index m = F.m[x][y];
      if (B.src[m] != T.t(F.obj[x], F.obj[y]) || B.tgt[m] != F.obj[S.t(x, y)])
        bad("components: m('" + A.objects[x] + "','" + A.objects[y] + "') has the wrong endpoints");
    }
  if (!r.ok()) return r;
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g) {
      Index lhs = T.comp(F.m[A.tgt[f]][A.tgt[g]], T.tm(F.mor[f], F.mor[g]));
      Index rhs = T.comp(F.mor[S.tm(f, g)], F.m[A.src[f]][A.src[g]]);
      if (lhs != rhs) bad("naturality: m fails on ('" + A.morphisms[f] + "','" + A.morphisms[g] + "')");
    }
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y)
      for (Index z = 0; z < no; ++z) {
        const Index fx = F.obj[x], fy = F.obj[y], fz = F.obj[z];
        Index lhs = T.comp(F.mor[S.a(x, y, z)], F.m[S.t(x, y)][z], T.tm(F.m[x][y], T.id(fz)));
        Index rhs = T.comp(F.m[x][S.t(y, z)], T.tm(T.id(fx), F.m[y][z]), T.a(fx, fy, fz));
        if (lhs != rhs)
          bad("hexagon: fails at ('" + A.objects[x] + "','" + A.objects[y] + "','" + A.objects[z] + "')");
      }
  if (!r.ok()) return r;
  for (Index x = 0; x < no; ++x) {
    if (T.comp(F.m[S.unit][x], T.l(F.obj[x])) != F.mor[S.l(x)]) bad("unit: left square fails at '" + A.objects[x] + "'");
    if (T.comp(F.m[x][S.unit], T.r(F.obj[x])) != F.mor[S.r(x)]) bad("unit: right square fails at '" + A.objects[x] + "'");
  }
  return r;
}

/// G after F, with m^{GF}_{X,Y} = G(m^F_{X,Y}) o m^G_{FX,FY}.
inline LaxFunctor compose_lax(const MonoidalCategory& T, const LaxFunctor& G, const LaxFunctor& F) {
  LaxFunctor H;
  H.obj.resize(F.obj.size());
  H.mor.resize(F.mor.size());
  for (Index x = 0; x < F.obj.size(); ++x) H.obj[x] = G.obj[F.obj[x]];
  for (Index f = 0; f < F.mor.size(); ++f) H.mor[f] = G.mor[F.mor[f]];
  const auto& U = T.C;
  H.m.assign(F.obj.size(), std::vector<Index>(F.obj.size()));
  for (Index x = 0; x < F.obj.size(); ++x)
    for (Index y = 0; y < F.obj.size(); ++y) H.m[x][y] = U.compose(G.mor[F.m[x][y]], G.m[F.obj[x]][F.obj[y]]);
  return H;
}

inline LaxFunctor identity_functor(const MonoidalCategory& M) {
  LaxFunctor F;
  for (Index x = 0; x < M.num_objects(); ++x) F.obj.push_back(x);
  for (Index f = 0; f < M.num_morphisms(); ++f) F.mor.push_back(f);
  F.m.assign(M.num_objects(), std::vector<Index>(M.num_objects()));
  for (Index x = 0; x < M.num_objects(); ++x)
    for (Index y = 0; y < M.num_objects(); ++y) F.m[x][y] = M.id(M.t(x, y));
  return F;
}

inline bool same_functor(const LaxFunctor& F, const LaxFunctor& G) { return F.obj == G.obj && F.mor == G.mor && F.m == G.m; }

struct WeakEquivalenceReport {
  bool pi0_iso = false;
  bool pi1_iso = false;
  std::vector<Index> pi0_map, pi1_map;
  bool ok() const { return pi0_iso && pi1_iso; }
};

/// Effect of F on components and on automorphisms of the unit.
inline WeakEquivalenceReport weak_equivalence_report(const MonoidalCategory& S, const MonoidalCategory& T,
                                                     const LaxFunctor& F) {
  WeakEquivalenceReport w;
  auto p0s = pi0_two_group(S), p0t = pi0_two_group(T);
  w.pi0_map.assign(p0s.group.size(), 0);
  bool consistent = true;
  std::vector<bool> set(p0s.group.size(), false);
  for (Index x = 0; x < S.num_objects(); ++x) {
    Index c = p0s.class_of[x], d = p0t.class_of[F.obj[x]];
    if (set[c] && w.pi0_map[c] != d) consistent = false;
    w.pi0_map[c] = d;
    set[c] = true;
  }
  w.pi0_iso = consistent && is_group_isomorphism(p0s.group, p0t.group, w.pi0_map);
  const auto& hs = S.C.hom(S.unit, S.unit);
  const auto& ht = T.C.hom(T.unit, T.unit);
  std::vector<Index> pos(T.num_morphisms(), 0);
  for (Index i = 0; i < ht.size(); ++i) pos[ht[i]] = i;
  for (Index f : hs) w.pi1_map.push_back(pos[F.mor[f]]);
  w.pi1_iso = is_group_isomorphism(pi1_two_group(S), pi1_two_group(T), w.pi1_map);
  return w;
}

inline bool is_weak_equivalence(const MonoidalCategory& S, const MonoidalCategory& T, const LaxFunctor& F) {
  return weak_equivalence_report(S, T, F).ok();
}

// ---- canned structures ----

namespace detail {

inline MonoidalCategory strict_from(FinCategory C, std::vector<std::vector<Index>> tobj,
                                    std::vector<std::vector<Index>> tmor, Index unit) {
  MonoidalCategory M;
  const std::size_t no = C.num_objects();
  M.tensor_obj = std::move(tobj);
  M.tensor_mor = std::move(tmor);
  M.unit = unit;
  M.assoc.assign(no, std::vector<std::vector<Index>>(no, std::vector<Index>(no)));
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y)
      for (Index z = 0; z < no; ++z) M.assoc[x][y][z] = C.identity[M.tensor_obj[M.tensor_obj[x][y]][z]];
  M.lunit = C.identity;
  M.runit = C.identity;
  M.C = std::move(C);
  return M;
}

}  // namespace detail

/// Objects are the group elements, only identity morphisms.
inline MonoidalCategory disc(const FiniteGroup& K) {
  FinCategory C = discrete_category(K.size());
  for (Index x = 0; x < K.size(); ++x) {
    C.objects[x] = K.names[x];
    C.morphisms[x] = "id:" + K.names[x];
  }
  C.finalize();
  return detail::strict_from(std::move(C), K.mul, K.mul, K.identity);
}

/// One object, morphisms the abelian group A, tensor = product.
inline MonoidalCategory one_obj(const FiniteGroup& A) {
  if (!is_abelian(A)) throw Error(ErrorKind::Invalid, "one-object 2-group needs an abelian group");
  FinCategory C = group_category(A);
  C.objects = {"I"};
  C.finalize();
  return detail::strict_from(std::move(C), {{0}}, A.mul, 0);
}

/// Discrete monoidal category on a monoid given by its table.
inline MonoidalCategory disc_monoid(const std::vector<std::string>& names, const std::vector<std::vector<Index>>& mul,
                                    Index unit) {
  FinCategory C = discrete_category(names.size());
  for (Index x = 0; x < names.size(); ++x) {
    C.objects[x] = names[x];
    C.morphisms[x] = "id:" + names[x];
  }
  C.finalize();
  return detail::strict_from(std::move(C), mul, mul, unit);
}

/// {0,1} under max: a monoid whose element 1 has no inverse.
inline MonoidalCategory disc_monoid_max() { return disc_monoid({"0", "1"}, {{0, 1}, {1, 1}}, 0); }

/// Indiscrete groupoid on the elements of K with the group product.
inline MonoidalCategory codiscrete(const FiniteGroup& K) {
  const std::size_t n = K.size();
  FinCategory C = indiscrete_groupoid(n);
  for (Index x = 0; x < n; ++x) C.objects[x] = K.names[x];
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) C.morphisms[i * n + j] = K.names[i] + ">" + K.names[j];
  C.finalize();
  std::vector<std::vector<Index>> tmor(n * n, std::vector<Index>(n * n));
  for (Index f = 0; f < n * n; ++f)
    for (Index g = 0; g < n * n; ++g)
      tmor[f][g] = K.mul[f / n][g / n] * n + K.mul[f % n][g % n];
  return detail::strict_from(std::move(C), K.mul, tmor, K.identity);
}

/// Product of two monoidal categories, pair ids "(x|y)".
inline MonoidalCategory product(const MonoidalCategory& A, const MonoidalCategory& B) {
  const std::size_t ao = A.num_objects(), bo = B.num_objects();
  const std::size_t am = A.num_morphisms(), bm = B.num_morphisms();
  auto ob = [&](Index x, Index y) { return x * bo + y; };
  auto mo = [&](Index f, Index g) { return f * bm + g; };
  MonoidalCategory M;
  FinCategory& C = M.C;
  for (Index x = 0; x < ao; ++x)
    for (Index y = 0; y < bo; ++y) C.objects.push_back("(" + A.C.objects[x] + "|" + B.C.objects[y] + ")");
  for (Index f = 0; f < am; ++f)
    for (Index g = 0; g < bm; ++g) {
      C.morphisms.push_back("(" + A.C.morphisms[f] + "|" + B.C.morphisms[g] + ")");
      C.src.push_back(ob(A.C.src[f], B.C.src[g]));
      C.tgt.push_back(ob(A.C.tgt[f], B.C.tgt[g]));
    }
  for (Index x = 0; x < ao; ++x)
    for (Index y = 0; y < bo; ++y) C.identity.push_back(mo(A.C.identity[x], B.C.identity[y]));
  C.comp.assign(am * bm, std::vector<Index>(am * bm, FinCategory::nocomp));
  M.tensor_mor.assign(am * bm, std::vector<Index>(am * bm));
  for (Index f = 0; f < am; ++f)
    for (Index g = 0; g < bm; ++g)
      for (Index f2 = 0; f2 < am; ++f2)
        for (Index g2 = 0; g2 < bm; ++g2) {
          Index cf = A.C.comp[f2][f], cg = B.C.comp[g2][g];
          if (cf != FinCategory::nocomp && cg != FinCategory::nocomp) C.comp[mo(f2, g2)][mo(f, g)] = mo(cf, cg);
          M.tensor_mor[mo(f, g)][mo(f2, g2)] = mo(A.tm(f, f2), B.tm(g, g2));
        }
  C.finalize();
  M.tensor_obj.assign(ao * bo, std::vector<Index>(ao * bo));
  M.assoc.assign(ao * bo, std::vector<std::vector<Index>>(ao * bo, std::vector<Index>(ao * bo)));
  for (Index p = 0; p < ao * bo; ++p)
    for (Index q = 0; q < ao * bo; ++q) {
      M.tensor_obj[p][q] = ob(A.t(p / bo, q / bo), B.t(p % bo, q % bo));
      for (Index s = 0; s < ao * bo; ++s) M.assoc[p][q][s] = mo(A.a(p / bo, q / bo, s / bo), B.a(p % bo, q % bo, s % bo));
    }
  for (Index p = 0; p < ao * bo; ++p) {
    M.lunit.push_back(mo(A.l(p / bo), B.l(p % bo)));
    M.runit.push_back(mo(A.r(p / bo), B.r(p % bo)));
  }
  M.unit = ob(A.unit, B.unit);
  return M;
}

/// Objects Z/2, Aut(x) = Z/2, associator (x+y+z, xyz): the non-trivial 3-cocycle.
inline MonoidalCategory twisted_z2() {
  MonoidalCategory M;
  FinCategory& C = M.C;
  C.objects = {"0", "1"};
  auto mo = [](Index x, Index a) { return 2 * x + a; };
  for (Index x = 0; x < 2; ++x)
    for (Index a = 0; a < 2; ++a) {
      C.morphisms.push_back(std::to_string(x) + ":" + std::to_string(a));
      C.src.push_back(x);
      C.tgt.push_back(x);
    }
  C.identity = {mo(0, 0), mo(1, 0)};
  C.comp.assign(4, std::vector<Index>(4, FinCategory::nocomp));
  M.tensor_mor.assign(4, std::vector<Index>(4));
  for (Index f = 0; f < 4; ++f)
    for (Index g = 0; g < 4; ++g) {
      if (f / 2 == g / 2) C.comp[g][f] = mo(f / 2, (f % 2) ^ (g % 2));
      M.tensor_mor[f][g] = mo((f / 2) ^ (g / 2), (f % 2) ^ (g % 2));
    }
  C.finalize();
  M.tensor_obj = {{0, 1}, {1, 0}};
  M.assoc.assign(2, std::vector<std::vector<Index>>(2, std::vector<Index>(2)));
  for (Index x = 0; x < 2; ++x)
    for (Index y = 0; y < 2; ++y)
      for (Index z = 0; z < 2; ++z) M.assoc[x][y][z] = mo(x ^ y ^ z, x & y & z);
  M.lunit = C.identity;
  M.runit = C.identity;
  M.unit = 0;
  return M;
}

inline MonoidalCategory trivial_two_group() { return disc(cyclic_group(1)); }

/// Strict functor Disc(K) -> Disc(L) of a group homomorphism.
inline LaxFunctor disc_functor(const MonoidalCategory& S, const MonoidalCategory& T, const std::vector<Index>& hom) {
  LaxFunctor F;
  F.obj = hom;
  for (Index f = 0; f < S.num_morphisms(); ++f) F.mor.push_back(T.id(hom[S.C.src[f]]));
  F.m.assign(S.num_objects(), std::vector<Index>(S.num_objects()));
  for (Index x = 0; x < S.num_objects(); ++x)
    for (Index y = 0; y < S.num_objects(); ++y) F.m[x][y] = T.id(T.t(hom[x], hom[y]));
  return F;
}

}  // namespace kanforge
