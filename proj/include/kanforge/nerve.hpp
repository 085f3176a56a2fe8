#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kanforge/bisimplicial.hpp"
#include "kanforge/hom.hpp"
#include "kanforge/monoidal.hpp"

namespace kanforge {

/// Composable chains: level m is Hom([m], C), ids are morphism ids joined by ','.
inline SSet nerve_category(const FinCategory& C, std::size_t to_dim) {
  SSet X(to_dim);
  std::vector<std::vector<Tuple>> chains(to_dim + 1);
  std::vector<std::unordered_map<Tuple, Index, TupleHash>> where(to_dim + 1);
  std::vector<std::vector<Index>> out(C.num_objects());
  for (Index f = 0; f < C.num_morphisms(); ++f) out[C.src[f]].push_back(f);
  auto add = [&](std::size_t k, Tuple t, std::string id) {
    where[k].emplace(t, chains[k].size());
    chains[k].push_back(std::move(t));
    X.ids[k].push_back(std::move(id));
  };
  for (Index a = 0; a < C.num_objects(); ++a) add(0, {a}, C.objects[a]);
  if (to_dim >= 1)
    for (Index f = 0; f < C.num_morphisms(); ++f) add(1, {f}, C.morphisms[f]);
  for (std::size_t k = 2; k <= to_dim; ++k)
    for (Index c = 0; c < chains[k - 1].size(); ++c) {
      const Tuple& base = chains[k - 1][c];
      for (Index g : out[C.tgt[base.back()]]) {
        Tuple t = base;
        t.push_back(g);
        add(k, std::move(t), X.ids[k - 1][c] + "," + C.morphisms[g]);
      }
    }
  auto vertex = [&](const Tuple& c, std::size_t j) { return j == 0 ? C.src[c[0]] : C.tgt[c[j - 1]]; };
  for (std::size_t k = 1; k <= to_dim; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      auto& m = X.face[k][i];
      m.resize(chains[k].size());
      for (Index x = 0; x < chains[k].size(); ++x) {
        const Tuple& c = chains[k][x];
        if (k == 1) {
          m[x] = i == 0 ? C.tgt[c[0]] : C.src[c[0]];
          continue;
        }
        Tuple t;
        if (i == 0) t.assign(c.begin() + 1, c.end());
        else if (i == k) t.assign(c.begin(), c.end() - 1);
        else {
          t.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - 1));
          t.push_back(C.compose(c[i], c[i - 1]));
          t.insert(t.end(), c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
        }
        m[x] = where[k - 1].at(t);
      }
    }
  for (std::size_t k = 0; k < to_dim; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      auto& m = X.degen[k][j];
      m.resize(chains[k].size());
      for (Index x = 0; x < chains[k].size(); ++x) {
        const Tuple& c = chains[k][x];
        if (k == 0) {
          m[x] = C.identity[c[0]];
          continue;
        }
        Tuple t = c;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(j), C.identity[vertex(c, j)]);
        m[x] = where[k + 1].at(t);
      }
    }
  X.coskeletal_at = 2;
  if (C.num_objects() == 1) X.base = 0;
  X.reindex();
  return X;
}

inline SSet nerve_group(const FiniteGroup& G, std::size_t to_dim) { return nerve_category(group_category(G), to_dim); }

namespace detail {

/// Horn tuple -> first filler, for one (m, k).
inline std::unordered_map<Tuple, Index, TupleHash> first_fillers(const SSet& X, std::size_t m, std::size_t k) {
  std::unordered_map<Tuple, Index, TupleHash> out;
  for (Index x = 0; x < X.size(m + 1); ++x) out.emplace(horn_of(X, m, k, x), x);
  return out;
}

inline SSet with_levels(const SSet& W, std::size_t need) {
  if (W.dim >= need) return W;
  if (W.coskeletal_at && *W.coskeletal_at <= W.dim) return coskeletal_extend(W, need);
  return W;
}

}  // namespace detail

/// Objects W_0, morphisms W_1, g o f = d_1 of the filler of (d_0, d_2) = (g, f).
inline FinCategory groupoid_from_nerve(const SSet& W0) {
  SSet W = detail::with_levels(W0, 3);
  if (W.dim < 2) throw Error(ErrorKind::DimensionOutOfRange, "groupoid reconstruction needs level 2");
  if (!classify(W, 1).n_kan_groupoid) throw Error(ErrorKind::NotOneKanGroupoid, "input is not a 1-Kan groupoid");
  FinCategory C;
  C.objects = W.ids[0];
  C.morphisms = W.ids[1];
  C.src = W.face[1][1];
  C.tgt = W.face[1][0];
  C.identity = W.degen[0][0];
  auto fill = detail::first_fillers(W, 1, 1);
  const std::size_t nm = W.size(1);
  C.comp.assign(nm, std::vector<Index>(nm, FinCategory::nocomp));
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g)
      if (C.tgt[f] == C.src[g]) {
        auto it = fill.find(Tuple{g, f});
        if (it == fill.end()) throw Error(ErrorKind::NotOneKanGroupoid, "missing composite");
        C.comp[g][f] = W.d(2, 1, it->second);
      }
  C.finalize();
  auto v = validate_groupoid(C);
  if (!v.ok()) throw Error(ErrorKind::NotOneKanGroupoid, v.violations.front());
  return C;
}

namespace detail {

/// Index bookkeeping for the pairs i<j and triples i<j<k of [n].
struct SimplexShape {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::array<std::size_t, 3>> triples;
  std::vector<std::size_t> pair_at, triple_at;
  std::size_t pair(std::size_t i, std::size_t j) const { return pair_at[i * (n + 1) + j]; }
  std::size_t triple(std::size_t i, std::size_t j, std::size_t k) const { return triple_at[(i * (n + 1) + j) * (n + 1) + k]; }
  std::size_t width() const { return pairs.size() + triples.size(); }
};

inline SimplexShape simplex_shape(std::size_t n) {
  SimplexShape s;
  s.n = n;
  const std::size_t w = n + 1;
  s.pair_at.assign(w * w, 0);
  s.triple_at.assign(w * w * w, 0);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      s.pair_at[i * w + j] = s.pairs.size();
      s.pairs.emplace_back(i, j);
    }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) {
        s.triple_at[(i * w + j) * w + k] = s.triples.size();
        s.triples.push_back({i, j, k});
      }
  return s;
}

inline std::vector<std::size_t> coface(std::size_t n, std::size_t i) {
  std::vector<std::size_t> phi;
  for (std::size_t v = 0; v <= n + 1; ++v)
    if (v != i) phi.push_back(v);
  return phi;
}

inline std::vector<std::size_t> codegeneracy(std::size_t n, std::size_t j) {
  std::vector<std::size_t> phi;
  for (std::size_t v = 0; v <= n + 1; ++v) phi.push_back(v <= j ? v : v - 1);
  return phi;
}

}  // namespace detail

/// Nerve of a 2-group: an n-simplex is objects X_ij (i<j) with morphisms
/// a_ijk: X_ij (x) X_jk -> X_ik satisfying the cocycle square on every i<j<k<l.
///
/// data[n][x] lists the objects in pair order, then the morphisms in triple order.
struct TwoGroupNerve {
  SSet X;
  std::vector<std::vector<std::vector<Index>>> data;
  std::vector<std::unordered_map<std::vector<Index>, Index, TupleHash>> index;
  std::vector<detail::SimplexShape> shapes;
  std::vector<Index> linv, rinv;

  std::optional<Index> find(std::size_t n, const std::vector<Index>& d) const {
    auto it = index[n].find(d);
    if (it == index[n].end()) return std::nullopt;
    return it->second;
  }

  /// phi^* along a monotone phi: [p] -> [n]; identities go to the unit, and
  /// degenerate triples to the inverse unitors.
  std::vector<Index> pull_back(const MonoidalCategory& M, std::size_t n, const std::vector<Index>& d,
                               const std::vector<std::size_t>& phi) const {
    const std::size_t p = phi.size() - 1;
    const auto& sn = shapes[n];
    const auto& sp = shapes[p];
    std::vector<Index> out(sp.width());
    for (std::size_t c = 0; c < sp.pairs.size(); ++c) {
      auto [i, j] = sp.pairs[c];
      out[c] = phi[i] == phi[j] ? M.unit : d[sn.pair(phi[i], phi[j])];
    }
    const std::size_t off_p = sp.pairs.size(), off_n = sn.pairs.size();
    for (std::size_t c = 0; c < sp.triples.size(); ++c) {
      auto [i, j, k] = sp.triples[c];
      Index m;
      if (phi[i] == phi[j]) m = linv[out[sp.pair(j, k)]];
      else if (phi[j] == phi[k]) m = rinv[out[sp.pair(i, j)]];
      else m = d[off_n + sn.triple(phi[i], phi[j], phi[k])];
      out[off_p + c] = m;
    }
    return out;
  }
};

namespace detail {

inline bool cocycle_holds(const MonoidalCategory& M, const SimplexShape& s, const std::vector<Index>& d, std::size_t i,
                          std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t off = s.pairs.size();
  const Index xij = d[s.pair(i, j)], xjk = d[s.pair(j, k)], xkl = d[s.pair(k, l)];
  const Index aijl = d[off + s.triple(i, j, l)], ajkl = d[off + s.triple(j, k, l)];
  const Index aikl = d[off + s.triple(i, k, l)], aijk = d[off + s.triple(i, j, k)];
  Index lhs = M.comp(aijl, M.tm(M.id(xij), ajkl), M.a(xij, xjk, xkl));
  Index rhs = M.comp(aikl, M.tm(aijk, M.id(xkl)));
  return lhs == rhs;
}

inline std::vector<std::vector<Index>> two_group_simplices(const MonoidalCategory& M, const SimplexShape& s, Budget& budget) {
  std::vector<std::vector<Index>> out;
  const std::size_t n = s.n;
  if (n == 0) return {{}};
  struct Step {
    int kind;  // 0 object, 1 morphism, 2 check
    std::size_t i, k, l;
  };
  std::vector<Step> steps;
  for (std::size_t l = 1; l <= n; ++l)
    for (std::size_t i = l; i-- > 0;) {
      steps.push_back({0, i, 0, l});
      for (std::size_t k = i + 1; k < l; ++k) steps.push_back({1, i, k, l});
      if (l >= i + 3) steps.push_back({2, i, 0, l});
    }
  std::vector<Index> d(s.width(), 0);
  const std::size_t off = s.pairs.size();
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == steps.size()) {
      out.push_back(d);
      return;
    }
    const Step& st = steps[at];
    budget.charge();
    if (st.kind == 0) {
      for (Index x = 0; x < M.num_objects(); ++x) {
        d[s.pair(st.i, st.l)] = x;
        rec(at + 1);
      }
    } else if (st.kind == 1) {
      const Index from = M.t(d[s.pair(st.i, st.k)], d[s.pair(st.k, st.l)]);
      for (Index f : M.C.hom(from, d[s.pair(st.i, st.l)])) {
        d[off + s.triple(st.i, st.k, st.l)] = f;
        rec(at + 1);
      }
    } else {
      for (std::size_t j = st.i + 1; j < st.l; ++j)
        for (std::size_t k = j + 1; k < st.l; ++k)
          if (!cocycle_holds(M, s, d, st.i, j, k, st.l)) return;
      rec(at + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

inline TwoGroupNerve nerve_2group(const TwoGroup& G, std::size_t to_dim = 4, Budget* budget = nullptr) {
  const MonoidalCategory& M = G.M;
  Budget local;
  Budget& b = budget ? *budget : local;
  TwoGroupNerve N;
  N.X.reshape(to_dim);
  for (std::size_t n = 0; n <= to_dim + 1; ++n) N.shapes.push_back(detail::simplex_shape(n));
  for (Index x = 0; x < M.num_objects(); ++x) {
    N.linv.push_back(M.inv(M.l(x)));
    N.rinv.push_back(M.inv(M.r(x)));
  }
  N.data.resize(to_dim + 1);
  N.index.resize(to_dim + 1);
  for (std::size_t n = 0; n <= to_dim; ++n) {
    N.data[n] = detail::two_group_simplices(M, N.shapes[n], b);
    const auto& s = N.shapes[n];
    for (Index x = 0; x < N.data[n].size(); ++x) {
      const auto& d = N.data[n][x];
      N.index[n].emplace(d, x);
      if (n == 0) {
        N.X.ids[0].push_back("*");
        continue;
      }
      std::vector<std::string> objs, mors;
      for (std::size_t c = 0; c < s.pairs.size(); ++c) objs.push_back(M.C.objects[d[c]]);
      for (std::size_t c = 0; c < s.triples.size(); ++c) mors.push_back(M.C.morphisms[d[s.pairs.size() + c]]);
      N.X.ids[n].push_back(n == 1 ? objs[0] : join(objs, ",") + ";" + join(mors, ","));
    }
  }
  for (std::size_t n = 1; n <= to_dim; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      auto phi = detail::coface(n - 1, i);
      auto& m = N.X.face[n][i];
      m.resize(N.data[n].size());
      for (Index x = 0; x < m.size(); ++x) {
        auto y = N.find(n - 1, N.pull_back(M, n, N.data[n][x], phi));
        if (!y) throw Error(ErrorKind::Invalid, "face of a nerve simplex is missing");
        m[x] = *y;
      }
    }
  for (std::size_t n = 0; n < to_dim; ++n)
    for (std::size_t j = 0; j <= n; ++j) {
      auto phi = detail::codegeneracy(n, j);
      auto& m = N.X.degen[n][j];
      m.resize(N.data[n].size());
      for (Index x = 0; x < m.size(); ++x) {
        auto y = N.find(n + 1, N.pull_back(M, n, N.data[n][x], phi));
        if (!y) throw Error(ErrorKind::Invalid, "degeneracy of a nerve simplex is missing");
        m[x] = *y;
      }
    }
  N.X.coskeletal_at = 3;
  N.X.base = 0;
  N.X.reindex();
  return N;
}

/// A 2-group rebuilt from a reduced 2-Kan groupoid by chosen fillers.
struct Reconstruction {
  TwoGroup G;
  std::vector<Index> simplex_of;   // morphism -> 2-simplex
  std::vector<Index> morphism_of;  // 2-simplex -> morphism, or hole
  std::vector<std::vector<Index>> chi;
  bool round_trip = false;
};

/// Objects Z_1, Hom(X,Y) the 2-simplices (X, 1, Y), tensor and coherence from
/// the first fillers of the relevant horns. Fails unless the result certifies
/// and its nerve is isomorphic to Z through dimension 3.
inline Reconstruction two_group_from_nerve(const SSet& Z0, Budget* budget = nullptr) {
  if (Z0.size(0) != 1) throw Error(ErrorKind::NotTwoKanGroupoid, "input is not reduced");
  SSet Z = detail::with_levels(Z0, 4);
  if (Z.dim < 3) throw Error(ErrorKind::DimensionOutOfRange, "reconstruction needs level 3");
  if (!classify(Z, 2, budget).n_kan_groupoid) throw Error(ErrorKind::NotTwoKanGroupoid, "input is not a 2-Kan groupoid");

  const Index u = Z.s(0, 0, 0);
  const Index uu = Z.s(1, 0, u);
  std::vector<std::unordered_map<Tuple, Index, TupleHash>> f2(3), f3(4);
  for (std::size_t k = 0; k <= 2; ++k) f2[k] = detail::first_fillers(Z, 1, k);
  for (std::size_t k = 0; k <= 3; ++k) f3[k] = detail::first_fillers(Z, 2, k);
  auto fill3 = [&](std::size_t k, Tuple h, std::size_t face) {
    auto it = f3[k].find(h);
    if (it == f3[k].end()) throw Error(ErrorKind::NotTwoKanGroupoid, "unfilled 3-horn");
    return Z.d(3, face, it->second);
  };

  Reconstruction R;
  MonoidalCategory& M = R.G.M;
  FinCategory& C = M.C;
  const std::size_t no = Z.size(1);
  C.objects = Z.ids[1];
  R.morphism_of.assign(Z.size(2), detail::hole);
  for (Index x = 0; x < Z.size(2); ++x)
    if (Z.d(2, 0, x) == u) {
      R.morphism_of[x] = R.simplex_of.size();
      R.simplex_of.push_back(x);
      C.morphisms.push_back(Z.ids[2][x]);
      C.src.push_back(Z.d(2, 2, x));
      C.tgt.push_back(Z.d(2, 1, x));
    }
  const std::size_t nm = C.morphisms.size();
  auto mor = [&](Index simplex) {
    Index m = R.morphism_of[simplex];
    if (m == detail::hole) throw Error(ErrorKind::NotTwoKanGroupoid, "filler is not a morphism");
    return m;
  };
  auto sx = [&](Index m) { return R.simplex_of[m]; };
  for (Index x = 0; x < no; ++x) C.identity.push_back(mor(Z.s(1, 1, x)));
  C.comp.assign(nm, std::vector<Index>(nm, FinCategory::nocomp));
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g)
      if (C.tgt[f] == C.src[g]) C.comp[g][f] = mor(fill3(2, {uu, sx(g), sx(f)}, 2));
  C.finalize();
  auto cv = validate_groupoid(C);
  if (!cv.ok()) throw Error(ErrorKind::NotTwoKanGroupoid, "reconstructed base: " + cv.violations.front());

  R.chi.assign(no, std::vector<Index>(no));
  M.tensor_obj.assign(no, std::vector<Index>(no));
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y) {
      auto it = f2[1].find(Tuple{y, x});
      if (it == f2[1].end()) throw Error(ErrorKind::NotTwoKanGroupoid, "unfilled 2-horn");
      R.chi[x][y] = it->second;
      M.tensor_obj[x][y] = Z.d(2, 1, it->second);
    }
  // psi: 2-simplices (X, Y; W) -> Hom(X (x) Y, W)
  auto psi = [&](Index sigma) {
    Index x = Z.d(2, 2, sigma), y = Z.d(2, 0, sigma);
    return mor(fill3(1, {Z.s(1, 1, y), sigma, R.chi[x][y]}, 1));
  };
  auto left_whisker = [&](Index x, Index g) {  // X (x) g
    Index y = C.src[g], y2 = C.tgt[g];
    return mor(fill3(1, {sx(g), R.chi[x][y2], R.chi[x][y]}, 1));
  };
  auto right_whisker = [&](Index f, Index y) {  // f (x) Y
    Index x2 = C.tgt[f];
    return psi(fill3(2, {Z.s(1, 0, y), R.chi[x2][y], sx(f)}, 2));
  };
  M.tensor_mor.assign(nm, std::vector<Index>(nm));
  for (Index f = 0; f < nm; ++f)
    for (Index g = 0; g < nm; ++g)
      M.tensor_mor[f][g] = C.compose(left_whisker(C.tgt[f], g), right_whisker(f, C.src[g]));
  M.assoc.assign(no, std::vector<std::vector<Index>>(no, std::vector<Index>(no)));
  for (Index x = 0; x < no; ++x)
    for (Index y = 0; y < no; ++y)
      for (Index z = 0; z < no; ++z) {
        Index sigma = fill3(2, {R.chi[y][z], R.chi[M.tensor_obj[x][y]][z], R.chi[x][y]}, 2);
        M.assoc[x][y][z] = M.inv(psi(sigma));
      }
  for (Index x = 0; x < no; ++x) {
    M.lunit.push_back(M.inv(psi(Z.s(1, 0, x))));
    M.runit.push_back(M.inv(psi(Z.s(1, 1, x))));
  }
  M.unit = u;

  auto cert = certify_two_group(M);
  if (!cert.group) {
    std::string why = cert.non_invertible ? "object '" + C.objects[*cert.non_invertible] + "' is not invertible"
                                          : (cert.violations.empty() ? "certification failed" : cert.violations.front());
    throw Error(ErrorKind::NotTwoKanGroupoid, "reconstruction: " + why);
  }
  R.G = std::move(*cert.group);
  auto back = nerve_2group(R.G, 3, budget);
  R.round_trip = find_isomorphism(back.X, truncate(Z, 3), budget).has_value();
  if (!R.round_trip) throw Error(ErrorKind::NotTwoKanGroupoid, "reconstruction does not round-trip");
  return R;
}

/// G -> rebuilt 2-group of its nerve: f: X -> Y goes to (X, 1, Y; f r_X^-1).
inline LaxFunctor duskin_comparison(const TwoGroup& G, const TwoGroupNerve& N, const Reconstruction& R) {
  const MonoidalCategory& M = G.M;
  const FinCategory& C = M.C;
  LaxFunctor F;
  F.obj.resize(C.num_objects());
  for (Index x = 0; x < C.num_objects(); ++x) F.obj[x] = *N.find(1, {x});
  auto image = [&](Index f) {
    Index x = C.src[f], y = C.tgt[f];
    auto s = N.find(2, {x, y, M.unit, M.comp(f, M.inv(M.r(x)))});
    if (!s) throw Error(ErrorKind::Invalid, "comparison simplex missing");
    return R.morphism_of[*s];
  };
  for (Index f = 0; f < C.num_morphisms(); ++f) F.mor.push_back(image(f));
  F.m.assign(C.num_objects(), std::vector<Index>(C.num_objects()));
  for (Index x = 0; x < C.num_objects(); ++x)
    for (Index y = 0; y < C.num_objects(); ++y) {
      const auto& d = N.data[2][R.chi[F.obj[x]][F.obj[y]]];
      F.m[x][y] = image(M.inv(d[3]));
    }
  return F;
}

/// Groupoid of q-simplices of the nerve; a morphism is a family f_ij with
/// b_ijk (f_ij (x) f_jk) = f_ik a_ijk.
struct SimplexGroupoid {
  std::size_t q = 0;
  std::size_t objects = 0;
  std::vector<Index> src, tgt;
  std::vector<std::vector<Index>> family;  // per pair of [q]
  std::vector<Index> identity;
  std::unordered_map<std::vector<Index>, Index, TupleHash> lookup;  // (src, family...) -> morphism
  std::vector<std::vector<Index>> out;

  std::size_t num_morphisms() const { return src.size(); }
  Index find(Index s, const std::vector<Index>& fam) const {
    std::vector<Index> key{s};
    key.insert(key.end(), fam.begin(), fam.end());
    return lookup.at(key);
  }
  Index compose(const MonoidalCategory& M, Index g, Index f) const {
    std::vector<Index> fam(family[f].size());
    for (std::size_t c = 0; c < fam.size(); ++c) fam[c] = M.comp(family[g][c], family[f][c]);
    return find(src[f], fam);
  }
};

/// With `morphisms` false only the objects are filled in.
inline SimplexGroupoid simplex_groupoid(const TwoGroup& G, const TwoGroupNerve& N, std::size_t q, bool morphisms = true) {
  const MonoidalCategory& M = G.M;
  const auto& s = N.shapes[q];
  const std::size_t np = s.pairs.size(), off = np;
  SimplexGroupoid S;
  S.q = q;
  S.objects = N.data[q].size();
  S.out.resize(S.objects);
  if (!morphisms) return S;
  std::vector<std::vector<Index>> outs(M.num_objects());
  for (Index f = 0; f < M.num_morphisms(); ++f) outs[M.C.src[f]].push_back(f);
  for (Index x = 0; x < S.objects; ++x) {
    const auto& d = N.data[q][x];
    std::vector<Index> fam(np), pos(np, 0);
    for (;;) {
      for (std::size_t c = 0; c < np; ++c) fam[c] = outs[d[c]][pos[c]];
      std::vector<Index> e(s.width());
      for (std::size_t c = 0; c < np; ++c) e[c] = M.C.tgt[fam[c]];
      for (std::size_t c = 0; c < s.triples.size(); ++c) {
        auto [i, j, k] = s.triples[c];
        Index fij = fam[s.pair(i, j)], fjk = fam[s.pair(j, k)], fik = fam[s.pair(i, k)];
        e[off + c] = M.comp(fik, d[off + c], M.inv(M.tm(fij, fjk)));
      }
      auto y = N.find(q, e);
      if (!y) throw Error(ErrorKind::Invalid, "transported simplex is missing");
      Index id = S.src.size();
      std::vector<Index> key{x};
      key.insert(key.end(), fam.begin(), fam.end());
      S.lookup.emplace(key, id);
      S.src.push_back(x);
      S.tgt.push_back(*y);
      S.family.push_back(fam);
      S.out[x].push_back(id);
      std::size_t c = 0;
      while (c < np && ++pos[c] == outs[d[c]].size()) pos[c++] = 0;
      if (c == np) break;
    }
  }
  S.identity.resize(S.objects);
  for (Index x = 0; x < S.objects; ++x) {
    std::vector<Index> fam(np);
    for (std::size_t c = 0; c < np; ++c) fam[c] = M.id(N.data[q][x][c]);
    S.identity[x] = S.find(x, fam);
  }
  return S;
}

/// The groupoid of q-simplices as a FinCategory (meant for small q).
inline FinCategory q_simplex_groupoid(const TwoGroup& G, std::size_t q) {
  auto N = nerve_2group(G, std::max<std::size_t>(q, 1));
  auto S = simplex_groupoid(G, N, q);
  FinCategory C;
  C.objects = N.X.ids[q];
  for (Index f = 0; f < S.num_morphisms(); ++f) {
    std::vector<std::string> parts;
    for (Index g : S.family[f]) parts.push_back(G.M.C.morphisms[g]);
    C.morphisms.push_back(q == 0 ? "id" : (q == 1 ? parts[0] : C.objects[S.src[f]] + "=>[" + join(parts, ",") + "]"));
  }
  C.src = S.src;
  C.tgt = S.tgt;
  C.identity = S.identity;
  C.comp.assign(S.num_morphisms(), std::vector<Index>(S.num_morphisms(), FinCategory::nocomp));
  for (Index f = 0; f < S.num_morphisms(); ++f)
    for (Index g : S.out[S.tgt[f]]) C.comp[g][f] = S.compose(G.M, g, f);
  C.finalize();
  return C;
}

/// Underlying groupoid of a 2-group.
inline const FinCategory& underlying(const TwoGroup& G) { return G.M.C; }

/// Segal nerve: X_{p,q} = p-chains in the groupoid of q-simplices.
///
/// Horizontal operators are the groupoid nerve operators; vertical ones are
/// phi^* applied to every member of a chain. Ids for p >= 1 are morphism
/// indices joined by '.'.
inline BiSet segal_nerve(const TwoGroup& G, std::size_t P, std::size_t Q, std::optional<std::size_t> total = std::nullopt,
                         Budget* budget = nullptr) {
  const MonoidalCategory& M = G.M;
  auto N = nerve_2group(G, std::max<std::size_t>(Q, 1), budget);
  BiSet X(P, Q, total);
  std::vector<SimplexGroupoid> S;
  for (std::size_t q = 0; q <= Q; ++q) S.push_back(simplex_groupoid(G, N, q, X.in_shape(1, q)));
  // chains[p][q][x]; p = 0 holds the object
  std::vector<std::vector<std::vector<Tuple>>> chains(P + 1, std::vector<std::vector<Tuple>>(Q + 1));
  std::vector<std::vector<std::unordered_map<Tuple, Index, TupleHash>>> where(
      P + 1, std::vector<std::unordered_map<Tuple, Index, TupleHash>>(Q + 1));
  for (auto [p, q] : X.nodes()) {
    auto& cs = chains[p][q];
    if (p == 0) {
      for (Index x = 0; x < S[q].objects; ++x) cs.push_back({x});
      X.ids[0][q] = N.X.ids[q];
    } else if (p == 1) {
      for (Index f = 0; f < S[q].num_morphisms(); ++f) {
        cs.push_back({f});
        X.ids[1][q].push_back(std::to_string(f));
      }
    } else {
      for (Index c = 0; c < chains[p - 1][q].size(); ++c) {
        const Tuple& base = chains[p - 1][q][c];
        for (Index g : S[q].out[S[q].tgt[base.back()]]) {
          if (budget) budget->charge();
          Tuple t = base;
          t.push_back(g);
          X.ids[p][q].push_back(X.ids[p - 1][q][c] + "." + std::to_string(g));
          cs.push_back(std::move(t));
        }
      }
    }
    for (Index x = 0; x < cs.size(); ++x) where[p][q].emplace(cs[x], x);
  }
  // vertical phi^* on one morphism of the q-simplex groupoid
  auto vmor = [&](std::size_t q, std::size_t q2, Index f, const std::vector<std::size_t>& phi) {
    const auto& sq = N.shapes[q];
    const auto& s2 = N.shapes[q2];
    std::vector<Index> fam(s2.pairs.size());
    for (std::size_t c = 0; c < s2.pairs.size(); ++c) {
      auto [i, j] = s2.pairs[c];
      fam[c] = phi[i] == phi[j] ? M.id(M.unit) : S[q].family[f][sq.pair(phi[i], phi[j])];
    }
    Index x2 = *N.find(q2, N.pull_back(M, q, N.data[q][S[q].src[f]], phi));
    return S[q2].find(x2, fam);
  };
  auto vobj = [&](std::size_t q, std::size_t q2, Index x, const std::vector<std::size_t>& phi) {
    return *N.find(q2, N.pull_back(M, q, N.data[q][x], phi));
  };
  auto vchain = [&](std::size_t p, std::size_t q, std::size_t q2, const Tuple& c, const std::vector<std::size_t>& phi) {
    Tuple t(c.size());
    for (std::size_t a = 0; a < c.size(); ++a) t[a] = p == 0 ? vobj(q, q2, c[a], phi) : vmor(q, q2, c[a], phi);
    return where[p][q2].at(t);
  };
  auto hvertex = [&](std::size_t q, const Tuple& c, std::size_t j) { return j == 0 ? S[q].src[c[0]] : S[q].tgt[c[j - 1]]; };
  for (auto [p, q] : X.nodes()) {
    const auto& cs = chains[p][q];
    if (p >= 1)
      for (std::size_t i = 0; i <= p; ++i) {
        auto& m = X.hface[p][q][i];
        m.resize(cs.size());
        for (Index x = 0; x < cs.size(); ++x) {
          const Tuple& c = cs[x];
          Tuple t;
          if (p == 1) t = {i == 0 ? S[q].tgt[c[0]] : S[q].src[c[0]]};
          else if (i == 0) t.assign(c.begin() + 1, c.end());
          else if (i == p) t.assign(c.begin(), c.end() - 1);
          else {
            t.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - 1));
            t.push_back(S[q].compose(M, c[i], c[i - 1]));
            t.insert(t.end(), c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
          }
          m[x] = where[p - 1][q].at(t);
        }
      }
    if (X.in_shape(p + 1, q))
      for (std::size_t j = 0; j <= p; ++j) {
        auto& m = X.hdegen[p][q][j];
        m.resize(cs.size());
        for (Index x = 0; x < cs.size(); ++x) {
          const Tuple& c = cs[x];
          Tuple t;
          if (p == 0) t = {S[q].identity[c[0]]};
          else {
            t = c;
            t.insert(t.begin() + static_cast<std::ptrdiff_t>(j), S[q].identity[hvertex(q, c, j)]);
          }
          m[x] = where[p + 1][q].at(t);
        }
      }
    if (q >= 1)
      for (std::size_t i = 0; i <= q; ++i) {
        auto phi = detail::coface(q - 1, i);
        auto& m = X.vface[p][q][i];
        m.resize(cs.size());
        for (Index x = 0; x < cs.size(); ++x) m[x] = vchain(p, q, q - 1, cs[x], phi);
      }
    if (X.in_shape(p, q + 1))
      for (std::size_t j = 0; j <= q; ++j) {
        auto phi = detail::codegeneracy(q, j);
        auto& m = X.vdegen[p][q][j];
        m.resize(cs.size());
        for (Index x = 0; x < cs.size(); ++x) m[x] = vchain(p, q, q + 1, cs[x], phi);
      }
  }
  return X;
}

/// Gamma: loops at the base of the nerve -> nerve of the underlying groupoid.
struct LoopGammaReport {
  SSet loops;
  SSet target;
  SMap gamma;
  bool simplicial = false;
  bool bijective = false;
  bool ok() const { return simplicial && bijective; }
};

inline LoopGammaReport loop_gamma(const TwoGroup& G, std::size_t nerve_dim = 4) {
  const MonoidalCategory& M = G.M;
  auto N = nerve_2group(G, nerve_dim);
  LoopGammaReport r;
  r.loops = loop_space(N.X, LoopVariant::plain);
  r.target = nerve_category(M.C, r.loops.dim);
  SMap g(2);
  // level 0: the loop X (a 1-simplex) goes to the object X
  for (Index v = 0; v < r.loops.size(0); ++v) g[0].push_back(N.data[1][N.X.at(1, r.loops.ids[0][v])][0]);
  // level 1: (1, X, Y; xi) goes to l_X^-1 xi^-1 : Y -> X
  for (Index e = 0; e < r.loops.size(1); ++e) {
    const auto& d = N.data[2][N.X.at(2, r.loops.ids[1][e])];
    Index x = d[2], xi = d[3];
    g[1].push_back(M.comp(M.inv(M.l(x)), M.inv(xi)));
  }
  auto ext = extend_by_boundary(r.loops, r.target, g, 1);
  if (!ext) return r;
  r.gamma = *ext;
  r.simplicial = is_simplicial(r.loops, r.target, r.gamma);
  r.bijective = is_levelwise_bijective(r.loops, r.target, r.gamma);
  return r;
}

/// pi_0(G) vs pi_1 of the nerve and pi_1(G) vs pi_2 of the nerve through the
/// explicit comparison maps.
struct GrhoReport {
  FiniteGroup pi0_G, pi1_N, pi1_G, pi2_N;
  std::vector<Index> alpha0, alpha1;
  bool alpha0_iso = false;
  bool alpha1_iso = false;
  bool pi2_abelian = false;
  std::vector<std::string> violations;
  bool ok() const { return alpha0_iso && alpha1_iso && violations.empty(); }
};

inline GrhoReport grho_check(const TwoGroup& G, Budget* budget = nullptr) {
  const MonoidalCategory& M = G.M;
  auto N = nerve_2group(G, 4, budget);
  GrhoReport r;
  auto p0 = pi0_two_group(M);
  r.pi0_G = p0.group;
  r.pi1_G = pi1_two_group(M);
  auto h1 = pi(N.X, 1, 0, budget);
  auto h2 = pi(N.X, 2, 0, budget);
  for (auto& v : p0.violations) r.violations.push_back(v);
  for (auto& v : h1.violations) r.violations.push_back("pi_1: " + v);
  for (auto& v : h2.violations) r.violations.push_back("pi_2: " + v);
  if (!h1.group || !h2.group) {
    r.violations.push_back("homotopy groups not computed");
    return r;
  }
  r.pi1_N = *h1.group;
  r.pi2_N = *h2.group;
  r.pi2_abelian = is_abelian(r.pi2_N);

  r.alpha0.assign(r.pi0_G.size(), 0);
  bool welldef = true;
  std::vector<bool> seen(r.pi0_G.size(), false);
  for (Index x = 0; x < M.num_objects(); ++x) {
    Index c = p0.class_of[x];
    Index img = h1.class_of_simplex(*N.find(1, {x}));
    if (seen[c] && r.alpha0[c] != img) welldef = false;
    r.alpha0[c] = img;
    seen[c] = true;
  }
  r.alpha0_iso = welldef && is_group_isomorphism(r.pi0_G, r.pi1_N, r.alpha0);

  const Index l1inv = M.inv(M.l(M.unit));
  for (Index phi : M.C.hom(M.unit, M.unit)) {
    auto s = N.find(2, {M.unit, M.unit, M.unit, M.comp(phi, l1inv)});
    if (!s) {
      r.violations.push_back("alpha1: simplex missing");
      return r;
    }
    r.alpha1.push_back(h2.class_of_simplex(*s));
  }
  r.alpha1_iso = is_group_isomorphism(r.pi1_G, r.pi2_N, r.alpha1);
  return r;
}

}  // namespace kanforge
