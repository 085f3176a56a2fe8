#pragma once

#include <map>
#include <string>
#include <vector>

#include "kanforge/sset.hpp"

namespace kanforge {

using Mask = std::vector<std::vector<bool>>;

namespace detail {

using Seq = std::vector<std::size_t>;

inline std::string seq_id(const Seq& s, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (n >= 10 && i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

inline void nondecreasing(std::size_t len, std::size_t n, Seq& cur, std::vector<Seq>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  std::size_t lo = cur.empty() ? 0 : cur.back();
  for (std::size_t v = lo; v <= n; ++v) {
    cur.push_back(v);
    nondecreasing(len, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// The standard n-simplex truncated at `dim`; k-simplices are nondecreasing
/// sequences of length k+1 in [0, n].
inline SSet standard_simplex(std::size_t n, std::size_t dim) {
  SSet X(dim);
  std::vector<std::map<detail::Seq, Index>> where(dim + 1);
  std::vector<std::vector<detail::Seq>> seqs(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) {
    detail::Seq cur;
    detail::nondecreasing(k + 1, n, cur, seqs[k]);
    for (Index x = 0; x < seqs[k].size(); ++x) {
      where[k][seqs[k][x]] = x;
      X.ids[k].push_back(detail::seq_id(seqs[k][x], n));
    }
  }
  for (std::size_t k = 1; k <= dim; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      for (auto& s : seqs[k]) {
        detail::Seq t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        X.face[k][i].push_back(where[k - 1].at(t));
      }
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (auto& s : seqs[k]) {
        detail::Seq t = s;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(j), s[j]);
        X.degen[k][j].push_back(where[k + 1].at(t));
      }
  X.reindex();
  return X;
}

namespace detail {

/// Vertex set of each simplex of a standard simplex, as a bitmask.
inline std::vector<std::vector<unsigned long>> vertex_sets(const SSet& D) {
  std::vector<std::vector<unsigned long>> out(D.dim + 1);
  out[0].resize(D.size(0));
  for (Index v = 0; v < D.size(0); ++v) out[0][v] = 1UL << v;
  for (std::size_t k = 1; k <= D.dim; ++k) {
    out[k].resize(D.size(k));
    for (Index x = 0; x < D.size(k); ++x) {
      unsigned long m = 0;
      for (std::size_t i = 0; i <= k; ++i) m |= out[k - 1][D.d(k, i, x)];
      out[k][x] = m;
    }
  }
  return out;
}

}  // namespace detail

inline SSet boundary_simplex(std::size_t n, std::size_t dim) {
  SSet D = standard_simplex(n, dim);
  auto vs = detail::vertex_sets(D);
  const unsigned long full = (1UL << (n + 1)) - 1;
  Mask mask(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k)
    for (Index x = 0; x < D.size(k); ++x) mask[k].push_back(vs[k][x] != full);
  return restrict_to(D, mask);
}

/// Union of the faces d_i of the n-simplex for i != k.
inline SSet horn(std::size_t n, std::size_t k, std::size_t dim) {
  if (k > n) throw Error(ErrorKind::BadHornIndex, "horn index " + std::to_string(k) + " > " + std::to_string(n));
  SSet D = standard_simplex(n, dim);
  auto vs = detail::vertex_sets(D);
  const unsigned long full = (1UL << (n + 1)) - 1;
  Mask mask(dim + 1);
  for (std::size_t k2 = 0; k2 <= dim; ++k2)
    for (Index x = 0; x < D.size(k2); ++x) mask[k2].push_back((vs[k2][x] | (1UL << k)) != full);
  return restrict_to(D, mask);
}

/// Levelwise product; the pair (x, y) sits at index x * |Y_k| + y.
inline SSet product(const SSet& X, const SSet& Y) {
  const std::size_t N = std::min(X.dim, Y.dim);
  SSet P(N);
  for (std::size_t k = 0; k <= N; ++k)
    for (Index x = 0; x < X.size(k); ++x)
      for (Index y = 0; y < Y.size(k); ++y) P.ids[k].push_back("(" + X.ids[k][x] + "|" + Y.ids[k][y] + ")");
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      for (Index x = 0; x < X.size(k); ++x)
        for (Index y = 0; y < Y.size(k); ++y)
          P.face[k][i].push_back(X.d(k, i, x) * Y.size(k - 1) + Y.d(k, i, y));
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (Index x = 0; x < X.size(k); ++x)
        for (Index y = 0; y < Y.size(k); ++y)
          P.degen[k][j].push_back(X.s(k, j, x) * Y.size(k + 1) + Y.s(k, j, y));
  P.reindex();
  return P;
}

/// Product membership mask from factor masks (an empty factor mask means "all").
inline Mask product_mask(const SSet& X, const Mask& mx, const SSet& Y, const Mask& my) {
  const std::size_t N = std::min(X.dim, Y.dim);
  Mask m(N + 1);
  for (std::size_t k = 0; k <= N; ++k)
    for (Index x = 0; x < X.size(k); ++x)
      for (Index y = 0; y < Y.size(k); ++y)
        m[k].push_back((mx.empty() || mx[k][x]) && (my.empty() || my[k][y]));
  return m;
}

inline void check_subcomplex(const SSet& X, const Mask& mask) {
  for (std::size_t k = 0; k <= X.dim; ++k) {
    if (mask.size() <= k || mask[k].size() != X.size(k))
      throw Error(ErrorKind::NotSubcomplex, "mask does not cover level " + std::to_string(k));
    for (Index x = 0; x < X.size(k); ++x) {
      if (!mask[k][x]) continue;
      if (k >= 1)
        for (std::size_t i = 0; i <= k; ++i)
          if (!mask[k - 1][X.d(k, i, x)])
            throw Error(ErrorKind::NotSubcomplex, "face " + std::to_string(i) + " of '" + X.ids[k][x] + "' leaves the subset");
      if (k < X.dim)
        for (std::size_t j = 0; j <= k; ++j)
          if (!mask[k + 1][X.s(k, j, x)])
            throw Error(ErrorKind::NotSubcomplex, "degeneracy " + std::to_string(j) + " of '" + X.ids[k][x] + "' leaves the subset");
    }
  }
}

/// Collapses a sub-simplicial set to a single point; the collapsed class is
/// named by its least id and becomes the base vertex.
inline SSet quotient(const SSet& X, const Mask& mask, SMap* projection = nullptr) {
  check_subcomplex(X, mask);
  SSet Q(X.dim);
  SMap cls(X.dim + 1);
  for (std::size_t k = 0; k <= X.dim; ++k) {
    cls[k].assign(X.size(k), 0);
    std::optional<Index> collapsed;
    for (Index x = 0; x < X.size(k); ++x) {
      if (mask[k][x]) {
        if (!collapsed) {
          collapsed = Q.ids[k].size();
          Q.ids[k].push_back(X.ids[k][x]);
        } else if (X.ids[k][x] < Q.ids[k][*collapsed]) {
          Q.ids[k][*collapsed] = X.ids[k][x];
        }
        cls[k][x] = *collapsed;
      } else {
        cls[k][x] = Q.ids[k].size();
        Q.ids[k].push_back(X.ids[k][x]);
      }
    }
    if (k == 0 && collapsed) Q.base = *collapsed;
  }
  for (std::size_t k = 1; k <= X.dim; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      Q.face[k][i].assign(Q.size(k), 0);
      for (Index x = 0; x < X.size(k); ++x) Q.face[k][i][cls[k][x]] = cls[k - 1][X.d(k, i, x)];
    }
  for (std::size_t k = 0; k < X.dim; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      Q.degen[k][j].assign(Q.size(k), 0);
      for (Index x = 0; x < X.size(k); ++x) Q.degen[k][j][cls[k][x]] = cls[k + 1][X.s(k, j, x)];
    }
  if (!Q.base && X.base) Q.base = cls[0][*X.base];
  Q.reindex();
  if (projection) *projection = std::move(cls);
  return Q;
}

inline SSet disjoint_union(const SSet& X, const SSet& Y) {
  const std::size_t N = std::min(X.dim, Y.dim);
  SSet U(N);
  for (std::size_t k = 0; k <= N; ++k) {
    for (auto& id : X.ids[k]) U.ids[k].push_back("0:" + id);
    for (auto& id : Y.ids[k]) U.ids[k].push_back("1:" + id);
  }
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      for (Index x = 0; x < X.size(k); ++x) U.face[k][i].push_back(X.d(k, i, x));
      for (Index y = 0; y < Y.size(k); ++y) U.face[k][i].push_back(X.size(k - 1) + Y.d(k, i, y));
    }
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      for (Index x = 0; x < X.size(k); ++x) U.degen[k][j].push_back(X.s(k, j, x));
      for (Index y = 0; y < Y.size(k); ++y) U.degen[k][j].push_back(X.size(k + 1) + Y.s(k, j, y));
    }
  U.reindex();
  return U;
}

/// Constant simplicial set on a finite set.
inline SSet constant(const std::vector<std::string>& names, std::size_t dim) {
  SSet X(dim);
  for (std::size_t k = 0; k <= dim; ++k) X.ids[k] = names;
  std::vector<Index> id(names.size());
  for (Index x = 0; x < names.size(); ++x) id[x] = x;
  for (std::size_t k = 1; k <= dim; ++k)
    for (std::size_t i = 0; i <= k; ++i) X.face[k][i] = id;
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j <= k; ++j) X.degen[k][j] = id;
  X.reindex();
  return X;
}

/// Simplices that are iterated degeneracies of a vertex.
inline Mask vertex_skeleton_mask(const SSet& X) {
  Mask m(X.dim + 1);
  for (std::size_t k = 0; k <= X.dim; ++k)
    for (Index x = 0; x < X.size(k); ++x) {
      Index v = x;
      for (std::size_t l = k; l > 0; --l) v = X.d(l, 0, v);
      m[k].push_back(degenerate_vertex(X, k, v) == x);
    }
  return m;
}

/// Simplices that are iterated degeneracies of one given vertex.
inline Mask point_mask(const SSet& X, Index v) {
  Mask m(X.dim + 1);
  for (std::size_t k = 0; k <= X.dim; ++k) {
    m[k].assign(X.size(k), false);
    m[k][degenerate_vertex(X, k, v)] = true;
  }
  return m;
}

inline SSet circle(std::size_t dim) {
  SSet D = standard_simplex(1, dim);
  auto vs = detail::vertex_sets(D);
  Mask mask(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k)
    for (Index x = 0; x < D.size(k); ++x) mask[k].push_back(vs[k][x] != 3UL);
  return quotient(D, mask);
}

/// The n-simplex with its vertices collapsed.
inline SSet simplex_mod_vertices(std::size_t n, std::size_t dim) {
  SSet D = standard_simplex(n, dim);
  return quotient(D, vertex_skeleton_mask(D));
}

/// (Delta^1 x Delta^n) / (sq_0 Delta^1 x Delta^n).
inline SSet prism_quotient(std::size_t n, std::size_t dim) {
  SSet I = standard_simplex(1, dim);
  SSet D = standard_simplex(n, dim);
  SSet P = product(I, D);
  return quotient(P, product_mask(I, vertex_skeleton_mask(I), D, {}));
}

inline SSet point(std::size_t dim) { return constant({"*"}, dim); }

}  // namespace kanforge
