#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kanforge/core.hpp"

namespace kanforge {

/// Finite simplicial set truncated at `dim`.
///
/// face[k][i] maps level k to level k-1 (1 <= k <= dim, 0 <= i <= k);
/// degen[k][j] maps level k to level k+1 (0 <= k < dim, 0 <= j <= k).
struct SSet {
  std::size_t dim = 0;
  std::vector<std::vector<std::string>> ids;
  std::vector<std::vector<std::vector<Index>>> face;
  std::vector<std::vector<std::vector<Index>>> degen;
  std::optional<std::size_t> coskeletal_at;
  std::optional<Index> base;

  SSet() = default;
  explicit SSet(std::size_t n) { reshape(n); }

  void reshape(std::size_t n) {
    dim = n;
    ids.assign(n + 1, {});
    face.assign(n + 1, {});
    degen.assign(n + 1, {});
    for (std::size_t k = 1; k <= n; ++k) face[k].assign(k + 1, {});
    for (std::size_t k = 0; k < n; ++k) degen[k].assign(k + 1, {});
  }

  std::size_t size(std::size_t k) const { return ids[k].size(); }
  Index d(std::size_t k, std::size_t i, Index x) const { return face[k][i][x]; }
  Index s(std::size_t k, std::size_t j, Index x) const { return degen[k][j][x]; }

  void reindex() {
    lookup_.assign(dim + 1, {});
    for (std::size_t k = 0; k <= dim; ++k)
      for (Index x = 0; x < ids[k].size(); ++x) lookup_[k].emplace(ids[k][x], x);
  }

  std::optional<Index> find(std::size_t k, const std::string& id) const {
    if (k > dim) return std::nullopt;
    if (lookup_.size() == dim + 1) {
      auto it = lookup_[k].find(id);
      if (it == lookup_[k].end()) return std::nullopt;
      return it->second;
    }
    for (Index x = 0; x < ids[k].size(); ++x)
      if (ids[k][x] == id) return x;
    return std::nullopt;
  }

  Index at(std::size_t k, const std::string& id) const {
    auto r = find(k, id);
    if (!r) throw Error(ErrorKind::Invalid, "no simplex '" + id + "' in level " + std::to_string(k));
    return *r;
  }

  Index base_point() const { return base.value_or(0); }

 private:
  std::vector<std::unordered_map<std::string, Index>> lookup_;
};

/// Levelwise function between two truncated simplicial sets.
using SMap = std::vector<std::vector<Index>>;

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// s_0^k of a vertex.
inline Index degenerate_vertex(const SSet& X, std::size_t k, Index v) {
  for (std::size_t l = 0; l < k; ++l) v = X.s(l, 0, v);
  return v;
}

/// Faces (d_0 x, ..., d_{m+1} x) of an (m+1)-simplex.
inline Tuple boundary_of(const SSet& X, std::size_t m, Index x) {
  Tuple t(m + 2);
  for (std::size_t i = 0; i <= m + 1; ++i) t[i] = X.d(m + 1, i, x);
  return t;
}

/// Faces of an (m+1)-simplex with the k-th omitted.
inline Tuple horn_of(const SSet& X, std::size_t m, std::size_t k, Index x) {
  Tuple t;
  t.reserve(m + 1);
  for (std::size_t i = 0; i <= m + 1; ++i)
    if (i != k) t.push_back(X.d(m + 1, i, x));
  return t;
}

namespace detail {

inline constexpr Index hole = std::numeric_limits<Index>::max();

inline std::vector<std::vector<std::vector<Index>>> face_fibres(const SSet& X, std::size_t m) {
  std::vector<std::vector<std::vector<Index>>> inv(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    inv[i].assign(X.size(m - 1), {});
    for (Index x = 0; x < X.size(m); ++x) inv[i][X.d(m, i, x)].push_back(x);
  }
  return inv;
}

/// Calls visit(t) for every (m+2)-tuple of m-simplices satisfying
/// d_i t_j = d_{j-1} t_i (i < j), skipping position `skip` (left as hole).
template <class Visit>
void enumerate_compatible(const SSet& X, std::size_t m, std::optional<std::size_t> skip, Visit&& visit,
                          Budget& budget) {
  const std::size_t len = m + 2;
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < len; ++j)
    if (!skip || *skip != j) order.push_back(j);
  Tuple t(len, hole);
  const std::size_t n = X.size(m);

  if (m == 0) {
    std::function<void(std::size_t)> rec0 = [&](std::size_t pos) {
      if (pos == order.size()) {
        visit(static_cast<const Tuple&>(t));
        return;
      }
      for (Index x = 0; x < n; ++x) {
        budget.charge();
        t[order[pos]] = x;
        rec0(pos + 1);
      }
      t[order[pos]] = hole;
    };
    rec0(0);
    return;
  }

  auto inv = face_fibres(X, m);
  std::vector<Index> all(n);
  for (Index x = 0; x < n; ++x) all[x] = x;

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      visit(static_cast<const Tuple&>(t));
      return;
    }
    const std::size_t j = order[pos];
    const std::vector<Index>* cands = &all;
    for (std::size_t i = 0; i < j; ++i) {
      if (t[i] == hole) continue;
      cands = &inv[i][X.d(m, j - 1, t[i])];
      break;
    }
    for (Index x : *cands) {
      budget.charge();
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i)
        if (t[i] != hole && X.d(m, i, x) != X.d(m, j - 1, t[i])) ok = false;
      for (std::size_t l = j + 1; l < len && ok; ++l)
        if (t[l] != hole && X.d(m, j, t[l]) != X.d(m, l - 1, x)) ok = false;
      if (!ok) continue;
      t[j] = x;
      rec(pos + 1);
      t[j] = hole;
    }
  };
  rec(0);
}

}  // namespace detail

/// All compatible boundary tuples (a_0, ..., a_{m+1}) of m-simplices.
inline std::vector<Tuple> boundary_tuples(const SSet& X, std::size_t m, Budget* budget = nullptr) {
  if (m > X.dim)
    throw Error(ErrorKind::DimensionOutOfRange,
                "boundary tuples of level " + std::to_string(m) + " need dim >= " + std::to_string(m));
  Budget local;
  Budget& b = budget ? *budget : local;
  std::vector<Tuple> out;
  detail::enumerate_compatible(X, m, std::nullopt, [&](const Tuple& t) { out.push_back(t); }, b);
  return out;
}

/// All horn tuples of m-simplices with position k omitted; each has m+1 entries.
inline std::vector<Tuple> horn_tuples(const SSet& X, std::size_t m, std::size_t k, Budget* budget = nullptr) {
  if (m > X.dim)
    throw Error(ErrorKind::DimensionOutOfRange,
                "horn tuples of level " + std::to_string(m) + " need dim >= " + std::to_string(m));
  if (k > m + 1) throw Error(ErrorKind::BadHornIndex, "horn index " + std::to_string(k) + " > " + std::to_string(m + 1));
  Budget local;
  Budget& b = budget ? *budget : local;
  std::vector<Tuple> out;
  detail::enumerate_compatible(X, m, k, [&](const Tuple& t) {
    Tuple h;
    h.reserve(m + 1);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (i != k) h.push_back(t[i]);
    out.push_back(std::move(h));
  }, b);
  return out;
}

struct MapStatus {
  bool injective = true;
  bool surjective = true;
  bool bijective() const noexcept { return injective && surjective; }
};

inline MapStatus alpha_status(const SSet& X, std::size_t m, Budget* budget = nullptr) {
  if (m + 1 > X.dim)
    throw Error(ErrorKind::DimensionOutOfRange, "alpha^" + std::to_string(m) + " needs level " + std::to_string(m + 1));
  std::unordered_map<Tuple, std::size_t, TupleHash> image;
  for (Index x = 0; x < X.size(m + 1); ++x) ++image[boundary_of(X, m, x)];
  MapStatus st;
  for (auto& [t, c] : image)
    if (c > 1) st.injective = false;
  auto all = boundary_tuples(X, m, budget);
  for (auto& t : all)
    if (!image.count(t)) {
      st.surjective = false;
      break;
    }
  return st;
}

struct HornStatus {
  std::size_t k = 0;
  bool surjective = true;
  bool injective = true;
  std::optional<Tuple> unfilled;
  bool strict() const noexcept { return surjective && injective; }
};

struct KanRow {
  std::size_t m = 0;
  std::vector<HornStatus> horns;
  bool kan() const {
    return std::all_of(horns.begin(), horns.end(), [](const HornStatus& h) { return h.surjective; });
  }
  bool strict() const {
    return std::all_of(horns.begin(), horns.end(), [](const HornStatus& h) { return h.strict(); });
  }
};

inline SSet coskeletal_extend(const SSet& X, std::size_t to_dim, Budget* budget = nullptr);

inline HornStatus horn_status(const SSet& X, std::size_t m, std::size_t k, Budget* budget = nullptr) {
  HornStatus st;
  st.k = k;
  std::unordered_map<Tuple, std::size_t, TupleHash> image;
  for (Index x = 0; x < X.size(m + 1); ++x) ++image[horn_of(X, m, k, x)];
  for (auto& [t, c] : image)
    if (c > 1) st.injective = false;
  for (auto& h : horn_tuples(X, m, k, budget))
    if (!image.count(h)) {
      st.surjective = false;
      st.unfilled = h;
      break;
    }
  return st;
}

/// Surjectivity and injectivity of every horn restriction alpha^{m,k}.
inline KanRow kan_status(const SSet& X, std::size_t m, Budget* budget = nullptr) {
  if (m + 1 > X.dim) {
    if (X.coskeletal_at && *X.coskeletal_at <= X.dim) return kan_status(coskeletal_extend(X, m + 1, budget), m, budget);
    throw Error(ErrorKind::DimensionOutOfRange,
                "kan_status at m=" + std::to_string(m) + " needs level " + std::to_string(m + 1));
  }
  KanRow row;
  row.m = m;
  for (std::size_t k = 0; k <= m + 1; ++k) row.horns.push_back(horn_status(X, m, k, budget));
  return row;
}

/// Equal horns force equal boundaries, for (m+1)-simplices.
inline bool minimal_at(const SSet& X, std::size_t m) {
  if (m + 1 > X.dim) throw Error(ErrorKind::DimensionOutOfRange, "minimality needs level " + std::to_string(m + 1));
  for (std::size_t k = 0; k <= m + 1; ++k) {
    std::unordered_map<Tuple, Index, TupleHash> first;
    for (Index x = 0; x < X.size(m + 1); ++x) {
      auto [it, fresh] = first.emplace(horn_of(X, m, k, x), x);
      if (!fresh && boundary_of(X, m, it->second) != boundary_of(X, m, x)) return false;
    }
  }
  return true;
}

struct Classification {
  std::size_t n = 0;
  std::optional<std::size_t> checked_max_m;  // alpha^m inspected for m <= this
  bool complete = false;                     // every condition with finite scope was in range
  bool n_coskeletal = true;
  bool weakly_n_coskeletal = true;
  bool n_minimal = true;
  bool kan_through = true;  // Kan in dims 1..n+1 (within range)
  bool n_kan_groupoid = true;
};

inline Classification classify(const SSet& X, std::size_t n, Budget* budget = nullptr) {
  Classification c;
  c.n = n;
  if (X.dim == 0) {
    c.complete = false;
    return c;
  }
  const std::size_t M = X.dim - 1;
  c.checked_max_m = M;
  c.complete = n + 1 <= M;
  std::vector<std::optional<MapStatus>> alpha(M + 1);
  auto get = [&](std::size_t m) -> const MapStatus& {
    if (!alpha[m]) alpha[m] = alpha_status(X, m, budget);
    return *alpha[m];
  };
  for (std::size_t m = n; m <= M; ++m)
    if (!get(m).bijective()) c.n_coskeletal = false;
  if (n <= M && !get(n).injective) c.weakly_n_coskeletal = false;
  for (std::size_t m = n + 1; m <= M; ++m)
    if (!get(m).bijective()) c.weakly_n_coskeletal = false;
  if (n <= M) c.n_minimal = minimal_at(X, n);
  for (std::size_t m = 1; m <= std::min(n + 1, M); ++m)
    if (!kan_status(X, m, budget).kan()) c.kan_through = false;
  c.n_kan_groupoid = c.weakly_n_coskeletal && c.kan_through && c.n_minimal;
  return c;
}

inline SSet truncate(const SSet& X, std::size_t k) {
  if (k >= X.dim) return X;
  SSet Y(k);
  for (std::size_t l = 0; l <= k; ++l) Y.ids[l] = X.ids[l];
  for (std::size_t l = 1; l <= k; ++l) Y.face[l] = X.face[l];
  for (std::size_t l = 0; l < k; ++l) Y.degen[l] = X.degen[l];
  Y.coskeletal_at = X.coskeletal_at;
  Y.base = X.base;
  Y.reindex();
  return Y;
}

inline std::string tuple_id(const SSet& X, std::size_t m, const Tuple& t) {
  std::string s = "<";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += X.ids[m][t[i]];
  }
  return s + ">";
}

namespace detail {

/// Appends level dim+1 made of the boundary tuples of the top level.
inline void push_tuple_level(SSet& X, Budget& budget) {
  const std::size_t N = X.dim;
  auto tuples = boundary_tuples(X, N, &budget);
  X.dim = N + 1;
  X.ids.emplace_back();
  X.face.emplace_back(N + 2);
  X.degen.emplace_back();
  X.degen[N].assign(N + 1, {});
  std::unordered_map<Tuple, Index, TupleHash> where;
  for (Index a = 0; a < tuples.size(); ++a) {
    X.ids[N + 1].push_back(tuple_id(X, N, tuples[a]));
    where.emplace(tuples[a], a);
  }
  for (std::size_t i = 0; i <= N + 1; ++i) {
    X.face[N + 1][i].resize(tuples.size());
    for (Index a = 0; a < tuples.size(); ++a) X.face[N + 1][i][a] = tuples[a][i];
  }
  for (std::size_t j = 0; j <= N; ++j) {
    X.degen[N][j].resize(X.size(N));
    for (Index x = 0; x < X.size(N); ++x) {
      Tuple t(N + 2);
      for (std::size_t i = 0; i <= N + 1; ++i) {
        if (i < j)
          t[i] = X.s(N - 1, j - 1, X.d(N, i, x));
        else if (i == j || i == j + 1)
          t[i] = x;
        else
          t[i] = X.s(N - 1, j, X.d(N, i - 1, x));
      }
      auto it = where.find(t);
      if (it == where.end())
        throw Error(ErrorKind::Invalid, "degenerate boundary of '" + X.ids[N][x] + "' is not compatible");
      X.degen[N][j][x] = it->second;
    }
  }
}

}  // namespace detail

/// Extends a coskeletal object by boundary tuples up to `to_dim`.
inline SSet coskeletal_extend(const SSet& X, std::size_t to_dim, Budget* budget) {
  if (to_dim <= X.dim) return truncate(X, to_dim);
  if (!X.coskeletal_at || *X.coskeletal_at > X.dim)
    throw Error(ErrorKind::NotCoskeletal, "coskeletal extension needs coskeletal_at <= dim");
  Budget local;
  Budget& b = budget ? *budget : local;
  SSet Y = X;
  while (Y.dim < to_dim) detail::push_tuple_level(Y, b);
  Y.reindex();
  return Y;
}

inline ValidationReport validate(const SSet& X) {
  ValidationReport r;
  auto bad = [&](std::string msg) { r.violations.push_back(std::move(msg)); };
  const std::size_t N = X.dim;
  if (X.ids.size() != N + 1 || X.face.size() != N + 1 || X.degen.size() != N + 1) {
    bad("shape: level arrays do not match dim " + std::to_string(N));
    return r;
  }
  for (std::size_t k = 0; k <= N; ++k) {
    std::unordered_map<std::string, Index> seen;
    for (Index x = 0; x < X.size(k); ++x)
      if (!seen.emplace(X.ids[k][x], x).second) bad("ids: duplicate '" + X.ids[k][x] + "' in level " + std::to_string(k));
  }
  bool shape_ok = true;
  for (std::size_t k = 1; k <= N; ++k) {
    if (X.face[k].size() != k + 1) {
      bad("shape: level " + std::to_string(k) + " needs " + std::to_string(k + 1) + " face maps");
      shape_ok = false;
      continue;
    }
    for (std::size_t i = 0; i <= k; ++i) {
      if (X.face[k][i].size() != X.size(k)) {
        bad("shape: face " + std::to_string(k) + "." + std::to_string(i) + " is not total");
        shape_ok = false;
        continue;
      }
      for (Index x = 0; x < X.size(k); ++x)
        if (X.face[k][i][x] >= X.size(k - 1)) {
          bad("shape: face " + std::to_string(k) + "." + std::to_string(i) + " out of range at '" + X.ids[k][x] + "'");
          shape_ok = false;
        }
    }
  }
  for (std::size_t k = 0; k < N; ++k) {
    if (X.degen[k].size() != k + 1) {
      bad("shape: level " + std::to_string(k) + " needs " + std::to_string(k + 1) + " degeneracy maps");
      shape_ok = false;
      continue;
    }
    for (std::size_t j = 0; j <= k; ++j) {
      if (X.degen[k][j].size() != X.size(k)) {
        bad("shape: degen " + std::to_string(k) + "." + std::to_string(j) + " is not total");
        shape_ok = false;
        continue;
      }
      for (Index x = 0; x < X.size(k); ++x)
        if (X.degen[k][j][x] >= X.size(k + 1)) {
          bad("shape: degen " + std::to_string(k) + "." + std::to_string(j) + " out of range at '" + X.ids[k][x] + "'");
          shape_ok = false;
        }
    }
  }
  if (X.base && *X.base >= X.size(0)) bad("base: not a 0-simplex");
  if (!shape_ok) return r;

  for (std::size_t k = 2; k <= N; ++k)
    for (std::size_t j = 1; j <= k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (Index x = 0; x < X.size(k); ++x)
          if (X.d(k - 1, i, X.d(k, j, x)) != X.d(k - 1, j - 1, X.d(k, i, x)))
            bad("dd: d" + std::to_string(i) + " d" + std::to_string(j) + " != d" + std::to_string(j - 1) + " d" +
                std::to_string(i) + " on '" + X.ids[k][x] + "' (level " + std::to_string(k) + ")");
  for (std::size_t k = 0; k + 2 <= N; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        for (Index x = 0; x < X.size(k); ++x)
          if (X.s(k + 1, i, X.s(k, j, x)) != X.s(k + 1, j + 1, X.s(k, i, x)))
            bad("ss: s" + std::to_string(i) + " s" + std::to_string(j) + " != s" + std::to_string(j + 1) + " s" +
                std::to_string(i) + " on '" + X.ids[k][x] + "' (level " + std::to_string(k) + ")");
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i <= k + 1; ++i)
        for (Index x = 0; x < X.size(k); ++x) {
          Index lhs = X.d(k + 1, i, X.s(k, j, x));
          Index rhs;
          if (i == j || i == j + 1)
            rhs = x;
          else if (i < j)
            rhs = X.s(k - 1, j - 1, X.d(k, i, x));
          else
            rhs = X.s(k - 1, j, X.d(k, i - 1, x));
          if (lhs != rhs)
            bad("ds: d" + std::to_string(i) + " s" + std::to_string(j) + " on '" + X.ids[k][x] + "' (level " +
                std::to_string(k) + ")");
        }
  if (r.ok() && X.coskeletal_at) {
    for (std::size_t m = *X.coskeletal_at; m + 1 <= N; ++m)
      if (!alpha_status(X, m).bijective())
        bad("coskeletal: alpha^" + std::to_string(m) + " is not bijective although coskeletal_at = " +
            std::to_string(*X.coskeletal_at));
  }
  return r;
}

/// Restriction to a sub-simplicial set given by per-level membership.
inline SSet restrict_to(const SSet& X, const std::vector<std::vector<bool>>& mask, SMap* inclusion = nullptr) {
  SSet Y(X.dim);
  std::vector<std::vector<Index>> renum(X.dim + 1);
  for (std::size_t k = 0; k <= X.dim; ++k) {
    renum[k].assign(X.size(k), detail::hole);
    for (Index x = 0; x < X.size(k); ++x)
      if (mask[k][x]) {
        renum[k][x] = Y.ids[k].size();
        Y.ids[k].push_back(X.ids[k][x]);
      }
  }
  for (std::size_t k = 0; k <= X.dim; ++k)
    for (Index x = 0; x < X.size(k); ++x) {
      if (!mask[k][x]) continue;
      if (k >= 1)
        for (std::size_t i = 0; i <= k; ++i) {
          Index y = renum[k - 1][X.d(k, i, x)];
          if (y == detail::hole)
            throw Error(ErrorKind::NotSubcomplex, "face " + std::to_string(i) + " of '" + X.ids[k][x] + "' leaves the subset");
          Y.face[k][i].push_back(y);
        }
      if (k < X.dim)
        for (std::size_t j = 0; j <= k; ++j) {
          Index y = renum[k + 1][X.s(k, j, x)];
          if (y == detail::hole)
            throw Error(ErrorKind::NotSubcomplex, "degeneracy " + std::to_string(j) + " of '" + X.ids[k][x] + "' leaves the subset");
          Y.degen[k][j].push_back(y);
        }
    }
  if (X.base && renum[0][*X.base] != detail::hole) Y.base = renum[0][*X.base];
  if (inclusion) {
    inclusion->assign(X.dim + 1, {});
    for (std::size_t k = 0; k <= X.dim; ++k)
      for (Index x = 0; x < X.size(k); ++x)
        if (mask[k][x]) (*inclusion)[k].push_back(x);
  }
  Y.reindex();
  return Y;
}

/// True when f commutes with every face and degeneracy of the common range.
inline bool is_simplicial(const SSet& X, const SSet& Y, const SMap& f) {
  const std::size_t N = std::min(X.dim, Y.dim);
  if (f.size() < N + 1) return false;
  for (std::size_t k = 0; k <= N; ++k) {
    if (f[k].size() != X.size(k)) return false;
    for (Index x = 0; x < X.size(k); ++x) {
      if (f[k][x] >= Y.size(k)) return false;
      if (k >= 1)
        for (std::size_t i = 0; i <= k; ++i)
          if (f[k - 1][X.d(k, i, x)] != Y.d(k, i, f[k][x])) return false;
      if (k < N)
        for (std::size_t j = 0; j <= k; ++j)
          if (f[k + 1][X.s(k, j, x)] != Y.s(k, j, f[k][x])) return false;
    }
  }
  return true;
}

inline bool is_levelwise_bijective(const SSet& X, const SSet& Y, const SMap& f) {
  const std::size_t N = std::min(X.dim, Y.dim);
  for (std::size_t k = 0; k <= N; ++k) {
    if (X.size(k) != Y.size(k) || f[k].size() != X.size(k)) return false;
    std::vector<bool> hit(Y.size(k), false);
    for (Index y : f[k]) {
      if (y >= hit.size() || hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

/// Extends a map given on levels <= from by matching boundaries, which is
/// unique when alpha^m of Y is injective in the extended range.
inline std::optional<SMap> extend_by_boundary(const SSet& X, const SSet& Y, SMap f, std::size_t from) {
  const std::size_t N = std::min(X.dim, Y.dim);
  f.resize(N + 1);
  for (std::size_t k = from + 1; k <= N; ++k) {
    std::unordered_map<Tuple, Index, TupleHash> by_boundary;
    for (Index y = 0; y < Y.size(k); ++y)
      if (!by_boundary.emplace(boundary_of(Y, k - 1, y), y).second) return std::nullopt;
    f[k].assign(X.size(k), 0);
    for (Index x = 0; x < X.size(k); ++x) {
      Tuple t(k + 1);
      for (std::size_t i = 0; i <= k; ++i) t[i] = f[k - 1][X.d(k, i, x)];
      auto it = by_boundary.find(t);
      if (it == by_boundary.end()) return std::nullopt;
      f[k][x] = it->second;
    }
  }
  return f;
}

/// Quotient of level n+1 by equal boundaries, then (n+1)-coskeletal above.
inline SSet csq_prime(const SSet& X, std::size_t n, Budget* budget = nullptr) {
  if (n + 1 > X.dim)
    throw Error(ErrorKind::DimensionOutOfRange, "csq' at n=" + std::to_string(n) + " needs level " + std::to_string(n + 1));
  SSet Y(n + 1);
  for (std::size_t k = 0; k <= n; ++k) Y.ids[k] = X.ids[k];
  for (std::size_t k = 1; k <= n; ++k) Y.face[k] = X.face[k];
  for (std::size_t k = 0; k < n; ++k) Y.degen[k] = X.degen[k];

  std::unordered_map<Tuple, Index, TupleHash> cls;
  std::vector<Index> class_of(X.size(n + 1));
  std::vector<Index> rep;
  for (Index x = 0; x < X.size(n + 1); ++x) {
    auto [it, fresh] = cls.emplace(boundary_of(X, n, x), rep.size());
    if (fresh) rep.push_back(x);
    else if (X.ids[n + 1][x] < X.ids[n + 1][rep[it->second]]) rep[it->second] = x;
    class_of[x] = it->second;
  }
  for (Index c = 0; c < rep.size(); ++c) Y.ids[n + 1].push_back(X.ids[n + 1][rep[c]]);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    Y.face[n + 1][i].resize(rep.size());
    for (Index c = 0; c < rep.size(); ++c) Y.face[n + 1][i][c] = X.d(n + 1, i, rep[c]);
  }
  for (std::size_t j = 0; j <= n; ++j) {
    Y.degen[n][j].resize(X.size(n));
    for (Index x = 0; x < X.size(n); ++x) Y.degen[n][j][x] = class_of[X.s(n, j, x)];
  }
  Y.coskeletal_at = n + 1;
  Y.base = X.base;
  Y.reindex();
  return coskeletal_extend(Y, X.dim, budget);
}

/// The canonical map X -> csq'(X, n).
inline SMap csq_prime_unit(const SSet& X, const SSet& Y, std::size_t n) {
  SMap f(X.dim + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    f[k].resize(X.size(k));
    for (Index x = 0; x < X.size(k); ++x) f[k][x] = x;
  }
  std::unordered_map<Tuple, Index, TupleHash> by_boundary;
  for (Index c = 0; c < Y.size(n + 1); ++c) by_boundary.emplace(boundary_of(Y, n, c), c);
  f[n + 1].resize(X.size(n + 1));
  for (Index x = 0; x < X.size(n + 1); ++x) f[n + 1][x] = by_boundary.at(boundary_of(X, n, x));
  auto ext = extend_by_boundary(X, Y, f, n + 1);
  if (!ext) throw Error(ErrorKind::Invalid, "csq' unit does not extend");
  return *ext;
}

/// Decalage: level n is X_{n+1} with the last face and degeneracy dropped.
inline SSet shift(const SSet& X) {
  if (X.dim < 1) throw Error(ErrorKind::DimensionOutOfRange, "shift needs dim >= 1");
  SSet D(X.dim - 1);
  for (std::size_t n = 0; n <= D.dim; ++n) D.ids[n] = X.ids[n + 1];
  for (std::size_t n = 1; n <= D.dim; ++n)
    for (std::size_t i = 0; i <= n; ++i) D.face[n][i] = X.face[n + 1][i];
  for (std::size_t n = 0; n < D.dim; ++n)
    for (std::size_t j = 0; j <= n; ++j) D.degen[n][j] = X.degen[n + 1][j];
  D.reindex();
  return D;
}

struct ShiftDeformationReport {
  std::vector<std::string> violations;
  std::size_t checked_levels = 0;
  bool ok() const noexcept { return violations.empty(); }
};

/// H(t)_n = s_n ... s_t d_t ... d_n on level n of the decalage, 0 <= t <= n+1.
inline Index shift_homotopy(const SSet& X, std::size_t n, std::size_t t, Index x) {
  std::size_t lvl = n + 1;
  for (std::size_t i = n + 1; i-- > t;) x = X.d(lvl--, i, x);
  for (std::size_t j = t; j <= n; ++j) x = X.s(lvl++, j, x);
  return x;
}

/// Checks that H(t) is a combinatorial homotopy from beta.alpha to the identity
/// and that alpha.beta is the identity on the vertices.
inline ShiftDeformationReport shift_deformation_check(const SSet& X) {
  ShiftDeformationReport r;
  if (X.dim < 1) {
    r.violations.push_back("shift needs dim >= 1");
    return r;
  }
  const std::size_t top = X.dim - 1;
  r.checked_levels = top + 1;
  auto alpha = [&](std::size_t n, Index x) {
    for (std::size_t l = n + 1; l > 0; --l) x = X.d(l, 0, x);
    return x;
  };
  auto beta = [&](std::size_t n, Index v) {
    for (std::size_t l = 0; l <= n; ++l) v = X.s(l, 0, v);
    return v;
  };
  for (Index v = 0; v < X.size(0); ++v)
    for (std::size_t n = 0; n <= top; ++n)
      if (alpha(n, beta(n, v)) != v) r.violations.push_back("alpha.beta != id at vertex '" + X.ids[0][v] + "'");
  for (std::size_t n = 0; n <= top; ++n)
    for (Index x = 0; x < X.size(n + 1); ++x) {
      const std::string& nm = X.ids[n + 1][x];
      if (shift_homotopy(X, n, n + 1, x) != x) r.violations.push_back("H(n+1) != id on '" + nm + "'");
      if (shift_homotopy(X, n, 0, x) != beta(n, alpha(n, x))) r.violations.push_back("H(0) != beta.alpha on '" + nm + "'");
      for (std::size_t t = 0; t <= n + 1; ++t) {
        Index h = shift_homotopy(X, n, t, x);
        if (n >= 1)
          for (std::size_t i = 0; i <= n; ++i) {
            Index lhs = X.d(n + 1, i, h);
            Index dx = X.d(n + 1, i, x);
            Index rhs = t <= i ? shift_homotopy(X, n - 1, t, dx) : shift_homotopy(X, n - 1, t - 1, dx);
            if (lhs != rhs)
              r.violations.push_back("face d" + std::to_string(i) + " vs H(" + std::to_string(t) + ") on '" + nm + "'");
          }
        if (n < top)
          for (std::size_t j = 0; j <= n; ++j) {
            Index lhs = X.s(n + 1, j, h);
            Index sx = X.s(n + 1, j, x);
            Index rhs = t <= j ? shift_homotopy(X, n + 1, t, sx) : shift_homotopy(X, n + 1, t + 1, sx);
            if (lhs != rhs)
              r.violations.push_back("degeneracy s" + std::to_string(j) + " vs H(" + std::to_string(t) + ") on '" + nm + "'");
          }
      }
    }
  return r;
}

enum class LoopVariant { plain, reduced };

/// Loops at a base vertex as a sub-simplicial set of the decalage.
inline SSet loop_space(const SSet& X, LoopVariant variant, std::optional<Index> base = std::nullopt) {
  if (X.dim < 2) throw Error(ErrorKind::DimensionOutOfRange, "loop space needs dim >= 2");
  const Index a = base ? *base : X.base_point();
  if (a >= X.size(0)) throw Error(ErrorKind::Invalid, "base is not a 0-simplex");
  SSet D = shift(X);
  std::vector<std::vector<bool>> mask(D.dim + 1);
  for (std::size_t n = 0; n <= D.dim; ++n) {
    const Index pt = degenerate_vertex(X, n, a);
    mask[n].assign(D.size(n), false);
    for (Index x = 0; x < D.size(n); ++x) mask[n][x] = X.d(n + 1, n + 1, x) == pt;
  }
  const Index unit = X.s(0, 0, a);
  if (variant == LoopVariant::reduced) {
    for (Index x = 0; x < D.size(0); ++x) mask[0][x] = mask[0][x] && x == unit;
    for (std::size_t n = 1; n <= D.dim; ++n)
      for (Index x = 0; x < D.size(n); ++x) {
        if (!mask[n][x]) continue;
        for (std::size_t i = 0; i <= n; ++i)
          if (!mask[n - 1][D.d(n, i, x)]) {
            mask[n][x] = false;
            break;
          }
      }
  }
  SSet L = restrict_to(D, mask);
  L.base = L.find(0, X.ids[1][unit]);
  return L;
}

/// Counts of simplices outside the image of every degeneracy.
inline std::vector<std::size_t> nondegenerate_counts(const SSet& X) {
  std::vector<std::size_t> out(X.dim + 1, 0);
  for (std::size_t k = 0; k <= X.dim; ++k) {
    std::vector<bool> degen(X.size(k), false);
    if (k >= 1)
      for (std::size_t j = 0; j < k; ++j)
        for (Index y : X.degen[k - 1][j]) degen[y] = true;
    out[k] = static_cast<std::size_t>(std::count(degen.begin(), degen.end(), false));
  }
  return out;
}

inline std::vector<bool> degenerate_mask(const SSet& X, std::size_t k) {
  std::vector<bool> degen(X.size(k), false);
  if (k >= 1)
    for (std::size_t j = 0; j < k; ++j)
      for (Index y : X.degen[k - 1][j]) degen[y] = true;
  return degen;
}

}  // namespace kanforge
