#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <unordered_set>
#include <vector>

#include "kanforge/sset.hpp"

namespace kanforge {

/// A finite presheaf seen as sets indexed by nodes plus generating arrows.
///
/// Nodes are ordered so that lowering arrows (faces) point to earlier nodes
/// and raising arrows (degeneracies) point to later ones. Two views with the
/// same arrow list describe presheaves on the same shape.
struct PresheafView {
  struct Arrow {
    std::size_t from = 0;
    std::size_t to = 0;
    bool raising = false;
    const std::vector<Index>* map = nullptr;
  };
  std::vector<std::size_t> sizes;
  std::vector<Arrow> arrows;
};

inline PresheafView view_of(const SSet& X, std::size_t N) {
  if (N > X.dim) throw Error(ErrorKind::DimensionOutOfRange, "view beyond dim");
  PresheafView v;
  for (std::size_t k = 0; k <= N; ++k) v.sizes.push_back(X.size(k));
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t i = 0; i <= k; ++i) v.arrows.push_back({k, k - 1, false, &X.face[k][i]});
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j <= k; ++j) v.arrows.push_back({k, k + 1, true, &X.degen[k][j]});
  return v;
}

struct HomOptions {
  bool injective = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  Budget* budget = nullptr;
};

/// Depth-first enumeration of natural maps X -> Y; visit returns false to stop.
///
/// Nodes are filled in order. Within a node, elements in the image of a
/// raising arrow are forced and set first; every other element ranges over
/// targets whose lowering images already agree. As soon as all lowering
/// images of a later element are known, some target with that boundary must
/// exist, which prunes long before the later node is reached.
inline std::size_t enumerate_homs(const PresheafView& X, const PresheafView& Y,
                                  const std::function<bool(const SMap&)>& visit, HomOptions opt = {}) {
  const std::size_t nodes = X.sizes.size();
  if (Y.sizes.size() != nodes || X.arrows.size() != Y.arrows.size())
    throw Error(ErrorKind::Invalid, "presheaf shapes differ");
  Budget local;
  Budget& budget = opt.budget ? *opt.budget : local;

  struct Forced {
    std::size_t arrow;
    Index source;
  };
  std::vector<std::vector<std::optional<Forced>>> forced(nodes);
  std::vector<std::vector<Index>> free_elems(nodes), forced_elems(nodes);
  std::vector<std::vector<std::size_t>> lowering(nodes), raising_in(nodes);
  for (std::size_t v = 0; v < nodes; ++v) forced[v].assign(X.sizes[v], std::nullopt);
  for (std::size_t a = 0; a < X.arrows.size(); ++a) {
    const auto& ar = X.arrows[a];
    if (ar.raising) {
      if (ar.to <= ar.from) throw Error(ErrorKind::Invalid, "raising arrow must point to a later node");
      raising_in[ar.to].push_back(a);
      for (Index z = 0; z < X.sizes[ar.from]; ++z) {
        Index x = (*ar.map)[z];
        if (!forced[ar.to][x]) forced[ar.to][x] = Forced{a, z};
      }
    } else {
      if (ar.to >= ar.from) throw Error(ErrorKind::Invalid, "lowering arrow must point to an earlier node");
      lowering[ar.from].push_back(a);
    }
  }
  // stage of an element within its node: 0 for forced, 1.. for free
  std::vector<std::vector<std::size_t>> stage_of(nodes);
  for (std::size_t v = 0; v < nodes; ++v) {
    stage_of[v].assign(X.sizes[v], 0);
    for (Index x = 0; x < X.sizes[v]; ++x) {
      if (forced[v][x]) {
        forced_elems[v].push_back(x);
      } else {
        free_elems[v].push_back(x);
        stage_of[v][x] = free_elems[v].size();
      }
    }
  }

  // fibres of the first lowering arrow in Y
  std::vector<std::vector<std::vector<Index>>> fibre(nodes);
  std::vector<std::vector<Index>> everything(nodes);
  for (std::size_t v = 0; v < nodes; ++v) {
    everything[v].resize(Y.sizes[v]);
    for (Index y = 0; y < Y.sizes[v]; ++y) everything[v][y] = y;
    if (!lowering[v].empty()) {
      const auto& ar = Y.arrows[lowering[v][0]];
      fibre[v].assign(Y.sizes[ar.to], {});
      for (Index y = 0; y < Y.sizes[v]; ++y) fibre[v][(*ar.map)[y]].push_back(y);
    }
  }

  // boundaries realized in Y, and when each boundary of X becomes known
  std::vector<std::unordered_set<Tuple, TupleHash>> boundaries(nodes);
  struct Pending {
    std::size_t node;
    Index elem;
  };
  std::vector<std::vector<std::vector<Pending>>> trigger(nodes);
  for (std::size_t v = 0; v < nodes; ++v) trigger[v].resize(free_elems[v].size() + 1);
  for (std::size_t u = 0; u < nodes; ++u) {
    if (lowering[u].size() < 2) continue;
    for (Index y = 0; y < Y.sizes[u]; ++y) {
      Tuple t;
      for (std::size_t a : lowering[u]) t.push_back((*Y.arrows[a].map)[y]);
      boundaries[u].insert(std::move(t));
    }
    for (Index w = 0; w < X.sizes[u]; ++w) {
      if (forced[u][w]) continue;
      std::pair<std::size_t, std::size_t> last{0, 0};
      for (std::size_t a : lowering[u]) {
        std::size_t v = X.arrows[a].to;
        last = std::max(last, {v, stage_of[v][(*X.arrows[a].map)[w]]});
      }
      trigger[last.first][last.second].push_back({u, w});
    }
  }

  SMap f(nodes);
  std::vector<std::vector<char>> used(nodes);
  for (std::size_t v = 0; v < nodes; ++v) {
    f[v].assign(X.sizes[v], 0);
    used[v].assign(Y.sizes[v], 0);
  }
  auto boundaries_exist = [&](std::size_t v, std::size_t stage) {
    Tuple t;
    for (const auto& p : trigger[v][stage]) {
      t.clear();
      for (std::size_t a : lowering[p.node]) t.push_back(f[X.arrows[a].to][(*X.arrows[a].map)[p.elem]]);
      if (!boundaries[p.node].count(t)) return false;
    }
    return true;
  };
  std::size_t found = 0;
  bool stop = false;

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t stage) {
    if (stop) return;
    if (v == nodes) {
      ++found;
      if (!visit(f) || found >= opt.limit) stop = true;
      return;
    }
    if (stage == 0) {
      for (Index x : forced_elems[v]) {
        const auto& fc = *forced[v][x];
        f[v][x] = (*Y.arrows[fc.arrow].map)[f[X.arrows[fc.arrow].from][fc.source]];
      }
      budget.charge();
      for (std::size_t a : lowering[v])
        for (Index x : forced_elems[v])
          if ((*Y.arrows[a].map)[f[v][x]] != f[X.arrows[a].to][(*X.arrows[a].map)[x]]) return;
      if (!boundaries_exist(v, 0)) return;
      rec(v, 1);
      return;
    }
    if (stage == free_elems[v].size() + 1) {
      for (std::size_t a : raising_in[v]) {
        std::size_t u = X.arrows[a].from;
        for (Index z = 0; z < X.sizes[u]; ++z)
          if (f[v][(*X.arrows[a].map)[z]] != (*Y.arrows[a].map)[f[u][z]]) return;
      }
      if (opt.injective) {
        std::vector<char> seen(Y.sizes[v], 0);
        for (Index x = 0; x < X.sizes[v]; ++x) {
          if (seen[f[v][x]]) return;
          seen[f[v][x]] = 1;
        }
      }
      rec(v + 1, 0);
      return;
    }
    const Index x = free_elems[v][stage - 1];
    const std::vector<Index>* cands = &everything[v];
    if (!lowering[v].empty()) {
      const auto& ar = X.arrows[lowering[v][0]];
      cands = &fibre[v][f[ar.to][(*ar.map)[x]]];
    }
    for (Index y : *cands) {
      budget.charge();
      if (opt.injective && used[v][y]) continue;
      bool ok = true;
      for (std::size_t a : lowering[v]) {
        const auto& ax = X.arrows[a];
        if ((*Y.arrows[a].map)[y] != f[ax.to][(*ax.map)[x]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      f[v][x] = y;
      if (!boundaries_exist(v, stage)) continue;
      used[v][y] = 1;
      rec(v, stage + 1);
      used[v][y] = 0;
      if (stop) return;
    }
  };
  rec(0, 0);
  return found;
}

/// Truncation level for maps X -> Y: enough when X is generated below it or
/// Y is coskeletal at or below it.
inline std::size_t hom_level(const SSet& X, const SSet& Y) {
  if (Y.dim >= X.dim) return X.dim;
  if (Y.coskeletal_at && *Y.coskeletal_at <= Y.dim) return Y.dim;
  throw Error(ErrorKind::DimensionOutOfRange, "target neither coskeletal nor as high as the source");
}

/// All simplicial maps X -> Y in deterministic order.
inline std::vector<SMap> hom_sset(const SSet& X, const SSet& Y, Budget* budget = nullptr) {
  const std::size_t N = hom_level(X, Y);
  std::vector<SMap> out;
  HomOptions opt;
  opt.budget = budget;
  enumerate_homs(view_of(X, N), view_of(Y, N), [&](const SMap& f) {
    out.push_back(f);
    return true;
  }, opt);
  return out;
}

inline std::size_t count_hom_sset(const SSet& X, const SSet& Y, Budget* budget = nullptr) {
  const std::size_t N = hom_level(X, Y);
  HomOptions opt;
  opt.budget = budget;
  return enumerate_homs(view_of(X, N), view_of(Y, N), [](const SMap&) { return true; }, opt);
}

/// A levelwise bijective simplicial map X -> Y over the common range, if any.
inline std::optional<SMap> find_isomorphism(const SSet& X, const SSet& Y, Budget* budget = nullptr) {
  const std::size_t N = std::min(X.dim, Y.dim);
  for (std::size_t k = 0; k <= N; ++k)
    if (X.size(k) != Y.size(k)) return std::nullopt;
  std::optional<SMap> hit;
  HomOptions opt;
  opt.injective = true;
  opt.limit = 1;
  opt.budget = budget;
  enumerate_homs(view_of(X, N), view_of(Y, N), [&](const SMap& f) {
    hit = f;
    return false;
  }, opt);
  return hit;
}

inline SMap compose(const SMap& g, const SMap& f) {
  SMap h(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    h[k].resize(f[k].size());
    for (Index x = 0; x < f[k].size(); ++x) h[k][x] = g[k][f[k][x]];
  }
  return h;
}

}  // namespace kanforge
