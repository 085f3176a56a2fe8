#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kanforge/bisimplicial.hpp"
#include "kanforge/monoidal.hpp"

namespace kanforge {

using json = nlohmann::json;

/// Kinds of interchange document, told apart by their keys.
enum class DocKind { SSet, BiSet, Group, Category, Monoidal, Result };

namespace io {

inline constexpr int format_version = 1;

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

inline void check_keys(const json& j, const std::set<std::string>& required, const std::set<std::string>& optional,
                       const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  for (auto& [k, v] : j.items())
    if (!required.count(k) && !optional.count(k)) fail(where + ": unknown key '" + k + "'");
  for (auto& k : required)
    if (!j.contains(k)) fail(where + ": missing key '" + k + "'");
}

inline void check_format(const json& j) {
  if (!j.contains("format")) fail("missing key 'format'");
  if (!j["format"].is_number_integer() || j["format"].get<int>() != format_version)
    fail("unsupported format (expected " + std::to_string(format_version) + ")");
}

inline std::size_t natural(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) fail(what + ": expected a natural number");
  return j.get<std::size_t>();
}

inline std::string str(const json& j, const std::string& what) {
  if (!j.is_string()) fail(what + ": expected a string");
  return j.get<std::string>();
}

inline std::vector<std::string> strings(const json& j, const std::string& what) {
  if (!j.is_array()) fail(what + ": expected an array");
  std::vector<std::string> out;
  for (auto& e : j) out.push_back(str(e, what));
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() != out.size()) fail(what + ": duplicate id");
  return out;
}

/// id -> index over one list of ids.
class Names {
 public:
  explicit Names(const std::vector<std::string>& ids) {
    for (Index i = 0; i < ids.size(); ++i) at_.emplace(ids[i], i);
  }
  Index operator()(const json& j, const std::string& what) const {
    std::string s = str(j, what);
    auto it = at_.find(s);
    if (it == at_.end()) fail(what + ": unknown id '" + s + "'");
    return it->second;
  }

 private:
  std::unordered_map<std::string, Index> at_;
};

inline std::vector<Index> aligned(const json& j, std::size_t n, const Names& target, const std::string& what) {
  if (!j.is_array() || j.size() != n) fail(what + ": expected an array of " + std::to_string(n) + " ids");
  std::vector<Index> out;
  for (auto& e : j) out.push_back(target(e, what));
  return out;
}

inline json ids_of(const std::vector<Index>& m, const std::vector<std::string>& names) {
  json a = json::array();
  for (Index x : m) a.push_back(names[x]);
  return a;
}

}  // namespace io

inline DocKind detect_kind(const json& j) {
  if (!j.is_object()) io::fail("document is not a JSON object");
  if (j.contains("P")) return DocKind::BiSet;
  if (j.contains("levels")) return DocKind::SSet;
  if (j.contains("elements")) return DocKind::Group;
  if (j.contains("tensor")) return DocKind::Monoidal;
  if (j.contains("objects")) return DocKind::Category;
  if (j.contains("count")) return DocKind::Result;
  io::fail("cannot tell the document kind from its keys");
}

inline const char* kind_name(DocKind k) {
  switch (k) {
    case DocKind::SSet: return "sset";
    case DocKind::BiSet: return "bisimplicial";
    case DocKind::Group: return "group";
    case DocKind::Category: return "category";
    case DocKind::Monoidal: return "monoidal";
    case DocKind::Result: return "result";
  }
  return "?";
}

// ------------------------------------------------------------------- SSet

inline json to_json(const SSet& X) {
  json j;
  j["format"] = io::format_version;
  j["dim"] = X.dim;
  j["levels"] = X.ids;
  json face = json::object(), degen = json::object();
  for (std::size_t k = 1; k <= X.dim; ++k)
    for (std::size_t i = 0; i <= k; ++i) face[std::to_string(k) + "." + std::to_string(i)] = io::ids_of(X.face[k][i], X.ids[k - 1]);
  for (std::size_t k = 0; k < X.dim; ++k)
    for (std::size_t i = 0; i <= k; ++i) degen[std::to_string(k) + "." + std::to_string(i)] = io::ids_of(X.degen[k][i], X.ids[k + 1]);
  j["face"] = face;
  j["degen"] = degen;
  if (X.coskeletal_at) j["coskeletal_at"] = *X.coskeletal_at;
  if (X.base) j["base"] = X.ids[0][*X.base];
  return j;
}

inline SSet sset_from_json(const json& j) {
  io::check_keys(j, {"format", "dim", "levels", "face", "degen"}, {"coskeletal_at", "base"}, "sset");
  io::check_format(j);
  SSet X(io::natural(j["dim"], "dim"));
  if (!j["levels"].is_array() || j["levels"].size() != X.dim + 1) io::fail("levels: expected dim+1 arrays");
  for (std::size_t k = 0; k <= X.dim; ++k) X.ids[k] = io::strings(j["levels"][k], "levels[" + std::to_string(k) + "]");
  auto read_maps = [&](const json& m, const std::string& what, bool up) {
    if (!m.is_object()) io::fail(what + ": expected an object");
    std::size_t expected = 0;
    for (std::size_t k = up ? 0 : 1; k + (up ? 1 : 0) <= X.dim; ++k)
      for (std::size_t i = 0; i <= k; ++i) {
        std::string key = std::to_string(k) + "." + std::to_string(i);
        if (!m.contains(key)) io::fail(what + ": missing '" + key + "'");
        ++expected;
        io::Names target(X.ids[up ? k + 1 : k - 1]);
        (up ? X.degen : X.face)[k][i] = io::aligned(m[key], X.size(k), target, what + "." + key);
      }
    if (m.size() != expected) io::fail(what + ": unexpected map keys");
  };
  read_maps(j["face"], "face", false);
  read_maps(j["degen"], "degen", true);
  if (j.contains("coskeletal_at")) X.coskeletal_at = io::natural(j["coskeletal_at"], "coskeletal_at");
  if (j.contains("base")) X.base = io::Names(X.ids[0])(j["base"], "base");
  X.reindex();
  return X;
}

// ----------------------------------------------------------------- BiSet

inline json to_json(const BiSet& X) {
  json j;
  j["format"] = io::format_version;
  j["P"] = X.P;
  j["Q"] = X.Q;
  if (X.total) j["total"] = *X.total;
  j["levels"] = X.ids;
  json hf = json::object(), vf = json::object(), hd = json::object(), vd = json::object();
  auto key = [](std::size_t p, std::size_t q, std::size_t i) {
    return std::to_string(p) + "." + std::to_string(q) + "." + std::to_string(i);
  };
  for (auto [p, q] : X.nodes()) {
    for (std::size_t i = 0; i < X.hface[p][q].size(); ++i) hf[key(p, q, i)] = io::ids_of(X.hface[p][q][i], X.ids[p - 1][q]);
    for (std::size_t i = 0; i < X.vface[p][q].size(); ++i) vf[key(p, q, i)] = io::ids_of(X.vface[p][q][i], X.ids[p][q - 1]);
    for (std::size_t i = 0; i < X.hdegen[p][q].size(); ++i) hd[key(p, q, i)] = io::ids_of(X.hdegen[p][q][i], X.ids[p + 1][q]);
    for (std::size_t i = 0; i < X.vdegen[p][q].size(); ++i) vd[key(p, q, i)] = io::ids_of(X.vdegen[p][q][i], X.ids[p][q + 1]);
  }
  j["hface"] = hf;
  j["vface"] = vf;
  j["hdegen"] = hd;
  j["vdegen"] = vd;
  return j;
}

inline BiSet biset_from_json(const json& j) {
  io::check_keys(j, {"format", "P", "Q", "levels", "hface", "vface", "hdegen", "vdegen"}, {"total"}, "bisimplicial");
  io::check_format(j);
  std::optional<std::size_t> total;
  if (j.contains("total")) total = io::natural(j["total"], "total");
  BiSet X(io::natural(j["P"], "P"), io::natural(j["Q"], "Q"), total);
  const json& lv = j["levels"];
  if (!lv.is_array() || lv.size() != X.P + 1) io::fail("levels: expected P+1 rows");
  for (std::size_t p = 0; p <= X.P; ++p) {
    if (!lv[p].is_array() || lv[p].size() != X.Q + 1) io::fail("levels: expected Q+1 entries per row");
    for (std::size_t q = 0; q <= X.Q; ++q) {
      X.ids[p][q] = io::strings(lv[p][q], "levels[" + std::to_string(p) + "][" + std::to_string(q) + "]");
      if (!X.in_shape(p, q) && !X.ids[p][q].empty()) io::fail("levels: node outside the shape is not empty");
    }
  }
  auto read = [&](const std::string& name, auto& maps, int dp, int dq) {
    const json& m = j[name];
    if (!m.is_object()) io::fail(name + ": expected an object");
    std::size_t expected = 0;
    for (auto [p, q] : X.nodes())
      for (std::size_t i = 0; i < maps[p][q].size(); ++i) {
        std::string key = std::to_string(p) + "." + std::to_string(q) + "." + std::to_string(i);
        if (!m.contains(key)) io::fail(name + ": missing '" + key + "'");
        ++expected;
        io::Names target(X.ids[p + dp][q + dq]);
        maps[p][q][i] = io::aligned(m[key], X.size(p, q), target, name + "." + key);
      }
    if (m.size() != expected) io::fail(name + ": unexpected map keys");
  };
  read("hface", X.hface, -1, 0);
  read("vface", X.vface, 0, -1);
  read("hdegen", X.hdegen, 1, 0);
  read("vdegen", X.vdegen, 0, 1);
  return X;
}

// ----------------------------------------------------------------- groups

inline json to_json(const FiniteGroup& G) {
  json j;
  j["format"] = io::format_version;
  j["elements"] = G.names;
  j["identity"] = G.names[G.identity];
  json rows = json::array();
  for (auto& r : G.mul) rows.push_back(io::ids_of(r, G.names));
  j["mul"] = rows;
  return j;
}

inline FiniteGroup group_from_json(const json& j) {
  io::check_keys(j, {"format", "elements", "mul", "identity"}, {}, "group");
  io::check_format(j);
  FiniteGroup G;
  G.names = io::strings(j["elements"], "elements");
  io::Names at(G.names);
  G.identity = at(j["identity"], "identity");
  if (!j["mul"].is_array() || j["mul"].size() != G.size()) io::fail("mul: expected one row per element");
  for (auto& row : j["mul"]) G.mul.push_back(io::aligned(row, G.size(), at, "mul"));
  return G;
}

// ------------------------------------------------ categories and monoidal

namespace io {

inline void category_into(json& j, const FinCategory& C) {
  j["objects"] = C.objects;
  json ms = json::array();
  for (Index f = 0; f < C.num_morphisms(); ++f)
    ms.push_back({{"id", C.morphisms[f]}, {"src", C.objects[C.src[f]]}, {"tgt", C.objects[C.tgt[f]]}});
  j["morphisms"] = ms;
  json ids = json::object();
  for (Index a = 0; a < C.num_objects(); ++a) ids[C.objects[a]] = C.morphisms[C.identity[a]];
  j["identity"] = ids;
  json comp = json::array();
  for (Index g = 0; g < C.num_morphisms(); ++g)
    for (Index f = 0; f < C.num_morphisms(); ++f)
      if (C.comp[g][f] != FinCategory::nocomp) comp.push_back({C.morphisms[g], C.morphisms[f], C.morphisms[C.comp[g][f]]});
  j["comp"] = comp;
}

/// comp entries are [g, f, g o f]; identities are derived when absent.
inline FinCategory category_from(const json& j) {
  FinCategory C;
  C.objects = strings(j["objects"], "objects");
  Names obj(C.objects);
  if (!j["morphisms"].is_array()) fail("morphisms: expected an array");
  for (auto& m : j["morphisms"]) {
    check_keys(m, {"id", "src", "tgt"}, {}, "morphism");
    C.morphisms.push_back(str(m["id"], "morphism id"));
    C.src.push_back(obj(m["src"], "morphism src"));
    C.tgt.push_back(obj(m["tgt"], "morphism tgt"));
  }
  if (std::set<std::string>(C.morphisms.begin(), C.morphisms.end()).size() != C.morphisms.size())
    fail("morphisms: duplicate id");
  Names mor(C.morphisms);
  C.comp.assign(C.num_morphisms(), std::vector<Index>(C.num_morphisms(), FinCategory::nocomp));
  if (!j["comp"].is_array()) fail("comp: expected an array");
  for (auto& e : j["comp"]) {
    if (!e.is_array() || e.size() != 3) fail("comp: entries are [g, f, g o f]");
    Index g = mor(e[0], "comp"), f = mor(e[1], "comp");
    if (C.comp[g][f] != FinCategory::nocomp) fail("comp: duplicate entry");
    C.comp[g][f] = mor(e[2], "comp");
  }
  if (j.contains("identity")) {
    if (!j["identity"].is_object() || j["identity"].size() != C.num_objects()) fail("identity: expected one entry per object");
    for (auto& o : C.objects) {
      if (!j["identity"].contains(o)) fail("identity: missing '" + o + "'");
      C.identity.push_back(mor(j["identity"][o], "identity"));
    }
  } else if (!C.derive_identities()) {
    fail("identity: could not derive identities from the table");
  }
  C.finalize();
  return C;
}

}  // namespace io

inline json to_json(const FinCategory& C) {
  json j;
  j["format"] = io::format_version;
  io::category_into(j, C);
  return j;
}

inline FinCategory category_from_json(const json& j) {
  io::check_keys(j, {"format", "objects", "morphisms", "comp"}, {"identity"}, "category");
  io::check_format(j);
  return io::category_from(j);
}

/// tensor: {"objects": [[X, Y, X Y]...], "morphisms": [[f, g, f g]...]};
/// assoc: [[X, Y, Z, a]...]; lunit/runit: {X: morphism}.
inline json to_json(const MonoidalCategory& M) {
  json j;
  j["format"] = io::format_version;
  const FinCategory& C = M.C;
  io::category_into(j, C);
  json to = json::array(), tmo = json::array(), as = json::array(), lu = json::object(), ru = json::object();
  for (Index x = 0; x < C.num_objects(); ++x)
    for (Index y = 0; y < C.num_objects(); ++y) {
      to.push_back({C.objects[x], C.objects[y], C.objects[M.t(x, y)]});
      for (Index z = 0; z < C.num_objects(); ++z)
        as.push_back({C.objects[x], C.objects[y], C.objects[z], C.morphisms[M.a(x, y, z)]});
    }
  for (Index f = 0; f < C.num_morphisms(); ++f)
    for (Index g = 0; g < C.num_morphisms(); ++g) tmo.push_back({C.morphisms[f], C.morphisms[g], C.morphisms[M.tm(f, g)]});
  for (Index x = 0; x < C.num_objects(); ++x) {
    lu[C.objects[x]] = C.morphisms[M.l(x)];
    ru[C.objects[x]] = C.morphisms[M.r(x)];
  }
  j["tensor"] = {{"objects", to}, {"morphisms", tmo}};
  j["assoc"] = as;
  j["lunit"] = lu;
  j["runit"] = ru;
  j["unit_object"] = C.objects[M.unit];
  return j;
}

inline MonoidalCategory monoidal_from_json(const json& j) {
  io::check_keys(j, {"format", "objects", "morphisms", "comp", "tensor", "assoc", "lunit", "runit", "unit_object"}, {"identity"},
                 "monoidal");
  io::check_format(j);
  MonoidalCategory M;
  M.C = io::category_from(j);
  const FinCategory& C = M.C;
  const std::size_t no = C.num_objects(), nm = C.num_morphisms();
  io::Names obj(C.objects), mor(C.morphisms);
  io::check_keys(j["tensor"], {"objects", "morphisms"}, {}, "tensor");
  auto table = [&](const json& t, std::size_t n, const io::Names& in, const io::Names& out, const std::string& what) {
    std::vector<std::vector<Index>> tab(n, std::vector<Index>(n, FinCategory::nocomp));
    if (!t.is_array() || t.size() != n * n) io::fail(what + ": expected " + std::to_string(n * n) + " entries");
    for (auto& e : t) {
      if (!e.is_array() || e.size() != 3) io::fail(what + ": entries are [x, y, x y]");
      Index x = in(e[0], what), y = in(e[1], what);
      if (tab[x][y] != FinCategory::nocomp) io::fail(what + ": duplicate entry");
      tab[x][y] = out(e[2], what);
    }
    return tab;
  };
  M.tensor_obj = table(j["tensor"]["objects"], no, obj, obj, "tensor.objects");
  M.tensor_mor = table(j["tensor"]["morphisms"], nm, mor, mor, "tensor.morphisms");
  const json& as = j["assoc"];
  if (!as.is_array() || as.size() != no * no * no) io::fail("assoc: expected one entry per triple of objects");
  M.assoc.assign(no, std::vector<std::vector<Index>>(no, std::vector<Index>(no, FinCategory::nocomp)));
  for (auto& e : as) {
    if (!e.is_array() || e.size() != 4) io::fail("assoc: entries are [X, Y, Z, a]");
    Index& slot = M.assoc[obj(e[0], "assoc")][obj(e[1], "assoc")][obj(e[2], "assoc")];
    if (slot != FinCategory::nocomp) io::fail("assoc: duplicate entry");
    slot = mor(e[3], "assoc");
  }
  auto unitor = [&](const json& u, const std::string& what) {
    if (!u.is_object() || u.size() != no) io::fail(what + ": expected one entry per object");
    std::vector<Index> out;
    for (auto& o : C.objects) {
      if (!u.contains(o)) io::fail(what + ": missing '" + o + "'");
      out.push_back(mor(u[o], what));
    }
    return out;
  };
  M.lunit = unitor(j["lunit"], "lunit");
  M.runit = unitor(j["runit"], "runit");
  M.unit = obj(j["unit_object"], "unit_object");
  return M;
}

// ------------------------------------------------------------------ text

/// Sorted keys, two-space indent, trailing newline.
inline std::string canonical(const json& j) { return j.dump(2) + "\n"; }

inline json parse_text(const std::string& text, const std::string& origin = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    io::fail(origin + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

/// Parses by kind and serializes again.
inline json reserialize(const json& j) {
  switch (detect_kind(j)) {
    case DocKind::SSet: return to_json(sset_from_json(j));
    case DocKind::BiSet: return to_json(biset_from_json(j));
    case DocKind::Group: return to_json(group_from_json(j));
    case DocKind::Category: return to_json(category_from_json(j));
    case DocKind::Monoidal: return to_json(monoidal_from_json(j));
    case DocKind::Result: return j;
  }
  return j;
}

/// parse -> serialize -> parse -> serialize gives the same bytes.
inline bool roundtrip(const std::string& text) {
  std::string once = canonical(reserialize(parse_text(text)));
  std::string twice = canonical(reserialize(parse_text(once)));
  return once == twice;
}

}  // namespace kanforge
