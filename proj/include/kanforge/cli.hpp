#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kanforge/verify.hpp"

namespace kanforge::cli {

enum Exit : int { ok = 0, check_failed = 1, usage = 2 };

/// A mathematical check failed; carries the message for stderr.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// "@id" names a canned example, anything else is a path.
inline json load(const std::string& where) {
  if (!where.empty() && where[0] == '@') {
    auto* e = corpus::find(where.substr(1));
    if (!e) throw Error(ErrorKind::Parse, "no canned example '" + where.substr(1) + "'");
    return e->build();
  }
  return read_json_file(where);
}

inline DocKind kind_of(const json& j, std::initializer_list<DocKind> allowed, const std::string& where) {
  DocKind k = detect_kind(j);
  for (auto a : allowed)
    if (a == k) return k;
  throw Error(ErrorKind::Parse, where + ": a " + kind_name(k) + " document is not accepted here");
}

inline SSet load_sset(const std::string& where) {
  json j = load(where);
  kind_of(j, {DocKind::SSet}, where);
  return sset_from_json(j);
}

inline TwoGroup load_two_group(const std::string& where) {
  json j = load(where);
  kind_of(j, {DocKind::Monoidal}, where);
  MonoidalCategory M = monoidal_from_json(j);
  auto v = validate_monoidal(M);
  if (!v.ok()) throw CheckFailure(where + ": not a monoidal category: " + v.violations.front());
  auto c = certify_two_group(M);
  if (!c.group) {
    std::string why = c.non_invertible ? "object '" + M.C.objects[*c.non_invertible] + "' is not invertible"
                                       : (c.violations.empty() ? "no inverse witnesses" : c.violations.front());
    throw CheckFailure(where + ": not a 2-group: " + why);
  }
  return std::move(*c.group);
}

inline FiniteGroup load_group(const std::string& where) {
  json j = load(where);
  kind_of(j, {DocKind::Group}, where);
  FiniteGroup G = group_from_json(j);
  auto v = validate_group(G);
  if (!v.ok()) throw CheckFailure(where + ": not a group: " + v.violations.front());
  return G;
}

/// A groupoid from either a category or a group document.
inline FinCategory load_category(const std::string& where) {
  json j = load(where);
  if (kind_of(j, {DocKind::Category, DocKind::Group}, where) == DocKind::Group) return group_category(group_from_json(j));
  return category_from_json(j);
}

inline Index vertex(const SSet& X, const std::string& id) {
  auto v = X.find(0, id);
  if (!v) throw Error(ErrorKind::Parse, "no vertex '" + id + "'");
  return *v;
}

inline std::string tuple_ids(const SSet& X, std::size_t level, const Tuple& t) {
  std::vector<std::string> parts;
  for (Index x : t) parts.push_back(X.ids[level][x]);
  return "(" + join(parts, ", ") + ")";
}

inline void print_table(std::ostream& out, const std::string& title, const FiniteGroup& G) {
  out << title << " (order " << G.size() << ")\n";
  std::size_t w = 1;
  for (auto& n : G.names) w = std::max(w, n.size());
  auto pad = [&](const std::string& s) { return s + std::string(w - s.size(), ' '); };
  out << "  " << pad("") << " |";
  for (auto& n : G.names) out << " " << pad(n);
  out << "\n";
  for (Index a = 0; a < G.size(); ++a) {
    out << "  " << pad(G.names[a]) << " |";
    for (Index b = 0; b < G.size(); ++b) out << " " << pad(G.names[G.mul[a][b]]);
    out << "\n";
  }
}

inline json result_json(const BijectionReport& r, json items) {
  return {{"format", io::format_version},
          {"count", r.count},
          {"items", std::move(items)},
          {"oracle_count", r.oracle_count},
          {"bijection_verified", r.verified()}};
}

inline int emit_check(std::ostream& out, const Check& c, bool as_json) {
  if (as_json) {
    out << canonical({{"format", io::format_version}, {"check", c.name}, {"passed", c.passed}, {"cases", c.report}});
  } else {
    for (auto& l : c.lines) out << l << "\n";
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
  }
  return c.passed ? Exit::ok : Exit::check_failed;
}

}  // namespace detail

/// Runs one command line; reports go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"kanforge: finite simplicial sets, 2-groups, nerves and determinants"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::optional<std::uint64_t> budget;
  bool as_json = false;
  app.add_option("--budget", budget, "cap on candidate evaluations per enumeration (overrides KANFORGE_BUDGET)");
  app.add_flag("--json", as_json, "print reports as canonical JSON");

  std::function<int()> action;
  std::string in1, in2;
  auto need_input = [&](CLI::App* sub, const std::string& what = "input document (path or @example-id)") {
    sub->add_option("input", in1, what)->required();
  };

  // validate
  bool roundtrip_flag = false;
  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of any document");
  need_input(validate_cmd);
  validate_cmd->add_flag("--roundtrip", roundtrip_flag, "also check that parse/serialize is stable");
  validate_cmd->callback([&] {
    action = [&]() -> int {
      json j = detail::load(in1);
      std::vector<std::string> violations;
      json info = json::object();
      switch (detect_kind(j)) {
        case DocKind::SSet: violations = validate(sset_from_json(j)).violations; break;
        case DocKind::BiSet: violations = validate(biset_from_json(j)).violations; break;
        case DocKind::Group: violations = validate_group(group_from_json(j)).violations; break;
        case DocKind::Category: {
          FinCategory C = category_from_json(j);
          violations = validate_category(C).violations;
          if (violations.empty()) info["groupoid"] = validate_groupoid(C).ok();
          break;
        }
        case DocKind::Monoidal: {
          MonoidalCategory M = monoidal_from_json(j);
          violations = validate_monoidal(M).violations;
          if (violations.empty()) info["two_group"] = certify_two_group(M).group.has_value();
          break;
        }
        case DocKind::Result: throw Error(ErrorKind::Parse, "result documents have no axioms to check");
      }
      bool rt = true;
      if (roundtrip_flag) {
        rt = roundtrip(canonical(j));
        info["roundtrip"] = rt;
      }
      const bool good = violations.empty() && rt;
      if (as_json) {
        out << canonical({{"format", io::format_version}, {"kind", kind_name(detect_kind(j))}, {"valid", violations.empty()},
                          {"violations", violations}, {"info", info}});
      } else {
        out << kind_name(detect_kind(j)) << ": " << (violations.empty() ? "valid" : "invalid") << "\n";
        for (auto& v : violations) out << "  " << v << "\n";
        for (auto& [k, v] : info.items()) out << "  " << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
      }
      return good ? Exit::ok : Exit::check_failed;
    };
  });

  // classify
  std::size_t n = 1;
  auto* classify_cmd = app.add_subcommand("classify", "coskeletal, minimal and Kan-groupoid flags at n");
  need_input(classify_cmd);
  classify_cmd->add_option("-n,--n", n, "the n of the flags")->capture_default_str();
  classify_cmd->callback([&] {
    action = [&]() -> int {
      SSet X = detail::load_sset(in1);
      auto c = classify(X, n);
      json r = {{"format", io::format_version},
                {"n", c.n},
                {"n_coskeletal", c.n_coskeletal},
                {"weakly_n_coskeletal", c.weakly_n_coskeletal},
                {"n_minimal", c.n_minimal},
                {"kan_through", c.kan_through},
                {"n_kan_groupoid", c.n_kan_groupoid},
                {"complete", c.complete}};
      if (c.checked_max_m) r["checked_max_m"] = *c.checked_max_m;
      if (as_json) {
        out << canonical(r);
      } else {
        out << "classification at n = " << c.n << (c.complete ? "" : " (partial: dimensions above the truncation unchecked)") << "\n";
        for (const char* k : {"n_coskeletal", "weakly_n_coskeletal", "n_minimal", "kan_through", "n_kan_groupoid"})
          out << "  " << k << ": " << (r[k].get<bool>() ? "yes" : "no") << "\n";
      }
      return Exit::ok;
    };
  });

  // kan
  std::size_t m = 1;
  bool strict = false;
  auto* kan_cmd = app.add_subcommand("kan", "horn filling alpha^{m,k} for every k");
  need_input(kan_cmd);
  kan_cmd->add_option("--dim", m, "m: horns of (m+1)-simplices")->capture_default_str();
  kan_cmd->add_flag("--strict", strict, "also require unique fillers");
  kan_cmd->callback([&] {
    action = [&]() -> int {
      SSet X = detail::load_sset(in1);
      auto row = kan_status(X, m);
      json horns = json::array();
      bool good = strict ? row.strict() : row.kan();
      for (auto& h : row.horns) {
        json e = {{"k", h.k}, {"surjective", h.surjective}, {"injective", h.injective}};
        if (h.unfilled) e["unfilled"] = io::ids_of(*h.unfilled, X.ids[m]);
        horns.push_back(e);
      }
      if (as_json) {
        out << canonical({{"format", io::format_version}, {"m", m}, {"horns", horns}, {"kan", row.kan()}, {"strict", row.strict()}});
      } else {
        for (auto& h : row.horns) {
          out << "Lambda^{" << m + 1 << "," << h.k << "}: " << (h.surjective ? "fillable" : "NOT fillable") << ", "
              << (h.injective ? "unique fillers" : "non-unique fillers");
          if (h.unfilled) out << "; unfilled horn " << detail::tuple_ids(X, m, *h.unfilled);
          out << "\n";
        }
        out << (good ? "Kan" : "not Kan") << " in dimension " << m << (strict ? " (strict)" : "") << "\n";
      }
      return good ? Exit::ok : Exit::check_failed;
    };
  });

  // cosq
  std::optional<std::size_t> to_dim, prime_n, cosk_at;
  auto* cosq_cmd = app.add_subcommand("cosq", "coskeletal extension or csq'");
  need_input(cosq_cmd);
  auto* to_opt = cosq_cmd->add_option("--to", to_dim, "extend to this dimension (needs coskeletal_at)");
  auto* prime_opt = cosq_cmd->add_option("--prime", prime_n, "build csq'_{n+1} at this n");
  to_opt->excludes(prime_opt);
  cosq_cmd->add_option("--coskeletal-at", cosk_at, "declare coskeletal_at before extending");
  cosq_cmd->callback([&] {
    action = [&]() -> int {
      if (!to_dim && !prime_n) throw Error(ErrorKind::Parse, "cosq needs --to or --prime");
      SSet X = detail::load_sset(in1);
      if (cosk_at) X.coskeletal_at = *cosk_at;
      out << canonical(to_json(to_dim ? coskeletal_extend(X, *to_dim) : csq_prime(X, *prime_n)));
      return Exit::ok;
    };
  });

  // nerve
  std::size_t nerve_dim = 3;
  auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a group, category or 2-group");
  need_input(nerve_cmd);
  nerve_cmd->add_option("--dim", nerve_dim, "truncation dimension")->capture_default_str();
  nerve_cmd->callback([&] {
    action = [&]() -> int {
      json j = detail::load(in1);
      DocKind k = detail::kind_of(j, {DocKind::Group, DocKind::Category, DocKind::Monoidal}, in1);
      SSet N = k == DocKind::Monoidal ? nerve_2group(detail::load_two_group(in1), nerve_dim).X
                                      : nerve_category(detail::load_category(in1), nerve_dim);
      out << canonical(to_json(N));
      return Exit::ok;
    };
  });

  // segal-nerve
  std::size_t P = 2, Q = 2;
  std::optional<std::size_t> total;
  auto* segal_cmd = app.add_subcommand("segal-nerve", "Segal nerve of a 2-group");
  need_input(segal_cmd);
  segal_cmd->add_option("-P,--P", P, "largest p")->capture_default_str();
  segal_cmd->add_option("-Q,--Q", Q, "largest q")->capture_default_str();
  segal_cmd->add_option("--total", total, "keep only p+q <= total");
  segal_cmd->callback([&] {
    action = [&]() -> int {
      out << canonical(to_json(segal_nerve(detail::load_two_group(in1), P, Q, total)));
      return Exit::ok;
    };
  });

  // pi
  std::size_t pi_m = 1;
  std::optional<std::string> base;
  auto* pi_cmd = app.add_subcommand("pi", "combinatorial homotopy group pi_m at a vertex");
  need_input(pi_cmd);
  pi_cmd->add_option("-m,--m", pi_m, "degree")->capture_default_str();
  pi_cmd->add_option("--base", base, "base vertex id");
  pi_cmd->callback([&] {
    action = [&]() -> int {
      SSet X = detail::load_sset(in1);
      std::optional<Index> b;
      if (base) b = detail::vertex(X, *base);
      auto h = pi(X, pi_m, b);
      std::vector<std::string> reps;
      for (Index r : h.reps) reps.push_back(X.ids[pi_m][r]);
      if (as_json) {
        json r = {{"format", io::format_version}, {"m", pi_m}, {"order", h.order()}, {"representatives", reps},
                  {"violations", h.violations}};
        if (h.group) r["group"] = verify::group_table(*h.group);
        out << canonical(r);
      } else if (h.group) {
        detail::print_table(out, "pi_" + std::to_string(pi_m) + " by representative", *h.group);
      } else {
        out << "pi_0: " << h.order() << " classes, representatives " << join(reps, ", ") << "\n";
      }
      for (auto& v : h.violations) err << "violation: " << v << "\n";
      return h.ok() ? Exit::ok : Exit::check_failed;
    };
  });

  // loop
  std::string variant = "plain";
  std::optional<std::string> loop_base;
  auto* loop_cmd = app.add_subcommand("loop", "simplicial loop space at a vertex");
  need_input(loop_cmd);
  loop_cmd->add_option("--variant", variant, "plain or reduced")->check(CLI::IsMember({"plain", "reduced"}))->capture_default_str();
  loop_cmd->add_option("--base", loop_base, "base vertex id");
  loop_cmd->callback([&] {
    action = [&]() -> int {
      SSet X = detail::load_sset(in1);
      std::optional<Index> b;
      if (loop_base) b = detail::vertex(X, *loop_base);
      out << canonical(to_json(loop_space(X, variant == "plain" ? LoopVariant::plain : LoopVariant::reduced, b)));
      return Exit::ok;
    };
  });

  // det
  bool with_pi0 = false;
  auto* det_cmd = app.add_subcommand("det", "determinants of a reduced simplicial set or Segal pre-monoid");
  det_cmd->add_option("source", in1, "simplicial set or bisimplicial document")->required();
  det_cmd->add_option("twogroup", in2, "2-group document")->required();
  det_cmd->add_flag("--pi0", with_pi0, "also compare pi0 with the mapping object");
  det_cmd->callback([&] {
    action = [&]() -> int {
      json j = detail::load(in1);
      TwoGroup G = detail::load_two_group(in2);
      const auto& C = G.M.C;
      json items = json::array(), result;
      bool good = true;
      if (detail::kind_of(j, {DocKind::SSet, DocKind::BiSet}, in1) == DocKind::SSet) {
        SSet X = kanforge::detail::with_levels(sset_from_json(j), 3);
        auto dets = enumerate_determinants(X, G);
        for (auto& d : dets) {
          json D = json::object(), T = json::object();
          for (Index a = 0; a < X.size(1); ++a) D[X.ids[1][a]] = C.objects[d.D[a]];
          for (Index x = 0; x < X.size(2); ++x) T[X.ids[2][x]] = C.morphisms[d.T[x]];
          items.push_back({{"D", D}, {"T", T}});
        }
        auto r = determinant_bijection(X, G);
        good = r.verified();
        result = detail::result_json(r, items);
        if (with_pi0) {
          auto p = pi0_det_comparison(X, G);
          result["pi0"] = {{"classes", p.det.classes}, {"mapping_classes", p.mapping_classes}, {"agree", p.ok()},
                           {"class_of", p.det.class_of}};
          good = good && p.ok();
        }
      } else {
        BiSet X = biset_from_json(j);
        auto dets = enumerate_segal_determinants(X, G);
        SSet row1 = horizontal_slice(X, 1);
        SSet target = nerve_category(C, row1.dim);
        for (auto& d : dets) {
          json D = json::object(), T = json::object();
          for (std::size_t p = 0; p <= row1.dim; ++p)
            for (Index x = 0; x < row1.size(p); ++x) D[std::to_string(p) + ":" + row1.ids[p][x]] = target.ids[p][d.D[p][x]];
          for (Index x = 0; x < X.size(0, 2); ++x) T[X.ids[0][2][x]] = C.morphisms[d.T[x]];
          items.push_back({{"D", D}, {"T", T}});
        }
        auto r = segal_bijection(X, G);
        good = r.verified();
        result = detail::result_json(r, items);
        if (with_pi0) {
          auto p = segal_pi0(X, G);
          result["pi0"] = {{"classes", p.det.classes}, {"mapping_classes", p.mapping_classes}, {"agree", p.ok()},
                           {"class_of", p.det.class_of}};
          good = good && p.ok();
        }
      }
      out << canonical(result);
      return good ? Exit::ok : Exit::check_failed;
    };
  });

  // add
  auto* add_cmd = app.add_subcommand("add", "additive functions of a reduced simplicial set into a group");
  add_cmd->add_option("source", in1, "reduced simplicial set document")->required();
  add_cmd->add_option("group", in2, "group document")->required();
  add_cmd->callback([&] {
    action = [&]() -> int {
      SSet X = detail::load_sset(in1);
      FiniteGroup H = detail::load_group(in2);
      json items = json::array();
      for (auto& D : enumerate_additive(X, H)) {
        json e = json::object();
        for (Index a = 0; a < X.size(1); ++a) e[X.ids[1][a]] = H.names[D[a]];
        items.push_back({{"D", e}});
      }
      auto r = additive_bijection(X, H);
      out << canonical(detail::result_json(r, items));
      return r.verified() ? Exit::ok : Exit::check_failed;
    };
  });

  // verify
  std::string check_name;
  std::vector<std::string> check_inputs;
  auto* verify_cmd = app.add_subcommand("verify", "run one named acceptance check, or 'all'");
  verify_cmd->add_option("name", check_name, "check name (see 'verify list')")->required();
  verify_cmd->add_option("inputs", check_inputs, "optional inputs replacing the canned corpus");
  verify_cmd->callback([&] {
    action = [&]() -> int {
      auto named = verify::acceptance();
      if (check_name == "list") {
        for (auto& c : named) out << c.name << "  " << c.summary << "\n";
        return Exit::ok;
      }
      if (check_name == "all") {
        if (!check_inputs.empty()) throw Error(ErrorKind::Parse, "'verify all' takes no inputs");
        int code = Exit::ok;
        for (auto& c : named)
          if (detail::emit_check(out, c.run(), as_json) != Exit::ok) code = Exit::check_failed;
        return code;
      }
      auto want = [&](std::size_t k) {
        if (check_inputs.size() != k)
          throw Error(ErrorKind::Parse, "'verify " + check_name + "' takes " + std::to_string(k) + " input(s) or none");
      };
      auto one_group = [&]() -> verify::Named2Groups { return {{check_inputs[0], detail::load_two_group(check_inputs[0]).M}}; };
      std::optional<Check> c;
      if (!check_inputs.empty()) {
        if (check_name == "groupoid-nerve") {
          want(1);
          c = verify::groupoid_nerve({{check_inputs[0], detail::load_category(check_inputs[0])}});
        } else if (check_name == "twogroup-nerve") {
          want(1);
          c = verify::two_group_nerve(one_group());
        } else if (check_name == "grho") {
          want(1);
          TwoGroup G = detail::load_two_group(check_inputs[0]);
          c = verify::grho({{check_inputs[0], G.M}});
          if (!as_json) {
            auto r = grho_check(G);
            detail::print_table(out, "pi_0(G)", r.pi0_G);
            detail::print_table(out, "pi_1(N G)", r.pi1_N);
            detail::print_table(out, "pi_1(G)", r.pi1_G);
            detail::print_table(out, "pi_2(N G)", r.pi2_N);
            std::vector<std::string> a1;
            for (Index i = 0; i < r.alpha1.size(); ++i) a1.push_back(r.pi1_G.names[i] + " -> " + r.pi2_N.names[r.alpha1[i]]);
            out << "alpha1: " << join(a1, ", ") << "\n";
          }
        } else if (check_name == "loop-gamma") {
          want(1);
          c = verify::loop_gamma_check(one_group());
        } else if (check_name == "fibrancy") {
          want(1);
          c = verify::fibrancy(one_group());
        } else if (check_name == "additive") {
          want(2);
          c = verify::additive({{check_inputs[0], detail::load_sset(check_inputs[0])}},
                               {{check_inputs[1], detail::load_group(check_inputs[1])}});
        } else if (check_name == "determinants") {
          want(2);
          c = verify::determinants({{check_inputs[0], detail::load_sset(check_inputs[0])}},
                                   {{check_inputs[1], detail::load_two_group(check_inputs[1]).M}});
        } else if (check_name == "segal-determinants") {
          want(2);
          SSet A = detail::load_sset(check_inputs[0]);
          c = verify::segal_determinants({{check_inputs[0], kanforge::detail::with_levels(A, 4)}},
                                         {{check_inputs[1], detail::load_two_group(check_inputs[1]).M}});
        } else if (check_name == "strictness") {
          want(2);
          c = verify::strictness(detail::load_sset(check_inputs[0]), detail::load_two_group(check_inputs[1]).M,
                                 check_inputs[0] + ", " + check_inputs[1]);
        } else if (check_name == "simplex-counts" || check_name == "coskeleton") {
          throw Error(ErrorKind::Parse, "'verify " + check_name + "' takes no inputs");
        }
      } else {
        for (auto& k : named)
          if (k.name == check_name) c = k.run();
      }
      if (!c) throw Error(ErrorKind::Parse, "unknown check '" + check_name + "' (try 'verify list')");
      return detail::emit_check(out, *c, as_json);
    };
  });

  // examples
  std::string ex_action, ex_arg;
  auto* examples_cmd = app.add_subcommand("examples", "canned corpus: list, show ID, export DIR");
  examples_cmd->add_option("action", ex_action, "list, show or export")->required()->check(CLI::IsMember({"list", "show", "export"}));
  examples_cmd->add_option("arg", ex_arg, "example id for show, directory for export");
  examples_cmd->callback([&] {
    action = [&]() -> int {
      if (ex_action == "list") {
        for (auto& e : corpus::entries()) out << e.id << "  [" << kind_name(e.kind) << "] " << e.summary << "\n";
        return Exit::ok;
      }
      if (ex_arg.empty()) throw Error(ErrorKind::Parse, "examples " + ex_action + " needs an argument");
      if (ex_action == "show") {
        auto* e = corpus::find(ex_arg);
        if (!e) throw Error(ErrorKind::Parse, "no canned example '" + ex_arg + "'");
        out << canonical(e->build());
        return Exit::ok;
      }
      std::filesystem::create_directories(ex_arg);
      for (auto& e : corpus::entries()) {
        auto path = std::filesystem::path(ex_arg) / (e.id + ".json");
        std::ofstream f(path);
        if (!f) throw Error(ErrorKind::Parse, "cannot write '" + path.string() + "'");
        f << canonical(e.build());
        out << path.string() << "\n";
      }
      return Exit::ok;
    };
  });

  // Reject an unknown verb before any option or file is looked at.
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--budget") {
      ++i;
      continue;
    }
    if (a.rfind("-", 0) == 0) continue;
    if (!app.get_subcommand_no_throw(a)) {
      err << "usage error: unknown verb '" << a << "' (try --help)\n";
      return Exit::usage;
    }
    break;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::usage;
  }
  std::optional<std::string> saved_budget;
  if (const char* b = std::getenv("KANFORGE_BUDGET")) saved_budget = b;
  if (budget) {
    if (*budget == 0) {
      err << "usage error: --budget must be positive\n";
      return Exit::usage;
    }
    setenv("KANFORGE_BUDGET", std::to_string(*budget).c_str(), 1);
  }
  // Put the environment back so that run() can be called repeatedly in-process.
  struct Restore {
    bool active;
    std::optional<std::string> old;
    ~Restore() {
      if (!active) return;
      if (old) setenv("KANFORGE_BUDGET", old->c_str(), 1);
      else unsetenv("KANFORGE_BUDGET");
    }
  } restore{budget.has_value(), saved_budget};
  try {
    return action();
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return Exit::check_failed;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NotKan:
      case ErrorKind::NotOneKanGroupoid:
      case ErrorKind::NotTwoKanGroupoid:
      case ErrorKind::NotGroupoidBase:
        err << "check failed: " << e.what() << "\n";
        return Exit::check_failed;
      case ErrorKind::BudgetExceeded:
        err << "budget exceeded: " << e.what() << "\n";
        return Exit::usage;
      default:
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    }
  } catch (const json::exception& e) {
    err << "error: Parse: " << e.what() << "\n";
    return Exit::usage;
  }
}

}  // namespace kanforge::cli
