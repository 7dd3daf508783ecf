// liecrown: chief series, crowns and primitivity reports for Lie algebras.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liecrown/liecrown.hpp"

using namespace liecrown;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kCertification = 3, kBudget = 4, kUndecided = 5 };

struct Options {
  std::string input, builtin_name, field = "q";
  bool json = false, strict = false;
  std::uint64_t budget = 500000;
  std::size_t first = 0, second = 0;
  bool canonical = false;
};

/// Collected while building a report; drives --strict.
struct Flags {
  bool undecided = false;
  std::vector<std::string> notes;
  void mark(bool heuristic, const std::string& why) {
    if (!heuristic) return;
    undecided = true;
    notes.push_back(why);
  }
};

template <class F>
Json span_json(const LieAlgebra<F>& l, const Subspace<F>& s) {
  return format_span(l, s);
}

template <class F>
Json optional_span(const LieAlgebra<F>& l, const std::optional<Subspace<F>>& s) {
  return s ? Json(format_span(l, *s)) : Json(nullptr);
}

template <class F>
Json algebra_summary(const LieAlgebra<F>& l, const std::string& name) {
  return Json{{"name", name}, {"field", l.field().name()}, {"dim", l.dim()}, {"basis", l.basis_names()}};
}

template <class F>
Json info_json(const LieAlgebra<F>& l) {
  auto cs = characteristic_series(l);
  Json derived = Json::array(), lower = Json::array();
  for (const auto& s : cs.derived) derived.push_back(s.dim());
  for (const auto& s : cs.lower_central) lower.push_back(s.dim());
  auto inv = invariants(l);
  return Json{{"derived_dims", derived},
              {"lower_central_dims", lower},
              {"center", format_span(l, cs.center)},
              {"solvable", is_solvable(l)},
              {"nilpotent", lower.back() == 0},
              {"killing_rank", inv.killing_rank}};
}

/// Partition of factor indices into classes of an equivalence given pairwise.
template <class Rel>
std::vector<std::size_t> classes(std::size_t n, Rel rel) {
  std::vector<std::size_t> cls(n, n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    cls[i] = next;
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] == n && rel(i, j)) cls[j] = next;
    ++next;
  }
  return cls;
}

template <class F>
Json series_json(const LieAlgebra<F>& l, const ChiefSeries<F>& s, Flags& flags) {
  const auto& fs = s.factors;
  flags.mark(s.status == Status::Heuristic, "chief series: " + s.reason);
  auto iso = classes(fs.size(), [&](std::size_t i, std::size_t j) {
    auto r = l_isomorphic(l, fs[i], fs[j]);
    flags.mark(r.status == Status::Heuristic && !r.value, "L-isomorphism: " + r.reason);
    return r.value;
  });
  auto conn = classes(fs.size(), [&](std::size_t i, std::size_t j) {
    auto r = l_connected(l, fs[i], fs[j]);
    flags.mark(!r.decided, "L-connectedness: " + r.reason);
    return r.value;
  });
  Json chain = Json::array(), factors = Json::array();
  for (const auto& c : s.chain) chain.push_back(format_span(l, c));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    flags.mark(!f.complement_known, "complement of nonabelian factor " + std::to_string(i) + " undecided");
    factors.push_back(Json{{"index", i},
                           {"a", format_span(l, f.a)},
                           {"b", format_span(l, f.b)},
                           {"dim", f.dim()},
                           {"abelian", f.abelian},
                           {"centralizer", format_span(l, f.centralizer)},
                           {"supplemented", f.supplemented},
                           {"complemented", f.complement_known ? Json(f.complemented) : Json(nullptr)},
                           {"frattini", f.frattini},
                           {"complement", optional_span(l, f.complement_witness)},
                           {"iso_class", iso[i]},
                           {"connected_class", conn[i]}});
  }
  return Json{{"chain", chain}, {"factors", factors}, {"status", to_string(s.status)}};
}

template <class F>
Json crowns_json(const LieAlgebra<F>& l, const std::vector<Crown<F>>& ks, Flags& flags) {
  Json out = Json::array();
  for (const auto& k : ks) {
    flags.mark(k.status == Status::Heuristic, "crown: " + k.reason);
    out.push_back(Json{{"c", format_span(l, k.c)},
                       {"r", format_span(l, k.r)},
                       {"rank", k.rank},
                       {"abelian", k.abelian},
                       {"members", k.members},
                       {"status", to_string(k.status)}});
  }
  return out;
}

template <class F>
Json primitive_json(const LieAlgebra<F>& l, const PrimitiveWitness<F>& w, Flags& flags) {
  flags.mark(w.verdict == PrimitiveType::Undecided || w.status == Status::Heuristic, "primitivity: " + w.reason);
  Json mins = Json::array();
  for (const auto& m : w.minimal_ideals) mins.push_back(format_span(l, m));
  return Json{{"verdict", to_string(w.verdict)},
              {"minimal_ideals", mins},
              {"core_free_maximal", optional_span(l, w.core_free_maximal)},
              {"common_complement", optional_span(l, w.common_complement)},
              {"status", to_string(w.status)},
              {"reason", w.reason}};
}

template <class F>
Json radical_json(const LieAlgebra<F>& l, const SolvableRadical<F>& r, Flags& flags) {
  flags.mark(r.status == Status::Heuristic, "radical: socle computation heuristic");
  return Json{{"radical", format_span(l, r.radical)},
              {"centralizer_intersection", optional_span(l, r.centralizer_intersection)},
              {"status", to_string(r.status)}};
}

template <class F>
Json prefrattini_json(const LieAlgebra<F>& l) {
  if (!is_solvable(l)) return Json{{"solvable", false}, {"subalgebra", nullptr}, {"complements", Json::array()}};
  auto p = prefrattini(l);
  Json comps = Json::array();
  for (const auto& c : p.complements) comps.push_back(format_span(l, c));
  return Json{{"solvable", true}, {"subalgebra", format_span(l, p.subalgebra)}, {"complements", comps}};
}

template <class F>
Json connected_json(const LieAlgebra<F>& l, const ChiefSeries<F>& s, std::size_t i, std::size_t j, Flags& flags) {
  if (i >= s.factors.size() || j >= s.factors.size())
    throw CLI::ValidationError("factor index", "series has " + std::to_string(s.factors.size()) + " factors");
  const auto& f1 = s.factors[i];
  const auto& f2 = s.factors[j];
  auto iso = l_isomorphic(l, f1, f2);
  auto c = l_connected(l, f1, f2);
  flags.mark(!c.decided, "L-connectedness: " + c.reason);
  return Json{{"first", i},
              {"second", j},
              {"l_isomorphic", iso.value},
              {"l_connected", c.decided ? Json(c.value) : Json(nullptr)},
              {"n", optional_span(l, c.n)},
              {"common_complement", optional_span(l, c.common_complement)},
              {"reason", c.reason}};
}

// ---- oracle comparison

struct Check {
  std::string name;
  bool agree;
  std::string detail;
};

Json oracle_json(const LieAlgebra<PrimeField>& l, std::uint64_t budget) {
  using namespace oracle;
  auto st = enum_structures(l, EnumBudget{budget, 65521});
  std::vector<Check> checks;
  auto check = [&](std::string name, bool agree, std::string detail = "") {
    checks.push_back({std::move(name), agree, std::move(detail)});
  };

  auto s = chief_series(l);
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    bool supplemented = false;
    for (const auto& m : st.maximal_subalgebras)
      supplemented = supplemented || (m.contains(f.b) && !m.contains(f.a));
    check("factor " + std::to_string(i) + " frattini", f.frattini == !supplemented);
    check("factor " + std::to_string(i) + " supplemented", f.supplemented == supplemented);
  }

  auto info = socle_and_minimal_ideals(l, l.zero_space());
  auto mins = minimal_ideals_over(st, l.zero_space());
  GFSpace soc = l.zero_space();
  for (const auto& m : mins) soc = subspace_sum(soc, m);
  check("socle", soc == info.soc, format_span(l, soc) + " vs " + format_span(l, info.soc));
  bool listed = true;
  for (const auto& m : info.minimals) {
    bool found = false;
    for (const auto& x : mins) found = found || x == m;
    listed = listed && found;
  }
  check("minimal ideals", listed);

  auto pw = classify_primitive(l);
  auto pb = primitive_bf(l, st);
  check("primitive type", pw.verdict == pb.verdict,
        std::string(to_string(pw.verdict)) + " vs " + to_string(pb.verdict));

  GFSpace rad_bf = l.zero_space();
  for (const auto& d : st.ideals)
    if (d.dim() > rad_bf.dim() && is_solvable(l, d)) rad_bf = d;
  auto rad = solvable_radical(l);
  check("solvable radical", rad.radical == rad_bf, format_span(l, rad_bf));
  bool any_nonabelian = false;
  for (const auto& f : s.factors) any_nonabelian = any_nonabelian || !f.abelian;
  if (any_nonabelian)
    check("type 2/3 core intersection", nonabelian_core_intersection(l, st) == rad.radical);

  for (std::size_t i = 0; i < s.factors.size(); ++i)
    for (std::size_t j = 0; j < s.factors.size(); ++j) {
      const auto& f = s.factors[i];
      const auto& g = s.factors[j];
      std::string pair = " " + std::to_string(i) + "," + std::to_string(j);
      check("L-isomorphic" + pair, l_isomorphic(l, f, g).value == l_isomorphic_bf(l, f.a, f.b, g.a, g.b));
      auto c = l_connected(l, f, g);
      check("L-connected" + pair, c.decided && c.value == l_connected_bf(l, st, {f.a, f.b}, {g.a, g.b}));
    }

  auto crowns = all_crowns(l, s);
  for (std::size_t k = 0; k < crowns.size(); ++k) {
    const auto& rep = s.factors[crowns[k].representative()];
    auto ci = crown_intersections(l, st, {rep.a, rep.b});
    bool same = crowns[k].r == ci.j && ci.j == ci.j1 && ci.j == ci.j2 && ci.j == ci.j3;
    check("crown " + std::to_string(k) + " denominator", same, format_span(l, ci.j));
    auto q = quotient_algebra(l, crowns[k].r);
    check("crown " + std::to_string(k) + " frattini free",
          frattini_objects(q.algebra, EnumBudget{budget, 65521}).frattini_ideal.is_zero());
  }

  if (is_solvable(l)) {
    auto bf = prefrattini_bf(l, st, s.chain);
    std::vector<GFSpace> mine{l.whole()};
    for (const auto& k : crowns) {
      std::vector<GFSpace> next;
      for (const auto& x : mine)
        for (const auto& c : all_crown_complements(l, k)) next.push_back(subspace_intersect(x, c));
      sort_unique(next);
      mine = std::move(next);
    }
    check("prefrattini set", mine == bf.subalgebras,
          std::to_string(mine.size()) + " vs " + std::to_string(bf.subalgebras.size()) + " subalgebras");
  }

  Json out = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.agree;
    out.push_back(Json{{"check", c.name}, {"agree", c.agree}, {"detail", c.detail}});
  }
  return Json{{"checks", out}, {"all_agree", all}, {"maximal_subalgebras", st.maximal_subalgebras.size()}};
}

// ---- human rendering of the JSON sections

std::string yes_no(const Json& b) { return b.is_null() ? "undecided" : (b.get<bool>() ? "yes" : "no"); }
std::string str(const Json& s) { return s.is_null() ? "-" : s.get<std::string>(); }

void print_summary(std::ostream& os, const Json& a) {
  os << a["name"].get<std::string>() << " over " << a["field"].get<std::string>() << ", dim " << a["dim"] << ", basis";
  for (const auto& b : a["basis"]) os << " " << b.get<std::string>();
  os << "\n";
}

void print_info(std::ostream& os, const Json& j) {
  os << "derived series dims: " << j["derived_dims"].dump() << "\n";
  os << "lower central dims:  " << j["lower_central_dims"].dump() << "\n";
  os << "center: " << str(j["center"]) << "\n";
  os << "solvable: " << yes_no(j["solvable"]) << ", nilpotent: " << yes_no(j["nilpotent"])
     << ", Killing form rank: " << j["killing_rank"] << "\n";
}

void print_series(std::ostream& os, const Json& j, bool detailed) {
  os << "chief series:";
  bool first = true;
  for (const auto& c : j["chain"]) {
    os << (first ? " " : " < ") << c.get<std::string>();
    first = false;
  }
  os << "\n";
  for (const auto& f : j["factors"]) {
    os << "  [" << f["index"] << "] " << str(f["a"]) << " / " << str(f["b"]) << "  dim " << f["dim"] << ", "
       << (f["abelian"].get<bool>() ? "abelian" : "nonabelian") << ", "
       << (f["frattini"].get<bool>() ? "Frattini" : "supplemented");
    if (f["complemented"].is_null()) os << ", complement undecided";
    else if (f["complemented"].get<bool>()) os << ", complemented by " << str(f["complement"]);
    os << "\n";
    if (detailed)
      os << "      centralizer " << str(f["centralizer"]) << ", iso class " << f["iso_class"] << ", connected class "
         << f["connected_class"] << "\n";
  }
}

void print_crowns(std::ostream& os, const Json& j) {
  os << "crowns:\n";
  if (j.empty()) os << "  (none)\n";
  for (const auto& k : j)
    os << "  C = " << str(k["c"]) << ", R = " << str(k["r"]) << ", r = " << k["rank"] << ", factors "
       << k["members"].dump() << (k["status"] == "heuristic" ? " (heuristic)" : "") << "\n";
}

void print_primitive(std::ostream& os, const Json& j) {
  os << "primitive: " << str(j["verdict"]) << " (" << str(j["reason"]) << ")\n";
  if (!j["minimal_ideals"].empty()) {
    os << "  minimal ideals:";
    for (const auto& m : j["minimal_ideals"]) os << " " << m.get<std::string>();
    os << "\n";
  }
  if (!j["core_free_maximal"].is_null()) os << "  core-free maximal: " << str(j["core_free_maximal"]) << "\n";
  if (!j["common_complement"].is_null()) os << "  common complement: " << str(j["common_complement"]) << "\n";
}

void print_radical(std::ostream& os, const Json& j) {
  os << "solvable radical: " << str(j["radical"]);
  if (!j["centralizer_intersection"].is_null())
    os << " (centralizer intersection " << str(j["centralizer_intersection"]) << ")";
  os << "\n";
}

void print_prefrattini(std::ostream& os, const Json& j) {
  if (!j["solvable"].get<bool>()) {
    os << "prefrattini: not defined, L is not solvable\n";
    return;
  }
  os << "prefrattini: " << str(j["subalgebra"]) << " (complements";
  for (const auto& c : j["complements"]) os << " " << c.get<std::string>();
  os << ")\n";
}

void print_connected(std::ostream& os, const Json& j) {
  os << "factors " << j["first"] << " and " << j["second"] << ": ";
  if (j["l_connected"].is_null()) os << "undecided";
  else if (!j["l_connected"].get<bool>()) os << "not L-connected";
  else if (j["l_isomorphic"].get<bool>()) os << "L-connected (L-isomorphic)";
  else os << "L-connected via N=" << str(j["n"]) << ", type 3";
  os << " (" << j["reason"].get<std::string>() << ")\n";
  if (!j["common_complement"].is_null()) os << "  common complement " << str(j["common_complement"]) << "\n";
}

void print_oracle(std::ostream& os, const Json& j) {
  std::size_t bad = 0;
  for (const auto& c : j["checks"])
    if (!c["agree"].get<bool>()) {
      ++bad;
      os << "MISMATCH " << c["check"].get<std::string>() << " " << c["detail"].get<std::string>() << "\n";
    }
  os << j["checks"].size() << " checks against " << j["maximal_subalgebras"] << " enumerated maximal subalgebras: ";
  if (bad == 0) os << "all checks agree\n";
  else os << bad << " mismatches\n";
}

// ---- command dispatch

template <class F>
int run(const std::string& command, const LieAlgebra<F>& l, const std::string& name, const Options& opt) {
  Flags flags;
  Json out{{"schema_version", kSchemaVersion}, {"command", command}, {"algebra", algebra_summary(l, name)}};
  std::ostringstream text;
  print_summary(text, out["algebra"]);
  int code = kOk;

  if (command == "validate") {
    out["valid"] = true;
    text << "valid Lie algebra\n";
    if (opt.canonical) {
      std::cout << save_algebra(l);
      return kOk;
    }
  } else if (command == "info") {
    out["info"] = info_json(l);
    print_info(text, out["info"]);
  } else if (command == "chief-series" || command == "factors") {
    out["series"] = series_json(l, chief_series(l), flags);
    print_series(text, out["series"], command == "factors");
  } else if (command == "crowns") {
    auto s = chief_series(l);
    out["crowns"] = crowns_json(l, all_crowns(l, s), flags);
    print_crowns(text, out["crowns"]);
  } else if (command == "prefrattini") {
    out["prefrattini"] = prefrattini_json(l);
    print_prefrattini(text, out["prefrattini"]);
  } else if (command == "primitive") {
    out["primitive"] = primitive_json(l, classify_primitive(l), flags);
    print_primitive(text, out["primitive"]);
  } else if (command == "connected") {
    out["connected"] = connected_json(l, chief_series(l), opt.first, opt.second, flags);
    print_connected(text, out["connected"]);
  } else if (command == "radical") {
    out["radical"] = radical_json(l, solvable_radical(l), flags);
    print_radical(text, out["radical"]);
  } else if (command == "oracle-check") {
    if constexpr (!F::finite) {
      throw CLI::ValidationError("oracle-check", "needs a finite field (--field gfP)");
    } else {
      out["oracle"] = oracle_json(l, opt.budget);
      print_oracle(text, out["oracle"]);
      if (!out["oracle"]["all_agree"].get<bool>()) code = kCertification;
    }
  } else if (command == "report") {
    auto s = chief_series(l);
    out["info"] = info_json(l);
    out["series"] = series_json(l, s, flags);
    out["crowns"] = crowns_json(l, all_crowns(l, s), flags);
    out["primitive"] = primitive_json(l, classify_primitive(l), flags);
    out["radical"] = radical_json(l, solvable_radical(l), flags);
    out["prefrattini"] = prefrattini_json(l);
    print_info(text, out["info"]);
    print_series(text, out["series"], true);
    print_crowns(text, out["crowns"]);
    print_primitive(text, out["primitive"]);
    print_radical(text, out["radical"]);
    print_prefrattini(text, out["prefrattini"]);
  }
  out["undecided"] = flags.notes;
  for (const auto& n : flags.notes) text << "note: " << n << "\n";
  if (opt.json) std::cout << out.dump(2) << "\n";
  else std::cout << text.str();
  if (code == kOk && opt.strict && flags.undecided) code = kUndecided;
  return code;
}

int dispatch(const std::string& command, const Options& opt) {
  if (opt.input.empty() == opt.builtin_name.empty())
    throw CLI::ValidationError("input", "give exactly one of --input and --builtin");
  if (!opt.input.empty()) {
    AnyAlgebra a = load_algebra_file(opt.input);
    return std::visit([&](const auto& l) { return run(command, l, opt.input, opt); }, a);
  }
  FieldSpec f = FieldSpec::parse(opt.field);
  if (f.finite()) return run(command, builtin(opt.builtin_name, PrimeField(f.p)), opt.builtin_name, opt);
  return run(command, builtin(opt.builtin_name, RationalField()), opt.builtin_name, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chief series, crowns, prefrattini subalgebras and primitivity of finite-dimensional Lie algebras"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check antisymmetry and the Jacobi identity"},
      {"info", "Derived and lower central series, center"},
      {"chief-series", "A chief series with its factors classified"},
      {"factors", "Chief factors with centralizers and equivalence classes"},
      {"crowns", "One crown per L-connectedness class"},
      {"prefrattini", "A prefrattini subalgebra (solvable algebras)"},
      {"primitive", "Primitivity and type"},
      {"connected", "L-connectedness of two chief factors, by series index"},
      {"radical", "The solvable radical"},
      {"oracle-check", "Compare against exhaustive enumeration over a small prime field"},
      {"report", "Everything above except the oracle"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", opt.input, "Algebra document (JSON)");
    sub->add_option("--builtin", opt.builtin_name, "Built-in algebra: ab(n), r2, heis, ex22, sl2, gl2, aff_sl2, "
                                                   "sl2_plus_sl2, h3_plus_r2");
    sub->add_option("--field", opt.field, "Field for --builtin: q or gfP")->capture_default_str();
    sub->add_flag("--json", opt.json, "Machine-readable output");
    sub->add_flag("--strict", opt.strict, "Exit 5 when any verdict is undecided or heuristic");
    if (name == "connected") {
      sub->add_option("first", opt.first, "Index of the first factor")->required();
      sub->add_option("second", opt.second, "Index of the second factor")->required();
    }
    if (name == "oracle-check")
      sub->add_option("--budget", opt.budget, "Maximum number of subspaces to enumerate")->capture_default_str();
    if (name == "validate") sub->add_flag("--canonical", opt.canonical, "Print the canonical document");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const CertificationFailure& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kCertification;
  } catch (const MatchFailure& e) {
    std::cerr << "match failure: " << e.what() << "\n";
    return kCertification;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
}
