#include "qo/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>

#include "qo/error.hpp"
#include "qo/order_json.hpp"
#include "qo/setclass.hpp"
#include "qo/sound_design.hpp"
#include "qo/spectra_io.hpp"

namespace qo {

namespace {

using nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 20240101;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

struct Settings {
  std::string format;  // empty: the command's default
  Format fmt(Format fallback = Format::Text) const {
    return format.empty() ? fallback : format == "json" ? Format::Json : Format::Text;
  }
};

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json class_json(const SetClass& c) { return {{"edo", c.edo()}, {"members", c.rep().members()}}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path, 0, e.what());
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("QO_SEED");
  if (!env || !*env) return kDefaultSeed;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("QO_SEED must be an unsigned integer, got '" + std::string(text) + "'");
  return seed;
}

TimbralVector load_timbre(const std::string& path, std::optional<std::size_t> pad_to) {
  return normalize(load_spectrum(path), pad_to);
}

// --- setclass --------------------------------------------------------------

struct SetclassArgs {
  int edo = 12;
  int max_second = 2;
};

int setclass_minimal(const SetclassArgs& a, const Settings& s, std::ostream& out) {
  const auto classes = sck_minimal(a.edo, a.max_second);
  if (s.fmt() == Format::Json) {
    json j{{"edo", a.edo}, {"max_second", a.max_second}, {"minimal", json::array()}};
    for (const auto& c : classes) j["minimal"].push_back(class_json(c));
    emit_json(out, j);
  } else {
    for (const auto& c : classes) out << to_brace(c) << "\n";
  }
  return kExitOk;
}

int setclass_count(const SetclassArgs& a, const Settings& s, std::ostream& out) {
  const std::uint64_t count = enumerate_set_classes(a.edo).size();
  const std::uint64_t expected = burnside_count(a.edo);
  if (s.fmt() == Format::Json) {
    emit_json(out, {{"edo", a.edo}, {"count", count}, {"burnside", expected}, {"match", count == expected}});
  } else {
    out << count << "\n" << "burnside: " << expected << (count == expected ? " (match)" : " (MISMATCH)") << "\n";
  }
  return count == expected ? kExitOk : kExitDomainError;
}

int setclass_check(const SetclassArgs& a, const Settings& s, std::ostream& out) {
  const auto by_order = sck_minimal(a.edo, a.max_second);
  const auto by_thirds = sck_wide_thirds(a.edo, a.max_second);
  const bool same = by_order == by_thirds;
  if (s.fmt() == Format::Json) {
    json j{{"edo", a.edo},
           {"max_second", a.max_second},
           {"equivalent", same},
           {"members", sck_members(a.edo, a.max_second).size()},
           {"minimal", json::array()},
           {"wide_thirds", json::array()}};
    for (const auto& c : by_order) j["minimal"].push_back(class_json(c));
    for (const auto& c : by_thirds) j["wide_thirds"].push_back(class_json(c));
    emit_json(out, j);
  } else {
    out << (same ? "holds" : "fails") << ": minimal classes of SC" << a.max_second << " in Z_" << a.edo
        << " are exactly those with every scalar third spanning at least " << a.max_second + 1 << " ("
        << by_order.size() << " by order, " << by_thirds.size() << " by thirds)\n";
  }
  return kExitOk;
}

// --- timbre ----------------------------------------------------------------

struct CompareArgs {
  std::string a, b;
  double tol = kOrderTolerance;
  std::optional<std::size_t> pad_to;
};

int timbre_compare(const CompareArgs& a, const Settings& s, std::ostream& out) {
  const auto va = load_timbre(a.a, a.pad_to);
  const auto vb = load_timbre(a.b, a.pad_to);
  const auto verdict = brightness_compare(va, vb, a.tol);
  if (s.fmt() == Format::Json) {
    emit_json(out, {{"a", va.name()}, {"b", vb.name()}, {"verdict", to_string(verdict)},
                    {"tv_distance", tv_distance(va, vb)}});
  } else {
    out << to_string(verdict) << "\n";
  }
  return kExitOk;
}

struct HasseArgs {
  std::string dir;
  std::string dot;
  double tol = kOrderTolerance;
  std::optional<std::size_t> pad_to;
  std::optional<std::size_t> truncate_to;
};

int timbre_hasse(const HasseArgs& a, const Settings& s, std::ostream& out) {
  const auto collection = load_collection(a.dir, {a.pad_to, a.truncate_to});
  const auto hasse = brightness_hasse(collection, a.tol);
  const std::string dot = export_dot(hasse);
  if (!a.dot.empty()) {
    std::ofstream f(a.dot, std::ios::binary);
    if (!f) throw Error("cannot write " + a.dot);
    f << dot;
  }
  auto names_of = [&](const std::vector<ElementId>& ids) {
    std::vector<std::string> v;
    for (auto i : ids) v.push_back(hasse.names[i]);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto maximal = names_of(hasse.maximal);
  const auto minimal = names_of(hasse.minimal);
  std::vector<std::pair<std::string, std::string>> near;
  for (auto [i, j] : hasse.near_equal) near.emplace_back(hasse.names[i], hasse.names[j]);

  if (s.fmt() == Format::Json) {
    json edges = json::array();
    std::vector<std::pair<std::string, std::string>> e;
    for (auto [u, v] : hasse.covers.pairs()) e.emplace_back(hasse.names[u], hasse.names[v]);
    std::sort(e.begin(), e.end());
    for (const auto& [u, v] : e) edges.push_back({u, v});
    auto sorted_names = hasse.names;
    std::sort(sorted_names.begin(), sorted_names.end());
    emit_json(out, {{"nodes", sorted_names},
                    {"edges", edges},
                    {"maximal", maximal},
                    {"minimal", minimal},
                    {"near_equal", near}});
  } else {
    auto join = [](const std::vector<std::string>& v) {
      std::string r;
      for (const auto& x : v) r += (r.empty() ? "" : ", ") + x;
      return r;
    };
    if (a.dot.empty()) out << dot;
    out << "maximal: " << join(maximal) << "\n";
    out << "minimal: " << join(minimal) << "\n";
    for (const auto& [u, v] : near) out << "near-equal: " << u << ", " << v << "\n";
  }
  return kExitOk;
}

struct DesignArgs {
  std::string target, bound, variant = "l1min", out;
  std::optional<std::size_t> pad_to;
};

int timbre_design(const DesignArgs& a, const Settings& s, std::ostream& out) {
  auto p = load_timbre(a.target, a.pad_to);
  auto b = load_timbre(a.bound, a.pad_to);
  const bool bi = a.variant == "l1min2";
  const DesignProblem problem(std::move(p), std::move(b),
                              bi ? DesignVariant::BiObjective : DesignVariant::ClosestToTarget);
  const DesignSolution sol =
      a.variant == "closest-to-bound" ? solve_closest_to_bound(problem) : solve_design(problem);
  const bool ok = sol.status == SolverStatus::Optimal;
  json j{{"x", sol.x},
         {"objective", sol.objective},
         {"tv_distance", sol.tv_distance()},
         {"x_leq_p", ok && claim_check_x_leq_p(problem, sol)},
         {"status", to_string(sol.status)}};
  if (a.out.empty() && s.fmt(Format::Json) == Format::Text) {
    out << "status: " << to_string(sol.status) << "\n";
    if (ok) {
      out << "objective: " << json(sol.objective).dump() << "\n"
          << "tv_distance: " << json(sol.tv_distance()).dump() << "\n"
          << "x_leq_p: " << (j["x_leq_p"].get<bool>() ? "true" : "false") << "\n"
          << "x: " << json(sol.x).dump() << "\n";
    }
  } else if (a.out.empty()) {
    emit_json(out, j);
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw Error("cannot write " + a.out);
    emit_json(f, j);
  }
  return ok ? kExitOk : kExitDomainError;
}

struct CounterexampleArgs {
  std::size_t n = 4;
  std::size_t trials = 10000;
  std::optional<std::uint64_t> seed;
};

int timbre_counterexample(const CounterexampleArgs& a, const Settings& s, std::ostream& out) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  const auto r = counterexample_search(a.n, a.trials, seed);
  if (s.fmt() == Format::Json) {
    json j{{"n", r.n},         {"seed", r.seed},   {"trials", r.trials}, {"trials_run", r.trials_run},
           {"threshold", r.threshold}, {"found", r.found}, {"max_gap", r.max_gap}};
    if (r.found) {
      j["trial"] = r.trial;
      j["target"] = r.target;
      j["bound"] = r.bound;
      j["infimum"] = r.infimum;
      j["infimum_objective"] = r.infimum_objective;
      j["lp_objective"] = r.lp_objective;
    }
    emit_json(out, j);
  } else {
    out << "n=" << r.n << " seed=" << r.seed << " trials=" << r.trials_run << "/" << r.trials << "\n";
    if (!r.found) {
      out << "not found in budget (largest gap " << r.max_gap << ")\n";
    } else {
      auto vec = [](const std::vector<double>& v) { return json(v).dump(); };
      out << "found at trial " << r.trial << "\n"
          << "target:  " << vec(r.target) << "\n"
          << "bound:   " << vec(r.bound) << "\n"
          << "infimum: " << vec(r.infimum) << "\n"
          << "infimum objective: " << json(r.infimum_objective).dump() << "\n"
          << "lp objective:      " << json(r.lp_objective).dump() << "\n";
    }
  }
  return kExitOk;
}

// --- order / submajorize -------------------------------------------------

struct OrderArgs {
  std::string relation, action;
};

int order_check(const OrderArgs& a, const Settings& s, std::ostream& out) {
  const auto rel = relation_from_json(read_json_file(a.relation));
  const auto act = action_from_json(read_json_file(a.action));
  const auto ax = relation_axioms(rel);
  const auto props = action_properties(rel, act);
  const auto strong = induced_relation(rel, act, InducedMode::Strong);
  const auto weak = induced_relation(rel, act, InducedMode::Weak);
  const auto sax = relation_axioms(*strong.relation);
  const auto wax = relation_axioms(*weak.relation);
  const bool same = *strong.relation == *weak.relation;

  // Each diagnostic is "holds", "fails" or "vacuous" (premise not met).
  auto implication = [](bool premise, bool conclusion) {
    return !premise ? "vacuous" : (conclusion ? "holds" : "fails");
  };
  const char* d_preorder = implication(ax.partial_order(), sax.preorder());
  const char* d_increasing = implication(ax.partial_order() && props.increasing, same);
  const char* d_transverse = implication(ax.partial_order() && props.transverse, sax.antisymmetric);

  auto axioms_json = [](const RelationAxioms& x) {
    return json{{"reflexive", x.reflexive}, {"antisymmetric", x.antisymmetric}, {"transitive", x.transitive}};
  };
  if (s.fmt() == Format::Json) {
    emit_json(out, {{"relation", axioms_json(ax)},
                    {"action", {{"increasing", props.increasing}, {"transverse", props.transverse}}},
                    {"orbits", strong.orbits},
                    {"strong", relation_to_json(*strong.relation)},
                    {"weak", relation_to_json(*weak.relation)},
                    {"strong_axioms", axioms_json(sax)},
                    {"weak_axioms", axioms_json(wax)},
                    {"strong_equals_weak", same},
                    {"diagnostics",
                     {{"strong_is_preorder", d_preorder},
                      {"increasing_implies_equal", d_increasing},
                      {"transverse_implies_antisymmetric", d_transverse}}}});
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "relation: reflexive=" << yn(ax.reflexive) << " antisymmetric=" << yn(ax.antisymmetric)
        << " transitive=" << yn(ax.transitive) << "\n";
    out << "action: increasing=" << yn(props.increasing) << " transverse=" << yn(props.transverse) << "\n";
    out << "orbits: " << strong.orbits.size() << "\n";
    out << "strong pairs: " << json(strong.relation->pairs()).dump() << "\n";
    out << "weak pairs:   " << json(weak.relation->pairs()).dump() << "\n";
    out << "strong equals weak: " << yn(same) << "\n";
    out << "strong is a preorder: " << d_preorder << "\n";
    out << "increasing => strong equals weak: " << d_increasing << "\n";
    out << "transverse => strong antisymmetric: " << d_transverse << "\n";
  }
  return kExitOk;
}

std::vector<double> read_multiset(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_array()) throw ParseError(path, 0, "expected a JSON array of numbers");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError(path, 0, "expected a JSON array of numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

struct SubmajorizeArgs {
  std::string a, b;
};

int submajorize(const SubmajorizeArgs& a, const Settings& s, std::ostream& out) {
  const auto verdict = submajorize_compare(read_multiset(a.a), read_multiset(a.b));
  if (s.fmt() == Format::Json)
    emit_json(out, {{"verdict", to_string(verdict)}});
  else
    out << to_string(verdict) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Induced orders on set classes and timbres", "qo"};
  app.require_subcommand(1);
  Settings settings;
  std::function<int()> action;

  // setclass
  auto* setclass = app.add_subcommand("setclass", "Pitch-class set classes in Z_N");
  setclass->require_subcommand(1);
  SetclassArgs sc;
  auto add_edo = [&](CLI::App* c, bool with_k) {
    c->add_option("--edo", sc.edo, "Tones per octave")->required()->check(CLI::Range(1, kMaxEdo));
    if (with_k) c->add_option("--max-second", sc.max_second, "Largest scalar second span")->required();
    add_format(c, settings);
  };
  auto* sc_min = setclass->add_subcommand("minimal", "Minimal classes of SC_k");
  add_edo(sc_min, true);
  sc_min->callback([&] { action = [&] { return setclass_minimal(sc, settings, out); }; });
  auto* sc_count = setclass->add_subcommand("count", "Count set classes");
  add_edo(sc_count, false);
  sc_count->callback([&] { action = [&] { return setclass_count(sc, settings, out); }; });
  auto* sc_prop = setclass->add_subcommand("check-prop1", "Compare order-minimal and wide-thirds classes");
  add_edo(sc_prop, true);
  sc_prop->callback([&] { action = [&] { return setclass_check(sc, settings, out); }; });

  // timbre
  auto* timbre = app.add_subcommand("timbre", "Brightness order on timbral vectors");
  timbre->require_subcommand(1);

  CompareArgs cmp;
  auto* t_cmp = timbre->add_subcommand("compare", "Compare the brightness of two spectra");
  t_cmp->add_option("a", cmp.a, "First spectrum CSV")->required();
  t_cmp->add_option("b", cmp.b, "Second spectrum CSV")->required();
  t_cmp->add_option("--tol", cmp.tol, "Comparison tolerance")->check(CLI::NonNegativeNumber);
  t_cmp->add_option("--pad-to", cmp.pad_to, "Zero-pad both spectra to this many harmonics");
  add_format(t_cmp, settings);
  t_cmp->callback([&] { action = [&] { return timbre_compare(cmp, settings, out); }; });

  HasseArgs hs;
  auto* t_hasse = timbre->add_subcommand("hasse", "Hasse diagram of a directory of spectra");
  t_hasse->add_option("dir", hs.dir, "Directory of *.csv spectra")->required();
  t_hasse->add_option("--dot", hs.dot, "Write the DOT diagram here");
  t_hasse->add_option("--tol", hs.tol, "Comparison tolerance")->check(CLI::NonNegativeNumber);
  t_hasse->add_option("--pad-to", hs.pad_to, "Zero-pad every spectrum to this many harmonics");
  t_hasse->add_option("--truncate", hs.truncate_to, "Keep only the lowest harmonics");
  add_format(t_hasse, settings);
  t_hasse->callback([&] { action = [&] { return timbre_hasse(hs, settings, out); }; });

  DesignArgs ds;
  auto* t_design = timbre->add_subcommand("design", "Closest timbre no brighter than a bound");
  t_design->add_option("--target", ds.target, "Target spectrum CSV (p)")->required();
  t_design->add_option("--bound", ds.bound, "Brightness bound spectrum CSV (b)")->required();
  t_design->add_option("--variant", ds.variant, "l1min | l1min2 | closest-to-bound")
      ->check(CLI::IsMember({"l1min", "l1min2", "closest-to-bound"}));
  t_design->add_option("--out", ds.out, "Write the solution JSON here");
  t_design->add_option("--pad-to", ds.pad_to, "Zero-pad both spectra to this many harmonics");
  add_format(t_design, settings);
  t_design->callback([&] { action = [&] { return timbre_design(ds, settings, out); }; });

  CounterexampleArgs cx;
  auto* t_cx = timbre->add_subcommand("counterexample", "Search for instances where b∧p is not optimal");
  t_cx->add_option("--n", cx.n, "Harmonic count")->check(CLI::PositiveNumber);
  t_cx->add_option("--trials", cx.trials, "Trial budget")->check(CLI::PositiveNumber);
  t_cx->add_option("--seed", cx.seed, "Random seed (default: $QO_SEED)");
  add_format(t_cx, settings);
  t_cx->callback([&] { action = [&] { return timbre_counterexample(cx, settings, out); }; });

  // order
  auto* order = app.add_subcommand("order", "Finite orders and group actions");
  order->require_subcommand(1);
  OrderArgs oa;
  auto* o_check = order->add_subcommand("check", "Induced relations of a relation under a group action");
  o_check->add_option("--relation", oa.relation, "Relation JSON")->required();
  o_check->add_option("--action", oa.action, "Group action JSON")->required();
  add_format(o_check, settings);
  o_check->callback([&] { action = [&] { return order_check(oa, settings, out); }; });

  SubmajorizeArgs sm;
  auto* sub = app.add_subcommand("submajorize", "Compare two multisets by weak submajorization");
  sub->add_option("a", sm.a, "JSON array of numbers")->required();
  sub->add_option("b", sm.b, "JSON array of numbers")->required();
  add_format(sub, settings);
  sub->callback([&] { action = [&] { return submajorize(sm, settings, out); }; });

  std::vector<const char*> argv{"qo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    return action ? action() : kExitUsageError;
  } catch (const UsageError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error[domain]: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error[domain]: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace qo
