#include "gccaut/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gccaut/colored_complex.hpp"
#include "gccaut/deadline.hpp"
#include "gccaut/errors.hpp"
#include "gccaut/export.hpp"
#include "gccaut/recover.hpp"
#include "gccaut/symmetry.hpp"
#include "gccaut/verify.hpp"

namespace gccaut {

namespace {

const char* const kDefaultSweepTypes = "A2,A3,A4,B2,B3,B4,D4,D5,G2,H3,F4,E6,I2(5),I2(7)";

struct RunConfig {
  std::string command;
  std::string type;
  int m = 1;
  std::string format;  // empty: the command's default
  std::string out;
  std::string in = "-";
  std::optional<unsigned> threads;
  bool swap_bipartition = false;
  std::string budget;
  std::string types = kDefaultSweepTypes;
  std::string ms = "1,2";
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

unsigned resolve_threads(const RunConfig& cfg) {
  unsigned t = 1;
  if (cfg.threads) {
    t = *cfg.threads;
  } else if (const char* env = std::getenv("GCC_AUT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') t = static_cast<unsigned>(v);
  }
  if (t == 0) t = std::max(1U, std::thread::hardware_concurrency());
  return t;
}

std::string perm_text(const Permutation& p) {
  if (p.is_identity()) return "identity";
  std::string s;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    s += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) s += (i ? " " : "") + std::to_string(cyc[i]);
    s += ")";
  }
  return s;
}

const char* ok_text(bool ok) { return ok ? "ok" : "FAIL"; }

/// Left-justifies to `width` terminal columns; combining marks take none.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t cols = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto b = static_cast<unsigned char>(s[i]);
    if ((b & 0xC0) == 0x80) continue;
    const bool combining = b == 0xCC || (b == 0xCD && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) < 0xB0);
    if (!combining) ++cols;
  }
  return cols >= width ? s + " " : s + std::string(width - cols, ' ');
}

ComplexHandle build_from(const RunConfig& cfg) {
  BuildOptions opts;
  opts.swap_bipartition = cfg.swap_bipartition;
  return ComplexHandle::build(CoxeterType::parse(cfg.type), cfg.m, opts);
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const ComplexHandle cx = build_from(cfg);
  const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
  if (fmt == "json") {
    out << graph_json(cx).dump(2) << "\n";
  } else if (fmt == "dot") {
    out << graph_dot(cx);
  } else {
    out << cx.system().type().name() << " m=" << cx.m() << ": " << cx.size() << " vertices, "
        << cx.graph().num_edges() << " edges\n";
    for (std::size_t v = 0; v < cx.size(); ++v)
      out << std::setw(5) << v << "  " << std::left << pad(vertex_label(cx, v), 24) << std::right
          << " degree " << cx.graph().degree(v) << "\n";
  }
  return kExitOk;
}

int cmd_facets(const RunConfig& cfg, const Deadline* deadline, std::ostream& out) {
  const ComplexHandle cx = build_from(cfg);
  const auto cliques = facets_cliques(cx, deadline);
  bool ok = true;
  if (cx.is_irreducible()) ok = facets_tzanaki(cx, resolve_threads(cfg), deadline) == cliques;
  const std::uint64_t expected = fuss_catalan(cx.system(), cx.m());
  ok = ok && cliques.size() == expected;
  if (cfg.format == "json") {
    out << json{{"type", cx.system().type().name()},
                {"m", cx.m()},
                {"count", cliques.size()},
                {"fuss_catalan", expected},
                {"check", ok ? "ok" : "mismatch"},
                {"facets", facets_json(cliques)}}
               .dump(2)
        << "\n";
  } else {
    out << "type          " << cx.system().type().name() << "\n"
        << "m             " << cx.m() << "\n"
        << "count         " << cliques.size() << "\n"
        << "fuss_catalan  " << expected << "\n"
        << "check         " << (ok ? "ok" : "mismatch") << "\n";
    for (const auto& f : cliques) {
      out << "  {";
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? ", " : "") << vertex_label(cx, f[i]);
      out << "}\n";
    }
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_maps(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ComplexHandle cx = build_from(cfg);
  if (!cx.is_irreducible()) {
    err << "maps: irreducible type required\n";
    return kExitRefused;
  }
  const VertexSet& vs = cx.vertex_set();
  std::vector<std::pair<std::string, Permutation>> maps;
  const auto gens = dihedral_generators(cx);
  maps.emplace_back("R", gens.R.perm);
  maps.emplace_back("S", gens.S.perm);
  maps.emplace_back("T", gens.T.perm);
  maps.emplace_back("C", canonical_C(cx).perm);
  const auto swapped = VertexSet::build(
      std::make_shared<const CoxeterSystem>(vs.system().with_swapped_bipartition()), vs.m());
  maps.emplace_back("iota", iota_map(vs, swapped));
  const auto diagrams = vs.system().diagram_symmetries();
  for (std::size_t i = 0; i < diagrams.size(); ++i)
    if (!diagrams[i].is_identity()) maps.emplace_back("D:" + std::to_string(i), diagram_map(cx, diagrams[i]).perm);
  const auto relations = relation_checks(cx);
  bool ok = true;
  for (const auto& r : relations) ok = ok && r.holds;

  if (cfg.format == "json") {
    json jm = json::object(), jr = json::object();
    for (const auto& [name, p] : maps) jm[name] = permutation_json(p);
    for (const auto& r : relations) jr[r.name] = r.holds;
    out << json{{"type", cx.system().type().name()}, {"m", cx.m()}, {"maps", jm}, {"relations", jr}}.dump(2)
        << "\n";
  } else {
    out << "maps\n";
    for (const auto& [name, p] : maps) out << "  " << pad(name, 8) << perm_text(p) << "\n";
    out << "relations\n";
    for (const auto& r : relations) out << "  " << pad(r.name, 34) << ok_text(r.holds) << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

void print_report(const VerifyReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report_json(r).dump(2) << "\n";
    return;
  }
  out << "type        " << r.type << "\n"
      << "m           " << r.m << "\n"
      << "aut_order   " << r.aut_order << "\n"
      << "predicted   " << r.predicted << "\n";
  for (const auto& [name, ok] : r.clauses) out << "  " << std::left << std::setw(14) << name << ok_text(ok) << "\n";
  out << "orbit_sizes";
  for (auto s : r.orbit_sizes) out << " " << s;
  out << "\n";
}

int cmd_verify(const RunConfig& cfg, const Deadline* deadline, std::ostream& out, std::ostream& err) {
  const ComplexHandle cx = build_from(cfg);
  if (!cx.is_irreducible()) {
    err << "verify: irreducible type required\n";
    return kExitRefused;
  }
  const VerifyReport r = verify_main_theorem(cx, deadline);
  print_report(r, cfg.format, out);
  if (!r.passed()) {
    err << "verify: clause " << r.first_failure() << " failed\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::optional<std::chrono::milliseconds> budget, std::ostream& out,
              std::ostream& err) {
  const auto names = split(cfg.types);
  if (names.empty()) {
    err << "sweep: empty type list\n";
    return kExitUsage;
  }
  std::vector<CoxeterType> types;
  for (const auto& n : names) types.push_back(CoxeterType::parse(n));
  std::vector<int> ms;
  for (const auto& s : split(cfg.ms)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || v < 1) {
      err << "sweep: invalid m value '" << s << "'\n";
      return kExitUsage;
    }
    ms.push_back(v);
  }
  if (ms.empty()) {
    err << "sweep: empty m list\n";
    return kExitUsage;
  }

  json rows = json::array();
  bool failed = false;
  for (const auto& t : types) {
    for (int m : ms) {
      const std::optional<Deadline> dl = budget ? std::optional<Deadline>(Deadline(*budget)) : std::nullopt;
      const Deadline* d = dl ? &*dl : nullptr;
      json row = {{"type", t.name()}, {"m", m}, {"aut_order", nullptr}, {"predicted", nullptr}};
      try {
        const ComplexHandle cx = ComplexHandle::build(t, m);
        poll(d);
        const VerifyReport r = verify_main_theorem(cx, d);
        row["aut_order"] = r.aut_order;
        row["predicted"] = r.predicted;
        row["status"] = r.passed() ? "pass" : "FAIL(" + r.first_failure() + ")";
        failed = failed || !r.passed();
      } catch (const BudgetExceeded&) {
        row["status"] = "skipped(budget)";
      } catch (const RankTooSmall&) {
        row["status"] = "refused(rank)";
      } catch (const InvalidArgument&) {
        row["status"] = "refused(reducible)";
      }
      rows.push_back(std::move(row));
    }
  }

  if (cfg.format == "json") {
    out << rows.dump(2) << "\n";
  } else {
    auto cell = [](const json& v) { return v.is_null() ? std::string("-") : v.dump(); };
    out << std::left << std::setw(8) << "type" << std::setw(4) << "m" << std::setw(10) << "|Aut|" << std::setw(11)
        << "predicted" << "status\n";
    for (const auto& r : rows)
      out << std::left << std::setw(8) << r["type"].get<std::string>() << std::setw(4) << r["m"].get<int>()
          << std::setw(10) << cell(r["aut_order"]) << std::setw(11) << cell(r["predicted"])
          << r["status"].get<std::string>() << "\n";
  }
  return failed ? kExitFailed : kExitOk;
}

int cmd_recover(const RunConfig& cfg, const Deadline* deadline, std::ostream& out) {
  json j;
  if (cfg.in == "-") {
    j = json::parse(std::cin);
  } else {
    std::ifstream f(cfg.in);
    if (!f) throw InvalidArgument("cannot open " + cfg.in);
    j = json::parse(f);
  }
  const RecoveredType r = recover_type(graph_from_json(j), deadline);
  if (cfg.format == "json")
    out << json{{"type", r.type.name()}, {"m", r.m}}.dump(2) << "\n";
  else
    out << r.type.name() << " m=" << r.m << "\n";
  return kExitOk;
}

}  // namespace

std::optional<std::chrono::milliseconds> parse_budget(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (v < 0) return std::nullopt;
  const std::string unit = text.substr(used);
  if (unit == "ms") return std::chrono::milliseconds(v);
  if (unit == "s") return std::chrono::milliseconds(v * 1000);
  if (unit == "m") return std::chrono::milliseconds(v * 60'000);
  return std::nullopt;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetries of coloured cluster complexes", "gcc-aut"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_type) {
    auto* type = sub->add_option("--type", cfg.type, "Coxeter type, e.g. A3, I2(7), A1xA2");
    if (needs_type) type->required();
    sub->add_option("--m", cfg.m, "Fuss parameter m >= 1")->check(CLI::Range(1, 1'000'000));
    sub->add_option("--format", cfg.format, "json, dot or table")->check(CLI::IsMember({"json", "dot", "table"}));
    sub->add_option("--out", cfg.out, "Write results to this file");
    sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores); default $GCC_AUT_THREADS or 1");
    sub->add_flag("--swap-bipartition", cfg.swap_bipartition, "Exchange the two colour classes");
    sub->add_option("--budget", cfg.budget, "Wall-time budget such as 1s, 500ms, 2m");
  };
  common(app.add_subcommand("build", "Export the compatibility graph"), true);
  common(app.add_subcommand("facets", "List facets and compare with the Fuss-Catalan number"), true);
  common(app.add_subcommand("maps", "Print R, S, T, C, iota, diagram maps and relation checks"), true);
  common(app.add_subcommand("verify", "Compute Aut and check the structure theorem"), true);
  auto* sweep = app.add_subcommand("sweep", "Verify a matrix of types and m values");
  common(sweep, false);
  sweep->add_option("--types", cfg.types, "Comma-separated types");
  sweep->add_option("--ms", cfg.ms, "Comma-separated m values");
  auto* recover = app.add_subcommand("recover", "Recover (type, m) from an exported graph");
  common(recover, false);
  recover->add_option("--in", cfg.in, "Graph JSON file, - for standard input");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::optional<std::chrono::milliseconds> budget;
  if (!cfg.budget.empty()) {
    budget = parse_budget(cfg.budget);
    if (!budget) {
      err << "invalid --budget '" << cfg.budget << "'\n";
      return kExitUsage;
    }
  }
  const std::optional<Deadline> deadline = budget ? std::optional<Deadline>(Deadline(*budget)) : std::nullopt;
  const Deadline* d = deadline ? &*deadline : nullptr;

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = cfg.out.empty() ? out : file;

  try {
    if (cfg.command == "build") return cmd_build(cfg, sink);
    if (cfg.command == "facets") return cmd_facets(cfg, d, sink);
    if (cfg.command == "maps") return cmd_maps(cfg, sink, err);
    if (cfg.command == "verify") return cmd_verify(cfg, d, sink, err);
    if (cfg.command == "sweep") return cmd_sweep(cfg, budget, sink, err);
    return cmd_recover(cfg, d, sink);
  } catch (const InvalidType& e) {
    err << cfg.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << cfg.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << cfg.command << ": malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RankTooSmall& e) {
    err << cfg.command << ": " << e.what() << "\n";
    return kExitRefused;
  } catch (const VerificationFailure& e) {
    err << cfg.command << ": " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << cfg.command << ": " << e.what() << "\n";
    return kExitBuild;
  }
}

}  // namespace gccaut
