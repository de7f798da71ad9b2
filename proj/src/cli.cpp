#include "corrcast/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "corrcast/error.hpp"
#include "corrcast/fixtures.hpp"
#include "corrcast/report.hpp"

namespace corrcast::cli {
namespace {

using report::Json;

struct Globals {
  std::string format = "table";
  double tol = 1e-9;
  bool quiet = false;
  std::size_t max_sources = kDefaultSubsetBound;

  bool json() const { return format == "json"; }
  RegionOptions options() const { return {tol, Exec::parallel, max_sources}; }
};

int status_exit(Status s) {
  switch (s) {
    case Status::holds: return ok;
    case Status::tight: return boundary;
    case Status::fails: return fail;
  }
  return fail;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::transmissible: return ok;
    case Verdict::boundary: return boundary;
    case Verdict::not_transmissible: return fail;
  }
  return fail;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

int do_check(const Globals& g, const std::string& network, const std::string& source, std::ostream& out) {
  const auto r = check(load_network(network), load_source_model(source), g.options());
  if (g.json()) {
    Json doc = report::to_json(r);
    doc["diagnosis"] = diagnose(r);
    emit(out, doc);
  } else {
    out << report::to_table(r);
    if (!g.quiet) out << diagnose(r);
  }
  return verdict_exit(r.verdict);
}

int do_mincut(const Globals& g, const std::string& network, const std::string& sink, const std::string& subset,
              bool all, std::ostream& out) {
  const Network net = normalize(load_network(network));
  const auto ground = net.source_names();
  if (all || subset.empty()) {
    if (!sink.empty() || !subset.empty()) throw PreconditionError("--all and --subset/--sink are exclusive");
    const auto profile = capacity_profile(net, Exec::parallel, g.max_sources);
    if (g.json() || all)
      emit(out, report::to_json(profile));
    else
      out << report::to_table(profile);
    return ok;
  }
  const SubsetMask s = parse_subset(subset, ground);
  if (s == 0) throw PreconditionError("--subset must name at least one source");
  std::vector<std::size_t> targets;
  if (sink.empty())
    targets = net.sinks();
  else
    targets.push_back(net.index_of(sink));
  std::vector<std::size_t> source_nodes;
  for (std::size_t i : members(s)) source_nodes.push_back(net.sources()[i]);
  Json rows = Json::array();
  report::Table table({"sink", "rho_t", "cut edges"});
  for (std::size_t t : targets) {
    if (!net.is_sink(t)) throw SemanticError("'" + net.nodes()[t] + "' is not a sink");
    const auto flow = max_flow(net, source_nodes, t);
    std::vector<std::string> edges;
    if (flow.value.is_finite())
      for (std::size_t e : cut_edges(net, flow.min_cut)) edges.push_back(net.edge_label(e));
    rows.push_back({{"sink", net.nodes()[t]}, {"value", flow.value.str()}, {"cut_edges", edges}});
    std::string joined;
    for (const auto& e : edges) joined += (joined.empty() ? "" : ", ") + e;
    table.add({net.nodes()[t], flow.value.str(), joined});
  }
  if (g.json())
    emit(out, {{"subset", subset_label(s, ground)}, {"sinks", rows}});
  else
    out << "subset " << subset_label(s, ground) << "\n" << table.str();
  return ok;
}

int do_entropy(const Globals& g, const std::string& source, const std::string& subset, std::ostream& out) {
  const auto m = load_source_model(source);
  validate_model(m);
  if (!subset.empty()) {
    const SubsetMask s = parse_subset(subset, m.sources);
    if (s == 0) throw PreconditionError("--subset must name at least one source");
    const double joint = joint_entropy(m, s);
    const double cond = conditional_entropy(m, s);
    if (g.json())
      emit(out, {{"subset", subset_label(s, m.sources)}, {"joint", joint}, {"conditional", cond}});
    else
      out << "H(X_" << subset_label(s, m.sources) << ") = " << report::fmt(joint) << "\nH(X_"
          << subset_label(s, m.sources) << "|X_rest) = " << report::fmt(cond) << "\n";
    return ok;
  }
  const auto e = entropy_profile(m, g.max_sources);
  if (g.json())
    emit(out, report::to_json(e));
  else
    out << report::to_table(e);
  return ok;
}

int do_setfunc(const Globals& g, const std::string& file, const std::string& kind, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw SyntaxError("cannot read set-function file '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const SetFunction f = parse_set_function(buf.str());
  check_subset_bound(f.ground_size(), g.max_sources);
  const Rational tol = exact_rational(g.tol);
  const bool poly = kind == "poly" || kind == "polymatroid";
  const AxiomReport r = poly ? is_polymatroid(f, tol) : is_copolymatroid(f, tol);
  const std::string_view name = poly ? "polymatroid" : "co-polymatroid";
  if (g.json())
    emit(out, report::to_json(f, name, r));
  else
    out << report::to_table(f, name, r);
  return r.holds ? ok : fail;
}

int do_regions(const Globals& g, const std::string& network, const std::string& source, bool separation,
               std::ostream& out) {
  const Network net = load_network(network);
  const SourceModel m = load_source_model(source);
  Json doc = Json::object();
  const auto t2 = theorem2_check(net, m, g.options());
  doc["theorem2"] = report::to_json(t2);
  if (!g.json()) out << report::to_table(t2);
  int code = status_exit(t2.statement2);
  if (separation) {
    const auto sep = separation_check(net, m, g.options());
    doc["separation"] = report::to_json(sep);
    if (!g.json()) out << report::to_table(sep);
    code = status_exit(sep.status);
  }
  if (g.json()) emit(out, doc);
  return code;
}

struct SimulateArgs {
  std::string network;
  std::string source;
  SimParams params;
  double lambda = 0;
  std::vector<std::size_t> sweep;
  bool serial = false;
};

int do_simulate(const Globals& g, SimulateArgs a, bool lambda_given, std::ostream& out) {
  const Network net = load_network(a.network);
  const SourceModel m = load_source_model(a.source);
  if (lambda_given) a.params.lambda = a.lambda;
  const Exec exec = a.serial ? Exec::serial : Exec::parallel;
  std::vector<std::size_t> lengths = a.sweep.empty() ? std::vector<std::size_t>{a.params.n} : a.sweep;
  std::vector<SimResult> results;
  for (std::size_t n : lengths) {
    SimParams p = a.params;
    p.n = n;
    results.push_back(estimate_error(net, m, p, exec));
  }
  if (g.json()) {
    if (a.sweep.empty()) {
      emit(out, report::to_json(results.front()));
    } else {
      Json all = Json::array();
      for (const auto& r : results) all.push_back(report::to_json(r));
      emit(out, {{"sweep", all}});
    }
  } else {
    out << report::sweep_table(results);
  }
  return ok;
}

struct XorTally {
  std::size_t pairs = 0;
  std::array<std::size_t, 2> errors{0, 0};
};

XorTally xor_exhaustive(std::size_t n) {
  XorTally tally;
  std::vector<std::uint8_t> x1(n), x2(n);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        x1[k] = static_cast<std::uint8_t>(a >> k & 1U);
        x2[k] = static_cast<std::uint8_t>(b >> k & 1U);
      }
      const auto got = butterfly_xor(x1, x2);
      for (std::size_t j = 0; j < 2; ++j)
        if (got[j].x1 != x1 || got[j].x2 != x2) ++tally.errors[j];
      ++tally.pairs;
    }
  return tally;
}

int do_demo(const Globals& g, const std::string& name, double p, std::ostream& out) {
  const bool first = name == "example1";
  const Network net = first ? fixtures::butterfly() : fixtures::example2_network(p);
  const SourceModel m = first ? fixtures::uniform_pair() : fixtures::dsbs(p);
  const auto profile = capacity_profile(normalize(net), Exec::parallel, g.max_sources);
  const auto entropy = entropy_profile(m, g.max_sources);
  const auto verdict = check(net, m, g.options());
  const auto sep = separation_check(net, m, g.options());
  Json doc{{"example", name}};
  if (!first) doc["p"] = p, doc["h"] = binary_entropy(p);
  doc["capacity"] = report::to_json(profile);
  doc["entropy"] = report::to_json(entropy);
  doc["check"] = report::to_json(verdict);
  doc["separation"] = report::to_json(sep);
  if (!g.json()) {
    if (!first) out << "p = " << report::fmt(p) << ", h(p) = " << report::fmt(binary_entropy(p)) << "\n";
    out << "capacities\n" << report::to_table(profile) << "\nentropies\n" << report::to_table(entropy);
    out << "\nmatching condition\n" << report::to_table(verdict);
    if (!g.quiet) out << diagnose(verdict);
    out << "\n" << report::to_table(sep);
  }
  if (first) {
    const XorTally tally = xor_exhaustive(8);
    doc["butterfly_xor"] = {{"n", 8}, {"pairs", tally.pairs}, {"errors_t1", tally.errors[0]},
                            {"errors_t2", tally.errors[1]}};
    if (!g.json())
      out << "\nbutterfly XOR, n = 8: " << tally.pairs << " input pairs, errors t1 = " << tally.errors[0]
          << ", t2 = " << tally.errors[1] << "\n";
  }
  if (g.json()) emit(out, doc);
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlated-source multicast over capacitated acyclic networks", "corrcast"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance for tight comparisons")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_flag("--quiet", g.quiet, "Omit diagnoses and commentary");
  app.add_option("--max-sources", g.max_sources, "Subset enumeration bound")
      ->check(CLI::Range(std::size_t{1}, kMaxGround))
      ->capture_default_str();

  std::string network, source, sink, subset, file, kind = "poly", demo_name;
  bool all = false, separation = false;
  double demo_p = 0.11;

  auto* check_cmd = app.add_subcommand("check", "Decide transmissibility (matching condition)");
  check_cmd->add_option("--network", network, "Network document")->required();
  check_cmd->add_option("--source", source, "Source model document")->required();

  auto* mincut_cmd = app.add_subcommand("mincut", "Min-cut capacities rho_t(S) and rho_N(S)");
  mincut_cmd->add_option("--network", network, "Network document")->required();
  mincut_cmd->add_option("--sink", sink, "Restrict to one sink");
  mincut_cmd->add_option("--subset", subset, "Source subset, e.g. s1+s2");
  mincut_cmd->add_flag("--all", all, "Full capacity profile as a structured document");

  auto* entropy_cmd = app.add_subcommand("entropy", "Joint and conditional entropies");
  entropy_cmd->add_option("--source", source, "Source model document")->required();
  entropy_cmd->add_option("--subset", subset, "Single subset, e.g. s1");

  auto* setfunc_cmd = app.add_subcommand("setfunc", "Set-function utilities");
  setfunc_cmd->require_subcommand(1);
  auto* verify_cmd = setfunc_cmd->add_subcommand("verify", "Check polymatroid or co-polymatroid axioms");
  verify_cmd->add_option("input,--input", file, "Set-function document")->required();
  verify_cmd->add_option("--kind", kind, "poly or copoly")
      ->transform(CLI::IsMember({"poly", "copoly", "polymatroid", "copolymatroid"}))
      ->capture_default_str();

  auto* regions_cmd = app.add_subcommand("regions", "Slepian-Wolf and cut-set polyhedra");
  regions_cmd->add_option("--network", network, "Network document")->required();
  regions_cmd->add_option("--source", source, "Source model document")->required();
  regions_cmd->add_flag("--separation", separation, "Also test R_SW against all C_t at once");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Random-binning Monte-Carlo error estimate");
  simulate_cmd->add_option("--network", sim.network, "Network document")->required();
  simulate_cmd->add_option("--source", sim.source, "Source model document")->required();
  simulate_cmd->add_option("--n", sim.params.n, "Block length")->check(CLI::PositiveNumber)->capture_default_str();
  simulate_cmd->add_option("--tau", sim.params.tau, "Rate offset tau")->capture_default_str();
  simulate_cmd->add_option("--delta", sim.params.delta, "Slack delta, 0 < delta < tau")->capture_default_str();
  auto* lambda_opt = simulate_cmd->add_option("--lambda", sim.lambda, "Typicality slack (default 3 tau / 8)");
  simulate_cmd->add_option("--trials", sim.params.trials, "Trials per block length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate_cmd->add_option("--seed", sim.params.seed, "Seed")->capture_default_str();
  simulate_cmd->add_flag("--fixed-code", sim.params.fixed_code, "Reuse one code for every trial");
  simulate_cmd->add_option("--sweep", sim.sweep, "Block lengths n1,n2,...")->delimiter(',');
  simulate_cmd->add_flag("--serial", sim.serial, "Run trials without OpenMP");

  auto* demo_cmd = app.add_subcommand("demo", "Built-in worked examples");
  demo_cmd->add_option("name", demo_name, "example1 or example2")
      ->required()
      ->check(CLI::IsMember({"example1", "example2"}));
  demo_cmd->add_option("--p", demo_p, "Crossover probability for example2")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "corrcast: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*check_cmd) return do_check(g, network, source, out);
    if (*mincut_cmd) return do_mincut(g, network, sink, subset, all, out);
    if (*entropy_cmd) return do_entropy(g, source, subset, out);
    if (*verify_cmd) return do_setfunc(g, file, kind, out);
    if (*regions_cmd) return do_regions(g, network, source, separation, out);
    if (*simulate_cmd) return do_simulate(g, sim, lambda_opt->count() > 0, out);
    if (*demo_cmd) return do_demo(g, demo_name, demo_p, out);
  } catch (const PreconditionError& e) {
    err << "corrcast: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "corrcast: " << e.what() << "\n";
    return data;
  }
  return usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"corrcast"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace corrcast::cli
