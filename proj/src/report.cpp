#include "corrcast/report.hpp"

#include <algorithm>
#include <cstdio>

namespace corrcast::report {
namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : std::string(sep)) + s;
  return out;
}

std::string ext(const ExtRational& v) {
  if (v.is_infinite()) return "inf";
  return v.str() + (v.finite().get_den() == 1 ? "" : " (" + fmt(v.to_double()) + ")");
}

std::string point_text(const RatePoint& p) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < p.rates.size(); ++i) parts.push_back(p.sources[i] + "=" + to_string(p.rates[i]));
  return "(" + join(parts, ", ") + ")";
}

std::string feasibility_text(const FeasibilityResult& f, const std::vector<std::string>& ground) {
  if (f.feasible()) return "feasible, witness " + point_text(*f.point) + "\n";
  std::string out = "infeasible, certificate:\n";
  for (const auto& c : f.certificate) out += "    " + describe(c, ground) + "\n";
  return out;
}

}  // namespace

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string Table::str() const {
  std::vector<std::size_t> width;
  for (const auto& row : rows_)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : "  " + pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

Json to_json(const TransmissibilityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"subset", row.label},
                    {"sigma", row.sigma},
                    {"rho_n", row.rho_n.str()},
                    {"margin", row.margin.is_infinite() ? Json("inf") : Json(row.margin.to_double())},
                    {"status", row_status_name(row.status)},
                    {"binding_sinks", row.binding_sinks},
                    {"binding_cut", row.binding_cut}});
  }
  return {{"sources", r.sources}, {"sinks", r.sinks},       {"rows", rows},
          {"verdict", verdict_name(r.verdict)}, {"tolerance", r.tolerance}};
}

std::string to_table(const TransmissibilityReport& r) {
  Table t({"subset", "sigma", "rho_N", "margin", "status", "binding"});
  for (const auto& row : r.rows)
    t.add({row.label, fmt(row.sigma), ext(row.rho_n), row.margin.is_infinite() ? "inf" : fmt(row.margin.to_double()),
           std::string(row_status_name(row.status)), join(row.binding_sinks, ",")});
  return t.str() + "verdict: " + std::string(verdict_name(r.verdict)) + " (tol " + fmt(r.tolerance) + ")\n";
}

Json to_json(const CapacityProfile& p) {
  const auto& ground = p.network_wide.ground();
  Json per_sink = Json::object();
  for (std::size_t j = 0; j < p.sinks.size(); ++j) {
    Json values = Json::object();
    for (SubsetMask s : nonempty_subsets(ground.size())) values[subset_label(s, ground)] = p.per_sink[j](s).str();
    per_sink[p.sink_names[j]] = values;
  }
  Json wide = Json::object();
  for (SubsetMask s : nonempty_subsets(ground.size())) wide[subset_label(s, ground)] = p.network_wide(s).str();
  return {{"sources", ground}, {"sinks", p.sink_names}, {"rho_t", per_sink}, {"rho_n", wide}};
}

std::string to_table(const CapacityProfile& p) {
  std::vector<std::string> header{"subset"};
  for (const auto& name : p.sink_names) header.push_back("rho_" + name);
  header.push_back("rho_N");
  Table t(header);
  const auto& ground = p.network_wide.ground();
  for (SubsetMask s : nonempty_subsets(ground.size())) {
    std::vector<std::string> row{subset_label(s, ground)};
    for (const auto& f : p.per_sink) row.push_back(ext(f(s)));
    row.push_back(ext(p.network_wide(s)));
    t.add(row);
  }
  return t.str();
}

Json to_json(const EntropyProfile& e) {
  const auto& ground = e.sigma.ground();
  Json joint = Json::object(), sigma = Json::object();
  for (SubsetMask s : nonempty_subsets(ground.size())) {
    joint[subset_label(s, ground)] = e.joint_bits[s];
    sigma[subset_label(s, ground)] = e.sigma_bits[s];
  }
  return {{"sources", ground}, {"joint", joint}, {"sigma", sigma}};
}

std::string to_table(const EntropyProfile& e) {
  Table t({"subset", "H(X_S)", "H(X_S|X_rest)"});
  const auto& ground = e.sigma.ground();
  for (SubsetMask s : nonempty_subsets(ground.size()))
    t.add({subset_label(s, ground), fmt(e.joint_bits[s]), fmt(e.sigma_bits[s])});
  return t.str();
}

Json to_json(const SetFunction& f, std::string_view kind, const AxiomReport& r) {
  Json out{{"ground", f.ground()}, {"kind", kind}, {"holds", r.holds}};
  if (r.witness)
    out["witness"] = {{"axiom", axiom_name(r.witness->axiom)},
                      {"first", subset_label(r.witness->first, f.ground())},
                      {"second", subset_label(r.witness->second, f.ground())}};
  return out;
}

std::string to_table(const SetFunction& f, std::string_view kind, const AxiomReport& r) {
  std::string out = std::string(kind) + ": " + (r.holds ? "holds" : "fails") + "\n";
  if (r.witness) {
    const auto& w = *r.witness;
    out += "  " + std::string(axiom_name(w.axiom)) + " violated at " + subset_label(w.first, f.ground()) + " = " +
           f(w.first).str() + ", " + subset_label(w.second, f.ground()) + " = " + f(w.second).str() + "\n";
  }
  return out;
}

Json to_json(const RatePoint& p) {
  Json out = Json::object();
  for (std::size_t i = 0; i < p.rates.size(); ++i) out[p.sources[i]] = to_string(p.rates[i]);
  return out;
}

Json to_json(const FeasibilityResult& f, const std::vector<std::string>& ground) {
  Json out{{"feasible", f.feasible()}};
  if (f.point) out["witness"] = to_json(*f.point);
  if (!f.feasible()) {
    Json cert = Json::array();
    for (const auto& c : f.certificate)
      cert.push_back({{"subset", subset_label(c.subset, ground)},
                      {"sense", c.sense == Sense::at_most ? "<=" : ">="},
                      {"bound", c.bound.str()},
                      {"origin", c.origin}});
    out["certificate"] = cert;
  }
  return out;
}

Json to_json(const Theorem2Report& r) {
  Json violations = Json::array();
  for (const auto& v : r.statement1_violations)
    violations.push_back({{"subset", subset_label(v.subset, r.ground)}, {"sink", v.sink_name}});
  Json sinks = Json::array();
  for (const auto& c : r.per_sink) {
    Json entry = to_json(c.result, r.ground);
    entry["sink"] = c.sink_name;
    entry["status"] = status_name(c.status);
    sinks.push_back(entry);
  }
  return {{"sources", r.ground},
          {"statement1", status_name(r.statement1)},
          {"statement1_violations", violations},
          {"statement2", status_name(r.statement2)},
          {"per_sink", sinks},
          {"agree", r.agree},
          {"tolerance", r.tolerance}};
}

std::string to_table(const Theorem2Report& r) {
  std::string out = "statement 1 (H(X_S|X_rest) <= rho_N(S) for all S): " + std::string(status_name(r.statement1)) + "\n";
  for (const auto& v : r.statement1_violations)
    out += "  violated by " + subset_label(v.subset, r.ground) + " at sink " + v.sink_name + "\n";
  out += "statement 2 (R_SW meets every C_t): " + std::string(status_name(r.statement2)) + "\n";
  for (const auto& c : r.per_sink)
    out += "  " + c.sink_name + ": " + std::string(status_name(c.status)) + ", " + feasibility_text(c.result, r.ground);
  out += std::string("agree: ") + (r.agree ? "yes" : "no") + "\n";
  return out;
}

Json to_json(const SeparationReport& r) {
  Json out{{"sources", r.ground}, {"separable", status_name(r.status)}, {"result", to_json(r.result, r.ground)}};
  out["rho_n_polymatroid"] = to_json(r.rho_n, "polymatroid", r.rho_n_polymatroid)["holds"];
  out["tolerance"] = r.tolerance;
  return out;
}

std::string to_table(const SeparationReport& r) {
  return "separation (R_SW meets all C_t at once): " + std::string(status_name(r.status)) + "\n  " +
         feasibility_text(r.result, r.ground) + "rho_N " +
         (r.rho_n_polymatroid.holds ? "is" : "is not") + " a polymatroid\n";
}

Json to_json(const SimResult& r) {
  Json sinks = Json::array();
  for (std::size_t j = 0; j < r.sinks.size(); ++j)
    sinks.push_back({{"sink", r.sinks[j]},
                     {"errors", r.errors[j]},
                     {"estimate", r.estimate[j]},
                     {"half_width", r.half_width[j]}});
  return {{"n", r.n},
          {"tau", r.tau},
          {"delta", r.delta},
          {"lambda", r.lambda},
          {"trials", r.trials},
          {"seed", r.seed},
          {"fixed_code", r.fixed_code},
          {"typical_set_size", r.typical_set_size},
          {"atypical_trials", r.atypical_trials},
          {"sinks", sinks}};
}

std::string to_table(const SimResult& r) { return sweep_table({r}); }

std::string sweep_table(const std::vector<SimResult>& results) {
  Table t({"n", "sink", "errors", "trials", "lambda_hat", "+/-"});
  for (const auto& r : results)
    for (std::size_t j = 0; j < r.sinks.size(); ++j)
      t.add({std::to_string(r.n), r.sinks[j], std::to_string(r.errors[j]), std::to_string(r.trials),
             fmt(r.estimate[j]), fmt(r.half_width[j])});
  return t.str();
}

}  // namespace corrcast::report
