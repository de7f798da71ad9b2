#include "corrcast/transmissibility.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "corrcast/error.hpp"
#include "corrcast/mincut.hpp"

namespace corrcast {
namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string_view row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::tight: return "tight";
    case RowStatus::fail: return "fail";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::transmissible: return "transmissible";
    case Verdict::not_transmissible: return "not-transmissible";
    case Verdict::boundary: return "boundary";
  }
  return "?";
}

const ReportRow& TransmissibilityReport::tightest() const {
  if (rows.empty()) throw PreconditionError("report has no rows");
  return *std::min_element(rows.begin(), rows.end(),
                           [](const ReportRow& a, const ReportRow& b) { return a.margin < b.margin; });
}

double TransmissibilityReport::min_margin() const { return tightest().margin.to_double(); }

TransmissibilityReport check(const Network& net, const SourceModel& m, const RegionOptions& opts) {
  if (!(opts.tolerance >= 0)) throw PreconditionError("tolerance must be nonnegative");
  validate_model(m);
  const SourceModel aligned = m.aligned_to(net.source_names());
  const Network normalized = normalize(net);
  const auto capacity = capacity_profile(normalized, opts.exec, opts.subset_bound);
  const auto entropy = entropy_profile(aligned, opts.subset_bound);
  const Rational tol = exact_rational(opts.tolerance);

  TransmissibilityReport report;
  report.sources = net.source_names();
  report.sinks = capacity.sink_names;
  report.tolerance = opts.tolerance;
  for (SubsetMask s : nonempty_subsets(report.sources.size())) {
    ReportRow row;
    row.subset = s;
    row.label = subset_label(s, report.sources);
    row.sigma = entropy.sigma_bits[s];
    row.sigma_exact = exact_rational(row.sigma);
    row.rho_n = capacity.network_wide(s);
    row.margin = row.rho_n - row.sigma_exact;
    if (row.margin.is_infinite() || row.margin.finite() > tol)
      row.status = RowStatus::pass;
    else
      row.status = row.margin.finite() < -tol ? RowStatus::fail : RowStatus::tight;

    std::optional<std::size_t> first;
    for (std::size_t j = 0; j < capacity.sinks.size(); ++j)
      if (capacity.per_sink[j](s) == row.rho_n) {
        row.binding_sinks.push_back(capacity.sink_names[j]);
        if (!first) first = capacity.sinks[j];
      }
    if (first && row.rho_n.is_finite()) {
      std::vector<std::size_t> source_nodes;
      for (std::size_t i : members(s)) source_nodes.push_back(normalized.sources()[i]);
      auto flow = max_flow(normalized, source_nodes, *first);
      for (std::size_t e : cut_edges(normalized, flow.min_cut)) row.binding_cut.push_back(normalized.edge_label(e));
    }
    report.rows.push_back(std::move(row));
  }

  const bool any_fail = std::any_of(report.rows.begin(), report.rows.end(),
                                    [](const ReportRow& r) { return r.status == RowStatus::fail; });
  const bool all_tight = std::all_of(report.rows.begin(), report.rows.end(),
                                     [](const ReportRow& r) { return r.status == RowStatus::tight; });
  report.verdict = any_fail ? Verdict::not_transmissible : all_tight ? Verdict::boundary : Verdict::transmissible;
  return report;
}

std::string diagnose(const TransmissibilityReport& report) {
  const ReportRow& worst = report.tightest();
  std::string out;
  switch (report.verdict) {
    case Verdict::transmissible:
      out = "transmissible with minimum margin " + fmt9(worst.margin.to_double()) + " on subset " + worst.label + "\n";
      break;
    case Verdict::boundary:
      out = "boundary: every subset is tight within " + fmt9(report.tolerance) + "\n";
      break;
    case Verdict::not_transmissible: {
      out = "not transmissible: subset " + worst.label + " short by " + fmt9(-worst.margin.to_double()) + " bits\n";
      break;
    }
  }
  for (const auto& row : report.rows) {
    if (row.status == RowStatus::pass) continue;
    std::string sinks;
    for (const auto& t : row.binding_sinks) sinks += (sinks.empty() ? "" : ", ") + t;
    out += "  " + std::string(row_status_name(row.status)) + " " + row.label + " (margin " +
           fmt9(row.margin.to_double()) + "), binding sink " + sinks + "\n";
  }
  if (report.verdict == Verdict::not_transmissible) {
    std::string cut;
    for (const auto& e : worst.binding_cut) cut += (cut.empty() ? "" : ", ") + e;
    out += "  raise the total capacity of cut {" + cut + "} by at least " + to_string(-worst.margin.finite()) + " (" +
           fmt9(-worst.margin.to_double()) + ")\n";
  }
  return out;
}

}  // namespace corrcast
