#include "corrcast/regions.hpp"

#include <algorithm>

#include "corrcast/error.hpp"

namespace corrcast {
namespace {

std::vector<lp::Row> to_rows(std::span<const ConstraintSet> sets, std::vector<const Constraint*>& origin,
                             const Rational& lower_shift) {
  const std::size_t p = sets.front().variables.size();
  std::vector<lp::Row> rows;
  for (const auto& set : sets)
    for (const auto& c : set.constraints) {
      if (c.bound.is_infinite()) {
        if (c.sense == Sense::at_least) throw PreconditionError("infinite lower bound cannot be satisfied");
        continue;
      }
      std::vector<Rational> coeffs(p, 0);
      for (std::size_t i : members(c.subset)) coeffs.at(i) = 1;
      Rational rhs = c.bound.finite();
      if (c.sense == Sense::at_least) rhs += lower_shift;
      rows.push_back({std::move(coeffs), c.sense, std::move(rhs)});
      origin.push_back(&c);
    }
  return rows;
}

FeasibilityResult solve(std::span<const ConstraintSet> sets, const Rational& lower_shift) {
  if (sets.empty()) throw PreconditionError("no constraint sets given");
  for (const auto& set : sets)
    if (set.variables != sets.front().variables) throw PreconditionError("constraint sets disagree on variable order");
  std::vector<const Constraint*> origin;
  auto rows = to_rows(sets, origin, lower_shift);
  auto lp = lp::solve_feasibility(sets.front().variables.size(), rows);
  FeasibilityResult out;
  if (lp.feasible) {
    out.point = RatePoint{sets.front().variables, std::move(lp.point)};
  } else {
    for (std::size_t i : lp.conflict) out.certificate.push_back(*origin[i]);
  }
  return out;
}

// Exact answer plus a tolerance probe: shifting every lower bound by +tol (or -tol) shows
// whether the verdict sits within tol of the boundary.
Status classify(std::span<const ConstraintSet> sets, const FeasibilityResult& exact, const Rational& tol) {
  if (exact.feasible()) return tol > 0 && !solve(sets, tol).feasible() ? Status::tight : Status::holds;
  return tol > 0 && solve(sets, -tol).feasible() ? Status::tight : Status::fails;
}

Status combine(std::span<const Status> all) {
  Status out = Status::holds;
  for (Status s : all) {
    if (s == Status::fails) return Status::fails;
    if (s == Status::tight) out = Status::tight;
  }
  return out;
}

struct Prepared {
  Network net;
  SourceModel model;
  CapacityProfile capacity;
  EntropyProfile entropy;
};

Prepared prepare(const Network& net, const SourceModel& m, const RegionOptions& opts) {
  validate_model(m);
  SourceModel aligned = m.aligned_to(net.source_names());
  Network normalized = normalize(net);
  auto capacity = capacity_profile(normalized, opts.exec, opts.subset_bound);
  // ground names follow the caller's source names, not the split k' nodes
  auto ground = net.source_names();
  for (auto& f : capacity.per_sink) f = SetFunction(ground, f.values());
  capacity.network_wide = SetFunction(ground, capacity.network_wide.values());
  auto entropy = entropy_profile(aligned, opts.subset_bound);
  return {std::move(normalized), std::move(aligned), std::move(capacity), std::move(entropy)};
}

}  // namespace

std::string describe(const Constraint& c, std::span<const std::string> variables) {
  std::string lhs;
  for (std::size_t i : members(c.subset)) lhs += (lhs.empty() ? "R_" : " + R_") + variables[i];
  return lhs + (c.sense == Sense::at_most ? " <= " : " >= ") + c.bound.str() + "  [" + c.origin + "]";
}

ConstraintSet cutset_polyhedron(const Network& net, std::size_t sink, const CapacityProfile& profile) {
  if (sink >= net.node_count() || !net.is_sink(sink)) throw PreconditionError("cut-set polyhedron needs a sink");
  const SetFunction& rho = profile.for_sink(sink);
  ConstraintSet out{"C_" + net.nodes()[sink], rho.ground(), {}};
  for (SubsetMask s : nonempty_subsets(rho.ground_size()))
    if (rho(s).is_finite()) out.constraints.push_back({s, Sense::at_most, rho(s), out.label});
  return out;
}

ConstraintSet sw_polyhedron(const EntropyProfile& ep) {
  ConstraintSet out{"R_SW", ep.sigma.ground(), {}};
  for (SubsetMask s : nonempty_subsets(ep.sigma.ground_size()))
    out.constraints.push_back({s, Sense::at_least, ExtRational(snap_rational(ep.sigma_bits[s])), out.label});
  return out;
}

FeasibilityResult feasible(std::span<const ConstraintSet> sets) { return solve(sets, 0); }

bool satisfies(const RatePoint& point, const ConstraintSet& set, const Rational& tol) {
  for (const Rational& r : point.rates)
    if (r < 0) return false;
  for (const auto& c : set.constraints) {
    if (c.bound.is_infinite()) continue;
    Rational total = point.sum(c.subset);
    if (c.sense == Sense::at_most ? total > c.bound.finite() + tol : total < c.bound.finite() - tol) return false;
  }
  return true;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::tight: return "tight";
    case Status::fails: return "fails";
  }
  return "?";
}

Theorem2Report theorem2_check(const Network& net, const SourceModel& m, const RegionOptions& opts) {
  Prepared in = prepare(net, m, opts);
  const Rational tol = exact_rational(opts.tolerance);
  Theorem2Report report;
  report.ground = net.source_names();
  report.tolerance = opts.tolerance;

  // statement 1: pointwise against rho_N, compared exactly then classified by tolerance
  const std::size_t q = in.capacity.sinks.size();
  std::optional<Rational> min_margin;
  for (SubsetMask s : nonempty_subsets(report.ground.size())) {
    const Rational sigma = exact_rational(in.entropy.sigma_bits[s]);
    const ExtRational& rn = in.capacity.network_wide(s);
    if (rn.is_finite()) {
      Rational margin = rn.finite() - sigma;
      if (!min_margin || margin < *min_margin) min_margin = margin;
    }
    for (std::size_t j = 0; j < q; ++j) {
      const ExtRational& rt = in.capacity.per_sink[j](s);
      if (rt.is_finite() && sigma > rt.finite() + tol)
        report.statement1_violations.push_back({s, in.capacity.sinks[j], in.capacity.sink_names[j]});
    }
  }
  if (min_margin)
    report.statement1 = *min_margin < -tol ? Status::fails : *min_margin <= tol ? Status::tight : Status::holds;

  // statement 2: one LP per sink
  const ConstraintSet sw = sw_polyhedron(in.entropy);
  report.per_sink.resize(q);
  for (std::size_t j = 0; j < q; ++j) {
    const std::size_t t = in.capacity.sinks[j];
    std::vector<ConstraintSet> sets{sw, cutset_polyhedron(in.net, t, in.capacity)};
    auto result = feasible(sets);
    report.per_sink[j] = {t, in.net.nodes()[t], classify(sets, result, tol), std::move(result)};
  }
  std::vector<Status> statuses;
  for (const auto& c : report.per_sink) statuses.push_back(c.status);
  report.statement2 = combine(statuses);
  report.agree = report.statement1 == report.statement2 || report.statement1 == Status::tight ||
                 report.statement2 == Status::tight;
  return report;
}

SeparationReport separation_check(const Network& net, const SourceModel& m, const RegionOptions& opts) {
  Prepared in = prepare(net, m, opts);
  const Rational tol = exact_rational(opts.tolerance);
  SeparationReport report;
  report.ground = net.source_names();
  report.tolerance = opts.tolerance;
  std::vector<ConstraintSet> sets{sw_polyhedron(in.entropy)};
  for (std::size_t t : in.capacity.sinks) sets.push_back(cutset_polyhedron(in.net, t, in.capacity));
  report.result = feasible(sets);
  report.status = classify(sets, report.result, tol);
  report.rho_n = in.capacity.network_wide;
  report.rho_n_polymatroid = is_polymatroid(report.rho_n, 0, opts.exec);
  return report;
}

}  // namespace corrcast
