#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corrcast/entropy.hpp"
#include "corrcast/exec.hpp"
#include "corrcast/lp.hpp"
#include "corrcast/mincut.hpp"
#include "corrcast/network.hpp"
#include "corrcast/setfunc.hpp"

namespace corrcast {

using lp::Sense;

/// sum_{i in subset} R_i  (<= or >=)  bound
struct Constraint {
  SubsetMask subset = 0;
  Sense sense = Sense::at_most;
  ExtRational bound;
  /// Which polyhedron the row came from ("R_SW", "C_t1", ...).
  std::string origin;
};

/// Rate polyhedron over an ordered list of sources; nonnegativity is implicit.
struct ConstraintSet {
  std::string label;
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;
};

std::string describe(const Constraint& c, std::span<const std::string> variables);

/// Cut-set polyhedron of one sink: sum_S R <= rho_t(S); infinite bounds are dropped.
ConstraintSet cutset_polyhedron(const Network& net, std::size_t sink, const CapacityProfile& profile);

/// Slepian-Wolf polyhedron: sum_S R >= H(X_S | X_complement). Bounds are snapped to a
/// 1e-12 rational grid before solving.
ConstraintSet sw_polyhedron(const EntropyProfile& ep);

struct FeasibilityResult {
  std::optional<RatePoint> point;
  /// Irreducible set of constraints whose bounds contradict (when infeasible).
  std::vector<Constraint> certificate;

  bool feasible() const { return point.has_value(); }
};

/// Exact LP feasibility of the intersection. Throws PreconditionError if the sets do not
/// share one variable order.
FeasibilityResult feasible(std::span<const ConstraintSet> sets);

/// Every constraint of `set` holds at `point` within tol.
bool satisfies(const RatePoint& point, const ConstraintSet& set, const Rational& tol = 0);

/// Three-valued outcome: `tight` means the answer flips within the tolerance.
enum class Status { holds, tight, fails };
std::string_view status_name(Status s);
inline bool holds(Status s) { return s != Status::fails; }

struct SinkRegionCheck {
  std::size_t sink = 0;
  std::string sink_name;
  Status status = Status::holds;
  FeasibilityResult result;
};

struct SubsetSinkViolation {
  SubsetMask subset;
  std::size_t sink;
  std::string sink_name;
};

struct Theorem2Report {
  std::vector<std::string> ground;
  double tolerance = 1e-9;
  /// H(X_S|X_complement) <= rho_N(S) for every S.
  Status statement1 = Status::holds;
  std::vector<SubsetSinkViolation> statement1_violations;
  /// R_SW intersected with C_t is nonempty for every sink t.
  Status statement2 = Status::holds;
  std::vector<SinkRegionCheck> per_sink;
  bool agree = true;
};

struct RegionOptions {
  double tolerance = 1e-9;
  Exec exec = Exec::parallel;
  std::size_t subset_bound = kDefaultSubsetBound;
};

/// Evaluates both statements of the polyhedral equivalence independently. The network is
/// normalized and the model aligned to its source order internally.
Theorem2Report theorem2_check(const Network& net, const SourceModel& m, const RegionOptions& opts = {});

struct SeparationReport {
  std::vector<std::string> ground;
  double tolerance = 1e-9;
  /// R_SW intersected with every C_t at once.
  Status status = Status::holds;
  FeasibilityResult result;
  SetFunction rho_n;
  AxiomReport rho_n_polymatroid;
};

SeparationReport separation_check(const Network& net, const SourceModel& m, const RegionOptions& opts = {});

}  // namespace corrcast
