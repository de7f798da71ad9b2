#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "corrcast/entropy.hpp"
#include "corrcast/network.hpp"
#include "corrcast/regions.hpp"

namespace corrcast {

enum class RowStatus { pass, tight, fail };
enum class Verdict { transmissible, not_transmissible, boundary };

std::string_view row_status_name(RowStatus s);
std::string_view verdict_name(Verdict v);

struct ReportRow {
  SubsetMask subset = 0;
  std::string label;
  /// H(X_S | X_complement); `sigma_exact` is the exact value of the double.
  double sigma = 0;
  Rational sigma_exact;
  ExtRational rho_n;
  /// rho_N(S) - sigma(S), exact.
  ExtRational margin;
  RowStatus status = RowStatus::pass;
  /// Sinks attaining min_t rho_t(S), as names.
  std::vector<std::string> binding_sinks;
  /// Edges of a minimum cut for S at the first binding sink.
  std::vector<std::string> binding_cut;
};

struct TransmissibilityReport {
  std::vector<std::string> sources;
  std::vector<std::string> sinks;
  std::vector<ReportRow> rows;
  Verdict verdict = Verdict::transmissible;
  double tolerance = 1e-9;

  /// Row with the smallest margin (first in row order on ties).
  const ReportRow& tightest() const;
  double min_margin() const;
};

/// Matching condition H(X_S|X_complement) <= rho_N(S) for every nonempty S, row by row.
/// Normalizes the network and aligns the model to the network's source order first.
TransmissibilityReport check(const Network& net, const SourceModel& m, const RegionOptions& opts = {});

/// Tightest subset, binding sinks of tight rows and, when failing, the capacity increase
/// the worst subset needs.
std::string diagnose(const TransmissibilityReport& report);

}  // namespace corrcast
