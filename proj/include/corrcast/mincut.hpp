#pragma once

#include <span>
#include <vector>

#include "corrcast/exec.hpp"
#include "corrcast/network.hpp"
#include "corrcast/setfunc.hpp"
#include "corrcast/subset.hpp"

namespace corrcast {

struct FlowResult {
  ExtRational value;
  /// Source side of a minimum cut, ascending node indices; contains the source set.
  std::vector<std::size_t> min_cut;
};

/// Maximum flow from a contracted super-source over `source_set` to `sink`, exact.
/// The super-source is attached by infinite-capacity edges, so reported cuts use the
/// network's own node indices. An all-infinite path yields an infinite value.
FlowResult max_flow(const Network& net, std::span<const std::size_t> source_set, std::size_t sink);

/// Indices of edges leaving a node set.
std::vector<std::size_t> cut_edges(const Network& net, std::span<const std::size_t> member_set);

/// Minimum cut separating the sources in S (mask over net.sources()) from sink t.
ExtRational rho_t(const Network& net, SubsetMask s, std::size_t sink);
/// Minimum over all sinks of rho_t.
ExtRational rho_n(const Network& net, SubsetMask s);

struct CapacityProfile {
  std::vector<std::size_t> sinks;
  std::vector<std::string> sink_names;
  /// Parallel to `sinks`.
  std::vector<SetFunction> per_sink;
  SetFunction network_wide;

  const SetFunction& for_sink(std::size_t sink_node) const;
};

/// Every rho_t(S) and rho_N(S). One max-flow per (subset, sink), run concurrently under
/// Exec::parallel; results land in subset-index order either way.
CapacityProfile capacity_profile(const Network& net, Exec exec = Exec::parallel,
                                 std::size_t subset_bound = kDefaultSubsetBound);

}  // namespace corrcast
