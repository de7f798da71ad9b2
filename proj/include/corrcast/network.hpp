#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corrcast/rational.hpp"

namespace corrcast {

/// Directed, capacitated channel; capacities are bits per source symbol.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  ExtRational capacity;
};

/// Capacitated acyclic digraph with designated source and sink nodes.
///
/// Construction validates the structural invariants (known endpoints, no self-loops,
/// nonnegative capacities, unique node names, acyclicity). Normalization
/// (sources disjoint from sinks, no edge entering a source) is a separate step, see
/// normalize(). Instances are immutable.
class Network {
 public:
  Network(std::vector<std::string> nodes, std::vector<Edge> edges, std::vector<std::size_t> sources,
          std::vector<std::size_t> sinks);

  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Node indices of the sources, in ground-set order.
  const std::vector<std::size_t>& sources() const noexcept { return sources_; }
  const std::vector<std::size_t>& sinks() const noexcept { return sinks_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  std::vector<std::string> source_names() const;
  std::vector<std::string> sink_names() const;

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws SemanticError for unknown names.
  std::size_t index_of(std::string_view name) const;

  /// Edge indices entering / leaving a node, in edge-list order.
  const std::vector<std::size_t>& in_edges(std::size_t node) const { return in_[node]; }
  const std::vector<std::size_t>& out_edges(std::size_t node) const { return out_[node]; }

  bool is_source(std::size_t node) const;
  bool is_sink(std::size_t node) const;
  /// Sources and sinks disjoint, and no edge enters a source.
  bool is_normalized() const;

  /// Copy with one edge's capacity replaced.
  Network with_capacity(std::size_t edge, ExtRational capacity) const;

  std::string edge_label(std::size_t edge) const;

  /// Topological order fixed at construction; ties broken by input order.
  const std::vector<std::size_t>& topological_order() const noexcept { return order_; }

  friend bool operator==(const Network&, const Network&);

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> sources_;
  std::vector<std::size_t> sinks_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> order_;
};

/// Parses the JSON network document:
/// `{"nodes": [..], "edges": [{"from", "to", "capacity"}], "sources": [..], "sinks": [..]}`.
/// Capacities are rational strings ("1", "3/2", "0.5"), "inf", or JSON numbers.
Network parse_network(std::string_view text);
Network load_network(const std::filesystem::path& path);
std::string to_json_text(const Network& net);

/// Kahn's algorithm with the smallest-input-index node taken first. Every edge goes from
/// an earlier to a later node. Throws CycleError naming one cycle.
std::vector<std::size_t> topological_order(std::size_t node_count, std::span<const Edge> edges,
                                           std::span<const std::string> names);

/// Order in which the nodes encode; the simulator follows it.
std::vector<std::size_t> validate_acyclic(const Network& net);

/// Splits every source that is also a sink or has incoming edges: a fresh node k' takes
/// k's place in the source list and feeds k through an infinite-capacity edge. Original
/// node and edge indices are preserved; new ones are appended. Idempotent.
Network normalize(const Network& net);

/// Total capacity of edges leaving the member set.
ExtRational cut_value(const Network& net, std::span<const std::size_t> member_set);
ExtRational cut_value(const Network& net, const std::vector<bool>& membership);
/// Name-based overload; throws SemanticError for unknown nodes.
ExtRational cut_value(const Network& net, std::span<const std::string> member_names);

}  // namespace corrcast
