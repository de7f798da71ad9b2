#include "corrcast/mincut.hpp"

#include <algorithm>
#include <deque>

#include "corrcast/error.hpp"

namespace corrcast {
namespace {

struct Arc {
  std::size_t to;
  std::size_t rev;
  ExtRational residual;
};

class Residual {
 public:
  explicit Residual(std::size_t n) : adj_(n) {}

  void add(std::size_t from, std::size_t to, const ExtRational& cap) {
    adj_[from].push_back(Arc{to, adj_[to].size(), cap});
    adj_[to].push_back(Arc{from, adj_[from].size() - 1, ExtRational(0)});
  }

  // shortest augmenting path by BFS; returns parent arcs or empty when none
  bool bfs(std::size_t s, std::size_t t, std::vector<std::pair<std::size_t, std::size_t>>& parent) const {
    parent.assign(adj_.size(), {SIZE_MAX, SIZE_MAX});
    std::deque<std::size_t> queue{s};
    parent[s] = {s, SIZE_MAX};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < adj_[v].size(); ++a) {
        const Arc& arc = adj_[v][a];
        if (parent[arc.to].first != SIZE_MAX || arc.residual <= ExtRational(0)) continue;
        parent[arc.to] = {v, a};
        if (arc.to == t) return true;
        queue.push_back(arc.to);
      }
    }
    return false;
  }

  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (const Arc& arc : adj_[v])
        if (!seen[arc.to] && arc.residual > ExtRational(0)) {
          seen[arc.to] = true;
          queue.push_back(arc.to);
        }
    }
    return seen;
  }

  Arc& arc(std::size_t v, std::size_t a) { return adj_[v][a]; }

 private:
  std::vector<std::vector<Arc>> adj_;
};

std::vector<std::size_t> source_nodes(const Network& net, SubsetMask s) {
  if (s == 0) throw PreconditionError("source subset must be nonempty");
  if (s > full_mask(net.sources().size())) throw PreconditionError("subset outside the source set");
  std::vector<std::size_t> out;
  for (std::size_t i : members(s)) out.push_back(net.sources()[i]);
  return out;
}

}  // namespace

FlowResult max_flow(const Network& net, std::span<const std::size_t> source_set, std::size_t sink) {
  const std::size_t n = net.node_count();
  if (sink >= n) throw PreconditionError("sink index out of range");
  for (std::size_t v : source_set) {
    if (v >= n) throw PreconditionError("source index out of range");
    if (v == sink) throw PreconditionError("sink '" + net.nodes()[sink] + "' lies inside the source set");
  }
  const std::size_t super = n;
  Residual g(n + 1);
  for (const Edge& e : net.edges()) g.add(e.tail, e.head, e.capacity);
  for (std::size_t v : source_set) g.add(super, v, ExtRational::infinity());

  Rational total = 0;
  std::vector<std::pair<std::size_t, std::size_t>> parent;
  while (g.bfs(super, sink, parent)) {
    ExtRational bottleneck = ExtRational::infinity();
    for (std::size_t v = sink; v != super; v = parent[v].first)
      bottleneck = std::min(bottleneck, g.arc(parent[v].first, parent[v].second).residual);
    if (bottleneck.is_infinite()) {
      std::vector<std::size_t> cut(source_set.begin(), source_set.end());
      std::sort(cut.begin(), cut.end());
      cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
      return {ExtRational::infinity(), std::move(cut)};
    }
    const Rational& push = bottleneck.finite();
    for (std::size_t v = sink; v != super; v = parent[v].first) {
      Arc& fwd = g.arc(parent[v].first, parent[v].second);
      fwd.residual = fwd.residual - push;
      Arc& back = g.arc(v, fwd.rev);
      back.residual += ExtRational(push);
    }
    total += push;
  }
  auto seen = g.reachable(super);
  FlowResult out{ExtRational(total), {}};
  for (std::size_t v = 0; v < n; ++v)
    if (seen[v]) out.min_cut.push_back(v);
  return out;
}

std::vector<std::size_t> cut_edges(const Network& net, std::span<const std::size_t> member_set) {
  std::vector<bool> in(net.node_count(), false);
  for (std::size_t v : member_set) in.at(v) = true;
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < net.edges().size(); ++e)
    if (in[net.edges()[e].tail] && !in[net.edges()[e].head]) out.push_back(e);
  return out;
}

ExtRational rho_t(const Network& net, SubsetMask s, std::size_t sink) {
  if (sink >= net.node_count() || !net.is_sink(sink)) throw PreconditionError("rho_t needs a sink node");
  auto nodes = source_nodes(net, s);
  return max_flow(net, nodes, sink).value;
}

ExtRational rho_n(const Network& net, SubsetMask s) {
  ExtRational best = ExtRational::infinity();
  for (std::size_t t : net.sinks()) best = std::min(best, rho_t(net, s, t));
  if (net.sinks().empty()) source_nodes(net, s);
  return best;
}

const SetFunction& CapacityProfile::for_sink(std::size_t sink_node) const {
  for (std::size_t i = 0; i < sinks.size(); ++i)
    if (sinks[i] == sink_node) return per_sink[i];
  throw PreconditionError("node is not a sink of this profile");
}

CapacityProfile capacity_profile(const Network& net, Exec exec, std::size_t subset_bound) {
  const std::size_t p = net.sources().size();
  check_subset_bound(p, subset_bound);
  auto ground = net.source_names();
  const std::size_t q = net.sinks().size();
  const std::size_t subsets = static_cast<std::size_t>(full_mask(p));
  std::vector<ExtRational> values(subsets * q);

  auto task = [&](std::size_t k) {
    const SubsetMask s = static_cast<SubsetMask>(k / q + 1);
    const std::size_t sink = net.sinks()[k % q];
    values[k] = max_flow(net, source_nodes(net, s), sink).value;
  };
  const std::int64_t tasks = static_cast<std::int64_t>(subsets * q);
  if (exec == Exec::parallel) {
    detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < tasks; ++k) slot.run([&] { task(static_cast<std::size_t>(k)); });
    slot.rethrow();
  } else {
    for (std::int64_t k = 0; k < tasks; ++k) task(static_cast<std::size_t>(k));
  }

  CapacityProfile profile;
  profile.sinks = net.sinks();
  profile.sink_names = net.sink_names();
  profile.per_sink.assign(q, SetFunction(ground));
  profile.network_wide = SetFunction(ground);
  for (SubsetMask s = 1; s <= full_mask(p) && s != 0; ++s) {
    ExtRational best = ExtRational::infinity();
    for (std::size_t j = 0; j < q; ++j) {
      const ExtRational& v = values[(s - 1) * q + j];
      profile.per_sink[j].set(s, v);
      best = std::min(best, v);
    }
    profile.network_wide.set(s, best);
  }
  return profile;
}

}  // namespace corrcast
