#include "corrcast/network.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "corrcast/error.hpp"

namespace corrcast {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::size_t> resolve_all(const std::vector<std::string>& names,
                                     const std::unordered_map<std::string, std::size_t>& index,
                                     const char* what) {
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (const auto& n : names) {
    auto it = index.find(n);
    if (it == index.end()) throw SemanticError(std::string(what) + " '" + n + "' is not a node");
    if (!seen.insert(it->second).second) throw SemanticError(std::string("duplicate ") + what + " '" + n + "'");
    out.push_back(it->second);
  }
  return out;
}

ExtRational capacity_from_json(const json& value) {
  if (value.is_string()) {
    try {
      return parse_ext_rational(value.get<std::string>());
    } catch (const SyntaxError& e) {
      throw SyntaxError(std::string("capacity: ") + e.what());
    }
  }
  if (value.is_number()) return ExtRational(parse_rational(value.dump()));
  throw SyntaxError("capacity must be a rational string, \"inf\" or a number");
}

std::vector<std::string> string_list(const json& doc, const char* field) {
  if (!doc.contains(field)) throw SyntaxError(std::string("missing field '") + field + "'");
  const json& arr = doc.at(field);
  if (!arr.is_array()) throw SyntaxError(std::string("field '") + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw SyntaxError(std::string("entries of '") + field + "' must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  std::string candidate = base + "'";
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) candidate += "'";
  return candidate;
}

}  // namespace

Network::Network(std::vector<std::string> nodes, std::vector<Edge> edges, std::vector<std::size_t> sources,
                 std::vector<std::size_t> sinks)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), sources_(std::move(sources)), sinks_(std::move(sinks)) {
  std::set<std::string> names;
  for (const auto& n : nodes_) {
    if (n.empty()) throw SemanticError("empty node identifier");
    if (!names.insert(n).second) throw SemanticError("duplicate node '" + n + "'");
  }
  in_.assign(nodes_.size(), {});
  out_.assign(nodes_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.tail >= nodes_.size() || edge.head >= nodes_.size())
      throw SemanticError("edge " + std::to_string(e) + " references an unknown node");
    if (edge.tail == edge.head) throw SemanticError("self-loop on node '" + nodes_[edge.tail] + "'");
    if (edge.capacity < ExtRational(0)) throw SemanticError("negative capacity on edge " + edge_label(e));
    out_[edge.tail].push_back(e);
    in_[edge.head].push_back(e);
  }
  auto check_list = [&](const std::vector<std::size_t>& list, const char* what) {
    std::set<std::size_t> seen;
    for (std::size_t v : list) {
      if (v >= nodes_.size()) throw SemanticError(std::string(what) + " index out of range");
      if (!seen.insert(v).second) throw SemanticError(std::string("duplicate ") + what + " '" + nodes_[v] + "'");
    }
  };
  check_list(sources_, "source");
  check_list(sinks_, "sink");
  order_ = corrcast::topological_order(nodes_.size(), edges_, nodes_);
}

std::vector<std::string> Network::source_names() const {
  std::vector<std::string> out;
  for (auto s : sources_) out.push_back(nodes_[s]);
  return out;
}

std::vector<std::string> Network::sink_names() const {
  std::vector<std::string> out;
  for (auto t : sinks_) out.push_back(nodes_[t]);
  return out;
}

std::optional<std::size_t> Network::find(std::string_view name) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Network::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw SemanticError("unknown node '" + std::string(name) + "'");
}

bool Network::is_source(std::size_t node) const {
  return std::find(sources_.begin(), sources_.end(), node) != sources_.end();
}

bool Network::is_sink(std::size_t node) const {
  return std::find(sinks_.begin(), sinks_.end(), node) != sinks_.end();
}

bool Network::is_normalized() const {
  for (auto s : sources_)
    if (is_sink(s) || !in_[s].empty()) return false;
  return true;
}

Network Network::with_capacity(std::size_t edge, ExtRational capacity) const {
  if (edge >= edges_.size()) throw PreconditionError("edge index out of range");
  auto edges = edges_;
  edges[edge].capacity = std::move(capacity);
  return Network(nodes_, std::move(edges), sources_, sinks_);
}

std::string Network::edge_label(std::size_t edge) const {
  const Edge& e = edges_.at(edge);
  auto name = [&](std::size_t v) { return v < nodes_.size() ? nodes_[v] : std::string("?"); };
  return name(e.tail) + "->" + name(e.head);
}

bool operator==(const Network& a, const Network& b) {
  if (a.nodes_ != b.nodes_ || a.sources_ != b.sources_ || a.sinks_ != b.sinks_ || a.edges_.size() != b.edges_.size())
    return false;
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    const Edge& x = a.edges_[e];
    const Edge& y = b.edges_[e];
    if (x.tail != y.tail || x.head != y.head || !(x.capacity == y.capacity)) return false;
  }
  return true;
}

std::vector<std::size_t> topological_order(std::size_t node_count, std::span<const Edge> edges,
                                           std::span<const std::string> names) {
  std::vector<std::size_t> indegree(node_count, 0);
  std::vector<std::vector<std::size_t>> succ(node_count);
  for (const Edge& e : edges) {
    ++indegree[e.head];
    succ[e.tail].push_back(e.head);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < node_count; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  order.reserve(node_count);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() == node_count) return order;

  // Every leftover node still has a leftover predecessor, so walking predecessors must
  // eventually revisit a node.
  std::vector<bool> left(node_count, false);
  for (std::size_t v = 0; v < node_count; ++v) left[v] = indegree[v] > 0;
  std::size_t start = 0;
  while (!left[start]) ++start;
  std::vector<std::vector<std::size_t>> pred(node_count);
  for (const Edge& e : edges)
    if (left[e.tail] && left[e.head]) pred[e.head].push_back(e.tail);
  std::vector<std::size_t> walk;
  std::vector<std::ptrdiff_t> pos(node_count, -1);
  std::size_t v = start;
  while (pos[v] < 0) {
    pos[v] = static_cast<std::ptrdiff_t>(walk.size());
    walk.push_back(v);
    v = *std::min_element(pred[v].begin(), pred[v].end());
  }
  std::vector<std::size_t> cycle(walk.begin() + pos[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  // rotate so the smallest index leads
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  std::vector<std::string> cycle_names;
  std::string text;
  for (std::size_t c : cycle) {
    std::string n = c < names.size() ? names[c] : std::to_string(c);
    text += (text.empty() ? "" : " -> ") + n;
    cycle_names.push_back(std::move(n));
  }
  text += " -> " + cycle_names.front();
  throw CycleError("network contains a cycle: " + text, std::move(cycle_names));
}

std::vector<std::size_t> validate_acyclic(const Network& net) { return net.topological_order(); }

Network normalize(const Network& net) {
  std::vector<std::string> nodes = net.nodes();
  std::vector<Edge> edges = net.edges();
  std::vector<std::size_t> sources = net.sources();
  for (auto& s : sources) {
    if (!net.is_sink(s) && net.in_edges(s).empty()) continue;
    std::size_t fresh = nodes.size();
    nodes.push_back(fresh_name(nodes[s], nodes));
    edges.push_back(Edge{fresh, s, ExtRational::infinity()});
    s = fresh;
  }
  return Network(std::move(nodes), std::move(edges), std::move(sources), net.sinks());
}

ExtRational cut_value(const Network& net, const std::vector<bool>& membership) {
  if (membership.size() != net.node_count()) throw PreconditionError("membership vector size mismatch");
  ExtRational total;
  for (const Edge& e : net.edges())
    if (membership[e.tail] && !membership[e.head]) total += e.capacity;
  return total;
}

ExtRational cut_value(const Network& net, std::span<const std::size_t> member_set) {
  std::vector<bool> in(net.node_count(), false);
  for (std::size_t v : member_set) {
    if (v >= net.node_count()) throw SemanticError("unknown node index " + std::to_string(v));
    in[v] = true;
  }
  return cut_value(net, in);
}

ExtRational cut_value(const Network& net, std::span<const std::string> member_names) {
  std::vector<std::size_t> ids;
  for (const auto& n : member_names) ids.push_back(net.index_of(n));
  return cut_value(net, std::span<const std::size_t>(ids));
}

Network parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("network document: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("network document must be a JSON object");
  std::vector<std::string> nodes = string_list(doc, "nodes");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!index.emplace(nodes[i], i).second) throw SemanticError("duplicate node '" + nodes[i] + "'");

  if (!doc.contains("edges") || !doc.at("edges").is_array()) throw SyntaxError("missing array field 'edges'");
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("capacity"))
      throw SyntaxError("each edge needs 'from', 'to' and 'capacity'");
    if (!e.at("from").is_string() || !e.at("to").is_string()) throw SyntaxError("edge endpoints must be strings");
    auto from = e.at("from").get<std::string>();
    auto to = e.at("to").get<std::string>();
    auto tail = index.find(from);
    auto head = index.find(to);
    if (tail == index.end()) throw SemanticError("edge references unknown node '" + from + "'");
    if (head == index.end()) throw SemanticError("edge references unknown node '" + to + "'");
    if (from == to) throw SemanticError("self-loop on node '" + from + "'");
    ExtRational cap = capacity_from_json(e.at("capacity"));
    if (cap < ExtRational(0)) throw SemanticError("negative capacity on edge " + from + "->" + to);
    edges.push_back(Edge{tail->second, head->second, std::move(cap)});
  }
  auto sources = resolve_all(string_list(doc, "sources"), index, "source");
  auto sinks = resolve_all(string_list(doc, "sinks"), index, "sink");
  return Network(std::move(nodes), std::move(edges), std::move(sources), std::move(sinks));
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot read network file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string to_json_text(const Network& net) {
  json doc;
  doc["nodes"] = net.nodes();
  json edges = json::array();
  for (const Edge& e : net.edges())
    edges.push_back({{"from", net.nodes()[e.tail]}, {"to", net.nodes()[e.head]}, {"capacity", e.capacity.str()}});
  doc["edges"] = std::move(edges);
  doc["sources"] = net.source_names();
  doc["sinks"] = net.sink_names();
  return doc.dump(2);
}

}  // namespace corrcast
