#include <doctest.h>

#include "corrcast/error.hpp"
#include "corrcast/fixtures.hpp"
#include "corrcast/mincut.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace corrcast;

namespace {

std::vector<std::size_t> source_nodes(const Network& net, SubsetMask s) {
  std::vector<std::size_t> out;
  for (auto i : members(s)) out.push_back(net.sources()[i]);
  return out;
}

}  // namespace

TEST_CASE("max_flow") {
  const Network b = fixtures::butterfly();
  SUBCASE("butterfly {s1} -> t1 is 2") {
    const auto f = max_flow(b, std::vector<std::size_t>{0}, 4);
    CHECK(f.value == ExtRational(2));
    CHECK(cut_value(b, f.min_cut) == f.value);
  }
  SUBCASE("single edge of capacity 3") {
    const Network net({"s", "t"}, {{0, 1, ExtRational(3)}}, {0}, {1});
    CHECK(max_flow(net, std::vector<std::size_t>{0}, 1).value == ExtRational(3));
  }
  SUBCASE("sink in the source set") {
    CHECK_THROWS_AS(max_flow(b, std::vector<std::size_t>{0, 4}, 4), PreconditionError);
  }
  SUBCASE("all-infinite path") {
    const Network net({"s", "m", "t"}, {{0, 1, ExtRational::infinity()}, {1, 2, ExtRational::infinity()}}, {0}, {2});
    CHECK(max_flow(net, std::vector<std::size_t>{0}, 2).value.is_infinite());
  }
  SUBCASE("random DAGs match cut enumeration, and the returned cut attains the value") {
    gen::Rng rng(2024);
    gen::NetworkShape shape;
    shape.max_nodes = 6;
    shape.unnormalized = 0;
    for (int i = 0; i < 100; ++i) {
      const Network net = gen::network(rng, shape);
      for (SubsetMask s = 1; s <= full_mask(net.sources().size()); ++s)
        for (std::size_t t : net.sinks()) {
          const auto nodes = source_nodes(net, s);
          const auto f = max_flow(net, nodes, t);
          CHECK(f.value == oracle::brute_min_cut(net, nodes, t));
          CHECK(cut_value(net, f.min_cut) == f.value);
          for (auto v : nodes) CHECK(std::find(f.min_cut.begin(), f.min_cut.end(), v) != f.min_cut.end());
        }
    }
  }
  SUBCASE("subdividing an edge leaves the value unchanged") {
    gen::Rng rng(5);
    for (int i = 0; i < 40; ++i) {
      const Network net = gen::network(rng);
      if (net.edges().empty()) continue;
      const Network n = normalize(net);
      // split edge 0 through a fresh middle node
      auto nodes = n.nodes();
      nodes.push_back("mid");
      auto edges = n.edges();
      const Edge e = edges[0];
      edges[0] = {e.tail, nodes.size() - 1, e.capacity};
      edges.push_back({nodes.size() - 1, e.head, e.capacity});
      const Network split(nodes, edges, n.sources(), n.sinks());
      for (SubsetMask s = 1; s <= full_mask(n.sources().size()); ++s)
        for (std::size_t t : n.sinks())
          if (!std::count(n.sources().begin(), n.sources().end(), t))
            CHECK(rho_t(split, s, t) == rho_t(n, s, t));
    }
  }
}

TEST_CASE("rho_t and rho_N") {
  const Network b = fixtures::butterfly();
  CHECK(rho_t(b, 0b10, 4) == ExtRational(1));
  CHECK(rho_t(fixtures::example2_network(0.11), 0b11, 4) == ExtRational(2));
  CHECK(rho_n(b, 0b01) == ExtRational(1));
  const Network e2 = fixtures::example2_network(0.11);
  CHECK(rho_n(e2, 0b10) == ExtRational(snap_rational(binary_entropy(0.11))));
  CHECK_THROWS_AS(rho_t(b, 0, 4), PreconditionError);
  CHECK_THROWS_AS(rho_t(b, 1, 2), PreconditionError);

  SUBCASE("infinite normalization edge inside M does not count") {
    const Network net({"k", "t"}, {{0, 1, ExtRational(2)}}, {0}, {1});
    const Network withk({"k", "t", "u"}, {{0, 1, ExtRational(2)}, {0, 2, ExtRational(1)}}, {0}, {1, 2});
    const Network n = normalize(Network({"a", "k", "t"}, {{0, 1, ExtRational(1)}, {1, 2, ExtRational(2)}}, {1}, {2}));
    CHECK(rho_t(n, 1, 2) == ExtRational(2));
    CHECK(rho_t(net, 1, 1) == ExtRational(2));
    CHECK(rho_n(withk, 1) == ExtRational(1));
  }
  SUBCASE("single sink: rho_N equals rho_t") {
    const Network net({"s1", "s2", "t"}, {{0, 2, ExtRational(1)}, {1, 2, ExtRational(Rational(1, 2))}}, {0, 1}, {2});
    for (SubsetMask s = 1; s <= 3; ++s) CHECK(rho_n(net, s) == rho_t(net, s, 2));
  }
}

TEST_CASE("capacity_profile") {
  SUBCASE("butterfly reproduces the Example 1 table") {
    const auto p = capacity_profile(fixtures::butterfly());
    const auto& t1 = p.for_sink(4);
    const auto& t2 = p.for_sink(5);
    CHECK(t1(0b01) == ExtRational(2));
    CHECK(t1(0b10) == ExtRational(1));
    CHECK(t1(0b11) == ExtRational(2));
    CHECK(t2(0b01) == ExtRational(1));
    CHECK(t2(0b10) == ExtRational(2));
    CHECK(t2(0b11) == ExtRational(2));
    CHECK(p.network_wide(0b01) == ExtRational(1));
    CHECK(p.network_wide(0b10) == ExtRational(1));
    CHECK(p.network_wide(0b11) == ExtRational(2));
  }
  SUBCASE("one source") {
    const Network net({"s", "t"}, {{0, 1, ExtRational(3)}}, {0}, {1});
    const auto p = capacity_profile(net);
    CHECK(p.network_wide.values().size() == 2);
    CHECK(p.network_wide(1) == ExtRational(3));
  }
  SUBCASE("subset bound") {
    std::vector<std::string> nodes;
    std::vector<std::size_t> src;
    for (std::size_t i = 0; i < 5; ++i) nodes.push_back("s" + std::to_string(i)), src.push_back(i);
    nodes.push_back("t");
    const Network net(nodes, {}, src, {5});
    CHECK_THROWS_AS(capacity_profile(net, Exec::parallel, 4), LimitError);
  }
  SUBCASE("random 5-source DAGs: oracle, serial reference, polymatroid, min over sinks") {
    gen::Rng rng(77);
    gen::NetworkShape shape;
    shape.max_sources = 5;
    shape.max_nodes = 9;
    shape.unnormalized = 0;
    for (int i = 0; i < 25; ++i) {
      const Network net = gen::network(rng, shape);
      const auto par = capacity_profile(net, Exec::parallel);
      const auto ser = capacity_profile(net, Exec::serial);
      CHECK(par.network_wide == ser.network_wide);
      CHECK(par.per_sink == ser.per_sink);
      for (SubsetMask s = 1; s <= full_mask(net.sources().size()); ++s) {
        std::optional<ExtRational> lowest;
        for (std::size_t j = 0; j < par.sinks.size(); ++j) {
          const ExtRational v = par.per_sink[j](s);
          CHECK(v == oracle::brute_min_cut(net, source_nodes(net, s), par.sinks[j]));
          CHECK(par.network_wide(s) <= v);
          if (!lowest || v < *lowest) lowest = v;
        }
        CHECK(par.network_wide(s) == *lowest);
      }
      for (const auto& f : par.per_sink) CHECK(oracle::brute_polymatroid(f));
    }
  }
}
