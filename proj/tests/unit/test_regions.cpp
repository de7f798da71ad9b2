#include <doctest.h>

#include "corrcast/error.hpp"
#include "corrcast/fixtures.hpp"
#include "corrcast/regions.hpp"
#include "corrcast/transmissibility.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace corrcast;

namespace {

std::vector<std::pair<SubsetMask, ExtRational>> bounds(const ConstraintSet& c) {
  std::vector<std::pair<SubsetMask, ExtRational>> out;
  for (const auto& k : c.constraints) out.emplace_back(k.subset, k.bound);
  return out;
}

using Bounds = std::vector<std::pair<SubsetMask, ExtRational>>;

RatePoint point(std::vector<Rational> r) { return {{"s1", "s2"}, std::move(r)}; }

const Rational kH = snap_rational(binary_entropy(0.11));

}  // namespace

TEST_CASE("cutset_polyhedron") {
  SUBCASE("butterfly t1") {
    const Network b = fixtures::butterfly();
    const auto c = cutset_polyhedron(b, 4, capacity_profile(b));
    CHECK(bounds(c) == Bounds{{0b01, ExtRational(2)}, {0b10, ExtRational(1)}, {0b11, ExtRational(2)}});
    for (const auto& k : c.constraints) CHECK(k.sense == Sense::at_most);
    CHECK(c.label == "C_t1");
  }
  SUBCASE("one source") {
    const Network net({"s", "t"}, {{0, 1, ExtRational(3)}}, {0}, {1});
    CHECK(bounds(cutset_polyhedron(net, 1, capacity_profile(net))) == Bounds{{1, ExtRational(3)}});
  }
  SUBCASE("Example 2 network, t1") {
    const Network e = fixtures::example2_network(0.11);
    CHECK(bounds(cutset_polyhedron(e, 4, capacity_profile(e))) ==
          Bounds{{0b01, ExtRational(2)}, {0b10, ExtRational(kH)}, {0b11, ExtRational(2)}});
  }
  SUBCASE("infinite bounds are omitted; non-sinks rejected") {
    const Network net({"s", "m", "t"}, {{0, 1, ExtRational::infinity()}, {1, 2, ExtRational::infinity()}}, {0}, {2});
    CHECK(cutset_polyhedron(net, 2, capacity_profile(net)).constraints.empty());
    CHECK_THROWS_AS(cutset_polyhedron(net, 1, capacity_profile(net)), PreconditionError);
  }
}

TEST_CASE("sw_polyhedron") {
  CHECK(bounds(sw_polyhedron(entropy_profile(fixtures::uniform_pair()))) ==
        Bounds{{0b01, ExtRational(1)}, {0b10, ExtRational(1)}, {0b11, ExtRational(2)}});
  const auto det = parse_source_model(R"({"sources":["a","b"],"alphabets":[2,2],"pmf":[{"symbols":[0,1],"p":"1"}]})");
  for (const auto& k : sw_polyhedron(entropy_profile(det)).constraints) CHECK(k.bound == ExtRational(0));
  const auto d = sw_polyhedron(entropy_profile(fixtures::dsbs(0.11)));
  const double h = oracle::hp_binary_entropy_d("0.11");
  CHECK(std::abs(d.constraints[0].bound.to_double() - h) < 1e-12);
  CHECK(std::abs(d.constraints[1].bound.to_double() - h) < 1e-12);
  CHECK(std::abs(d.constraints[2].bound.to_double() - (1 + h)) < 1e-12);
  for (const auto& k : d.constraints) CHECK(k.sense == Sense::at_least);
}

TEST_CASE("feasible") {
  const Network b = fixtures::butterfly();
  const auto profile = capacity_profile(b);
  const auto sw = sw_polyhedron(entropy_profile(fixtures::uniform_pair()));
  SUBCASE("Example 1, R_SW and C_t1") {
    const std::vector<ConstraintSet> sets{sw, cutset_polyhedron(b, 4, profile)};
    const auto r = feasible(sets);
    REQUIRE(r.point);
    CHECK(r.point->rates == std::vector<Rational>{1, 1});
    for (const auto& s : sets) CHECK(satisfies(*r.point, s));
  }
  SUBCASE("contradictory pair") {
    ConstraintSet c{"X", {"s1"}, {{1, Sense::at_least, ExtRational(2), "X"}, {1, Sense::at_most, ExtRational(1), "X"}}};
    const std::vector<ConstraintSet> sets{c};
    const auto r = feasible(sets);
    CHECK_FALSE(r.feasible());
    CHECK(r.certificate.size() == 2);
  }
  SUBCASE("variable-order mismatch") {
    ConstraintSet other = sw;
    std::swap(other.variables[0], other.variables[1]);
    const std::vector<ConstraintSet> sets{sw, other};
    CHECK_THROWS_AS(feasible(sets), PreconditionError);
  }
  SUBCASE("random boxes: witnesses substitute; infeasible ones agree with Fourier-Motzkin") {
    gen::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
      ConstraintSet c{"B", {"x", "y", "z"}, {}};
      for (SubsetMask s = 1; s < 8; ++s) {
        const long lo = static_cast<long>(rng() % 5), hi = lo + static_cast<long>(rng() % 6) - 1;
        c.constraints.push_back({s, Sense::at_least, ExtRational(Rational(lo, 2)), "B"});
        c.constraints.push_back({s, Sense::at_most, ExtRational(Rational(hi, 1)), "B"});
      }
      const std::vector<ConstraintSet> sets{c};
      const auto r = feasible(sets);
      std::vector<lp::Row> rows;
      for (const auto& k : c.constraints) {
        std::vector<Rational> co(3, 0);
        for (auto j : members(k.subset)) co[j] = 1;
        rows.push_back({co, k.sense, k.bound.finite()});
      }
      CHECK(r.feasible() == oracle::fm_feasible(3, rows));
      if (r.point) CHECK(satisfies(*r.point, c));
    }
  }
}

TEST_CASE("theorem2_check") {
  SUBCASE("Example 1: both hold, witnesses (1,1)") {
    const auto r = theorem2_check(fixtures::butterfly(), fixtures::uniform_pair());
    CHECK(holds(r.statement1));
    CHECK(holds(r.statement2));
    CHECK(r.agree);
    for (const auto& s : r.per_sink) {
      REQUIRE(s.result.point);
      CHECK(s.result.point->rates == std::vector<Rational>{1, 1});
    }
  }
  SUBCASE("Example 2: both hold") {
    const auto r = theorem2_check(fixtures::example2_network(0.11), fixtures::dsbs(0.11));
    CHECK(holds(r.statement1));
    CHECK(holds(r.statement2));
    CHECK(r.agree);
  }
  SUBCASE("edge 3->4 lowered to 1/2: both fail, ({s1,s2}, t1) violated") {
    const Network low = fixtures::butterfly().with_capacity(4, ExtRational(Rational(1, 2)));
    const auto r = theorem2_check(low, fixtures::uniform_pair());
    CHECK(r.statement1 == Status::fails);
    CHECK(r.statement2 == Status::fails);
    CHECK(r.agree);
    bool found = false;
    for (const auto& v : r.statement1_violations) found = found || (v.subset == 0b11 && v.sink_name == "t1");
    CHECK(found);
    std::vector<std::size_t> nodes{0, 1};
    CHECK(oracle::brute_min_cut(low, nodes, 4) == ExtRational(Rational(3, 2)));
  }
}

TEST_CASE("separation_check") {
  SUBCASE("Example 1: separable with (1,1), rho_N polymatroid") {
    const auto r = separation_check(fixtures::butterfly(), fixtures::uniform_pair());
    CHECK(holds(r.status));
    REQUIRE(r.result.point);
    CHECK(r.result.point->rates == std::vector<Rational>{1, 1});
    CHECK(r.rho_n_polymatroid.holds);
  }
  SUBCASE("Example 2: not separable, certificate R1+R2 >= 1+h, R1 <= h, R2 <= h") {
    const auto r = separation_check(fixtures::example2_network(0.11), fixtures::dsbs(0.11));
    CHECK(r.status == Status::fails);
    CHECK_FALSE(r.result.feasible());
    REQUIRE(r.result.certificate.size() == 3);
    CHECK_FALSE(r.rho_n_polymatroid.holds);
  }
  SUBCASE("single sink: separation follows the matching condition") {
    gen::Rng rng(23);
    gen::NetworkShape shape;
    shape.max_sinks = 1;
    int checked = 0;
    for (int i = 0; i < 80; ++i) {
      const Network net = gen::network(rng, shape);
      const auto m = gen::model(rng, net.source_names(), 2);
      const auto t = check(net, m);
      const auto sep = separation_check(net, m);
      if (t.verdict != Verdict::not_transmissible) {
        CHECK(holds(sep.status));
        ++checked;
      }
    }
    CHECK(checked > 5);
  }
  SUBCASE("separable implies statement 2; more capacity never breaks separability") {
    gen::Rng rng(29);
    for (int i = 0; i < 60; ++i) {
      const Network net = gen::network(rng);
      const auto m = gen::model(rng, net.source_names(), 2);
      const auto sep = separation_check(net, m);
      if (sep.result.feasible()) CHECK(holds(theorem2_check(net, m).statement2));
      if (net.edges().empty()) continue;
      const std::size_t e = rng() % net.edges().size();
      const Network more = net.with_capacity(e, net.edges()[e].capacity + ExtRational(1));
      if (sep.result.feasible()) CHECK(separation_check(more, m).result.feasible());
    }
  }
}
