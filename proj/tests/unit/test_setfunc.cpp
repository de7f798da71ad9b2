#include <doctest.h>

#include "corrcast/error.hpp"
#include "corrcast/fixtures.hpp"
#include "corrcast/mincut.hpp"
#include "corrcast/entropy.hpp"
#include "corrcast/lp.hpp"
#include "corrcast/setfunc.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace corrcast;

namespace {

SetFunction pair_function(long a, long b, long ab) {
  return SetFunction({"a", "b"}, {ExtRational(0), ExtRational(a), ExtRational(b), ExtRational(ab)});
}

}  // namespace

TEST_CASE("SetFunction construction and documents") {
  CHECK_THROWS_AS(SetFunction({"a"}, {ExtRational(1), ExtRational(1)}), Error);
  CHECK_THROWS_AS(SetFunction({"a"}, {ExtRational(0)}), Error);
  const auto f = parse_set_function(R"({"ground":["a","b"],"values":{"a":"1","b":"3/2","a+b":"inf"}})");
  CHECK(f(0b10) == ExtRational(Rational(3, 2)));
  CHECK(f(0b11).is_infinite());
  CHECK(parse_set_function(to_json_text(f)) == f);
  CHECK(parse_set_function(R"({"a":"1","b":"2","a+b":"2"})") == pair_function(1, 2, 2));
  CHECK_THROWS_AS(parse_set_function(R"({"ground":["a","b"],"values":{"a":"1","b":"2"}})"), SemanticError);
}

TEST_CASE("is_polymatroid") {
  SUBCASE("butterfly rho_t1") {
    const auto p = capacity_profile(fixtures::butterfly());
    CHECK(is_polymatroid(p.for_sink(4)).holds);
  }
  SUBCASE("zero function") { CHECK(is_polymatroid(SetFunction({"a", "b", "c"})).holds); }
  SUBCASE("2, 2, 5 fails submodularity at ({a},{b})") {
    const auto f = pair_function(2, 2, 5);
    const auto r = is_polymatroid(f);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->axiom == Axiom::submodular);
    CHECK(r.witness->first == 0b01);
    CHECK(r.witness->second == 0b10);
    CHECK(violates(f, *r.witness));
  }
  SUBCASE("monotonicity comes first") {
    const auto r = is_polymatroid(pair_function(3, 1, 2));
    REQUIRE(r.witness);
    CHECK(r.witness->axiom == Axiom::monotone);
    CHECK(violates(pair_function(3, 1, 2), *r.witness));
  }
  SUBCASE("tolerance") {
    const SetFunction f({"a", "b"}, {ExtRational(0), ExtRational(1), ExtRational(1),
                                     ExtRational(Rational(2) + Rational(1, 1000000000000))});
    CHECK_FALSE(is_polymatroid(f).holds);
    CHECK(is_polymatroid(f, Rational(1, 1000000000)).holds);
  }
}

TEST_CASE("is_copolymatroid") {
  CHECK(is_copolymatroid(entropy_profile(fixtures::dsbs(0.11)).sigma, exact_rational(1e-9)).holds);
  CHECK(is_copolymatroid(SetFunction({"a"})).holds);
  SUBCASE("submodular but not modular") {
    const auto f = pair_function(2, 2, 3);
    CHECK(is_polymatroid(f).holds);
    const auto r = is_copolymatroid(f);
    REQUIRE(r.witness);
    CHECK(r.witness->axiom == Axiom::supermodular);
    CHECK(violates(f, *r.witness));
  }
}

TEST_CASE("axiom checks agree with brute force; witnesses are genuine; serial equals parallel") {
  gen::Rng rng(91);
  for (int i = 0; i < 200; ++i) {
    const std::size_t p = 1 + i % 5;
    SetFunction f = i % 2 ? gen::coverage(rng, p) : gen::dual(gen::coverage(rng, p));
    // perturb one value half of the time
    if (i % 4 < 2) {
      const SubsetMask s = static_cast<SubsetMask>(1 + rng() % f.full());
      f.set(s, ExtRational(Rational(static_cast<long>(rng() % 9), 2)));
    }
    for (bool poly : {true, false}) {
      const auto par = poly ? is_polymatroid(f) : is_copolymatroid(f);
      const auto ser = poly ? is_polymatroid(f, 0, Exec::serial) : is_copolymatroid(f, 0, Exec::serial);
      CHECK(par.holds == (poly ? oracle::brute_polymatroid(f) : oracle::brute_copolymatroid(f)));
      CHECK(par.holds == ser.holds);
      CHECK(par.holds == !par.witness.has_value());
      if (par.witness) {
        REQUIRE(ser.witness);
        CHECK(par.witness->axiom == ser.witness->axiom);
        CHECK(par.witness->first == ser.witness->first);
        CHECK(par.witness->second == ser.witness->second);
        CHECK(violates(f, *par.witness));
      }
    }
  }
}

TEST_CASE("large ground sets use the local form and still find genuine witnesses") {
  std::vector<std::string> ground;
  for (int i = 0; i < 14; ++i) ground.push_back("g" + std::to_string(i));
  SetFunction f(ground);
  for (SubsetMask s = 1; s <= f.full(); ++s) f.set(s, ExtRational(std::min(subset_size(s), 3)));
  CHECK(is_polymatroid(f).holds);
  CHECK_FALSE(is_copolymatroid(f).holds);
  f.set(0b11, ExtRational(5));
  const auto r = is_polymatroid(f);
  REQUIRE(r.witness);
  CHECK(violates(f, *r.witness));
}

TEST_CASE("sandwich_feasible") {
  SUBCASE("Example 1 gives (1,1)") {
    const auto sigma = entropy_profile(fixtures::uniform_pair()).sigma;
    const auto rho = capacity_profile(fixtures::butterfly()).for_sink(4);
    const auto r = sandwich_feasible(sigma, rho);
    REQUIRE(r.point);
    CHECK(r.point->rates == std::vector<Rational>{1, 1});
  }
  SUBCASE("pointwise violation at {a}") {
    const SetFunction sigma({"a"}, {ExtRational(0), ExtRational(3)});
    const SetFunction rho({"a"}, {ExtRational(0), ExtRational(2)});
    const auto r = sandwich_feasible(sigma, rho);
    CHECK_FALSE(r.point);
    REQUIRE(r.violated);
    CHECK(*r.violated == 1);
  }
  SUBCASE("axiom preconditions") {
    CHECK_THROWS_AS(sandwich_feasible(pair_function(2, 2, 3), pair_function(2, 2, 3)), PreconditionError);
    CHECK_THROWS_AS(sandwich_feasible(pair_function(1, 1, 2), pair_function(2, 2, 5)), PreconditionError);
  }
  SUBCASE("slack: point found and verified against the LP oracle") {
    gen::Rng rng(8);
    int found = 0;
    for (int i = 0; i < 60; ++i) {
      const std::size_t p = 1 + i % 3;
      const auto rho = gen::coverage(rng, p);
      const auto sigma = gen::scaled(gen::dual(rho), Rational(1, 2));
      const auto r = sandwich_feasible(sigma, rho);
      REQUIRE(r.point);
      std::vector<lp::Row> rows;
      for (SubsetMask s = 1; s <= rho.full(); ++s) {
        std::vector<Rational> c(p, 0);
        for (auto k : members(s)) c[k] = 1;
        rows.push_back({c, lp::Sense::at_least, sigma(s).finite()});
        rows.push_back({c, lp::Sense::at_most, rho(s).finite()});
      }
      CHECK(oracle::substitutes(r.point->rates, rows));
      CHECK(oracle::fm_feasible(p, rows));
      ++found;
    }
    CHECK(found == 60);
  }
}
