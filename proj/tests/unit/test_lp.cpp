#include <doctest.h>

#include "corrcast/lp.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace corrcast;
using lp::Row;
using lp::Sense;

TEST_CASE("small systems") {
  SUBCASE("Example 1 system solves to (1,1)") {
    const std::vector<Row> rows{{{1, 0}, Sense::at_least, 1}, {{0, 1}, Sense::at_least, 1},
                                {{1, 1}, Sense::at_least, 2}, {{0, 1}, Sense::at_most, 1},
                                {{1, 0}, Sense::at_most, 2},  {{1, 1}, Sense::at_most, 2}};
    const auto r = lp::solve_feasibility(2, rows);
    REQUIRE(r.feasible);
    CHECK(r.point == std::vector<Rational>{1, 1});
  }
  SUBCASE("contradictory pair") {
    const std::vector<Row> rows{{{1}, Sense::at_least, 2}, {{1}, Sense::at_most, 1}};
    const auto r = lp::solve_feasibility(1, rows);
    CHECK_FALSE(r.feasible);
    CHECK(r.conflict == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("negative bound against implicit nonnegativity") {
    const std::vector<Row> rows{{{1, 1}, Sense::at_most, -1}, {{1, 0}, Sense::at_least, 0}};
    const auto r = lp::solve_feasibility(2, rows);
    CHECK_FALSE(r.feasible);
    CHECK(r.conflict == std::vector<std::size_t>{0});
  }
  SUBCASE("no rows") {
    const auto r = lp::solve_feasibility(3, {});
    REQUIRE(r.feasible);
    CHECK(r.point.size() == 3);
  }
}

TEST_CASE("random systems agree with Fourier-Motzkin; certificates are irreducible") {
  gen::Rng rng(404);
  int infeasible = 0, feasible = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 3;
    std::vector<Row> rows;
    const std::size_t m = 2 + rng() % 6;
    for (std::size_t k = 0; k < m; ++k) {
      Row r;
      for (std::size_t j = 0; j < n; ++j) r.coeffs.push_back(Rational(static_cast<long>(rng() % 5) - 1));
      r.sense = rng() % 2 ? Sense::at_most : Sense::at_least;
      r.rhs = Rational(static_cast<long>(rng() % 13) - 4, static_cast<long>(1 + rng() % 3));
      rows.push_back(r);
    }
    const auto res = lp::solve_feasibility(n, rows);
    CHECK(res.feasible == oracle::fm_feasible(n, rows));
    if (res.feasible) {
      ++feasible;
      CHECK(oracle::substitutes(res.point, rows));
    } else {
      ++infeasible;
      std::vector<Row> core;
      for (auto k : res.conflict) core.push_back(rows[k]);
      CHECK_FALSE(oracle::fm_feasible(n, core));
      for (std::size_t drop = 0; drop < core.size(); ++drop) {
        auto fewer = core;
        fewer.erase(fewer.begin() + static_cast<long>(drop));
        CHECK(oracle::fm_feasible(n, fewer));
      }
    }
  }
  CHECK(feasible > 30);
  CHECK(infeasible > 30);
}
