#include <doctest.h>

#include "corrcast/error.hpp"
#include "corrcast/rational.hpp"
#include "corrcast/subset.hpp"

using namespace corrcast;

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("exact and snapped conversions") {
  CHECK(exact_rational(0.5) == Rational(1, 2));
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK(exact_rational(0.1).get_d() == 0.1);
  CHECK(snap_rational(0.1) == Rational(1, 10));
  CHECK(snap_rational(-0.25, 2) == Rational(-1, 2));
  CHECK(to_string(Rational(6, 4)) == "3/2");
}

TEST_CASE("extended rationals order infinity above every finite value") {
  const ExtRational inf = ExtRational::infinity();
  CHECK(ExtRational(1000000) < inf);
  CHECK(inf == parse_ext_rational("inf"));
  CHECK((inf + ExtRational(1)).is_infinite());
  CHECK((ExtRational(Rational(1, 2)) + ExtRational(Rational(1, 3))) == ExtRational(Rational(5, 6)));
  CHECK((inf - Rational(5)).is_infinite());
  CHECK(inf.str() == "inf");
  CHECK_THROWS_AS(inf.finite(), PreconditionError);
}

TEST_CASE("subsets enumerate by size, then lexicographically") {
  const auto all = nonempty_subsets(3);
  const std::vector<SubsetMask> expected{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  CHECK(all == expected);
  const std::vector<std::string> ground{"s1", "s2", "s3"};
  CHECK(subset_label(0b101, ground) == "s1+s3");
  CHECK(subset_label(0, ground) == "{}");
  CHECK(parse_subset("s1,s3", ground) == 0b101);
  CHECK(parse_subset("s3+s1", ground) == 0b101);
  CHECK_THROWS_AS(parse_subset("s4", ground), SemanticError);
  CHECK_THROWS_AS(check_subset_bound(17, 16), LimitError);
}
