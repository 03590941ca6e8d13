#include <catch_amalgamated.hpp>

#include "mahavier/polynomial.hpp"
#include "support.hpp"

using namespace mahavier;
using namespace testing;

TEST_CASE("constraints parse to p <= 0", "[polynomial]") {
  Polynomial tri = parse_constraint("x1 <= x0", 2);
  CHECK(tri.str() == "-x0 + x1");
  CHECK(tri.eval(P({"3/4", "1/4"})) == rat(-1, 2));

  Polynomial para = parse_constraint("x1 - x0^2 <= 0", 2);
  CHECK(para.degree() == 2);
  CHECK(para.eval(P({"1/2", "1/4"})) == 0);

  CHECK(parse_constraint("x0 >= 2/3", 2) == parse_constraint("2/3 - x0 <= 0", 2));
  CHECK(parse_constraint("x1 \xE2\x89\xA4 x0 \xE2\x88\x92 1/2", 2) == parse_constraint("x1 - x0 + 1/2 <= 0", 2));
  CHECK(parse_constraint("(x0 + x1)^2 / 2", 2).eval(P({"1", "1"})) == 2);
  CHECK(parse_constraint("3*x0*x1 - 0.5", 2).eval(P({"1", "1/3"})) == rat(1, 2));
}

TEST_CASE("constraint parse errors", "[polynomial]") {
  CHECK_THROWS_AS(parse_constraint("x0^5", 2), ParseError);
  CHECK_THROWS_AS(parse_constraint("x0 * x0^4", 2), ParseError);
  CHECK_THROWS_AS(parse_constraint("x2 <= 0", 2), ParseError);
  CHECK_THROWS_AS(parse_constraint("x0 / x1", 2), ParseError);
  CHECK_THROWS_AS(parse_constraint("x0 +", 2), ParseError);
  CHECK_THROWS_AS(parse_constraint("(x0", 2), ParseError);
}

TEST_CASE("str round-trips through the parser", "[polynomial]") {
  for (const char* text : {"x1 - x0^2", "2*x0*x1 - 1/3", "-x0^4 + x1^3 - x0", "x0^2*x1^2 - 7/5"}) {
    Polynomial p = parse_constraint(text, 2);
    CHECK(parse_constraint(p.str(), 2) == p);
  }
}

TEST_CASE("derivative, permutation and linear split", "[polynomial]") {
  Polynomial p = parse_constraint("x0^3*x1 - 2*x1 + x0", 2);
  CHECK(p.derivative(0) == parse_constraint("3*x0^2*x1 + 1", 2));
  CHECK(p.permuted({1, 0}) == parse_constraint("x1^3*x0 - 2*x0 + x1", 2));
  auto split = parse_constraint("2*x1 - x0^2 + 1", 2).linear_split(1);
  REQUIRE(split);
  CHECK(split->first == 2);
  CHECK(split->second == parse_constraint("1 - x0^2", 2));
  CHECK_FALSE(parse_constraint("x0*x1 - 1", 2).linear_split(1));
}

TEST_CASE("range encloses every sampled value", "[polynomial][property]") {
  std::mt19937_64 rng(21);
  const char* polys[] = {"x1 - x0^2", "x0*x1 - 1/2*x0^3 + x1^2", "x0^4 - 3*x0^2*x1 + x1 - 1/5", "-x0 - x1"};
  for (const char* text : polys) {
    Polynomial p = parse_constraint(text, 2);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Interval> box{random_interval(rng), random_interval(rng)};
      auto [lo, hi] = p.range(box);
      for (int k = 0; k < 10; ++k) {
        Point x;
        for (const auto& side : box) {
          Scalar t = random_scalar(rng, 16);
          x.push_back(side.lo() + t * (side.hi() - side.lo()));
        }
        Scalar v = p.eval(x);
        REQUIRE(lo <= v);
        REQUIRE(v <= hi);
      }
    }
  }
}
