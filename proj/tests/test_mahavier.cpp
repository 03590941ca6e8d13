#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "mahavier/entropy.hpp"
#include "mahavier/fixtures.hpp"
#include "mahavier/product.hpp"
#include "support.hpp"

using namespace mahavier;
using namespace testing;

namespace {

Relation pts(std::initializer_list<Point> ps) { return Relation::points(ps.begin()->size(), ps); }

Relation corners() { return make_fixture("four-corners").relation; }

// Chains of m factors by direct recursion over points; independent of star().
std::set<Point> chains(const std::vector<Point>& g, int m) {
  std::set<Point> out;
  std::function<void(Point, int)> grow = [&](Point acc, int left) {
    if (left == 0) {
      out.insert(acc);
      return;
    }
    for (const auto& p : g) {
      if (p.front() != acc.back()) continue;
      Point next = acc;
      next.insert(next.end(), p.begin() + 1, p.end());
      grow(next, left - 1);
    }
  };
  for (const auto& p : g) grow(p, m - 1);
  return out;
}

}  // namespace

TEST_CASE("star examples", "[mahavier]") {
  Relation a = pts({P({"0", "1"}), P({"1", "0"})});
  CHECK(star(a, a).tuples == std::vector<Point>{P({"0", "1", "0"}), P({"1", "0", "1"})});

  Relation g = pts({P({"1", "0"}), P({"1", "1"}), P({"0", "0"})});
  std::vector<Point> want{P({"0", "0", "0"}), P({"1", "0", "0"}), P({"1", "1", "0"}), P({"1", "1", "1"})};
  CHECK(star(g, g).tuples == want);
  auto brute = chains(g.finite_points(), 2);
  CHECK(std::vector<Point>(brute.begin(), brute.end()) == want);

  CHECK(star(pts({P({"2/3", "0"})}), pts({P({"1", "1/3"})})).empty());
  CHECK(star(a, a).arity == 3);
}

TEST_CASE("star_power examples", "[mahavier]") {
  CHECK(star_power(corners(), 2).size() == 8);
  CHECK(chains(corners().finite_points(), 2).size() == 8);
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) CHECK(star_power(g_n(n), m).size() == pow_big(n, m + 1));
  }
  CHECK(star_power(pts({P({"0", "1"})}), 2).empty());
  CHECK(star_power(corners(), 1) == as_product(corners()));
  CHECK_THROWS_AS(star_power(corners(), 0), std::invalid_argument);
  CHECK_THROWS_AS(star_power(g_n(4), 12, 1000), std::length_error);
}

TEST_CASE("explicit product CSV", "[mahavier]") {
  Relation a = pts({P({"0", "1/2"}), P({"1/2", "0"})});
  CHECK(star(a, a).to_csv() == "x0,x1,x2\n0,1/2,0\n1/2,0,1/2\n");
}

TEST_CASE("infinite nonemptiness examples", "[mahavier]") {
  auto two = infinite_nonempty(pts({P({"1/4", "3/4"}), P({"3/4", "1/4"})}));
  CHECK(two.nonempty);
  REQUIRE(two.certificate);
  CHECK(two.certificate->length() == 2);
  CHECK(two.certificate->valid());

  auto none = infinite_nonempty(pts({P({"0", "1"})}));
  CHECK_FALSE(none.nonempty);
  CHECK_FALSE(none.certificate);

  auto three = infinite_nonempty(pts({P({"0", "1/2"}), P({"1/2", "1"}), P({"1", "0"})}));
  CHECK(three.nonempty);
  REQUIRE(three.certificate);
  CHECK(three.certificate->length() == 3);
  CHECK(three.certificate->valid());
}

TEST_CASE("periodic point examples", "[mahavier]") {
  auto fixed = periodic_points(corners(), 1);
  CHECK(fixed.count == 2);
  CHECK(fixed.representatives == std::vector<std::vector<Scalar>>{{0}, {1}});
  CHECK(periodic_points(make_fixture("maribor-core").relation, 2).count == 3);
  for (int p = 1; p <= 5; ++p) CHECK(periodic_points(pts({P({"0", "1"})}), p).count == 0);
  CHECK_THROWS_AS(periodic_points(corners(), 0), std::invalid_argument);
}

TEST_CASE("kernel examples", "[mahavier]") {
  CHECK(kernel(pts({P({"0", "0"}), P({"0", "1"})})) == pts({P({"0", "0"})}));
  CHECK(kernel(corners()) == corners());
  CHECK(kernel(pts({P({"0", "1"})})).is_empty());
  CHECK_THROWS_AS(kernel(triangle()), std::invalid_argument);
}

TEST_CASE("star is associative", "[mahavier][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t ka = 2 + trial % 2, kb = 2 + (trial / 2) % 2, kc = 2;
    auto a = as_product(random_points(rng, 6, ka, 2));
    auto b = as_product(random_points(rng, 6, kb, 2));
    auto c = as_product(random_points(rng, 6, kc, 2));
    REQUIRE(star(star(a, b), c) == star(a, star(b, c)));
  }
}

TEST_CASE("star_power matches recursive chain enumeration", "[mahavier][property]") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    Relation g = random_points(rng, 6, 2 + trial % 2, 2);
    int m = 1 + trial % 5;
    auto brute = chains(g.finite_points(), m);
    REQUIRE(star_power(g, m).tuples == std::vector<Point>(brute.begin(), brute.end()));
  }
}

TEST_CASE("nonemptiness equals nonempty finite products up to 2|G|", "[mahavier][property]") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    Relation g = random_points(rng, 6, 2, 4);
    int limit = 2 * static_cast<int>(g.finite_points().size());
    bool all = true;
    for (int m = 1; m <= limit && all; ++m) all = !star_power(g, m).empty();
    auto r = infinite_nonempty(g);
    REQUIRE(r.nonempty == all);
    if (r.nonempty) REQUIRE(r.certificate->valid());
  }
}

TEST_CASE("cycle certificates give shift-periodic streams", "[mahavier][property]") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    Relation g = random_points(rng, 6, 2 + trial % 2, 2);
    auto r = infinite_nonempty(g);
    if (!r.nonempty) continue;
    const auto& cyc = r.certificate->cycle;
    auto period = r.certificate->stream_period();
    const std::size_t step = g.arity() - 1;
    REQUIRE(period.size() == cyc.size() * step);
    // Unroll three periods; every window of arity coordinates starting at a multiple of step is a point of G,
    // and shifting by one full period reproduces the stream.
    std::vector<Scalar> stream;
    for (int k = 0; k < 3; ++k) stream.insert(stream.end(), period.begin(), period.end());
    for (std::size_t i = 0; i + g.arity() <= stream.size(); i += step) {
      REQUIRE(member(g, Point(stream.begin() + i, stream.begin() + i + g.arity())));
    }
    for (std::size_t i = 0; i + period.size() < stream.size(); ++i) REQUIRE(stream[i] == stream[i + period.size()]);
  }
}

TEST_CASE("kernel is an idempotent subset with no larger entropy", "[mahavier][property]") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 200; ++trial) {
    Relation g = random_points(rng, 7, 2, 4);
    Relation k = kernel(g);
    REQUIRE(kernel(k) == k);
    for (const auto& p : k.finite_points()) REQUIRE(member(g, p));
    REQUIRE(entropy_transfer(k).value <= entropy_transfer(g).value + 1e-9);
  }
}

TEST_CASE("kernel equals points in the middle of long chains", "[mahavier][property]") {
  // Oracle for |G| <= 6: a point survives iff it has 6 predecessors and 6 successors along chains.
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 200; ++trial) {
    Relation g = random_points(rng, 6, 2, 3);
    auto ps = g.finite_points();
    std::function<bool(const Point&, int)> fwd = [&](const Point& p, int left) {
      if (left == 0) return true;
      for (const auto& q : ps) {
        if (q.front() == p.back() && fwd(q, left - 1)) return true;
      }
      return false;
    };
    std::function<bool(const Point&, int)> bwd = [&](const Point& p, int left) {
      if (left == 0) return true;
      for (const auto& q : ps) {
        if (q.back() == p.front() && bwd(q, left - 1)) return true;
      }
      return false;
    };
    std::vector<Point> want;
    for (const auto& p : ps) {
      if (fwd(p, 6) && bwd(p, 6)) want.push_back(p);
    }
    REQUIRE(kernel(g).finite_points() == want);
  }
}
