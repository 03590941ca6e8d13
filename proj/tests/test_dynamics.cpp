#include <catch_amalgamated.hpp>

#include "mahavier/dynamics.hpp"
#include "mahavier/entropy.hpp"
#include "mahavier/fixtures.hpp"
#include "mahavier/product.hpp"
#include "support.hpp"

using namespace mahavier;
using namespace testing;

namespace {

Relation fx(const std::string& name) { return make_fixture(name).relation; }

std::vector<Scalar> ints(std::initializer_list<int> xs) { return std::vector<Scalar>(xs.begin(), xs.end()); }

// Closed walks of length p by enumerating point sequences.
long census(const std::vector<Point>& pts, int p) {
  long total = 0;
  std::vector<std::size_t> seq(p, 0);
  if (pts.empty()) return 0;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < p && ok; ++i) ok = pts[seq[i]].back() == pts[seq[(i + 1) % p]].front();
    total += ok;
    int k = 0;
    while (k < p && ++seq[k] == pts.size()) seq[k++] = 0;
    if (k == p) break;
  }
  return total;
}

bool stream_is_chain(const Relation& g, const std::vector<Scalar>& s) {
  const std::size_t step = g.arity() - 1;
  for (std::size_t i = 0; i + g.arity() <= s.size(); i += step) {
    if (!member(g, Point(s.begin() + i, s.begin() + i + g.arity()))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("analyze examples", "[dynamics]") {
  auto c = analyze(fx("four-corners"));
  CHECK(c.strongly_connected);
  CHECK(c.periodic_counts.at(1) == 2);
  CHECK(c.periodic_counts.at(2) == 4);
  CHECK(c.dense_periodic);
  CHECK(c.devaney);

  auto single = analyze(Relation::points(2, {P({"0", "1"})}));
  CHECK(single.recurrent_nodes.empty());
  CHECK_FALSE(single.devaney);

  auto fixed = analyze(Relation::points(2, {P({"0", "0"}), P({"1", "1"})}));
  CHECK(fixed.components == 2);
  CHECK_FALSE(fixed.strongly_connected);
  CHECK(fixed.periodic_counts.at(1) == 2);
  CHECK_FALSE(fixed.devaney);

  auto empty = analyze(Relation::empty(2));
  CHECK(empty.nodes == 0);
  CHECK(empty.recurrent_nodes.empty());
  CHECK_FALSE(empty.devaney);
}

TEST_CASE("a lone cycle is transitive but not chaotic", "[dynamics]") {
  auto r = analyze(Relation::points(2, {P({"0", "1/2"}), P({"1/2", "1"}), P({"1", "0"})}));
  CHECK(r.strongly_connected);
  CHECK(r.dense_periodic);
  CHECK_FALSE(r.devaney);
  CHECK(r.periodic_counts.at(3) == 3);
  CHECK(r.periodic_counts.at(1) == 0);
}

TEST_CASE("wandering partition examples", "[dynamics]") {
  auto k = wandering_partition(kernel(fx("l-n:3")));
  CHECK(k.wandering.empty());
  Relation g = Relation::points(2, {P({"0", "0"}), P({"0", "1"})});
  auto w = wandering_partition(g);
  TransitionGraph tg(g);
  CHECK(w.wandering == std::vector<int>{tg.index_of(P({"0", "1"}))});
  auto cyc = wandering_partition(Relation::points(2, {P({"0", "1/2"}), P({"1/2", "1"}), P({"1", "0"})}));
  CHECK(cyc.wandering.empty());
  CHECK(cyc.kept.size() == 3);
}

TEST_CASE("transitional nodes between cycles are kept", "[dynamics]") {
  // (0,0) loop -> (0,1/2) -> (1/2,1/2) loop; the bridge lies on a path between cycles.
  Relation g = Relation::points(2, {P({"0", "0"}), P({"0", "1/2"}), P({"1/2", "1/2"}), P({"1/2", "1"})});
  auto w = wandering_partition(g);
  TransitionGraph tg(g);
  CHECK(w.wandering == std::vector<int>{tg.index_of(P({"1/2", "1"}))});
  auto r = analyze(g);
  CHECK_FALSE(r.strongly_connected);
  CHECK(r.recurrent_nodes.size() == 2);
}

TEST_CASE("orbit stream examples", "[dynamics]") {
  auto c = orbit_stream(fx("four-corners"), P({"0", "1"}), OrbitPolicy::Lexicographic, 6);
  CHECK(c.coords == ints({0, 1, 0, 0, 0, 0}));
  CHECK_FALSE(c.dead_end);
  // The alternating stream is also a chain of the relation; lexicographic order simply prefers 0.
  CHECK(stream_is_chain(fx("four-corners"), ints({0, 1, 0, 1, 0, 1})));

  auto m = orbit_stream(fx("maribor-core"), P({"0", "1"}), OrbitPolicy::Lexicographic, 5);
  CHECK(m.coords == ints({0, 1, 0, 0, 0}));

  auto d = orbit_stream(Relation::points(2, {P({"0", "1"})}), P({"0", "1"}), OrbitPolicy::Lexicographic, 10);
  CHECK(d.dead_end);
  CHECK(d.coords == ints({0, 1}));
  CHECK_THROWS_AS(orbit_stream(fx("four-corners"), P({"1/2", "1"}), OrbitPolicy::Lexicographic, 4),
                  std::invalid_argument);
}

TEST_CASE("seeded orbit streams are reproducible chains", "[dynamics]") {
  Relation g = fx("g-n:4");
  Point start = g.finite_points()[5];
  auto a = orbit_stream(g, start, OrbitPolicy::RandomSeeded, 40, 99);
  auto b = orbit_stream(g, start, OrbitPolicy::RandomSeeded, 40, 99);
  CHECK(a.coords == b.coords);
  CHECK(a.coords.size() == 40);
  CHECK(stream_is_chain(g, a.coords));
  Relation h = Relation::points(3, {P({"0", "1/2", "1"}), P({"1", "0", "0"}), P({"0", "1", "1"})});
  auto s = orbit_stream(h, P({"0", "1/2", "1"}), OrbitPolicy::RandomSeeded, 15, 5);
  CHECK(s.coords.size() == 15);
  CHECK(stream_is_chain(h, s.coords));
}

TEST_CASE("edge list export", "[dynamics]") {
  TransitionGraph tg(Relation::points(2, {P({"0", "1/2"}), P({"1/2", "0"})}));
  CHECK(tg.edge_list() == "(0,1/2) -> (1/2,0)\n(1/2,0) -> (0,1/2)\n");
}

TEST_CASE("periodic counts equal the brute-force census", "[dynamics][property]") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    Relation g = random_points(rng, 6, 2 + trial % 2, 2);
    auto r = analyze(g, 6);
    auto pts = g.finite_points();
    for (int p = 1; p <= 6; ++p) REQUIRE(r.periodic_counts.at(p) == census(pts, p));
  }
}

TEST_CASE("strong connectivity with a cycle implies dense periodicity", "[dynamics][property]") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    auto r = analyze(random_points(rng, 7, 2, 3));
    if (r.strongly_connected && !r.recurrent_nodes.empty()) REQUIRE(r.dense_periodic);
  }
}

TEST_CASE("devaney with two cycles forces positive entropy", "[dynamics][property]") {
  std::mt19937_64 rng(73);
  std::vector<Relation> rels;
  for (const char* name : {"four-corners", "maribor-core", "g-n:3", "g-a:2", "l-n:2"}) rels.push_back(fx(name));
  for (int k = 0; k < 300; ++k) rels.push_back(random_points(rng, 7, 2, 3));
  int chaotic = 0;
  for (const auto& g : rels) {
    auto r = analyze(g);
    if (!r.devaney) continue;
    ++chaotic;
    REQUIRE(entropy_transfer(g).value > 1e-6);
  }
  CHECK(chaotic > 10);
}

TEST_CASE("wandering partition covers all nodes and contains no kernel node", "[dynamics][property]") {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 200; ++trial) {
    Relation g = random_points(rng, 8, 2, 3);
    auto w = wandering_partition(g);
    TransitionGraph tg(g);
    std::vector<int> all = w.kept;
    all.insert(all.end(), w.wandering.begin(), w.wandering.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want(tg.size());
    std::iota(want.begin(), want.end(), 0);
    REQUIRE(all == want);
    for (const auto& p : kernel(g).finite_points()) {
      REQUIRE(std::binary_search(w.kept.begin(), w.kept.end(), tg.index_of(p)));
    }
  }
}
