// Minimal library use without the CLI: exact entropy of a finite relation,
// then a grid-count estimate for a continuum.

#include <cstdio>

#include "mahavier/counting.hpp"
#include "mahavier/entropy.hpp"
#include "mahavier/relation.hpp"

int main() {
  using namespace mahavier;

  // Golden-mean shift: the word 11 is forbidden.
  Relation golden = Relation::points(2, {{0, 0}, {0, 1}, {1, 0}});
  EntropyEstimate exact = entropy_transfer(golden);
  std::printf("golden-mean points: %.12f nats\n", exact.value);

  // Graph of the full tent map; its entropy is ln 2.
  Relation tent = Relation::segments({{{0, 0}, {rat(1, 2), 1}}, {{rat(1, 2), 1}, {1, 0}}});
  CountSeries s = count_series(tent, GridSpec::partition(8), 16);
  GridEstimate g = grid_estimate(s);
  std::printf("tent graph, n=8, m<=16: slope %.6f, exact counts %s\n", g.slope, s.exact() ? "yes" : "no");
  return 0;
}
