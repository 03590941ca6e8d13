#pragma once

#include <random>
#include <string>
#include <vector>

#include "mahavier/interval.hpp"
#include "mahavier/relation.hpp"
#include "mahavier/scalar.hpp"

namespace testing {

using namespace mahavier;

inline Scalar S(const char* lit) { return parse_scalar(lit); }

inline Interval closed(const char* lo, const char* hi) { return Interval::closed(S(lo), S(hi)); }

/// Half-open [lo, hi).
inline Interval ropen(const char* lo, const char* hi) { return Interval(S(lo), S(hi), true, false); }

inline Point P(std::initializer_list<const char*> xs) {
  Point p;
  for (const char* x : xs) p.push_back(S(x));
  return p;
}

/// Random rational in [0,1] with denominator dividing `den`.
inline Scalar random_scalar(std::mt19937_64& rng, int den = 24) {
  return rat(std::uniform_int_distribution<int>(0, den)(rng), den);
}

/// Random interval with random endpoint closedness; may be degenerate.
inline Interval random_interval(std::mt19937_64& rng, int den = 24) {
  Scalar a = random_scalar(rng, den), b = random_scalar(rng, den);
  if (b < a) std::swap(a, b);
  std::bernoulli_distribution coin(0.5);
  if (a == b) return Interval::point(a);
  return Interval(a, b, coin(rng), coin(rng));
}

inline std::vector<Interval> random_parts(std::mt19937_64& rng, int max_parts = 4, int den = 24) {
  std::vector<Interval> parts(std::uniform_int_distribution<int>(0, max_parts)(rng));
  for (auto& p : parts) p = random_interval(rng, den);
  return parts;
}

/// Random finite relation of the given arity on the lattice with spacing 1/den.
inline Relation random_points(std::mt19937_64& rng, int max_points, std::size_t arity = 2, int den = 4) {
  int k = std::uniform_int_distribution<int>(1, max_points)(rng);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < k) {
    Point p;
    for (std::size_t i = 0; i < arity; ++i) p.push_back(random_scalar(rng, den));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return Relation::points(arity, pts);
}

}  // namespace testing
