#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mahavier/relation.hpp"
#include "mahavier/transition.hpp"

namespace mahavier {

/// Finite Mahavier product: distinct tuples, sorted lexicographically.
struct ExplicitProduct {
  std::size_t arity = 0;
  std::vector<Point> tuples;

  bool empty() const { return tuples.empty(); }
  std::size_t size() const { return tuples.size(); }

  Relation as_relation() const { return Relation::points(arity, tuples); }

  /// One tuple per row, rational literals.
  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < arity; ++k) os << (k ? "," : "") << "x" << k;
    os << "\n";
    for (const auto& t : tuples) {
      for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << to_literal(t[k]);
      os << "\n";
    }
    return os.str();
  }

  friend bool operator==(const ExplicitProduct&, const ExplicitProduct&) = default;
};

inline ExplicitProduct as_product(const Relation& g) { return {g.arity(), g.finite_points()}; }

/// Tuples (a..., y, b...) with a in A ending at y and b in B starting at y.
inline ExplicitProduct star(const ExplicitProduct& a, const ExplicitProduct& b, std::size_t max_tuples = 5'000'000) {
  ExplicitProduct out{a.arity + b.arity - 1, {}};
  std::map<Scalar, std::vector<const Point*>> by_first;
  for (const auto& t : b.tuples) by_first[t.front()].push_back(&t);
  for (const auto& s : a.tuples) {
    auto it = by_first.find(s.back());
    if (it == by_first.end()) continue;
    for (const Point* t : it->second) {
      Point joined = s;
      joined.insert(joined.end(), t->begin() + 1, t->end());
      out.tuples.push_back(std::move(joined));
      if (out.tuples.size() > max_tuples) {
        throw std::length_error("explicit product exceeds " + std::to_string(max_tuples) + " tuples");
      }
    }
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  out.tuples.erase(std::unique(out.tuples.begin(), out.tuples.end()), out.tuples.end());
  return out;
}

inline ExplicitProduct star(const Relation& a, const Relation& b, std::size_t max_tuples = 5'000'000) {
  return star(as_product(a), as_product(b), max_tuples);
}

inline ExplicitProduct star_power(const Relation& g, int m, std::size_t max_tuples = 5'000'000) {
  if (m < 1) throw std::invalid_argument("star_power needs m >= 1, got " + std::to_string(m));
  ExplicitProduct base = as_product(g);
  ExplicitProduct acc = base;
  for (int k = 2; k <= m; ++k) acc = star(acc, base, max_tuples);
  return acc;
}

/// Closed chain of points of G; consecutive points link and the last links to the first.
struct CycleCertificate {
  std::vector<Point> cycle;
  std::size_t length() const { return cycle.size(); }

  /// One period of the coordinate stream: each point contributes all but its last coordinate.
  std::vector<Scalar> stream_period() const {
    std::vector<Scalar> s;
    for (const auto& p : cycle) s.insert(s.end(), p.begin(), p.end() - 1);
    return s;
  }

  bool valid() const {
    if (cycle.empty()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i].back() != cycle[(i + 1) % cycle.size()].front()) return false;
    }
    return true;
  }
};

struct NonemptyResult {
  bool nonempty = false;
  std::optional<CycleCertificate> certificate;
};

/// The infinite product is nonempty iff the transition digraph has a cycle.
inline NonemptyResult infinite_nonempty(const Relation& g) {
  TransitionGraph tg(g);
  auto cyc = tg.find_cycle();
  if (!cyc) return {};
  CycleCertificate cert;
  for (int v : *cyc) cert.cycle.push_back(tg.node(v));
  return {true, cert};
}

struct PeriodicPoints {
  BigInt count;
  /// One full period of each represented stream (at most the requested number).
  std::vector<std::vector<Scalar>> representatives;
};

inline PeriodicPoints periodic_points(const Relation& g, int p, std::size_t max_representatives = 64) {
  if (p < 1) throw std::invalid_argument("period must be >= 1, got " + std::to_string(p));
  TransitionGraph tg(g);
  PeriodicPoints out{tg.trace_power(p), {}};
  // Enumerate closed walks v0 -> ... -> v_{p-1} -> v0 in lexicographic order of node indices.
  std::vector<int> walk;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (out.representatives.size() >= max_representatives) return;
    if (depth == p) {
      if (!tg.has_edge(walk.back(), walk.front())) return;
      std::vector<Scalar> s;
      for (int v : walk) s.insert(s.end(), tg.node(v).begin(), tg.node(v).end() - 1);
      out.representatives.push_back(std::move(s));
      return;
    }
    for (int w : tg.out(walk.back())) {
      walk.push_back(w);
      self(self, depth + 1);
      walk.pop_back();
    }
  };
  for (int s = 0; s < tg.size() && out.representatives.size() < max_representatives; ++s) {
    walk = {s};
    dfs(dfs, 1);
  }
  return out;
}

/// Points lying on bi-infinite chains: repeatedly delete points with no predecessor or no successor.
inline Relation kernel(const Relation& g) {
  if (!g.is_finite()) throw std::invalid_argument("kernel needs a finite relation");
  TransitionGraph tg(g);
  const int n = tg.size();
  std::vector<bool> alive(n, true);
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (int v = 0; v < n; ++v) {
    outdeg[v] = static_cast<int>(tg.out(v).size());
    indeg[v] = static_cast<int>(tg.in(v).size());
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0 || outdeg[v] == 0) queue.push_back(v), alive[v] = false;
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int w : tg.out(v)) {
      if (alive[w] && --indeg[w] == 0) alive[w] = false, queue.push_back(w);
    }
    for (int u : tg.in(v)) {
      if (alive[u] && --outdeg[u] == 0) alive[u] = false, queue.push_back(u);
    }
  }
  std::vector<Point> keep;
  for (int v = 0; v < n; ++v) {
    if (alive[v]) keep.push_back(tg.node(v));
  }
  return Relation::points(g.arity(), std::move(keep));
}

}  // namespace mahavier
