#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mahavier/transition.hpp"

namespace mahavier {

/// Vertex-shift analysis of a finite relation's transition digraph.
struct DynamicsReport {
  int nodes = 0;
  int components = 0;
  bool strongly_connected = false;
  std::map<int, BigInt> periodic_counts;  // p -> trace(A^p)
  std::vector<int> recurrent_nodes;       // on some cycle
  bool dense_periodic = false;
  bool devaney = false;
};

struct WanderingPartition {
  std::vector<int> kept;       // on a cycle, or on a path between cycles
  std::vector<int> wandering;  // everything else
};

namespace detail {

inline std::vector<bool> reach_from(const TransitionGraph& tg, const std::vector<int>& seeds, bool forward) {
  std::vector<bool> seen(tg.size(), false);
  std::vector<int> stack = seeds;
  for (int s : seeds) seen[s] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : forward ? tg.out(v) : tg.in(v)) {
      if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
  }
  return seen;
}

inline std::vector<int> recurrent(const TransitionGraph& tg) {
  std::vector<int> out;
  for (const auto& comp : tg.components()) {
    if (tg.nontrivial(comp)) out.insert(out.end(), comp.begin(), comp.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline DynamicsReport analyze(const Relation& g, int max_period = 6) {
  if (!g.is_finite()) throw std::invalid_argument("analyze needs a finite relation");
  DynamicsReport r;
  TransitionGraph tg(g);
  r.nodes = tg.size();
  if (tg.size() == 0) return r;
  auto comps = tg.components();
  r.components = static_cast<int>(comps.size());
  r.strongly_connected = comps.size() == 1;
  for (int p = 1; p <= max_period; ++p) r.periodic_counts[p] = tg.trace_power(p);
  r.recurrent_nodes = detail::recurrent(tg);
  if (!r.recurrent_nodes.empty()) {
    // Every node reaches a cycle and is reached from one.
    auto down = detail::reach_from(tg, r.recurrent_nodes, true);
    auto up = detail::reach_from(tg, r.recurrent_nodes, false);
    r.dense_periodic = true;
    for (int v = 0; v < tg.size(); ++v) r.dense_periodic = r.dense_periodic && down[v] && up[v];
  }
  // A single cycle is one periodic orbit: transitive but not chaotic.
  bool single_cycle = r.strongly_connected && tg.edge_count() == static_cast<std::size_t>(tg.size());
  r.devaney = r.strongly_connected && r.dense_periodic && !single_cycle;
  return r;
}

/// Nodes reachable from a cycle and reaching a cycle are kept; the rest wander.
inline WanderingPartition wandering_partition(const Relation& g) {
  TransitionGraph tg(g);
  WanderingPartition w;
  auto rec = detail::recurrent(tg);
  auto down = detail::reach_from(tg, rec, true);
  auto up = detail::reach_from(tg, rec, false);
  for (int v = 0; v < tg.size(); ++v) (down[v] && up[v] ? w.kept : w.wandering).push_back(v);
  return w;
}

enum class OrbitPolicy { Lexicographic, RandomSeeded };

struct OrbitStream {
  std::vector<Scalar> coords;  // x0, x1, ...
  std::vector<int> nodes;      // visited points
  bool dead_end = false;
};

/// Follows successors from `start`; each visited point contributes all but its last coordinate,
/// and the final point contributes its last one too.
inline OrbitStream orbit_stream(const Relation& g, const Point& start, OrbitPolicy policy, int length,
                                std::uint64_t seed = 0) {
  TransitionGraph tg(g);
  int v = tg.index_of(start);
  if (v < 0) throw std::invalid_argument("start point " + to_literal(start) + " is not in the relation");
  std::mt19937_64 rng(seed);
  OrbitStream s;
  s.nodes.push_back(v);
  s.coords.push_back(start.front());
  while (static_cast<int>(s.coords.size()) < length) {
    const Point& p = tg.node(v);
    for (std::size_t k = 1; k + 1 < p.size() && static_cast<int>(s.coords.size()) < length; ++k) s.coords.push_back(p[k]);
    if (static_cast<int>(s.coords.size()) >= length) break;
    const auto& next = tg.out(v);
    if (next.empty()) {
      s.coords.push_back(p.back());
      s.dead_end = true;
      break;
    }
    if (policy == OrbitPolicy::Lexicographic) {
      v = next.front();
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
      v = next[pick(rng)];
    }
    s.nodes.push_back(v);
    s.coords.push_back(tg.node(v).front());
  }
  return s;
}

}  // namespace mahavier
