#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mahavier/relation.hpp"
#include "mahavier/scalar.hpp"

namespace mahavier {

/// Point-transition digraph of a finite relation: p -> q iff the last coordinate of p equals
/// the first coordinate of q. Nodes are the points in lexicographic order; adjacency lists ascend.
class TransitionGraph {
 public:
  TransitionGraph() = default;

  explicit TransitionGraph(const Relation& g) : TransitionGraph(g.finite_points(), g.arity()) {}

  TransitionGraph(std::vector<Point> nodes, std::size_t arity) : nodes_(std::move(nodes)), arity_(arity) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    std::map<Scalar, std::vector<int>> by_first;
    for (int i = 0; i < size(); ++i) by_first[nodes_[i].front()].push_back(i);
    out_.resize(nodes_.size());
    in_.resize(nodes_.size());
    for (int i = 0; i < size(); ++i) {
      auto it = by_first.find(nodes_[i].back());
      if (it == by_first.end()) continue;
      out_[i] = it->second;
      for (int j : it->second) in_[j].push_back(i);
    }
  }

  int size() const { return static_cast<int>(nodes_.size()); }
  std::size_t arity() const { return arity_; }
  /// Coordinates consumed per edge.
  std::size_t arity_step() const { return arity_ - 1; }
  const std::vector<Point>& nodes() const { return nodes_; }
  const Point& node(int i) const { return nodes_.at(i); }
  const std::vector<int>& out(int i) const { return out_.at(i); }
  const std::vector<int>& in(int i) const { return in_.at(i); }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& o : out_) e += o.size();
    return e;
  }

  bool has_edge(int i, int j) const { return std::binary_search(out_[i].begin(), out_[i].end(), j); }

  int index_of(const Point& p) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p);
    if (it == nodes_.end() || *it != p) return -1;
    return static_cast<int>(it - nodes_.begin());
  }

  /// v <- v A (row vector times adjacency): v'[j] = sum over i -> j of v[i].
  std::vector<BigInt> step(const std::vector<BigInt>& v) const {
    std::vector<BigInt> r(v.size(), BigInt(0));
    for (int i = 0; i < size(); ++i) {
      if (v[i] == 0) continue;
      for (int j : out_[i]) r[j] += v[i];
    }
    return r;
  }

  /// Number of walks visiting `nodes_in_walk` nodes (so nodes_in_walk - 1 edges).
  BigInt walk_count(int nodes_in_walk) const {
    if (nodes_in_walk <= 0) return 0;
    std::vector<BigInt> v(size(), BigInt(1));
    for (int k = 1; k < nodes_in_walk; ++k) v = step(v);
    BigInt total = 0;
    for (const auto& x : v) total += x;
    return total;
  }

  /// trace(A^p): closed walks of length p.
  BigInt trace_power(int p) const {
    BigInt total = 0;
    for (int s = 0; s < size(); ++s) {
      std::vector<BigInt> v(size(), BigInt(0));
      v[s] = 1;
      for (int k = 0; k < p; ++k) v = step(v);
      total += v[s];
    }
    return total;
  }

  /// Strongly connected components (Tarjan), numbered in order of their smallest node.
  std::vector<int> scc_ids() const {
    const int n = size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0, ncomp = 0;
    for (int root = 0; root < n; ++root) {
      if (index[root] != -1) continue;
      std::vector<std::pair<int, std::size_t>> call{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!call.empty()) {
        auto& [v, next] = call.back();
        if (next < out_[v].size()) {
          int w = out_[v][next++];
          if (index[w] == -1) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = ncomp;
          } while (w != v);
          ++ncomp;
        }
        int done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
    }
    // Renumber by smallest member for deterministic reporting.
    std::vector<int> first(ncomp, n);
    for (int v = 0; v < n; ++v) first[comp[v]] = std::min(first[comp[v]], v);
    std::vector<int> order(ncomp);
    for (int c = 0; c < ncomp; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
    std::vector<int> rename(ncomp);
    for (int c = 0; c < ncomp; ++c) rename[order[c]] = c;
    for (int v = 0; v < n; ++v) comp[v] = rename[comp[v]];
    return comp;
  }

  /// Components as ascending node lists, in component-id order.
  std::vector<std::vector<int>> components() const {
    auto ids = scc_ids();
    int nc = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < size(); ++v) out[ids[v]].push_back(v);
    return out;
  }

  /// A component is nontrivial when it carries a cycle (two or more nodes, or a self-loop).
  bool nontrivial(const std::vector<int>& comp) const {
    return comp.size() > 1 || (comp.size() == 1 && has_edge(comp[0], comp[0]));
  }

  /// Period of a strongly connected component: gcd of level differences along internal edges.
  int period(const std::vector<int>& comp) const {
    if (!nontrivial(comp)) return 0;
    std::vector<int> level(size(), -1);
    std::vector<bool> inside(size(), false);
    for (int v : comp) inside[v] = true;
    std::vector<int> queue{comp[0]};
    level[comp[0]] = 0;
    long g = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : out_[v]) {
        if (!inside[w]) continue;
        if (level[w] == -1) {
          level[w] = level[v] + 1;
          queue.push_back(w);
        } else {
          g = std::gcd(g, static_cast<long>(std::abs(level[v] + 1 - level[w])));
        }
      }
    }
    return static_cast<int>(g);
  }

  /// Deterministic DFS for a directed cycle; nodes explored and successors taken in ascending order.
  std::optional<std::vector<int>> find_cycle() const {
    const int n = size();
    std::vector<int> color(n, 0), parent(n, -1);
    for (int root = 0; root < n; ++root) {
      if (color[root]) continue;
      std::vector<std::pair<int, std::size_t>> call{{root, 0}};
      color[root] = 1;
      while (!call.empty()) {
        auto& [v, next] = call.back();
        if (next < out_[v].size()) {
          int w = out_[v][next++];
          if (color[w] == 0) {
            color[w] = 1;
            parent[w] = v;
            call.push_back({w, 0});
          } else if (color[w] == 1) {
            std::vector<int> cyc{w};
            for (int u = v; u != w; u = parent[u]) cyc.push_back(u);
            std::reverse(cyc.begin() + 1, cyc.end());
            return cyc;
          }
          continue;
        }
        color[v] = 2;
        call.pop_back();
      }
    }
    return std::nullopt;
  }

  /// "p -> q" per edge, rational tuple labels.
  std::string edge_list() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
      for (int j : out_[i]) os << to_literal(nodes_[i]) << " -> " << to_literal(nodes_[j]) << "\n";
    }
    return os.str();
  }

 private:
  std::vector<Point> nodes_;
  std::size_t arity_ = 2;
  std::vector<std::vector<int>> out_, in_;
};

}  // namespace mahavier
