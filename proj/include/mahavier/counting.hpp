#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "mahavier/grid.hpp"
#include "mahavier/product.hpp"
#include "mahavier/relation.hpp"

namespace mahavier {

/// Cell index plus the set of link values reachable inside that cell.
/// Invariant: reach is nonempty, in normal form, and contained in the cell.
struct ChainState {
  int cell = 0;
  IntervalSet reach;

  friend bool operator<(const ChainState& a, const ChainState& b) {
    if (a.cell != b.cell) return a.cell < b.cell;
    return a.reach < b.reach;
  }
  friend bool operator==(const ChainState&, const ChainState&) = default;
};

enum class Direction { Auto, Forward, Reverse };

struct CountOptions {
  std::size_t budget = 100'000;  // states per depth
  int threads = 0;               // 0: hardware concurrency, capped by MAHAVIER_THREADS
  Direction direction = Direction::Auto;
  ImageOptions image;
  // Reach endpoints with larger denominators are rounded to this dyadic resolution
  // (outward for the upper frontier, inward for the lower); 0 disables rounding.
  unsigned precision_bits = 128;
};

struct CountEntry {
  int m = 0;
  BigInt lower = 0;
  BigInt upper = 0;
  bool exact = true;
  bool budget = false;
  std::size_t states = 0;

  double a_lower() const { return log_big(lower); }
  double a_upper() const { return log_big(upper); }
};

struct CountSeries {
  GridSpec grid = GridSpec::partition(1);
  std::size_t arity = 2;
  std::vector<CountEntry> entries;
  std::string direction = "forward";

  bool exact() const {
    return std::all_of(entries.begin(), entries.end(), [](const CountEntry& e) { return e.exact; });
  }
  bool budget_hit() const {
    return std::any_of(entries.begin(), entries.end(), [](const CountEntry& e) { return e.budget; });
  }
  const CountEntry& at(int m) const {
    for (const auto& e : entries) {
      if (e.m == m) return e;
    }
    throw std::out_of_range("depth " + std::to_string(m) + " not in series");
  }
  bool has(int m) const {
    return std::any_of(entries.begin(), entries.end(), [m](const CountEntry& e) { return e.m == m; });
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "m,count_lower,count_upper,a_m_lower,a_m_upper,a_m_over_m_upper,exact_flag,budget_flag\n";
    for (const auto& e : entries) {
      os << e.m << "," << e.lower.get_str() << "," << e.upper.get_str() << "," << fmt(e.a_lower()) << ","
         << fmt(e.a_upper()) << "," << fmt(e.a_upper() / e.m) << "," << (e.exact ? 1 : 0) << ","
         << (e.budget ? 1 : 0) << "\n";
    }
    return os.str();
  }

  static std::string fmt(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
  }
};

namespace detail {

inline int resolve_threads(int requested) {
  int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (t <= 0) t = 1;
  if (const char* env = std::getenv("MAHAVIER_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) t = std::min(t, cap);
  }
  return t;
}

/// Cells whose interval may meet the hull of s, ascending.
inline std::vector<int> candidate_cells(const GridSpec& grid, const IntervalSet& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  Interval h = s.hull();
  auto floor_idx = [&](const Scalar& x) {
    Scalar t = x * grid.n();
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return f.get_si();
  };
  long lo = std::max(0L, floor_idx(h.lo()) - 1);
  long hi = std::min(static_cast<long>(grid.n()) - 1, floor_idx(h.hi()) + 1);
  for (long k = lo; k <= hi; ++k) {
    if (s.intersects(grid.cell(static_cast<int>(k)))) out.push_back(static_cast<int>(k));
  }
  return out;
}

using SuccessorMap = std::map<std::vector<int>, Enclosure>;

inline void add_successor(SuccessorMap& out, std::vector<int> key, const Enclosure& e) {
  if (e.empty()) return;
  auto [it, inserted] = out.emplace(std::move(key), e);
  if (!inserted) it->second = unite(it->second, e);
}

/// Splits an exact image over [0,1] into per-cell successors keyed by the last cell.
inline void split_by_cells(SuccessorMap& out, const GridSpec& grid, const IntervalSet& y) {
  for (int c : candidate_cells(grid, y)) {
    add_successor(out, {c}, Enclosure::exact(intersect(y, grid.cell(c))));
  }
}

/// For a reachable set of link values, every way to place the next factor:
/// key = cells of coordinates 1..N, value = enclosure of the new link value inside the last cell.
inline SuccessorMap successors(const Relation& g, const GridSpec& grid, const IntervalSet& reach,
                               const ImageOptions& opt) {
  SuccessorMap out;
  const std::size_t arity = g.arity();
  static const Interval unit = Interval::unit();
  for (const auto& atom : g.atoms()) {
    if (const auto* ps = std::get_if<PointSet>(&atom)) {
      std::map<std::vector<int>, std::vector<Interval>> hits;
      for (const auto& p : ps->points) {
        if (!reach.contains(p.front())) continue;
        std::vector<std::vector<int>> keys{{}};
        for (std::size_t k = 1; k < arity; ++k) {
          auto cs = grid.cells_containing(p[k]);
          std::vector<std::vector<int>> next;
          for (const auto& key : keys) {
            for (int c : cs) {
              auto e = key;
              e.push_back(c);
              next.push_back(std::move(e));
            }
          }
          keys = std::move(next);
        }
        for (auto& key : keys) hits[key].push_back(Interval::point(p.back()));
      }
      for (auto& [key, pts] : hits) add_successor(out, key, Enclosure::exact(IntervalSet::normalize(std::move(pts))));
    } else if (std::holds_alternative<SegmentSet>(atom)) {
      split_by_cells(out, grid, atom_image(atom, reach, {}, unit, opt).outer);
    } else if (arity == 2) {
      const auto& reg = std::get<ImplicitRegion>(atom);
      if (auto ex = region_image_exact(reg, reach, unit)) {
        split_by_cells(out, grid, *ex);
      } else {
        for (int c = 0; c < grid.n(); ++c) add_successor(out, {c}, atom_image(atom, reach, {}, grid.cell(c), opt));
      }
    } else {
      // General arity: enumerate the middle cells, pave the last coordinate per cell.
      const int n = grid.n();
      std::vector<int> key(arity - 1, 0);
      for (;;) {
        std::vector<Interval> middle;
        for (std::size_t k = 0; k + 1 < key.size(); ++k) middle.push_back(grid.cell(key[k]));
        add_successor(out, key, atom_image(atom, reach, middle, grid.cell(key.back()), opt));
        std::size_t k = 0;
        while (k < key.size() && ++key[k] == n) key[k++] = 0;
        if (k == key.size()) break;
      }
    }
  }
  return out;
}

/// Rounds endpoints whose denominator exceeds 2^bits onto the 2^-bits lattice. Outward rounding
/// only grows the set (then clipped to `cell`); inward only shrinks it. Returns false if unchanged.
inline bool coarsen(IntervalSet& s, const Interval& cell, bool outward, unsigned bits) {
  auto fine = [&](const Scalar& x) { return mpz_sizeinbase(x.get_den_mpz_t(), 2) <= bits; };
  bool heavy = false;
  for (const auto& p : s.parts()) heavy = heavy || !fine(p.lo()) || !fine(p.hi());
  if (!heavy) return false;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  auto round = [&](const Scalar& x, bool up) {
    Scalar t = x * scale;
    BigInt q;
    if (up) {
      mpz_cdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    } else {
      mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    }
    Scalar r(q, scale);
    r.canonicalize();
    return r;
  };
  std::vector<Interval> parts;
  for (const auto& p : s.parts()) {
    if (fine(p.lo()) && fine(p.hi())) {
      parts.push_back(p);
      continue;
    }
    Scalar lo = fine(p.lo()) ? p.lo() : round(p.lo(), !outward);
    Scalar hi = fine(p.hi()) ? p.hi() : round(p.hi(), outward);
    // A rounded endpoint lies strictly inside the original hull when rounding inward, so closing it is sound.
    bool lc = fine(p.lo()) ? p.lo_closed() : true;
    bool hc = fine(p.hi()) ? p.hi_closed() : true;
    if (lo < hi || (lo == hi && lc && hc)) parts.emplace_back(lo, hi, lc, hc);
  }
  s = IntervalSet::normalize(std::move(parts));
  if (outward) s = intersect(s, cell);
  return true;
}

using Frontier = std::map<ChainState, BigInt>;

/// Which enclosure side feeds the next frontier.
enum class Side { Both, Outer, Inner };

struct Expansion {
  Frontier outer, inner;
  bool exact = true;
};

inline void merge_into(Frontier& dst, Frontier&& src) {
  if (dst.empty()) {
    dst = std::move(src);
    return;
  }
  for (auto& [k, v] : src) {
    auto [it, inserted] = dst.emplace(k, v);
    if (!inserted) it->second += v;
  }
}

inline Expansion expand(const Relation& g, const GridSpec& grid, const Frontier& f, Side side,
                        const ImageOptions& opt, int threads, unsigned bits) {
  std::vector<const std::pair<const ChainState, BigInt>*> items;
  items.reserve(f.size());
  for (const auto& kv : f) items.push_back(&kv);

  auto work = [&](std::size_t begin, std::size_t end, Expansion& ex) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [state, count] = *items[i];
      for (auto& [key, enc] : successors(g, grid, state.reach, opt)) {
        if (!enc.is_exact()) ex.exact = false;
        if (bits > 0) {
          const Interval& cell = grid.cell(key.back());
          if (side != Side::Inner && coarsen(enc.outer, cell, true, bits)) ex.exact = false;
          if (side != Side::Outer && coarsen(enc.inner, cell, false, bits)) ex.exact = false;
        }
        if (side != Side::Inner && !enc.outer.empty()) ex.outer[{key.back(), enc.outer}] += count;
        if (side != Side::Outer && !enc.inner.empty()) ex.inner[{key.back(), enc.inner}] += count;
      }
    }
  };

  const std::size_t per_thread_min = 32;
  int t = std::min<int>(threads, static_cast<int>(items.size() / per_thread_min));
  Expansion out;
  if (t <= 1) {
    work(0, items.size(), out);
    return out;
  }
  // Contiguous chunks, merged in chunk order; big-integer addition makes the result schedule-free.
  std::vector<Expansion> parts(t);
  std::vector<std::thread> pool;
  std::size_t chunk = (items.size() + t - 1) / t;
  for (int w = 0; w < t; ++w) {
    std::size_t b = w * chunk, e = std::min(items.size(), b + chunk);
    pool.emplace_back([&, b, e, w] { work(b, e, parts[w]); });
  }
  for (auto& th : pool) th.join();
  for (auto& p : parts) {
    out.exact = out.exact && p.exact;
    merge_into(out.outer, std::move(p.outer));
    merge_into(out.inner, std::move(p.inner));
  }
  return out;
}

inline BigInt frontier_total(const Frontier& f) {
  BigInt s = 0;
  for (const auto& kv : f) s += kv.second;
  return s;
}

/// Keeps the first `budget` states in map order; the kept mass is a certified lower bound.
inline bool truncate(Frontier& f, std::size_t budget) {
  if (f.size() <= budget) return false;
  auto it = f.begin();
  std::advance(it, budget);
  f.erase(it, f.end());
  return true;
}

/// Breadth-first counter for one relation. Until an inexact enclosure shows up, a single frontier
/// is exact; afterwards an outer (upper) and inner (lower) frontier run side by side.
class ChainCounter {
 public:
  ChainCounter(Relation g, GridSpec grid, const CountOptions& opt)
      : g_(std::move(g)), grid_(std::move(grid)), opt_(opt), threads_(resolve_threads(opt.threads)) {
    for (int k = 0; k < grid_.n(); ++k) upper_[{k, IntervalSet(grid_.cell(k))}] = 1;
  }

  CountEntry advance() {
    ++depth_;
    if (!split_) {
      Expansion ex = expand(g_, grid_, upper_, Side::Both, opt_.image, threads_, opt_.precision_bits);
      if (ex.exact) {
        upper_ = std::move(ex.outer);
      } else {
        upper_ = std::move(ex.outer);
        lower_ = std::move(ex.inner);
        split_ = true;
      }
    } else {
      if (!upper_truncated_) upper_ = expand(g_, grid_, upper_, Side::Outer, opt_.image, threads_, opt_.precision_bits).outer;
      lower_ = expand(g_, grid_, lower_, Side::Inner, opt_.image, threads_, opt_.precision_bits).inner;
    }
    if (!split_) {
      if (truncate(upper_, opt_.budget)) upper_truncated_ = true;
    } else {
      if (!upper_truncated_ && truncate(upper_, opt_.budget)) {
        upper_truncated_ = true;
        upper_.clear();
      }
      if (truncate(lower_, opt_.budget)) lower_truncated_ = true;
    }
    CountEntry e;
    e.m = depth_;
    e.lower = frontier_total(split_ ? lower_ : upper_);
    e.upper = upper_truncated_ ? pow_big(grid_.n(), depth_ * (g_.arity() - 1) + 1) : frontier_total(upper_);
    e.budget = upper_truncated_ || lower_truncated_;
    // Both sides are certified, so a closed bracket is an exact count.
    e.exact = e.lower == e.upper;
    e.states = upper_.size() + lower_.size();
    return e;
  }

  bool split() const { return split_; }
  bool budget_hit() const { return upper_truncated_ || lower_truncated_; }
  std::size_t states() const { return upper_.size() + lower_.size(); }

 private:
  Relation g_;
  GridSpec grid_;
  CountOptions opt_;
  int threads_;
  Frontier upper_, lower_;
  bool split_ = false;
  bool upper_truncated_ = false;
  bool lower_truncated_ = false;
  int depth_ = 0;
};

}  // namespace detail

/// Box-hit counts of the m-fold product for m = 1..m_max.
///
/// Auto direction runs G and its inverse in lockstep (tuple reversal maps hit boxes to hit boxes)
/// and keeps whichever stays exact, within budget, and with the smaller frontier; while both are
/// exact their counts must agree.
inline CountSeries count_series(const Relation& g, const GridSpec& grid, int m_max, const CountOptions& opt = {}) {
  if (m_max < 1) throw std::invalid_argument("depth must be >= 1, got " + std::to_string(m_max));
  CountSeries series;
  series.grid = grid;
  series.arity = g.arity();

  std::vector<std::pair<std::string, detail::ChainCounter>> dirs;
  if (opt.direction != Direction::Reverse) dirs.emplace_back("forward", detail::ChainCounter(g, grid, opt));
  if (opt.direction == Direction::Reverse || (opt.direction == Direction::Auto && !(invert(g) == g))) {
    dirs.emplace_back("reverse", detail::ChainCounter(invert(g), grid, opt));
  }

  for (int m = 1; m <= m_max; ++m) {
    std::vector<CountEntry> es;
    for (auto& d : dirs) es.push_back(d.second.advance());
    if (es.size() == 2) {
      if (es[0].exact && es[1].exact && es[0].lower != es[1].lower) {
        throw std::logic_error("direction cross-check failed at m=" + std::to_string(m) + ": " +
                               es[0].lower.get_str() + " vs " + es[1].lower.get_str());
      }
    }
    CountEntry e = es[0];
    for (std::size_t k = 1; k < es.size(); ++k) {
      if (es[k].lower > e.lower) e.lower = es[k].lower;
      if (es[k].upper < e.upper) e.upper = es[k].upper;
      e.exact = e.exact || es[k].exact;
      e.budget = e.budget && es[k].budget;
      e.states = std::max(e.states, es[k].states);
    }
    if (e.exact) e.budget = false;
    series.entries.push_back(e);

    if (dirs.size() == 2) {
      auto worse = [&](std::size_t a, std::size_t b) {
        if (es[a].budget != es[b].budget) return es[a].budget;
        if (es[a].exact != es[b].exact) return !es[a].exact;
        return es[a].states > 8 * es[b].states + 64;
      };
      if (worse(0, 1)) {
        dirs.erase(dirs.begin());
      } else if (worse(1, 0)) {
        dirs.pop_back();
      }
    }
  }
  series.direction = dirs.size() == 2 ? "both" : dirs.front().first;
  return series;
}

inline CountEntry count_boxes(const Relation& g, const GridSpec& grid, int m, const CountOptions& opt = {}) {
  return count_series(g, grid, m, opt).entries.back();
}

struct SubcoverResult {
  std::optional<long> value;
  std::size_t incidences = 0;
  std::string note;
};

/// Exact minimum number of grid boxes covering every tuple (branch and bound set cover).
inline SubcoverResult minimal_subcover(const ExplicitProduct& p, const GridSpec& grid,
                                       std::size_t max_incidences = 1'000'000) {
  SubcoverResult res;
  std::map<std::vector<int>, std::vector<int>> box_members;
  std::vector<std::vector<int>> tuple_boxes(p.tuples.size());
  for (std::size_t t = 0; t < p.tuples.size(); ++t) {
    std::vector<std::vector<int>> keys{{}};
    for (const auto& x : p.tuples[t]) {
      auto cs = grid.cells_containing(x);
      std::vector<std::vector<int>> next;
      for (const auto& k : keys) {
        for (int c : cs) {
          auto e = k;
          e.push_back(c);
          next.push_back(std::move(e));
        }
      }
      keys = std::move(next);
      if (res.incidences + keys.size() > max_incidences) break;  // declined just below
    }
    res.incidences += keys.size();
    if (res.incidences > max_incidences) {
      res.note = "declined: more than " + std::to_string(max_incidences) + " box-tuple incidences";
      return res;
    }
    for (auto& k : keys) box_members[k].push_back(static_cast<int>(t));
  }
  std::vector<std::vector<int>> sets;
  for (auto& [k, members] : box_members) sets.push_back(members);
  std::vector<std::vector<int>> tuple_sets(p.tuples.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int t : sets[s]) tuple_sets[t].push_back(static_cast<int>(s));
  }
  std::size_t max_set = 1;
  for (const auto& s : sets) max_set = std::max(max_set, s.size());

  std::vector<int> covered(p.tuples.size(), 0);
  std::size_t uncovered = p.tuples.size();
  long best = static_cast<long>(p.tuples.size());  // one box per tuple always suffices
  auto choose = [&](int s, int delta) {
    for (int t : sets[s]) {
      if (delta > 0 && covered[t]++ == 0) --uncovered;
      if (delta < 0 && --covered[t] == 0) ++uncovered;
    }
  };
  auto search = [&](auto&& self, long used) -> void {
    if (uncovered == 0) {
      best = std::min(best, used);
      return;
    }
    long bound = used + static_cast<long>((uncovered + max_set - 1) / max_set);
    if (bound >= best) return;
    int pick = -1;
    for (std::size_t t = 0; t < covered.size(); ++t) {
      if (covered[t]) continue;
      if (pick < 0 || tuple_sets[t].size() < tuple_sets[pick].size()) pick = static_cast<int>(t);
    }
    std::vector<int> options = tuple_sets[pick];
    std::sort(options.begin(), options.end(), [&](int a, int b) { return sets[a].size() > sets[b].size(); });
    for (int s : options) {
      choose(s, +1);
      self(self, used + 1);
      choose(s, -1);
    }
  };
  search(search, 0);
  res.value = p.tuples.empty() ? 0 : best;
  return res;
}

struct SubadditivityReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
  /// Running infimum of a_m / m over upper counts, per entry.
  std::vector<double> running_inf;
};

/// Checks count(m+k) <= count(m) * count(k) (lower on the left, upper on the right), exactly.
inline SubadditivityReport subadditivity_check(const CountSeries& s) {
  SubadditivityReport r;
  double inf = std::numeric_limits<double>::infinity();
  for (const auto& e : s.entries) {
    inf = std::min(inf, e.a_upper() / e.m);
    r.running_inf.push_back(inf);
  }
  for (const auto& a : s.entries) {
    for (const auto& b : s.entries) {
      if (b.m < a.m || !s.has(a.m + b.m)) continue;
      ++r.pairs_checked;
      const auto& c = s.at(a.m + b.m);
      if (c.budget && c.upper == pow_big(s.grid.n(), c.m * (s.arity - 1) + 1) && c.lower == 0) continue;
      if (c.lower > a.upper * b.upper) {
        r.ok = false;
        r.violations.push_back("count(" + std::to_string(c.m) + ")=" + c.lower.get_str() + " > count(" +
                               std::to_string(a.m) + ")*count(" + std::to_string(b.m) + ")=" +
                               BigInt(a.upper * b.upper).get_str());
      }
    }
  }
  return r;
}

}  // namespace mahavier
