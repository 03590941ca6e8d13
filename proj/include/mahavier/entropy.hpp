#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mahavier/counting.hpp"
#include "mahavier/product.hpp"
#include "mahavier/transition.hpp"

namespace mahavier {

enum class EntropyMethod { Transfer, FeketeInf, Slope };

inline std::string to_string(EntropyMethod m) {
  switch (m) {
    case EntropyMethod::Transfer: return "transfer";
    case EntropyMethod::FeketeInf: return "fekete";
    default: return "slope";
  }
}

struct GridEstimate {
  int n = 0;
  double fekete = 0;    // min over depths of a_m / m
  double slope = 0;     // least-squares slope of a_m against m, top half of depths
  double residual = 0;  // RMS residual of that fit
  double last = 0;      // a_M / M at the deepest depth
  bool exact = true;
  bool budget = false;
  bool empty = false;   // some depth had no boxes
};

struct EntropyEstimate {
  double value = 0;  // nats
  EntropyMethod method = EntropyMethod::Transfer;
  bool divergent = false;
  bool empty_product = false;  // transfer: acyclic digraph
  bool converged = true;       // transfer: spectral bracket met the tolerance
  double spectral_radius = 1;  // transfer only
  int m_max = 0;
  std::vector<GridEstimate> per_grid;
  std::vector<double> doubling_growth;  // per-grid estimate increase per doubling of n

  double bits() const { return value / std::log(2.0); }
};

namespace detail {

/// w / v as a double, accurate to double precision for positive big integers.
inline double big_ratio(const BigInt& w, const BigInt& v) {
  BigInt q = (w << 64) / v;
  return std::ldexp(q.get_d(), -64);
}

struct ComponentRadius {
  double rho = 1;
  bool converged = true;
};

/// Spectral radius of an irreducible component: Collatz-Wielandt bracket on A^d restricted to one
/// cyclic class (primitive there), big-integer iteration with periodic rescaling.
inline ComponentRadius component_radius(const TransitionGraph& tg, const std::vector<int>& comp, int d,
                                        double rel_tol, long max_steps) {
  const int n = tg.size();
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
  // Cyclic class 0: nodes at BFS level divisible by d.
  std::vector<int> level(comp.size(), -1);
  std::vector<int> queue{0};
  level[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = comp[queue[h]];
    for (int w : tg.out(v)) {
      int lw = local[w];
      if (lw < 0 || level[lw] >= 0) continue;
      level[lw] = level[queue[h]] + 1;
      queue.push_back(lw);
    }
  }
  std::vector<int> cls;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (level[i] % d == 0) cls.push_back(static_cast<int>(i));
  }
  std::vector<BigInt> v(comp.size(), BigInt(0));
  for (int i : cls) v[i] = 1;
  auto apply = [&](const std::vector<BigInt>& x) {
    std::vector<BigInt> y(x.size(), BigInt(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (int w : tg.out(comp[i])) {
        if (local[w] >= 0) y[local[w]] += x[i];
      }
    }
    return y;
  };
  ComponentRadius out;
  double lo = 0, hi = 0;
  for (long step = 0; step < max_steps; ++step) {
    std::vector<BigInt> w = v;
    for (int k = 0; k < d; ++k) w = apply(w);
    bool positive = true;
    lo = std::numeric_limits<double>::infinity();
    hi = 0;
    for (int i : cls) {
      if (v[i] == 0 || w[i] == 0) {
        positive = false;
        break;
      }
      double r = big_ratio(w[i], v[i]);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    v = std::move(w);
    if (positive && hi - lo <= rel_tol * lo) {
      out.rho = std::pow(0.5 * (lo + hi), 1.0 / d);
      return out;
    }
    // Rescale so entries stay a few thousand bits wide without zeroing the smallest one.
    std::size_t maxbits = 0, minbits = std::numeric_limits<std::size_t>::max();
    for (int i : cls) {
      if (v[i] == 0) continue;
      std::size_t b = mpz_sizeinbase(v[i].get_mpz_t(), 2);
      maxbits = std::max(maxbits, b);
      minbits = std::min(minbits, b);
    }
    if (maxbits > 4096) {
      std::size_t shift = maxbits - 2048;
      if (minbits < shift + 256) shift = minbits > 256 ? minbits - 256 : 0;
      if (shift > 0) {
        for (auto& x : v) x >>= static_cast<mp_bitcnt_t>(shift);
      }
    }
  }
  out.converged = false;
  out.rho = std::pow(0.5 * (lo + hi), 1.0 / d);
  return out;
}

}  // namespace detail

/// ln of the spectral radius of the transition digraph; 0 with empty_product for acyclic digraphs.
inline EntropyEstimate entropy_transfer(const Relation& g, double rel_tol = 1e-13, long max_steps = 200'000) {
  if (!g.is_finite()) throw std::invalid_argument("entropy_transfer needs a finite relation");
  EntropyEstimate e;
  e.method = EntropyMethod::Transfer;
  TransitionGraph tg(g);
  bool any = false;
  double best = 1;
  for (const auto& comp : tg.components()) {
    if (!tg.nontrivial(comp)) continue;
    any = true;
    auto r = detail::component_radius(tg, comp, tg.period(comp), rel_tol, max_steps);
    best = std::max(best, r.rho);
    e.converged = e.converged && r.converged;
  }
  e.empty_product = !any;
  e.spectral_radius = any ? best : 0;
  e.value = any ? std::log(best) : 0;
  return e;
}

/// (ent of the k-fold explicit product via transfer, k times ent of G).
inline std::pair<EntropyEstimate, EntropyEstimate> k_power_entropy(const Relation& g, int k,
                                                                   std::size_t max_tuples = 2'000'000) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  EntropyEstimate base = entropy_transfer(g);
  EntropyEstimate power = k == 1 ? base : entropy_transfer(star_power(g, k, max_tuples).as_relation());
  EntropyEstimate scaled = base;
  scaled.value = k * base.value;
  scaled.spectral_radius = std::pow(base.spectral_radius, k);
  return {power, scaled};
}

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // RMS
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  LineFit f;
  const std::size_t n = x.size();
  if (n == 0) return f;
  if (n == 1) {
    f.intercept = y[0];
    return f;
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) mx += x[i], my += y[i];
  mx /= n, my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) sxx += (x[i] - mx) * (x[i] - mx), sxy += (x[i] - mx) * (y[i] - my);
  f.slope = sxx > 0 ? sxy / sxx : 0;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

/// Per-grid Fekete and slope estimates from one count series (upper counts; budget depths skipped).
inline GridEstimate grid_estimate(const CountSeries& s) {
  GridEstimate g;
  g.n = s.grid.n();
  g.exact = s.exact();
  g.budget = s.budget_hit();
  std::vector<const CountEntry*> usable;
  for (const auto& e : s.entries) {
    if (e.upper == 0) {
      g.empty = true;
      return g;
    }
    if (!e.budget) usable.push_back(&e);
  }
  if (usable.empty()) return g;
  g.fekete = std::numeric_limits<double>::infinity();
  for (const auto* e : usable) g.fekete = std::min(g.fekete, e->a_upper() / e->m);
  g.last = usable.back()->a_upper() / usable.back()->m;
  std::size_t from = usable.size() / 2;
  if (usable.size() - from < 2) from = usable.size() >= 2 ? usable.size() - 2 : 0;
  std::vector<double> xs, ys;
  for (std::size_t i = from; i < usable.size(); ++i) {
    xs.push_back(usable[i]->m);
    ys.push_back(usable[i]->a_upper());
  }
  LineFit fit = least_squares(xs, ys);
  g.slope = xs.size() >= 2 ? fit.slope : g.fekete;
  g.residual = fit.residual;
  return g;
}

/// Growth per doubling of n beyond which a family is flagged divergent.
inline double divergence_threshold() { return 0.5 * std::log(2.0) - 0.05; }

/// Sup over the grid family of the per-grid estimates, with a divergence verdict: every doubling
/// of n raises the estimate by at least divergence_threshold().
inline EntropyEstimate entropy_limit(std::vector<CountSeries> family, EntropyMethod method = EntropyMethod::Slope) {
  if (family.empty()) throw std::invalid_argument("entropy_limit needs at least one count series");
  if (method == EntropyMethod::Transfer) throw std::invalid_argument("entropy_limit takes fekete or slope");
  std::sort(family.begin(), family.end(), [](const CountSeries& a, const CountSeries& b) { return a.grid.n() < b.grid.n(); });
  EntropyEstimate e;
  e.method = method;
  e.value = 0;
  for (const auto& s : family) {
    GridEstimate g = grid_estimate(s);
    e.m_max = std::max(e.m_max, s.entries.empty() ? 0 : s.entries.back().m);
    e.per_grid.push_back(g);
  }
  auto est = [&](const GridEstimate& g) {
    if (g.empty) return 0.0;
    return std::max(0.0, method == EntropyMethod::FeketeInf ? g.fekete : g.slope);
  };
  for (const auto& g : e.per_grid) e.value = std::max(e.value, est(g));
  bool diverging = e.per_grid.size() >= 2;
  for (std::size_t i = 1; i < e.per_grid.size(); ++i) {
    double doublings = std::log2(static_cast<double>(e.per_grid[i].n) / e.per_grid[i - 1].n);
    double growth = doublings > 0 ? (est(e.per_grid[i]) - est(e.per_grid[i - 1])) / doublings : 0;
    e.doubling_growth.push_back(growth);
    if (!(growth >= divergence_threshold())) diverging = false;
  }
  e.divergent = diverging;
  return e;
}

/// Count series for every n in the family, then entropy_limit.
inline EntropyEstimate entropy_estimate(const Relation& g, const std::vector<int>& ns, int m_max,
                                        EntropyMethod method = EntropyMethod::Slope, const CountOptions& opt = {},
                                        GridMode mode = GridMode::Partition) {
  std::vector<CountSeries> fam;
  for (int n : ns) fam.push_back(count_series(g, mode == GridMode::Partition ? GridSpec::partition(n) : GridSpec::overlap(n), m_max, opt));
  return entropy_limit(std::move(fam), method);
}

struct DimensionEstimate {
  std::optional<double> value;  // absent when the fit residual exceeds the cap
  double slope = 0;
  double residual = 0;
  std::vector<std::pair<int, BigInt>> counts;  // (n, upper count)
  bool budget = false;
};

/// Box-counting dimension of the m-fold product: slope of ln count against ln n.
inline DimensionEstimate box_dimension(const Relation& g, int m, const std::vector<int>& ns, const CountOptions& opt = {},
                                       double residual_cap = 0.1) {
  DimensionEstimate d;
  std::vector<double> xs, ys;
  for (int n : ns) {
    CountEntry e = count_boxes(g, GridSpec::partition(n), m, opt);
    d.budget = d.budget || e.budget;
    d.counts.emplace_back(n, e.upper);
    if (e.upper == 0) continue;
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(e.a_upper());
  }
  LineFit f = least_squares(xs, ys);
  d.slope = f.slope;
  d.residual = f.residual;
  if (xs.size() >= 2 && f.residual <= residual_cap) d.value = f.slope;
  return d;
}

/// n = lo, 2 lo, 4 lo, ..., up to hi.
inline std::vector<int> dyadic_range(int lo, int hi) {
  std::vector<int> ns;
  for (int n = lo; n <= hi; n *= 2) ns.push_back(n);
  return ns;
}

}  // namespace mahavier
