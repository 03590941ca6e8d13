#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mahavier/interval.hpp"
#include "mahavier/polynomial.hpp"
#include "mahavier/scalar.hpp"

namespace mahavier {

enum class Feasibility { Yes, No, Maybe };

inline std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Yes: return "yes";
    case Feasibility::No: return "no";
    default: return "maybe";
  }
}

/// Finite set of points, sorted lexicographically and distinct.
struct PointSet {
  std::vector<Point> points;
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Closed segment with a < b lexicographically.
struct Segment {
  Point a, b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Finite union of closed segments in the plane.
struct SegmentSet {
  std::vector<Segment> segments;
  friend bool operator==(const SegmentSet&, const SegmentSet&) = default;
};

/// Conjunction of polynomial constraints p(x0, ..., xN) <= 0 intersected with the unit cube.
struct ImplicitRegion {
  std::vector<Polynomial> constraints;
  friend bool operator==(const ImplicitRegion&, const ImplicitRegion&) = default;
};

using Atom = std::variant<PointSet, SegmentSet, ImplicitRegion>;

enum class RelationKind { Points, Segments, Region, Union };

inline std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Points: return "points";
    case RelationKind::Segments: return "segments";
    case RelationKind::Region: return "region";
    default: return "union";
  }
}

/// Closed subset of [0,1]^arity. A single atom is a plain relation, two or more form a flat union.
/// The empty relation is a single empty PointSet.
class Relation {
 public:
  Relation() : Relation(empty(2)) {}

  static Relation empty(std::size_t arity) { return Relation(arity, {Atom(PointSet{})}); }

  static Relation points(std::size_t arity, std::vector<Point> pts) {
    check_arity(arity);
    for (const auto& p : pts) check_point(p, arity);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return Relation(arity, {Atom(PointSet{std::move(pts)})});
  }

  static Relation segments(std::vector<Segment> segs) {
    for (auto& s : segs) {
      check_point(s.a, 2);
      check_point(s.b, 2);
      if (s.a == s.b) throw std::invalid_argument("degenerate segment at " + to_literal(s.a) + "; use a point set");
      if (s.b < s.a) std::swap(s.a, s.b);
    }
    if (segs.empty()) throw std::invalid_argument("segment set needs at least one segment");
    return Relation(2, {Atom(SegmentSet{std::move(segs)})});
  }

  static Relation region(std::size_t arity, std::vector<Polynomial> constraints) {
    check_arity(arity);
    if (constraints.empty()) throw std::invalid_argument("region needs at least one constraint");
    for (const auto& p : constraints) {
      if (p.nvars() != arity) throw std::invalid_argument("constraint variable count differs from arity");
      if (p.is_zero()) throw std::invalid_argument("zero polynomial constraint");
      if (p.degree() > Polynomial::kMaxDegree) throw std::invalid_argument("constraint degree above cap");
    }
    return Relation(arity, {Atom(ImplicitRegion{std::move(constraints)})});
  }

  static Relation region(std::size_t arity, const std::vector<std::string>& constraints) {
    std::vector<Polynomial> ps;
    for (const auto& c : constraints) ps.push_back(parse_constraint(c, arity));
    return region(arity, std::move(ps));
  }

  /// Flattened union; empty members are dropped unless every member is empty.
  static Relation unite(const std::vector<Relation>& members) {
    if (members.empty()) throw std::invalid_argument("union of an empty sequence");
    std::size_t arity = members.front().arity();
    std::vector<Atom> atoms;
    for (const auto& m : members) {
      if (m.arity() != arity) {
        throw std::invalid_argument("union arity mismatch (" + std::to_string(arity) + " vs " +
                                    std::to_string(m.arity()) + ")");
      }
      for (const auto& a : m.atoms()) {
        if (auto* ps = std::get_if<PointSet>(&a); ps && ps->points.empty()) continue;
        atoms.push_back(a);
      }
    }
    if (atoms.empty()) return empty(arity);
    return Relation(arity, std::move(atoms));
  }

  std::size_t arity() const { return arity_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  RelationKind kind() const {
    if (atoms_.size() > 1) return RelationKind::Union;
    if (std::holds_alternative<PointSet>(atoms_[0])) return RelationKind::Points;
    if (std::holds_alternative<SegmentSet>(atoms_[0])) return RelationKind::Segments;
    return RelationKind::Region;
  }

  bool is_empty() const {
    if (atoms_.size() != 1) return false;
    auto* ps = std::get_if<PointSet>(&atoms_[0]);
    return ps && ps->points.empty();
  }

  bool is_finite() const {
    return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return std::holds_alternative<PointSet>(a); });
  }

  /// All points of a finite relation, sorted and distinct.
  std::vector<Point> finite_points() const {
    if (!is_finite()) throw std::invalid_argument("relation is not finite");
    std::vector<Point> out;
    for (const auto& a : atoms_) {
      const auto& ps = std::get<PointSet>(a).points;
      out.insert(out.end(), ps.begin(), ps.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Relation& a, const Relation& b) { return a.arity_ == b.arity_ && a.atoms_ == b.atoms_; }

 private:
  Relation(std::size_t arity, std::vector<Atom> atoms) : arity_(arity), atoms_(std::move(atoms)) {}

  static void check_arity(std::size_t arity) {
    if (arity < 2) throw std::invalid_argument("relation arity must be at least 2, got " + std::to_string(arity));
  }

  static void check_point(const Point& p, std::size_t arity) {
    if (p.size() != arity) {
      throw std::invalid_argument("point " + to_literal(p) + " has arity " + std::to_string(p.size()) + ", expected " +
                                  std::to_string(arity));
    }
    for (const auto& x : p) {
      if (x < 0 || x > 1) throw std::invalid_argument("coordinate outside [0,1] in " + to_literal(p));
    }
  }

  std::size_t arity_ = 2;
  std::vector<Atom> atoms_;
};

inline Relation invert(const Relation& g) {
  const std::size_t n = g.arity();
  std::vector<Relation> parts;
  for (const auto& atom : g.atoms()) {
    if (const auto* ps = std::get_if<PointSet>(&atom)) {
      std::vector<Point> pts;
      for (const auto& p : ps->points) pts.emplace_back(p.rbegin(), p.rend());
      parts.push_back(Relation::points(n, std::move(pts)));
    } else if (const auto* ss = std::get_if<SegmentSet>(&atom)) {
      std::vector<Segment> segs;
      for (const auto& s : ss->segments) segs.push_back({Point(s.a.rbegin(), s.a.rend()), Point(s.b.rbegin(), s.b.rend())});
      parts.push_back(Relation::segments(std::move(segs)));
    } else {
      const auto& reg = std::get<ImplicitRegion>(atom);
      std::vector<std::size_t> perm(n);
      for (std::size_t k = 0; k < n; ++k) perm[k] = n - 1 - k;
      std::vector<Polynomial> cs;
      for (const auto& p : reg.constraints) cs.push_back(p.permuted(perm));
      parts.push_back(Relation::region(n, std::move(cs)));
    }
  }
  return Relation::unite(parts);
}

namespace detail {

inline void require_arity(const Relation& g, std::size_t arity, const char* op) {
  if (g.arity() != arity) {
    throw std::invalid_argument(std::string(op) + ": arity mismatch (relation " + std::to_string(g.arity()) +
                                ", argument " + std::to_string(arity) + ")");
  }
}

/// Parameter range {t in [0,1] : a_k + t (b_k - a_k) in side}.
inline Interval segment_t_range(const Segment& s, std::size_t k, const Interval& side) {
  static const Interval unit = Interval::unit();
  Scalar d = s.b[k] - s.a[k];
  if (d == 0) return side.contains(s.a[k]) ? unit : Interval();
  Scalar lo = (side.lo() - s.a[k]) / d;
  Scalar hi = (side.hi() - s.a[k]) / d;
  if (d > 0) return intersect(Interval(lo, hi, side.lo_closed(), side.hi_closed()), unit);
  return intersect(Interval(hi, lo, side.hi_closed(), side.lo_closed()), unit);
}

/// Image of a parameter range under coordinate k of the segment.
inline Interval segment_coord_image(const Segment& s, std::size_t k, const Interval& t) {
  if (t.empty()) return {};
  Scalar d = s.b[k] - s.a[k];
  if (d == 0) return Interval::point(s.a[k]);
  Scalar lo = s.a[k] + t.lo() * d;
  Scalar hi = s.a[k] + t.hi() * d;
  if (d > 0) return {lo, hi, t.lo_closed(), t.hi_closed()};
  return {hi, lo, t.hi_closed(), t.lo_closed()};
}

inline bool segment_contains(const Segment& s, const Point& x) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (segment_t_range(s, k, Interval::point(x[k])).empty()) return false;
  }
  // Each coordinate admits a parameter; they must agree on a common one.
  Interval t = Interval::unit();
  for (std::size_t k = 0; k < x.size(); ++k) t = intersect(t, segment_t_range(s, k, Interval::point(x[k])));
  return !t.empty();
}

inline bool region_contains(const ImplicitRegion& r, const Point& x) {
  for (const auto& x_k : x) {
    if (x_k < 0 || x_k > 1) return false;
  }
  return std::all_of(r.constraints.begin(), r.constraints.end(), [&](const Polynomial& p) { return p.eval(x) <= 0; });
}

/// True when p > 0 everywhere on the box (sides may be half-open).
inline bool certified_positive(const Polynomial& p, const std::vector<Interval>& sides) {
  if (p.range(sides).first > 0) return true;
  // Monotone in every variable: the infimum sits at a computable corner.
  Point corner(sides.size());
  std::vector<bool> strict_open(sides.size(), false);
  for (std::size_t k = 0; k < sides.size(); ++k) {
    corner[k] = sides[k].lo();
    if (!p.involves(k) || sides[k].is_point()) continue;
    auto [dlo, dhi] = p.derivative(k).range(sides);
    if (dlo >= 0) {
      corner[k] = sides[k].lo();
      strict_open[k] = dlo > 0 && !sides[k].lo_closed();
    } else if (dhi <= 0) {
      corner[k] = sides[k].hi();
      strict_open[k] = dhi < 0 && !sides[k].hi_closed();
    } else {
      return false;
    }
  }
  Scalar v = p.eval(corner);
  if (v > 0) return true;
  if (v < 0) return false;
  return std::any_of(strict_open.begin(), strict_open.end(), [](bool b) { return b; });
}

/// Searches {closed lo, closed hi, midpoint}^arity for a point satisfying every constraint.
inline std::optional<Point> region_witness(const ImplicitRegion& r, const std::vector<Interval>& sides) {
  std::vector<std::vector<Scalar>> cand(sides.size());
  for (std::size_t k = 0; k < sides.size(); ++k) {
    const auto& s = sides[k];
    if (s.empty()) return std::nullopt;
    if (s.lo_closed()) cand[k].push_back(s.lo());
    if (s.hi_closed() && s.hi() != s.lo()) cand[k].push_back(s.hi());
    if (!s.is_point()) cand[k].push_back(s.interior_point());
  }
  std::vector<std::size_t> idx(sides.size(), 0);
  Point x(sides.size());
  for (;;) {
    for (std::size_t k = 0; k < sides.size(); ++k) x[k] = cand[k][idx[k]];
    if (region_contains(r, x)) return x;
    std::size_t k = 0;
    while (k < sides.size() && ++idx[k] == cand[k].size()) idx[k++] = 0;
    if (k == sides.size()) return std::nullopt;
  }
}

inline Feasibility region_box(const ImplicitRegion& r, const std::vector<Interval>& sides, int budget) {
  for (const auto& s : sides) {
    if (s.empty()) return Feasibility::No;
  }
  for (const auto& p : r.constraints) {
    if (certified_positive(p, sides)) return Feasibility::No;
  }
  if (region_witness(r, sides)) return Feasibility::Yes;
  std::size_t widest = sides.size();
  Scalar best(0);
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (sides[k].width() > best) best = sides[k].width(), widest = k;
  }
  // A single point was tested exactly by the witness search.
  if (widest == sides.size()) return Feasibility::No;
  if (budget <= 0) return Feasibility::Maybe;
  auto [h1, h2] = sides[widest].bisect();
  auto left = sides, right = sides;
  left[widest] = h1;
  right[widest] = h2;
  Feasibility a = region_box(r, left, budget - 1);
  if (a == Feasibility::Yes) return a;
  Feasibility b = region_box(r, right, budget - 1);
  if (b == Feasibility::Yes) return b;
  return (a == Feasibility::No && b == Feasibility::No) ? Feasibility::No : Feasibility::Maybe;
}

inline const Interval& unit_interval() {
  static const Interval u = Interval::unit();
  return u;
}

}  // namespace detail

inline bool member(const Relation& g, const Point& x) {
  detail::require_arity(g, x.size(), "member");
  for (const auto& atom : g.atoms()) {
    if (const auto* ps = std::get_if<PointSet>(&atom)) {
      if (std::binary_search(ps->points.begin(), ps->points.end(), x)) return true;
    } else if (const auto* ss = std::get_if<SegmentSet>(&atom)) {
      for (const auto& s : ss->segments) {
        if (detail::segment_contains(s, x)) return true;
      }
    } else if (detail::region_contains(std::get<ImplicitRegion>(atom), x)) {
      return true;
    }
  }
  return false;
}

inline Feasibility box_feasible(const Relation& g, const Box& b, int budget = 12) {
  detail::require_arity(g, b.arity(), "box_feasible");
  if (b.empty()) return Feasibility::No;
  bool maybe = false;
  for (const auto& atom : g.atoms()) {
    if (const auto* ps = std::get_if<PointSet>(&atom)) {
      for (const auto& p : ps->points) {
        if (b.contains(p)) return Feasibility::Yes;
      }
    } else if (const auto* ss = std::get_if<SegmentSet>(&atom)) {
      for (const auto& s : ss->segments) {
        Interval t = Interval::unit();
        for (std::size_t k = 0; k < 2 && !t.empty(); ++k) t = intersect(t, detail::segment_t_range(s, k, b.sides[k]));
        if (!t.empty()) return Feasibility::Yes;
      }
    } else {
      std::vector<Interval> sides;
      for (const auto& s : b.sides) sides.push_back(intersect(s, detail::unit_interval()));
      Feasibility f = detail::region_box(std::get<ImplicitRegion>(atom), sides, budget);
      if (f == Feasibility::Yes) return f;
      if (f == Feasibility::Maybe) maybe = true;
    }
  }
  return maybe ? Feasibility::Maybe : Feasibility::No;
}

/// Inner and outer enclosure of a set; exact when both agree.
struct Enclosure {
  IntervalSet inner;
  IntervalSet outer;

  static Enclosure exact(IntervalSet s) { return {s, s}; }
  bool is_exact() const { return inner == outer; }
  bool empty() const { return outer.empty(); }

  friend Enclosure unite(const Enclosure& a, const Enclosure& b) {
    return {unite(a.inner, b.inner), unite(a.outer, b.outer)};
  }
};

namespace detail {

struct Extremum {
  Scalar value;
  bool attained;
};

/// sup (want_max) or inf of univariate r over one interval, via certified monotone pieces.
inline std::optional<Extremum> piece_extremum(const Polynomial& r, std::size_t var, const Interval& piece,
                                              bool want_max, int depth) {
  if (piece.empty()) return std::nullopt;
  if (piece.is_point()) return Extremum{r.eval1(var, piece.lo()), true};
  Polynomial d = r.derivative(var);
  if (d.is_zero()) return Extremum{r.eval1(var, piece.lo()), true};
  std::vector<Interval> sides(r.nvars(), Interval::point(Scalar(0)));
  sides[var] = Interval::closed(piece.lo(), piece.hi());
  auto [dlo, dhi] = d.range(sides);
  // A nonconstant polynomial attains its extreme value only at the monotone end.
  if (dlo >= 0) {
    return want_max ? Extremum{r.eval1(var, piece.hi()), piece.hi_closed()}
                    : Extremum{r.eval1(var, piece.lo()), piece.lo_closed()};
  }
  if (dhi <= 0) {
    return want_max ? Extremum{r.eval1(var, piece.lo()), piece.lo_closed()}
                    : Extremum{r.eval1(var, piece.hi()), piece.hi_closed()};
  }
  if (depth <= 0) return std::nullopt;
  auto [a, b] = piece.bisect();
  auto ea = piece_extremum(r, var, a, want_max, depth - 1);
  if (!ea) return std::nullopt;
  auto eb = piece_extremum(r, var, b, want_max, depth - 1);
  if (!eb) return std::nullopt;
  if (ea->value == eb->value) return Extremum{ea->value, ea->attained || eb->attained};
  bool first = want_max ? ea->value > eb->value : ea->value < eb->value;
  return first ? ea : eb;
}

inline std::optional<Extremum> set_extremum(const Polynomial& r, std::size_t var, const IntervalSet& s, bool want_max) {
  std::optional<Extremum> best;
  for (const auto& piece : s.parts()) {
    auto e = piece_extremum(r, var, piece, want_max, 40);
    if (!e) return std::nullopt;
    if (!best || (want_max ? e->value > best->value : e->value < best->value)) {
      best = e;
    } else if (e->value == best->value) {
      best->attained = best->attained || e->attained;
    }
  }
  return best;
}

/// Closed half-line {x : c x + q <= 0} for constant q, restricted to [-1, 2].
inline Interval linear_half_line(const Scalar& c, const Scalar& q) {
  Scalar root = -q / c;
  return c > 0 ? Interval(Scalar(-1), root, true, true) : Interval(root, Scalar(2), true, true);
}

/// Exact image for arity-2 regions whose constraints are each linear in one variable, with at most
/// one constraint coupling x and y, of the form c*y + q(x) <= 0.
inline std::optional<IntervalSet> region_image_exact(const ImplicitRegion& r, const IntervalSet& s,
                                                     const Interval& target) {
  IntervalSet xs = intersect(s, unit_interval());
  IntervalSet ys(intersect(target, unit_interval()));
  const Polynomial* mixed = nullptr;
  for (const auto& p : r.constraints) {
    bool ix = p.involves(0), iy = p.involves(1);
    if (!ix && !iy) {
      if (p.constant_term() > 0) return IntervalSet();
    } else if (ix != iy) {
      std::size_t v = ix ? 0 : 1;
      auto split = p.linear_split(v);
      if (!split) return std::nullopt;
      Interval h = linear_half_line(split->first, split->second.constant_term());
      if (ix) {
        xs = intersect(xs, h);
      } else {
        ys = intersect(ys, h);
      }
    } else {
      if (mixed) return std::nullopt;
      mixed = &p;
    }
  }
  if (xs.empty() || ys.empty()) return IntervalSet();
  if (!mixed) return ys;
  auto split = mixed->linear_split(1);
  if (!split) return std::nullopt;
  const Scalar& c = split->first;
  Polynomial rx = split->second.scaled(Scalar(-1 / c));  // y <= rx (c > 0) or y >= rx (c < 0)
  auto e = set_extremum(rx, 0, xs, c > 0);
  if (!e) return std::nullopt;
  Interval h = c > 0 ? Interval(Scalar(-1), e->value, true, e->attained) : Interval(e->value, Scalar(2), e->attained, true);
  return intersect(ys, h);
}

/// Enclosure of {y in target : exists x0 in s, (x0, middle..., y) in region} by subdividing y.
inline Enclosure region_image_paving(const ImplicitRegion& r, const IntervalSet& s, const std::vector<Interval>& middle,
                                     const Interval& target, int y_depth, int box_budget) {
  std::vector<Interval> inner, outer;
  IntervalSet xs = intersect(s, unit_interval());
  std::vector<Interval> mid;
  for (const auto& m : middle) mid.push_back(intersect(m, unit_interval()));

  auto sides_for = [&](const Interval& x, const Interval& y) {
    std::vector<Interval> sides{x};
    sides.insert(sides.end(), mid.begin(), mid.end());
    sides.push_back(y);
    return sides;
  };

  // Every point of the closure of some x-piece times y is feasible.
  auto fully_inside = [&](const Interval& y) {
    std::vector<Interval> work(xs.parts().begin(), xs.parts().end());
    for (int round = 0; round < 4 && !work.empty(); ++round) {
      std::vector<Interval> next;
      for (const auto& x : work) {
        auto sides = sides_for(x, y);
        bool all = std::all_of(r.constraints.begin(), r.constraints.end(),
                               [&](const Polynomial& p) { return p.range(sides).second <= 0; });
        if (all) return true;
        if (!x.is_point()) {
          auto [a, b] = x.bisect();
          next.push_back(a);
          next.push_back(b);
        }
      }
      work = std::move(next);
    }
    return false;
  };

  auto recurse = [&](auto&& self, const Interval& y, int depth) -> void {
    if (y.empty()) return;
    bool any = false;
    for (const auto& x : xs.parts()) {
      if (region_box(r, sides_for(x, y), box_budget) != Feasibility::No) {
        any = true;
        break;
      }
    }
    if (!any) return;
    if (fully_inside(y)) {
      inner.push_back(y);
      outer.push_back(y);
      return;
    }
    if (depth <= 0 || y.is_point()) {
      outer.push_back(y);
      if (y.is_point()) {
        for (const auto& x : xs.parts()) {
          if (region_box(r, sides_for(x, y), box_budget) == Feasibility::Yes) {
            inner.push_back(y);
            break;
          }
        }
      }
      return;
    }
    auto [a, b] = y.bisect();
    self(self, a, depth - 1);
    self(self, b, depth - 1);
  };
  if (!xs.empty()) recurse(recurse, intersect(target, unit_interval()), y_depth);
  return {IntervalSet::normalize(std::move(inner)), IntervalSet::normalize(std::move(outer))};
}

}  // namespace detail

struct ImageOptions {
  int y_depth = 6;
  int box_budget = 8;
};

/// Enclosure of {y in target : exists x0 in s, (x0, m1, ..., y) in the atom with m_k in middle[k]}.
inline Enclosure atom_image(const Atom& atom, const IntervalSet& s, const std::vector<Interval>& middle,
                            const Interval& target, const ImageOptions& opt = {}) {
  if (target.empty() || s.empty()) return {};
  if (const auto* ps = std::get_if<PointSet>(&atom)) {
    std::vector<Interval> ys;
    for (const auto& p : ps->points) {
      if (!s.contains(p.front()) || !target.contains(p.back())) continue;
      bool ok = true;
      for (std::size_t k = 0; k < middle.size() && ok; ++k) ok = middle[k].contains(p[k + 1]);
      if (ok) ys.push_back(Interval::point(p.back()));
    }
    return Enclosure::exact(IntervalSet::normalize(std::move(ys)));
  }
  if (const auto* ss = std::get_if<SegmentSet>(&atom)) {
    std::vector<Interval> ys;
    for (const auto& seg : ss->segments) {
      Interval ty = detail::segment_t_range(seg, 1, target);
      if (ty.empty()) continue;
      for (const auto& piece : s.parts()) {
        Interval t = intersect(ty, detail::segment_t_range(seg, 0, piece));
        if (!t.empty()) ys.push_back(detail::segment_coord_image(seg, 1, t));
      }
    }
    return Enclosure::exact(IntervalSet::normalize(std::move(ys)));
  }
  const auto& reg = std::get<ImplicitRegion>(atom);
  if (middle.empty()) {
    if (auto ex = detail::region_image_exact(reg, s, target)) return Enclosure::exact(*ex);
  }
  return detail::region_image_paving(reg, s, middle, target, opt.y_depth, opt.box_budget);
}

/// Enclosure of {y in target : exists x0 in s, (x0, m1, ..., y) in G with m_k in middle[k]}.
/// Exact for points, segments and regions handled by the monotone path.
inline Enclosure image(const Relation& g, const IntervalSet& s, const std::vector<Interval>& middle,
                       const Interval& target, const ImageOptions& opt = {}) {
  detail::require_arity(g, middle.size() + 2, "image");
  Enclosure out;
  for (const auto& atom : g.atoms()) out = unite(out, atom_image(atom, s, middle, target, opt));
  return out;
}

inline Enclosure image(const Relation& g, const IntervalSet& s, const Interval& target, const ImageOptions& opt = {}) {
  return image(g, s, {}, target, opt);
}

}  // namespace mahavier
