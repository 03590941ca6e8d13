#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mahavier/scalar.hpp"

namespace mahavier {

/// Interval of the real line with independently open/closed endpoints.
///
/// Invariant: either lo < hi, or lo == hi with both ends closed (a point).
/// Every other configuration is normalized to the canonical empty interval.
class Interval {
 public:
  Interval() = default;  // empty

  Interval(Scalar lo, Scalar hi, bool lo_closed = true, bool hi_closed = true)
      : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    canonicalize();
  }

  static Interval closed(Scalar lo, Scalar hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval open(Scalar lo, Scalar hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval point(const Scalar& x) { return {x, x, true, true}; }
  static Interval unit() { return closed(Scalar(0), Scalar(1)); }

  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool empty() const { return empty_; }
  bool is_point() const { return !empty_ && lo_ == hi_; }

  bool contains(const Scalar& x) const {
    if (empty_) return false;
    if (x < lo_ || (x == lo_ && !lo_closed_)) return false;
    if (x > hi_ || (x == hi_ && !hi_closed_)) return false;
    return true;
  }

  Scalar width() const { return empty_ ? Scalar(0) : Scalar(hi_ - lo_); }

  /// Rational point strictly inside (or the point itself for degenerate intervals).
  Scalar interior_point() const { return midpoint(lo_, hi_); }

  friend Interval intersect(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return {};
    Scalar lo;
    bool lo_closed;
    if (a.lo_ > b.lo_) {
      lo = a.lo_, lo_closed = a.lo_closed_;
    } else if (b.lo_ > a.lo_) {
      lo = b.lo_, lo_closed = b.lo_closed_;
    } else {
      lo = a.lo_, lo_closed = a.lo_closed_ && b.lo_closed_;
    }
    Scalar hi;
    bool hi_closed;
    if (a.hi_ < b.hi_) {
      hi = a.hi_, hi_closed = a.hi_closed_;
    } else if (b.hi_ < a.hi_) {
      hi = b.hi_, hi_closed = b.hi_closed_;
    } else {
      hi = a.hi_, hi_closed = a.hi_closed_ && b.hi_closed_;
    }
    return {std::move(lo), std::move(hi), lo_closed, hi_closed};
  }

  bool intersects(const Interval& other) const { return !intersect(*this, other).empty(); }

  /// Splits at the midpoint into [lo, mid) and [mid, hi] (openness of the outer ends kept).
  std::pair<Interval, Interval> bisect() const {
    Scalar mid = midpoint(lo_, hi_);
    return {Interval(lo_, mid, lo_closed_, false), Interval(mid, hi_, true, hi_closed_)};
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ && a.hi_closed_ == b.hi_closed_;
  }

  /// Total order used for canonical containers: by lower end, closed-before-open, then upper end.
  friend bool operator<(const Interval& a, const Interval& b) {
    if (a.empty_ != b.empty_) return a.empty_;
    if (a.empty_) return false;
    if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
    if (a.lo_closed_ != b.lo_closed_) return a.lo_closed_;
    if (a.hi_ != b.hi_) return a.hi_ < b.hi_;
    return !a.hi_closed_ && b.hi_closed_;
  }

  std::string str() const {
    if (empty_) return "{}";
    if (is_point()) return "{" + to_literal(lo_) + "}";
    return std::string(lo_closed_ ? "[" : "(") + to_literal(lo_) + "," + to_literal(hi_) + (hi_closed_ ? "]" : ")");
  }

 private:
  void canonicalize() {
    if (lo_ > hi_ || (lo_ == hi_ && !(lo_closed_ && hi_closed_))) {
      lo_ = 0;
      hi_ = 0;
      lo_closed_ = hi_closed_ = false;
      empty_ = true;
    } else {
      empty_ = false;
    }
  }

  Scalar lo_{0};
  Scalar hi_{0};
  bool lo_closed_ = false;
  bool hi_closed_ = false;
  bool empty_ = true;
};

/// Finite union of intervals in normal form: sorted, pairwise disjoint, and no two
/// parts can be merged. The normal form of a set is unique.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(const Interval& i) {
    if (!i.empty()) parts_.push_back(i);
  }

  static IntervalSet normalize(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& i) { return i.empty(); });
    std::sort(parts.begin(), parts.end());
    IntervalSet out;
    for (auto& p : parts) {
      if (out.parts_.empty()) {
        out.parts_.push_back(std::move(p));
        continue;
      }
      Interval& cur = out.parts_.back();
      bool touches = p.lo() < cur.hi() || (p.lo() == cur.hi() && (cur.hi_closed() || p.lo_closed()));
      if (!touches) {
        out.parts_.push_back(std::move(p));
        continue;
      }
      Scalar lo = cur.lo();
      bool lo_closed = cur.lo_closed() || (p.lo() == cur.lo() && p.lo_closed());
      if (p.hi() > cur.hi()) {
        cur = Interval(lo, p.hi(), lo_closed, p.hi_closed());
      } else if (p.hi() == cur.hi()) {
        cur = Interval(lo, cur.hi(), lo_closed, cur.hi_closed() || p.hi_closed());
      } else {
        cur = Interval(lo, cur.hi(), lo_closed, cur.hi_closed());
      }
    }
    return out;
  }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  bool contains(const Scalar& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
  }

  friend IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.parts_.size() && j < b.parts_.size()) {
      Interval c = intersect(a.parts_[i], b.parts_[j]);
      if (!c.empty()) out.push_back(std::move(c));
      // Advance whichever part ends first.
      const Interval& x = a.parts_[i];
      const Interval& y = b.parts_[j];
      if (x.hi() < y.hi() || (x.hi() == y.hi() && !x.hi_closed())) {
        ++i;
      } else {
        ++j;
      }
    }
    return normalize(std::move(out));
  }

  friend IntervalSet intersect(const IntervalSet& a, const Interval& b) { return intersect(a, IntervalSet(b)); }

  friend IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all = a.parts_;
    all.insert(all.end(), b.parts_.begin(), b.parts_.end());
    return normalize(std::move(all));
  }

  bool intersects(const Interval& i) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.intersects(i); });
  }

  /// Smallest interval containing the set (empty for the empty set).
  Interval hull() const {
    if (parts_.empty()) return {};
    return {parts_.front().lo(), parts_.back().hi(), parts_.front().lo_closed(), parts_.back().hi_closed()};
  }

  Scalar measure() const {
    Scalar total(0);
    for (const auto& p : parts_) total += p.width();
    return total;
  }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const IntervalSet& a, const IntervalSet& b) {
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
  }

  std::string str() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += " u ";
      out += parts_[i].str();
    }
    return out;
  }

 private:
  std::vector<Interval> parts_;
};

/// Axis-aligned box, one side per coordinate.
struct Box {
  std::vector<Interval> sides;

  std::size_t arity() const { return sides.size(); }
  bool empty() const {
    return std::any_of(sides.begin(), sides.end(), [](const Interval& i) { return i.empty(); });
  }
  bool contains(const Point& p) const {
    if (p.size() != sides.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!sides[k].contains(p[k])) return false;
    }
    return true;
  }
};

inline bool box_intersects(const Box& a, const Box& b) {
  if (a.arity() != b.arity()) {
    throw std::invalid_argument("box_intersects: arity mismatch (" + std::to_string(a.arity()) + " vs " +
                                std::to_string(b.arity()) + ")");
  }
  for (std::size_t k = 0; k < a.arity(); ++k) {
    if (!a.sides[k].intersects(b.sides[k])) return false;
  }
  return true;
}

}  // namespace mahavier
