#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mahavier/interval.hpp"
#include "mahavier/scalar.hpp"

namespace mahavier {

enum class GridMode { Partition, Overlap };

inline std::string to_string(GridMode m) { return m == GridMode::Partition ? "partition" : "overlap"; }

/// Cover of [0,1] by n cells, indexed 0..n-1 (cell k is the k+1-th cell).
///
/// Partition: [k/n, (k+1)/n) with the last cell closed at 1.
/// Overlap:   (k/n - eps, (k+1)/n + eps) clipped to [0,1], with 0 < eps < 1/(16n).
class GridSpec {
 public:
  static GridSpec partition(int n) { return GridSpec(n, GridMode::Partition, Scalar(0)); }

  static GridSpec overlap(int n) { return GridSpec(n, GridMode::Overlap, rat(1, 32L * n)); }
  static GridSpec overlap(int n, const Scalar& eps) { return GridSpec(n, GridMode::Overlap, eps); }

  GridSpec(int n, GridMode mode, Scalar eps) : n_(n), mode_(mode), eps_(std::move(eps)) {
    if (n < 1) throw std::invalid_argument("grid needs at least one cell, got " + std::to_string(n));
    if (mode_ == GridMode::Overlap) {
      if (eps_ <= 0 || eps_ >= rat(1, 16L * n)) {
        throw std::invalid_argument("overlap eps must lie in (0, 1/(16n)), got " + to_literal(eps_));
      }
    } else {
      eps_ = 0;
    }
    cells_.reserve(n);
    for (int k = 0; k < n; ++k) {
      Scalar lo = rat(k, n), hi = rat(k + 1, n);
      if (mode_ == GridMode::Partition) {
        cells_.emplace_back(lo, hi, true, k == n - 1);
      } else {
        // Clipping to [0,1] closes the boundary ends.
        bool at0 = k == 0, at1 = k == n - 1;
        cells_.emplace_back(at0 ? Scalar(0) : Scalar(lo - eps_), at1 ? Scalar(1) : Scalar(hi + eps_), at0, at1);
      }
    }
  }

  int n() const { return n_; }
  GridMode mode() const { return mode_; }
  const Scalar& eps() const { return eps_; }
  const Interval& cell(int k) const { return cells_.at(k); }
  const std::vector<Interval>& cells() const { return cells_; }

  /// Indices of the cells containing x, ascending. One index in Partition mode, one or two in Overlap.
  std::vector<int> cells_containing(const Scalar& x) const {
    std::vector<int> out;
    if (x < 0 || x > 1) return out;
    Scalar t = x * n_;
    BigInt guess = t.get_num() / t.get_den();  // floor for x >= 0
    long g = guess.get_si();
    for (long k = g - 1; k <= g + 1; ++k) {
      if (k >= 0 && k < n_ && cells_[k].contains(x)) out.push_back(static_cast<int>(k));
    }
    return out;
  }

  std::string describe() const {
    return to_string(mode_) + " n=" + std::to_string(n_) + (mode_ == GridMode::Overlap ? " eps=" + to_literal(eps_) : "");
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.n_ == b.n_ && a.mode_ == b.mode_ && a.eps_ == b.eps_;
  }

 private:
  int n_;
  GridMode mode_;
  Scalar eps_;
  std::vector<Interval> cells_;
};

}  // namespace mahavier
