#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mahavier/counting.hpp"
#include "mahavier/entropy.hpp"
#include "mahavier/fixtures.hpp"
#include "mahavier/tolerances.hpp"

namespace mahavier {

/// One line of the regression table: a catalog fixture checked against its closed form.
struct SuiteRow {
  std::string fixture;   // name[:params]
  std::string method;    // how the measured value was obtained
  std::string expected;  // closed-form label
  double measured = 0;
  std::string detail;
  bool pass = false;
};

struct SuiteOptions {
  CountOptions count;
};

namespace detail {

inline std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline SuiteRow transfer_row(const std::string& spec) {
  Fixture f = make_fixture(spec);
  SuiteRow r{spec, "transfer", f.expect.label, 0, "", false};
  EntropyEstimate e = entropy_transfer(f.relation);
  r.measured = e.value;
  if (f.expect.kind == Expectation::Kind::AtLeast) {
    r.pass = e.value >= f.expect.value * (1 - tol::kTransferRel);
    r.detail = ">= " + fmt(f.expect.value, 9);
  } else {
    r.pass = std::abs(e.value - f.expect.value) <= tol::kTransferRel * std::max(1.0, std::abs(f.expect.value));
    r.detail = "target " + fmt(f.expect.value, 12);
  }
  return r;
}

inline SuiteRow slope_row(const std::string& spec, double tolerance, const SuiteOptions& o) {
  Fixture f = make_fixture(spec);
  SuiteRow r{spec, "slope n=8 m=24", f.expect.label, 0, "", false};
  CountSeries s = count_series(f.relation, GridSpec::partition(8), 24, o.count);
  GridEstimate g = grid_estimate(s);
  r.measured = g.slope;
  r.pass = s.exact() && std::abs(g.slope - f.expect.value) <= tolerance;
  r.detail = "|err| <= " + fmt(tolerance, 2) + (s.exact() ? "" : ", inexact series");
  return r;
}

inline SuiteRow zero_row(const std::string& spec, int n, int m, double cap, const SuiteOptions& o) {
  Fixture f = make_fixture(spec);
  SuiteRow r{spec, "fekete n=" + std::to_string(n) + " m=" + std::to_string(m), f.expect.label, 0, "", false};
  CountSeries s = count_series(f.relation, GridSpec::partition(n), m, o.count);
  GridEstimate g = grid_estimate(s);
  r.measured = g.empty ? 0 : g.fekete;
  r.pass = !s.budget_hit() && r.measured <= cap;
  r.detail = g.empty ? "empty product" : "inf a_m/m <= " + fmt(cap, 2);
  return r;
}

inline SuiteRow divergent_row(const std::string& spec, double floor, const SuiteOptions& o) {
  Fixture f = make_fixture(spec);
  SuiteRow r{spec, "slope growth n=2..16 m=16", f.expect.label, 0, "", false};
  EntropyEstimate e = entropy_estimate(f.relation, dyadic_range(2, 16), 16, EntropyMethod::Slope, o.count);
  double worst = e.doubling_growth.empty() ? 0 : *std::min_element(e.doubling_growth.begin(), e.doubling_growth.end());
  r.measured = worst;
  r.pass = e.divergent && worst >= floor;
  r.detail = "min growth per doubling >= " + fmt(floor, 4);
  return r;
}

/// Divergence of triangle-plus-point via embedded copies of L_n: each copy lies inside the relation,
/// so ent is at least the copy's exact entropy, which grows without bound in n.
inline SuiteRow embedded_row(const std::string& spec) {
  Fixture f = make_fixture(spec);
  SuiteRow r{spec, "embedded l-n n=1..64", f.expect.label, 0, "", true};
  Scalar p = rat(1, 4), q = rat(3, 4);
  for (const auto& atom : f.relation.atoms()) {
    if (const auto* ps = std::get_if<PointSet>(&atom)) p = ps->points.front()[0], q = ps->points.front()[1];
  }
  double prev = -1;
  for (int n : dyadic_range(1, 64)) {
    Relation l = l_n_embedded(n, p, q);
    for (const auto& x : l.finite_points()) r.pass = r.pass && member(f.relation, x);
    double v = entropy_transfer(l).value;
    r.pass = r.pass && v >= std::log(n + 1.0) / 3 * (1 - tol::kTransferRel) && v > prev;
    prev = v;
  }
  r.measured = prev;
  r.detail = "strictly increasing lower bounds >= ln(n+1)/3";
  return r;
}

}  // namespace detail

/// Runs every catalog fixture against its closed form. Deterministic; row order is fixed.
inline std::vector<SuiteRow> run_paper_suite(const SuiteOptions& o = {}) {
  std::vector<SuiteRow> rows;
  for (const char* s : {"four-corners", "maribor-core", "g-n:4", "g-a:3", "g-a:3,paper", "l-n:8"}) {
    rows.push_back(detail::transfer_row(s));
  }
  rows.push_back(detail::slope_row("maribor-segments", tol::kMariborSlope, o));
  rows.push_back(detail::slope_row("tent-inverse", tol::kBridgeSlope, o));
  rows.push_back(detail::slope_row("kt-diamond", tol::kBridgeSlope, o));
  rows.push_back(detail::slope_row("diagonal-plus-two-points", tol::kBridgeSlope, o));
  rows.push_back(detail::slope_row("k-horizontal-lines:3", tol::kLinesSlope, o));
  rows.push_back(detail::zero_row("triangle", 4, 200, tol::kTriangleFeketeMax, o));
  for (const char* s : {"bl", "parabola", "ingram-2.2", "ingram-2.14", "diagonal", "empty-rect"}) {
    rows.push_back(detail::zero_row(s, 4, 100, tol::kZeroFeketeMax, o));
  }
  rows.push_back(detail::divergent_row("square", tol::square_growth_floor(), o));
  rows.push_back(detail::divergent_row("ingram-2.3", tol::ingram_growth_floor(), o));
  rows.push_back(detail::embedded_row("triangle-plus-point"));
  return rows;
}

}  // namespace mahavier
