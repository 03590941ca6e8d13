#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mahavier/relation.hpp"
#include "mahavier/scalar.hpp"

namespace mahavier {

/// Which point set "g-a" builds. Figure: bottom row {k/a : 0..a}, left column {k/a : 1..a}.
/// Alternate: same shape with denominators a-1.
enum class GaReading { Figure, Paper };

struct Expectation {
  enum class Kind { Value, AtLeast, Zero, Divergent };
  Kind kind = Kind::Value;
  double value = 0;  // nats; lower bound for AtLeast
  std::string label;
};

inline std::string to_string(Expectation::Kind k) {
  switch (k) {
    case Expectation::Kind::Value: return "value";
    case Expectation::Kind::AtLeast: return "at-least";
    case Expectation::Kind::Zero: return "zero";
    default: return "divergent";
  }
}

struct Fixture {
  std::string name;    // catalog name
  std::string params;  // canonical parameter string, empty if none
  std::string summary;
  Relation relation;
  Expectation expect;
};

namespace detail {

inline double golden_log() { return std::log((1 + std::sqrt(5.0)) / 2); }

inline Relation segs(std::vector<std::array<long, 8>> raw) {
  // {ax_num, ax_den, ay_num, ay_den, bx_num, bx_den, by_num, by_den}
  std::vector<Segment> out;
  for (const auto& r : raw) {
    out.push_back({{rat(r[0], r[1]), rat(r[2], r[3])}, {rat(r[4], r[5]), rat(r[6], r[7])}});
  }
  return Relation::segments(std::move(out));
}

inline std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!s.empty()) out.push_back(cur);
  return out;
}

inline int int_param(const std::vector<std::string>& ps, std::size_t i, int fallback, int min_value,
                     const std::string& name) {
  if (i >= ps.size()) return fallback;
  Scalar v = parse_scalar(ps[i]);
  if (v.get_den() != 1 || v < min_value || v > 1'000'000) {
    throw ParseError(name + ": parameter '" + ps[i] + "' must be an integer >= " + std::to_string(min_value));
  }
  return static_cast<int>(v.get_num().get_si());
}

}  // namespace detail

/// Points (k/(n-1), l/(n-1)) for k, l in 0..n-1.
inline Relation g_n(int n) {
  if (n < 2) throw std::invalid_argument("g-n needs n >= 2");
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) pts.push_back({rat(k, n - 1), rat(l, n - 1)});
  }
  return Relation::points(2, pts);
}

inline Relation g_a(int a, GaReading reading) {
  if (a < 2) throw std::invalid_argument("g-a needs a >= 2");
  int d = reading == GaReading::Figure ? a : a - 1;
  std::vector<Point> pts;
  for (int k = 0; k <= d; ++k) pts.push_back({rat(k, d), Scalar(0)});
  for (int k = 1; k <= d; ++k) pts.push_back({Scalar(0), rat(k, d)});
  return Relation::points(2, pts);
}

/// {(i/n, 0)} u {(1, i/n)} u {(0, 1)}, i = 0..n.
inline Relation l_n(int n) {
  if (n < 1) throw std::invalid_argument("l-n needs n >= 1");
  std::vector<Point> pts;
  for (int i = 0; i <= n; ++i) {
    pts.push_back({rat(i, n), Scalar(0)});
    pts.push_back({Scalar(1), rat(i, n)});
  }
  pts.push_back({Scalar(0), Scalar(1)});
  return Relation::points(2, pts);
}

/// l-n rescaled into [p, q]: {(p + i d, p)} u {(q, p + i d)} u {(p, q)} with d = (q - p)/n.
inline Relation l_n_embedded(int n, const Scalar& p, const Scalar& q) {
  if (n < 1) throw std::invalid_argument("l-n needs n >= 1");
  Scalar d = (q - p) / n;
  std::vector<Point> pts;
  for (int i = 0; i <= n; ++i) {
    pts.push_back({Scalar(p + i * d), p});
    pts.push_back({q, Scalar(p + i * d)});
  }
  pts.push_back({p, q});
  return Relation::points(2, pts);
}

inline Relation triangle() { return Relation::region(2, std::vector<std::string>{"x1 - x0 <= 0"}); }

inline Relation k_horizontal_lines(int k) {
  if (k < 1) throw std::invalid_argument("k-horizontal-lines needs k >= 1");
  std::vector<Segment> out;
  for (int i = 1; i <= k; ++i) {
    Scalar c = rat(2 * i - 1, 2 * k);
    out.push_back({{Scalar(0), c}, {Scalar(1), c}});
  }
  return Relation::segments(std::move(out));
}

inline std::vector<std::string> fixture_names() {
  return {"four-corners",     "g-n",
          "triangle",         "triangle-plus-point",
          "maribor-segments", "maribor-core",
          "g-a",              "ingram-2.2",
          "ingram-2.3",       "ingram-2.14",
          "bl",               "parabola",
          "diagonal",         "diagonal-plus-two-points",
          "l-n",              "k-horizontal-lines",
          "tent-inverse",     "kt-diamond",
          "square",           "empty-rect"};
}

/// Builds a catalog fixture from "name" or "name:params" (e.g. "g-n:4", "triangle-plus-point:1/4,3/4").
inline Fixture make_fixture(const std::string& spec, GaReading reading = GaReading::Figure) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  auto ps = detail::split_params(colon == std::string::npos ? "" : spec.substr(colon + 1));
  using K = Expectation::Kind;
  Fixture f;
  f.name = name;
  auto no_params = [&] {
    if (!ps.empty()) throw ParseError("fixture '" + name + "' takes no parameters");
  };
  const double ln2 = std::log(2.0);
  if (name == "four-corners") {
    no_params();
    f.relation = Relation::points(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    f.expect = {K::Value, ln2, "ln 2"};
    f.summary = "corners of the unit square";
  } else if (name == "g-n") {
    int n = detail::int_param(ps, 0, 3, 2, name);
    f.params = std::to_string(n);
    f.relation = g_n(n);
    f.expect = {K::Value, std::log(static_cast<double>(n)), "ln " + std::to_string(n)};
    f.summary = "n x n lattice of points";
  } else if (name == "triangle") {
    no_params();
    f.relation = triangle();
    f.expect = {K::Zero, 0, "0"};
    f.summary = "region x1 <= x0";
  } else if (name == "triangle-plus-point") {
    Scalar p = ps.size() > 0 ? parse_scalar(ps[0]) : rat(1, 4);
    Scalar q = ps.size() > 1 ? parse_scalar(ps[1]) : rat(3, 4);
    if (!(0 <= p && p < q && q <= 1)) throw ParseError("triangle-plus-point needs 0 <= p < q <= 1");
    f.params = to_literal(p) + "," + to_literal(q);
    f.relation = Relation::unite({triangle(), Relation::points(2, {{p, q}})});
    f.expect = {K::Divergent, 0, "inf"};
    f.summary = "triangle with one point above the diagonal";
  } else if (name == "maribor-segments") {
    no_params();
    f.relation = detail::segs({{{0, 1, 0, 1, 1, 1, 0, 1}}, {{0, 1, 1, 1, 1, 1, 0, 1}}});
    f.expect = {K::Value, detail::golden_log(), "ln phi"};
    f.summary = "I x {0} together with the antidiagonal";
  } else if (name == "maribor-core") {
    no_params();
    f.relation = Relation::points(2, {{0, 0}, {1, 0}, {0, 1}});
    f.expect = {K::Value, detail::golden_log(), "ln phi"};
    f.summary = "three corner points carrying the golden-mean shift";
  } else if (name == "g-a") {
    int a = detail::int_param(ps, 0, 2, 2, name);
    if (ps.size() > 1) {
      if (ps[1] == "paper") {
        reading = GaReading::Paper;
      } else if (ps[1] == "figure") {
        reading = GaReading::Figure;
      } else {
        throw ParseError("g-a: reading must be 'paper' or 'figure', got '" + ps[1] + "'");
      }
    }
    f.params = std::to_string(a) + (reading == GaReading::Paper ? ",paper" : ",figure");
    f.relation = g_a(a, reading);
    double eff = reading == GaReading::Figure ? a : a - 1;
    f.expect = {K::Value, std::log((1 + std::sqrt(1 + 4 * eff)) / 2),
                reading == GaReading::Figure ? "ln((1+sqrt(1+4a))/2)" : "ln((1+sqrt(4a-3))/2)"};
    f.summary = reading == GaReading::Figure ? "bottom row and left column, spacing 1/a"
                                             : "bottom row and left column, spacing 1/(a-1)";
  } else if (name == "ingram-2.2") {
    no_params();
    f.relation = detail::segs({{{0, 1, 0, 1, 0, 1, 1, 1}}, {{0, 1, 1, 1, 1, 1, 1, 1}}});
    f.expect = {K::Zero, 0, "0"};
    f.summary = "{0} x I together with I x {1}";
  } else if (name == "ingram-2.3") {
    no_params();
    f.relation = detail::segs({{{0, 1, 0, 1, 0, 1, 1, 1}}, {{0, 1, 0, 1, 1, 1, 0, 1}}});
    f.expect = {K::Divergent, 0, "inf"};
    f.summary = "{0} x I together with I x {0}";
  } else if (name == "ingram-2.14") {
    no_params();
    f.relation = detail::segs({{{0, 1, 0, 1, 1, 1, 1, 1}}, {{1, 1, 0, 1, 1, 1, 1, 1}}});
    f.expect = {K::Zero, 0, "0"};
    f.summary = "diagonal together with {1} x I";
  } else if (name == "bl") {
    no_params();
    f.relation = detail::segs({{{0, 1, 0, 1, 1, 1, 0, 1}}, {{1, 1, 0, 1, 1, 1, 1, 1}}});
    f.expect = {K::Zero, 0, "0"};
    f.summary = "I x {0} together with {1} x I";
  } else if (name == "parabola") {
    no_params();
    f.relation = Relation::region(2, std::vector<std::string>{"x1 - x0^2 <= 0"});
    f.expect = {K::Zero, 0, "0"};
    f.summary = "region x1 <= x0^2";
  } else if (name == "diagonal") {
    no_params();
    f.relation = detail::segs({{{0, 1, 0, 1, 1, 1, 1, 1}}});
    f.expect = {K::Zero, 0, "0"};
    f.summary = "identity relation";
  } else if (name == "diagonal-plus-two-points") {
    no_params();
    f.relation = Relation::unite({detail::segs({{{0, 1, 0, 1, 1, 1, 1, 1}}}),
                                  Relation::points(2, {{rat(1, 4), rat(3, 5)}, {rat(3, 5), rat(1, 4)}})});
    f.expect = {K::Value, ln2, "ln 2"};
    f.summary = "diagonal with the pair (1/4,3/5), (3/5,1/4)";
  } else if (name == "l-n") {
    int n = detail::int_param(ps, 0, 4, 1, name);
    f.params = std::to_string(n);
    f.relation = l_n(n);
    f.expect = {K::AtLeast, std::log(n + 1.0) / 3, "ln(n+1)/3"};
    f.summary = "bottom row, right column and the corner (0,1)";
  } else if (name == "k-horizontal-lines") {
    int k = detail::int_param(ps, 0, 3, 1, name);
    f.params = std::to_string(k);
    f.relation = k_horizontal_lines(k);
    f.expect = {K::Value, std::log(static_cast<double>(k)), "ln " + std::to_string(k)};
    f.summary = "k disjoint full-width horizontal segments";
  } else if (name == "tent-inverse") {
    no_params();
    f.relation = detail::segs({{{0, 1, 0, 1, 1, 1, 1, 2}}, {{1, 1, 1, 2, 0, 1, 1, 1}}});
    f.expect = {K::Value, ln2, "ln 2"};
    f.summary = "inverse graph of the full tent map";
  } else if (name == "kt-diamond") {
    no_params();
    f.relation = detail::segs({{{0, 1, 1, 2, 1, 2, 1, 1}},
                               {{1, 2, 1, 1, 1, 1, 1, 2}},
                               {{1, 1, 1, 2, 1, 2, 0, 1}},
                               {{1, 2, 0, 1, 0, 1, 1, 2}}});
    f.expect = {K::Value, ln2, "ln 2"};
    f.summary = "diamond through the edge midpoints";
  } else if (name == "square") {
    no_params();
    f.relation = Relation::region(2, std::vector<std::string>{"-1 <= 0"});
    f.expect = {K::Divergent, 0, "inf"};
    f.summary = "full unit square";
  } else if (name == "empty-rect") {
    no_params();
    f.relation = Relation::region(2, std::vector<std::string>{"2/3 - x0 <= 0", "x1 - 1/3 <= 0"});
    f.expect = {K::Zero, 0, "0"};
    f.summary = "[2/3,1] x [0,1/3]; its square product is empty";
  } else {
    throw ParseError("unknown fixture '" + name + "'");
  }
  return f;
}

}  // namespace mahavier
