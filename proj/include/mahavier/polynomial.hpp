#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahavier/interval.hpp"
#include "mahavier/scalar.hpp"

namespace mahavier {

/// Multivariate polynomial over the rationals in variables x0..x{nvars-1}.
/// Invariant: no stored coefficient is zero; every exponent vector has length nvars.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  static constexpr unsigned kMaxDegree = 4;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t k) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(k) = 1;
    p.add_term(e, Scalar(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  unsigned degree_in(std::size_t k) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return d;
  }

  bool involves(std::size_t k) const { return degree_in(k) > 0; }

  bool is_constant() const {
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (involves(k)) return false;
    }
    return true;
  }

  Scalar constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, Scalar(-c));
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, Scalar(ca * cb));
      }
    }
    return r;
  }

  Polynomial scaled(const Scalar& s) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, Scalar(c * s));
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(nvars_, Scalar(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Scalar eval(const Point& x) const {
    Scalar sum(0);
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (std::size_t k = 0; k < nvars_; ++k) {
        for (unsigned i = 0; i < e[k]; ++i) t *= x[k];
      }
      sum += t;
    }
    return sum;
  }

  /// Univariate evaluation; only valid when every other variable is absent.
  Scalar eval1(std::size_t k, const Scalar& v) const {
    Point x(nvars_, Scalar(0));
    x[k] = v;
    return eval(x);
  }

  Polynomial derivative(std::size_t k) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponents d = e;
      d[k] -= 1;
      r.add_term(d, Scalar(c * e[k]));
    }
    return r;
  }

  /// Enclosure [lo, hi] of the polynomial over the closed box spanned by `sides`.
  std::pair<Scalar, Scalar> range(const std::vector<Interval>& sides) const {
    Scalar lo(0), hi(0);
    for (const auto& [e, c] : terms_) {
      Scalar mlo(1), mhi(1);
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        auto [plo, phi] = power_range(sides[k].lo(), sides[k].hi(), e[k]);
        Scalar cands[4] = {mlo * plo, mlo * phi, mhi * plo, mhi * phi};
        mlo = *std::min_element(std::begin(cands), std::end(cands));
        mhi = *std::max_element(std::begin(cands), std::end(cands));
      }
      if (c > 0) {
        lo += c * mlo;
        hi += c * mhi;
      } else {
        lo += c * mhi;
        hi += c * mlo;
      }
    }
    return {lo, hi};
  }

  /// Renames variable k to perm[k].
  Polynomial permuted(const std::vector<std::size_t>& perm) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f(nvars_, 0);
      for (std::size_t k = 0; k < nvars_; ++k) f[perm[k]] = e[k];
      r.add_term(f, c);
    }
    return r;
  }

  /// Splits p = c * x_k + q where c is a nonzero constant and q does not involve x_k.
  std::optional<std::pair<Scalar, Polynomial>> linear_split(std::size_t k) const {
    if (degree_in(k) != 1) return std::nullopt;
    Scalar c(0);
    Polynomial q(nvars_);
    for (const auto& [e, coef] : terms_) {
      if (e[k] == 0) {
        q.add_term(e, coef);
        continue;
      }
      for (std::size_t j = 0; j < nvars_; ++j) {
        if (j != k && e[j] != 0) return std::nullopt;
      }
      c = coef;
    }
    return std::make_pair(c, q);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest total degree first, then reverse lexicographic, for a stable reading order.
    std::vector<std::pair<Exponents, Scalar>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      unsigned da = 0, db = 0;
      for (unsigned x : a.first) da += x;
      for (unsigned x : b.first) db += x;
      if (da != db) return da > db;
      return a.first > b.first;
    });
    for (const auto& [e, c] : ordered) {
      Scalar mag = c < 0 ? Scalar(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(k);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) {
        out += to_literal(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += to_literal(mag) + "*" + mono;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  static std::pair<Scalar, Scalar> power_range(const Scalar& lo, const Scalar& hi, unsigned k) {
    auto p = [k](const Scalar& v) {
      Scalar r(1);
      for (unsigned i = 0; i < k; ++i) r *= v;
      return r;
    };
    Scalar a = p(lo), b = p(hi);
    if (k % 2 == 0 && lo < 0 && hi > 0) return {Scalar(0), std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
  }

  std::size_t nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

namespace detail {

// Recursive-descent parser:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('+'|'-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | 'x' digits | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string text, std::size_t nvars) : s_(std::move(text)), nvars_(nvars) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+')) {
        p = p + term();
      } else if (eat('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.constant_term() == 0) fail("division by a non-constant or zero");
        p = p.scaled(Scalar(1 / d.constant_term()));
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned long k = std::stoul(s_.substr(start, pos_ - start));
      if (k > Polynomial::kMaxDegree) fail("exponent exceeds degree cap");
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index after 'x'");
      std::size_t k = std::stoul(s_.substr(start, pos_ - start));
      if (k >= nvars_) fail("variable x" + std::to_string(k) + " outside arity");
      return Polynomial::variable(nvars_, k);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return Polynomial::constant(nvars_, parse_scalar(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

inline std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t at = 0;
  while ((at = s.find(from, at)) != std::string::npos) {
    s.replace(at, from.size(), to);
    at += to.size();
  }
  return s;
}

}  // namespace detail

/// Parses "lhs <= rhs", "lhs >= rhs" or a bare expression (read as "expr <= 0")
/// into p with the constraint p <= 0.
inline Polynomial parse_constraint(std::string_view text, std::size_t nvars) {
  std::string s = detail::replace_all(std::string(text), "\xE2\x88\x92", "-");  // U+2212
  s = detail::replace_all(s, "\xE2\x89\xA4", "<=");                            // U+2264
  s = detail::replace_all(s, "\xE2\x89\xA5", ">=");                            // U+2265
  Polynomial p;
  if (auto at = s.find("<="); at != std::string::npos) {
    p = detail::PolyParser(s.substr(0, at), nvars).parse_all() -
        detail::PolyParser(s.substr(at + 2), nvars).parse_all();
  } else if (auto ge = s.find(">="); ge != std::string::npos) {
    p = detail::PolyParser(s.substr(ge + 2), nvars).parse_all() -
        detail::PolyParser(s.substr(0, ge), nvars).parse_all();
  } else {
    p = detail::PolyParser(s, nvars).parse_all();
  }
  if (p.degree() > Polynomial::kMaxDegree) {
    throw ParseError("constraint '" + std::string(text) + "' exceeds total degree " +
                     std::to_string(Polynomial::kMaxDegree));
  }
  return p;
}

}  // namespace mahavier
