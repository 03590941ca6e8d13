#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mahavier {

// Exact rational coordinate. Always kept canonical (reduced, positive denominator).
using Scalar = mpq_class;
using BigInt = mpz_class;

// A coordinate tuple (x0, ..., xN).
using Point = std::vector<Scalar>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal such as "0.125" into an exact rational.
inline Scalar parse_scalar(std::string_view text) {
  std::string_view s = detail::trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Scalar value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = detail::trim(s.substr(0, slash));
    auto den = detail::trim(s.substr(slash + 1));
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    BigInt d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Scalar(BigInt(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = Scalar(num, den);
  } else {
    if (!detail::all_digits(s)) throw ParseError("malformed numeric literal '" + std::string(text) + "'");
    value = Scalar(BigInt(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Scalar(-value) : value;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_literal(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string to_literal(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_literal(p[i]);
  }
  return out + ")";
}

inline double to_double(const Scalar& x) { return x.get_d(); }

/// Natural log of a positive big integer without overflowing double.
inline double log_big(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

inline BigInt pow_big(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// p/q in canonical form (mpq_class(p, q) alone does not reduce).
inline Scalar rat(long p, long q) {
  if (q == 0) throw std::invalid_argument("rat: zero denominator");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

inline Scalar midpoint(const Scalar& a, const Scalar& b) { return Scalar((a + b) / 2); }

}  // namespace mahavier
