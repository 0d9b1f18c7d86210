#pragma once

// Exact rational distance values. Distances compare by exact rational
// equality, never by floating point: every decision in this library reduces
// to "are these two distances equal / ordered", so a tolerance would change
// the semantics, not just the precision.

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "combsim/error.hpp"

namespace combsim {

using Rational = boost::rational<long long>;

namespace detail {

inline long long parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  long long acc = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    if (__builtin_mul_overflow(acc, 10LL, &acc) ||
        __builtin_add_overflow(acc, static_cast<long long>(c - '0'), &acc)) {
      throw ParseError("number out of range '" + std::string(whole) + "'");
    }
  }
  return acc;
}

inline long long pow10_checked(std::size_t k, std::string_view whole) {
  long long acc = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(acc, 10LL, &acc)) {
      throw ParseError("number out of range '" + std::string(whole) + "'");
    }
  }
  return acc;
}

}  // namespace detail

// Accepts integer ("3"), decimal ("3.5"), and fraction ("7/2") literals with
// an optional leading sign. The result is normalized (lowest terms, positive
// denominator).
inline Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  long long sign = 1;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    if (rest.front() == '-') sign = -1;
    rest.remove_prefix(1);
  }
  if (rest.empty()) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  }

  auto slash = rest.find('/');
  auto dot = rest.find('.');
  if (slash != std::string_view::npos && dot != std::string_view::npos) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  }

  if (slash != std::string_view::npos) {
    long long num = detail::parse_digits(rest.substr(0, slash), text);
    long long den = detail::parse_digits(rest.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(sign * num, den);
  }

  if (dot != std::string_view::npos) {
    std::string_view int_part = rest.substr(0, dot);
    std::string_view frac_part = rest.substr(dot + 1);
    long long whole = detail::parse_digits(int_part, text);
    long long frac = detail::parse_digits(frac_part, text);
    long long den = detail::pow10_checked(frac_part.size(), text);
    long long num;
    if (__builtin_mul_overflow(whole, den, &num) ||
        __builtin_add_overflow(num, frac, &num)) {
      throw ParseError("number out of range '" + std::string(text) + "'");
    }
    return Rational(sign * num, den);
  }

  return Rational(sign * detail::parse_digits(rest, text), 1);
}

// Canonical text form: integers as "3", everything else as "p/q". Decimal
// input round-trips through the fraction form ("3.5" serializes as "7/2").
inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += '/';
    s += std::to_string(r.denominator());
  }
  return s;
}

}  // namespace combsim
