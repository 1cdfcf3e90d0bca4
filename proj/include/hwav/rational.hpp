#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hwav/error.hpp"

namespace hwav {

using Rational = boost::rational<std::int64_t>;
using Weight = std::vector<Rational>;

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }
inline bool is_half_integer(const Rational& x) { return x.denominator() == 2; }  // in 1/2 + Z
inline bool in_half_z(const Rational& x) { return x.denominator() <= 2; }

inline std::int64_t floor_of(const Rational& x) {
  std::int64_t n = x.numerator(), d = x.denominator();
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

inline std::string to_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.size() > 17) fail(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') fail(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return neg ? -v : v;
}

}  // namespace detail

// Accepts "a" or "a/b". Decimal points are rejected on purpose.
inline Rational parse_rational(std::string_view s) {
  auto t = detail::trim(s);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_int(t, s));
  auto num = detail::parse_int(t.substr(0, slash), s);
  auto den = detail::parse_int(t.substr(slash + 1), s);
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

inline Weight parse_weight(std::string_view s) {
  Weight out;
  if (detail::trim(s).empty()) fail(ErrorKind::Parse, "empty weight");
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hwav
