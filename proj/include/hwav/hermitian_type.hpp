#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include "hwav/error.hpp"

namespace hwav {

enum class Family { SU, SP, SOSTAR, SO_ODD, SO_EVEN, E6, E7 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SU: return "su";
    case Family::SP: return "sp";
    case Family::SOSTAR: return "sostar";
    case Family::SO_ODD: return "so_odd";
    case Family::SO_EVEN: return "so_even";
    case Family::E6: return "e6";
    case Family::E7: return "e7";
  }
  return "?";
}

inline Family parse_family(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "su") return Family::SU;
  if (s == "sp") return Family::SP;
  if (s == "sostar" || s == "so*") return Family::SOSTAR;
  if (s == "so_odd") return Family::SO_ODD;
  if (s == "so_even") return Family::SO_EVEN;
  if (s == "e6") return Family::E6;
  if (s == "e7") return Family::E7;
  fail(ErrorKind::Parse, "unknown type '" + s + "'");
}

// One of the seven Hermitian families together with its rank parameters.
// For SU, p and q are used; every other classical family uses n. E types carry none.
struct HermitianType {
  Family family;
  int p = 0;
  int q = 0;
  int n = 0;

  static HermitianType su(int p, int q) {
    require(p >= 1 && q >= 1, ErrorKind::InvalidArgument, "su(p,q) needs p>=1 and q>=1");
    return {Family::SU, p, q, p + q};
  }
  static HermitianType sp(int n) {
    require(n >= 2, ErrorKind::InvalidArgument, "sp(n) needs n>=2");
    return {Family::SP, 0, 0, n};
  }
  static HermitianType sostar(int n) {
    require(n >= 4, ErrorKind::InvalidArgument, "sostar(n) needs n>=4");
    return {Family::SOSTAR, 0, 0, n};
  }
  static HermitianType so_odd(int n) {
    require(n >= 3, ErrorKind::InvalidArgument, "so_odd(n) needs n>=3");
    return {Family::SO_ODD, 0, 0, n};
  }
  static HermitianType so_even(int n) {
    require(n >= 4, ErrorKind::InvalidArgument, "so_even(n) needs n>=4");
    return {Family::SO_EVEN, 0, 0, n};
  }
  static HermitianType e6() { return {Family::E6, 0, 0, 0}; }
  static HermitianType e7() { return {Family::E7, 0, 0, 0}; }

  // Generic factory; p/q ignored unless family is SU, n ignored for SU and E types.
  static HermitianType make(Family f, int p, int q, int n) {
    switch (f) {
      case Family::SU: return su(p, q);
      case Family::SP: return sp(n);
      case Family::SOSTAR: return sostar(n);
      case Family::SO_ODD: return so_odd(n);
      case Family::SO_EVEN: return so_even(n);
      case Family::E6: return e6();
      case Family::E7: return e7();
    }
    fail(ErrorKind::InvalidArgument, "bad family");
  }

  bool is_e_type() const { return family == Family::E6 || family == Family::E7; }
  bool simply_laced() const { return family != Family::SP && family != Family::SO_ODD; }

  int real_rank() const {
    switch (family) {
      case Family::SU: return std::min(p, q);
      case Family::SP: return n;
      case Family::SOSTAR: return n / 2;
      case Family::SO_ODD:
      case Family::SO_EVEN:
      case Family::E6: return 2;
      case Family::E7: return 3;
    }
    return 0;
  }

  // Dimension of the epsilon space the roots live in.
  int ambient_dim() const { return is_e_type() ? 8 : n; }

  int rank() const {
    switch (family) {
      case Family::SU: return n - 1;
      case Family::E6: return 6;
      case Family::E7: return 7;
      default: return n;
    }
  }

  int noncompact_count() const {
    switch (family) {
      case Family::SU: return p * q;
      case Family::SP: return n * (n + 1) / 2;
      case Family::SOSTAR: return n * (n - 1) / 2;
      case Family::SO_ODD: return 2 * n - 1;
      case Family::SO_EVEN: return 2 * n - 2;
      case Family::E6: return 16;
      case Family::E7: return 27;
    }
    return 0;
  }

  // Height step between consecutive distinguished antichains (simply laced only).
  std::optional<int> antichain_step() const {
    switch (family) {
      case Family::SU: return 1;
      case Family::SO_EVEN: return n - 2;
      case Family::SOSTAR: return 2;
      case Family::E6: return 3;
      case Family::E7: return 4;
      default: return std::nullopt;
    }
  }

  std::string name() const {
    switch (family) {
      case Family::SU: return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case Family::E6:
      case Family::E7: return family_name(family);
      default: return family_name(family) + "(" + std::to_string(n) + ")";
    }
  }

  bool operator==(const HermitianType&) const = default;
};

}  // namespace hwav
