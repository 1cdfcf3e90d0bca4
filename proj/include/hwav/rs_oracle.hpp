#pragma once

#include <algorithm>
#include <vector>

#include "hwav/avcore.hpp"
#include "hwav/diagram.hpp"
#include "hwav/error.hpp"
#include "hwav/rational.hpp"
#include "hwav/root_data.hpp"

namespace hwav {

using Partition = std::vector<int>;

// Row insertion; x bumps the leftmost entry strictly greater than x, so rows stay weakly increasing.
inline Partition rs_shape(const std::vector<Rational>& x) {
  std::vector<std::vector<Rational>> rows;
  for (Rational v : x) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({v});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        break;
      }
      std::swap(*it, v);
    }
  }
  Partition p;
  for (const auto& row : rows) p.push_back(static_cast<int>(row.size()));
  return p;
}

inline Partition dual_partition(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  for (int c = 1; c <= p.front(); ++c) {
    int len = 0;
    for (int part : p)
      if (part >= c) ++len;
    q.push_back(len);
  }
  return q;
}

// Part i (1-based), or 0 past the end.
inline int part(const Partition& p, int i) { return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0; }

inline std::vector<Rational> lambda_minus(const std::vector<Rational>& t) {
  std::vector<Rational> out = t;
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back(-*it);
  return out;
}

struct EvOddCounts {
  std::vector<int> ev;
  std::vector<int> odd;
};

// Even/odd box counts per row: box (k,l) is even when k+l is even.
inline EvOddCounts ev_odd(const Partition& p) {
  EvOddCounts c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int up = (p[i] + 1) / 2, down = p[i] / 2;
    const bool odd_row = (i % 2 == 0);  // row index i+1
    c.ev.push_back(odd_row ? up : down);
    c.odd.push_back(odd_row ? down : up);
  }
  return c;
}

inline int row_ev(const Partition& p, int i) { return i % 2 == 1 ? (part(p, i) + 1) / 2 : part(p, i) / 2; }
inline int row_odd(const Partition& p, int i) { return i % 2 == 1 ? part(p, i) / 2 : (part(p, i) + 1) / 2; }

// Largest k with t_{n-k+i} <= s_i for i = 1..k.
inline int minimax_k(const std::vector<Rational>& t, const std::vector<Rational>& s) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    require(t[i] > t[i + 1], ErrorKind::InvalidArgument, "minimax_k: t must be strictly decreasing");
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    require(s[i] > s[i + 1], ErrorKind::InvalidArgument, "minimax_k: s must be strictly decreasing");
  const int n = static_cast<int>(t.size()), m = static_cast<int>(s.size());
  for (int k = std::min(n, m); k > 0; --k) {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i) ok = t[n - k + i - 1] <= s[i - 1];
    if (ok) return k;
  }
  return 0;
}

// Literal E-type root sets that drive the integral dispatch.
inline std::vector<std::vector<std::vector<int>>> e_type_oracle_sets(Family f) {
  if (f == Family::E6) {
    return {
        {{1, -1, -1, -1, -1, -1, -1, 1}},
        {{1, 1, 1, -1, -1, -1, -1, 1}, {-1, -1, -1, 1, -1, -1, -1, 1}},
    };
  }
  require(f == Family::E7, ErrorKind::InvalidArgument, "oracle sets exist only for E6 and E7");
  return {
      {{0, 0, 0, 0, -2, 2, 0, 0}},
      {{2, 0, 0, 0, 0, 2, 0, 0}, {-2, 0, 0, 0, 0, 2, 0, 0}},
      {{1, -1, -1, 1, -1, 1, -1, 1}, {-1, 1, 1, -1, -1, 1, -1, 1}, {0, 0, 0, 0, 2, 2, 0, 0}},
  };
}

// Orbit index by the independent insertion/root-set route.
inline int k_prime(const RootSystemData& rs, const Weight& lr) {
  check_k_dominant(lr, rs);
  const auto& t = rs.type;
  const int r = t.real_rank();
  switch (t.family) {
    case Family::SU: {
      if (!is_integer(lr[0] - lr[t.p])) return r;
      return part(dual_partition(rs_shape(lr)), 2);
    }
    case Family::SP: {
      auto q = dual_partition(rs_shape(lambda_minus(lr)));
      int k;
      if (is_integer(lr[0])) k = 2 * row_odd(q, 2);
      else if (is_half_integer(lr[0])) k = 2 * row_ev(q, 2) + 1;
      else k = t.n;
      return std::min(k, r);
    }
    case Family::SOSTAR: {
      if (!in_half_z(lr[0])) return t.n / 2;
      return row_ev(dual_partition(rs_shape(lambda_minus(lr))), 2);
    }
    case Family::SO_ODD: {
      Rational d = lr[0] - lr[1];
      if (is_integer(d)) return lr[0] > lr[1] ? 0 : 2;
      if (is_half_integer(d)) return lr[0] > Rational(0) ? 1 : 2;
      return 2;
    }
    case Family::SO_EVEN: {
      Rational d = lr[0] - lr[1];
      if (!is_integer(d)) return 2;
      if (lr[0] > lr[1]) return 0;
      Rational tn = lr[t.n - 1];
      if (tn < Rational(0)) tn = -tn;
      return (-tn < lr[0]) ? 1 : 2;
    }
    case Family::E6:
    case Family::E7: {
      if (classify_integrality(lr, rs) != Integrality::Integral) return r;
      auto sets = e_type_oracle_sets(t.family);
      for (int k = 0; k < static_cast<int>(sets.size()); ++k)
        for (const auto& tw : sets[k]) {
          Root a;
          a.twice = tw;
          if (coroot_pairing(lr, a) > Rational(0)) return k;
        }
      return r;
    }
  }
  return r;
}

}  // namespace hwav
