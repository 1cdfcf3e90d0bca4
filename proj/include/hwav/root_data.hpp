#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hwav/error.hpp"
#include "hwav/hermitian_type.hpp"
#include "hwav/linalg.hpp"
#include "hwav/rational.hpp"

namespace hwav {

// A root stored as twice its epsilon coordinates, so E-type half-integers stay integral.
struct Root {
  std::vector<int> twice;
  std::vector<int> simple;  // coefficients over the simple roots

  int height() const { return std::accumulate(simple.begin(), simple.end(), 0); }
  int twice_norm2() const {
    int s = 0;
    for (int c : twice) s += c * c;
    return s;
  }
  Weight eps() const {
    Weight w;
    w.reserve(twice.size());
    for (int c : twice) w.emplace_back(c, 2);
    return w;
  }
  bool operator==(const Root& o) const { return twice == o.twice; }
};

// Human-readable epsilon form, e.g. "ε1-ε5", "2ε3", "1/2(ε1-ε2-ε3-ε4-ε5-ε6-ε7+ε8)".
inline std::string root_label(const Root& r) {
  bool half = std::any_of(r.twice.begin(), r.twice.end(), [](int c) { return c % 2 != 0; });
  std::string s;
  for (std::size_t i = 0; i < r.twice.size(); ++i) {
    int c = half ? r.twice[i] : r.twice[i] / 2;
    if (c == 0) continue;
    if (c < 0) s += "-";
    else if (!s.empty()) s += "+";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += "ε" + std::to_string(i + 1);
  }
  if (s.empty()) s = "0";
  return half ? "1/2(" + s + ")" : s;
}

inline std::string twice_coords_string(const std::vector<int>& tw) {
  std::string s = "(";
  for (std::size_t i = 0; i < tw.size(); ++i) {
    if (i) s += ",";
    s += to_string(Rational(tw[i], 2));
  }
  return s + ")";
}

// <v, alpha^vee> = 2(v,alpha)/(alpha,alpha). With alpha stored doubled this is 4(v.tw)/(tw.tw).
inline Rational coroot_pairing(const Weight& v, const Root& a) {
  require(v.size() == a.twice.size(), ErrorKind::InvalidArgument,
          "coroot_pairing: dimension mismatch (" + std::to_string(v.size()) + " vs " +
              std::to_string(a.twice.size()) + ")");
  Rational dot(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (a.twice[i] != 0) dot += v[i] * a.twice[i];
  return dot * 4 / a.twice_norm2();
}

inline int coroot_pairing(const Root& b, const Root& a) {
  int dot = 0;
  for (std::size_t i = 0; i < a.twice.size(); ++i) dot += b.twice[i] * a.twice[i];
  return 2 * dot / a.twice_norm2();
}

// s_alpha(v) = v - <v, alpha^vee> alpha
inline Weight reflect(const Weight& v, const Root& a) {
  Rational c = coroot_pairing(v, a);
  Weight out = v;
  if (c == Rational(0)) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (a.twice[i] != 0) out[i] -= c * Rational(a.twice[i], 2);
  return out;
}

struct RootSystemData {
  HermitianType type;
  std::vector<Root> simple_roots;
  int noncompact_simple_index = 0;
  std::vector<Root> positive_roots;      // sorted by height, then epsilon-lex descending
  std::vector<Root> compact_positive;
  std::vector<Root> noncompact_positive;
  Weight rho;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::set<std::vector<int>> all_roots;  // +/- positive roots, doubled coordinates

  bool is_root(const std::vector<int>& tw) const { return all_roots.count(tw) != 0; }
  int rank() const { return static_cast<int>(simple_roots.size()); }
  int ambient_dim() const { return type.ambient_dim(); }

  // Simple-root coefficients of an integer combination given in doubled epsilon coordinates.
  std::vector<int> simple_coords_of(const std::vector<int>& tw) const {
    const int r = rank();
    std::vector<Rational> rhs(r);
    for (int i = 0; i < r; ++i) {
      int dot = 0;
      for (std::size_t k = 0; k < tw.size(); ++k) dot += tw[k] * simple_roots[i].twice[k];
      rhs[i] = Rational(2 * dot, simple_roots[i].twice_norm2());
    }
    Matrix a(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) a[i][j] = cartan[i][j];
    auto x = solve_square(a, rhs);
    std::vector<int> out(r);
    std::vector<int> back(tw.size(), 0);
    for (int j = 0; j < r; ++j) {
      require(is_integer(x[j]), ErrorKind::Internal, "simple_coords_of: not in the root lattice");
      out[j] = static_cast<int>(x[j].numerator());
      for (std::size_t k = 0; k < tw.size(); ++k) back[k] += out[j] * simple_roots[j].twice[k];
    }
    require(back == tw, ErrorKind::Internal, "simple_coords_of: vector outside the root span");
    return out;
  }

  // The epsilon vector v in the span of the roots with <v, alpha_i^vee> = labels[i].
  Weight from_coroot_labels(const std::vector<Rational>& labels) const {
    const int r = rank();
    require(static_cast<int>(labels.size()) == r, ErrorKind::Parse,
            "expected " + std::to_string(r) + " coroot labels, got " + std::to_string(labels.size()));
    Matrix a(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) a[i][j] = cartan[i][j];
    auto x = solve_square(a, labels);
    Weight v(ambient_dim(), Rational(0));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < ambient_dim(); ++k) v[k] += x[j] * Rational(simple_roots[j].twice[k], 2);
    return v;
  }
};

namespace detail {

inline std::vector<int> unit_twice(int dim, int i, int c) {
  std::vector<int> v(dim, 0);
  v[i] = 2 * c;
  return v;
}

inline std::vector<int> eps_pm_twice(int dim, int i, int j, int sign) {
  std::vector<int> v(dim, 0);
  v[i] += 2;
  v[j] += 2 * sign;
  return v;
}

inline std::vector<std::vector<int>> simple_roots_twice(const HermitianType& t) {
  std::vector<std::vector<int>> s;
  const int d = t.ambient_dim();
  switch (t.family) {
    case Family::SU:
      for (int i = 0; i + 1 < d; ++i) s.push_back(eps_pm_twice(d, i, i + 1, -1));
      break;
    case Family::SP:
      for (int i = 0; i + 1 < d; ++i) s.push_back(eps_pm_twice(d, i, i + 1, -1));
      s.push_back(unit_twice(d, d - 1, 2));
      break;
    case Family::SO_ODD:
      for (int i = 0; i + 1 < d; ++i) s.push_back(eps_pm_twice(d, i, i + 1, -1));
      s.push_back(unit_twice(d, d - 1, 1));
      break;
    case Family::SOSTAR:
    case Family::SO_EVEN:
      for (int i = 0; i + 1 < d; ++i) s.push_back(eps_pm_twice(d, i, i + 1, -1));
      s.push_back(eps_pm_twice(d, d - 2, d - 1, 1));
      break;
    case Family::E6:
    case Family::E7: {
      const int r = t.rank();
      s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      s.push_back(eps_pm_twice(8, 0, 1, 1));
      for (int k = 3; k <= r; ++k) s.push_back(eps_pm_twice(8, k - 2, k - 3, -1));
      break;
    }
  }
  return s;
}

inline int noncompact_simple_index(const HermitianType& t) {
  switch (t.family) {
    case Family::SU: return t.p - 1;
    case Family::SP:
    case Family::SOSTAR: return t.n - 1;
    case Family::SO_ODD:
    case Family::SO_EVEN:
    case Family::E6: return 0;
    case Family::E7: return 6;
  }
  return 0;
}

// Explicit positive-root lists for the classical families.
inline std::vector<std::vector<int>> classical_positive_twice(const HermitianType& t) {
  std::vector<std::vector<int>> out;
  const int d = t.ambient_dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      out.push_back(eps_pm_twice(d, i, j, -1));
      if (t.family != Family::SU) out.push_back(eps_pm_twice(d, i, j, 1));
    }
  if (t.family == Family::SP)
    for (int i = 0; i < d; ++i) out.push_back(unit_twice(d, i, 2));
  if (t.family == Family::SO_ODD)
    for (int i = 0; i < d; ++i) out.push_back(unit_twice(d, i, 1));
  return out;
}

}  // namespace detail

// Positive roots by closure from the simple roots, using alpha-strings:
// for beta != alpha_i, beta + alpha_i is a root iff r - <beta, alpha_i^vee> > 0,
// where r is how far the string extends downward from beta.
inline std::vector<std::vector<int>> generate_positive_simple_coords(const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> all, layer;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& b : layer) {
      for (int i = 0; i < r; ++i) {
        int pair = 0;
        for (int j = 0; j < r; ++j) pair += b[j] * cartan[i][j];
        int down = 0;
        std::vector<int> c = b;
        while (true) {
          c[i] -= 1;
          if (!seen.count(c)) break;
          ++down;
        }
        bool is_simple_i = (b[i] == 1) && std::accumulate(b.begin(), b.end(), 0) == 1;
        if (is_simple_i) continue;
        if (down - pair > 0) {
          auto nb = b;
          nb[i] += 1;
          if (seen.insert(nb).second) next.push_back(nb);
        }
      }
    }
    layer = std::move(next);
  }
  return all;
}

inline RootSystemData build_root_data(const HermitianType& type) {
  // Re-validate through the factory so hand-built descriptors get the same bound errors.
  const HermitianType t = HermitianType::make(type.family, type.p, type.q, type.n);
  RootSystemData rs;
  rs.type = t;
  const auto simple_tw = detail::simple_roots_twice(t);
  const int r = static_cast<int>(simple_tw.size());
  for (int i = 0; i < r; ++i) {
    Root a;
    a.twice = simple_tw[i];
    a.simple.assign(r, 0);
    a.simple[i] = 1;
    rs.simple_roots.push_back(a);
  }
  rs.cartan.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.cartan[i][j] = coroot_pairing(rs.simple_roots[j], rs.simple_roots[i]);
  rs.noncompact_simple_index = detail::noncompact_simple_index(t);

  if (t.is_e_type()) {
    for (const auto& sc : generate_positive_simple_coords(rs.cartan)) {
      Root a;
      a.simple = sc;
      a.twice.assign(8, 0);
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < 8; ++k) a.twice[k] += sc[j] * simple_tw[j][k];
      rs.positive_roots.push_back(a);
    }
  } else {
    for (const auto& tw : detail::classical_positive_twice(t)) {
      Root a;
      a.twice = tw;
      a.simple = rs.simple_coords_of(tw);
      rs.positive_roots.push_back(a);
    }
  }

  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.twice > b.twice;
  });

  const int nc = rs.noncompact_simple_index;
  for (const auto& a : rs.positive_roots) {
    require(a.simple[nc] == 0 || a.simple[nc] == 1, ErrorKind::Internal,
            "noncompact coefficient exceeds 1; the nilradical is not abelian");
    (a.simple[nc] == 1 ? rs.noncompact_positive : rs.compact_positive).push_back(a);
    rs.all_roots.insert(a.twice);
    auto neg = a.twice;
    for (int& c : neg) c = -c;
    rs.all_roots.insert(neg);
  }

  rs.rho.assign(t.ambient_dim(), Rational(0));
  for (const auto& a : rs.positive_roots)
    for (int k = 0; k < t.ambient_dim(); ++k) rs.rho[k] += Rational(a.twice[k], 4);
  return rs;
}

}  // namespace hwav
