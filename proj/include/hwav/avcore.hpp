#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwav/diagram.hpp"
#include "hwav/error.hpp"
#include "hwav/poset.hpp"
#include "hwav/root_data.hpp"

namespace hwav {

inline std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Root data and poset for one type, built once and shared.
struct Context {
  RootSystemData rs;
  NoncompactPoset poset;

  explicit Context(const HermitianType& t) : rs(build_root_data(t)), poset(build_poset(rs)) {}
  const HermitianType& type() const { return rs.type; }
};

inline int k_of_lambda(const HermitianType& t, Integrality cls, int m) {
  const int r = t.real_rank();
  require(m >= 0 && m <= r, ErrorKind::Internal,
          "width " + std::to_string(m) + " outside [0," + std::to_string(r) + "] for " + t.name());
  if (cls == Integrality::Integral) {
    if (t.simply_laced()) return m;
    return 2 * m < r + 1 ? 2 * m : r;
  }
  if (cls == Integrality::HalfIntegral) {
    require(!t.simply_laced(), ErrorKind::Internal, "half-integral class on a simply laced type");
    return 2 * m < r ? 2 * m + 1 : r;
  }
  return r;
}

inline void check_orbit_index(const HermitianType& t, int k) {
  require(k >= 0 && k <= t.real_rank(), ErrorKind::InvalidArgument,
          "orbit index " + std::to_string(k) + " outside [0," + std::to_string(t.real_rank()) + "] for " + t.name());
}

inline int orbit_dimension(const HermitianType& t, int k) {
  check_orbit_index(t, k);
  const int n = t.n;
  switch (t.family) {
    case Family::SU: return k * (t.p + t.q - k);
    case Family::SP: return k * (2 * n - k + 1) / 2;
    case Family::SOSTAR: return k * (2 * n - 2 * k - 1);
    case Family::SO_ODD: return k == 0 ? 0 : (k == 1 ? 2 * n - 2 : 2 * n - 1);
    case Family::SO_EVEN: return k == 0 ? 0 : (k == 1 ? 2 * n - 3 : 2 * n - 2);
    case Family::E6: return std::vector<int>{0, 11, 16}[k];
    case Family::E7: return std::vector<int>{0, 17, 26, 27}[k];
  }
  return 0;
}

namespace detail {

inline std::string partition_label(std::vector<std::pair<int, int>> parts) {
  std::string s = "[";
  bool first = true;
  for (auto [part, mult] : parts) {
    if (mult <= 0) continue;
    if (!first) s += ",";
    first = false;
    s += std::to_string(part);
    if (mult != 1) s += "^" + std::to_string(mult);
  }
  return s + "]";
}

}  // namespace detail

inline std::string orbit_label(const HermitianType& t, int k) {
  check_orbit_index(t, k);
  const int n = t.n;
  switch (t.family) {
    case Family::SU: return detail::partition_label({{2, k}, {1, t.p + t.q - 2 * k}});
    case Family::SP: return detail::partition_label({{2, k}, {1, 2 * n - 2 * k}});
    case Family::SOSTAR: return detail::partition_label({{2, 2 * k}, {1, 2 * n - 4 * k}});
    case Family::SO_ODD:
      if (k == 0) return "0";
      return k == 1 ? detail::partition_label({{2, 2}, {1, 2 * n - 3}}) : detail::partition_label({{3, 1}, {1, 2 * n - 2}});
    case Family::SO_EVEN:
      if (k == 0) return "0";
      return k == 1 ? detail::partition_label({{2, 2}, {1, 2 * n - 4}}) : detail::partition_label({{3, 1}, {1, 2 * n - 3}});
    case Family::E6: return std::vector<std::string>{"0", "A_1", "2A_1"}[k];
    case Family::E7: return std::vector<std::string>{"0", "A_1", "2A_1", "(3A_1)''"}[k];
  }
  return "";
}

struct SpringerRow {
  int k;
  int orbit_dim;
  std::string complex_label;
  bool special;
  std::int64_t springer_dim;
};

inline SpringerRow springer_row(const HermitianType& t, int k) {
  check_orbit_index(t, k);
  SpringerRow row{k, orbit_dimension(t, k), orbit_label(t, k), true, 0};
  const int n = t.n;
  switch (t.family) {
    case Family::SU: row.springer_dim = binom(t.p + t.q, k) - binom(t.p + t.q, k - 1); break;
    case Family::SP:
      if (k % 2 == 0) {
        row.springer_dim = binom(n, k / 2);
      } else {
        row.springer_dim = binom(n, (k - 1) / 2);
        row.special = (k == n);
      }
      break;
    case Family::SOSTAR: row.springer_dim = (2 * k == n) ? binom(n, k) / 2 : binom(n, k); break;
    case Family::SO_ODD:
      row.springer_dim = std::vector<std::int64_t>{1, n - 1, n}[k];
      row.special = (k != 1);
      break;
    case Family::SO_EVEN: row.springer_dim = std::vector<std::int64_t>{1, n, n - 1}[k]; break;
    case Family::E6: row.springer_dim = std::vector<std::int64_t>{1, 6, 20}[k]; break;
    case Family::E7: row.springer_dim = std::vector<std::int64_t>{1, 7, 27, 21}[k]; break;
  }
  return row;
}

inline std::vector<SpringerRow> springer_table(const HermitianType& t) {
  std::vector<SpringerRow> rows;
  for (int k = 0; k <= t.real_rank(); ++k) rows.push_back(springer_row(t, k));
  return rows;
}

// Computes the GK dimension by the route the class dictates, then insists it
// matches the dimension of the orbit picked by k.
inline int gk_dimension(const HermitianType& t, Integrality cls, int m, int k, const IntegralSubsystem* sub) {
  int gk = 0;
  if (cls == Integrality::Integral) {
    gk = orbit_dimension(t, k);
  } else {
    require(sub != nullptr, ErrorKind::Internal, "gk_dimension: integral subsystem required");
    const int delta = sub->delta;
    if (cls == Integrality::HalfIntegral && t.family == Family::SP) {
      // Integral part is type D_n; its orbit of index m has dimension m(2n-2m-1).
      require(delta == t.n, ErrorKind::Internal, "gk_dimension: symplectic half-integral gap must be n");
      gk = delta + m * (2 * t.n - 2 * m - 1);
    } else if (cls == Integrality::HalfIntegral && t.family == Family::SO_ODD) {
      // Integral noncompact part is the single root eps_1.
      require(delta == 2 * t.n - 2, ErrorKind::Internal, "gk_dimension: so_odd half-integral gap must be 2n-2");
      gk = delta + m;
    } else {
      gk = t.noncompact_count();
    }
  }
  const int expect = orbit_dimension(t, k);
  require(gk == expect, ErrorKind::Internal,
          "GK dimension " + std::to_string(gk) + " disagrees with orbit dimension " + std::to_string(expect));
  return gk;
}

struct AVResult {
  Weight lambda_rho;
  Integrality integrality = Integrality::Integral;
  Bitset y;
  int y_size = 0;
  int width_m = 0;
  std::vector<int> witness;
  int k = 0;
  int real_rank = 0;
  int orbit_dim = 0;
  std::string orbit_label;
  int gk_dim = 0;
  int delta = 0;
  std::optional<std::vector<int>> w_word;  // only for integral weights
};

inline AVResult associated_variety(const Context& ctx, const Weight& lr) {
  const auto& rs = ctx.rs;
  const auto& t = rs.type;
  check_k_dominant(lr, rs);
  AVResult res;
  res.lambda_rho = lr;
  Diagram d = compute_diagram(lr, rs, ctx.poset);
  res.integrality = d.integrality;
  res.y = d.y;
  res.y_size = static_cast<int>(d.y.count());
  WidthResult w = width(ctx.poset, d.y);
  res.width_m = w.m;
  res.witness = w.witness;
  res.real_rank = t.real_rank();
  res.k = k_of_lambda(t, d.integrality, w.m);
  res.orbit_dim = orbit_dimension(t, res.k);
  res.orbit_label = orbit_label(t, res.k);
  IntegralSubsystem sub = integral_subsystem(lr, rs, ctx.poset);
  res.delta = sub.delta;
  res.gk_dim = gk_dimension(t, d.integrality, w.m, res.k, &sub);
  if (d.integrality == Integrality::Integral) res.w_word = canonical_w(lr, rs);
  return res;
}

inline AVResult associated_variety(const Context& ctx, const WeightInput& in) {
  return associated_variety(ctx, resolve_weight(ctx.rs, in));
}

}  // namespace hwav
