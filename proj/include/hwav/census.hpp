#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hwav/avcore.hpp"
#include "hwav/diagram.hpp"
#include "hwav/error.hpp"
#include "hwav/poset.hpp"

namespace hwav {

struct CensusReport {
  HermitianType type;
  std::vector<std::int64_t> counts_by_width;  // index 0..r
  std::int64_t total = 0;
  std::vector<std::int64_t> expected;
  std::int64_t expected_total = 0;
  bool pass = false;
  std::vector<std::string> mismatches;
};

inline void check_census_feasible(const HermitianType& t) {
  const int n = t.n;
  switch (t.family) {
    case Family::SU:
      require(t.p + t.q <= 16, ErrorKind::Infeasible, "census refused: su(p,q) needs p+q <= 16");
      break;
    case Family::SP: require(n <= 20, ErrorKind::Infeasible, "census refused: sp(n) needs n <= 20"); break;
    case Family::SOSTAR: require(n <= 21, ErrorKind::Infeasible, "census refused: sostar(n) needs n <= 21"); break;
    case Family::SO_ODD:
    case Family::SO_EVEN: require(n <= 64, ErrorKind::Infeasible, "census refused: so(n) needs n <= 64"); break;
    default: break;
  }
}

// Closed-form number of downsets of each width 0..r.
inline std::vector<std::int64_t> expected_width_counts(const HermitianType& t) {
  const int r = t.real_rank(), n = t.n;
  std::vector<std::int64_t> e(r + 1, 0);
  for (int m = 0; m <= r; ++m) {
    switch (t.family) {
      case Family::SU: e[m] = binom(t.p + t.q, m) - binom(t.p + t.q, m - 1); break;
      case Family::SP:
        if (2 * m < n + 1) e[m] = binom(n + 1, m);
        else if (2 * m == n + 1) e[m] = binom(n + 1, m) / 2;
        break;
      case Family::SOSTAR: e[m] = (2 * m == n) ? binom(n, m) / 2 : binom(n, m); break;
      case Family::SO_ODD: e[m] = std::vector<std::int64_t>{1, 2 * n - 1, 0}[m]; break;
      case Family::SO_EVEN: e[m] = std::vector<std::int64_t>{1, n, n - 1}[m]; break;
      case Family::E6: e[m] = std::vector<std::int64_t>{1, 6, 20}[m]; break;
      case Family::E7: e[m] = std::vector<std::int64_t>{1, 7, 27, 21}[m]; break;
    }
  }
  return e;
}

// Closed-form number of downsets, i.e. the size of the Weyl coset set.
inline std::int64_t expected_downset_total(const HermitianType& t) {
  switch (t.family) {
    case Family::SU: return binom(t.p + t.q, t.p);
    case Family::SP: return std::int64_t{1} << t.n;
    case Family::SOSTAR: return std::int64_t{1} << (t.n - 1);
    case Family::SO_ODD:
    case Family::SO_EVEN: return 2 * t.n;
    case Family::E6: return 27;
    case Family::E7: return 56;
  }
  return 0;
}

inline CensusReport width_census(const Context& ctx) {
  const auto& t = ctx.type();
  check_census_feasible(t);
  CensusReport rep;
  rep.type = t;
  rep.counts_by_width.assign(t.real_rank() + 1, 0);
  for_each_downset(ctx.poset, [&](const Bitset& d) {
    int m = width_of(ctx.poset, d);
    require(m <= t.real_rank(), ErrorKind::Internal, "downset width exceeds the real rank");
    ++rep.counts_by_width[m];
    ++rep.total;
  });
  rep.expected = expected_width_counts(t);
  rep.expected_total = expected_downset_total(t);
  for (std::size_t m = 0; m < rep.expected.size(); ++m)
    if (rep.counts_by_width[m] != rep.expected[m])
      rep.mismatches.push_back("width " + std::to_string(m) + ": counted " + std::to_string(rep.counts_by_width[m]) +
                               ", expected " + std::to_string(rep.expected[m]));
  if (rep.total != rep.expected_total)
    rep.mismatches.push_back("total: counted " + std::to_string(rep.total) + ", expected " +
                             std::to_string(rep.expected_total));
  rep.pass = rep.mismatches.empty();
  return rep;
}

inline CensusReport width_census(const HermitianType& t) {
  check_census_feasible(t);
  return width_census(Context(t));
}

struct CheckReport {
  bool pass = true;
  std::vector<std::string> checks;    // human-readable description of each identity tested
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    checks.push_back(what);
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

// Width counts against Springer dimensions.
inline CheckReport verify_springer_identities(const CensusReport& census) {
  const auto& t = census.type;
  const auto& c = census.counts_by_width;
  const int r = t.real_rank(), n = t.n;
  auto pi = [&](int k) -> std::int64_t { return (k < 0 || k > r) ? 0 : springer_row(t, k).springer_dim; };
  CheckReport rep;
  if (t.simply_laced()) {
    for (int k = 0; k <= r; ++k)
      rep.expect(c[k] == pi(k), "m_" + std::to_string(k) + " = " + std::to_string(c[k]) + " vs springer " +
                                    std::to_string(pi(k)));
  } else if (t.family == Family::SP) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto want = pi(2 * k) + pi(2 * k - 1);
      rep.expect(c[k] == want, "m_" + std::to_string(k) + " = " + std::to_string(c[k]) + " vs pi(2k)+pi(2k-1) = " +
                                   std::to_string(want));
    }
    if (n % 2 == 1) {
      int k = (n + 1) / 2;
      rep.expect(c[k] == pi(n), "m_" + std::to_string(k) + " = " + std::to_string(c[k]) + " vs pi(n) = " +
                                    std::to_string(pi(n)));
    }
  } else {  // SO_ODD
    rep.expect(c[0] == pi(0), "m_0 = " + std::to_string(c[0]) + " vs springer 1");
    rep.expect(c[1] == pi(1) + pi(2), "m_1 = " + std::to_string(c[1]) + " vs pi(1)+pi(2) = " +
                                          std::to_string(pi(1) + pi(2)));
  }
  rep.expect(orbit_dimension(t, r) == t.noncompact_count(),
             "dim O_r = " + std::to_string(orbit_dimension(t, r)) + " vs |p+| = " + std::to_string(t.noncompact_count()));
  return rep;
}

namespace detail {

// Signed permutation acting on epsilon coordinates: w(e_i) = sign[i] e_{perm[i]}.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  Weight apply(const Weight& v) const {
    Weight out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i] * sign[i];
    return out;
  }
  std::vector<int> apply_inverse(const std::vector<int>& v) const {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]] * sign[i];
    return out;
  }
};

inline std::vector<SignedPerm> classical_weyl_group(const HermitianType& t) {
  const int n = t.ambient_dim();
  const bool signs = t.family != Family::SU;
  const bool even_only = t.family == Family::SOSTAR || t.family == Family::SO_EVEN;
  std::vector<SignedPerm> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int masks = signs ? (1 << n) : 1;
    for (int mask = 0; mask < masks; ++mask) {
      if (even_only && __builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
      SignedPerm w{perm, std::vector<int>(n, 1)};
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) w.sign[i] = -1;
      out.push_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace detail

// w -> Y(-w rho) over all w with -w rho compact-dominant must hit every downset exactly once.
inline CheckReport verify_bijection_classical(const Context& ctx) {
  const auto& t = ctx.type();
  const auto& rs = ctx.rs;
  const auto& P = ctx.poset;
  require(!t.is_e_type() && t.rank() <= 6, ErrorKind::Infeasible,
          "bijection check needs a classical type of rank <= 6, got " + t.name());
  CheckReport rep;
  std::set<std::vector<int>> images;
  std::int64_t coset_count = 0;
  bool all_downsets = true, sets_agree = true, injective = true;
  std::set<std::vector<int>> positive;
  for (const auto& a : rs.positive_roots) positive.insert(a.twice);
  for (const auto& w : detail::classical_weyl_group(t)) {
    Weight lr = negate(w.apply(rs.rho));
    bool dominant = true;
    for (const auto& a : rs.compact_positive)
      if (coroot_pairing(lr, a) <= Rational(0)) { dominant = false; break; }
    if (!dominant) continue;
    ++coset_count;
    Bitset y = diagram_set(lr, P);
    if (!is_downset(P, y)) all_downsets = false;
    Bitset inv(P.size());
    for (std::size_t i = 0; i < P.size(); ++i)
      if (positive.count(w.apply_inverse(P.roots[i].twice))) inv.set(i);
    if (inv != y) sets_agree = false;
    if (!images.insert(to_indices(y)).second) injective = false;
  }
  std::set<std::vector<int>> downsets;
  for_each_downset(P, [&](const Bitset& d) { downsets.insert(to_indices(d)); });
  rep.expect(coset_count == expected_downset_total(t),
             "|W^K| = " + std::to_string(coset_count) + " vs " + std::to_string(expected_downset_total(t)));
  rep.expect(all_downsets, "every image is a downset");
  rep.expect(sets_agree, "Y(-w rho) equals the noncompact roots made positive by w^-1");
  rep.expect(injective, "w -> Y is injective");
  rep.expect(images == downsets, "image set equals the set of all downsets (" + std::to_string(downsets.size()) + ")");
  return rep;
}

}  // namespace hwav
