#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hwav/error.hpp"
#include "hwav/rational.hpp"
#include "hwav/root_data.hpp"

namespace hwav {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct HasseEdge {
  int lower;
  int upper;
  int label;  // simple-root index of upper - lower
};

// The noncompact positive roots under the root order, with strict relations cached as bitsets.
struct NoncompactPoset {
  std::vector<Root> roots;
  std::vector<Bitset> below;  // below[i]: j with j < i
  std::vector<Bitset> above;  // above[i]: j with j > i
  std::vector<HasseEdge> hasse;

  std::size_t size() const { return roots.size(); }
  bool less(int a, int b) const { return below[b].test(a); }
  bool leq(int a, int b) const { return a == b || less(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  Bitset empty_set() const { return Bitset(roots.size()); }
  Bitset full_set() const {
    Bitset b(roots.size());
    b.set();
    return b;
  }
  int index_of(const std::vector<int>& twice) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (roots[i].twice == twice) return static_cast<int>(i);
    return -1;
  }
};

inline NoncompactPoset build_poset(const RootSystemData& rs) {
  NoncompactPoset P;
  P.roots = rs.noncompact_positive;
  const int n = static_cast<int>(P.roots.size());
  P.below.assign(n, Bitset(n));
  P.above.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t k = 0; k < P.roots[a].simple.size(); ++k)
        if (P.roots[b].simple[k] < P.roots[a].simple[k]) { le = false; break; }
      if (le) {
        P.below[b].set(a);
        P.above[a].set(b);
      }
    }
  // Covers: a < b with nothing strictly between.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!P.less(a, b)) continue;
      if ((P.above[a] & P.below[b]).any()) continue;
      int label = -1, diff = 0;
      for (std::size_t k = 0; k < P.roots[a].simple.size(); ++k) {
        int d = P.roots[b].simple[k] - P.roots[a].simple[k];
        diff += d;
        if (d == 1) label = static_cast<int>(k);
      }
      require(diff == 1 && label >= 0, ErrorKind::Internal, "cover is not a simple-root step");
      P.hasse.push_back({a, b, label});
    }
  return P;
}

inline Bitset to_bitset(const NoncompactPoset& P, const std::vector<int>& idx) {
  Bitset b(P.size());
  for (int i : idx) b.set(i);
  return b;
}

inline std::vector<int> to_indices(const Bitset& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

inline bool is_downset(const NoncompactPoset& P, const Bitset& s) {
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
    if (!P.below[i].is_subset_of(s)) return false;
  return true;
}

inline bool is_antichain(const NoncompactPoset& P, const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (P.comparable(a[i], a[j])) return false;
  return true;
}

// Downward closure of a set of elements.
inline Bitset downset_of(const NoncompactPoset& P, const std::vector<int>& gens) {
  Bitset b(P.size());
  for (int g : gens) {
    b.set(g);
    b |= P.below[g];
  }
  return b;
}

namespace detail {

// Kuhn augmenting paths on the comparability bipartite graph (left copy -> strictly larger right copy).
struct Matcher {
  const NoncompactPoset& P;
  const Bitset& S;
  std::vector<int> match_right;  // right vertex -> left vertex, -1 if free
  Bitset visited;

  Matcher(const NoncompactPoset& p, const Bitset& s)
      : P(p), S(s), match_right(p.size(), -1), visited(p.size()) {}

  bool augment(int u) {
    Bitset cand = P.above[u] & S;
    cand -= visited;
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      if (visited.test(v)) continue;
      visited.set(v);
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  }

  int run() {
    int m = 0;
    for (auto u = S.find_first(); u != Bitset::npos; u = S.find_next(u)) {
      visited.reset();
      if (augment(static_cast<int>(u))) ++m;
    }
    return m;
  }
};

}  // namespace detail

// Size of a maximum matching in the strict-order bipartite graph on S.
inline int chain_matching_size(const NoncompactPoset& P, const Bitset& S) {
  detail::Matcher M(P, S);
  return M.run();
}

// Width of the induced subposet on S: |S| minus a maximum matching (minimum chain cover).
inline int width_of(const NoncompactPoset& P, const Bitset& S) {
  return static_cast<int>(S.count()) - chain_matching_size(P, S);
}

struct WidthResult {
  int m = 0;
  std::vector<int> witness;  // lexicographically smallest maximum antichain
};

inline WidthResult width(const NoncompactPoset& P, const Bitset& S) {
  WidthResult res;
  res.m = width_of(P, S);
  // Greedy in index order: keep x if some maximum antichain contains the chosen set plus x.
  Bitset free = S;  // elements still incomparable with everything chosen
  int need = res.m;
  for (auto x = S.find_first(); x != Bitset::npos && need > 0; x = S.find_next(x)) {
    if (!free.test(x)) continue;
    Bitset rest = free;
    rest.reset(x);
    rest -= P.below[x];
    rest -= P.above[x];
    if (1 + width_of(P, rest) == need) {
      res.witness.push_back(static_cast<int>(x));
      free = rest;
      --need;
    } else {
      free.reset(x);
    }
  }
  require(need == 0, ErrorKind::Internal, "antichain witness recovery failed");
  return res;
}

// Greedy linear scan for the width of the short-root part of a symplectic diagram.
inline int width_fast_sp(const std::vector<Rational>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i + 1 < n; ++i)
    require(t[i] > t[i + 1], ErrorKind::InvalidArgument, "width_fast_sp: input must be strictly decreasing");
  int m = 0;
  int i = 0;  // candidate i_k must exceed the previous i
  for (int j = n - 1; j > i; --j) {
    while (i < j && t[i] + t[j] > Rational(0)) ++i;
    if (i >= j) break;
    ++m;
    ++i;
  }
  return m;
}

// Every downset exactly once, by reverse search: the parent of D drops its
// highest-index maximal element, so each D has a unique generation path.
inline void for_each_downset(const NoncompactPoset& P, const std::function<void(const Bitset&)>& visit) {
  const int n = static_cast<int>(P.size());
  Bitset cur(n);
  std::function<void()> rec = [&]() {
    visit(cur);
    for (int x = 0; x < n; ++x) {
      if (cur.test(x) || !P.below[x].is_subset_of(cur)) continue;
      // x becomes maximal; it must beat every other maximal element of cur + x.
      bool ok = true;
      for (int y = x + 1; y < n && ok; ++y)
        if (cur.test(y) && !(P.above[y] & cur).any() && !P.less(y, x)) ok = false;
      if (!ok) continue;
      cur.set(x);
      rec();
      cur.reset(x);
    }
  };
  rec();
}

inline std::vector<Bitset> enumerate_downsets(const NoncompactPoset& P) {
  std::vector<Bitset> out;
  for_each_downset(P, [&](const Bitset& b) { out.push_back(b); });
  return out;
}

// A_k = noncompact roots of height (k-1)c + 1, k = 1..r.
inline std::vector<std::vector<int>> distinguished_antichains(const RootSystemData& rs, const NoncompactPoset& P) {
  auto c = rs.type.antichain_step();
  require(c.has_value(), ErrorKind::InvalidArgument,
          "distinguished antichains are defined only for simply laced types, not " + rs.type.name());
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= rs.type.real_rank(); ++k) {
    std::vector<int> a;
    for (std::size_t i = 0; i < P.size(); ++i)
      if (P.roots[i].height() == (k - 1) * *c + 1) a.push_back(static_cast<int>(i));
    out.push_back(a);
  }
  return out;
}

inline std::string emit_hasse_dot(const RootSystemData& rs, const NoncompactPoset& P) {
  std::ostringstream os;
  os << "digraph \"" << rs.type.name() << "\" {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    os << "  n" << i << " [label=\"" << twice_coords_string(P.roots[i].twice) << "\"];\n";
  for (const auto& e : P.hasse)
    os << "  n" << e.lower << " -> n" << e.upper << " [label=\"" << (e.label + 1) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hwav
