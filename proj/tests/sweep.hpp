#pragma once

// Grids of compact-dominant lambda+rho for each family, shared by unit tests and the acceptance run.

#include <functional>
#include <vector>

#include "hwav/hwav.hpp"

namespace sweep {

using hwav::Rational;
using hwav::Weight;

inline const std::vector<Rational>& offsets() {
  static const std::vector<Rational> o{Rational(0), Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  return o;
}

// All strictly decreasing k-tuples from [lo, hi].
inline void decreasing_tuples(int k, int lo, int hi, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      rec(v - 1);
      cur.pop_back();
    }
  };
  rec(hi);
}

// Every grid point is strictly dominant for the compact roots by construction.
inline std::vector<Weight> grid(const hwav::Context& ctx, int window) {
  using hwav::Family;
  const auto& t = ctx.type();
  std::vector<Weight> out;
  switch (t.family) {
    case Family::SU:
      decreasing_tuples(t.p, -window, window, [&](const std::vector<int>& a) {
        decreasing_tuples(t.q, -window, window, [&](const std::vector<int>& b) {
          for (const auto& f : offsets()) {
            Weight w;
            for (int x : a) w.emplace_back(x);
            for (int x : b) w.push_back(Rational(x) + f);
            out.push_back(w);
          }
        });
      });
      break;
    case Family::SP:
    case Family::SOSTAR:
      decreasing_tuples(t.n, -window, window, [&](const std::vector<int>& a) {
        for (const auto& f : offsets()) {
          Weight w;
          for (int x : a) w.push_back(Rational(x) + f);
          out.push_back(w);
        }
      });
      break;
    case Family::SO_ODD:
    case Family::SO_EVEN: {
      // Tail t_2..t_n: positive (so_odd) or with |t_n| < t_{n-1} (so_even), all in Z or all in 1/2+Z.
      const bool odd = t.family == Family::SO_ODD;
      for (Rational tail_shift : {Rational(0), Rational(1, 2)}) {
        decreasing_tuples(t.n - 1, odd ? 0 : -window, window, [&](const std::vector<int>& b) {
          Weight tail;
          for (int x : b) tail.push_back(Rational(x) + tail_shift);
          for (std::size_t i = 0; i < tail.size(); ++i)
            if (odd && tail[i] <= Rational(0)) return;
          if (!odd) {
            Rational last = tail.back() < Rational(0) ? -tail.back() : tail.back();
            if (tail.size() >= 2 && !(tail[tail.size() - 2] > last)) return;
          }
          for (int head = -window; head <= window; ++head)
            for (const auto& f : offsets()) {
              Weight w{Rational(head) + f};
              w.insert(w.end(), tail.begin(), tail.end());
              out.push_back(w);
            }
        });
      }
      break;
    }
    case Family::E6:
    case Family::E7: {
      const int r = ctx.rs.rank(), nc = ctx.rs.noncompact_simple_index;
      std::vector<Rational> labels(r, Rational(1));
      std::function<void(int)> rec = [&](int i) {
        if (i == r) {
          out.push_back(ctx.rs.from_coroot_labels(labels));
          return;
        }
        if (i == nc) {
          for (int c = -4 * window; c <= 2; ++c)
            for (const auto& f : offsets()) {
              labels[i] = Rational(c) + f;
              rec(i + 1);
            }
          return;
        }
        for (int c = 1; c <= 2; ++c) {
          labels[i] = Rational(c);
          rec(i + 1);
        }
      };
      rec(0);
      break;
    }
  }
  return out;
}

}  // namespace sweep
