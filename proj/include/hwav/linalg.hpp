#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hwav/error.hpp"
#include "hwav/rational.hpp"

namespace hwav {

using Matrix = std::vector<std::vector<Rational>>;

// Solves A x = b exactly for a square nonsingular A.
inline std::vector<Rational> solve_square(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  require(b.size() == n, ErrorKind::InvalidArgument, "solve_square: size mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rational(0)) ++piv;
    require(piv < n, ErrorKind::Internal, "solve_square: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace hwav
