#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

// Cantor anti-diagonal enumeration of NxN and the derived neighbour maps.
// Index k walks the diagonals: 0 -> (0,0), 1 -> (1,0), 2 -> (0,1), 3 -> (2,0), ...

namespace tilint::grid {

struct Point {
  std::uint64_t i = 0;  // column
  std::uint64_t j = 0;  // row
  friend bool operator==(const Point&, const Point&) = default;
};

namespace detail {

inline std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

// num(i,j) = (i+j)(i+j+1)/2 + j
inline std::uint64_t num(std::uint64_t i, std::uint64_t j) {
  const std::uint64_t s = i + j;
  if (s < i || s > (std::uint64_t{1} << 31)) throw std::overflow_error("grid::num: index out of 64-bit range");
  return s * (s + 1) / 2 + j;
}

inline std::uint64_t num(Point p) { return num(p.i, p.j); }

// Inverse of num, via integer inversion of the triangular number.
inline Point pair(std::uint64_t k) {
  if (k > (std::uint64_t{1} << 60)) throw std::overflow_error("grid::pair: index out of 64-bit range");
  const std::uint64_t s = (detail::isqrt(8 * k + 1) - 1) / 2;  // largest s with s(s+1)/2 <= k
  const std::uint64_t j = k - s * (s + 1) / 2;
  return Point{s - j, j};
}

inline std::uint64_t right(std::uint64_t k) {
  const Point p = pair(k);
  return num(p.i + 1, p.j);
}

inline std::uint64_t above(std::uint64_t k) {
  const Point p = pair(k);
  return num(p.i, p.j + 1);
}

inline bool wall(std::uint64_t k) { return pair(k).i == 0; }
inline bool floor(std::uint64_t k) { return pair(k).j == 0; }
inline std::uint64_t next(std::uint64_t k) { return k + 1; }

}  // namespace tilint::grid
