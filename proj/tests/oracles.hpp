#pragma once

// Brute-force reference computations shared by the unit tests and the
// acceptance binary. None of these call into the library's algorithms.

#include "conecy/exact.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using conecy::Integer;
using conecy::Rational;

/// Leibniz expansion over all permutations.
inline Integer leibniz_det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Gauss-Jordan over the rationals. Returns an empty matrix if singular.
inline std::vector<std::vector<Rational>> gauss_jordan_inverse(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

using Point = std::pair<long long, long long>;

/// Lattice points on the compact boundary of conv((σ ∩ ℤ²) \ {0}) for
/// σ = ⟨(0,1), (r, r-a)⟩, strictly between the two generators, walked from
/// (0,1) by repeatedly taking the smallest outgoing slope (nearest point on ties).
inline std::vector<Point> hull_boundary_rays(long long r, long long a) {
  const long long vx = r, vy = r - a;
  std::vector<Point> pts;
  for (long long x = 1; x <= r; ++x)
    for (long long y = 1; y <= r; ++y)
      if (y * vx - x * vy >= 0) pts.emplace_back(x, y);  // on or above the ray through v

  std::vector<Point> out;
  Point p{0, 1};
  while (p != Point{vx, vy}) {
    const Point* best = nullptr;
    for (const auto& q : pts) {
      if (q.first <= p.first) continue;
      if (!best) {
        best = &q;
        continue;
      }
      const long long dx = q.first - p.first, dy = q.second - p.second;
      const long long bx = best->first - p.first, by = best->second - p.second;
      const long long cross = dy * bx - by * dx;  // < 0: q has the smaller slope
      if (cross < 0 || (cross == 0 && dx < bx)) best = &q;
    }
    p = *best;
    if (p != Point{vx, vy}) out.push_back(p);
  }
  return out;
}

/// Number of lattice points in the half-open parallelepiped Σ t_i g_i, t ∈ [0,1)^n,
/// found by scanning a bounding box and solving by Cramer's rule.
inline long long parallelepiped_points(const std::vector<std::vector<long long>>& g) {
  const std::size_t n = g.size();
  std::vector<long long> lo(n, 0), hi(n, 0);
  for (const auto& v : g)
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] < 0) lo[k] += v[k];
      else hi[k] += v[k];
    }
  std::vector<std::vector<long long>> cols(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) cols[k][i] = g[i][k];
  const Integer d = leibniz_det(cols);
  long long count = 0;
  std::vector<long long> x(lo);
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
      auto m = cols;
      for (std::size_t k = 0; k < n; ++k) m[k][i] = x[k];
      const Rational t = conecy::ratio(leibniz_det(m), d);
      inside = t >= 0 && t < 1;
    }
    if (inside) ++count;
    std::size_t k = 0;
    while (k < n && ++x[k] > hi[k]) x[k] = lo[k], ++k;
    if (k == n) break;
  }
  return count;
}

}  // namespace oracle
