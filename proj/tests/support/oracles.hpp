#pragma once

// Test-side reference computations. Each one avoids the library routine it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "phasetrop/rational.hpp"

namespace oracle {

using phasetrop::IntVec;
using phasetrop::Rat;

/// Number of integer points in the half-open parallelogram spanned by the two rows.
/// For independent rows this is the index of their span in Z^2.
inline std::int64_t coset_count_2d(const IntVec& a, const IntVec& b) {
  const std::int64_t det = a[0] * b[1] - a[1] * b[0];
  if (det == 0) return 0;
  const std::int64_t lo_x = std::min({0L, a[0], b[0], a[0] + b[0]});
  const std::int64_t hi_x = std::max({0L, a[0], b[0], a[0] + b[0]});
  const std::int64_t lo_y = std::min({0L, a[1], b[1], a[1] + b[1]});
  const std::int64_t hi_y = std::max({0L, a[1], b[1], a[1] + b[1]});
  std::int64_t count = 0;
  for (std::int64_t x = lo_x; x <= hi_x; ++x) {
    for (std::int64_t y = lo_y; y <= hi_y; ++y) {
      // (x, y) = s*a + t*b
      const Rat s(x * b[1] - y * b[0], det);
      const Rat t(a[0] * y - a[1] * x, det);
      if (s >= Rat(0) && s < Rat(1) && t >= Rat(0) && t < Rat(1)) ++count;
    }
  }
  return count;
}

/// Membership in the two closed triangles of the standard planar line, on
/// exact turns. The triangles live in the square [-1/2, 1/2]^2; points of the
/// torus are tested through every lift landing in that square.
inline bool two_triangles(const Rat& a, const Rat& b) {
  const Rat half(1, 2);
  auto reduce = [](const Rat& x) { return x - Rat(phasetrop::arith::floor_div(x.num(), x.den())); };
  const Rat a0 = reduce(a);
  const Rat b0 = reduce(b);
  for (int i = -1; i <= 0; ++i) {
    for (int j = -1; j <= 0; ++j) {
      const Rat x = a0 + Rat(i);
      const Rat y = b0 + Rat(j);
      if (x < -half || x > half || y < -half || y > half) continue;
      // lower-right triangle (0,-1/2), (1/2,-1/2), (1/2,0)
      if (x - y >= half) return true;
      // upper-left triangle (-1/2,0), (-1/2,1/2), (0,1/2)
      if (y - x >= half) return true;
    }
  }
  return false;
}

namespace detail {

inline double wrap(double r) {
  const double two_pi = 2 * std::numbers::pi;
  r = std::fmod(r, two_pi);
  if (r > std::numbers::pi) r -= two_pi;
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

inline bool in_hexagon(double u, double v) {
  const double pi = std::numbers::pi;
  return std::abs(u) < pi && std::abs(v) < pi && std::abs(u - v) < pi;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Components of the complement of the pulled-back planar line coamoeba
/// {θ : A·θ mod 2π lies in the open hexagon}, counted on an n×n torus grid.
/// Two open cells up to `reach` steps apart are joined only when the straight
/// segment between them stays in one lifted hexagon, which by convexity
/// certifies the connection. A reach above 1 lets cells in acute corners of
/// a sheared hexagon find their component.
inline std::int64_t complement_components_2x2(const std::int64_t m[2][2], int n, int reach = 1) {
  const double h = 2 * std::numbers::pi / n;
  auto centre = [&](int k) { return -std::numbers::pi + (k + 0.5) * h; };
  std::vector<char> open(static_cast<std::size_t>(n) * n, 0);
  std::vector<double> lift_u(open.size());
  std::vector<double> lift_v(open.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a = centre(i);
      const double b = centre(j);
      const double u = detail::wrap(m[0][0] * a + m[0][1] * b);
      const double v = detail::wrap(m[1][0] * a + m[1][1] * b);
      const std::size_t id = static_cast<std::size_t>(i) * n + j;
      open[id] = detail::in_hexagon(u, v);
      lift_u[id] = u;
      lift_v[id] = v;
    }
  }
  // Offsets in a half-plane; the other half is covered from the far cell.
  std::vector<std::pair<int, int>> steps;
  for (int di = 0; di <= reach; ++di) {
    for (int dj = -reach; dj <= reach; ++dj) {
      if (di > 0 || dj > 0) steps.emplace_back(di, dj);
    }
  }
  detail::UnionFind uf(open.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t id = static_cast<std::size_t>(i) * n + j;
      if (!open[id]) continue;
      for (const auto& [di, dj] : steps) {
        const std::size_t other = static_cast<std::size_t>((i + di) % n) * n + static_cast<std::size_t>((j + dj + n) % n);
        if (!open[other]) continue;
        const double u = lift_u[id] + (m[0][0] * di + m[0][1] * dj) * h;
        const double v = lift_v[id] + (m[1][0] * di + m[1][1] * dj) * h;
        if (detail::in_hexagon(u, v)) uf.join(id, other);
      }
    }
  }
  std::int64_t count = 0;
  for (std::size_t id = 0; id < open.size(); ++id) {
    if (open[id] && uf.find(id) == id) ++count;
  }
  return count;
}

}  // namespace oracle
