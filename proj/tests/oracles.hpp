// Test-side oracles. These stay independent of the production algorithms they
// check: neighbor sets by brute-force scan, distances by plain single-source
// BFS over a materialized graph, hyperbolic lengths by quadrature, and
// triangle crossings by exact endpoint interleaving on the boundary circle.
#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <vector>

#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/slope.hpp"

namespace oracles {

using pantsgraph::BigInt;
using pantsgraph::FareyTriangle;
using pantsgraph::Slope;
using pantsgraph::UHPoint;

inline std::vector<Slope> scan_slopes(long bound) {
  std::vector<Slope> out;
  out.push_back(Slope::infinity());
  for (long q = 1; q <= bound; ++q) {
    for (long p = -bound; p <= bound; ++p) {
      if (std::gcd(std::labs(p), q) == 1) out.push_back(Slope::make(p, q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool det_adjacent(const Slope& a, const Slope& b) {
  BigInt det = a.p() * b.q() - a.q() * b.p();
  return det == 1 || det == -1;
}

inline std::vector<Slope> scan_neighbors(const Slope& a, long bound) {
  std::vector<Slope> out;
  for (const Slope& s : scan_slopes(bound)) {
    if (det_adjacent(a, s)) out.push_back(s);
  }
  return out;
}

// Single-source BFS over the subgraph |p|, q <= bound; -1 when unreachable.
inline long bfs_distance(const Slope& a, const Slope& b, long bound) {
  std::vector<Slope> vertices = scan_slopes(bound);
  auto index = [&](const Slope& s) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
    return static_cast<int>(it - vertices.begin());
  };
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (det_adjacent(vertices[i], vertices[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::vector<int> dist(n, -1);
  std::queue<int> queue;
  dist[index(a)] = 0;
  queue.push(index(a));
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist[index(b)];
}

// Hyperbolic distance by Simpson quadrature of |dz|/y along the connecting
// geodesic (vertical segment or circular arc).
inline double quadrature_distance(const UHPoint& z, const UHPoint& w) {
  if (std::abs(z.x - w.x) < 1e-14) {
    return std::abs(std::log(w.y / z.y));
  }
  double c = (w.x * w.x + w.y * w.y - z.x * z.x - z.y * z.y) / (2.0 * (w.x - z.x));
  double theta1 = std::atan2(z.y, z.x - c);
  double theta2 = std::atan2(w.y, w.x - c);
  if (theta1 > theta2) std::swap(theta1, theta2);
  const int segments = 200000;  // Simpson with even segment count
  double h = (theta2 - theta1) / segments;
  auto f = [](double t) { return 1.0 / std::sin(t); };
  double sum = f(theta1) + f(theta2);
  for (int i = 1; i < segments; ++i) {
    sum += f(theta1 + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Do the chords (a, b) and (u, v) of the boundary circle strictly cross?
inline bool chords_cross(const Slope& a, const Slope& b, const Slope& u, const Slope& v) {
  if (a == u || a == v || b == u || b == v) return false;
  auto strictly_between = [](const Slope& lo, const Slope& hi, const Slope& x) {
    return lo < x && x < hi;
  };
  bool ab_has_inf = a.is_infinite() || b.is_infinite();
  bool uv_has_inf = u.is_infinite() || v.is_infinite();
  if (ab_has_inf && uv_has_inf) return false;  // parallel verticals
  if (ab_has_inf) {
    const Slope& foot = a.is_infinite() ? b : a;
    Slope lo = u < v ? u : v;
    Slope hi = u < v ? v : u;
    return strictly_between(lo, hi, foot);
  }
  if (uv_has_inf) return chords_cross(u, v, a, b);
  Slope lo = a < b ? a : b;
  Slope hi = a < b ? b : a;
  return strictly_between(lo, hi, u) != strictly_between(lo, hi, v);
}

// Does the geodesic from a to b pass through the open ideal triangle t?
inline bool crosses_triangle(const Slope& a, const Slope& b, const FareyTriangle& t) {
  const Slope* v[3] = {&t.v0(), &t.v1(), &t.v2()};
  for (int i = 0; i < 3; ++i) {
    if (*v[i] == a) {
      return chords_cross(*v[(i + 1) % 3], *v[(i + 2) % 3], a, b);
    }
    if (*v[i] == b) {
      return chords_cross(*v[(i + 1) % 3], *v[(i + 2) % 3], b, a);
    }
  }
  int crossings = 0;
  for (int i = 0; i < 3; ++i) {
    if (chords_cross(a, b, *v[i], *v[(i + 1) % 3])) ++crossings;
  }
  return crossings == 2;
}

}  // namespace oracles
