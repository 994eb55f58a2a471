#pragma once

#include <array>
#include <string>
#include <vector>

#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/slope.hpp"

namespace pantsgraph {

/// A Farey triangle together with its three realized geodesic edges.
/// edges[i] joins the two vertices other than vertex i.
struct IdealTriangle {
  FareyTriangle triangle;
  std::array<Geodesic, 3> edges;
};

IdealTriangle realize(const FareyTriangle& t);

/// Strict interior test against the three realized edges: z must sit on the
/// same side as the opposite vertex of each edge, clear of the edge by tol.
bool triangle_contains(const FareyTriangle& t, const UHPoint& z, double tol = 1e-12);

/// The Farey triangle whose ideal realization contains z, found by mediant
/// descent from the integer strips. Points on a tessellation edge (within
/// 1e-12) resolve to the triangle of smaller subdivision depth; on a vertical
/// edge, to the strip containing the leftmost vertex.
FareyTriangle locate_triangle(const UHPoint& z);

/// The ordered run of tessellation triangles whose open interiors the
/// geodesic from a to b crosses. Empty exactly when the slopes are adjacent
/// (the geodesic is itself an edge). Exact integer arithmetic throughout.
/// Rejects a == b.
std::vector<FareyTriangle> cutting_sequence(const Slope& a, const Slope& b);

struct Viewport {
  double xmin;
  double xmax;
  double ymax;  // ymin is pinned at 0
};

/// SVG rendering of the tessellation: every edge with both endpoint
/// denominators <= depth meeting the viewport, plus overlay geodesics in a
/// distinct style. depth must be in [1, 20].
std::string render_svg(const Viewport& vp, int depth, const std::vector<Geodesic>& overlays);

}  // namespace pantsgraph
