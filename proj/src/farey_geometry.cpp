#include "pantsgraph/farey_geometry.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pantsgraph/modular_group.hpp"

namespace pantsgraph {

namespace {

constexpr double kEdgeTol = 1e-12;

Geodesic edge_geodesic(const Slope& a, const Slope& b) {
  return geodesic_through(BoundaryPoint(a), BoundaryPoint(b));
}

// Signed side of the realized edge (u, v): positive above/outside.
double edge_side(const Slope& u, const Slope& v, double x, double y) {
  if (u.is_infinite() || v.is_infinite()) {
    double foot = u.is_infinite() ? v.value() : u.value();
    return x - foot;
  }
  double c = 0.5 * (u.value() + v.value());
  double r = 0.5 * std::abs(u.value() - v.value());
  return (x - c) * (x - c) + y * y - r * r;
}

// Is z strictly inside the disk under the semicircular edge (u, v)?
// Points within kEdgeTol of the circle count as outside, which steers the
// mediant descent to the shallower triangle.
bool below_edge(const Slope& u, const Slope& v, const UHPoint& z) {
  double c = 0.5 * (u.value() + v.value());
  double r = 0.5 * std::abs(u.value() - v.value());
  return std::hypot(z.x - c, z.y) < r - kEdgeTol;
}

}  // namespace

IdealTriangle realize(const FareyTriangle& t) {
  return {t,
          {edge_geodesic(t.v1(), t.v2()), edge_geodesic(t.v0(), t.v2()),
           edge_geodesic(t.v0(), t.v1())}};
}

bool triangle_contains(const FareyTriangle& t, const UHPoint& z, double tol) {
  const Slope* v[3] = {&t.v0(), &t.v1(), &t.v2()};
  for (int i = 0; i < 3; ++i) {
    const Slope& u = *v[(i + 1) % 3];
    const Slope& w = *v[(i + 2) % 3];
    const Slope& opposite = *v[i];
    double sz = edge_side(u, w, z.x, z.y);
    double so;
    if (opposite.is_infinite()) {
      so = 1.0;  // infinity lies above every semicircle
    } else {
      so = edge_side(u, w, opposite.value(), 0.0);
    }
    if (std::abs(sz) <= tol || sz * so <= 0.0) return false;
  }
  return true;
}

FareyTriangle locate_triangle(const UHPoint& z) {
  double rounded = std::round(z.x);
  double strip;
  if (std::abs(z.x - rounded) <= kEdgeTol) {
    strip = rounded - 1.0;  // vertical-edge rule: take the left strip
  } else {
    strip = std::floor(z.x);
  }
  if (std::abs(strip) > 9.0e15) {
    throw std::domain_error("locate_triangle: x-coordinate out of supported range");
  }
  BigInt n(static_cast<long long>(strip));
  Slope u = Slope::make(n, 1);
  Slope v = Slope::make(n + 1, 1);
  if (!below_edge(u, v, z)) return {u, v, Slope::infinity()};
  for (int iter = 0; iter < 200000; ++iter) {
    Slope m = mediant(u, v);
    if (below_edge(u, m, z)) {
      v = std::move(m);
    } else if (below_edge(m, v, z)) {
      u = std::move(m);
    } else {
      return {u, m, v};
    }
  }
  throw std::runtime_error("locate_triangle: mediant descent did not terminate");
}

std::vector<FareyTriangle> cutting_sequence(const Slope& a, const Slope& b) {
  if (a == b) throw std::invalid_argument("cutting_sequence: endpoints coincide");
  if (is_adjacent(a, b)) return {};
  // Normalize a to infinity; the geodesic becomes the vertical line over
  // bp = M*b, and the crossed triangles are the strip triangle over
  // floor(bp) followed by the mediant-descent chain down to bp.
  IntMatrix2 completion = completion_matrix(a);
  Slope bp = act_on_slope(completion.inverse(), b);
  // bp has q >= 2: q == 0 would mean b == a and q == 1 adjacency.
  BigInt fl = floor_div(bp.p(), bp.q());
  Slope u = Slope::make(fl, 1);
  Slope v = Slope::make(fl + 1, 1);
  std::vector<FareyTriangle> sequence;
  sequence.emplace_back(u, v, Slope::infinity());
  while (true) {
    Slope m = mediant(u, v);
    sequence.emplace_back(u, m, v);
    if (m == bp) break;
    if (bp < m) {
      v = std::move(m);
    } else {
      u = std::move(m);
    }
  }
  for (FareyTriangle& t : sequence) {
    t = FareyTriangle(act_on_slope(completion, t.v0()), act_on_slope(completion, t.v1()),
                      act_on_slope(completion, t.v2()));
  }
  return sequence;
}

namespace {

struct SvgCanvas {
  double xmin, xmax, ymax, scale;
  std::string body;

  double px(double x) const { return (x - xmin) * scale; }
  double py(double y) const { return (ymax - y) * scale; }

  void add(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    body += buf;
  }

  void add_geodesic(const Geodesic& g, const std::string& attrs) {
    if (g.kind() == Geodesic::Kind::Vertical) {
      double x = px(g.foot());
      add("  <line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\"%s/>\n", x, py(0.0), x,
          py(ymax), attrs.c_str());
    } else {
      double r = g.radius() * scale;
      add("  <path d=\"M %.4f %.4f A %.4f %.4f 0 0 1 %.4f %.4f\"%s/>\n",
          px(g.center() - g.radius()), py(0.0), r, r, px(g.center() + g.radius()), py(0.0),
          attrs.c_str());
    }
  }
};

void collect_strip_edges(const Slope& a, const Slope& b, int depth, const Viewport& vp,
                         std::vector<FareyEdge>& out) {
  double lo = a.value(), hi = b.value();
  if (hi < vp.xmin || lo > vp.xmax) return;
  out.emplace_back(a, b);
  Slope m = mediant(a, b);
  if (m.q() <= depth) {
    collect_strip_edges(a, m, depth, vp, out);
    collect_strip_edges(m, b, depth, vp, out);
  }
}

}  // namespace

std::string render_svg(const Viewport& vp, int depth, const std::vector<Geodesic>& overlays) {
  if (!(vp.xmin < vp.xmax) || !(vp.ymax > 0.0)) {
    throw std::invalid_argument("render: empty viewport");
  }
  if (depth < 1 || depth > 20) {
    throw std::invalid_argument("render: depth must be between 1 and 20");
  }
  if (std::abs(vp.xmin) > 1e9 || std::abs(vp.xmax) > 1e9) {
    throw std::invalid_argument("render: viewport out of supported range");
  }

  std::vector<FareyEdge> edges;
  long n0 = static_cast<long>(std::floor(vp.xmin));
  long n1 = static_cast<long>(std::ceil(vp.xmax));
  for (long n = n0; n <= n1; ++n) {
    if (n >= vp.xmin && n <= vp.xmax) {
      edges.emplace_back(Slope::make(n, 1), Slope::infinity());
    }
  }
  for (long n = n0; n < n1; ++n) {
    collect_strip_edges(Slope::make(n, 1), Slope::make(n + 1, 1), depth, vp, edges);
  }

  SvgCanvas canvas{vp.xmin, vp.xmax, vp.ymax, 720.0 / (vp.xmax - vp.xmin), {}};
  double width = 720.0;
  double height = vp.ymax * canvas.scale;

  std::string head;
  {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.4f %.4f\">\n"
                  "<defs><clipPath id=\"vp\"><rect x=\"0\" y=\"0\" width=\"%.4f\" "
                  "height=\"%.4f\"/></clipPath></defs>\n"
                  "<rect x=\"0\" y=\"0\" width=\"%.4f\" height=\"%.4f\" fill=\"white\"/>\n",
                  width, height, width, height, width, height, width, height);
    head = buf;
  }

  canvas.body += "<g clip-path=\"url(#vp)\" stroke=\"#345\" stroke-width=\"1\" fill=\"none\">\n";
  for (const FareyEdge& e : edges) {
    std::string attrs = " data-edge=\"" + e.low().str() + ":" + e.high().str() + "\"";
    canvas.add_geodesic(edge_geodesic(e.low(), e.high()), attrs);
  }
  canvas.body += "</g>\n";
  if (!overlays.empty()) {
    canvas.body +=
        "<g clip-path=\"url(#vp)\" class=\"overlay\" stroke=\"#c2372d\" stroke-width=\"2\" "
        "fill=\"none\">\n";
    for (const Geodesic& g : overlays) canvas.add_geodesic(g, "");
    canvas.body += "</g>\n";
  }
  return head + canvas.body + "</svg>\n";
}

}  // namespace pantsgraph
