#pragma once

#include <array>
#include <string>
#include <variant>

#include "pantsgraph/modular_group.hpp"
#include "pantsgraph/slope.hpp"

namespace pantsgraph {

/// A point of the open upper half-plane (y > 0, enforced).
struct UHPoint {
  double x;
  double y;
  UHPoint(double x_, double y_);
  friend bool operator==(const UHPoint&, const UHPoint&) = default;
};

/// A point of the boundary circle R u {inf}. Rational boundary points keep
/// their exact Slope so combinatorial decisions never pass through floats.
class BoundaryPoint {
 public:
  BoundaryPoint(double value);          // NOLINT: implicit by design
  BoundaryPoint(const Slope& s) : rep_(s) {}  // NOLINT
  static BoundaryPoint infinity() { return BoundaryPoint(Slope::infinity()); }

  bool is_rational() const { return std::holds_alternative<Slope>(rep_); }
  bool is_infinite() const;
  const Slope& slope() const;  // throws when not rational
  /// Finite real value; throws for the point at infinity.
  double value() const;

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b);

 private:
  std::variant<Slope, double> rep_;
};

/// A complete geodesic of the half-plane: a vertical line or a semicircle
/// meeting the real axis perpendicularly.
class Geodesic {
 public:
  enum class Kind { Vertical, Semicircle };

  static Geodesic vertical(double foot);
  static Geodesic semicircle(double center, double radius);  // radius > 0

  Kind kind() const { return kind_; }
  double foot() const;    // Vertical only
  double center() const;  // Semicircle only
  double radius() const;  // Semicircle only

 private:
  Geodesic(Kind k, double a, double b) : kind_(k), center_(a), radius_(b) {}
  Kind kind_;
  double center_;  // foot for verticals
  double radius_;
};

/// Hyperbolic distance, computed as 2 asinh(sqrt((dx^2+dy^2)/(4 y1 y2)))
/// (stable for nearby points).
double hyp_distance(const UHPoint& z, const UHPoint& w);

/// The unique complete geodesic through two distinct points of the closed
/// half-plane. Vertical when an endpoint is infinity or the x-coordinates
/// agree (within 1e-12 for inexact input; exactly for rational boundary
/// input). Rejects equal inputs.
Geodesic geodesic_through(const BoundaryPoint& a, const BoundaryPoint& b);
Geodesic geodesic_through(const UHPoint& z, const BoundaryPoint& b);
Geodesic geodesic_through(const UHPoint& z, const UHPoint& w);

using GeodesicEnd = std::variant<UHPoint, BoundaryPoint>;
Geodesic geodesic_through(const GeodesicEnd& a, const GeodesicEnd& b);

/// Moebius action for det +1, conjugate-Moebius for det -1. Isometric either
/// way; the image stays in the upper half-plane.
UHPoint apply_isometry(const IntMatrix2& m, const UHPoint& z);

/// Unit-speed arclength parameterization. Verticals pass through height 1 at
/// t = 0 and flow upward; semicircles start at the apex and flow toward the
/// right ideal endpoint.
UHPoint point_at_parameter(const Geodesic& g, double t);

/// Angle in [0, 2pi) of the initial velocity of the geodesic from base toward
/// the boundary target, measured in the (conformally correct) Euclidean
/// tangent plane. Continuous and injective in the target.
double direction_at(const UHPoint& base, const BoundaryPoint& target);

/// The forward ideal endpoint of the ray from base with direction phi;
/// infinite for phi = pi/2. Inverse of direction_at.
BoundaryPoint ray_endpoint(const UHPoint& base, double phi);

/// An equilateral triangle of side L with the apex at i and the base below,
/// symmetric about the imaginary axis. Vertex order: apex, left, right.
std::array<UHPoint, 3> equilateral_triangle(double side);

/// Difference of angles reduced to [0, pi].
double angle_distance(double a, double b);

}  // namespace pantsgraph
