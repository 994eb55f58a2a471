#include "pantsgraph/hyperbolic.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pantsgraph {

namespace {
constexpr double kVerticalTol = 1e-12;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

UHPoint::UHPoint(double x_, double y_) : x(x_), y(y_) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("half-plane point needs finite coordinates with y > 0");
  }
}

BoundaryPoint::BoundaryPoint(double value) : rep_(value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("real boundary point must be finite; use Slope 1/0 for infinity");
  }
}

bool BoundaryPoint::is_infinite() const {
  return is_rational() && std::get<Slope>(rep_).is_infinite();
}

const Slope& BoundaryPoint::slope() const {
  if (!is_rational()) throw std::logic_error("boundary point is not rational");
  return std::get<Slope>(rep_);
}

double BoundaryPoint::value() const {
  if (is_rational()) {
    const Slope& s = std::get<Slope>(rep_);
    if (s.is_infinite()) throw std::domain_error("boundary point at infinity has no real value");
    return s.value();
  }
  return std::get<double>(rep_);
}

bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.is_rational() && b.is_rational()) return a.slope() == b.slope();
  if (a.is_infinite() || b.is_infinite()) return false;
  return a.value() == b.value();
}

Geodesic Geodesic::vertical(double foot) {
  if (!std::isfinite(foot)) throw std::invalid_argument("vertical geodesic needs a finite foot");
  return Geodesic(Kind::Vertical, foot, 0.0);
}

Geodesic Geodesic::semicircle(double center, double radius) {
  if (!std::isfinite(center) || !(radius > 0.0)) {
    throw std::invalid_argument("semicircle geodesic needs a positive radius");
  }
  return Geodesic(Kind::Semicircle, center, radius);
}

double Geodesic::foot() const {
  if (kind_ != Kind::Vertical) throw std::logic_error("foot() on a semicircle");
  return center_;
}

double Geodesic::center() const {
  if (kind_ != Kind::Semicircle) throw std::logic_error("center() on a vertical");
  return center_;
}

double Geodesic::radius() const {
  if (kind_ != Kind::Semicircle) throw std::logic_error("radius() on a vertical");
  return radius_;
}

double hyp_distance(const UHPoint& z, const UHPoint& w) {
  double dx = z.x - w.x;
  double dy = z.y - w.y;
  double u = (dx * dx + dy * dy) / (4.0 * z.y * w.y);
  return 2.0 * std::asinh(std::sqrt(u));
}

Geodesic geodesic_through(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a == b) throw std::invalid_argument("geodesic_through: endpoints coincide");
  if (a.is_infinite()) return Geodesic::vertical(b.value());
  if (b.is_infinite()) return Geodesic::vertical(a.value());
  double u = a.value(), v = b.value();
  if (u == v) throw std::invalid_argument("geodesic_through: endpoints coincide numerically");
  if (!a.is_rational() || !b.is_rational()) {
    // Inexact input: collapse near-coincident feet to a vertical.
    if (std::abs(u - v) < kVerticalTol) return Geodesic::vertical(0.5 * (u + v));
  }
  return Geodesic::semicircle(0.5 * (u + v), 0.5 * std::abs(u - v));
}

Geodesic geodesic_through(const UHPoint& z, const BoundaryPoint& b) {
  if (b.is_infinite()) return Geodesic::vertical(z.x);
  double t = b.value();
  if (std::abs(z.x - t) < kVerticalTol) return Geodesic::vertical(t);
  // (z.x - c)^2 + z.y^2 = (t - c)^2
  double c = (t * t - z.x * z.x - z.y * z.y) / (2.0 * (t - z.x));
  return Geodesic::semicircle(c, std::abs(t - c));
}

Geodesic geodesic_through(const UHPoint& z, const UHPoint& w) {
  if (z == w) throw std::invalid_argument("geodesic_through: points coincide");
  if (std::abs(z.x - w.x) < kVerticalTol) return Geodesic::vertical(0.5 * (z.x + w.x));
  double c = (w.x * w.x + w.y * w.y - z.x * z.x - z.y * z.y) / (2.0 * (w.x - z.x));
  return Geodesic::semicircle(c, std::hypot(z.x - c, z.y));
}

Geodesic geodesic_through(const GeodesicEnd& a, const GeodesicEnd& b) {
  return std::visit(
      [](const auto& lhs, const auto& rhs) -> Geodesic {
        using L = std::decay_t<decltype(lhs)>;
        using R = std::decay_t<decltype(rhs)>;
        if constexpr (std::is_same_v<L, BoundaryPoint> && std::is_same_v<R, UHPoint>) {
          return geodesic_through(rhs, lhs);
        } else {
          return geodesic_through(lhs, rhs);
        }
      },
      a, b);
}

UHPoint apply_isometry(const IntMatrix2& m, const UHPoint& z) {
  std::complex<double> zc(z.x, z.y);
  if (m.det() == -1) zc = std::conj(zc);
  std::complex<double> num = to_double(m.a()) * zc + to_double(m.b());
  std::complex<double> den = to_double(m.c()) * zc + to_double(m.d());
  std::complex<double> w = num / den;
  if (!(w.imag() > 0.0) || !std::isfinite(w.imag()) || !std::isfinite(w.real())) {
    throw std::domain_error("apply_isometry: image left the upper half-plane (numeric range)");
  }
  return {w.real(), w.imag()};
}

UHPoint point_at_parameter(const Geodesic& g, double t) {
  if (g.kind() == Geodesic::Kind::Vertical) {
    return {g.foot(), std::exp(t)};
  }
  double c = g.center(), r = g.radius();
  return {c + r * std::tanh(t), r / std::cosh(t)};
}

double direction_at(const UHPoint& base, const BoundaryPoint& target) {
  if (target.is_infinite()) return 1.5707963267948966;  // straight up
  double t = target.value();
  if (t == base.x) return 4.71238898038469;  // straight down
  double c = (t * t - base.x * base.x - base.y * base.y) / (2.0 * (t - base.x));
  // Tangent at base is perpendicular to the radius (base.x - c, base.y),
  // oriented so the x-velocity points toward the target.
  double vx, vy;
  if (t > base.x) {
    vx = base.y;
    vy = c - base.x;
  } else {
    vx = -base.y;
    vy = base.x - c;
  }
  double phi = std::atan2(vy, vx);
  if (phi < 0) phi += kTwoPi;
  return phi;
}

BoundaryPoint ray_endpoint(const UHPoint& base, double phi) {
  double c = std::cos(phi);
  if (std::abs(c) < 1e-15) {
    if (std::sin(phi) > 0) return BoundaryPoint::infinity();
    return BoundaryPoint(base.x);
  }
  // Forward ideal endpoint of the circle with tangent (cos phi, sin phi):
  // x + y (1 + sin phi)/cos phi, i.e. x + y tan(pi/4 + phi/2).
  return BoundaryPoint(base.x + base.y * (1.0 + std::sin(phi)) / c);
}

std::array<UHPoint, 3> equilateral_triangle(double side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("equilateral_triangle: side length must be positive");
  }
  // Apex at i; base vertices (+-u, v). The base condition gives
  // u^2 = K v^2 / 2 with K = cosh(side) - 1, and substituting into the leg
  // condition leaves (K+2) v^2 - 4(K+1) v + 2 = 0, whose stable small root is
  // v = 2 / (2(K+1) + sqrt(2K(2K+3))).
  double K = std::cosh(side) - 1.0;
  double v = 2.0 / (2.0 * (K + 1.0) + std::sqrt(2.0 * K * (2.0 * K + 3.0)));
  double u = std::sqrt(0.5 * K) * v;
  return {UHPoint(0.0, 1.0), UHPoint(-u, v), UHPoint(u, v)};
}

double angle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return d > 0.5 * kTwoPi ? kTwoPi - d : d;
}

}  // namespace pantsgraph
