#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pantsgraph/bigint.hpp"

namespace pantsgraph {

/// A reduced extended rational p/q. Canonical form: gcd(|p|, q) = 1, q >= 0,
/// and infinity is exactly 1/0. On a complexity-one surface a slope names a
/// simple closed curve; on the half-plane it names a rational boundary point.
class Slope {
 public:
  Slope() : p_(0), q_(1) {}

  /// Canonicalizing constructor; rejects (0, 0).
  static Slope make(BigInt p, BigInt q);
  static Slope infinity() { return Slope(1, 0); }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  /// Value as a double; +inf for the infinite slope.
  double value() const;

  std::string str() const;

  /// Parses "p/q" or a bare integer "p"; throws std::invalid_argument.
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope&, const Slope&) = default;

  /// Total order: finite slopes by value, infinity greatest.
  bool operator<(const Slope& other) const;

 private:
  Slope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {}
  BigInt p_, q_;
};

/// Farey adjacency: |p1*q2 - q1*p2| == 1.
bool is_adjacent(const Slope& a, const Slope& b);

/// The Farey mediant of an adjacent pair, oriented to positive determinant
/// before summing. Adjacent to both inputs. Rejects non-adjacent pairs.
Slope mediant(const Slope& a, const Slope& b);

/// All neighbors b of a with |b.p| <= bound and b.q <= bound, sorted by value
/// with infinity last. Requires bound >= 1.
std::vector<Slope> neighbors_bounded(const Slope& a, const BigInt& bound);

/// Combinatorial distance in the Farey graph. Bidirectional BFS restricted to
/// |p|, q <= B, with B starting at 4 * max(coordinates) and doubling until the
/// value is stable across two consecutive doublings. The stopping rule is a
/// heuristic (distance under a bound is nonincreasing in the bound); it is
/// validated against exhaustive search in the test suite.
long farey_distance(const Slope& a, const Slope& b);

/// A shortest path witnessing farey_distance: a = v0, ..., vd = b with
/// consecutive entries adjacent. Deterministic for fixed inputs.
std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b);

/// Every reduced slope with |p| <= bound and q <= bound (including 1/0),
/// sorted ascending. Requires bound >= 1.
std::vector<Slope> slopes_up_to(long bound);

/// The smallest-denominator rational strictly between lo and hi (exact
/// Stern-Brocot walk over the dyadic values of the doubles). Requires lo < hi.
Slope simplest_slope_between(double lo, double hi);

/// An unordered Farey edge; construction rejects non-adjacent endpoint pairs.
/// Endpoints are stored in increasing slope order.
class FareyEdge {
 public:
  FareyEdge(Slope a, Slope b);
  const Slope& low() const { return low_; }
  const Slope& high() const { return high_; }
  friend bool operator==(const FareyEdge&, const FareyEdge&) = default;

 private:
  Slope low_, high_;
};

/// An unordered Farey triangle: three pairwise-adjacent slopes, one of which
/// is the (sign-normalized) mediant of the other two. Vertices are stored in
/// increasing slope order.
class FareyTriangle {
 public:
  FareyTriangle(Slope a, Slope b, Slope c);
  const Slope& v0() const { return v_[0]; }
  const Slope& v1() const { return v_[1]; }
  const Slope& v2() const { return v_[2]; }
  const Slope& vertex(int i) const { return v_[i]; }
  bool has_vertex(const Slope& s) const;
  /// Vertices shared with another triangle (0..3).
  int shared_vertices(const FareyTriangle& other) const;
  friend bool operator==(const FareyTriangle&, const FareyTriangle&) = default;
  bool operator<(const FareyTriangle& other) const;

 private:
  Slope v_[3];
};

}  // namespace pantsgraph
