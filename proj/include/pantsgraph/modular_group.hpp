#pragma once

#include <string>
#include <string_view>

#include "pantsgraph/bigint.hpp"
#include "pantsgraph/slope.hpp"

namespace pantsgraph {

/// A 2x2 integer matrix of determinant +-1. Models a mapping class of the
/// complexity-one surface and, through the Moebius/conjugation action, an
/// isometry of the half-plane.
class IntMatrix2 {
 public:
  /// Validates det == +-1; throws std::invalid_argument otherwise.
  IntMatrix2(BigInt a, BigInt b, BigInt c, BigInt d);

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }
  /// T = [[1,1],[0,1]], the unit translation.
  static IntMatrix2 shear() { return {1, 1, 0, 1}; }
  /// S = [[0,-1],[1,0]], rotation by pi about i.
  static IntMatrix2 rotation() { return {0, -1, 1, 0}; }
  /// R = [[1,0],[0,-1]], the reflection z -> -conj(z).
  static IntMatrix2 reflection() { return {1, 0, 0, -1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  int det() const;  // +1 or -1
  IntMatrix2 inverse() const;
  IntMatrix2 operator*(const IntMatrix2& rhs) const;
  IntMatrix2 operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  /// Equality in PGL(2,Z): equal up to global sign.
  bool projectively_equal(const IntMatrix2& other) const;

  std::string str() const;  // "[[a,b],[c,d]]"

 private:
  BigInt a_, b_, c_, d_;
};

/// Boundary action: p/q -> (a p + b q)/(c p + d q). Preserves Farey adjacency.
Slope act_on_slope(const IntMatrix2& m, const Slope& s);

/// True iff m fixes every slope, i.e. m == +-identity. Decided exactly by the
/// images of 1/0, 0/1 and 1/1.
bool acts_trivially_on_slopes(const IntMatrix2& m);

/// Writes m, up to sign, as a word over T, t = T^-1, S and R via the
/// Euclidean algorithm on the first column. R appears at most once, at the
/// end. The number of S-syllables is O(log max|entry|).
std::string decompose(const IntMatrix2& m);

/// Multiplies out a word over {T, t, S, R}; throws on any other character.
IntMatrix2 evaluate_word(std::string_view word);

/// A matrix taking the edge's endpoints onto {1/0, 0/1} (the imaginary axis);
/// the larger endpoint goes to 1/0. Certifies edge-transitivity of PGL(2,Z).
IntMatrix2 edge_normalizer(const FareyEdge& e);

/// The neighbor r/s of p/q with p*s - q*r == 1 and 0 <= s < q (s = 0 for
/// integer slopes, giving 1/0; for 1/0 itself the neighbor is 0/1).
Slope canonical_neighbor(const Slope& s);

/// Determinant +1 matrix whose first column is (p, q), so 1/0 -> p/q.
IntMatrix2 completion_matrix(const Slope& s);

}  // namespace pantsgraph
