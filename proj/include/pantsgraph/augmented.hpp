#pragma once

#include <set>
#include <variant>
#include <vector>

#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/modular_group.hpp"
#include "pantsgraph/slope.hpp"

namespace pantsgraph {

/// One length-twist entry of an extended Fenchel-Nielsen chart. The twist is
/// meaningless (and ignored by chart_equal) when the length is zero.
struct FNEntry {
  Slope curve;
  double length;
  double twist;
};

/// Extended Fenchel-Nielsen coordinates: lengths >= 0, curves distinct.
class ExtendedFNChart {
 public:
  explicit ExtendedFNChart(std::vector<FNEntry> entries);
  const std::vector<FNEntry>& entries() const { return entries_; }

 private:
  std::vector<FNEntry> entries_;
};

/// Equality in the pinching quotient: entrywise, with twists ignored at
/// entries where both lengths are zero. Rejects mismatched curve lists.
bool chart_equal(const ExtendedFNChart& a, const ExtendedFNChart& b);

/// The index of a stratum of the completed model: the set of pinched curves.
class StratumIndex {
 public:
  StratumIndex() = default;
  explicit StratumIndex(std::set<Slope> pinched) : pinched_(std::move(pinched)) {}
  const std::set<Slope>& pinched() const { return pinched_; }
  std::size_t k() const { return pinched_.size(); }
  friend bool operator==(const StratumIndex&, const StratumIndex&) = default;

 private:
  std::set<Slope> pinched_;
};

/// True iff the sigma-stratum lies in the closure of the tau-stratum, i.e.
/// tau's pinched set is contained in sigma's.
bool closure_contains(const StratumIndex& sigma, const StratumIndex& tau);

/// A point of the completed model: interior, or noded at a rational slope.
class CompletedPoint {
 public:
  static CompletedPoint interior(const UHPoint& z) { return CompletedPoint(z); }
  static CompletedPoint noded(const Slope& s) { return CompletedPoint(s); }
  bool is_interior() const { return std::holds_alternative<UHPoint>(rep_); }
  const UHPoint& point() const { return std::get<UHPoint>(rep_); }
  const Slope& pinched_curve() const { return std::get<Slope>(rep_); }

 private:
  explicit CompletedPoint(const UHPoint& z) : rep_(z) {}
  explicit CompletedPoint(const Slope& s) : rep_(s) {}
  std::variant<UHPoint, Slope> rep_;
};

StratumIndex stratum_of(const CompletedPoint& x);

/// Horoball at a rational boundary point: {Im(N z) > level} for the fixed
/// per-base normalizer N (canonical-edge choice, determinant +1). For base
/// 1/0 this is the half-plane {y > level}; for p/q it is the Euclidean disk
/// tangent at p/q with diameter 1/(level q^2).
struct Horoball {
  Slope base;
  double level;
  Horoball(Slope base_, double level_);
};

/// The fixed normalizer: determinant +1, takes base to infinity. Any other
/// admissible choice differs by a translation fixing Im, so containment does
/// not depend on it.
IntMatrix2 horoball_normalizer(const Slope& base);

bool horoball_contains(const Horoball& h, const UHPoint& z);

/// Disjointness of the open horoballs, decided by the tangent-disk
/// characterization (exact in the integer data).
bool horoballs_disjoint(const Horoball& a, const Horoball& b);

/// A level u such that Horoball(a, u) and Horoball(b, u) are disjoint;
/// witnesses the isolation of maximally noded points. Rejects a == b.
double isolation_level(const Slope& a, const Slope& b);

/// The induced map on the completion: interior points move by the plane
/// isometry, noded points by the boundary action. Strata sizes are preserved.
CompletedPoint apply_to_completed(const IntMatrix2& m, const CompletedPoint& x);

/// The pants-graph automorphism induced by a model mapping class, packaged
/// with a finite adjacency-preservation certificate.
class InducedPantsMap {
 public:
  explicit InducedPantsMap(IntMatrix2 m) : matrix_(std::move(m)) {}
  const IntMatrix2& matrix() const { return matrix_; }
  Slope operator()(const Slope& s) const { return act_on_slope(matrix_, s); }
  /// Exhaustive check that every Farey edge with |p|, q <= bound maps to an
  /// edge.
  bool preserves_adjacency_up_to(long bound) const;

 private:
  IntMatrix2 matrix_;
};

InducedPantsMap induced_pants_automorphism(const IntMatrix2& m);

/// A rational boundary point whose direction from base is within eps of phi
/// (angles mod 2pi). Constructive witness for density of noded directions in
/// the visual circle. Throws after 60 shrink steps (eps below resolution).
Slope dense_direction(const UHPoint& base, double phi, double eps);

}  // namespace pantsgraph
