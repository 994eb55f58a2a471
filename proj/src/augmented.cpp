#include "pantsgraph/augmented.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pantsgraph {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kHalfPi = 0.5 * kPi;
}  // namespace

ExtendedFNChart::ExtendedFNChart(std::vector<FNEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const FNEntry& e = entries_[i];
    if (!(e.length >= 0.0) || !std::isfinite(e.length) || !std::isfinite(e.twist)) {
      throw std::invalid_argument("chart entry for " + e.curve.str() +
                                  " needs a finite length >= 0 and a finite twist");
    }
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      if (entries_[j].curve == e.curve) {
        throw std::invalid_argument("chart repeats curve " + e.curve.str());
      }
    }
  }
}

bool chart_equal(const ExtendedFNChart& a, const ExtendedFNChart& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  if (ea.size() != eb.size()) {
    throw std::invalid_argument("charts are over different curve systems");
  }
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].curve != eb[i].curve) {
      throw std::invalid_argument("charts are over different curve systems");
    }
  }
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].length != eb[i].length) return false;
    bool pinched = ea[i].length == 0.0 && eb[i].length == 0.0;
    if (!pinched && ea[i].twist != eb[i].twist) return false;
  }
  return true;
}

bool closure_contains(const StratumIndex& sigma, const StratumIndex& tau) {
  return std::includes(sigma.pinched().begin(), sigma.pinched().end(),
                       tau.pinched().begin(), tau.pinched().end());
}

StratumIndex stratum_of(const CompletedPoint& x) {
  if (x.is_interior()) return StratumIndex{};
  return StratumIndex({x.pinched_curve()});
}

Horoball::Horoball(Slope base_, double level_) : base(std::move(base_)), level(level_) {
  if (!(level > 0.0) || !std::isfinite(level)) {
    throw std::invalid_argument("horoball level must be positive");
  }
}

IntMatrix2 horoball_normalizer(const Slope& base) {
  return completion_matrix(base).inverse();
}

bool horoball_contains(const Horoball& h, const UHPoint& z) {
  IntMatrix2 n = horoball_normalizer(h.base);
  // Im(N z) = y / |c z + d|^2 for determinant +1.
  double c = to_double(n.c());
  double d = to_double(n.d());
  double denom = (c * z.x + d) * (c * z.x + d) + (c * z.y) * (c * z.y);
  return z.y / denom > h.level;
}

bool horoballs_disjoint(const Horoball& a, const Horoball& b) {
  if (a.base == b.base) return false;  // same-base horoballs are nested
  if (a.base.is_infinite() || b.base.is_infinite()) {
    const Horoball& half_plane = a.base.is_infinite() ? a : b;
    const Horoball& disk = a.base.is_infinite() ? b : a;
    double q = to_double(disk.base.q());
    double diameter = 1.0 / (disk.level * q * q);
    return diameter <= half_plane.level;
  }
  // Disks tangent to the axis at distance |delta| with diameters D1, D2 are
  // disjoint iff delta^2 >= D1 D2, i.e. (ps - qr)^2 * u1 * u2 >= 1.
  BigInt cross = a.base.p() * b.base.q() - a.base.q() * b.base.p();
  double cr = to_double(cross);
  return cr * cr * a.level * b.level >= 1.0;
}

double isolation_level(const Slope& a, const Slope& b) {
  if (a == b) {
    throw std::invalid_argument("isolation_level: need two distinct noded points");
  }
  if (a.is_infinite() || b.is_infinite()) {
    const Slope& finite = a.is_infinite() ? b : a;
    double q = to_double(finite.q());
    return 1.5 / q;  // needs u >= 1/q
  }
  BigInt cross = a.p() * b.q() - a.q() * b.p();
  double cr = std::abs(to_double(cross));
  return 1.5 / cr;  // needs u >= 1/|cross|
}

CompletedPoint apply_to_completed(const IntMatrix2& m, const CompletedPoint& x) {
  if (x.is_interior()) return CompletedPoint::interior(apply_isometry(m, x.point()));
  return CompletedPoint::noded(act_on_slope(m, x.pinched_curve()));
}

bool InducedPantsMap::preserves_adjacency_up_to(long bound) const {
  for (const Slope& s : slopes_up_to(bound)) {
    for (const Slope& nb : neighbors_bounded(s, bound)) {
      if (nb < s) continue;  // each edge once
      if (!is_adjacent((*this)(s), (*this)(nb))) return false;
    }
  }
  return true;
}

InducedPantsMap induced_pants_automorphism(const IntMatrix2& m) {
  return InducedPantsMap(m);
}

Slope dense_direction(const UHPoint& base, double phi, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("dense_direction: eps must be positive");
  }
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0) phi += 2.0 * kPi;
  // The upward direction is hit exactly by 1/0.
  if (angle_distance(phi, kHalfPi) < eps) return Slope::infinity();
  // direction_at is a monotone circular bijection in the boundary coordinate,
  // so pulling back an angular window around phi gives a real interval; the
  // simplest rational inside is the witness. Shrink the window until the
  // verified angular error is within eps.
  double delta = std::min(0.45 * eps, 0.5);
  for (int iter = 0; iter < 60; ++iter) {
    double lo = ray_endpoint(base, phi - delta).value();
    double hi = ray_endpoint(base, phi + delta).value();
    if (lo > hi) std::swap(lo, hi);
    if (lo < hi) {
      Slope candidate = simplest_slope_between(lo, hi);
      if (angle_distance(direction_at(base, BoundaryPoint(candidate)), phi) < eps) {
        return candidate;
      }
    }
    delta *= 0.5;
  }
  throw std::runtime_error(
      "dense_direction: 60 shrink steps exhausted; eps is below numeric resolution");
}

}  // namespace pantsgraph
