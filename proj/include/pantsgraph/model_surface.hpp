#pragma once

#include <string>
#include <string_view>

#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/slope.hpp"

namespace pantsgraph {

/// The two complexity-one surfaces whose curves are slopes.
enum class SurfaceModel { OneHoledTorus, FourHoledSphere };

std::string model_name(SurfaceModel m);                 // "s11" / "s04"
SurfaceModel parse_model(std::string_view name);        // throws on anything else

/// At complexity one a pants decomposition is a single curve.
struct PantsDecomposition {
  SurfaceModel model;
  Slope curve;
};

/// Minimal geometric intersection number of the curves a and b:
/// |det| on the one-holed torus, 2|det| on the four-holed sphere.
BigInt intersection_number(SurfaceModel m, const Slope& a, const Slope& b);

/// True iff the decompositions differ by an elementary move, i.e. their
/// curves meet minimally (once or twice by model) -- equivalently, iff the
/// slopes are Farey-adjacent. Rejects mixed models.
bool is_elementary_move(const PantsDecomposition& p, const PantsDecomposition& p2);

/// Distance in the pants graph; equals the Farey distance of the slopes.
long pants_distance(const PantsDecomposition& p, const PantsDecomposition& p2);

/// Normalization of the model metric: 1 for s11, 2 for s04. Every distance
/// reported for a model is the half-plane distance times this factor.
double model_metric_scale(SurfaceModel m);

/// Model Teichmueller distance: scaled hyperbolic distance.
double model_distance(SurfaceModel m, const UHPoint& z, const UHPoint& w);

}  // namespace pantsgraph
