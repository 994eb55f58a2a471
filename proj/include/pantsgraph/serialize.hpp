#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pantsgraph/augmented.hpp"
#include "pantsgraph/farey_geometry.hpp"
#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/modular_group.hpp"
#include "pantsgraph/slope.hpp"

namespace pantsgraph {

using Json = nlohmann::json;

Json slope_json(const Slope& s);  // "p/q"
Json point_json(const UHPoint& z);
Json geodesic_json(const Geodesic& g);
Json matrix_json(const IntMatrix2& m);  // [[a,b],[c,d]]
Json triangle_json(const FareyTriangle& t);
Json chart_json(const ExtendedFNChart& c);
Json stratum_json(const StratumIndex& s);

IntMatrix2 matrix_from_json(const Json& j);
ExtendedFNChart chart_from_json(const Json& j);

/// Parses "a+bi" (also "a", "bi", "i", "-i", "a-bi").
std::complex<double> parse_complex(std::string_view text);

/// Parses a matrix literal "[[a,b],[c,d]]" with integer entries.
IntMatrix2 parse_matrix(std::string_view text);

}  // namespace pantsgraph
