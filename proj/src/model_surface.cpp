#include "pantsgraph/model_surface.hpp"

#include <stdexcept>

namespace pantsgraph {

std::string model_name(SurfaceModel m) {
  return m == SurfaceModel::OneHoledTorus ? "s11" : "s04";
}

SurfaceModel parse_model(std::string_view name) {
  if (name == "s11") return SurfaceModel::OneHoledTorus;
  if (name == "s04") return SurfaceModel::FourHoledSphere;
  throw std::invalid_argument("unknown surface model '" + std::string(name) +
                              "' (expected s11 or s04)");
}

BigInt intersection_number(SurfaceModel m, const Slope& a, const Slope& b) {
  BigInt det = a.p() * b.q() - a.q() * b.p();
  if (det < 0) det = -det;
  return m == SurfaceModel::OneHoledTorus ? det : BigInt(2 * det);
}

namespace {
void require_same_model(const PantsDecomposition& p, const PantsDecomposition& p2) {
  if (p.model != p2.model) {
    throw std::invalid_argument("pants decompositions live on different models (" +
                                model_name(p.model) + " vs " + model_name(p2.model) + ")");
  }
}
}  // namespace

bool is_elementary_move(const PantsDecomposition& p, const PantsDecomposition& p2) {
  require_same_model(p, p2);
  BigInt minimal = p.model == SurfaceModel::OneHoledTorus ? 1 : 2;
  return intersection_number(p.model, p.curve, p2.curve) == minimal;
}

long pants_distance(const PantsDecomposition& p, const PantsDecomposition& p2) {
  require_same_model(p, p2);
  return farey_distance(p.curve, p2.curve);
}

double model_metric_scale(SurfaceModel m) {
  return m == SurfaceModel::OneHoledTorus ? 1.0 : 2.0;
}

double model_distance(SurfaceModel m, const UHPoint& z, const UHPoint& w) {
  return model_metric_scale(m) * hyp_distance(z, w);
}

}  // namespace pantsgraph
