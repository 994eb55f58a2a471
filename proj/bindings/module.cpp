#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pantsgraph/augmented.hpp"
#include "pantsgraph/farey_geometry.hpp"
#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/model_surface.hpp"
#include "pantsgraph/modular_group.hpp"
#include "pantsgraph/serialize.hpp"
#include "pantsgraph/slope.hpp"
#include "pantsgraph/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// cpp_int <-> python int, via decimal strings.
template <>
struct type_caster<pantsgraph::BigInt> {
  PYBIND11_TYPE_CASTER(pantsgraph::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    object decimal = str(src);
    value = pantsgraph::BigInt(decimal.cast<std::string>());
    return true;
  }

  static handle cast(const pantsgraph::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace pantsgraph;

GeodesicEnd to_end(const py::object& obj) {
  if (py::isinstance<UHPoint>(obj)) return py::cast<UHPoint>(obj);
  if (py::isinstance<Slope>(obj)) return BoundaryPoint(py::cast<Slope>(obj));
  return BoundaryPoint(py::cast<double>(obj));
}

BoundaryPoint to_boundary(const py::object& obj) {
  if (py::isinstance<Slope>(obj)) return BoundaryPoint(py::cast<Slope>(obj));
  return BoundaryPoint(py::cast<double>(obj));
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, val] : j.items()) out[py::str(key)] = json_to_py(val);
      return out;
    }
    default:
      return py::none();
  }
}

ExtendedFNChart chart_from_tuples(const std::vector<std::tuple<Slope, double, double>>& raw) {
  std::vector<FNEntry> entries;
  entries.reserve(raw.size());
  for (const auto& [curve, length, twist] : raw) {
    entries.push_back(FNEntry{curve, length, twist});
  }
  return ExtendedFNChart(std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Farey graph combinatorics and upper half-plane model geometry";

  py::class_<Slope>(m, "Slope")
      .def(py::init([](const BigInt& p, const BigInt& q) { return Slope::make(p, q); }),
           py::arg("p"), py::arg("q"))
      .def(py::init([](const std::string& text) { return Slope::parse(text); }))
      .def_property_readonly("p", &Slope::p)
      .def_property_readonly("q", &Slope::q)
      .def_property_readonly("is_infinite", &Slope::is_infinite)
      .def("value", &Slope::value)
      .def_static("infinity", &Slope::infinity)
      .def("__str__", &Slope::str)
      .def("__repr__", [](const Slope& s) { return "Slope(" + s.str() + ")"; })
      .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; })
      .def("__lt__", [](const Slope& a, const Slope& b) { return a < b; })
      .def("__hash__", [](const Slope& s) { return py::hash(py::str(s.str())); });

  py::class_<UHPoint>(m, "UHPoint")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &UHPoint::x)
      .def_readonly("y", &UHPoint::y)
      .def("__repr__", [](const UHPoint& z) {
        return "UHPoint(" + std::to_string(z.x) + ", " + std::to_string(z.y) + ")";
      });

  py::class_<Geodesic>(m, "Geodesic")
      .def_property_readonly(
          "kind",
          [](const Geodesic& g) {
            return g.kind() == Geodesic::Kind::Vertical ? "vertical" : "semicircle";
          })
      .def_property_readonly("foot", &Geodesic::foot)
      .def_property_readonly("center", &Geodesic::center)
      .def_property_readonly("radius", &Geodesic::radius)
      .def_static("vertical", &Geodesic::vertical)
      .def_static("semicircle", &Geodesic::semicircle)
      .def("__repr__", [](const Geodesic& g) { return geodesic_json(g).dump(); });

  py::class_<IntMatrix2>(m, "IntMatrix2")
      .def(py::init<BigInt, BigInt, BigInt, BigInt>(), py::arg("a"), py::arg("b"),
           py::arg("c"), py::arg("d"))
      .def_property_readonly("a", &IntMatrix2::a)
      .def_property_readonly("b", &IntMatrix2::b)
      .def_property_readonly("c", &IntMatrix2::c)
      .def_property_readonly("d", &IntMatrix2::d)
      .def("det", &IntMatrix2::det)
      .def("inverse", &IntMatrix2::inverse)
      .def("projectively_equal", &IntMatrix2::projectively_equal)
      .def("__mul__", &IntMatrix2::operator*)
      .def("__eq__", [](const IntMatrix2& x, const IntMatrix2& y) { return x == y; })
      .def("__neg__", [](const IntMatrix2& x) { return -x; })
      .def_static("identity", &IntMatrix2::identity)
      .def_static("shear", &IntMatrix2::shear)
      .def_static("rotation", &IntMatrix2::rotation)
      .def_static("reflection", &IntMatrix2::reflection)
      .def("__repr__", &IntMatrix2::str);

  py::class_<FareyTriangle>(m, "FareyTriangle")
      .def(py::init<Slope, Slope, Slope>())
      .def_property_readonly("vertices",
                             [](const FareyTriangle& t) {
                               return py::make_tuple(t.v0(), t.v1(), t.v2());
                             })
      .def("__eq__", [](const FareyTriangle& a, const FareyTriangle& b) { return a == b; })
      .def("__repr__", [](const FareyTriangle& t) { return triangle_json(t).dump(); });

  py::class_<Horoball>(m, "Horoball")
      .def(py::init<Slope, double>(), py::arg("base"), py::arg("level"))
      .def_readonly("base", &Horoball::base)
      .def_readonly("level", &Horoball::level);

  py::class_<InducedPantsMap>(m, "InducedPantsMap")
      .def_property_readonly("matrix", &InducedPantsMap::matrix)
      .def("__call__", &InducedPantsMap::operator())
      .def("preserves_adjacency_up_to", &InducedPantsMap::preserves_adjacency_up_to);

  py::class_<CompletedPoint>(m, "CompletedPoint")
      .def_static("interior", &CompletedPoint::interior)
      .def_static("noded", &CompletedPoint::noded)
      .def_property_readonly("is_interior", &CompletedPoint::is_interior)
      .def_property_readonly("point", &CompletedPoint::point)
      .def_property_readonly("pinched_curve", &CompletedPoint::pinched_curve);

  // slope module
  m.def("make_slope", [](const BigInt& p, const BigInt& q) { return Slope::make(p, q); },
        py::arg("p"), py::arg("q"));
  m.def("parse_slope", [](const std::string& s) { return Slope::parse(s); });
  m.def("is_adjacent", &is_adjacent);
  m.def("mediant", &mediant);
  m.def("neighbors_bounded", &neighbors_bounded, py::arg("slope"), py::arg("bound"));
  m.def("farey_distance", &farey_distance);
  m.def("farey_geodesic", &farey_geodesic);
  m.def("slopes_up_to", &slopes_up_to);
  m.def("simplest_slope_between", &simplest_slope_between);

  // hyperbolic module
  m.def("hyp_distance", &hyp_distance);
  m.def("geodesic_through", [](const py::object& a, const py::object& b) {
    return geodesic_through(to_end(a), to_end(b));
  });
  m.def("apply_isometry", &apply_isometry);
  m.def("point_at_parameter", &point_at_parameter);
  m.def("direction_at", [](const UHPoint& base, const py::object& target) {
    return direction_at(base, to_boundary(target));
  });
  m.def("equilateral_triangle", &equilateral_triangle);
  m.def("angle_distance", &angle_distance);

  // modular group
  m.def("act_on_slope", &act_on_slope);
  m.def("acts_trivially_on_slopes", &acts_trivially_on_slopes);
  m.def("decompose", &decompose);
  m.def("evaluate_word", [](const std::string& w) { return evaluate_word(w); });
  m.def("edge_normalizer", [](const Slope& a, const Slope& b) {
    return edge_normalizer(FareyEdge(a, b));
  });
  m.def("canonical_neighbor", &canonical_neighbor);
  m.def("completion_matrix", &completion_matrix);

  // farey geometry
  m.def("locate_triangle", &locate_triangle);
  m.def("triangle_contains", &triangle_contains, py::arg("triangle"), py::arg("point"),
        py::arg("tol") = 1e-12);
  m.def("cutting_sequence", &cutting_sequence);
  m.def("render_svg",
        [](double xmin, double xmax, double ymax, int depth,
           const std::vector<Geodesic>& overlays) {
          return render_svg(Viewport{xmin, xmax, ymax}, depth, overlays);
        },
        py::arg("xmin"), py::arg("xmax"), py::arg("ymax"), py::arg("depth"),
        py::arg("overlays") = std::vector<Geodesic>{});

  // model surface
  m.def("intersection_number", [](const std::string& model, const Slope& a, const Slope& b) {
    return intersection_number(parse_model(model), a, b);
  });
  m.def("is_elementary_move", [](const std::string& model, const Slope& a, const Slope& b) {
    SurfaceModel sm = parse_model(model);
    return is_elementary_move({sm, a}, {sm, b});
  });
  m.def("pants_distance", [](const std::string& model, const Slope& a, const Slope& b) {
    SurfaceModel sm = parse_model(model);
    return pants_distance({sm, a}, {sm, b});
  });
  m.def("model_metric_scale",
        [](const std::string& model) { return model_metric_scale(parse_model(model)); });
  m.def("model_distance",
        [](const std::string& model, const UHPoint& z, const UHPoint& w) {
          return model_distance(parse_model(model), z, w);
        });

  // augmented
  m.def("chart_equal",
        [](const std::vector<std::tuple<Slope, double, double>>& c1,
           const std::vector<std::tuple<Slope, double, double>>& c2) {
          return chart_equal(chart_from_tuples(c1), chart_from_tuples(c2));
        },
        "Charts are lists of (curve, length, twist); twists are ignored where "
        "both lengths are zero.");
  m.def("stratum_of", [](const CompletedPoint& x) {
    std::vector<Slope> out(stratum_of(x).pinched().begin(), stratum_of(x).pinched().end());
    return out;
  });
  m.def("closure_contains",
        [](const std::vector<Slope>& sigma, const std::vector<Slope>& tau) {
          return closure_contains(StratumIndex({sigma.begin(), sigma.end()}),
                                  StratumIndex({tau.begin(), tau.end()}));
        });
  m.def("horoball_contains", &horoball_contains);
  m.def("horoballs_disjoint", &horoballs_disjoint);
  m.def("isolation_level", &isolation_level);
  m.def("apply_to_completed", &apply_to_completed);
  m.def("induced_pants_automorphism", &induced_pants_automorphism);
  m.def("dense_direction", &dense_direction, py::arg("base"), py::arg("phi"), py::arg("eps"));

  // verification
  m.def("run_verify",
        [](const std::string& suite, std::uint64_t seed, long budget) {
          return json_to_py(run_suite(suite, seed, budget).to_json());
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("budget") = -1);
  m.def("verification_suites", [] {
    py::list out;
    for (const SuiteInfo& info : verification_suites()) out.append(py::str(info.name));
    return out;
  });
}
