#include "pantsgraph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <stdexcept>

#include "pantsgraph/augmented.hpp"
#include "pantsgraph/farey_geometry.hpp"
#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/model_surface.hpp"
#include "pantsgraph/modular_group.hpp"
#include "pantsgraph/serialize.hpp"
#include "pantsgraph/slope.hpp"
#include "pantsgraph/verify.hpp"

namespace pantsgraph::cli {

namespace {

Slope parse_slope_arg(const std::string& text, const char* what) {
  try {
    return Slope::parse(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

UHPoint parse_point_arg(const std::string& text, const char* what) {
  std::complex<double> z;
  try {
    z = parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
  if (!(z.imag() > 0.0)) {
    throw std::invalid_argument(std::string(what) + ": '" + text +
                                "' is not in the upper half-plane");
  }
  return {z.real(), z.imag()};
}

IntMatrix2 parse_matrix_arg(const std::string& text, const char* what) {
  try {
    return parse_matrix(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

// Overlay geodesics are given as endpoint pairs "a:b" with slope endpoints.
Geodesic parse_overlay(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("overlay '" + text + "' must be \"a:b\" with slope endpoints");
  }
  Slope a = parse_slope_arg(text.substr(0, colon), "overlay");
  Slope b = parse_slope_arg(text.substr(colon + 1), "overlay");
  return geodesic_through(BoundaryPoint(a), BoundaryPoint(b));
}

Json path_json(const std::vector<Slope>& path) {
  Json out = Json::array();
  for (const Slope& s : path) out.push_back(s.str());
  return out;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& subcommands() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"farey-adjacent", "test Farey adjacency of two slopes"},
      {"farey-distance", "Farey-graph distance with a shortest-path witness"},
      {"farey-geodesic", "a shortest path between two slopes"},
      {"cutting-sequence", "triangles crossed by the geodesic between two slopes"},
      {"moebius-apply", "apply an integer matrix to a half-plane point"},
      {"act-slope", "apply an integer matrix to a slope"},
      {"decompose", "write a matrix as a word in T, S, R"},
      {"elementary-move", "test whether two pants decompositions differ by a move"},
      {"pants-distance", "distance in the pants graph of a model surface"},
      {"chart-equal", "compare extended Fenchel-Nielsen charts"},
      {"stratum", "the stratum index of a completed-model point"},
      {"horoball-contains", "test horoball membership"},
      {"dense-direction", "a rational direction within eps of a target angle"},
      {"verify", "run a named property suite"},
      {"render", "render the Farey tessellation as SVG"},
  };
  return table;
}

CommandResult run(const std::vector<std::string>& argv) {
  CommandResult result;
  Json payload = Json::object();

  CLI::App app{"Farey graph combinatorics and half-plane model geometry", "pantsgraph"};
  app.require_subcommand(0, 1);

  struct {
    std::string a, b, matrix, point, chart1, chart2, target, base = "0+1i";
    std::string model = "s11", suite, out;
    std::vector<std::string> overlays;
    double phi = 0.0, eps = 1e-3, level = 0.0;
    double xmin = -1.0, xmax = 2.0, ymax = 1.5;
    int depth = 5;
    std::uint64_t seed = 0;
    long budget = -1;
    bool list_suites = false;
  } args;

  auto* adjacent = app.add_subcommand(subcommands()[0].first, subcommands()[0].second);
  adjacent->add_option("a", args.a, "first slope p/q")->required();
  adjacent->add_option("b", args.b, "second slope p/q")->required();
  adjacent->callback([&] {
    Slope a = parse_slope_arg(args.a, "a");
    Slope b = parse_slope_arg(args.b, "b");
    payload["adjacent"] = is_adjacent(a, b);
  });

  auto* distance = app.add_subcommand(subcommands()[1].first, subcommands()[1].second);
  distance->add_option("a", args.a)->required();
  distance->add_option("b", args.b)->required();
  distance->callback([&] {
    Slope a = parse_slope_arg(args.a, "a");
    Slope b = parse_slope_arg(args.b, "b");
    std::vector<Slope> path = farey_geodesic(a, b);
    payload["distance"] = static_cast<long>(path.size()) - 1;
    payload["path"] = path_json(path);
  });

  auto* geodesic = app.add_subcommand(subcommands()[2].first, subcommands()[2].second);
  geodesic->add_option("a", args.a)->required();
  geodesic->add_option("b", args.b)->required();
  geodesic->callback([&] {
    Slope a = parse_slope_arg(args.a, "a");
    Slope b = parse_slope_arg(args.b, "b");
    std::vector<Slope> path = farey_geodesic(a, b);
    payload["length"] = static_cast<long>(path.size()) - 1;
    payload["path"] = path_json(path);
  });

  auto* cutting = app.add_subcommand(subcommands()[3].first, subcommands()[3].second);
  cutting->add_option("a", args.a)->required();
  cutting->add_option("b", args.b)->required();
  cutting->callback([&] {
    Slope a = parse_slope_arg(args.a, "a");
    Slope b = parse_slope_arg(args.b, "b");
    std::vector<FareyTriangle> seq = cutting_sequence(a, b);
    Json triangles = Json::array();
    for (const FareyTriangle& t : seq) triangles.push_back(triangle_json(t));
    payload["length"] = seq.size();
    payload["triangles"] = triangles;
  });

  auto* moebius = app.add_subcommand(subcommands()[4].first, subcommands()[4].second);
  moebius->add_option("matrix", args.matrix, "[[a,b],[c,d]] with det +-1")->required();
  moebius->add_option("point", args.point, "half-plane point a+bi")->required();
  moebius->callback([&] {
    IntMatrix2 m = parse_matrix_arg(args.matrix, "matrix");
    UHPoint z = parse_point_arg(args.point, "point");
    payload = point_json(apply_isometry(m, z));
  });

  auto* act = app.add_subcommand(subcommands()[5].first, subcommands()[5].second);
  act->add_option("matrix", args.matrix)->required();
  act->add_option("slope", args.a)->required();
  act->callback([&] {
    IntMatrix2 m = parse_matrix_arg(args.matrix, "matrix");
    Slope s = parse_slope_arg(args.a, "slope");
    payload["slope"] = act_on_slope(m, s).str();
  });

  auto* decomp = app.add_subcommand(subcommands()[6].first, subcommands()[6].second);
  decomp->add_option("matrix", args.matrix)->required();
  decomp->callback([&] {
    IntMatrix2 m = parse_matrix_arg(args.matrix, "matrix");
    std::string word = decompose(m);
    payload["word"] = word;
    payload["recomposes"] = evaluate_word(word).projectively_equal(m);
  });

  auto* elementary = app.add_subcommand(subcommands()[7].first, subcommands()[7].second);
  elementary->add_option("a", args.a)->required();
  elementary->add_option("b", args.b)->required();
  elementary->add_option("--model", args.model, "s11 or s04");
  elementary->callback([&] {
    SurfaceModel m = parse_model(args.model);
    PantsDecomposition p{m, parse_slope_arg(args.a, "a")};
    PantsDecomposition p2{m, parse_slope_arg(args.b, "b")};
    payload["model"] = model_name(m);
    payload["elementary"] = is_elementary_move(p, p2);
    payload["intersection"] = to_int64(intersection_number(m, p.curve, p2.curve));
  });

  auto* pants = app.add_subcommand(subcommands()[8].first, subcommands()[8].second);
  pants->add_option("a", args.a)->required();
  pants->add_option("b", args.b)->required();
  pants->add_option("--model", args.model, "s11 or s04");
  pants->callback([&] {
    SurfaceModel m = parse_model(args.model);
    PantsDecomposition p{m, parse_slope_arg(args.a, "a")};
    PantsDecomposition p2{m, parse_slope_arg(args.b, "b")};
    payload["model"] = model_name(m);
    payload["distance"] = pants_distance(p, p2);
  });

  auto* charts = app.add_subcommand(subcommands()[9].first, subcommands()[9].second);
  charts->add_option("chart1", args.chart1, "JSON list of {curve, length, twist}")->required();
  charts->add_option("chart2", args.chart2)->required();
  charts->callback([&] {
    Json j1, j2;
    try {
      j1 = Json::parse(args.chart1);
      j2 = Json::parse(args.chart2);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("chart: ") + e.what());
    }
    payload["equal"] = chart_equal(chart_from_json(j1), chart_from_json(j2));
  });

  auto* stratum = app.add_subcommand(subcommands()[10].first, subcommands()[10].second);
  stratum->add_option("point", args.point, "slope p/q (noded) or a+bi (interior)")->required();
  stratum->callback([&] {
    CompletedPoint x = [&] {
      try {
        return CompletedPoint::noded(Slope::parse(args.point));
      } catch (const std::invalid_argument&) {
        return CompletedPoint::interior(parse_point_arg(args.point, "point"));
      }
    }();
    StratumIndex idx = stratum_of(x);
    payload["pinched"] = stratum_json(idx);
    payload["k"] = idx.k();
  });

  auto* horoball = app.add_subcommand(subcommands()[11].first, subcommands()[11].second);
  horoball->add_option("base", args.a, "rational base slope")->required();
  horoball->add_option("level", args.level)->required();
  horoball->add_option("point", args.point)->required();
  horoball->callback([&] {
    Horoball h(parse_slope_arg(args.a, "base"), args.level);
    payload["contains"] = horoball_contains(h, parse_point_arg(args.point, "point"));
  });

  auto* dense = app.add_subcommand(subcommands()[12].first, subcommands()[12].second);
  dense->add_option("phi", args.phi, "target angle in radians")->required();
  dense->add_option("eps", args.eps, "angular tolerance");
  dense->add_option("--base", args.base, "base point (default i)");
  dense->callback([&] {
    UHPoint base = parse_point_arg(args.base, "base");
    Slope s = dense_direction(base, args.phi, args.eps);
    double achieved = direction_at(base, BoundaryPoint(s));
    payload["slope"] = s.str();
    payload["angle"] = achieved;
    payload["error"] = angle_distance(achieved, args.phi);
  });

  auto* verify = app.add_subcommand(subcommands()[13].first, subcommands()[13].second);
  verify->add_option("suite", args.suite, "suite name (see --list)");
  verify->add_flag("--list", args.list_suites, "list available suites");
  verify->add_option("--seed", args.seed, "deterministic seed");
  verify->add_option("--budget", args.budget, "trial budget; -1 = suite default, 0 = exhaustive");
  verify->callback([&] {
    if (args.list_suites) {
      Json suites = Json::array();
      for (const SuiteInfo& info : verification_suites()) {
        suites.push_back(Json{{"name", info.name},
                              {"summary", info.summary},
                              {"default_budget", info.default_budget}});
      }
      payload["suites"] = suites;
      return;
    }
    if (args.suite.empty()) {
      throw std::invalid_argument("verify: missing suite name (try --list)");
    }
    payload = run_suite(args.suite, args.seed, args.budget).to_json();
  });

  auto* render = app.add_subcommand(subcommands()[14].first, subcommands()[14].second);
  render->add_option("--depth", args.depth, "max edge denominator (1..20)");
  render->add_option("--xmin", args.xmin);
  render->add_option("--xmax", args.xmax);
  render->add_option("--ymax", args.ymax);
  render->add_option("--out", args.out, "output SVG path")->required();
  render->add_option("--overlay", args.overlays, "overlay geodesic \"a:b\" (repeatable)");
  render->callback([&] {
    std::vector<Geodesic> overlays;
    for (const std::string& o : args.overlays) overlays.push_back(parse_overlay(o));
    std::string svg = render_svg(Viewport{args.xmin, args.xmax, args.ymax}, args.depth, overlays);
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::invalid_argument("render: cannot open output path '" + args.out + "'");
    out << svg;
    payload["out"] = args.out;
    payload["bytes"] = svg.size();
    payload["overlays"] = overlays.size();
  });

  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    if (app.get_subcommands().empty()) {
      result.exit_code = 1;
      result.diagnostics.push_back("missing subcommand");
      result.diagnostics.push_back(app.help());
      result.payload = Json{{"error", "missing subcommand"}};
      return result;
    }
    result.payload = payload;
    return result;
  } catch (const CLI::CallForHelp&) {
    result.payload = Json{{"usage", app.help()}};
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 1;
    result.diagnostics.push_back(e.what());
    result.diagnostics.push_back(app.help());
    result.payload = Json{{"error", e.what()}};
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.diagnostics.push_back(e.what());
    result.payload = Json{{"error", e.what()}};
    return result;
  }
}

}  // namespace pantsgraph::cli
