#include "pantsgraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "pantsgraph/augmented.hpp"
#include "pantsgraph/farey_geometry.hpp"
#include "pantsgraph/hyperbolic.hpp"
#include "pantsgraph/model_surface.hpp"
#include "pantsgraph/modular_group.hpp"
#include "pantsgraph/slope.hpp"

namespace pantsgraph {

using Json = nlohmann::json;

Json SuiteReport::to_json() const {
  return Json{{"suite", suite},   {"seed", seed}, {"budget", budget},
              {"trials", trials}, {"failures", failures}, {"pass", pass},
              {"details", details}};
}

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  Slope slope(long bound) {
    while (true) {
      long p = integer(-bound, bound);
      long q = integer(0, bound);
      if (p == 0 && q == 0) continue;
      return Slope::make(p, q);
    }
  }

  Slope finite_slope(long bound) {
    while (true) {
      Slope s = slope(bound);
      if (!s.is_infinite()) return s;
    }
  }

  IntMatrix2 word_matrix(int max_len) {
    static const char kLetters[] = {'T', 't', 'S', 'R'};
    std::string word;
    int len = static_cast<int>(integer(0, max_len));
    for (int i = 0; i < len; ++i) word.push_back(kLetters[integer(0, 3)]);
    return evaluate_word(word);
  }

  IntMatrix2 word_matrix_with_det(int max_len, int det) {
    IntMatrix2 m = word_matrix(max_len);
    if (m.det() != det) m = m * IntMatrix2::reflection();
    return m;
  }

  // Random GL(2,Z) element with every entry bounded by `entry_bound`.
  IntMatrix2 small_matrix(long entry_bound) {
    while (true) {
      IntMatrix2 m = word_matrix(8);
      bool ok = true;
      for (const BigInt* e : {&m.a(), &m.b(), &m.c(), &m.d()}) {
        if (*e > entry_bound || *e < -entry_bound) ok = false;
      }
      if (ok) return m;
    }
  }

  UHPoint point(double xspan, double ymax) {
    return {real(-xspan, xspan), real(1e-6, ymax)};
  }

  // A Farey-adjacent pair of unbounded size: a random image of (0/1, 1/0).
  std::pair<Slope, Slope> adjacent_pair(int max_len) {
    IntMatrix2 m = word_matrix(max_len);
    return {act_on_slope(m, Slope::make(0, 1)), act_on_slope(m, Slope::infinity())};
  }

 private:
  std::mt19937_64 gen_;
};

// Independent distance oracle: materializes the subgraph with |p|, q <= bound
// by testing the adjacency determinant over all vertex pairs, then runs plain
// single-source BFS. Shares no code with the production bidirectional search.
class ExhaustiveGraph {
 public:
  explicit ExhaustiveGraph(long bound) : vertices_(slopes_up_to(bound)) {
    const std::size_t n = vertices_.size();
    std::vector<std::pair<long long, long long>> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = {to_int64(vertices_[i].p()), to_int64(vertices_[i].q())};
    }
    adjacency_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        long long det = c[i].first * c[j].second - c[i].second * c[j].first;
        if (det == 1 || det == -1) {
          adjacency_[i].push_back(static_cast<int>(j));
          adjacency_[j].push_back(static_cast<int>(i));
        }
      }
    }
  }

  const std::vector<Slope>& vertices() const { return vertices_; }

  int index_of(const Slope& s) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
    if (it == vertices_.end() || !(*it == s)) {
      throw std::logic_error("slope outside the exhaustive graph: " + s.str());
    }
    return static_cast<int>(it - vertices_.begin());
  }

  std::vector<int> distances_from(int source) const {
    std::vector<int> dist(vertices_.size(), -1);
    std::vector<int> frontier{source};
    dist[source] = 0;
    int level = 0;
    while (!frontier.empty()) {
      ++level;
      std::vector<int> next;
      for (int v : frontier) {
        for (int w : adjacency_[v]) {
          if (dist[w] < 0) {
            dist[w] = level;
            next.push_back(w);
          }
        }
      }
      frontier = std::move(next);
    }
    return dist;
  }

 private:
  std::vector<Slope> vertices_;
  std::vector<std::vector<int>> adjacency_;
};

SuiteReport make_report(const char* name, std::uint64_t seed, long budget) {
  SuiteReport r;
  r.suite = name;
  r.seed = seed;
  r.budget = budget;
  r.details = Json::object();
  return r;
}

// --- slope -----------------------------------------------------------------

SuiteReport run_farey_adjacency(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("farey-adjacency", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    Slope a = rng.slope(1000);
    Slope b = rng.slope(1000);
    ++r.trials;
    if (is_adjacent(a, b) != is_adjacent(b, a)) ++r.failures;
    if (is_adjacent(a, a)) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_mediant_adjacency(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("mediant-adjacency", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    auto [a, b] = rng.adjacent_pair(20);
    Slope m = mediant(a, b);
    ++r.trials;
    if (!is_adjacent(m, a) || !is_adjacent(m, b)) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_distance_triangle(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("farey-triangle-inequality", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    Slope a = rng.slope(8), b = rng.slope(8), c = rng.slope(8);
    long ab = farey_distance(a, b);
    long bc = farey_distance(b, c);
    long ac = farey_distance(a, c);
    ++r.trials;
    if (ac > ab + bc) ++r.failures;
    if ((ac == 0) != (a == c)) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_distance_oracle(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("farey-distance-oracle", seed, budget);
  ExhaustiveGraph oracle(50);
  std::vector<Slope> endpoints = slopes_up_to(12);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (budget > 0 && budget < static_cast<long>(pairs.size())) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> sample;
    for (long k = 0; k < budget; ++k) {
      sample.push_back(pairs[rng.integer(0, static_cast<long>(pairs.size()) - 1)]);
    }
    pairs = std::move(sample);
  }
  // Group by first endpoint so each oracle BFS is shared.
  std::vector<int> oracle_index(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    oracle_index[i] = oracle.index_of(endpoints[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  long mismatches = 0;
  std::vector<int> dist;
  int current = -1;
  for (const auto& [i, j] : pairs) {
    if (i != current) {
      dist = oracle.distances_from(oracle_index[i]);
      current = i;
    }
    long expected = dist[oracle_index[j]];
    long got = farey_distance(endpoints[i], endpoints[j]);
    ++r.trials;
    if (got != expected) {
      ++mismatches;
      if (mismatches <= 5) {
        r.details["mismatches"].push_back(
            Json{{"a", endpoints[i].str()}, {"b", endpoints[j].str()},
                 {"bfs", expected}, {"production", got}});
      }
    }
  }
  r.failures = mismatches;
  r.details["endpoint_bound"] = 12;
  r.details["oracle_bound"] = 50;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_geodesic_witness(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("geodesic-witness", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    Slope a = rng.slope(60), b = rng.slope(60);
    long d = farey_distance(a, b);
    std::vector<Slope> path = farey_geodesic(a, b);
    ++r.trials;
    bool ok = static_cast<long>(path.size()) == d + 1 && path.front() == a && path.back() == b;
    for (std::size_t k = 0; ok && k + 1 < path.size(); ++k) {
      ok = is_adjacent(path[k], path[k + 1]);
    }
    if (!ok) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

// --- hyperbolic ------------------------------------------------------------

SuiteReport run_isometry_invariance(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("isometry-invariance", seed, budget);
  Rng rng(seed);
  double worst = 0.0;
  for (long i = 0; i < budget; ++i) {
    // Alternate orientation-preserving and orientation-reversing elements;
    // entries stay within 20 as in the stated property.
    IntMatrix2 m = rng.small_matrix(20);
    if (m.det() != (i % 2 == 0 ? 1 : -1)) m = m * IntMatrix2::reflection();
    UHPoint z = rng.point(10.0, 10.0);
    UHPoint w = rng.point(10.0, 10.0);
    double before = hyp_distance(z, w);
    double after = hyp_distance(apply_isometry(m, z), apply_isometry(m, w));
    double dev = std::abs(after - before);
    worst = std::max(worst, dev);
    ++r.trials;
    if (!(dev < 1e-9)) ++r.failures;
  }
  r.details["max_deviation"] = worst;
  r.details["tolerance"] = 1e-9;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_lemma_triangle(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("lemma-triangle", seed, budget);
  long samples = budget > 1 ? budget : 100;
  const double lengths[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  double min_margin = std::numeric_limits<double>::infinity();
  Json per_length = Json::object();
  for (double L : lengths) {
    auto [apex, left, right] = equilateral_triangle(L);
    Geodesic base_edge = geodesic_through(left, right);
    double r0 = base_edge.radius();
    double t_right = std::atanh(right.x / r0);
    double spacing = 2.0 * t_right / static_cast<double>(samples - 1);
    double local_min = std::numeric_limits<double>::infinity();
    double argmin_t = 0.0;
    for (long i = 0; i < samples; ++i) {
      double t = -t_right + spacing * static_cast<double>(i);
      UHPoint d = point_at_parameter(base_edge, t);
      double margin = hyp_distance(apex, d) - 0.5 * L;
      ++r.trials;
      if (!(margin > 0.0)) ++r.failures;
      if (margin < local_min) {
        local_min = margin;
        argmin_t = t;
      }
    }
    // CAT(0) comparison: the closest base point to the apex is the midpoint.
    if (std::abs(argmin_t) > spacing) ++r.failures;
    per_length[std::to_string(L)] = local_min;
    min_margin = std::min(min_margin, local_min);
    if (L == 1.0) {
      UHPoint midpoint = point_at_parameter(base_edge, 0.0);
      double expected = std::acosh(std::cosh(1.0) / std::cosh(0.5));
      double err = std::abs(hyp_distance(apex, midpoint) - expected);
      r.details["midpoint_value"] = hyp_distance(apex, midpoint);
      r.details["midpoint_oracle"] = expected;
      r.details["midpoint_error"] = err;
      if (!(err < 1e-6)) ++r.failures;
    }
  }
  r.details["min_margin"] = min_margin;
  r.details["margin_by_length"] = per_length;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_unit_speed(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("unit-speed", seed, budget);
  Rng rng(seed);
  double worst = 0.0;
  for (long i = 0; i < budget; ++i) {
    Geodesic g = (i % 2 == 0)
                     ? Geodesic::vertical(rng.real(-10.0, 10.0))
                     : Geodesic::semicircle(rng.real(-10.0, 10.0), rng.real(0.1, 10.0));
    double s = rng.real(-5.0, 5.0);
    double t = rng.real(-5.0, 5.0);
    double dev = std::abs(hyp_distance(point_at_parameter(g, s), point_at_parameter(g, t)) -
                          std::abs(s - t));
    worst = std::max(worst, dev);
    ++r.trials;
    if (!(dev < 1e-8)) ++r.failures;
  }
  r.details["max_deviation"] = worst;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_direction_injectivity(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("direction-injectivity", seed, budget);
  Rng rng(seed);
  UHPoint base(0.0, 1.0);
  std::set<double> targets;
  while (static_cast<long>(targets.size()) < budget) {
    targets.insert(rng.real(-50.0, 50.0));
  }
  std::vector<double> angles;
  angles.push_back(direction_at(base, BoundaryPoint::infinity()));
  for (double t : targets) angles.push_back(direction_at(base, BoundaryPoint(t)));
  r.trials = static_cast<long>(angles.size());
  std::sort(angles.begin(), angles.end());
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    if (!(angles[i] < angles[i + 1])) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_conjugation_map(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("conjugation-map", seed, budget);
  const IntMatrix2 reflect = IntMatrix2::reflection();
  // Rational test points; the map must be z -> -conj(z) exactly.
  for (int xi = -8; xi <= 8; ++xi) {
    for (int yi = 1; yi <= 4; ++yi) {
      double x = xi / 4.0;
      double y = yi / 2.0;
      UHPoint image = apply_isometry(reflect, UHPoint(x, y));
      ++r.trials;
      if (image.x != -x || image.y != y) ++r.failures;
    }
  }
  // Exact boundary action: p/q -> -p/q.
  for (const Slope& s : slopes_up_to(10)) {
    ++r.trials;
    if (act_on_slope(reflect, s) != Slope::make(-s.p(), s.q())) ++r.failures;
  }
  // Fixed imaginary axis.
  long axis_samples = budget > 0 ? budget : 20;
  double worst = 0.0;
  for (long k = 1; k <= axis_samples; ++k) {
    double y = 0.1 * static_cast<double>(k);
    UHPoint image = apply_isometry(reflect, UHPoint(0.0, y));
    double dev = std::max(std::abs(image.x), std::abs(image.y - y));
    worst = std::max(worst, dev);
    ++r.trials;
    if (!(dev <= 1e-12)) ++r.failures;
  }
  r.details["axis_max_deviation"] = worst;
  r.pass = r.failures == 0;
  return r;
}

// --- farey geometry ---------------------------------------------------------

SuiteReport run_cutting_length(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("cutting-length", seed, budget);
  std::vector<Slope> endpoints = slopes_up_to(12);
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
      std::size_t length = cutting_sequence(endpoints[i], endpoints[j]).size();
      bool adjacent = is_adjacent(endpoints[i], endpoints[j]);
      ++r.trials;
      // Adjacent (distance 1) iff empty; distance > 1 forces >= 2 triangles.
      if (adjacent ? length != 0 : length < 2) ++r.failures;
    }
  }
  r.details["endpoint_bound"] = 12;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_cutting_chain(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("cutting-chain", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    Slope a = rng.slope(30), b = rng.slope(30);
    if (a == b || is_adjacent(a, b)) continue;
    std::vector<FareyTriangle> seq = cutting_sequence(a, b);
    ++r.trials;
    bool ok = seq.size() >= 2 && seq.front().has_vertex(a) && seq.back().has_vertex(b);
    for (std::size_t k = 0; ok && k + 1 < seq.size(); ++k) {
      ok = seq[k].shared_vertices(seq[k + 1]) == 2;
    }
    if (!ok) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_cutting_equivariance(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("cutting-equivariance", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    Slope a = rng.slope(20), b = rng.slope(20);
    if (a == b || is_adjacent(a, b)) continue;
    IntMatrix2 m = rng.word_matrix(14);
    std::vector<FareyTriangle> mapped;
    for (const FareyTriangle& t : cutting_sequence(a, b)) {
      mapped.emplace_back(act_on_slope(m, t.v0()), act_on_slope(m, t.v1()),
                          act_on_slope(m, t.v2()));
    }
    std::vector<FareyTriangle> direct = cutting_sequence(act_on_slope(m, a), act_on_slope(m, b));
    ++r.trials;
    if (!(mapped == direct)) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_tessellation_coverage(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("tessellation-coverage", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    UHPoint z(rng.real(-5.0, 5.0), rng.real(1e-9, 5.0));
    ++r.trials;
    try {
      FareyTriangle t = locate_triangle(z);
      if (!triangle_contains(t, z, 1e-12)) ++r.failures;
    } catch (const std::exception&) {
      ++r.failures;
    }
  }
  r.pass = r.failures == 0;
  return r;
}

// --- modular group -----------------------------------------------------------

SuiteReport run_adjacency_preservation(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("adjacency-preservation", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    IntMatrix2 m = rng.word_matrix(20);
    auto [a, b] = rng.adjacent_pair(14);
    ++r.trials;
    if (!is_adjacent(act_on_slope(m, a), act_on_slope(m, b))) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_boundary_compatibility(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("boundary-compatibility", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    IntMatrix2 m = rng.word_matrix(12);
    Slope s = rng.finite_slope(30);
    Slope image = act_on_slope(m, s);
    UHPoint probe(s.value(), 1e-6);
    UHPoint mapped = apply_isometry(m, probe);
    ++r.trials;
    if (image.is_infinite()) {
      // The plane orbit must escape upward at the pole: y = 1/(c^2 t).
      if (!(mapped.y > 1.0)) ++r.failures;
    } else {
      if (!(std::abs(mapped.x - image.value()) < 1e-3) || !(mapped.y < 1e-3)) ++r.failures;
    }
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_kernel(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("kernel", seed, budget);
  long range = budget > 0 ? budget : 3;
  long kernel_size = 0;
  for (long a = -range; a <= range; ++a) {
    for (long b = -range; b <= range; ++b) {
      for (long c = -range; c <= range; ++c) {
        for (long d = -range; d <= range; ++d) {
          long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          IntMatrix2 m(a, b, c, d);
          bool trivial = acts_trivially_on_slopes(m);
          bool is_pm_identity = (a == 1 && b == 0 && c == 0 && d == 1) ||
                                (a == -1 && b == 0 && c == 0 && d == -1);
          ++r.trials;
          if (trivial != is_pm_identity) ++r.failures;
          if (trivial) ++kernel_size;
        }
      }
    }
  }
  r.details["entry_range"] = range;
  r.details["kernel_size"] = kernel_size;  // {I, -I}
  r.pass = r.failures == 0 && kernel_size == 2;
  return r;
}

SuiteReport run_decompose_roundtrip(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("decompose-roundtrip", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    IntMatrix2 m = rng.word_matrix(30);
    IntMatrix2 back = evaluate_word(decompose(m));
    ++r.trials;
    if (!back.projectively_equal(m)) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_edge_transitivity(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("edge-transitivity", seed, budget);
  Rng rng(seed);
  const Slope zero = Slope::make(0, 1);
  const Slope inf = Slope::infinity();
  for (long i = 0; i < budget; ++i) {
    auto [a, b] = rng.adjacent_pair(16);
    IntMatrix2 n = edge_normalizer(FareyEdge(a, b));
    Slope ia = act_on_slope(n, a);
    Slope ib = act_on_slope(n, b);
    ++r.trials;
    bool ok = (ia == inf && ib == zero) || (ia == zero && ib == inf);
    if (!ok) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

// --- model surface -----------------------------------------------------------

SuiteReport run_elementary_farey(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("elementary-farey", seed, budget);
  long bound = budget > 0 ? budget : 50;
  std::vector<Slope> all = slopes_up_to(bound);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool adjacent = is_adjacent(all[i], all[j]);
      for (SurfaceModel m : {SurfaceModel::OneHoledTorus, SurfaceModel::FourHoledSphere}) {
        PantsDecomposition p{m, all[i]}, p2{m, all[j]};
        ++r.trials;
        if (is_elementary_move(p, p2) != adjacent) ++r.failures;
      }
    }
  }
  r.details["bound"] = bound;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_metric_scale(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("metric-scale", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    UHPoint z = rng.point(10.0, 10.0);
    UHPoint w = rng.point(10.0, 10.0);
    UHPoint w2 = rng.point(10.0, 10.0);
    double d11 = model_distance(SurfaceModel::OneHoledTorus, z, w);
    double d04 = model_distance(SurfaceModel::FourHoledSphere, z, w);
    ++r.trials;
    if (d04 != 2.0 * d11) ++r.failures;
    // Comparison predicates agree between the two scalings.
    bool closer11 = model_distance(SurfaceModel::OneHoledTorus, z, w) <
                    model_distance(SurfaceModel::OneHoledTorus, z, w2);
    bool closer04 = model_distance(SurfaceModel::FourHoledSphere, z, w) <
                    model_distance(SurfaceModel::FourHoledSphere, z, w2);
    if (closer11 != closer04) ++r.failures;
  }
  r.details["ratio"] = 2.0;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_intersection_equivariance(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("intersection-equivariance", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    IntMatrix2 m = rng.word_matrix(16);
    Slope a = rng.slope(50), b = rng.slope(50);
    for (SurfaceModel model : {SurfaceModel::OneHoledTorus, SurfaceModel::FourHoledSphere}) {
      ++r.trials;
      if (intersection_number(model, act_on_slope(m, a), act_on_slope(m, b)) !=
          intersection_number(model, a, b)) {
        ++r.failures;
      }
    }
  }
  r.pass = r.failures == 0;
  return r;
}

// --- augmented ---------------------------------------------------------------

SuiteReport run_strata_preservation(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("strata-preservation", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    IntMatrix2 m = rng.word_matrix(20);
    CompletedPoint x = (i % 2 == 0) ? CompletedPoint::interior(rng.point(5.0, 5.0))
                                    : CompletedPoint::noded(rng.slope(50));
    CompletedPoint y = apply_to_completed(m, x);
    ++r.trials;
    if (stratum_of(x).k() != stratum_of(y).k()) ++r.failures;
    if (!x.is_interior()) {
      // Boundary rationals map to boundary rationals, exactly.
      if (y.is_interior() || y.pinched_curve() != act_on_slope(m, x.pinched_curve())) {
        ++r.failures;
      }
    }
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_stratum_isolation(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("stratum-isolation", seed, budget);
  long bound = budget > 0 ? budget : 20;
  std::vector<Slope> noded = slopes_up_to(bound);
  for (std::size_t i = 0; i < noded.size(); ++i) {
    for (std::size_t j = i + 1; j < noded.size(); ++j) {
      double level = isolation_level(noded[i], noded[j]);
      ++r.trials;
      if (!horoballs_disjoint(Horoball(noded[i], level), Horoball(noded[j], level))) {
        ++r.failures;
      }
    }
  }
  r.details["denominator_bound"] = bound;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_horoball_nesting(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("horoball-nesting", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    Slope base = rng.slope(20);
    double low = rng.real(0.1, 2.0);
    double high = low + rng.real(0.1, 2.0);
    UHPoint z = rng.point(5.0, 5.0);
    ++r.trials;
    if (horoball_contains(Horoball(base, high), z) &&
        !horoball_contains(Horoball(base, low), z)) {
      ++r.failures;
    }
    // Constructed witness strictly inside the higher ball.
    IntMatrix2 to_base = completion_matrix(base);
    UHPoint inside = apply_isometry(to_base, UHPoint(rng.real(-3.0, 3.0), high * 1.5));
    if (!horoball_contains(Horoball(base, high), inside) ||
        !horoball_contains(Horoball(base, low), inside)) {
      ++r.failures;
    }
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_horoball_equivariance(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("horoball-equivariance", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    // Upper-triangular stabilizer of infinity, both determinant signs.
    long n = rng.integer(-40, 40);
    long s1 = rng.integer(0, 1) == 0 ? 1 : -1;
    long s2 = rng.integer(0, 1) == 0 ? 1 : -1;
    IntMatrix2 m(s1, n, 0, s2);
    Horoball h(Slope::infinity(), rng.real(0.1, 3.0));
    UHPoint z = rng.point(5.0, 5.0);
    Horoball image(act_on_slope(m, h.base), h.level);
    ++r.trials;
    if (horoball_contains(image, apply_isometry(m, z)) != horoball_contains(h, z)) {
      ++r.failures;
    }
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_closure_order(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("closure-order", seed, budget);
  const Slope curves[] = {Slope::make(0, 1), Slope::make(1, 1), Slope::infinity()};
  std::vector<StratumIndex> strata;
  for (int mask = 0; mask < 8; ++mask) {
    std::set<Slope> pinched;
    for (int bit = 0; bit < 3; ++bit) {
      if (mask & (1 << bit)) pinched.insert(curves[bit]);
    }
    strata.emplace_back(std::move(pinched));
  }
  for (const StratumIndex& s : strata) {
    ++r.trials;
    if (!closure_contains(s, s)) ++r.failures;  // reflexive
  }
  for (const StratumIndex& s : strata) {
    for (const StratumIndex& t : strata) {
      ++r.trials;
      if (closure_contains(s, t) && closure_contains(t, s) && !(s == t)) ++r.failures;
      for (const StratumIndex& u : strata) {
        ++r.trials;
        if (closure_contains(s, t) && closure_contains(t, u) && !closure_contains(s, u)) {
          ++r.failures;
        }
      }
    }
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_chart_quotient(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("chart-quotient", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    int n = static_cast<int>(rng.integer(1, 3));
    std::vector<FNEntry> entries;
    std::set<Slope> used;
    while (static_cast<int>(entries.size()) < n) {
      Slope c = rng.slope(10);
      if (!used.insert(c).second) continue;
      bool pinched = rng.integer(0, 1) == 0;
      entries.push_back(FNEntry{c, pinched ? 0.0 : rng.real(0.1, 5.0), rng.real(-5.0, 5.0)});
    }
    ExtendedFNChart chart(entries);
    // Twists at pinched entries are quotiented away.
    std::vector<FNEntry> shuffled = entries;
    for (FNEntry& e : shuffled) {
      if (e.length == 0.0) e.twist = rng.real(-5.0, 5.0);
    }
    ++r.trials;
    if (!chart_equal(chart, ExtendedFNChart(shuffled))) ++r.failures;
    // A twist change at a positive-length entry must be seen.
    int unpinched = -1;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].length > 0.0) unpinched = static_cast<int>(k);
    }
    if (unpinched >= 0) {
      std::vector<FNEntry> moved = entries;
      moved[unpinched].twist += 1.0;
      if (chart_equal(chart, ExtendedFNChart(moved))) ++r.failures;
    }
    // A length change must always be seen.
    std::vector<FNEntry> stretched = entries;
    stretched[0].length += 1.0;
    if (chart_equal(chart, ExtendedFNChart(stretched))) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_induced_automorphism(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("induced-automorphism", seed, budget);
  Rng rng(seed);
  for (long i = 0; i < budget; ++i) {
    InducedPantsMap f = induced_pants_automorphism(rng.word_matrix(20));
    ++r.trials;
    if (!f.preserves_adjacency_up_to(10)) ++r.failures;
  }
  r.details["certificate_bound"] = 10;
  r.pass = r.failures == 0;
  return r;
}

SuiteReport run_dense_direction(std::uint64_t seed, long budget) {
  SuiteReport r = make_report("dense-direction", seed, budget);
  long angles = budget > 0 ? budget : 64;
  UHPoint base(0.0, 1.0);
  double worst_coarse = 0.0, worst_fine = 0.0;
  for (long k = 0; k < angles; ++k) {
    double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(angles);
    ++r.trials;
    try {
      Slope s = dense_direction(base, phi, 1e-3);
      double err = angle_distance(direction_at(base, BoundaryPoint(s)), phi);
      worst_coarse = std::max(worst_coarse, err);
      if (!(err < 1e-3)) ++r.failures;
    } catch (const std::exception&) {
      ++r.failures;
    }
    if (k % 4 == 0) {
      ++r.trials;
      try {
        Slope s = dense_direction(base, phi, 1e-6);
        double err = angle_distance(direction_at(base, BoundaryPoint(s)), phi);
        worst_fine = std::max(worst_fine, err);
        if (!(err < 1e-6)) ++r.failures;
      } catch (const std::exception&) {
        ++r.failures;
      }
    }
  }
  r.details["max_error_at_1e-3"] = worst_coarse;
  r.details["max_error_at_1e-6"] = worst_fine;
  r.pass = r.failures == 0;
  return r;
}

const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites = {
      {"farey-adjacency", "adjacency is symmetric and irreflexive", 10000, run_farey_adjacency},
      {"mediant-adjacency", "the mediant is adjacent to both parents", 10000,
       run_mediant_adjacency},
      {"farey-triangle-inequality", "farey_distance satisfies the triangle inequality", 300,
       run_distance_triangle},
      {"farey-distance-oracle",
       "production distance equals exhaustive BFS (bound 50) on all pairs with |p|, q <= 12",
       0, run_distance_oracle},
      {"geodesic-witness", "farey_geodesic is a valid shortest path", 500, run_geodesic_witness},
      {"isometry-invariance", "hyperbolic distance is GL(2,Z)-invariant to 1e-9", 10000,
       run_isometry_invariance},
      {"lemma-triangle", "equilateral triangles: d(A, D) > L/2 on the far side", 100,
       run_lemma_triangle},
      {"unit-speed", "point_at_parameter is unit-speed to 1e-8", 2000, run_unit_speed},
      {"direction-injectivity", "direction_at is injective over boundary targets", 1000,
       run_direction_injectivity},
      {"conjugation-map", "[[1,0],[0,-1]] acts as z -> -conj(z) and fixes the imaginary axis",
       20, run_conjugation_map},
      {"cutting-length", "cutting sequences are empty iff adjacent, else length >= 2", 0,
       run_cutting_length},
      {"cutting-chain", "consecutive cutting triangles share exactly one edge", 500,
       run_cutting_chain},
      {"cutting-equivariance", "cutting sequences commute with the PGL(2,Z) action", 300,
       run_cutting_equivariance},
      {"tessellation-coverage", "random points locate to a containing triangle", 10000,
       run_tessellation_coverage},
      {"adjacency-preservation", "mapping classes preserve Farey adjacency", 10000,
       run_adjacency_preservation},
      {"boundary-compatibility", "act_on_slope is the boundary limit of apply_isometry", 500,
       run_boundary_compatibility},
      {"kernel", "exactly +-identity acts trivially on slopes (exhaustive)", 0, run_kernel},
      {"decompose-roundtrip", "decompose recomposes projectively", 10000,
       run_decompose_roundtrip},
      {"edge-transitivity", "edge_normalizer moves any edge onto {1/0, 0/1}", 2000,
       run_edge_transitivity},
      {"elementary-farey", "elementary moves coincide with Farey adjacency (exhaustive)", 0,
       run_elementary_farey},
      {"metric-scale", "s04 distances are exactly twice s11 distances", 1000, run_metric_scale},
      {"intersection-equivariance", "intersection numbers are mapping-class invariants", 2000,
       run_intersection_equivariance},
      {"strata-preservation", "isometries preserve stratum size; rationals stay rational", 1000,
       run_strata_preservation},
      {"stratum-isolation", "distinct noded points admit disjoint horoballs (exhaustive)", 0,
       run_stratum_isolation},
      {"horoball-nesting", "higher levels give smaller horoballs", 2000, run_horoball_nesting},
      {"horoball-equivariance", "the stabilizer of the base preserves containment", 2000,
       run_horoball_equivariance},
      {"closure-order", "closure containment is a partial order (exhaustive)", 0,
       run_closure_order},
      {"chart-quotient", "twists are forgotten exactly at pinched curves", 1000,
       run_chart_quotient},
      {"induced-automorphism", "induced maps certify adjacency preservation", 200,
       run_induced_automorphism},
      {"dense-direction", "noded directions are dense in the visual circle", 64,
       run_dense_direction},
  };
  return suites;
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() { return registry(); }

SuiteReport run_suite(std::string_view name, std::uint64_t seed, long budget) {
  for (const SuiteInfo& info : registry()) {
    if (info.name == name) {
      long effective = budget < 0 ? info.default_budget : budget;
      return info.run(seed, effective);
    }
  }
  std::string names;
  for (const SuiteInfo& info : registry()) {
    if (!names.empty()) names += ", ";
    names += info.name;
  }
  throw std::invalid_argument("unknown verification suite '" + std::string(name) +
                              "'; available: " + names);
}

}  // namespace pantsgraph
