#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pantsgraph/slope.hpp"

using namespace pantsgraph;

TEST_CASE("make_slope canonicalizes") {
  CHECK(Slope::make(2, 4) == Slope::make(1, 2));
  CHECK(Slope::make(-3, 0) == Slope::infinity());
  CHECK(Slope::make(3, -6) == Slope::make(-1, 2));
  CHECK(Slope::make(-1, 2).q() == 2);
  CHECK(Slope::make(-1, 2).p() == -1);
  CHECK_THROWS_AS(Slope::make(0, 0), std::invalid_argument);

  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> coeff(1, 50), val(-40, 40);
  for (int i = 0; i < 200; ++i) {
    long p = val(gen), q = val(gen);
    if (p == 0 && q == 0) continue;
    long a = coeff(gen);
    CHECK(Slope::make(a * p, a * q) == Slope::make(p, q));
    CHECK(Slope::make(-a * p, -a * q) == Slope::make(p, q));
  }
}

TEST_CASE("slope parsing and formatting") {
  CHECK(Slope::parse("-1/2").str() == "-1/2");
  CHECK(Slope::parse("1/0") == Slope::infinity());
  CHECK(Slope::parse("7") == Slope::make(7, 1));
  CHECK(Slope::parse("4/6").str() == "2/3");
  CHECK_THROWS_AS(Slope::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("0/0"), std::invalid_argument);
}

TEST_CASE("slope ordering puts infinity last") {
  CHECK(Slope::make(-1, 2) < Slope::make(1, 3));
  CHECK(Slope::make(1, 3) < Slope::infinity());
  CHECK_FALSE(Slope::infinity() < Slope::make(100, 1));
  CHECK_FALSE(Slope::infinity() < Slope::infinity());
}

TEST_CASE("farey adjacency criterion") {
  CHECK(is_adjacent(Slope::make(0, 1), Slope::make(1, 1)));
  CHECK_FALSE(is_adjacent(Slope::make(0, 1), Slope::make(2, 5)));
  Slope a = Slope::make(3, 7);
  CHECK_FALSE(is_adjacent(a, a));
}

TEST_CASE("mediant of adjacent slopes") {
  CHECK(mediant(Slope::make(0, 1), Slope::make(1, 1)) == Slope::make(1, 2));
  CHECK(mediant(Slope::make(0, 1), Slope::infinity()) == Slope::make(1, 1));
  Slope m = mediant(Slope::make(1, 2), Slope::make(1, 3));
  CHECK(m == Slope::make(2, 5));
  CHECK(is_adjacent(m, Slope::make(1, 2)));
  CHECK(is_adjacent(m, Slope::make(1, 3)));
  CHECK_THROWS_AS(mediant(Slope::make(0, 1), Slope::make(2, 5)), std::invalid_argument);
}

TEST_CASE("neighbors_bounded matches the brute-force scan") {
  std::vector<Slope> expected = {Slope::make(-3, 1), Slope::make(-2, 1), Slope::make(-1, 1),
                                 Slope::make(0, 1),  Slope::make(1, 1),  Slope::make(2, 1),
                                 Slope::make(3, 1)};
  CHECK(neighbors_bounded(Slope::infinity(), 3) == expected);

  std::vector<Slope> zero_nbrs = {Slope::make(-1, 1), Slope::make(1, 1), Slope::infinity()};
  CHECK(neighbors_bounded(Slope::make(0, 1), 1) == zero_nbrs);

  CHECK_THROWS_AS(neighbors_bounded(Slope::make(0, 1), 0), std::invalid_argument);

  for (const Slope& s : {Slope::make(0, 1), Slope::make(1, 2), Slope::make(-3, 5),
                         Slope::make(7, 2), Slope::infinity()}) {
    for (long bound : {1L, 4L, 9L}) {
      CHECK(neighbors_bounded(s, bound) == oracles::scan_neighbors(s, bound));
    }
  }
}

TEST_CASE("slopes_up_to matches the scan") {
  CHECK(slopes_up_to(2) == oracles::scan_slopes(2));
  CHECK(slopes_up_to(7) == oracles::scan_slopes(7));
  CHECK_THROWS_AS(slopes_up_to(0), std::invalid_argument);
}

TEST_CASE("farey_distance basics") {
  Slope zero = Slope::make(0, 1);
  CHECK(farey_distance(zero, zero) == 0);
  CHECK(farey_distance(zero, Slope::make(1, 1)) == 1);
  CHECK(farey_distance(zero, Slope::make(2, 5)) == 2);
  CHECK(oracles::bfs_distance(zero, Slope::make(2, 5), 10) == 2);
}

TEST_CASE("farey_distance agrees with BFS oracle at small scale") {
  std::vector<Slope> endpoints = oracles::scan_slopes(6);
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
  for (int i = 0; i < 60; ++i) {
    const Slope& a = endpoints[pick(gen)];
    const Slope& b = endpoints[pick(gen)];
    CHECK(farey_distance(a, b) == oracles::bfs_distance(a, b, 40));
  }
}

TEST_CASE("farey_geodesic is a valid deterministic witness") {
  Slope zero = Slope::make(0, 1);
  CHECK(farey_geodesic(zero, zero) == std::vector<Slope>{zero});
  CHECK(farey_geodesic(zero, Slope::make(1, 1)) ==
        std::vector<Slope>{zero, Slope::make(1, 1)});

  Slope target = Slope::make(2, 5);
  std::vector<Slope> path = farey_geodesic(zero, target);
  REQUIRE(path.size() == 3);
  CHECK(path.front() == zero);
  CHECK(path.back() == target);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    CHECK(is_adjacent(path[i], path[i + 1]));
  }
  CHECK(farey_geodesic(zero, target) == path);  // deterministic

  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> val(-30, 30), den(0, 30);
  for (int i = 0; i < 40; ++i) {
    long p = val(gen), q = den(gen);
    if (p == 0 && q == 0) continue;
    Slope a = Slope::make(p, q);
    Slope b = Slope::make(val(gen), den(gen) == 0 ? 1 : den(gen));
    long d = farey_distance(a, b);
    std::vector<Slope> w = farey_geodesic(a, b);
    CHECK(static_cast<long>(w.size()) == d + 1);
    CHECK(w.front() == a);
    CHECK(w.back() == b);
    for (std::size_t k = 0; k + 1 < w.size(); ++k) CHECK(is_adjacent(w[k], w[k + 1]));
  }
}

TEST_CASE("simplest_slope_between") {
  CHECK(simplest_slope_between(0.3, 0.5) == Slope::make(1, 3));
  CHECK(simplest_slope_between(-0.1, 0.2) == Slope::make(0, 1));
  CHECK(simplest_slope_between(2.1, 2.9) == Slope::make(5, 2));
  CHECK(simplest_slope_between(-0.75, -0.7) == Slope::make(-5, 7));
  CHECK_THROWS_AS(simplest_slope_between(1.0, 1.0), std::invalid_argument);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    double a = u(gen), b = u(gen);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    Slope s = simplest_slope_between(a, b);
    double v = s.value();
    CHECK(v > a);
    CHECK(v < b);
  }
}

TEST_CASE("farey edge and triangle validation") {
  CHECK_THROWS_AS(FareyEdge(Slope::make(0, 1), Slope::make(2, 5)), std::invalid_argument);
  FareyEdge e(Slope::make(1, 1), Slope::make(0, 1));
  CHECK(e.low() == Slope::make(0, 1));
  CHECK(e.high() == Slope::make(1, 1));

  CHECK_NOTHROW(FareyTriangle(Slope::make(0, 1), Slope::make(1, 1), Slope::infinity()));
  // The anti-mediant triangle on the other side of the edge (0/1, 1/0).
  CHECK_NOTHROW(FareyTriangle(Slope::make(0, 1), Slope::infinity(), Slope::make(-1, 1)));
  CHECK_THROWS_AS(FareyTriangle(Slope::make(0, 1), Slope::make(1, 1), Slope::make(2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(FareyTriangle(Slope::make(0, 1), Slope::make(0, 1), Slope::make(1, 1)),
                  std::invalid_argument);

  FareyTriangle t(Slope::infinity(), Slope::make(1, 1), Slope::make(0, 1));
  CHECK(t.v0() == Slope::make(0, 1));  // sorted, infinity last
  CHECK(t.v2() == Slope::infinity());
  CHECK(t.has_vertex(Slope::make(1, 1)));
  FareyTriangle t2(Slope::make(1, 2), Slope::make(1, 1), Slope::make(0, 1));
  CHECK(t.shared_vertices(t2) == 2);
}

TEST_CASE("slope arithmetic stays exact far beyond 64 bits") {
  // Walk the mediant ladder 150 steps: entries grow like Fibonacci numbers
  // and overflow any fixed width long before 150.
  Slope a = Slope::make(0, 1);
  Slope b = Slope::infinity();
  for (int i = 0; i < 150; ++i) {
    Slope m = mediant(a, b);
    CHECK(is_adjacent(m, a));
    CHECK(is_adjacent(m, b));
    a = b;
    b = m;
  }
  CHECK(b.q() > BigInt("1000000000000000000000000"));
}
