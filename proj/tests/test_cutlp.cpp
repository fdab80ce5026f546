#include "embedlb/cutlp.hpp"

#include "doctest.h"
#include "embedlb/fourier.hpp"
#include "embedlb/rng.hpp"

using namespace embedlb;

namespace {

FiniteMetric k23_metric() {
  // Complete bipartite K_{2,3} shortest-path metric: parts {0,1}, {2,3,4}.
  const int n = 5;
  std::vector<Rat> dist(25, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool same_part = (i < 2 && j < 2) || (i >= 2 && j >= 2);
      dist[size_t(i) * n + j] = same_part ? 2 : 1;
    }
  return FiniteMetric(n, std::move(dist));
}

FiniteMetric random_small_metric(int n, std::uint64_t seed) {
  CounterRng rng(seed, 0x3E);
  std::vector<Rat> dist(size_t(n) * size_t(n), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat v = Rat(4 + int(rng.next() % 5), 4);
      dist[size_t(i) * n + j] = v;
      dist[size_t(j) * n + i] = v;
    }
  return FiniteMetric(n, std::move(dist));
}

}  // namespace

TEST_SUITE("cutlp") {

TEST_CASE("generic simplex solves a tiny LP") {
  // min -x - y st x + 2y <= 4, 3x + y <= 6  ->  optimum at (8/5, 6/5).
  std::vector<std::vector<Rat>> A = {{Rat(1), Rat(2)}, {Rat(3), Rat(1)}};
  std::vector<Rat> b = {Rat(4), Rat(6)};
  std::vector<Rat> c = {Rat(-1), Rat(-1)};
  auto r = solve_lp_min(A, b, c);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == Rat(-14, 5));
  CHECK(r.x[0] == Rat(8, 5));
  CHECK(r.x[1] == Rat(6, 5));
}

TEST_CASE("simplex detects infeasibility and unboundedness") {
  // x <= -1, x >= 0 infeasible.
  auto inf = solve_lp_min({{Rat(1)}}, {Rat(-1)}, {Rat(1)});
  CHECK(inf.status == LpStatus::infeasible);
  // min -x, x unconstrained above.
  auto unb = solve_lp_min({{Rat(-1)}}, {Rat(0)}, {Rat(-1)});
  CHECK(unb.status == LpStatus::unbounded);
}

TEST_CASE("hypercubes embed isometrically") {
  auto r2 = exact_c1_lp(FiniteMetric::hamming_cube(2));
  CHECK(r2.value == Rat(1));
  auto r3 = exact_c1_lp(FiniteMetric::hamming_cube(3));
  CHECK(r3.value == Rat(1));
  // Witness reproduces the metric exactly at optimum C = 1.
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      CHECK(r3.witness.semimetric(x, y) == Rat(hamming(CubePoint(x), CubePoint(y))));
}

TEST_CASE("equilateral triangle is L1-embeddable") {
  std::vector<Rat> dist = {Rat(0), Rat(1), Rat(1), Rat(1), Rat(0), Rat(1),
                           Rat(1), Rat(1), Rat(0)};
  auto r = exact_c1_lp(FiniteMetric(3, std::move(dist)));
  CHECK(r.value == Rat(1));
}

TEST_CASE("K_{2,3} needs distortion exactly 4/3") {
  auto r = exact_c1_lp(k23_metric());
  CHECK(r.value == Rat(4, 3));
}

TEST_CASE("feeding a witness semimetric back gives value 1") {
  auto base = exact_c1_lp(k23_metric());
  // The witness decomposition induces a cut-cone metric; offset by the
  // base metric to keep it positive: (semimetric + d)/2 is again a metric
  // within the sandwich, so instead scale-check the pure witness on pairs
  // where it is positive. Here the witness at optimum stays positive on
  // all pairs, hence is itself a metric.
  const int n = 5;
  std::vector<Rat> dist(25, Rat(0));
  bool positive = true;
  for (int i = 0; i < n && positive; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat v = base.witness.semimetric(i, j);
      if (v <= 0) {
        positive = false;
        break;
      }
      dist[size_t(i) * n + j] = v;
      dist[size_t(j) * n + i] = v;
    }
  REQUIRE(positive);
  auto r = exact_c1_lp(FiniteMetric(n, std::move(dist)));
  CHECK(r.value == Rat(1));
}

TEST_CASE("monotone under subspaces") {
  for (std::uint64_t t = 0; t < 12; ++t) {
    auto X = random_small_metric(6, 300 + t);
    auto full = exact_c1_lp(X);
    // Drop the last point.
    std::vector<Rat> sub(25);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) sub[size_t(i) * 5 + j] = X.at(i, j);
    auto part = exact_c1_lp(FiniteMetric(5, std::move(sub)));
    CHECK(part.value <= full.value);
  }
}

TEST_CASE("capacity") {
  CHECK_THROWS_AS(exact_c1_lp(FiniteMetric::hamming_cube(4)), capacity_error);
}

}  // TEST_SUITE
