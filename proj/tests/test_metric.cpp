#include "embedlb/metric.hpp"

#include <cmath>

#include "doctest.h"
#include "embedlb/fourier.hpp"
#include "embedlb/rng.hpp"

using namespace embedlb;

namespace {

// Random metric with small denominators: entries k/4 in [1, 2] make the
// triangle inequality automatic and keep the exact LP fast.
FiniteMetric random_metric(int n, std::uint64_t seed) {
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

FiniteMetric path_metric(const std::vector<Rat>& edges) {
  const int n = int(edges.size()) + 1;
  std::vector<Rat> dist(size_t(n) * size_t(n), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat s = 0;
      for (int k = i; k < j; ++k) s += edges[size_t(k)];
      dist[size_t(i) * n + j] = s;
      dist[size_t(j) * n + i] = s;
    }
  return FiniteMetric(n, std::move(dist));
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("construction validates axioms") {
  std::vector<Rat> bad = {Rat(0), Rat(1), Rat(1), Rat(0)};
  CHECK_NOTHROW(FiniteMetric(2, bad));
  bad[1] = Rat(-1);
  bad[2] = Rat(-1);
  CHECK_THROWS_AS(FiniteMetric(2, bad), std::invalid_argument);
  // Triangle violation: d(0,2) = 5 > 1 + 1.
  std::vector<Rat> tri = {Rat(0), Rat(1), Rat(5), Rat(1), Rat(0), Rat(1),
                          Rat(5), Rat(1), Rat(0)};
  CHECK_THROWS_AS(FiniteMetric(3, tri), std::invalid_argument);
}

TEST_CASE("hausdorff distance") {
  auto cube = FiniteMetric::hamming_cube(3);
  std::vector<int> A{0b000}, B{0b011, 0b101};
  CHECK(hausdorff_distance(cube, A, B) == Rat(2));
  CHECK(hausdorff_distance(cube, B, B) == Rat(0));
  CHECK(hausdorff_distance(cube, {0b000}, {0b111}) == Rat(3));
  CHECK_THROWS_AS(hausdorff_distance(cube, {}, B), std::invalid_argument);
}

TEST_CASE("quotient metric basics") {
  auto cube = FiniteMetric::hamming_cube(2);
  SUBCASE("singleton blocks reproduce the base") {
    auto q = quotient_metric(cube, {{0}, {1}, {2}, {3}});
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(q.quotient.at(i, j) == cube.at(i, j));
  }
  SUBCASE("antipodal blocks of F_2^2") {
    auto q = quotient_metric(cube, {{0b00, 0b11}, {0b01, 0b10}});
    CHECK(q.quotient.n() == 2);
    CHECK(q.quotient.at(0, 1) == Rat(1));
  }
  SUBCASE("path with end-pairing needs the shortest-path closure") {
    // a-b-c-d unit path, blocks {a,d},{b,c}: min distance is 1.
    auto p = path_metric({Rat(1), Rat(1), Rat(1)});
    auto q = quotient_metric(p, {{0, 3}, {1, 2}});
    CHECK(q.quotient.at(0, 1) == Rat(1));
  }
  SUBCASE("non-partitions are rejected") {
    CHECK_THROWS_AS(quotient_metric(cube, {{0, 1}, {1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_metric(cube, {{0, 1}}), std::invalid_argument);
  }
}

TEST_CASE("quotient satisfies the triangle inequality on random metrics") {
  CounterRng rng(5, 9);
  for (std::uint64_t t = 0; t < 60; ++t) {
    int n = 4 + int(t % 7);  // up to 10
    auto X = random_metric(n, 100 + t);
    // Random partition into 2-4 blocks.
    int k = 2 + int(rng.next() % 3);
    auto blocks = std::vector<std::vector<int>>(size_t(k));
    for (int p = 0; p < n; ++p) blocks[size_t(rng.next() % std::uint64_t(k))].push_back(p);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    auto q = quotient_metric(X, blocks);
    const int m = q.quotient.n();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l)
          CHECK(q.quotient.at(i, j) <= q.quotient.at(i, l) + q.quotient.at(l, j));
  }
}

TEST_CASE("no-geo hypothesis and conclusion") {
  SUBCASE("orbit partition of the antipodal action") {
    auto cube = FiniteMetric::hamming_cube(3);
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(8, 0);
    for (int x = 0; x < 8; ++x) {
      if (seen[size_t(x)]) continue;
      seen[size_t(x)] = seen[size_t(x ^ 7)] = 1;
      orbits.push_back({x, x ^ 7});
    }
    auto q = quotient_metric(cube, orbits);
    auto r = verify_no_geo(q);
    CHECK(r.hypothesis_holds);
    CHECK(r.equality_holds);
  }
  SUBCASE("singleton partition") {
    auto cube = FiniteMetric::hamming_cube(2);
    auto q = quotient_metric(cube, {{0}, {1}, {2}, {3}});
    auto r = verify_no_geo(q);
    CHECK(r.hypothesis_holds);
    CHECK(r.equality_holds);
  }
  SUBCASE("adversarial 3-point path") {
    auto p = path_metric({Rat(1), Rat(1)});
    auto q = quotient_metric(p, {{0, 1}, {2}});
    auto r = verify_no_geo(q);
    CHECK_FALSE(r.hypothesis_holds);  // a is at distance 2 from {c}
  }
}

TEST_CASE("distortion measurement") {
  auto cube2 = FiniteMetric::hamming_cube(2);
  std::vector<std::vector<double>> coords2 = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto l1 = distortion(coords2, cube2, Norm::l1);
  CHECK(l1.injective);
  CHECK(l1.dist == doctest::Approx(1.0));

  auto cube3 = FiniteMetric::hamming_cube(3);
  std::vector<std::vector<double>> coords3(8);
  for (int x = 0; x < 8; ++x) coords3[size_t(x)] = {double(x & 1), double((x >> 1) & 1),
                                                    double((x >> 2) & 1)};
  auto l2 = distortion(coords3, cube3, Norm::l2);
  CHECK(l2.dist == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  std::vector<std::vector<double>> collapse = {{0}, {0}, {1}, {2}};
  auto bad = distortion(collapse, cube2, Norm::l2);
  CHECK_FALSE(bad.injective);
  CHECK(std::isinf(bad.dist));
}

}  // TEST_SUITE
