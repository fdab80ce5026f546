#include "embedlb/fourier.hpp"

#include <cmath>

#include "doctest.h"
#include "embedlb/rng.hpp"
#include "embedlb/tolerances.hpp"

using namespace embedlb;

namespace {

SpectralFunction random_function(int d, std::uint64_t seed, int m = 1) {
  CounterRng rng(seed, 0xF0);
  std::vector<double> vals((size_t(1) << d) * size_t(m));
  for (auto& v : vals) v = 2.0 * rng.next_unit() - 1.0;
  return SpectralFunction::from_values(d, std::move(vals), m);
}

SpectralFunction random_pm1(int d, std::uint64_t seed) {
  CounterRng rng(seed, 0xF1);
  std::vector<double> vals(size_t(1) << d);
  for (auto& v : vals) v = rng.next() & 1 ? 1.0 : -1.0;
  return SpectralFunction::from_values(d, std::move(vals));
}

double direct_coeff(const SpectralFunction& f, CubePoint A) {
  double s = 0;
  for (size_t x = 0; x < f.table_size(); ++x)
    s += f.values[x] * ((popcount(CubePoint(x) & A) & 1) ? -1.0 : 1.0);
  return s / double(f.table_size());
}

// Noise stability oracle: E f(x) f(x+z) with z ~ mu_eps, by 4^d summation.
double stability_oracle(const SpectralFunction& f, double q) {
  const int d = f.dim;
  const double eps = (1.0 - q) / 2.0;
  BiasedMeasure mu(eps, d);
  double s = 0;
  for (size_t x = 0; x < f.table_size(); ++x)
    for (size_t z = 0; z < f.table_size(); ++z)
      s += f.values[x] * f.values[x ^ z] * mu.weight(CubePoint(z));
  return s / double(f.table_size());
}

SpectralFunction majority5() {
  std::vector<double> vals(32);
  for (size_t x = 0; x < 32; ++x) vals[x] = popcount(x) >= 3 ? 1.0 : -1.0;
  return SpectralFunction::from_values(5, std::move(vals));
}

}  // namespace

TEST_SUITE("fourier") {

TEST_CASE("walsh transform of basis elements") {
  // W_{1,3} at d=3: all coefficient mass on A={1,3}.
  auto f = walsh_transform(SpectralFunction::walsh(3, 0b101));
  for (size_t A = 0; A < 8; ++A)
    CHECK(f.coeff(CubePoint(A)) == doctest::Approx(A == 0b101 ? 1.0 : 0.0).epsilon(1e-14));

  auto one = walsh_transform(SpectralFunction::constant(3, 1.0));
  for (size_t A = 0; A < 8; ++A)
    CHECK(one.coeff(CubePoint(A)) == doctest::Approx(A == 0 ? 1.0 : 0.0).epsilon(1e-14));
}

TEST_CASE("point indicator spreads evenly") {
  auto f = walsh_transform(SpectralFunction::indicator(3, {0}));
  for (size_t A = 0; A < 8; ++A) {
    CHECK(f.coeff(CubePoint(A)) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(f.coeff(CubePoint(A)) == doctest::Approx(direct_coeff(f, CubePoint(A))).epsilon(1e-12));
  }
}

TEST_CASE("capacity and argument errors") {
  CHECK_THROWS_AS(SpectralFunction::constant(25, 0.0), capacity_error);
  auto f = SpectralFunction::walsh(3, 1);
  CHECK_THROWS_AS(partial_derivative(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(partial_derivative(f, 4), std::invalid_argument);
  CHECK_THROWS_AS(influence(f, 1), std::invalid_argument);  // +-1 valued, not {0,1}
}

TEST_CASE("round trip and parseval on random functions") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    int d = 2 + int(t % 11);  // up to 12
    auto f = random_function(d, t, t % 3 == 0 ? 2 : 1);
    auto g = walsh_transform(f);
    auto back = inverse_transform(g);
    double max_err = 0, val_energy = 0, coeff_energy = 0;
    for (size_t i = 0; i < f.values.size(); ++i)
      max_err = std::max(max_err, std::abs(back.values[i] - f.values[i]));
    for (size_t x = 0; x < f.table_size(); ++x) val_energy += g.value_norm2(CubePoint(x));
    val_energy /= double(f.table_size());
    for (size_t A = 0; A < f.table_size(); ++A) coeff_energy += g.coeff_norm2(CubePoint(A));
    CHECK(max_err <= tol::kExact);
    CHECK(std::abs(val_energy - coeff_energy) <= tol::kIdentity);
  }
}

TEST_CASE("derivative basics") {
  // d_1 W_{1} = -W_{1}
  auto w1 = SpectralFunction::walsh(4, 0b1);
  auto dw = partial_derivative(w1, 1);
  for (size_t x = 0; x < 16; ++x)
    CHECK(dw.values[x] == doctest::Approx(-w1.values[x]).epsilon(1e-15));
  auto dconst = partial_derivative(SpectralFunction::constant(4, 3.5), 2);
  for (size_t x = 0; x < 16; ++x) CHECK(dconst.values[x] == 0.0);
}

TEST_CASE("derivative energy identity") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto f = random_function(4, 1000 + t);
    auto g = walsh_transform(f);
    CHECK(std::abs(dirichlet_energy(g) - spectral_energy(g)) <= tol::kIdentity);
  }
}

TEST_CASE("influences") {
  // Dictator set {x : x_1 = 1}.
  std::vector<CubePoint> pts;
  for (CubePoint x = 0; x < 16; ++x)
    if (x & 1) pts.push_back(x);
  auto dict = SpectralFunction::indicator(4, pts);
  CHECK(influence(dict, 1) == 1.0);
  for (int j = 2; j <= 4; ++j) CHECK(influence(dict, j) == 0.0);

  pts.clear();
  for (CubePoint x = 0; x < 16; ++x)
    if (popcount(x) & 1) pts.push_back(x);
  auto parity = SpectralFunction::indicator(4, pts);
  for (int j = 1; j <= 4; ++j) CHECK(influence(parity, j) == 1.0);

  auto empty = SpectralFunction::indicator(4, {});
  for (int j = 1; j <= 4; ++j) CHECK(influence(empty, j) == 0.0);
}

TEST_CASE("influence sum matches spectral energy") {
  CounterRng rng(7, 0);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 3 + trial % 6;  // up to 8
    std::vector<CubePoint> pts;
    for (CubePoint x = 0; x < (CubePoint(1) << d); ++x)
      if (rng.next() & 1) pts.push_back(x);
    auto ind = SpectralFunction::indicator(d, pts);
    auto g = walsh_transform(ind);
    double sum_inf = 0;
    for (int j = 1; j <= d; ++j) sum_inf += influence(ind, j);
    // sum_j I_j = 4 sum_A |A| fhat(A)^2 for {0,1} indicators.
    CHECK(std::abs(sum_inf - 4.0 * spectral_energy(g)) <= tol::kIdentity);
  }
}

TEST_CASE("noise weighted mass") {
  auto par = walsh_transform(SpectralFunction::walsh(6, cube_all(6)));
  CHECK(noise_weighted_mass(par, 0.5) == doctest::Approx(std::pow(0.5, 6)).epsilon(1e-12));
  auto c = walsh_transform(SpectralFunction::constant(6, 1.0));
  CHECK(noise_weighted_mass(c, 0.3) == doctest::Approx(1.0).epsilon(1e-12));

  // Majority on 5 bits at q = 1/2: frozen from the exact level profile
  // (45/64) (1/2) + (5/32) (1/8) + (9/64) (1/32) = 769/2048.
  auto maj = walsh_transform(majority5());
  const double expected = 769.0 / 2048.0;
  CHECK(noise_weighted_mass(maj, 0.5) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(stability_oracle(maj, 0.5) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("poincare check") {
  // W_A with |A| = m: lhs = 2, rhs = (2/m) m = 2.
  for (CubePoint A : {CubePoint(0b1), CubePoint(0b101), CubePoint(0b111)}) {
    auto f = walsh_transform(SpectralFunction::walsh(3, A));
    auto r = poincare_check(f);
    CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.min_freq == popcount(A));
    CHECK(r.identity_residual <= tol::kIdentity);
    CHECK(r.holds);
  }
  // Truncated spectrum supported on |A| >= 3 at d = 6.
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto f = walsh_transform(random_function(6, 50 + t));
    std::vector<double> co = *f.coeffs;
    for (size_t A = 0; A < f.table_size(); ++A)
      if (popcount(A) < 3) co[A] = 0.0;
    auto g = SpectralFunction::from_coeffs(6, co);
    if (poincare_check(g).min_freq < 3) continue;
    auto r = poincare_check(g);
    CHECK(r.holds);
    CHECK(r.lhs <= (2.0 / 3.0) * 2.0 * spectral_energy(g) / 2.0 + 1e-9);
  }
  // min_freq bookkeeping.
  std::vector<double> co(4, 0.0);
  co[0b01] = 1.0;
  co[0b11] = 1.0;
  auto h = SpectralFunction::from_coeffs(2, co);
  CHECK(poincare_check(h).min_freq == 1);
  CHECK_THROWS_AS(poincare_check(walsh_transform(SpectralFunction::constant(3, 2.0))),
                  std::domain_error);
}

TEST_CASE("high-frequency poincare on random truncations") {
  CounterRng rng(99, 1);
  int checked = 0;
  for (std::uint64_t t = 0; t < 300; ++t) {
    int d = 3 + int(t % 8);  // up to 10
    int cut = 1 + int(rng.next() % std::uint64_t(d));
    auto f = walsh_transform(random_function(d, 900 + t));
    std::vector<double> co = *f.coeffs;
    for (size_t A = 0; A < f.table_size(); ++A)
      if (popcount(A) < cut) co[A] = 0.0;
    auto g = SpectralFunction::from_coeffs(d, co);
    PoincareReport r;
    try {
      r = poincare_check(g);
    } catch (const std::domain_error&) {
      continue;  // everything got truncated
    }
    CHECK(r.holds);
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("enflo bound and gap") {
  CHECK(enflo_lower_bound(4) == doctest::Approx(2.0));
  CHECK(enflo_lower_bound(1) == doctest::Approx(1.0));
  auto g = enflo_gap(SpectralFunction::walsh(5, 0b1));
  CHECK(g.diagonal == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(g.edges == doctest::Approx(4.0).epsilon(1e-12));
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto f = random_function(2 + int(t % 9), 40 + t);
    auto eg = enflo_gap(f);
    CHECK(eg.diagonal <= eg.edges + tol::kInequality);
  }
}

TEST_CASE("biased character expectations") {
  for (int d : {2, 5, 10}) {
    for (double eps : {0.125, 0.25, 0.5, 0.7}) {
      BiasedMeasure mu(eps, d);
      // Normalization to 1e-12.
      double total = 0;
      for (size_t x = 0; x < (size_t(1) << d); ++x) total += mu.weight(CubePoint(x));
      CHECK(std::abs(total - 1.0) <= tol::kExact);
      for (CubePoint B = 0; B < (CubePoint(1) << d); ++B) {
        double direct = 0;
        for (size_t x = 0; x < (size_t(1) << d); ++x)
          direct += ((popcount(CubePoint(x) & B) & 1) ? -1.0 : 1.0) * mu.weight(CubePoint(x));
        CHECK(std::abs(direct - biased_character_mean(mu, B)) <= tol::kExact);
      }
    }
  }
}

TEST_CASE("vector-valued functions") {
  // L2-valued f: Parseval and the energy identity hold componentwise.
  auto f = random_function(5, 123, 3);
  auto g = walsh_transform(f);
  double ve = 0, ce = 0;
  for (size_t x = 0; x < f.table_size(); ++x) ve += g.value_norm2(CubePoint(x));
  for (size_t A = 0; A < f.table_size(); ++A) ce += g.coeff_norm2(CubePoint(A));
  CHECK(std::abs(ve / double(f.table_size()) - ce) <= tol::kIdentity);
  CHECK(std::abs(dirichlet_energy(g) - spectral_energy(g)) <= tol::kIdentity);
}

TEST_CASE("random pm1 functions satisfy parseval exactly") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto f = walsh_transform(random_pm1(6, t));
    double total = 0;
    for (size_t A = 0; A < f.table_size(); ++A) total += f.coeff_norm2(CubePoint(A));
    CHECK(std::abs(total - 1.0) <= tol::kIdentity);
  }
}

}  // TEST_SUITE
