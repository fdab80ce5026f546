#include "embedlb/edit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "embedlb/parallel.hpp"
#include "embedlb/rational.hpp"
#include "embedlb/tolerances.hpp"

namespace embedlb {

BinaryString BinaryString::from_string(const std::string& s) {
  BinaryString b;
  b.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary string literal expected");
    b.bits.push_back(std::uint8_t(c - '0'));
  }
  if (b.bits.size() > (1u << 16)) throw capacity_error("strings are capped at 2^16 bits");
  return b;
}

BinaryString BinaryString::from_mask(CubePoint mask, int d) {
  BinaryString b;
  b.bits.resize(size_t(d));
  for (int i = 0; i < d; ++i) b.bits[size_t(i)] = std::uint8_t((mask >> i) & 1u);
  return b;
}

std::string BinaryString::str() const {
  std::string s(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i) s[i] = char('0' + bits[i]);
  return s;
}

int lcs_length(const BinaryString& x, const BinaryString& y) {
  const size_t nx = x.size(), ny = y.size();
  std::vector<int> prev(ny + 1, 0), cur(ny + 1, 0);
  for (size_t i = 1; i <= nx; ++i) {
    for (size_t j = 1; j <= ny; ++j) {
      if (x.bits[i - 1] == y.bits[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[ny];
}

int edit_distance(const BinaryString& x, const BinaryString& y) {
  return int(x.size()) + int(y.size()) - 2 * lcs_length(x, y);
}

BinaryString cyclic_shift(const BinaryString& x, int j) {
  const int d = int(x.size());
  if (d == 0) return x;
  j = ((j % d) + d) % d;
  BinaryString out;
  out.bits.resize(size_t(d));
  // S moves the last character to the front; S^j moves the last j.
  for (int i = 0; i < d; ++i) out.bits[size_t((i + j) % d)] = x.bits[size_t(i)];
  return out;
}

CubePoint shift_mask(CubePoint A, int j, int d) {
  j = ((j % d) + d) % d;
  if (j == 0) return A;
  const CubePoint all = cube_all(d);
  return ((A << j) | (A >> (d - j))) & all;
}

bool ball_count_check(int d, int r) {
  if (d > 10 || r > 4) throw capacity_error("ball_count_check is capped at d <= 10, r <= 4");
  Int budget = pow2(unsigned(r)) * binomial(unsigned(2 * d), unsigned(r));
  const size_t n = size_t(1) << d;
  std::vector<BinaryString> strs(n);
  for (size_t m = 0; m < n; ++m) strs[m] = BinaryString::from_mask(CubePoint(m), d);
  for (size_t x = 0; x < n; ++x) {
    Int count = 0;
    for (size_t y = 0; y < n; ++y)
      if (edit_distance(strs[x], strs[y]) == r) ++count;
    if (count > budget) return false;
  }
  return true;
}

AvgEdReport average_ed_estimate(int d, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 100) throw std::invalid_argument("need at least 100 samples");
  AvgEdReport rep{};
  rep.samples = samples;
  if (d <= 4) {
    // Exact enumeration over all 4^d pairs.
    const size_t n = size_t(1) << d;
    double total = 0;
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        total += edit_distance(BinaryString::from_mask(CubePoint(x), d),
                               BinaryString::from_mask(CubePoint(y), d));
    rep.mean = total / double(n * n);
    rep.ci99 = 0;
    rep.exhaustive = true;
    rep.samples = n * n;
  } else {
    CounterRng rng(seed, 0xED);
    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
      double s = 0;
      BinaryString x, y;
      x.bits.resize(size_t(d));
      y.bits.resize(size_t(d));
      for (std::uint64_t i = lo; i < hi; ++i) {
        for (int b = 0; b < d; ++b) {
          std::uint64_t word = rng.at(i * 2 * ((d + 63) / 64) + std::uint64_t(b / 64));
          x.bits[size_t(b)] = std::uint8_t((word >> (b % 64)) & 1);
          std::uint64_t word2 =
              rng.at(i * 2 * ((d + 63) / 64) + std::uint64_t((d + 63) / 64) + std::uint64_t(b / 64));
          y.bits[size_t(b)] = std::uint8_t((word2 >> (b % 64)) & 1);
        }
        s += edit_distance(x, y);
      }
      return s;
    };
    double total = parallel_reduce<double>(samples, 0.0, chunk,
                                           [](double a, double b) { return a + b; });
    rep.mean = total / double(samples);
    rep.ci99 = hoeffding_ci99(2.0 * d, samples);
    rep.exhaustive = false;
  }
  rep.passes_bound = rep.mean - rep.ci99 >= double(d) / 160.0;
  return rep;
}

std::vector<TauSample> tau_sampler(int d, double epsilon, int k, std::uint64_t seed,
                                   std::uint64_t count) {
  if (d < 1 || d > 24) throw std::invalid_argument("tau_sampler needs 1 <= d <= 24");
  if (k < 1 || k > d) throw std::invalid_argument("tau_sampler needs 1 <= k <= d");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0,1)");
  std::vector<TauSample> out(count);
  CounterRng rng(seed, 0x7A);
  const std::uint64_t stride = std::uint64_t(d) + 2;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t base = i * stride;
    TauSample s;
    s.x = CubePoint(rng.at(base) & cube_all(d));
    s.y = 0;
    for (int b = 0; b < d; ++b)
      if (rng.unit_at(base + 1 + std::uint64_t(b)) < epsilon) s.y |= CubePoint(1) << b;
    s.j = 1 + int(rng.at(base + 1 + std::uint64_t(d)) % std::uint64_t(k));
    CubePoint shifted = 0;
    {
      BinaryString bx = BinaryString::from_mask(s.x, d);
      BinaryString sh = cyclic_shift(bx, s.j);
      for (int b = 0; b < d; ++b)
        if (sh.bits[size_t(b)]) shifted |= CubePoint(1) << b;
    }
    s.paired = shifted ^ s.y;
    s.ed = edit_distance(BinaryString::from_mask(s.x, d), BinaryString::from_mask(s.paired, d));
    s.within_bound = s.ed <= 2 * popcount(s.y) + 2 * s.j;
    out[size_t(i)] = std::move(s);
  }
  return out;
}

BecknerShiftReport beckner_shift_identity(const SpectralFunction& f, double epsilon, int j) {
  if (!f.is_boolean_pm1()) throw std::invalid_argument("beckner identity needs {-1,1} values");
  if (f.dim > 14) throw capacity_error("direct summation is capped at d <= 14");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0,1)");
  const int d = f.dim;
  const size_t n = size_t(1) << d;
  SpectralFunction g = f.coeffs ? f : walsh_transform(f);

  // Shift table: position of S^j x for every x.
  std::vector<CubePoint> sj(n);
  for (size_t x = 0; x < n; ++x) sj[x] = shift_mask(CubePoint(x), j, d);
  // Direct double summation of E_mu,mu_eps |f(x) - f(S^j x + y)|.
  BiasedMeasure mu(epsilon, d);
  std::vector<std::int8_t> sign(n);
  for (size_t x = 0; x < n; ++x) sign[x] = f.values[x] > 0 ? 1 : -1;
  auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    double acc = 0;
    for (std::uint64_t y = lo; y < hi; ++y) {
      std::int64_t corr = 0;
      for (size_t x = 0; x < n; ++x) corr += sign[x] * sign[sj[x] ^ CubePoint(y)];
      acc += mu.weight(CubePoint(y)) * (1.0 - double(corr) / double(n));
    }
    return acc;
  };
  double integral =
      parallel_reduce<double>(n, 0.0, chunk, [](double a, double b) { return a + b; });

  double q = 1.0 - 2.0 * epsilon;
  std::vector<double> qpow(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) qpow[size_t(i)] = std::pow(q, i);
  double cross = 0, diag = 0;
  for (size_t A = 0; A < n; ++A) {
    double w = qpow[size_t(popcount(A))];
    cross += w * g.coeff(CubePoint(A)) * g.coeff(shift_mask(CubePoint(A), j, d));
    diag += w * g.coeff(CubePoint(A)) * g.coeff(CubePoint(A));
  }
  BecknerShiftReport rep;
  rep.integral = integral;
  rep.spectral_value = 1.0 - cross;
  rep.residual = std::abs(rep.integral - rep.spectral_value);
  rep.cauchy_schwarz_rhs = 1.0 - diag;
  rep.identity_holds = rep.residual <= tol::kSpectral;
  rep.relaxation_holds = rep.integral >= rep.cauchy_schwarz_rhs - tol::kSpectral;
  return rep;
}

double edit_theorem_bound(double d, double epsilon, const EditBoundConstants& constants) {
  if (!(epsilon > 0 && epsilon < 0.1))
    throw std::invalid_argument("epsilon must lie in (0, 1/10)");
  double L = std::log2(1.0 / epsilon);
  double s = std::sqrt(L * std::log2(L));
  double alpha = std::sqrt(epsilon) / std::pow(2.0, constants.exponent_c * s);
  double bracket = d / 80.0 - 6.0 * std::pow(2.0, -constants.sensitivity_c * s) * 2.0 * d;
  double value = alpha * bracket / (4.0 * epsilon * d);
  return std::max(value, 1.0);
}

}  // namespace embedlb
