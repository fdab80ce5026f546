#include "embedlb/fourier.hpp"

#include <cmath>

#include "embedlb/tolerances.hpp"

namespace embedlb {

BiasedMeasure::BiasedMeasure(double eps, int d) : epsilon(eps), dim(d) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  by_weight.resize(size_t(d) + 1);
  for (int w = 0; w <= d; ++w)
    by_weight[size_t(w)] = std::pow(eps, w) * std::pow(1.0 - eps, d - w);
}

static void check_dim(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (d > kMaxDenseDim) throw capacity_error("dense spectra are capped at d = 24");
}

SpectralFunction SpectralFunction::from_values(int d, std::vector<double> vals, int m) {
  check_dim(d);
  if (m < 1) throw std::invalid_argument("range_dim must be positive");
  if (vals.size() != (size_t(1) << d) * size_t(m))
    throw std::invalid_argument("value table has wrong size");
  SpectralFunction f;
  f.dim = d;
  f.range_dim = m;
  f.values = std::move(vals);
  return f;
}

SpectralFunction SpectralFunction::from_coeffs(int d, std::vector<double> co, int m) {
  check_dim(d);
  if (m < 1) throw std::invalid_argument("range_dim must be positive");
  if (co.size() != (size_t(1) << d) * size_t(m))
    throw std::invalid_argument("coefficient table has wrong size");
  SpectralFunction f;
  f.dim = d;
  f.range_dim = m;
  f.coeffs = std::move(co);
  f.values.assign(f.coeffs->size(), 0.0);
  SpectralFunction inv = inverse_transform(f);
  inv.coeffs = f.coeffs;
  return inv;
}

SpectralFunction SpectralFunction::walsh(int d, CubePoint A) {
  check_dim(d);
  std::vector<double> vals(static_cast<size_t>(1) << d);
  for (size_t x = 0; x < vals.size(); ++x)
    vals[x] = (popcount(CubePoint(x) & A) & 1) ? -1.0 : 1.0;
  return from_values(d, std::move(vals));
}

SpectralFunction SpectralFunction::constant(int d, double c) {
  check_dim(d);
  return from_values(d, std::vector<double>(size_t(1) << d, c));
}

SpectralFunction SpectralFunction::indicator(int d, const std::vector<CubePoint>& points) {
  check_dim(d);
  std::vector<double> vals(size_t(1) << d, 0.0);
  for (CubePoint p : points) vals[p] = 1.0;
  return from_values(d, std::move(vals));
}

bool SpectralFunction::is_boolean01(double tol) const {
  if (range_dim != 1) return false;
  for (double v : values)
    if (std::abs(v) > tol && std::abs(v - 1.0) > tol) return false;
  return true;
}

bool SpectralFunction::is_boolean_pm1(double tol) const {
  if (range_dim != 1) return false;
  for (double v : values)
    if (std::abs(v - 1.0) > tol && std::abs(v + 1.0) > tol) return false;
  return true;
}

double SpectralFunction::value_norm2(CubePoint x) const {
  double s = 0;
  for (int c = 0; c < range_dim; ++c) {
    double v = value(x, c);
    s += v * v;
  }
  return s;
}

double SpectralFunction::coeff_norm2(CubePoint A) const {
  double s = 0;
  for (int c = 0; c < range_dim; ++c) {
    double v = coeff(A, c);
    s += v * v;
  }
  return s;
}

// In-place butterfly on one component, stride = range_dim.
static void fwht(std::vector<double>& t, int d, int m) {
  const size_t n = size_t(1) << d;
  for (size_t h = 1; h < n; h <<= 1) {
    for (size_t i = 0; i < n; i += h << 1) {
      for (size_t j = i; j < i + h; ++j) {
        for (int c = 0; c < m; ++c) {
          double a = t[j * m + c], b = t[(j + h) * m + c];
          t[j * m + c] = a + b;
          t[(j + h) * m + c] = a - b;
        }
      }
    }
  }
}

SpectralFunction walsh_transform(const SpectralFunction& f) {
  if (f.values.empty()) throw std::invalid_argument("walsh_transform needs values");
  SpectralFunction out = f;
  std::vector<double> t = f.values;
  fwht(t, f.dim, f.range_dim);
  const double scale = 1.0 / double(size_t(1) << f.dim);
  for (double& v : t) v *= scale;
  out.coeffs = std::move(t);
  return out;
}

SpectralFunction inverse_transform(const SpectralFunction& f) {
  if (!f.coeffs) throw std::invalid_argument("inverse_transform needs coefficients");
  SpectralFunction out = f;
  std::vector<double> t = *f.coeffs;
  fwht(t, f.dim, f.range_dim);
  out.values = std::move(t);
  return out;
}

SpectralFunction partial_derivative(const SpectralFunction& f, int j) {
  if (j < 1 || j > f.dim) throw std::invalid_argument("coordinate out of range");
  const CubePoint ej = cube_e(j);
  SpectralFunction out;
  out.dim = f.dim;
  out.range_dim = f.range_dim;
  out.values.resize(f.values.size());
  const int m = f.range_dim;
  for (size_t x = 0; x < f.table_size(); ++x)
    for (int c = 0; c < m; ++c)
      out.values[x * m + c] = 0.5 * (f.values[(x ^ ej) * m + c] - f.values[x * m + c]);
  if (f.coeffs) {
    // Spectral action: negates coefficients with j in A, zeroes the rest.
    std::vector<double> co(f.coeffs->size(), 0.0);
    for (size_t A = 0; A < f.table_size(); ++A)
      if (A & ej)
        for (int c = 0; c < m; ++c) co[A * m + c] = -(*f.coeffs)[A * m + c];
    out.coeffs = std::move(co);
  }
  return out;
}

double influence(const SpectralFunction& f, int j) {
  if (!f.is_boolean01()) throw std::invalid_argument("influence needs a {0,1} indicator");
  if (j < 1 || j > f.dim) throw std::invalid_argument("coordinate out of range");
  const CubePoint ej = cube_e(j);
  size_t cnt = 0;
  for (size_t x = 0; x < f.table_size(); ++x) {
    bool in_a = f.values[x] > 0.5;
    bool in_b = f.values[x ^ ej] > 0.5;
    if (in_a != in_b) ++cnt;
  }
  return double(cnt) / double(f.table_size());
}

double noise_weighted_mass(const SpectralFunction& f, double q) {
  if (!f.coeffs) throw std::invalid_argument("noise_weighted_mass needs coefficients");
  std::vector<double> qpow(static_cast<size_t>(f.dim) + 1);
  for (int k = 0; k <= f.dim; ++k) qpow[size_t(k)] = std::pow(q, k);
  double s = 0;
  for (size_t A = 0; A < f.table_size(); ++A)
    s += qpow[size_t(popcount(A))] * f.coeff_norm2(CubePoint(A));
  return s;
}

double mean_square(const SpectralFunction& f) {
  double s = 0;
  for (size_t x = 0; x < f.table_size(); ++x) s += f.value_norm2(CubePoint(x));
  return s / double(f.table_size());
}

double mean_value(const SpectralFunction& f) {
  if (f.range_dim != 1) throw std::invalid_argument("mean_value is scalar-only");
  double s = 0;
  for (double v : f.values) s += v;
  return s / double(f.table_size());
}

double dirichlet_energy(const SpectralFunction& f) {
  const int m = f.range_dim;
  double total = 0;
  for (int j = 1; j <= f.dim; ++j) {
    const CubePoint ej = cube_e(j);
    double s = 0;
    for (size_t x = 0; x < f.table_size(); ++x)
      for (int c = 0; c < m; ++c) {
        double dv = 0.5 * (f.values[(x ^ ej) * m + c] - f.values[x * m + c]);
        s += dv * dv;
      }
    total += s / double(f.table_size());
  }
  return total;
}

double spectral_energy(const SpectralFunction& f) {
  if (!f.coeffs) throw std::invalid_argument("spectral_energy needs coefficients");
  double s = 0;
  for (size_t A = 0; A < f.table_size(); ++A)
    s += double(popcount(A)) * f.coeff_norm2(CubePoint(A));
  return s;
}

double biased_character_mean(const BiasedMeasure& mu, CubePoint B) {
  return std::pow(1.0 - 2.0 * mu.epsilon, popcount(B));
}

PoincareReport poincare_check(const SpectralFunction& f) {
  SpectralFunction g = f.coeffs ? f : walsh_transform(f);
  PoincareReport r;
  r.min_freq = 0;
  double tail = 0;
  for (size_t A = 1; A < g.table_size(); ++A) {
    double c2 = g.coeff_norm2(CubePoint(A));
    tail += c2;
    if (c2 > tol::kIdentity * tol::kIdentity && (r.min_freq == 0 || popcount(A) < r.min_freq))
      r.min_freq = popcount(A);
  }
  if (r.min_freq == 0)
    throw std::domain_error("poincare_check: constant function, min frequency undefined");
  // E_{x,y} ||f(x)-f(y)||^2 = 2 E||f||^2 - 2||Ef||^2, computed pointwise.
  double mean_sq = mean_square(g);
  double mean_norm2 = 0;
  for (int c = 0; c < g.range_dim; ++c) {
    double mc = 0;
    for (size_t x = 0; x < g.table_size(); ++x) mc += g.values[x * size_t(g.range_dim) + c];
    mc /= double(g.table_size());
    mean_norm2 += mc * mc;
  }
  r.lhs = 2.0 * (mean_sq - mean_norm2);
  r.rhs = (2.0 / double(r.min_freq)) * dirichlet_energy(g);
  r.identity_residual = std::abs(r.lhs - 2.0 * tail);
  r.holds = r.lhs <= r.rhs + tol::kIdentity;
  return r;
}

double enflo_lower_bound(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  return std::sqrt(double(d));
}

EnfloGap enflo_gap(const SpectralFunction& f) {
  const CubePoint e = cube_all(f.dim);
  const int m = f.range_dim;
  double diag = 0;
  for (size_t x = 0; x < f.table_size(); ++x)
    for (int c = 0; c < m; ++c) {
      double dv = f.values[(x ^ e) * m + c] - f.values[x * m + c];
      diag += dv * dv;
    }
  diag /= double(f.table_size());
  return EnfloGap{diag, 4.0 * dirichlet_energy(f)};
}

}  // namespace embedlb
