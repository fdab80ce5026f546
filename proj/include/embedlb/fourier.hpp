#pragma once

// Exact Fourier analysis on the discrete cube F_2^d: Walsh transform,
// biased measures, discrete derivatives, influences, and the basic
// Poincare-type inequalities used by the quotient lower bounds.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace embedlb {

// Dense spectra are capped: 2^24 table entries.
inline constexpr int kMaxDenseDim = 24;

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point of F_2^d as a bitmask; bit j-1 holds coordinate j. Addition is
// XOR and rho(x,y) = popcount(x^y).
using CubePoint = std::uint32_t;

inline int popcount(std::uint64_t x) { return std::popcount(x); }

inline CubePoint cube_e(int j) { return CubePoint(1) << (j - 1); }
inline CubePoint cube_all(int d) { return (CubePoint(1) << d) - 1; }
inline int hamming(CubePoint x, CubePoint y) { return popcount(x ^ y); }

// Product eps-biased measure mu_eps on F_2^d; mu = mu_{1/2}.
struct BiasedMeasure {
  double epsilon;
  int dim;

  BiasedMeasure(double eps, int d);
  double weight(CubePoint x) const { return by_weight[size_t(popcount(x))]; }
  // eps^w (1-eps)^{d-w} for popcount w, precomputed.
  std::vector<double> by_weight;
};

// A function f : F_2^d -> R^m with its Walsh coefficient table. `values`
// is row-major (point-major): values[x*m + c]. `coeffs`, when present, is
// indexed the same way by frequency mask A.
struct SpectralFunction {
  int dim = 0;
  int range_dim = 1;
  std::vector<double> values;
  std::optional<std::vector<double>> coeffs;

  static SpectralFunction from_values(int d, std::vector<double> vals, int m = 1);
  static SpectralFunction from_coeffs(int d, std::vector<double> co, int m = 1);
  // The Walsh character W_A as a scalar function.
  static SpectralFunction walsh(int d, CubePoint A);
  static SpectralFunction constant(int d, double c);
  static SpectralFunction indicator(int d, const std::vector<CubePoint>& points);

  size_t table_size() const { return size_t(1) << dim; }
  double value(CubePoint x, int c = 0) const { return values[size_t(x) * range_dim + c]; }
  double coeff(CubePoint A, int c = 0) const { return (*coeffs)[size_t(A) * range_dim + c]; }

  bool is_boolean01(double tol = 1e-9) const;
  bool is_boolean_pm1(double tol = 1e-9) const;

  // Squared Euclidean norm of the m-vector at x (or of coefficient A).
  double value_norm2(CubePoint x) const;
  double coeff_norm2(CubePoint A) const;
};

// coeffs[A] = 2^{-d} sum_x f(x) W_A(x), by the in-place fast butterfly.
SpectralFunction walsh_transform(const SpectralFunction& f);
// values[x] = sum_A coeffs[A] W_A(x).
SpectralFunction inverse_transform(const SpectralFunction& f);

// (d_j f)(x) = (f(x+e_j) - f(x)) / 2.
SpectralFunction partial_derivative(const SpectralFunction& f, int j);

// I_j(A) = mu{x : exactly one of x, x+e_j lies in A}; f must be a {0,1}
// indicator.
double influence(const SpectralFunction& indicator, int j);

// sum_A q^{|A|} ||fhat(A)||^2.
double noise_weighted_mass(const SpectralFunction& f, double q);

// E_mu ||f||^2 (uniform measure).
double mean_square(const SpectralFunction& f);
// E_mu f (scalar f only).
double mean_value(const SpectralFunction& f);
// sum_j int ||d_j f||^2 dmu, evaluated pointwise (not via the spectrum).
double dirichlet_energy(const SpectralFunction& f);
// sum_A |A| ||fhat(A)||^2.
double spectral_energy(const SpectralFunction& f);
// int W_B dmu_eps = (1-2eps)^{|B|}; direct summation oracle lives in tests.
double biased_character_mean(const BiasedMeasure& mu, CubePoint B);

struct PoincareReport {
  double lhs = 0;           // int int ||f(x)-f(y)||^2 dmu dmu
  double rhs = 0;           // (2/min_freq) * dirichlet energy
  int min_freq = 0;         // min{|A| : A nonempty, fhat(A) != 0}
  double identity_residual = 0;  // |lhs - 2 sum_{A!=0} ||fhat||^2|
  bool holds = false;
};

// Poincare inequality for functions with spectrum supported on high
// frequencies. Throws std::domain_error for constant f (min_freq undefined).
PoincareReport poincare_check(const SpectralFunction& f);

struct EnfloGap {
  double diagonal;  // int ||f(x)-f(x+e)||^2 dmu
  double edges;     // 4 sum_j int ||d_j f||^2 dmu
};

// Certified c_2(F_2^d) lower bound sqrt(d) from the diagonal-vs-edges
// inequality.
double enflo_lower_bound(int d);
EnfloGap enflo_gap(const SpectralFunction& f);

}  // namespace embedlb
