#pragma once

// Insertion/deletion edit distance, the cyclic-shift noise model and its
// spectral identity, and the sampled average-distance bounds.

#include <cstdint>
#include <string>
#include <vector>

#include "embedlb/fourier.hpp"
#include "embedlb/rng.hpp"

namespace embedlb {

// Bit string of length <= 2^16; bits[i] in {0,1}.
struct BinaryString {
  std::vector<std::uint8_t> bits;

  static BinaryString from_string(const std::string& s);  // "0101"
  static BinaryString from_mask(CubePoint mask, int d);   // bits[i] = bit i
  std::string str() const;
  size_t size() const { return bits.size(); }
  bool operator==(const BinaryString& o) const { return bits == o.bits; }
};

// Insert/delete-only distance via |x| + |y| - 2 LCS(x,y).
int edit_distance(const BinaryString& x, const BinaryString& y);
int lcs_length(const BinaryString& x, const BinaryString& y);

// S(x_1..x_d) = (x_d, x_1, .., x_{d-1}); cyclic_shift(x, j) = S^j(x).
BinaryString cyclic_shift(const BinaryString& x, int j);
// Shift of a frequency mask matching W_A(S^j x) = W_{S^-j A}(x).
CubePoint shift_mask(CubePoint A, int j, int d);

// Verifies |{y : ED(x,y) = r}| <= 2^r C(2d, r) for every x in F_2^d.
bool ball_count_check(int d, int r);

struct AvgEdReport {
  double mean;
  double ci99;       // Hoeffding, range [0, 2d]
  bool exhaustive;   // d <= 4 is enumerated exactly instead of sampled
  std::uint64_t samples;
  bool passes_bound;  // mean - ci99 >= d/160
};

AvgEdReport average_ed_estimate(int d, std::uint64_t samples, std::uint64_t seed);

struct TauSample {
  CubePoint x;
  CubePoint y;      // noise drawn from mu_eps
  int j;            // uniform in {1..k}
  CubePoint paired; // S^j(x) + y
  int ed;           // ED(x, paired)
  bool within_bound;  // ed <= 2 popcount(y) + 2j
};

// The shifted-noise pair sampler; every sample carries its provenance and
// the per-sample distance bound.
std::vector<TauSample> tau_sampler(int d, double epsilon, int k, std::uint64_t seed,
                                   std::uint64_t count);

struct BecknerShiftReport {
  double integral;        // E |f(x) - f(S^j x + y)|, exact double summation
  double spectral_value;  // 1 - sum (1-2eps)^{|A|} fhat(A) fhat(S^j A)
  double residual;
  double cauchy_schwarz_rhs;  // 1 - sum (1-2eps)^{|A|} fhat(A)^2
  bool identity_holds;        // residual <= 1e-9
  bool relaxation_holds;      // integral >= cauchy_schwarz_rhs - 1e-9
};

// f must be {-1,1}-valued with d <= 14 (the direct summation is 4^d).
BecknerShiftReport beckner_shift_identity(const SpectralFunction& f, double epsilon, int j);

struct EditBoundConstants {
  double exponent_c = 1.0;     // constant in the 2^{c sqrt(..)} denominator
  double sensitivity_c = 1.0;  // constant inside the subtracted 2^{-c sqrt(..)}
};

// Final lower-bound expression with its universal constants exposed;
// clamped below at 1 (any metric has c_1 >= 1). Scale-free in d given eps.
double edit_theorem_bound(double d, double epsilon, const EditBoundConstants& constants);

}  // namespace embedlb
