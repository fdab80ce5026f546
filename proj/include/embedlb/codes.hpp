#pragma once

// Linear codes over F_2, duals, coset quotient metrics of the cube, group
// actions by cube isometries, and the explicit-constant c_1 lower bounds
// they certify.

#include <cstdint>
#include <optional>
#include <vector>

#include "embedlb/fourier.hpp"
#include "embedlb/metric.hpp"
#include "embedlb/rational.hpp"

namespace embedlb {

class LinearCode {
 public:
  // Basis vectors as bitmasks; dependent generators are rejected.
  LinearCode(int d, std::vector<CubePoint> gens);

  int ambient_dim() const { return d_; }
  int dim() const { return int(gens_.size()); }
  const std::vector<CubePoint>& gens() const { return gens_; }
  // Minimum weight over the 2^dim - 1 nonzero codewords, recomputed on
  // construction (dim <= 20). Zero code has min_weight 0 by convention.
  int min_weight() const { return min_weight_; }
  std::vector<CubePoint> codewords() const;
  bool contains(CubePoint x) const;

 private:
  int d_;
  std::vector<CubePoint> gens_;
  int min_weight_;
};

// Basis of {x : <x,y> = 0 mod 2 for all y in C}, via F_2 elimination.
LinearCode dual_code(const LinearCode& C);

// Greedy subspace extension: grows a code keeping w(C) > delta*d. Each
// step is certified feasible by the exact binomial tail counting bound;
// throws std::invalid_argument when the bound fails for the requested
// triple.
LinearCode code_greedy(int d, double delta, int target_dim);

// Metric on F_2^d / C^perp: distance between cosets is the minimum Hamming
// distance, computed exactly by syndrome min-weights.
FiniteMetric coset_quotient(const LinearCode& C);

// max over integer t in [1, d/2] of t*(1 - g*2^{-d}*sum_{k<=t} C(d,k)),
// the exact-tail certified lower bound on the average quotient distance.
// Accepts 1 <= group_order < 2^d.
Rat certified_average_lower(int d, const Int& group_order);

// Pre: f invariant under translation by C^perp (verified; violation is a
// precondition error). Asserts fhat(A) = 0 for all 0 < |A| < w(C).
bool fourier_vanishing_check(const SpectralFunction& f, const LinearCode& C);

// certified_average_lower(d, 2^{d-dim C}) * w(C) / d.
double theorem_code_bound(const LinearCode& C);

// A cube isometry x -> perm(x) + translation. perm[i] is the destination
// coordinate of bit i (0-based).
struct CubeIsometry {
  std::vector<int> perm;
  CubePoint translation = 0;
  CubePoint apply(CubePoint x) const;
};

class CubeAction {
 public:
  CubeAction(int d, std::vector<CubeIsometry> generators);
  // Cyclic coordinate shift group generator on d coordinates.
  static CubeAction cyclic_shift(int d);
  // Translation action by a subgroup of F_2^d.
  static CubeAction translations(int d, const std::vector<CubePoint>& subgroup_gens);
  // Full coordinate-permutation action (generators of S_d).
  static CubeAction symmetric_coords(int d);

  int dim() const { return d_; }
  const std::vector<CubeIsometry>& generators() const { return gens_; }

  std::vector<std::vector<int>> orbits() const;              // partition of the cube
  PartitionQuotient orbit_quotient(const FiniteMetric& cube) const;
  bool permutation_part_transitive() const;
  // Group order by BFS closure over (perm, translation) pairs; throws
  // capacity_error beyond the limit.
  Int group_order(size_t limit = 1000000) const;
  bool leaves_invariant(const SpectralFunction& f, double tolerance = 1e-9) const;

 private:
  int d_;
  std::vector<CubeIsometry> gens_;
};

struct InvariantInequalityReport {
  double lhs;   // 2 p (1-p)
  double rhs;   // (10 / log2 d) * sum_j I_j(A)
  bool holds;
};

// Boolean invariant sets under a coordinate-transitive action satisfy
// lhs <= rhs; both sides are computed exactly by enumeration.
InvariantInequalityReport transitive_invariant_inequality(const SpectralFunction& indicator,
                                                          const CubeAction& action);

// certified_average_lower(d, |G|) * log2(d) / (10 d), clamped below at 1.
double corollary_group_bound(const CubeAction& action,
                             std::optional<Int> order_bound = std::nullopt);

}  // namespace embedlb
