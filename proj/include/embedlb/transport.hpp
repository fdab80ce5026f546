#pragma once

// Exact optimal transportation cost on finite metrics. All arithmetic is
// rational: the group-invariance identity is an exact equality and float
// flow would need fragile tolerances.

#include <vector>

#include "embedlb/group.hpp"
#include "embedlb/metric.hpp"
#include "embedlb/rational.hpp"

namespace embedlb {

// Probability weights on the points of a FiniteMetric.
struct DiscreteMeasure {
  std::vector<Rat> weights;

  static DiscreteMeasure uniform_on(int n, const std::vector<int>& support);
  static DiscreteMeasure point_mass(int n, int x);
  void validate(int n) const;  // nonnegative, sums to exactly 1
};

// Joint measure with prescribed marginals, stored sparsely.
struct Coupling {
  int n = 0;
  std::vector<std::tuple<int, int, Rat>> entries;  // (x, y, mass)

  Rat cost(const FiniteMetric& X) const;
  // Exact marginal checks.
  bool has_marginals(const DiscreteMeasure& sigma, const DiscreteMeasure& tau) const;
};

struct EmdResult {
  Rat cost;
  Coupling coupling;
  // Dual potentials certifying optimality: u(x) + v(y) <= d(x,y) with
  // equality on the coupling support.
  std::vector<Rat> u, v;
  bool duality_certified() const { return certified; }
  bool certified = false;
};

// Min-cost flow (successive shortest augmenting paths with potentials)
// over exact rationals. Supports up to 256 points.
EmdResult emd(const FiniteMetric& X, const DiscreteMeasure& sigma, const DiscreteMeasure& tau);

struct UniformSetsResult {
  Rat cost;                 // (1/|A|) sum d(a, f(a))
  std::vector<int> bijection;  // f(A[i]) = B[bijection[i]]
};

// Min over bijections A -> B, solved as an assignment problem (exact
// Hungarian algorithm) - an algebraic route independent of the flow solver.
UniformSetsResult emd_uniform_sets(const FiniteMetric& X, const std::vector<int>& A,
                                   const std::vector<int>& B);

// For every coset pair of H in G: transport cost between the uniform coset
// measures equals the quotient distance, exactly. The metric must be
// right-invariant (verified on the supplied generators).
bool verify_group_invariant(const FiniteGroup& G, const FiniteMetric& d,
                            const std::vector<int>& subgroup,
                            const std::vector<int>& invariance_gens);

}  // namespace embedlb
