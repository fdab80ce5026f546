#pragma once

// Exact L1-distortion certification on tiny spaces: the cut-cone LP for
// c_1(X), solved by a dense rational simplex so the optimum comes with a
// bit-exact certificate.

#include <cstdint>
#include <vector>

#include "embedlb/metric.hpp"
#include "embedlb/rational.hpp"

namespace embedlb {

// Nonnegative weights on proper nonempty cuts. Cuts are canonicalized so
// that point 0 is never inside S: mask bit i-1 means point i lies in S.
struct CutDecomposition {
  int n = 0;
  std::vector<std::pair<std::uint32_t, Rat>> weights;  // (mask, lambda_S > 0)

  // Induced semimetric value sum lambda_S |1_S(x) - 1_S(y)|.
  Rat semimetric(int x, int y) const;
};

struct C1Result {
  Rat value;                // c_1(X), exact
  CutDecomposition witness; // optimal cut weights
};

// Minimizes C subject to d(x,y) <= sum lambda_S delta_S(x,y) <= C d(x,y),
// lambda >= 0, over all 2^{n-1}-1 canonical cuts. Exact rational simplex;
// capacity error for n > 12.
C1Result exact_c1_lp(const FiniteMetric& X);

// --- generic exact LP, exposed for reuse and direct testing ---

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  Rat objective;        // valid when optimal
  std::vector<Rat> x;   // primal solution
};

// Solves min c.x subject to A x <= b (componentwise), x >= 0, exactly.
// Rows with negative b are handled by the phase-1 artificial method.
// Dantzig pricing with a Bland fallback guards against cycling.
LpResult solve_lp_min(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                      const std::vector<Rat>& c);

}  // namespace embedlb
