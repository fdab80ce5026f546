#include "embedlb/codes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "embedlb/tolerances.hpp"

namespace embedlb {

namespace {

// Row-reduce bitmask vectors over F_2; returns an echelon basis.
std::vector<CubePoint> f2_echelon(std::vector<CubePoint> rows) {
  std::vector<CubePoint> basis;
  for (CubePoint v : rows) {
    for (CubePoint b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  // min(v, v^b) reduces the leading bit iff b's leading bit is set in v.
  // Re-sort for a canonical echelon order.
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

int f2_rank(const std::vector<CubePoint>& rows) { return int(f2_echelon(rows).size()); }

}  // namespace

LinearCode::LinearCode(int d, std::vector<CubePoint> gens) : d_(d), gens_(std::move(gens)) {
  if (d < 1 || d > 24) throw capacity_error("codes support ambient dimension <= 24");
  for (CubePoint g : gens_)
    if (g >= (CubePoint(1) << d)) throw std::invalid_argument("generator outside F_2^d");
  if (f2_rank(gens_) != int(gens_.size()))
    throw std::invalid_argument("code generators are linearly dependent");
  if (int(gens_.size()) > 20) throw capacity_error("code dimension capped at 20");
  min_weight_ = 0;
  if (!gens_.empty()) {
    min_weight_ = d_;
    const size_t n = size_t(1) << gens_.size();
    CubePoint word = 0;
    // Gray-code walk over all codewords.
    for (size_t i = 1; i < n; ++i) {
      size_t bit = std::countr_zero(i);
      word ^= gens_[bit];
      min_weight_ = std::min(min_weight_, popcount(word));
    }
  }
}

std::vector<CubePoint> LinearCode::codewords() const {
  std::vector<CubePoint> out;
  const size_t n = size_t(1) << gens_.size();
  out.reserve(n);
  CubePoint word = 0;
  out.push_back(0);
  for (size_t i = 1; i < n; ++i) {
    word ^= gens_[size_t(std::countr_zero(i))];
    out.push_back(word);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LinearCode::contains(CubePoint x) const {
  std::vector<CubePoint> basis = f2_echelon(gens_);
  for (CubePoint b : basis) x = std::min(x, x ^ b);
  return x == 0;
}

LinearCode dual_code(const LinearCode& C) {
  const int d = C.ambient_dim();
  // Nullspace of the generator matrix: solve <x, g> = 0 for all g.
  std::vector<CubePoint> rows = f2_echelon(C.gens());
  std::vector<int> pivot_of_row;
  std::vector<char> is_pivot(size_t(d), 0);
  // Echelon rows sorted by leading bit descending; forward-eliminate to
  // reduced form so each pivot column appears in exactly one row.
  for (size_t i = 0; i < rows.size(); ++i) {
    int lead = 31 - std::countl_zero(rows[i]);
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i && ((rows[j] >> lead) & 1u)) rows[j] ^= rows[i];
  }
  for (CubePoint r : rows) {
    int lead = 31 - std::countl_zero(r);
    pivot_of_row.push_back(lead);
    is_pivot[size_t(lead)] = 1;
  }
  std::vector<CubePoint> duals;
  for (int freecol = 0; freecol < d; ++freecol) {
    if (is_pivot[size_t(freecol)]) continue;
    CubePoint v = CubePoint(1) << freecol;
    for (size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> freecol) & 1u) v |= CubePoint(1) << pivot_of_row[i];
    duals.push_back(v);
  }
  return LinearCode(d, std::move(duals));
}

LinearCode code_greedy(int d, double delta, int target_dim) {
  if (d < 1 || d > 20) throw capacity_error("code_greedy supports d <= 20");
  if (target_dim < 0 || target_dim > d) throw std::invalid_argument("bad target dimension");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0,1)");
  const int radius = int(std::floor(delta * d));
  Int tail = 0;
  for (int k = 0; k <= radius; ++k) tail += binomial(unsigned(d), unsigned(k));
  std::vector<CubePoint> gens;
  for (int step = 0; step < target_dim; ++step) {
    // Counting bound: vectors within radius of the current span.
    Int covered = pow2(unsigned(step)) * tail;
    if (covered >= pow2(unsigned(d)))
      throw std::invalid_argument("greedy extension not certified: 2^k * tail >= 2^d");
    // Certified to exist; take the first candidate in index order.
    const size_t span = size_t(1) << step;
    CubePoint found = 0;
    for (CubePoint x = 1; x < (CubePoint(1) << d) && !found; ++x) {
      bool far = true;
      CubePoint word = 0;
      for (size_t i = 0; far && i < span; ++i) {
        if (i) word ^= gens[size_t(std::countr_zero(i))];
        if (popcount(x ^ word) <= radius) far = false;
      }
      if (far) found = x;
    }
    if (!found) throw std::logic_error("certified extension not found");
    gens.push_back(found);
  }
  return LinearCode(d, std::move(gens));
}

FiniteMetric coset_quotient(const LinearCode& C) {
  const int d = C.ambient_dim();
  const int k = C.dim();
  if (k > 12 || d > 20) throw capacity_error("coset_quotient needs dim(C) <= 12, d <= 20");
  // Cosets of C^perp are indexed by syndromes against C's basis.
  const size_t ncosets = size_t(1) << k;
  std::vector<int> minwt(ncosets, d + 1);
  for (size_t x = 0; x < (size_t(1) << d); ++x) {
    size_t s = 0;
    for (int i = 0; i < k; ++i)
      s |= size_t(popcount(CubePoint(x) & C.gens()[size_t(i)]) & 1) << i;
    minwt[s] = std::min(minwt[s], popcount(x));
  }
  std::vector<Rat> dist(ncosets * ncosets);
  for (size_t a = 0; a < ncosets; ++a)
    for (size_t b = 0; b < ncosets; ++b) dist[a * ncosets + b] = minwt[a ^ b];
  std::vector<std::string> labels(ncosets);
  for (size_t s = 0; s < ncosets; ++s) labels[s] = "s" + std::to_string(s);
  // Group-invariant with subadditive weights, so the axioms hold.
  return FiniteMetric::trusted(int(ncosets), std::move(dist), std::move(labels));
}

Rat certified_average_lower(int d, const Int& group_order) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (group_order < 1 || group_order >= pow2(unsigned(d)))
    throw std::invalid_argument("group order out of range");
  Rat best = 0;
  Int tail = 1;  // k = 0 term
  const Int denom = pow2(unsigned(d));
  for (int t = 1; t <= d / 2; ++t) {
    tail += binomial(unsigned(d), unsigned(t));
    Rat surviving = 1 - Rat(group_order * tail, denom);
    if (surviving <= 0) continue;
    Rat v = Rat(t) * surviving;
    if (v > best) best = v;
  }
  best.canonicalize();
  return best;
}

bool fourier_vanishing_check(const SpectralFunction& f, const LinearCode& C) {
  LinearCode dual = dual_code(C);
  const int m = f.range_dim;
  for (CubePoint g : dual.gens())
    for (size_t x = 0; x < f.table_size(); ++x)
      for (int c = 0; c < m; ++c)
        if (std::abs(f.values[x * size_t(m) + c] - f.values[(x ^ g) * size_t(m) + c]) > 1e-9)
          throw std::invalid_argument("f is not invariant under C^perp translations");
  SpectralFunction g = f.coeffs ? f : walsh_transform(f);
  const int w = C.min_weight();
  for (size_t A = 1; A < g.table_size(); ++A) {
    if (popcount(A) >= w) continue;
    if (std::sqrt(g.coeff_norm2(CubePoint(A))) > tol::kIdentity) return false;
  }
  return true;
}

double theorem_code_bound(const LinearCode& C) {
  const int d = C.ambient_dim();
  Rat avg = certified_average_lower(d, pow2(unsigned(d - C.dim())));
  return to_double(avg) * double(C.min_weight()) / double(d);
}

CubePoint CubeIsometry::apply(CubePoint x) const {
  CubePoint y = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if ((x >> i) & 1u) y |= CubePoint(1) << perm[i];
  return y ^ translation;
}

CubeAction::CubeAction(int d, std::vector<CubeIsometry> generators)
    : d_(d), gens_(std::move(generators)) {
  if (d < 1 || d > 20) throw capacity_error("cube actions support d <= 20");
  for (const auto& g : gens_) {
    if (int(g.perm.size()) != d) throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(size_t(d), 0);
    for (int p : g.perm) {
      if (p < 0 || p >= d || seen[size_t(p)]) throw std::invalid_argument("not a permutation");
      seen[size_t(p)] = 1;
    }
    if (g.translation >= (CubePoint(1) << d))
      throw std::invalid_argument("translation outside the cube");
  }
}

CubeAction CubeAction::cyclic_shift(int d) {
  CubeIsometry g;
  g.perm.resize(size_t(d));
  for (int i = 0; i < d; ++i) g.perm[size_t(i)] = (i + 1) % d;
  return CubeAction(d, {g});
}

CubeAction CubeAction::translations(int d, const std::vector<CubePoint>& subgroup_gens) {
  std::vector<CubeIsometry> gens;
  for (CubePoint t : subgroup_gens) {
    CubeIsometry g;
    g.perm.resize(size_t(d));
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.translation = t;
    gens.push_back(std::move(g));
  }
  return CubeAction(d, std::move(gens));
}

CubeAction CubeAction::symmetric_coords(int d) {
  std::vector<CubeIsometry> gens;
  CubeIsometry swap01;
  swap01.perm.resize(size_t(d));
  std::iota(swap01.perm.begin(), swap01.perm.end(), 0);
  if (d >= 2) std::swap(swap01.perm[0], swap01.perm[1]);
  CubeIsometry cyc;
  cyc.perm.resize(size_t(d));
  for (int i = 0; i < d; ++i) cyc.perm[size_t(i)] = (i + 1) % d;
  gens.push_back(std::move(swap01));
  gens.push_back(std::move(cyc));
  return CubeAction(d, std::move(gens));
}

std::vector<std::vector<int>> CubeAction::orbits() const {
  const size_t n = size_t(1) << d_;
  std::vector<int> orbit_id(n, -1);
  std::vector<std::vector<int>> orbits;
  for (size_t seed = 0; seed < n; ++seed) {
    if (orbit_id[seed] != -1) continue;
    const int id = int(orbits.size());
    std::vector<int> members{int(seed)};
    orbit_id[seed] = id;
    std::vector<CubePoint> frontier{CubePoint(seed)};
    while (!frontier.empty()) {
      std::vector<CubePoint> next;
      for (CubePoint x : frontier)
        for (const auto& g : gens_) {
          CubePoint y = g.apply(x);
          if (orbit_id[y] == -1) {
            orbit_id[y] = id;
            members.push_back(int(y));
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  return orbits;
}

PartitionQuotient CubeAction::orbit_quotient(const FiniteMetric& cube) const {
  if (cube.n() != (1 << d_)) throw std::invalid_argument("metric is not on this cube");
  return quotient_metric(cube, orbits());
}

bool CubeAction::permutation_part_transitive() const {
  std::vector<char> reach(size_t(d_), 0);
  reach[0] = 1;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int c : frontier)
      for (const auto& g : gens_) {
        int y = g.perm[size_t(c)];
        if (!reach[size_t(y)]) {
          reach[size_t(y)] = 1;
          next.push_back(y);
        }
        // Generator inverses: preimage of c.
        for (int i = 0; i < d_; ++i)
          if (g.perm[size_t(i)] == c && !reach[size_t(i)]) {
            reach[size_t(i)] = 1;
            next.push_back(i);
          }
      }
    frontier = std::move(next);
  }
  return std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

Int CubeAction::group_order(size_t limit) const {
  std::map<std::pair<std::vector<int>, CubePoint>, int> seen;
  std::vector<int> id(static_cast<size_t>(d_));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::pair<std::vector<int>, CubePoint>> frontier{{id, 0}};
  seen[{id, 0}] = 1;
  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<int>, CubePoint>> next;
    for (const auto& [p, t] : frontier)
      for (const auto& g : gens_) {
        // Compose: first apply (p, t), then g: x -> g.perm(p(x)) + g.perm(t) + g.t
        std::vector<int> cp(static_cast<size_t>(d_));
        for (int i = 0; i < d_; ++i) cp[size_t(i)] = g.perm[size_t(p[size_t(i)])];
        CubePoint ct = 0;
        for (int i = 0; i < d_; ++i)
          if ((t >> i) & 1u) ct |= CubePoint(1) << g.perm[size_t(i)];
        ct ^= g.translation;
        auto key = std::make_pair(cp, ct);
        if (!seen.count(key)) {
          seen[key] = 1;
          next.push_back(key);
          if (seen.size() > limit) throw capacity_error("group closure exceeds limit");
        }
      }
    frontier = std::move(next);
  }
  return Int(seen.size());
}

bool CubeAction::leaves_invariant(const SpectralFunction& f, double tolerance) const {
  if ((size_t(1) << d_) != f.table_size()) return false;
  const int m = f.range_dim;
  for (const auto& g : gens_)
    for (size_t x = 0; x < f.table_size(); ++x) {
      CubePoint y = g.apply(CubePoint(x));
      for (int c = 0; c < m; ++c)
        if (std::abs(f.values[x * size_t(m) + c] - f.values[size_t(y) * size_t(m) + c]) >
            tolerance)
          return false;
    }
  return true;
}

InvariantInequalityReport transitive_invariant_inequality(const SpectralFunction& indicator,
                                                          const CubeAction& action) {
  if (!indicator.is_boolean01())
    throw std::invalid_argument("invariant inequality needs a {0,1} indicator");
  if (!action.permutation_part_transitive())
    throw std::invalid_argument("permutation part is not transitive on coordinates");
  if (!action.leaves_invariant(indicator))
    throw std::invalid_argument("set is not invariant under the action");
  const int d = action.dim();
  if (d < 2) throw std::invalid_argument("inequality needs d >= 2");
  double p = mean_value(indicator);
  double sum_inf = 0;
  for (int j = 1; j <= d; ++j) sum_inf += influence(indicator, j);
  InvariantInequalityReport r;
  r.lhs = 2.0 * p * (1.0 - p);
  r.rhs = (10.0 / std::log2(double(d))) * sum_inf;
  r.holds = r.lhs <= r.rhs + tol::kIdentity;
  return r;
}

double corollary_group_bound(const CubeAction& action, std::optional<Int> order_bound) {
  if (!action.permutation_part_transitive())
    throw std::invalid_argument("corollary needs a transitive permutation action");
  for (const auto& g : action.generators())
    if (g.translation != 0)
      throw std::invalid_argument("corollary needs a pure coordinate-permutation action");
  const int d = action.dim();
  if (d < 2) throw std::invalid_argument("corollary needs d >= 2");
  Int order = order_bound ? *order_bound : action.group_order();
  if (order >= pow2(unsigned(d))) return 1.0;
  Rat avg = certified_average_lower(d, order);
  double v = to_double(avg) * std::log2(double(d)) / (10.0 * double(d));
  return std::max(v, 1.0);
}

}  // namespace embedlb
