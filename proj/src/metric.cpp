#include "embedlb/metric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "embedlb/fourier.hpp"

namespace embedlb {

FiniteMetric::FiniteMetric(int n, std::vector<Rat> dist, std::vector<std::string> labels)
    : n_(n), dist_(std::move(dist)), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("metric needs at least one point");
  if (dist_.size() != size_t(n) * size_t(n))
    throw std::invalid_argument("distance matrix has wrong size");
  if (labels_.empty()) {
    labels_.reserve(size_t(n));
    for (int i = 0; i < n; ++i) labels_.push_back("p" + std::to_string(i));
  }
  if (labels_.size() != size_t(n)) throw std::invalid_argument("label count mismatch");
  dbl_.resize(dist_.size());
  for (size_t i = 0; i < dist_.size(); ++i) dbl_[i] = to_double(dist_[i]);
  validate();
}

FiniteMetric FiniteMetric::trusted(int n, std::vector<Rat> dist,
                                   std::vector<std::string> labels) {
  FiniteMetric m;
  m.n_ = n;
  m.dist_ = std::move(dist);
  m.labels_ = std::move(labels);
  if (m.labels_.empty()) {
    m.labels_.reserve(size_t(n));
    for (int i = 0; i < n; ++i) m.labels_.push_back("p" + std::to_string(i));
  }
  m.dbl_.resize(m.dist_.size());
  for (size_t i = 0; i < m.dist_.size(); ++i) m.dbl_[i] = to_double(m.dist_[i]);
  return m;
}

void FiniteMetric::validate() const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0) throw std::invalid_argument("nonzero diagonal");
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != at(j, i)) throw std::invalid_argument("asymmetric distances");
      if (i != j && at(i, j) <= 0) throw std::invalid_argument("nonpositive off-diagonal");
    }
  }
  // Double-precision prefilter; inconclusive triples are re-checked exactly.
  // Violations up to diam * 1e-12 are tolerated as input rounding.
  const double guard = 1e-6;
  Rat tol_slack = rat_from_double(to_double(diameter()) * 1e-12);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        double viol = d(i, j) - d(i, k) - d(k, j);
        if (viol <= -guard) continue;
        if (at(i, j) > at(i, k) + at(k, j) + tol_slack)
          throw std::invalid_argument("triangle inequality violated");
      }
}

FiniteMetric FiniteMetric::from_doubles(int n, const std::vector<double>& dist,
                                        std::vector<std::string> labels) {
  std::vector<Rat> r(dist.size());
  for (size_t i = 0; i < dist.size(); ++i) r[i] = rat_from_double(dist[i]);
  return FiniteMetric(n, std::move(r), std::move(labels));
}

FiniteMetric FiniteMetric::hamming_cube(int d) {
  if (d < 1 || d > 16) throw capacity_error("hamming_cube supports d <= 16");
  const int n = 1 << d;
  std::vector<Rat> dist(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto labels = std::vector<std::string>(size_t(n));
  for (int i = 0; i < n; ++i) {
    std::string l(size_t(d), '0');
    for (int b = 0; b < d; ++b)
      if ((i >> b) & 1) l[size_t(b)] = '1';
    labels[size_t(i)] = l;
    for (int j = 0; j < n; ++j) dist[size_t(i) * n + j] = hamming(CubePoint(i), CubePoint(j));
  }
  return trusted(n, std::move(dist), std::move(labels));
}

Rat FiniteMetric::diameter() const {
  Rat m = 0;
  for (const Rat& v : dist_)
    if (v > m) m = v;
  return m;
}

FiniteMetric FiniteMetric::scaled(const Rat& t) const {
  if (t <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rat> d(dist_.size());
  for (size_t i = 0; i < dist_.size(); ++i) d[i] = dist_[i] * t;
  return trusted(n_, std::move(d), labels_);
}

Rat FiniteMetric::set_distance(const std::vector<int>& A, const std::vector<int>& B) const {
  if (A.empty() || B.empty()) throw std::invalid_argument("set distance of empty set");
  Rat best = at(A[0], B[0]);
  for (int a : A)
    for (int b : B) {
      const Rat& v = at(a, b);
      if (v < best) best = v;
    }
  return best;
}

Rat hausdorff_distance(const FiniteMetric& X, const std::vector<int>& A,
                       const std::vector<int>& B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("hausdorff needs nonempty sets");
  auto point_to_set = [&](int p, const std::vector<int>& S) {
    Rat best = X.at(p, S[0]);
    for (int s : S)
      if (X.at(p, s) < best) best = X.at(p, s);
    return best;
  };
  Rat sup = 0;
  for (int a : A) {
    Rat v = point_to_set(a, B);
    if (v > sup) sup = v;
  }
  for (int b : B) {
    Rat v = point_to_set(b, A);
    if (v > sup) sup = v;
  }
  return sup;
}

PartitionQuotient quotient_metric(const FiniteMetric& X, std::vector<std::vector<int>> blocks) {
  const int n = X.n();
  std::vector<int> seen(size_t(n), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int p : blocks[b]) {
      if (p < 0 || p >= n || seen[size_t(p)] != -1)
        throw std::invalid_argument("blocks do not partition the point set");
      seen[size_t(p)] = int(b);
    }
  }
  for (int p = 0; p < n; ++p)
    if (seen[size_t(p)] == -1) throw std::invalid_argument("blocks do not cover the point set");

  const int k = int(blocks.size());
  std::vector<Rat> w(size_t(k) * k, Rat(0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Rat v = X.set_distance(blocks[size_t(i)], blocks[size_t(j)]);
      w[size_t(i) * k + j] = v;
      w[size_t(j) * k + i] = v;
    }
  // Floyd-Warshall closure, exact.
  std::vector<Rat> sp = w;
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rat via = sp[size_t(i) * k + m] + sp[size_t(m) * k + j];
        if (via < sp[size_t(i) * k + j]) sp[size_t(i) * k + j] = via;
      }
  auto labels = std::vector<std::string>(size_t(k));
  for (int i = 0; i < k; ++i) labels[size_t(i)] = "U" + std::to_string(i);
  // The closure satisfies the triangle inequality by construction.
  PartitionQuotient q{&X, std::move(blocks), std::move(w),
                      FiniteMetric::trusted(k, std::move(sp), std::move(labels))};
  return q;
}

NoGeoReport verify_no_geo(const PartitionQuotient& q) {
  const FiniteMetric& X = *q.base;
  const int k = int(q.blocks.size());
  NoGeoReport r{true, true};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat block_dist = (i == j) ? Rat(0) : X.set_distance(q.blocks[size_t(i)], q.blocks[size_t(j)]);
      for (int x : q.blocks[size_t(i)]) {
        bool found = false;
        for (int y : q.blocks[size_t(j)])
          if (X.at(x, y) == block_dist) {
            found = true;
            break;
          }
        if (!found) r.hypothesis_holds = false;
      }
      if (i < j) {
        Rat h = hausdorff_distance(X, q.blocks[size_t(i)], q.blocks[size_t(j)]);
        if (q.quotient.at(i, j) != h || h != block_dist) r.equality_holds = false;
      }
    }
  return r;
}

DistortionReport distortion(const std::vector<std::vector<double>>& image,
                            const FiniteMetric& X, Norm norm) {
  const int n = X.n();
  if (image.size() != size_t(n)) throw std::invalid_argument("map table size mismatch");
  auto img_dist = [&](int i, int j) {
    const auto& a = image[size_t(i)];
    const auto& b = image[size_t(j)];
    if (a.size() != b.size()) throw std::invalid_argument("ragged image vectors");
    double s = 0;
    for (size_t c = 0; c < a.size(); ++c) {
      double dv = a[c] - b[c];
      s += (norm == Norm::l1) ? std::abs(dv) : dv * dv;
    }
    return (norm == Norm::l1) ? s : std::sqrt(s);
  };
  DistortionReport r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double di = img_dist(i, j), ds = X.d(i, j);
      if (di <= 0) {
        r.injective = false;
        r.dist = std::numeric_limits<double>::infinity();
        r.inv_lip = std::numeric_limits<double>::infinity();
        continue;
      }
      r.lip = std::max(r.lip, di / ds);
      if (r.injective) r.inv_lip = std::max(r.inv_lip, ds / di);
    }
  if (r.injective) r.dist = r.lip * r.inv_lip;
  return r;
}

}  // namespace embedlb
