#include "embedlb/transport.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "embedlb/fourier.hpp"

namespace embedlb {

DiscreteMeasure DiscreteMeasure::uniform_on(int n, const std::vector<int>& support) {
  if (support.empty()) throw std::invalid_argument("uniform measure on empty support");
  DiscreteMeasure m;
  m.weights.assign(size_t(n), Rat(0));
  Rat w(1, (unsigned long)support.size());
  for (int p : support) {
    if (p < 0 || p >= n) throw std::invalid_argument("support point out of range");
    m.weights[size_t(p)] += w;
  }
  return m;
}

DiscreteMeasure DiscreteMeasure::point_mass(int n, int x) {
  DiscreteMeasure m;
  m.weights.assign(size_t(n), Rat(0));
  m.weights.at(size_t(x)) = 1;
  return m;
}

void DiscreteMeasure::validate(int n) const {
  if (weights.size() != size_t(n)) throw std::invalid_argument("measure size mismatch");
  Rat total = 0;
  for (const Rat& w : weights) {
    if (w < 0) throw std::invalid_argument("negative weight");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("weights must sum to exactly 1");
}

Rat Coupling::cost(const FiniteMetric& X) const {
  Rat c = 0;
  for (const auto& [x, y, m] : entries) c += X.at(x, y) * m;
  return c;
}

bool Coupling::has_marginals(const DiscreteMeasure& sigma, const DiscreteMeasure& tau) const {
  std::vector<Rat> row(size_t(n), Rat(0)), col(size_t(n), Rat(0));
  for (const auto& [x, y, m] : entries) {
    if (m < 0) return false;
    row[size_t(x)] += m;
    col[size_t(y)] += m;
  }
  return row == sigma.weights && col == tau.weights;
}

namespace {

// Residual-graph min-cost flow over exact rationals.
struct McmfEdge {
  int to;
  Rat cap;
  Rat cost;
};

class Mcmf {
 public:
  explicit Mcmf(int n) : adj_(size_t(n)) {}

  void add_edge(int a, int b, Rat cap, Rat cost) {
    adj_[size_t(a)].push_back(int(edges_.size()));
    edges_.push_back({b, std::move(cap), cost});
    adj_[size_t(b)].push_back(int(edges_.size()));
    edges_.push_back({a, Rat(0), -cost});
  }

  // Sends as much flow as possible from s to t; returns total cost.
  Rat run(int s, int t) {
    Rat total_cost = 0;
    for (;;) {
      // SPFA shortest path by cost in the residual graph.
      const int n = int(adj_.size());
      std::vector<char> reached(size_t(n), 0), inq(size_t(n), 0);
      std::vector<Rat> dist(size_t(n), Rat(0));
      std::vector<int> prev_edge(size_t(n), -1);
      std::deque<int> q;
      reached[size_t(s)] = 1;
      q.push_back(s);
      inq[size_t(s)] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        inq[size_t(v)] = 0;
        for (int eid : adj_[size_t(v)]) {
          const McmfEdge& e = edges_[size_t(eid)];
          if (e.cap == 0) continue;
          Rat nd = dist[size_t(v)] + e.cost;
          if (!reached[size_t(e.to)] || nd < dist[size_t(e.to)]) {
            reached[size_t(e.to)] = 1;
            dist[size_t(e.to)] = nd;
            prev_edge[size_t(e.to)] = eid;
            if (!inq[size_t(e.to)]) {
              q.push_back(e.to);
              inq[size_t(e.to)] = 1;
            }
          }
        }
      }
      if (!reached[size_t(t)]) break;
      // Bottleneck along the path.
      Rat push;
      bool first = true;
      for (int v = t; v != s;) {
        const McmfEdge& e = edges_[size_t(prev_edge[size_t(v)])];
        if (first || e.cap < push) push = e.cap;
        first = false;
        v = edges_[size_t(prev_edge[size_t(v)] ^ 1)].to;
      }
      for (int v = t; v != s;) {
        int eid = prev_edge[size_t(v)];
        edges_[size_t(eid)].cap -= push;
        edges_[size_t(eid ^ 1)].cap += push;
        total_cost += push * edges_[size_t(eid)].cost;
        v = edges_[size_t(eid ^ 1)].to;
      }
    }
    return total_cost;
  }

  // Potential function pi with pi(b) <= pi(a) + cost on every residual
  // edge; exists iff the flow is optimal (no negative residual cycles).
  std::vector<Rat> residual_potentials() const {
    const int n = int(adj_.size());
    std::vector<Rat> pi(size_t(n), Rat(0));
    for (int round = 0; round <= n; ++round) {
      bool changed = false;
      for (size_t eid = 0; eid < edges_.size(); ++eid) {
        const McmfEdge& e = edges_[eid];
        if (e.cap == 0) continue;
        int a = edges_[eid ^ 1].to;
        if (pi[size_t(e.to)] > pi[size_t(a)] + e.cost) {
          pi[size_t(e.to)] = pi[size_t(a)] + e.cost;
          changed = true;
        }
      }
      if (!changed) return pi;
    }
    throw std::logic_error("negative residual cycle: flow not optimal");
  }

  const McmfEdge& edge(int id) const { return edges_[size_t(id)]; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<McmfEdge> edges_;
};

}  // namespace

EmdResult emd(const FiniteMetric& X, const DiscreteMeasure& sigma, const DiscreteMeasure& tau) {
  const int n = X.n();
  if (n > 256) throw capacity_error("emd supports at most 256 points");
  sigma.validate(n);
  tau.validate(n);

  std::vector<int> src, snk;
  for (int i = 0; i < n; ++i) {
    if (sigma.weights[size_t(i)] > 0) src.push_back(i);
    if (tau.weights[size_t(i)] > 0) snk.push_back(i);
  }
  const int ns = int(src.size()), nt = int(snk.size());
  const int s = ns + nt, t = ns + nt + 1;
  Mcmf net(ns + nt + 2);
  auto pair_edge = std::vector<std::vector<int>>(size_t(ns), std::vector<int>(size_t(nt)));
  int eid = 0;
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b) {
      pair_edge[size_t(a)][size_t(b)] = eid;
      net.add_edge(a, ns + b, Rat(2), X.at(src[size_t(a)], snk[size_t(b)]));
      eid += 2;
    }
  for (int a = 0; a < ns; ++a) {
    net.add_edge(s, a, sigma.weights[size_t(src[size_t(a)])], Rat(0));
    eid += 2;
  }
  for (int b = 0; b < nt; ++b) {
    net.add_edge(ns + b, t, tau.weights[size_t(snk[size_t(b)])], Rat(0));
    eid += 2;
  }
  Rat cost = net.run(s, t);

  EmdResult res;
  res.cost = cost;
  res.coupling.n = n;
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b) {
      int id = pair_edge[size_t(a)][size_t(b)];
      Rat flow = net.edge(id ^ 1).cap;  // reverse capacity = shipped mass
      if (flow > 0)
        res.coupling.entries.emplace_back(src[size_t(a)], snk[size_t(b)], flow);
    }

  // Dual certificate from residual potentials.
  std::vector<Rat> pi = net.residual_potentials();
  res.u.assign(size_t(n), Rat(0));
  res.v.assign(size_t(n), Rat(0));
  for (int a = 0; a < ns; ++a) res.u[size_t(src[size_t(a)])] = -pi[size_t(a)];
  for (int b = 0; b < nt; ++b) res.v[size_t(snk[size_t(b)])] = pi[size_t(ns + b)];
  bool ok = true;
  for (int a = 0; a < ns && ok; ++a)
    for (int b = 0; b < nt && ok; ++b)
      if (res.u[size_t(src[size_t(a)])] + res.v[size_t(snk[size_t(b)])] >
          X.at(src[size_t(a)], snk[size_t(b)]))
        ok = false;
  Rat dual_value = 0;
  for (int i = 0; i < n; ++i)
    dual_value += res.u[size_t(i)] * sigma.weights[size_t(i)] +
                  res.v[size_t(i)] * tau.weights[size_t(i)];
  res.certified = ok && dual_value == cost && res.coupling.has_marginals(sigma, tau);
  return res;
}

UniformSetsResult emd_uniform_sets(const FiniteMetric& X, const std::vector<int>& A,
                                   const std::vector<int>& B) {
  if (A.size() != B.size()) throw std::invalid_argument("uniform sets must have equal size");
  if (A.empty()) throw std::invalid_argument("empty sets");
  const int k = int(A.size());

  // Hungarian algorithm with potentials, exact arithmetic. 1-based.
  Rat inf = X.diameter() * Rat(k + 1) + 1;
  std::vector<Rat> u(size_t(k) + 1, Rat(0)), v(size_t(k) + 1, Rat(0));
  std::vector<int> p(size_t(k) + 1, 0), way(size_t(k) + 1, 0);
  auto cost = [&](int i, int j) { return X.at(A[size_t(i - 1)], B[size_t(j - 1)]); };
  for (int i = 1; i <= k; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Rat> minv(size_t(k) + 1, inf);
    std::vector<char> used(size_t(k) + 1, 0);
    do {
      used[size_t(j0)] = 1;
      int i0 = p[size_t(j0)], j1 = -1;
      Rat delta = inf;
      for (int j = 1; j <= k; ++j) {
        if (used[size_t(j)]) continue;
        Rat cur = cost(i0, j) - u[size_t(i0)] - v[size_t(j)];
        if (cur < minv[size_t(j)]) {
          minv[size_t(j)] = cur;
          way[size_t(j)] = j0;
        }
        if (minv[size_t(j)] < delta) {
          delta = minv[size_t(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[size_t(j)]) {
          u[size_t(p[size_t(j)])] += delta;
          v[size_t(j)] -= delta;
        } else {
          minv[size_t(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[size_t(j0)] != 0);
    do {
      int j1 = way[size_t(j0)];
      p[size_t(j0)] = p[size_t(j1)];
      j0 = j1;
    } while (j0);
  }
  UniformSetsResult res;
  res.bijection.assign(size_t(k), -1);
  Rat total = 0;
  for (int j = 1; j <= k; ++j) {
    res.bijection[size_t(p[size_t(j)] - 1)] = j - 1;
    total += cost(p[size_t(j)], j);
  }
  res.cost = total / k;
  return res;
}

bool verify_group_invariant(const FiniteGroup& G, const FiniteMetric& d,
                            const std::vector<int>& subgroup,
                            const std::vector<int>& invariance_gens) {
  if (!G.metric_right_invariant(d, invariance_gens))
    throw std::invalid_argument("metric is not right-invariant");
  // Subgroup closure check.
  std::vector<char> in(size_t(G.size()), 0);
  for (int h : subgroup) in.at(size_t(h)) = 1;
  if (!in[0]) throw std::invalid_argument("subgroup must contain the identity");
  for (int a : subgroup)
    for (int b : subgroup)
      if (!in[size_t(G.op(a, b))]) throw std::invalid_argument("not closed: not a subgroup");

  auto cosets = G.left_cosets(subgroup);
  PartitionQuotient q = quotient_metric(d, cosets);
  const int k = int(cosets.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      DiscreteMeasure mi = DiscreteMeasure::uniform_on(G.size(), cosets[size_t(i)]);
      DiscreteMeasure mj = DiscreteMeasure::uniform_on(G.size(), cosets[size_t(j)]);
      if (emd(d, mi, mj).cost != q.quotient.at(i, j)) return false;
    }
  return true;
}

}  // namespace embedlb
