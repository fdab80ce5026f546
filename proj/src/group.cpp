#include "embedlb/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "embedlb/fourier.hpp"

namespace embedlb {

FiniteGroup FiniteGroup::xor_group(int d) {
  if (d < 1 || d > 16) throw capacity_error("xor_group supports d <= 16");
  FiniteGroup g;
  g.kind_ = Kind::xor_cube;
  g.dim_ = d;
  g.size_ = 1 << d;
  return g;
}

FiniteGroup FiniteGroup::from_permutations(int m, std::vector<std::vector<int>> gens) {
  FiniteGroup g;
  g.kind_ = Kind::perm;
  std::vector<int> id(static_cast<size_t>(m));
  std::iota(id.begin(), id.end(), 0);
  g.elems_.push_back(id);
  g.index_[id] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (const auto& p : gens) {
        if (int(p.size()) != m) throw std::invalid_argument("generator size mismatch");
        std::vector<int> comp(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) comp[size_t(i)] = p[size_t(g.elems_[size_t(e)][size_t(i)])];
        if (!g.index_.count(comp)) {
          g.index_[comp] = int(g.elems_.size());
          next.push_back(int(g.elems_.size()));
          g.elems_.push_back(comp);
          if (g.elems_.size() > 100000) throw capacity_error("permutation group too large");
        }
      }
    frontier = std::move(next);
  }
  g.size_ = int(g.elems_.size());
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 8) throw capacity_error("symmetric group supports n <= 8");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(static_cast<size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    std::vector<int> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[size_t(i)] = (i + 1) % n;
    gens.push_back(c);
  }
  return from_permutations(n, gens);
}

int FiniteGroup::op(int a, int b) const {
  if (kind_ == Kind::xor_cube) return a ^ b;
  // (a*b)(i) = a(b(i))
  const auto& pa = elems_[size_t(a)];
  const auto& pb = elems_[size_t(b)];
  std::vector<int> comp(pa.size());
  for (size_t i = 0; i < pa.size(); ++i) comp[i] = pa[size_t(pb[i])];
  return element_index(comp);
}

int FiniteGroup::inv(int a) const {
  if (kind_ == Kind::xor_cube) return a;
  const auto& pa = elems_[size_t(a)];
  std::vector<int> ia(pa.size());
  for (size_t i = 0; i < pa.size(); ++i) ia[size_t(pa[i])] = int(i);
  return element_index(ia);
}

int FiniteGroup::element_index(const std::vector<int>& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) throw std::invalid_argument("permutation not in group");
  return it->second;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::vector<char> in(size_t(size_), 0);
  in[0] = 1;
  std::vector<int> elems{0}, frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int g : gens) {
        int x = op(e, g);
        if (!in[size_t(x)]) {
          in[size_t(x)] = 1;
          elems.push_back(x);
          next.push_back(x);
        }
      }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<int>> FiniteGroup::left_cosets(const std::vector<int>& subgroup) const {
  std::vector<char> seen(size_t(size_), 0);
  std::vector<std::vector<int>> cosets;
  for (int g = 0; g < size_; ++g) {
    if (seen[size_t(g)]) continue;
    std::vector<int> coset;
    for (int h : subgroup) {
      int x = op(g, h);
      if (seen[size_t(x)]) throw std::invalid_argument("not a subgroup (cosets collide)");
      seen[size_t(x)] = 1;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

bool FiniteGroup::metric_right_invariant(const FiniteMetric& d,
                                         const std::vector<int>& gens) const {
  if (d.n() != size_) throw std::invalid_argument("metric size must match group order");
  for (int g : gens)
    for (int x = 0; x < size_; ++x)
      for (int y = 0; y < size_; ++y)
        if (d.at(op(x, g), op(y, g)) != d.at(x, y)) return false;
  return true;
}

FiniteMetric FiniteGroup::natural_metric() const {
  if (kind_ == Kind::xor_cube) return FiniteMetric::hamming_cube(dim_);
  std::vector<Rat> dist(static_cast<size_t>(size_) * static_cast<size_t>(size_));
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      int disp = 0;
      for (size_t i = 0; i < elems_[size_t(a)].size(); ++i)
        if (elems_[size_t(a)][i] != elems_[size_t(b)][i]) ++disp;
      dist[size_t(a) * size_t(size_) + size_t(b)] = disp;
    }
  return FiniteMetric::trusted(size_, std::move(dist));
}

}  // namespace embedlb
