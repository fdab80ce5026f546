#include "embedlb/cutlp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "embedlb/fourier.hpp"

namespace embedlb {

Rat CutDecomposition::semimetric(int x, int y) const {
  auto in_s = [](std::uint32_t mask, int p) {
    return p > 0 && ((mask >> (p - 1)) & 1u);
  };
  Rat s = 0;
  for (const auto& [mask, w] : weights)
    if (in_s(mask, x) != in_s(mask, y)) s += w;
  return s;
}

namespace {

// Dense rational simplex tableau for min c.x, Ax <= b, x >= 0.
class Simplex {
 public:
  Simplex(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
          const std::vector<Rat>& c)
      : m_(int(A.size())), nvars_(int(c.size())) {
    // Columns: structural | slack (one per row) | artificial (rows with b<0).
    nslack_ = m_;
    std::vector<int> needs_art;
    for (int r = 0; r < m_; ++r)
      if (b[size_t(r)] < 0) needs_art.push_back(r);
    nart_ = int(needs_art.size());
    ncols_ = nvars_ + nslack_ + nart_;
    tab_.assign(size_t(m_), std::vector<Rat>(size_t(ncols_) + 1, Rat(0)));
    basis_.assign(size_t(m_), -1);
    int art = 0;
    for (int r = 0; r < m_; ++r) {
      const bool flip = b[size_t(r)] < 0;
      for (int j = 0; j < nvars_; ++j)
        tab_[size_t(r)][size_t(j)] = flip ? Rat(-A[size_t(r)][size_t(j)]) : A[size_t(r)][size_t(j)];
      tab_[size_t(r)][size_t(nvars_ + r)] = flip ? Rat(-1) : Rat(1);
      tab_[size_t(r)].back() = flip ? Rat(-b[size_t(r)]) : b[size_t(r)];
      if (flip) {
        tab_[size_t(r)][size_t(nvars_ + nslack_ + art)] = 1;
        basis_[size_t(r)] = nvars_ + nslack_ + art;
        ++art;
      } else {
        basis_[size_t(r)] = nvars_ + r;
      }
    }
  }

  LpResult solve(const std::vector<Rat>& c) {
    if (nart_ > 0) {
      std::vector<Rat> c1(size_t(ncols_), Rat(0));
      for (int j = nvars_ + nslack_; j < ncols_; ++j) c1[size_t(j)] = 1;
      iterate(c1);
      if (objval_ != 0) return {LpStatus::infeasible, Rat(0), {}};
      purge_artificials();
    }
    std::vector<Rat> c2(size_t(ncols_), Rat(0));
    for (int j = 0; j < nvars_; ++j) c2[size_t(j)] = c[size_t(j)];
    if (!iterate(c2)) return {LpStatus::unbounded, Rat(0), {}};
    LpResult res{LpStatus::optimal, objval_, std::vector<Rat>(size_t(nvars_), Rat(0))};
    for (int r = 0; r < m_; ++r)
      if (basis_[size_t(r)] < nvars_) res.x[size_t(basis_[size_t(r)])] = tab_[size_t(r)].back();
    return res;
  }

 private:
  void rebuild_objective(const std::vector<Rat>& c) {
    obj_.assign(size_t(ncols_), Rat(0));
    objval_ = 0;
    for (int j = 0; j < ncols_; ++j) obj_[size_t(j)] = c[size_t(j)];
    for (int r = 0; r < m_; ++r) {
      const Rat& cb = c[size_t(basis_[size_t(r)])];
      if (cb == 0) continue;
      for (int j = 0; j < ncols_; ++j)
        if (tab_[size_t(r)][size_t(j)] != 0) obj_[size_t(j)] -= cb * tab_[size_t(r)][size_t(j)];
      objval_ += cb * tab_[size_t(r)].back();
    }
  }

  // Returns false on unboundedness.
  bool iterate(const std::vector<Rat>& c) {
    rebuild_objective(c);
    bool bland = false;
    int stall = 0;
    for (;;) {
      int enter = -1;
      if (bland) {
        for (int j = 0; j < ncols_; ++j)
          if (obj_[size_t(j)] < 0) {
            enter = j;
            break;
          }
      } else {
        const Rat* best = nullptr;
        for (int j = 0; j < ncols_; ++j)
          if (obj_[size_t(j)] < 0 && (!best || obj_[size_t(j)] < *best)) {
            best = &obj_[size_t(j)];
            enter = j;
          }
      }
      if (enter < 0) return true;  // optimal
      int leave = -1;
      Rat best_ratio;
      for (int r = 0; r < m_; ++r) {
        const Rat& a = tab_[size_t(r)][size_t(enter)];
        if (a <= 0) continue;
        Rat ratio = tab_[size_t(r)].back() / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[size_t(r)] < basis_[size_t(leave)])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      Rat before = objval_;
      pivot(leave, enter);
      if (objval_ == before) {
        if (++stall > 50) bland = true;
      } else {
        stall = 0;
      }
    }
  }

  void pivot(int r, int e) {
    auto& row = tab_[size_t(r)];
    Rat piv = row[size_t(e)];
    for (auto& v : row)
      if (v != 0) v /= piv;
    row[size_t(e)] = 1;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rat f = tab_[size_t(i)][size_t(e)];
      if (f == 0) continue;
      auto& ri = tab_[size_t(i)];
      for (int j = 0; j <= ncols_; ++j)
        if (row[size_t(j)] != 0) ri[size_t(j)] -= f * row[size_t(j)];
      ri[size_t(e)] = 0;
    }
    Rat f = obj_[size_t(e)];
    if (f != 0) {
      for (int j = 0; j < ncols_; ++j)
        if (row[size_t(j)] != 0) obj_[size_t(j)] -= f * row[size_t(j)];
      obj_[size_t(e)] = 0;
      objval_ += f * row.back();
    }
    basis_[size_t(r)] = e;
  }

  // After phase 1: pivot basic artificials out or drop redundant rows, then
  // truncate the artificial columns.
  void purge_artificials() {
    const int art_start = nvars_ + nslack_;
    for (int r = 0; r < m_;) {
      if (basis_[size_t(r)] < art_start) {
        ++r;
        continue;
      }
      int e = -1;
      for (int j = 0; j < art_start; ++j)
        if (tab_[size_t(r)][size_t(j)] != 0) {
          e = j;
          break;
        }
      if (e >= 0) {
        pivot(r, e);
        ++r;
      } else {
        tab_.erase(tab_.begin() + r);
        basis_.erase(basis_.begin() + r);
        --m_;
      }
    }
    for (auto& row : tab_) {
      row.erase(row.begin() + art_start, row.begin() + ncols_);
    }
    ncols_ = art_start;
    nart_ = 0;
  }

  int m_, nvars_, nslack_, nart_, ncols_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<int> basis_;
  std::vector<Rat> obj_;
  Rat objval_;
};

}  // namespace

LpResult solve_lp_min(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                      const std::vector<Rat>& c) {
  if (A.size() != b.size()) throw std::invalid_argument("LP row count mismatch");
  for (const auto& row : A)
    if (row.size() != c.size()) throw std::invalid_argument("LP column count mismatch");
  Simplex s(A, b, c);
  return s.solve(c);
}

C1Result exact_c1_lp(const FiniteMetric& X) {
  const int n = X.n();
  if (n > 12) throw capacity_error("exact_c1_lp is capped at n = 12");
  if (n < 2) return {Rat(1), CutDecomposition{n, {}}};

  const std::uint32_t ncuts = (1u << (n - 1)) - 1;
  auto in_s = [](std::uint32_t mask, int p) {
    return p > 0 && ((mask >> (p - 1)) & 1u);
  };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const int nvars = int(ncuts) + 1;  // lambdas then C
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  A.reserve(pairs.size() * 2);
  for (auto [i, j] : pairs) {
    std::vector<Rat> lower(size_t(nvars), Rat(0)), upper(size_t(nvars), Rat(0));
    for (std::uint32_t s = 1; s <= ncuts; ++s)
      if (in_s(s, i) != in_s(s, j)) {
        lower[size_t(s - 1)] = -1;
        upper[size_t(s - 1)] = 1;
      }
    upper[size_t(nvars - 1)] = -X.at(i, j);
    A.push_back(std::move(lower));
    b.push_back(-X.at(i, j));  // sum lambda delta >= d
    A.push_back(std::move(upper));
    b.push_back(Rat(0));  // sum lambda delta <= C d
  }
  std::vector<Rat> c(size_t(nvars), Rat(0));
  c.back() = 1;
  LpResult lp = solve_lp_min(A, b, c);
  // A scaled family of singleton cuts is always feasible.
  assert(lp.status == LpStatus::optimal);
  if (lp.status != LpStatus::optimal) throw std::logic_error("cut LP must be feasible");

  C1Result res;
  res.value = lp.objective;
  res.witness.n = n;
  for (std::uint32_t s = 1; s <= ncuts; ++s)
    if (lp.x[size_t(s - 1)] != 0) res.witness.weights.emplace_back(s, lp.x[size_t(s - 1)]);
  return res;
}

}  // namespace embedlb
