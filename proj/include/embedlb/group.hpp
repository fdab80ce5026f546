#pragma once

// Small finite groups, enough for coset quotients and invariant metrics:
// F_2^d under XOR and explicit permutation groups (S_n and subgroups).

#include <cstdint>
#include <map>
#include <vector>

#include "embedlb/metric.hpp"

namespace embedlb {

class FiniteGroup {
 public:
  // F_2^d with XOR; element index = bitmask.
  static FiniteGroup xor_group(int d);
  // Closure of the given permutations (arrays over {0..m-1}) under
  // composition; element 0 is the identity.
  static FiniteGroup from_permutations(int m, std::vector<std::vector<int>> gens);
  // Full symmetric group S_n, n <= 8.
  static FiniteGroup symmetric(int n);

  int size() const { return size_; }
  int identity() const { return 0; }
  int op(int a, int b) const;   // a * b
  int inv(int a) const;

  // Permutation array of element a (perm kind only).
  const std::vector<int>& perm(int a) const { return elems_[size_t(a)]; }
  bool is_xor_kind() const { return kind_ == Kind::xor_cube; }
  int element_index(const std::vector<int>& perm) const;

  // Subgroup closure of the given element indices (always contains id).
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  // Left cosets g H as sorted index lists, deterministic order.
  std::vector<std::vector<int>> left_cosets(const std::vector<int>& subgroup) const;

  // d(x g, y g) = d(x, y) for all listed generators g (checked on all x,y).
  bool metric_right_invariant(const FiniteMetric& d, const std::vector<int>& gens) const;

  // Word metric-free invariant metrics used in tests and ops:
  // Hamming metric for the XOR group, displacement metric for permutations.
  FiniteMetric natural_metric() const;

 private:
  enum class Kind { xor_cube, perm };
  Kind kind_ = Kind::xor_cube;
  int size_ = 0;
  int dim_ = 0;  // xor kind
  std::vector<std::vector<int>> elems_;        // perm kind
  std::map<std::vector<int>, int> index_;      // perm -> element id
};

}  // namespace embedlb
