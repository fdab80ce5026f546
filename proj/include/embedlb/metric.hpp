#pragma once

// Finite metric spaces with exact rational distances: Hausdorff distance,
// partition quotients, and distortion measurement.

#include <string>
#include <vector>

#include "embedlb/rational.hpp"

namespace embedlb {

// Labeled n-point metric. Distances are kept as exact rationals (every
// double is dyadic, so float input loses nothing); a double cache serves
// the numeric paths.
class FiniteMetric {
 public:
  FiniteMetric(int n, std::vector<Rat> dist, std::vector<std::string> labels = {});
  static FiniteMetric from_doubles(int n, const std::vector<double>& dist,
                                   std::vector<std::string> labels = {});
  // Skips the O(n^3) triangle validation; caller guarantees the axioms.
  static FiniteMetric trusted(int n, std::vector<Rat> dist,
                              std::vector<std::string> labels = {});
  // Hamming metric on F_2^d (2^d points labeled by bitmask).
  static FiniteMetric hamming_cube(int d);

  int n() const { return n_; }
  const Rat& at(int i, int j) const { return dist_[size_t(i) * n_ + j]; }
  double d(int i, int j) const { return dbl_[size_t(i) * n_ + j]; }
  const std::string& label(int i) const { return labels_[size_t(i)]; }
  const std::vector<Rat>& raw() const { return dist_; }

  Rat diameter() const;
  FiniteMetric scaled(const Rat& t) const;

  // min distance between point sets.
  Rat set_distance(const std::vector<int>& A, const std::vector<int>& B) const;

 private:
  FiniteMetric() : n_(0) {}
  int n_;
  std::vector<Rat> dist_;
  std::vector<double> dbl_;
  std::vector<std::string> labels_;
  void validate() const;
};

// sup over a in A, b in B of max(d(a,B), d(b,A)).
Rat hausdorff_distance(const FiniteMetric& X, const std::vector<int>& A,
                       const std::vector<int>& B);

struct PartitionQuotient {
  const FiniteMetric* base;  // not owned
  std::vector<std::vector<int>> blocks;
  std::vector<Rat> weights;  // w_ij = min block-to-block distance
  FiniteMetric quotient;     // shortest-path closure of the weights
};

// Blocks must partition {0..n-1}; the quotient metric is the shortest-path
// closure (Floyd-Warshall, exact rationals) of the min block distances.
PartitionQuotient quotient_metric(const FiniteMetric& X, std::vector<std::vector<int>> blocks);

struct NoGeoReport {
  bool hypothesis_holds;  // every point reaches every block at the block distance
  bool equality_holds;    // quotient == Hausdorff == min distance on all pairs
};

// Checks the hypothesis and conclusion of the geodesic-partition lemma;
// the hypothesis implies equality, but both are measured independently.
NoGeoReport verify_no_geo(const PartitionQuotient& q);

enum class Norm { l1, l2 };

struct DistortionReport {
  bool injective = true;
  double lip = 0;      // max image/source ratio
  double inv_lip = 0;  // max source/image ratio
  double dist = 0;     // product; +inf when not injective
};

// Distortion of the map i -> image[i] (vectors in R^m) from X, in the
// chosen norm. Non-injective maps are signaled with dist = +inf.
DistortionReport distortion(const std::vector<std::vector<double>>& image,
                            const FiniteMetric& X, Norm norm);

}  // namespace embedlb
