#pragma once

#include <cstdint>
#include <vector>

#include "colourlab/colouring.hpp"

namespace colourlab {

/// Integer k x k intersection counts |sigma^{-1}(i) ∩ tau^{-1}(j)|, row-major.
struct OverlapCounts {
  int k = 0;
  std::vector<std::int64_t> counts;

  std::int64_t operator()(int i, int j) const { return counts[static_cast<std::size_t>(i) * k + j]; }
  std::int64_t total() const;
  std::int64_t row_sum(int i) const;
  std::int64_t col_sum(int j) const;
};

/// Overlap matrix rho(sigma, tau) = counts / n: non-negative, summing to 1.
struct OverlapMatrix {
  int k = 0;
  std::vector<double> entries;  ///< row-major

  OverlapMatrix() = default;
  OverlapMatrix(int k, std::vector<double> entries);  // validates shape, sign and total

  static OverlapMatrix barycentre(int k);  ///< every entry 1/k^2
  static OverlapMatrix from_counts(const OverlapCounts& c);

  double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * k + j]; }
  double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * k + j]; }
  double row_sum(int i) const;
  double col_sum(int j) const;
  double squared_norm() const;  ///< sum of squared entries

  /// Every row and column sums to 1/k within `tol`.
  bool exactly_balanced(double tol = 1e-12) const;
};

OverlapCounts overlap_counts(const Colouring& sigma, const Colouring& tau);

/// Normalized intersection matrix of two colourings on the same vertex set.
OverlapMatrix overlap_of(const Colouring& sigma, const Colouring& tau);

}  // namespace colourlab
