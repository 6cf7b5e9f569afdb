#include "colourlab/overlap_matrix.hpp"

#include <cmath>

#include "colourlab/errors.hpp"

namespace colourlab {

std::int64_t OverlapCounts::total() const {
  std::int64_t s = 0;
  for (const auto c : counts) s += c;
  return s;
}

std::int64_t OverlapCounts::row_sum(int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < k; ++j) s += (*this)(i, j);
  return s;
}

std::int64_t OverlapCounts::col_sum(int j) const {
  std::int64_t s = 0;
  for (int i = 0; i < k; ++i) s += (*this)(i, j);
  return s;
}

OverlapMatrix::OverlapMatrix(int k_, std::vector<double> e) : k(k_), entries(std::move(e)) {
  if (k < 1) throw InvalidParameter("overlap matrix: k must be positive");
  if (entries.size() != static_cast<std::size_t>(k) * k)
    throw InvalidParameter("overlap matrix: expected k*k entries");
  double s = 0.0;
  for (const double x : entries) {
    if (!(x >= 0.0)) throw InvalidParameter("overlap matrix: entries must be non-negative");
    s += x;
  }
  if (std::fabs(s - 1.0) > 1e-9) throw InvalidParameter("overlap matrix: entries must sum to 1");
}

OverlapMatrix OverlapMatrix::barycentre(int k) {
  const double v = 1.0 / (static_cast<double>(k) * k);
  return OverlapMatrix(k, std::vector<double>(static_cast<std::size_t>(k) * k, v));
}

OverlapMatrix OverlapMatrix::from_counts(const OverlapCounts& c) {
  const auto n = c.total();
  if (n <= 0) throw InvalidParameter("overlap matrix: counts must be positive in total");
  std::vector<double> e(c.counts.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (c.counts[i] < 0) throw InvalidParameter("overlap matrix: negative count");
    e[i] = static_cast<double>(c.counts[i]) / static_cast<double>(n);
  }
  return OverlapMatrix(c.k, std::move(e));
}

double OverlapMatrix::row_sum(int i) const {
  double s = 0.0;
  for (int j = 0; j < k; ++j) s += (*this)(i, j);
  return s;
}

double OverlapMatrix::col_sum(int j) const {
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += (*this)(i, j);
  return s;
}

double OverlapMatrix::squared_norm() const {
  double s = 0.0;
  for (const double x : entries) s += x * x;
  return s;
}

bool OverlapMatrix::exactly_balanced(double tol) const {
  const double target = 1.0 / k;
  for (int i = 0; i < k; ++i) {
    if (std::fabs(row_sum(i) - target) > tol) return false;
    if (std::fabs(col_sum(i) - target) > tol) return false;
  }
  return true;
}

OverlapCounts overlap_counts(const Colouring& sigma, const Colouring& tau) {
  if (sigma.k != tau.k) throw InvalidParameter("overlap: colourings use different k");
  if (sigma.n() != tau.n()) throw InvalidParameter("overlap: colourings have different lengths");
  OverlapCounts c;
  c.k = sigma.k;
  c.counts.assign(static_cast<std::size_t>(c.k) * c.k, 0);
  for (int v = 0; v < sigma.n(); ++v)
    ++c.counts[static_cast<std::size_t>(sigma.colours[v]) * c.k + tau.colours[v]];
  return c;
}

OverlapMatrix overlap_of(const Colouring& sigma, const Colouring& tau) {
  return OverlapMatrix::from_counts(overlap_counts(sigma, tau));
}

}  // namespace colourlab
