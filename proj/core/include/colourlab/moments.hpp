#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "colourlab/colouring.hpp"
#include "colourlab/numeric.hpp"
#include "colourlab/overlap_matrix.hpp"

namespace colourlab {

/// Model size. Built from (n, d) the edge count is m = ceil(d n / 2).
struct ModelParams {
  int n = 0;
  std::int64_t m = 0;
  int k = 3;
  double d = 0.0;

  static ModelParams from_degree(int n, double d, int k);
  /// d is reported as 2m/n.
  static ModelParams from_edges(int n, std::int64_t m, int k);
  std::int64_t pairs() const { return pair_count(n); }
};

/// ceil(d n / 2), robust to representation error in d n / 2.
std::int64_t edges_for_degree(int n, double d);

// ---- small-subgraph-conditioning constants --------------------------------

double lambda(int l, double d);         ///< d^l / (2l)
double delta(int l, int k);             ///< (-1)^l / (k-1)^{l-1}
double mu(int l, double d, int k);      ///< lambda_l (1 + delta_l)

/// ((k-1)^2/2) [-ln(1 - d/(k-1)^2) - d/(k-1)^2]
double ssc_closed_form(double d, int k);

struct SscSeries {
  double value = 0.0;     ///< closed form (the returned value)
  double series = 0.0;    ///< truncated sum of lambda_l delta_l^2
  int terms = 0;          ///< last l included
};

/// sum_{l >= 2} lambda_l delta_l^2. The series is summed until the next term
/// drops below tol * 1e-2 and kept as a self-check next to the closed form.
/// Throws DomainError when d >= (k-1)^2.
SscSeries ssc_series(double d, int k, double tol = 1e-12);

/// prod_{l=2}^{L} (1 + delta_l)^{x_l} exp(-delta_l lambda_l), with x[0] = x_2.
double conditioned_ratio(const std::vector<std::int64_t>& x, double d, int k);

// ---- first moment ----------------------------------------------------------

/// Shannon entropy with 0 ln 0 = 0.
double entropy(const std::vector<double>& p);

double alpha(double d, int k);                                  ///< ln k + (d/2) ln(1 - 1/k)
double g_density(const std::vector<double>& rho, double d, int k);  ///< H(rho) + (d/2) ln(1 - sum rho_i^2)
double first_prefactor(double d, int k, double n);             ///< c_n = (2 pi n)^{(1-k)/2} k^{k/2}
double first_curvature(double d, int k);                        ///< B = k (1 + d/(k-1))

/// ln E[Z_{k,rho}] over the multigraph model:
///   multinomial(n; sizes) * (1 - sum_i C(n_i,2) / C(n,2))^m.
/// Returns -inf when the value is zero.
double first_moment_exact_log(const ModelParams& p, const std::vector<std::int64_t>& class_sizes);
Rational first_moment_exact_rational(const ModelParams& p, const std::vector<std::int64_t>& class_sizes);

/// Sum of first_moment_exact over every density in C_k(n).
double first_moment_total_log(const ModelParams& p);
Rational first_moment_total_rational(const ModelParams& p);

/// d/2 + n alpha - ((k-1)/2) ln(1 + d/(k-1))
double first_moment_total_asymptotic_log(double d, int k, int n);

/// Same total for the simple model G(n, m), where a map with Forb = F is a
/// colouring with probability C(N - F, m) / C(N, m).
double first_moment_simple_total_log(const ModelParams& p);

/// The set B_{n,k}(omega) of balanced densities in lexicographic order.
std::vector<ColourDensity> enumerate_balanced_densities(int n, int k, double omega);

/// ln E[Z_{k,omega}] = ln of first_moment_exact summed over balanced densities.
double balanced_first_moment_log(const ModelParams& p, double omega);

/// |B| k^{k/2} (2 pi n)^{-(k-1)/2} (1 + d/(k-1))^{(k-1)/2}
double balanced_ratio_asymptotic(double d, int k, int n, double omega);

// ---- second moment ---------------------------------------------------------

/// Number of pairs forbidden for (sigma, tau) with the given overlap counts.
std::int64_t forbidden_pairs(const OverlapCounts& c);

/// ln E[Z^{(2)}_{k,rho}] = ln[ multinomial(n; counts) ((N - F)/N)^m ].
double second_moment_exact_log(const ModelParams& p, const OverlapCounts& c);
Rational second_moment_exact_rational(const ModelParams& p, const OverlapCounts& c);

/// E[Z_k^2] as the sum over all k x k count matrices.
Rational second_moment_total_rational(const ModelParams& p);

/// f(rho) = H(rho) + (d/2) ln(1 - 2/k + ||rho||^2)
double f_overlap(const OverlapMatrix& rho, double d, int k);
double second_prefactor(double d, int k, double n);  ///< C_n = e^{d/2} k^{k^2} (2 pi n)^{(1-k^2)/2}
double second_curvature(double d, int k);            ///< D = k^2 (1 - d/(k-1)^2)

// ---- thresholds ------------------------------------------------------------

/// Root in d of alpha(d, k) = 0, by bracketed root finding to 1e-10.
double first_moment_threshold(int k);

/// ((2k-1) ln k - 2 ln 2, (2k-1) ln k - 1): the leading terms of the known
/// bounds around the colourability and condensation thresholds.
std::pair<double, double> cond_bound_display(int k);

/// Calls fn for every vector of k non-negative integers summing to n, in
/// lexicographic order.
template <class Fn>
void for_each_composition(int n, int k, Fn&& fn) {
  if (k <= 0 || n < 0) return;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos == k - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      fn(static_cast<const std::vector<std::int64_t>&>(cur));
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
}

}  // namespace colourlab
