#pragma once

#include <cstdint>
#include <vector>

namespace colourlab {

struct Summary {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased sample variance
  double se = 0.0;        ///< standard error of the mean
};

Summary summarize(const std::vector<double>& xs);

struct ChiSquare {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  int cells = 0;  ///< after pooling
};

/// Pearson goodness of fit of `observed` counts against `probabilities`
/// (which should sum to 1 over the same cells). Cells with expected count
/// below `min_expected` are pooled together, in order, into one cell.
ChiSquare chi_square_gof(const std::vector<double>& observed, const std::vector<double>& probabilities,
                         double min_expected = 5.0);

/// Kolmogorov-Smirnov distance sup |F_a - F_b| between two empirical CDFs.
double ks_distance(std::vector<double> a, std::vector<double> b);

/// Wasserstein-1 distance, the integral of |F_a - F_b|.
double wasserstein1(std::vector<double> a, std::vector<double> b);

double correlation(const std::vector<double>& x, const std::vector<double>& y);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
};

/// Ordinary least squares y = intercept + slope * x.
LinearFit ols(const std::vector<double>& x, const std::vector<double>& y);

/// Linear-interpolation quantile (type 7), q in [0, 1].
double quantile(std::vector<double> xs, double q);

double poisson_pmf(std::int64_t j, double mean);

}  // namespace colourlab
