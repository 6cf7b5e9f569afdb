#include "colourlab/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "colourlab/errors.hpp"

namespace colourlab {

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  s.count = static_cast<std::int64_t>(xs.size());
  if (xs.empty()) return s;
  // Welford
  double mean = 0.0, m2 = 0.0;
  std::int64_t i = 0;
  for (const double x : xs) {
    ++i;
    const double delta = x - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (x - mean);
  }
  s.mean = mean;
  if (s.count > 1) {
    s.variance = m2 / static_cast<double>(s.count - 1);
    s.se = std::sqrt(s.variance / static_cast<double>(s.count));
  }
  return s;
}

ChiSquare chi_square_gof(const std::vector<double>& observed, const std::vector<double>& probabilities,
                         double min_expected) {
  if (observed.size() != probabilities.size() || observed.empty())
    throw InvalidParameter("chi_square_gof: observed and probabilities must match and be non-empty");
  double total = 0.0;
  for (const double o : observed) total += o;
  if (!(total > 0.0)) throw InsufficientSamples("chi_square_gof: no observations");

  std::vector<double> obs, exp;
  double pool_o = 0.0, pool_e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = probabilities[i] * total;
    if (e < min_expected) {
      pool_o += observed[i];
      pool_e += e;
    } else {
      obs.push_back(observed[i]);
      exp.push_back(e);
    }
  }
  if (pool_e > 0.0 || pool_o > 0.0) {
    if (pool_e >= min_expected || exp.empty()) {
      obs.push_back(pool_o);
      exp.push_back(pool_e);
    } else {
      // too small to stand alone: fold into the smallest regular cell
      const auto j = static_cast<std::size_t>(std::min_element(exp.begin(), exp.end()) - exp.begin());
      obs[j] += pool_o;
      exp[j] += pool_e;
    }
  }

  ChiSquare out;
  out.cells = static_cast<int>(obs.size());
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (exp[i] <= 0.0) {
      if (obs[i] > 0.0) out.statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    out.statistic += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
  }
  out.df = out.cells - 1;
  if (out.df < 1) {
    out.p_value = 1.0;
    return out;
  }
  if (!std::isfinite(out.statistic)) {
    out.p_value = 0.0;
    return out;
  }
  const boost::math::chi_squared dist(out.df);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw InsufficientSamples("ks_distance: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double best = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    best = std::max(best, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return best;
}

double wasserstein1(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw InsufficientSamples("wasserstein1: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double x = std::min(a[0], b[0]);
  double out = 0.0;
  while (i < a.size() || j < b.size()) {
    double next;
    if (j == b.size() || (i < a.size() && a[i] <= b[j]))
      next = a[i];
    else
      next = b[j];
    out += std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb) * (next - x);
    x = next;
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
  }
  return out;
}

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InsufficientSamples("correlation: need two paired samples");
  const auto sx = summarize(x), sy = summarize(y);
  double cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) cov += (x[i] - sx.mean) * (y[i] - sy.mean);
  cov /= static_cast<double>(x.size() - 1);
  if (sx.variance <= 0.0 || sy.variance <= 0.0) return 0.0;
  return cov / std::sqrt(sx.variance * sy.variance);
}

LinearFit ols(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw InsufficientSamples("ols: need at least three points");
  const auto sx = summarize(x), sy = summarize(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - sx.mean) * (x[i] - sx.mean);
    sxy += (x[i] - sx.mean) * (y[i] - sy.mean);
  }
  if (sxx <= 0.0) throw InsufficientSamples("ols: x has no spread");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = sy.mean - f.slope * sx.mean;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    rss += r * r;
  }
  f.slope_se = std::sqrt(rss / static_cast<double>(x.size() - 2) / sxx);
  return f;
}

double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) throw InsufficientSamples("quantile: empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidParameter("quantile: q must lie in [0, 1]");
  std::sort(xs.begin(), xs.end());
  const double h = q * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (h - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

double poisson_pmf(std::int64_t j, double mean) {
  if (j < 0) return 0.0;
  if (mean == 0.0) return j == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(j) * std::log(mean) - mean - std::lgamma(static_cast<double>(j) + 1.0));
}

}  // namespace colourlab
