#include "colourlab/moments.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "colourlab/errors.hpp"

namespace colourlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_k(int k) {
  if (k < 2) throw InvalidParameter("k must be at least 2");
}

Rational rational_pow(const Rational& base, std::int64_t e) {
  Rational out = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

std::int64_t sum_of(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (const auto x : v) {
    if (x < 0) throw InvalidParameter("class sizes must be non-negative");
    s += x;
  }
  return s;
}

double log_multinomial(const std::vector<std::int64_t>& parts, const std::vector<double>& lf) {
  std::int64_t total = 0;
  double out = 0.0;
  for (const auto p : parts) {
    out -= lf[static_cast<std::size_t>(p)];
    total += p;
  }
  return out + lf[static_cast<std::size_t>(total)];
}

void check_sizes(const ModelParams& p, const std::vector<std::int64_t>& sizes, std::size_t expected) {
  if (sizes.size() != expected) throw InvalidParameter("wrong number of class sizes");
  if (sum_of(sizes) != p.n) throw InvalidParameter("class sizes must sum to n");
  if (p.m > 0 && p.n < 2) throw InvalidParameter("a multigraph with edges needs n >= 2");
}

std::int64_t forb_of(const std::vector<std::int64_t>& sizes) {
  std::int64_t f = 0;
  for (const auto s : sizes) f += pairs(s);
  return f;
}

// ln E over the multigraph model given the log multinomial and Forb.
double multigraph_log_term(double log_mult, std::int64_t forb, const ModelParams& p) {
  if (p.m == 0) return log_mult;
  const auto big_n = p.pairs();
  if (forb >= big_n) return kNegInf;
  return log_mult + static_cast<double>(p.m) *
                        std::log1p(-static_cast<double>(forb) / static_cast<double>(big_n));
}

// Visits every balanced class-size vector, scanning only the window each
// coordinate can occupy.
template <class Fn>
void for_each_balanced(int n, int k, double omega, Fn&& fn) {
  if (!(omega > 0.0)) throw InvalidParameter("omega must be positive");
  const double width = static_cast<double>(k) * n * (1.0 + 1e-12) / (omega * std::sqrt(static_cast<double>(n)));
  const auto lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor((n - width) / k)) - 1);
  const auto hi = std::min<std::int64_t>(n, static_cast<std::int64_t>(std::ceil((n + width) / k)) + 1);
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos == k - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      if (left >= lo && left <= hi && is_balanced_sizes(n, cur, omega))
        fn(static_cast<const std::vector<std::int64_t>&>(cur));
      return;
    }
    for (std::int64_t v = lo; v <= std::min(hi, left); ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
}

}  // namespace

std::int64_t edges_for_degree(int n, double d) {
  if (!(d >= 0.0) || n < 0) throw InvalidParameter("edges_for_degree: need n >= 0 and d >= 0");
  const double x = d * n / 2.0;
  const double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, x)) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

ModelParams ModelParams::from_degree(int n, double d, int k) {
  check_k(k);
  if (n < 1) throw InvalidParameter("n must be positive");
  if (!(d > 0.0)) throw InvalidParameter("d must be positive");
  return ModelParams{n, edges_for_degree(n, d), k, d};
}

ModelParams ModelParams::from_edges(int n, std::int64_t m, int k) {
  check_k(k);
  if (n < 1) throw InvalidParameter("n must be positive");
  if (m < 0) throw InvalidParameter("m must be non-negative");
  return ModelParams{n, m, k, 2.0 * static_cast<double>(m) / n};
}

double lambda(int l, double d) {
  if (l < 2) throw InvalidParameter("lambda: l must be at least 2");
  return std::pow(d, l) / (2.0 * l);
}

double delta(int l, int k) {
  if (l < 2) throw InvalidParameter("delta: l must be at least 2");
  check_k(k);
  const double mag = std::pow(static_cast<double>(k - 1), -(l - 1));
  return (l % 2 == 0) ? mag : -mag;
}

double mu(int l, double d, int k) { return lambda(l, d) * (1.0 + delta(l, k)); }

double ssc_closed_form(double d, int k) {
  check_k(k);
  const double q = static_cast<double>(k - 1) * (k - 1);
  if (!(d < q)) throw DomainError("sum of lambda_l delta_l^2 diverges for d >= (k-1)^2");
  if (d < 0.0) throw InvalidParameter("d must be non-negative");
  const double x = d / q;
  return q / 2.0 * (-std::log1p(-x) - x);
}

SscSeries ssc_series(double d, int k, double tol) {
  SscSeries out;
  out.value = ssc_closed_form(d, k);
  if (d == 0.0) {
    out.terms = 2;
    return out;
  }
  const double q = static_cast<double>(k - 1) * (k - 1);
  const double lx = std::log(d / q);
  // lambda_l delta_l^2 = (q / (2l)) x^l
  const double stop = tol * 1e-2;
  for (int l = 2; l < 100000000; ++l) {
    const double term = std::exp(std::log(q / (2.0 * l)) + l * lx);
    out.series += term;
    out.terms = l;
    const double next = std::exp(std::log(q / (2.0 * (l + 1))) + (l + 1) * lx);
    if (next < stop) break;
  }
  return out;
}

double conditioned_ratio(const std::vector<std::int64_t>& x, double d, int k) {
  double log_out = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int l = static_cast<int>(i) + 2;
    if (x[i] < 0) throw InvalidParameter("conditioned_ratio: cycle counts must be non-negative");
    const double dl = delta(l, k);
    if (x[i] > 0) {
      if (1.0 + dl == 0.0) return 0.0;
      log_out += static_cast<double>(x[i]) * std::log1p(dl);
    }
    log_out -= dl * lambda(l, d);
  }
  return std::exp(log_out);
}

double entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (const double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

double alpha(double d, int k) {
  check_k(k);
  return std::log(static_cast<double>(k)) + d / 2.0 * std::log1p(-1.0 / k);
}

double g_density(const std::vector<double>& rho, double d, int k) {
  check_k(k);
  if (rho.size() != static_cast<std::size_t>(k)) throw InvalidParameter("g: density must have k entries");
  double s = 0.0, sq = 0.0;
  for (const double x : rho) {
    if (!(x >= 0.0)) throw InvalidParameter("g: density entries must be non-negative");
    s += x;
    sq += x * x;
  }
  if (std::fabs(s - 1.0) > 1e-9) throw InvalidParameter("g: density must sum to 1");
  if (sq >= 1.0) throw DomainError("g: sum of squares must be below 1");
  return entropy(rho) + d / 2.0 * std::log1p(-sq);
}

double first_prefactor(double /*d*/, int k, double n) {
  check_k(k);
  return std::pow(2.0 * std::numbers::pi * n, (1.0 - k) / 2.0) * std::pow(static_cast<double>(k), k / 2.0);
}

double first_curvature(double d, int k) {
  check_k(k);
  return k * (1.0 + d / (k - 1));
}

double first_moment_exact_log(const ModelParams& p, const std::vector<std::int64_t>& class_sizes) {
  check_sizes(p, class_sizes, static_cast<std::size_t>(p.k));
  const auto lf = log_factorials(static_cast<std::size_t>(p.n));
  return multigraph_log_term(log_multinomial(class_sizes, lf), forb_of(class_sizes), p);
}

Rational first_moment_exact_rational(const ModelParams& p, const std::vector<std::int64_t>& class_sizes) {
  check_sizes(p, class_sizes, static_cast<std::size_t>(p.k));
  Rational out = Rational(multinomial(class_sizes));
  if (p.m == 0) return out;
  const auto big_n = p.pairs();
  return out * rational_pow(Rational(big_n - forb_of(class_sizes), big_n), p.m);
}

double first_moment_total_log(const ModelParams& p) {
  if (p.m > 0 && p.n < 2) throw InvalidParameter("a multigraph with edges needs n >= 2");
  const auto lf = log_factorials(static_cast<std::size_t>(p.n));
  LogSum acc;
  for_each_composition(p.n, p.k, [&](const std::vector<std::int64_t>& s) {
    acc.add(multigraph_log_term(log_multinomial(s, lf), forb_of(s), p));
  });
  return acc.value();
}

Rational first_moment_total_rational(const ModelParams& p) {
  Rational acc = 0;
  for_each_composition(p.n, p.k, [&](const std::vector<std::int64_t>& s) {
    acc += first_moment_exact_rational(p, s);
  });
  return acc;
}

double first_moment_total_asymptotic_log(double d, int k, int n) {
  check_k(k);
  return d / 2.0 + n * alpha(d, k) - (k - 1) / 2.0 * std::log1p(d / (k - 1));
}

double first_moment_simple_total_log(const ModelParams& p) {
  const auto big_n = p.pairs();
  if (p.m > big_n) throw InvalidParameter("simple model: m exceeds C(n,2)");
  const auto lf = log_factorials(static_cast<std::size_t>(p.n));
  const auto log_binom = [](double a, double b) {
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
  };
  const double denom = log_binom(static_cast<double>(big_n), static_cast<double>(p.m));
  LogSum acc;
  for_each_composition(p.n, p.k, [&](const std::vector<std::int64_t>& s) {
    const auto free_pairs = big_n - forb_of(s);
    if (free_pairs < p.m) return;
    acc.add(log_multinomial(s, lf) + log_binom(static_cast<double>(free_pairs), static_cast<double>(p.m)) - denom);
  });
  return acc.value();
}

std::vector<ColourDensity> enumerate_balanced_densities(int n, int k, double omega) {
  check_k(k);
  if (n < 1) throw InvalidParameter("n must be positive");
  std::vector<ColourDensity> out;
  for_each_balanced(n, k, omega, [&](const std::vector<std::int64_t>& s) {
    out.push_back(ColourDensity::from_sizes(s));
  });
  return out;
}

double balanced_first_moment_log(const ModelParams& p, double omega) {
  const auto lf = log_factorials(static_cast<std::size_t>(p.n));
  LogSum acc;
  for_each_balanced(p.n, p.k, omega, [&](const std::vector<std::int64_t>& s) {
    acc.add(multigraph_log_term(log_multinomial(s, lf), forb_of(s), p));
  });
  return acc.value();
}

double balanced_ratio_asymptotic(double d, int k, int n, double omega) {
  check_k(k);
  std::int64_t count = 0;
  for_each_balanced(n, k, omega, [&](const std::vector<std::int64_t>&) { ++count; });
  return static_cast<double>(count) * std::pow(static_cast<double>(k), k / 2.0) *
         std::pow(2.0 * std::numbers::pi * n, -(k - 1) / 2.0) * std::pow(1.0 + d / (k - 1), (k - 1) / 2.0);
}

std::int64_t forbidden_pairs(const OverlapCounts& c) {
  std::int64_t f = 0;
  for (int i = 0; i < c.k; ++i) f += pairs(c.row_sum(i)) + pairs(c.col_sum(i));
  for (const auto x : c.counts) f -= pairs(x);
  return f;
}

namespace {
void check_counts(const ModelParams& p, const OverlapCounts& c) {
  if (c.k != p.k || c.counts.size() != static_cast<std::size_t>(p.k) * p.k)
    throw InvalidParameter("overlap counts must be k x k");
  if (sum_of(c.counts) != p.n) throw InvalidParameter("overlap counts must sum to n");
  if (p.m > 0 && p.n < 2) throw InvalidParameter("a multigraph with edges needs n >= 2");
}
}  // namespace

double second_moment_exact_log(const ModelParams& p, const OverlapCounts& c) {
  check_counts(p, c);
  const auto lf = log_factorials(static_cast<std::size_t>(p.n));
  return multigraph_log_term(log_multinomial(c.counts, lf), forbidden_pairs(c), p);
}

Rational second_moment_exact_rational(const ModelParams& p, const OverlapCounts& c) {
  check_counts(p, c);
  Rational out = Rational(multinomial(c.counts));
  if (p.m == 0) return out;
  const auto big_n = p.pairs();
  return out * rational_pow(Rational(big_n - forbidden_pairs(c), big_n), p.m);
}

Rational second_moment_total_rational(const ModelParams& p) {
  Rational acc = 0;
  OverlapCounts c;
  c.k = p.k;
  for_each_composition(p.n, p.k * p.k, [&](const std::vector<std::int64_t>& s) {
    c.counts = s;
    acc += second_moment_exact_rational(p, c);
  });
  return acc;
}

double f_overlap(const OverlapMatrix& rho, double d, int k) {
  check_k(k);
  if (rho.k != k) throw InvalidParameter("f: overlap matrix must be k x k");
  const double arg = 1.0 - 2.0 / k + rho.squared_norm();
  if (!(arg > 0.0)) throw DomainError("f: logarithm argument must be positive");
  return entropy(rho.entries) + d / 2.0 * std::log(arg);
}

double second_prefactor(double d, int k, double n) {
  check_k(k);
  const double kk = static_cast<double>(k) * k;
  return std::exp(d / 2.0 + kk * std::log(static_cast<double>(k)) +
                  (1.0 - kk) / 2.0 * std::log(2.0 * std::numbers::pi * n));
}

double second_curvature(double d, int k) {
  check_k(k);
  const double q = static_cast<double>(k - 1) * (k - 1);
  return static_cast<double>(k) * k * (1.0 - d / q);
}

double first_moment_threshold(int k) {
  check_k(k);
  const auto fn = [k](double d) { return alpha(d, k); };
  double hi = 1.0;
  while (fn(hi) > 0.0) hi *= 2.0;
  std::uintmax_t iters = 200;
  const auto tol = [](double a, double b) { return std::fabs(a - b) <= 1e-12; };
  const auto [a, b] = boost::math::tools::toms748_solve(fn, 0.0, hi, fn(0.0), fn(hi), tol, iters);
  return (a + b) / 2.0;
}

std::pair<double, double> cond_bound_display(int k) {
  check_k(k);
  const double base = (2.0 * k - 1.0) * std::log(static_cast<double>(k));
  return {base - 2.0 * std::log(2.0), base - 1.0};
}

}  // namespace colourlab
