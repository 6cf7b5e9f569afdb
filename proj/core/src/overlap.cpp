#include "colourlab/overlap.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "colourlab/errors.hpp"
#include "colourlab/moments.hpp"
#include "colourlab/random.hpp"

namespace colourlab {

namespace {

constexpr double kFloor = 1e-12;

double f_raw(const std::vector<double>& x, double d, int k) {
  double h = 0.0, sq = 0.0;
  for (const double v : x) {
    if (v > 0.0) h -= v * std::log(v);
    sq += v * v;
  }
  const double arg = 1.0 - 2.0 / k + sq;
  if (!(arg > 0.0)) return -std::numeric_limits<double>::infinity();
  return h + d / 2.0 * std::log(arg);
}

void projected_gradient(const std::vector<double>& x, double d, int k, OverlapDomain domain,
                        std::vector<double>& g) {
  double sq = 0.0;
  for (const double v : x) sq += v * v;
  const double arg = 1.0 - 2.0 / k + sq;
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = -std::log(x[i]) - 1.0 + d * x[i] / arg;

  const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
  if (domain == OverlapDomain::simplex) {
    for (auto& v : g) v -= mean;
    return;
  }
  std::vector<double> row(static_cast<std::size_t>(k), 0.0), col(static_cast<std::size_t>(k), 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      row[i] += g[static_cast<std::size_t>(i) * k + j] / k;
      col[j] += g[static_cast<std::size_t>(i) * k + j] / k;
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g[static_cast<std::size_t>(i) * k + j] += mean - row[i] - col[j];
}

bool in_domain(const OverlapMatrix& m, OverlapDomain domain) {
  return domain == OverlapDomain::simplex || m.exactly_balanced(1e-9);
}

std::vector<double> dirichlet_start(int k, Rng& rng) {
  std::vector<double> x(static_cast<std::size_t>(k) * k);
  for (auto& v : x) v = rng.exponential();
  const double s = std::accumulate(x.begin(), x.end(), 0.0);
  for (auto& v : x) v /= s;
  return x;
}

// Random convex combination of k^2 permutation matrices (scaled by 1/k),
// pulled 1% towards the barycentre so the start is interior.
std::vector<double> birkhoff_start(int k, Rng& rng) {
  const std::size_t kk = static_cast<std::size_t>(k) * k;
  std::vector<double> x(kk, 0.0);
  std::vector<double> w(kk);
  for (auto& v : w) v = rng.exponential();
  const double ws = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (std::size_t t = 0; t < kk; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = k - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i) * k + perm[i]] += w[t] / ws / k;
  }
  const double bary = 1.0 / static_cast<double>(kk);
  for (auto& v : x) v = 0.99 * v + 0.01 * bary;
  return x;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::fabs(a[i] - b[i]));
  return out;
}

}  // namespace

nlohmann::json MaximizeResult::to_json() const {
  return nlohmann::json{{"value", value},
                        {"argmax", argmax.entries},
                        {"n_starts", n_starts},
                        {"n_distinct_local_maxima", local_maxima.size()},
                        {"converged", converged}};
}

LocalMaximum ascend_f(const OverlapMatrix& start, double d, int k, OverlapDomain domain,
                      const MaximizeOptions& options) {
  if (start.k != k) throw InvalidParameter("ascend_f: start must be k x k");
  if (!in_domain(start, domain)) throw InvalidParameter("ascend_f: start lies outside the domain");
  std::vector<double> x = start.entries;
  for (auto& v : x) v = std::max(v, kFloor);  // zero entries have an infinite entropy gradient
  std::vector<double> g(x.size()), trial(x.size());
  double fx = f_raw(x, d, k);
  double step = 1.0;
  bool converged = false;

  for (int it = 0; it < options.max_iterations; ++it) {
    projected_gradient(x, d, k, domain, g);
    double gmax = 0.0, gsq = 0.0;
    for (const double v : g) {
      gmax = std::max(gmax, std::fabs(v));
      gsq += v * v;
    }
    if (gmax < 1e-9) {
      converged = true;
      break;
    }
    double tmax = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (g[i] < 0.0) tmax = std::min(tmax, (x[i] - kFloor) / -g[i]);
    double t = std::min(step * 2.0, tmax);
    bool moved = false;
    while (t > 1e-20) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = std::max(x[i] + t * g[i], kFloor);
      const double ft = f_raw(trial, d, k);
      if (ft >= fx + 1e-4 * t * gsq) {
        const double gain = ft - fx;
        x.swap(trial);
        fx = ft;
        step = t;
        moved = true;
        if (gain <= 1e-16 * std::max(1.0, std::fabs(fx)) && gmax < 1e-6) converged = true;
        break;
      }
      t /= 2.0;
    }
    if (!moved) {
      // no representable ascent step left: accept as stationary if the gradient is small
      converged = gmax < 1e-6;
      break;
    }
    if (converged) break;
  }
  // re-normalize away the rounding drift accumulated over many steps
  const double s = std::accumulate(x.begin(), x.end(), 0.0);
  for (auto& v : x) v /= s;
  LocalMaximum out;
  out.argmax = OverlapMatrix(k, x);
  out.value = f_raw(x, d, k);
  out.converged = converged;
  return out;
}

MaximizeResult maximize_f(double d, int k, OverlapDomain domain, const MaximizeOptions& options) {
  if (k < 2) throw InvalidParameter("maximize_f: k must be at least 2");
  if (options.starts < 1) throw InvalidParameter("maximize_f: need at least one start");
  if (!(d >= 0.0)) throw InvalidParameter("maximize_f: d must be non-negative");
  const RandomSource base{options.seed, 0x6f766c70};
  std::vector<LocalMaximum> runs;
  runs.reserve(static_cast<std::size_t>(options.starts));
  for (int s = 0; s < options.starts; ++s) {
    Rng rng(base.child(static_cast<std::uint64_t>(s)));
    auto x = domain == OverlapDomain::simplex ? dirichlet_start(k, rng) : birkhoff_start(k, rng);
    runs.push_back(ascend_f(OverlapMatrix(k, std::move(x)), d, k, domain, options));
  }
  // the barycentre lies in both domains, so every report includes it
  runs.push_back(ascend_f(OverlapMatrix::barycentre(k), d, k, domain, options));

  std::sort(runs.begin(), runs.end(), [](const LocalMaximum& a, const LocalMaximum& b) {
    if (a.value != b.value) return a.value > b.value;
    return lex_less(a.argmax.entries, b.argmax.entries);
  });

  MaximizeResult out;
  out.n_starts = options.starts;
  out.argmax = runs.front().argmax;
  out.value = runs.front().value;
  out.converged = std::all_of(runs.begin(), runs.end(), [](const LocalMaximum& r) { return r.converged; });
  const double floor_value = f_overlap(OverlapMatrix::barycentre(k), d, k) - options.tol;
  for (const auto& r : runs) {
    if (r.value < floor_value) continue;
    const bool seen = std::any_of(out.local_maxima.begin(), out.local_maxima.end(), [&](const LocalMaximum& q) {
      return max_abs_diff(q.argmax.entries, r.argmax.entries) < 1e-5;
    });
    if (!seen) out.local_maxima.push_back(r);
  }
  return out;
}

double an_constant(double d, int k) {
  if (k < 3) throw InvalidParameter("an_constant: k must be at least 3");
  const double km1 = k - 1.0;
  return (2.0 * km1 * std::log(km1) - d) / (4.0 * km1 * km1);
}

double achlioptas_naor_gap(const OverlapMatrix& rho, double d, int k) {
  if (rho.k != k) throw InvalidParameter("achlioptas_naor_gap: matrix must be k x k");
  if (!rho.exactly_balanced(1e-12))
    throw DomainError("achlioptas_naor_gap: rows and columns must sum to exactly 1/k");
  const double kk = static_cast<double>(k) * k;
  return f_overlap(OverlapMatrix::barycentre(k), d, k) - f_overlap(rho, d, k) -
         an_constant(d, k) * (kk * rho.squared_norm() - 1.0);
}

double separability_kappa(int k) {
  if (k < 2) throw InvalidParameter("separability_kappa: k must be at least 2");
  return std::pow(std::log(static_cast<double>(k)), 20) / k;
}

StabilityClass classify_stability(const OverlapMatrix& rho, int k) {
  return classify_stability(rho, k, separability_kappa(k));
}

StabilityClass classify_stability(const OverlapMatrix& rho, int k, double kappa) {
  if (rho.k != k) throw InvalidParameter("classify_stability: matrix must be k x k");
  StabilityClass out;
  for (const double v : rho.entries) {
    const double x = k * v;
    if (x > 0.51 && v <= 1.0) ++out.s;
    if (x > 0.51 && x < 1.0 - kappa) out.separable = false;
  }
  return out;
}

Eigen::MatrixXd hessian_H(int k) {
  if (k < 2) throw InvalidParameter("hessian_H: k must be at least 2");
  const int f = k - 1;
  const int p = f * f;
  // L maps free coordinates eps_ij (i, j < k-1) to all k^2 entries.
  Eigen::MatrixXd lmap = Eigen::MatrixXd::Zero(k * k, p);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) {
      const int c = i * f + j;
      lmap(i * k + j, c) = 1.0;
      lmap(i * k + f, c) = -1.0;  // last column cancels the row
      lmap(f * k + j, c) = -1.0;  // last row cancels the column
      lmap(f * k + f, c) = 1.0;
    }
  return lmap.transpose() * lmap;
}

std::pair<double, double> det_check(int k) {
  const Eigen::MatrixXd h = hessian_H(k);
  return {h.determinant(), std::pow(static_cast<double>(k), 2.0 * (k - 1))};
}

std::vector<double> hessian_eigenvalues(int k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian_H(k), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Eigen::MatrixXd zero_sum_vector_form(int k) {
  if (k < 2) throw InvalidParameter("zero_sum_vector_form: k must be at least 2");
  return Eigen::MatrixXd::Identity(k - 1, k - 1) + Eigen::MatrixXd::Ones(k - 1, k - 1);
}

LatticeSum gaussian_lattice_sum(const Eigen::MatrixXd& q, int n, double scale, double cutoff,
                                std::int64_t max_points) {
  const auto p = static_cast<int>(q.rows());
  if (p < 1 || q.cols() != p) throw InvalidParameter("lattice sum: Q must be square and non-empty");
  if (n < 1 || !(scale > 0.0) || !(cutoff > 0.0))
    throw InvalidParameter("lattice sum: need n >= 1, scale > 0, cutoff > 0");
  Eigen::LLT<Eigen::MatrixXd> llt(q);
  if (llt.info() != Eigen::Success) throw DomainError("lattice sum: Q must be positive definite");
  const Eigen::MatrixXd qinv = llt.solve(Eigen::MatrixXd::Identity(p, p));
  const double det = llt.matrixL().determinant();  // sqrt(det Q)

  std::vector<std::int64_t> bound(static_cast<std::size_t>(p));
  double total_points = 1.0;
  for (int i = 0; i < p; ++i) {
    bound[i] = static_cast<std::int64_t>(std::floor(cutoff * std::sqrt(n * qinv(i, i) / scale)));
    total_points *= 2.0 * static_cast<double>(bound[i]) + 1.0;
  }
  if (total_points > static_cast<double>(max_points))
    throw ResourceLimit("lattice sum: box has too many points");

  LatticeSum out;
  const double coef = scale / (2.0 * n);
  std::vector<std::int64_t> j(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) j[i] = -bound[i];
  Eigen::VectorXd v(p);
  for (;;) {
    for (int i = 0; i < p; ++i) v(i) = static_cast<double>(j[i]);
    out.sum += std::exp(-coef * v.dot(q * v));
    ++out.points;
    int i = 0;
    while (i < p && j[i] == bound[i]) {
      j[i] = -bound[i];
      ++i;
    }
    if (i == p) break;
    ++j[i];
  }
  out.asymptotic = std::pow(2.0 * std::numbers::pi * n / scale, p / 2.0) / det;
  out.tail_bound = out.asymptotic * boost::math::gamma_q(p / 2.0, cutoff * cutoff / 2.0);
  out.cutoff_warning = out.tail_bound > 1e-6 * out.sum;
  return out;
}

}  // namespace colourlab
