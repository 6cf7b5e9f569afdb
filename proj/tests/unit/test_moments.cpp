#include <doctest.h>

#include <cmath>

#include "colourlab/errors.hpp"
#include "colourlab/moments.hpp"
#include "colourlab/overlap_matrix.hpp"
#include "oracles.hpp"

using namespace colourlab;
using doctest::Approx;

namespace {

ModelParams mp(int n, std::int64_t m, int k) { return ModelParams::from_edges(n, m, k); }

// Exact E[Z_k] over uniform simple m-edge graphs on [n].
Rational simple_model_first_moment(int n, int m, int k) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  BigInt sum = 0, graphs = 0;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) e.push_back(all[i]);
    sum += oracle::brute_count(Graph(n, e, true), k);
    ++graphs;
  }
  return Rational(sum, graphs);
}

std::vector<double> random_zero_sum_unit(int size, Rng& rng) {
  std::vector<double> u(static_cast<std::size_t>(size));
  double mean = 0;
  for (auto& x : u) mean += (x = rng.normal());
  mean /= size;
  double norm = 0;
  for (auto& x : u) norm += (x -= mean) * x;
  for (auto& x : u) x /= std::sqrt(norm);
  return u;
}

}  // namespace

TEST_SUITE("moment-engine") {

TEST_CASE("model parameters use the ceiling convention") {
  CHECK(ModelParams::from_degree(999, 2.0, 3).m == 999);
  CHECK(ModelParams::from_degree(5, 1.0, 3).m == 3);
  CHECK(ModelParams::from_degree(60, 1.0, 3).m == 30);
  CHECK(edges_for_degree(10, 0.3) == 2);
  CHECK(ModelParams::from_edges(10, 5, 3).d == 1.0);
}

TEST_CASE("lambda, delta, mu") {
  CHECK(lambda(2, 4) == Approx(4));
  CHECK(lambda(3, 4) == Approx(32.0 / 3));
  CHECK(delta(2, 3) == Approx(0.5));
  CHECK(delta(3, 3) == Approx(-0.25));
  CHECK(mu(2, 4, 3) == Approx(6));
  for (int l = 2; l < 12; ++l) {
    CHECK(delta(l, 3) >= -1.0);
    CHECK(mu(l, 1.7, 4) == Approx(lambda(l, 1.7) * (1 + delta(l, 4))));
  }
  CHECK(delta(2, 2) == Approx(1.0));
  CHECK(delta(3, 2) == Approx(-1.0));
}

TEST_CASE("ssc series examples") {
  const auto s = ssc_series(2, 3);
  CHECK(s.value == Approx(0.3862944).epsilon(1e-7));
  CHECK(std::exp(s.value) == Approx(4.0 / std::exp(1.0)).epsilon(1e-12));
  CHECK(std::fabs(s.series - s.value) < 1e-10);
  CHECK(ssc_series(0, 3).value == 0.0);
  CHECK(ssc_series(1e-9, 3).value == Approx(0).epsilon(1e-12));
  const auto k4 = ssc_series(2, 4);
  CHECK(k4.value == Approx(4.5 * (-std::log(7.0 / 9) - 2.0 / 9)).epsilon(1e-12));
  CHECK(k4.value == Approx(0.1305).epsilon(1e-3));
  CHECK(std::fabs(k4.series - k4.value) <= 1e-10);
  CHECK_THROWS_AS(ssc_series(4, 3), DomainError);
}

TEST_CASE("ssc series against the closed form over a (k, d) grid") {
  // Independent summation here, in plain doubles.
  for (int k = 3; k <= 8; ++k) {
    const double q = (k - 1.0) * (k - 1.0);
    for (double frac : {0.01, 0.2, 0.5, 0.8, 0.95}) {
      const double d = frac * q;
      double sum = 0;
      for (int l = 2; l < 5000; ++l) sum += std::pow(d / q, l) * q / (2.0 * l);
      CHECK(std::fabs(ssc_series(d, k).value - sum) < 1e-10);
      CHECK(std::fabs(ssc_series(d, k).series - ssc_closed_form(d, k)) < 1e-10);
    }
  }
}

TEST_CASE("conditioned ratio") {
  CHECK(conditioned_ratio({0}, 4, 3) == Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(conditioned_ratio({1}, 4, 3) == Approx(0.2030029).epsilon(1e-6));
  CHECK(conditioned_ratio({}, 4, 3) == 1.0);
  CHECK(conditioned_ratio({0, 0, 0}, 1, 1000000) == Approx(1.0).epsilon(1e-6));
  // Product identity with all zeros.
  for (int L = 2; L <= 8; ++L) {
    double s = 0;
    for (int l = 2; l <= L; ++l) s += delta(l, 3) * lambda(l, 1.3);
    CHECK(conditioned_ratio(std::vector<std::int64_t>(static_cast<std::size_t>(L - 1), 0), 1.3, 3) ==
          Approx(std::exp(-s)).epsilon(1e-12));
  }
  // 1 + delta_3 = 0 at k = 2 with x_3 > 0.
  CHECK(conditioned_ratio({0, 1}, 1, 2) == 0.0);
}

TEST_CASE("alpha, g, B, c_n") {
  CHECK(alpha(2, 3) == Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(first_curvature(2, 3) == Approx(6));
  CHECK(first_prefactor(2, 3, 10) == Approx(std::pow(2 * M_PI * 10, -1.0) * std::pow(3, 1.5)));
  Rng rng(RandomSource{1, 0});
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + static_cast<int>(rng.below(8));
    const double d = 5 * rng.uniform01();
    CHECK(g_density(std::vector<double>(static_cast<std::size_t>(k), 1.0 / k), d, k) ==
          Approx(alpha(d, k)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(g_density({1.0, 0.0, 0.0}, 1, 3), DomainError);
}

TEST_CASE("curvature of g and f by finite differences") {
  Rng rng(RandomSource{2, 0});
  const double h = 1e-4;
  for (int k = 3; k <= 6; ++k)
    for (double d : {0.5, 2.0, 3.5}) {
      const std::vector<double> bary(static_cast<std::size_t>(k), 1.0 / k);
      for (int t = 0; t < 5; ++t) {
        const auto u = random_zero_sum_unit(k, rng);
        std::vector<double> p = bary, m = bary;
        for (int i = 0; i < k; ++i) {
          p[i] += h * u[i];
          m[i] -= h * u[i];
        }
        const double second = (g_density(p, d, k) + g_density(m, d, k) - 2 * g_density(bary, d, k)) / (h * h);
        CHECK(std::fabs(second + first_curvature(d, k)) < 1e-4 * std::max(1.0, first_curvature(d, k)));

        // Doubly zero-sum direction for f: project a Gaussian matrix.
        std::vector<double> e(static_cast<std::size_t>(k * k));
        for (auto& x : e) x = rng.normal();
        std::vector<double> r(k, 0), c(k, 0);
        double all = 0;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            r[i] += e[i * k + j];
            c[j] += e[i * k + j];
            all += e[i * k + j];
          }
        double norm = 0;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) norm += std::pow(e[i * k + j] -= r[i] / k + c[j] / k - all / (k * k), 2);
        for (auto& x : e) x /= std::sqrt(norm);
        auto fp = OverlapMatrix::barycentre(k), fm = fp;
        for (int i = 0; i < k * k; ++i) {
          fp.entries[i] += h * e[i];
          fm.entries[i] -= h * e[i];
        }
        const double f0 = f_overlap(OverlapMatrix::barycentre(k), d, k);
        const double sf = (f_overlap(fp, d, k) + f_overlap(fm, d, k) - 2 * f0) / (h * h);
        CHECK(std::fabs(sf + second_curvature(d, k)) < 1e-4 * std::max(1.0, second_curvature(d, k)));
      }
    }
}

TEST_CASE("exact first moment examples") {
  CHECK(std::exp(first_moment_exact_log(mp(2, 1, 2), {1, 1})) == Approx(2));
  CHECK(first_moment_exact_rational(mp(2, 1, 2), {1, 1}) == 2);
  CHECK(first_moment_exact_rational(mp(3, 1, 3), {1, 1, 1}) == 6);
  CHECK(first_moment_exact_rational(mp(6, 0, 3), {1, 2, 3}) == 60);
  CHECK(first_moment_total_rational(mp(2, 1, 2)) == 2);
  CHECK_THROWS_AS(first_moment_exact_log(mp(4, 1, 2), {1, 2}), InvalidParameter);
  CHECK_THROWS_AS(first_moment_exact_log(mp(4, 1, 2), {1, 1, 2}), InvalidParameter);
}

TEST_CASE("exact moments equal exhaustive expectations over all multigraph sequences") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int k = 2; k <= 3; ++k) {
        const auto ex = oracle::exhaustive_moments(n, m, k);
        CHECK(first_moment_total_rational(mp(n, m, k)) == ex.first);
        CHECK(second_moment_total_rational(mp(n, m, k)) == ex.second);
        CHECK(std::exp(first_moment_total_log(mp(n, m, k))) ==
              Approx(static_cast<double>(ex.first)).epsilon(1e-12));
      }
}

TEST_CASE("simple-model first moment against enumeration of simple graphs") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 0; m <= pair_count(n); m += 2)
      for (int k = 2; k <= 3; ++k) {
        const double exact = static_cast<double>(simple_model_first_moment(n, m, k));
        const double got = first_moment_simple_total_log(mp(n, m, k));
        if (exact == 0)
          CHECK(std::isinf(got));
        else
          CHECK(std::exp(got) == Approx(exact).epsilon(1e-10));
      }
}

TEST_CASE("log and rational modes agree") {
  for (int n = 3; n <= 6; ++n)
    for (int m = 0; m <= 5; ++m)
      for_each_composition(n, 3, [&](const std::vector<std::int64_t>& s) {
        const double r = static_cast<double>(first_moment_exact_rational(mp(n, m, 3), s));
        const double l = first_moment_exact_log(mp(n, m, 3), s);
        if (r == 0)
          CHECK(std::isinf(l));
        else
          CHECK(std::exp(l) == Approx(r).epsilon(1e-12));
      });
}

TEST_CASE("first moment asymptotics approach the exact total") {
  const double ratio = std::exp(first_moment_total_log(ModelParams::from_degree(1000, 2, 3)) -
                                first_moment_total_asymptotic_log(2, 3, 1000));
  CHECK(std::fabs(ratio - 1) < 0.05);
}

TEST_CASE("balanced densities") {
  CHECK(enumerate_balanced_densities(9, 3, 4.0).size() == 1);
  // The bound omega^-1 n^-1/2 = 1/2 is attained by (0, 1) and (1, 0); the
  // inequality is not strict, so they belong to B as well.
  const auto b = enumerate_balanced_densities(4, 2, 1.0);
  REQUIRE(b.size() == 5);
  CHECK(b[1].class_sizes == std::vector<std::int64_t>{1, 3});
  CHECK(b[2].class_sizes == std::vector<std::int64_t>{2, 2});
  CHECK(b[3].class_sizes == std::vector<std::int64_t>{3, 1});
  CHECK(enumerate_balanced_densities(4, 2, 1.01).size() == 3);
  // Agreement with brute force over all compositions.
  for (int n : {5, 12, 30})
    for (double w : {0.3, 1.0, 2.5}) {
      std::size_t c = 0;
      for_each_composition(n, 3, [&](const std::vector<std::int64_t>& s) { c += is_balanced_sizes(n, s, w) ? 1 : 0; });
      CHECK(enumerate_balanced_densities(n, 3, w).size() == c);
    }
}

TEST_CASE("balanced ratio formula") {
  const int n = 500, k = 3;
  const double d = 2, w = std::log(500.0);
  const double expect = static_cast<double>(enumerate_balanced_densities(n, k, w).size()) * std::pow(k, k / 2.0) *
                        std::pow(2 * M_PI * n, -(k - 1) / 2.0) * std::pow(1 + d / (k - 1), (k - 1) / 2.0);
  CHECK(balanced_ratio_asymptotic(d, k, n, w) == Approx(expect).epsilon(1e-12));
  // Balanced first moment is the restricted sum.
  const auto p = mp(12, 8, 3);
  LogSum s;
  for (const auto& b : enumerate_balanced_densities(12, 3, 1.0)) s.add(first_moment_exact_log(p, b.class_sizes));
  CHECK(balanced_first_moment_log(p, 1.0) == Approx(s.value()).epsilon(1e-12));
}

TEST_CASE("exact second moment examples") {
  CHECK(second_moment_exact_rational(mp(2, 1, 2), {2, {1, 0, 0, 1}}) == 2);
  CHECK(second_moment_exact_rational(mp(2, 1, 2), {2, {1, 1, 0, 0}}) == 0);
  CHECK(std::isinf(second_moment_exact_log(mp(2, 1, 2), {2, {1, 1, 0, 0}})));
  CHECK(second_moment_exact_rational(mp(4, 0, 2), {2, {1, 1, 1, 1}}) == 24);
  CHECK(forbidden_pairs({2, {1, 1, 0, 0}}) == 1);
}

TEST_CASE("f, C_n, D") {
  CHECK(f_overlap(OverlapMatrix::barycentre(3), 2, 3) == Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(second_curvature(2, 3) == Approx(4.5));
  CHECK(second_prefactor(2, 3, 10) ==
        Approx(std::exp(1.0) * std::pow(3.0, 9) * std::pow(2 * M_PI * 10, -4.0)).epsilon(1e-12));
  Rng rng(RandomSource{3, 0});
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + static_cast<int>(rng.below(7));
    const double d = 4 * rng.uniform01();
    CHECK(f_overlap(OverlapMatrix::barycentre(k), d, k) == Approx(2 * alpha(d, k)).epsilon(1e-12));
  }
}

TEST_CASE("first moment threshold and literature display") {
  const double t = first_moment_threshold(3);
  CHECK(std::fabs(alpha(t, 3)) < 1e-10);
  CHECK(t == Approx(2 * std::log(3.0) / std::log(1.5)).epsilon(1e-10));
  for (int k = 3; k <= 12; ++k) CHECK(std::fabs(alpha(first_moment_threshold(k), k)) < 1e-10);
  const auto [lo, hi] = cond_bound_display(10);
  CHECK(lo == Approx(19 * std::log(10.0) - 2 * std::log(2.0)));
  CHECK(hi == Approx(19 * std::log(10.0) - 1));
}

}  // TEST_SUITE
