#include <doctest.h>

#include <map>
#include <sstream>

#include "colourlab/colouring.hpp"
#include "colourlab/errors.hpp"
#include "colourlab/models.hpp"
#include "colourlab/stats.hpp"
#include "oracles.hpp"

using namespace colourlab;

namespace {

Colouring col(int k, std::initializer_list<int> one_indexed) {
  std::vector<int> c;
  for (int x : one_indexed) c.push_back(x - 1);
  return Colouring(k, c);
}

const Graph kTriangle = oracle::make_graph(3, {{1, 2}, {2, 3}, {1, 3}});
const Graph kC4 = oracle::make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});

}  // namespace

TEST_SUITE("colouring-core") {

TEST_CASE("is_proper") {
  CHECK(is_proper(kTriangle, col(3, {1, 2, 3})));
  CHECK_FALSE(is_proper(kTriangle, col(3, {1, 1, 2})));
  CHECK(is_proper(oracle::make_graph(3, {{1, 2}, {2, 3}}), col(2, {1, 2, 1})));
  CHECK_THROWS_AS(is_proper(kTriangle, col(3, {1, 2})), InvalidParameter);
  CHECK_THROWS_AS(col(2, {1, 3}), InvalidParameter);
}

TEST_CASE("forb") {
  CHECK(forb(col(2, {1, 1, 2, 2})) == 2);
  CHECK(forb(col(1, {1, 1, 1})) == 3);
  CHECK(forb(col(3, {1, 2, 3, 1, 2})) == 2);
}

TEST_CASE("forb plus bichromatic pairs is C(n,2)") {
  Rng rng(RandomSource{3, 0});
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng.below(25)), k = 1 + static_cast<int>(rng.below(6));
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int& x : c) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    std::int64_t bi = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) bi += c[u] != c[v] ? 1 : 0;
    CHECK(forb(Colouring(k, c)) + bi == pair_count(n));
  }
}

TEST_CASE("colour density and balancedness") {
  const auto d = colour_density(col(2, {1, 1, 2, 2}));
  CHECK(d.class_sizes == std::vector<std::int64_t>{2, 2});
  CHECK(d.rho(0) == 0.5);
  for (double w : {0.1, 1.0, 10.0, 1e6}) CHECK(is_balanced(d, {w}));

  const auto u = colour_density(col(2, {1, 1, 1, 2}));
  CHECK(is_balanced(u, {1.0}));
  CHECK_FALSE(is_balanced(u, {3.0}));
  CHECK(is_balanced(ColourDensity::from_sizes({3, 3, 3}), {1e9}));
}

TEST_CASE("count_colourings examples") {
  CHECK(count_colourings(kTriangle, 3) == 6);
  CHECK(count_colourings(Graph(7, {}, true), 3) == 2187);
  CHECK(count_colourings(kC4, 3) == 18);
  CHECK(count_colourings(oracle::complete_graph(4), 3) == 0);
  CHECK(count_colourings(Graph(0, {}, true), 3) == 1);
}

TEST_CASE("count_balanced_colourings examples") {
  CHECK(count_balanced_colourings(kTriangle, 3, {1.0}) == 6);
  CHECK(count_balanced_colourings(Graph(2, {}, true), 2, {1.0}) == 4);
  CHECK(count_balanced_colourings(Graph(2, {}, true), 2, {10.0}) == 2);
  CHECK(count_balanced_colourings(kC4, 2, {10.0}) == 2);
}

TEST_CASE("counts agree with the deletion-contraction oracle") {
  Rng rng(RandomSource{2024, 0});
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const auto g = oracle::random_simple_graph(n, rng.uniform01(), rng);
    for (int k = 1; k <= 5; ++k) {
      oracle::DeletionContraction dc(k);
      CHECK(count_colourings(g, k) == dc(g));
    }
  }
}

TEST_CASE("fast path agrees with the exact counter") {
  Rng rng(RandomSource{5, 5});
  for (int t = 0; t < 40; ++t) {
    const int n = 5 + static_cast<int>(rng.below(30));
    const auto g = sample_gnm_multigraph(n, n / 2 + static_cast<int>(rng.below(n)), rng);
    for (int k : {3, 4}) {
      const double exact = static_cast<double>(count_colourings(g, k));
      CHECK(count_colourings_fp(g, k) == doctest::Approx(exact).epsilon(1e-12));
      const double bal = static_cast<double>(count_balanced_colourings(g, k, {1.0}));
      CHECK(count_balanced_colourings_fp(g, k, {1.0}) == doctest::Approx(bal).epsilon(1e-12));
    }
  }
}

TEST_CASE("balanced counts against brute force; bounded by the full count") {
  Rng rng(RandomSource{6, 0});
  for (int t = 0; t < 80; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto g = oracle::random_simple_graph(n, 0.3, rng);
    for (int k : {2, 3}) {
      for (double w : {0.5, 1.0, 2.0, 5.0}) {
        const auto b = count_balanced_colourings(g, k, {w});
        CHECK(b == oracle::brute_balanced_count(g, k, w));
        CHECK(b <= count_colourings(g, k));
        // omega^-1 n^-1/2 >= 1 admits every density.
        if (1.0 / (w * std::sqrt(double(n))) >= 1.0) CHECK(b == count_colourings(g, k));
      }
    }
  }
}

TEST_CASE("multigraph count equals the count of its simple support") {
  Rng rng(RandomSource{7, 0});
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const auto g = sample_gnm_multigraph(n, static_cast<std::int64_t>(rng.below(3 * n)), rng);
    auto e = g.edges();
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    const Graph support(n, e, true);
    for (int k : {2, 3, 4}) CHECK(count_colourings(g, k) == count_colourings(support, k));
  }
}

TEST_CASE("per-profile counts sum to the total") {
  Rng rng(RandomSource{8, 0});
  const auto g = oracle::random_simple_graph(7, 0.35, rng);
  const auto prof = count_by_profile(g, 3);
  BigInt sum = 0;
  for (const auto& v : prof.values) sum += v;
  CHECK(sum == count_colourings(g, 3));
}

TEST_CASE("component cap raises a resource error") {
  CountLimits tiny;
  tiny.max_component = 3;
  CHECK_THROWS_AS(count_colourings(kC4, 3, tiny), ResourceLimit);
}

TEST_CASE("uniform colouring of K_3 over 6*10^4 trials") {
  Rng rng(RandomSource{9, 0});
  std::map<std::vector<int>, double> seen;
  const int trials = 60000;
  for (int t = 0; t < trials; ++t) {
    const auto c = sample_uniform_colouring(kTriangle, 3, rng);
    REQUIRE(is_proper(kTriangle, c));
    seen[c.colours] += 1;
  }
  REQUIRE(seen.size() == 6);
  std::vector<double> obs;
  const double p = 1.0 / 6, se = std::sqrt(p * (1 - p) / trials);
  for (auto& [c, x] : seen) {
    obs.push_back(x);
    CHECK(std::fabs(x / trials - p) < 3 * se);
  }
  CHECK(chi_square_gof(obs, std::vector<double>(6, p)).p_value > 0.001);
}

TEST_CASE("uniform colouring trivial cases and infeasibility") {
  Rng rng(RandomSource{10, 0});
  std::map<std::vector<int>, double> edge_seen, empty_seen;
  const Graph edge = oracle::make_graph(2, {{1, 2}});
  for (int t = 0; t < 16000; ++t) {
    edge_seen[sample_uniform_colouring(edge, 2, rng).colours] += 1;
    empty_seen[sample_uniform_colouring(Graph(3, {}, true), 2, rng).colours] += 1;
  }
  CHECK(edge_seen.size() == 2);
  CHECK(empty_seen.size() == 8);
  std::vector<double> a, b;
  for (auto& [c, x] : edge_seen) a.push_back(x);
  for (auto& [c, x] : empty_seen) b.push_back(x);
  CHECK(chi_square_gof(a, {0.5, 0.5}).p_value > 0.001);
  CHECK(chi_square_gof(b, std::vector<double>(8, 0.125)).p_value > 0.001);
  CHECK_THROWS_AS(sample_uniform_colouring(oracle::complete_graph(4), 3, rng), InfeasibleInstance);
}

TEST_CASE("sampled colourings are always proper") {
  Rng rng(RandomSource{11, 0});
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.below(40));
    const auto g = sample_gnm_multigraph(n, n / 2, rng);
    if (count_colourings(g, 3) == 0) continue;
    CHECK(is_proper(g, sample_uniform_colouring(g, 3, rng)));
  }
}

TEST_CASE("rc pair trivial cases") {
  Rng rng(RandomSource{12, 0});
  const auto [g, c] = sample_rc_pair(3, 3, 3, rng);
  CHECK(g.m() == 3);
  CHECK(is_proper(g, c));
  int first = 0;
  for (int t = 0; t < 10000; ++t) first += sample_rc_pair(2, 1, 2, rng).second.colours[0] == 0 ? 1 : 0;
  CHECK(std::fabs(first / 10000.0 - 0.5) < 3 * std::sqrt(0.25 / 10000));
}

TEST_CASE("rc pair law matches exhaustive enumeration (n=5, m=5, k=3)") {
  // P_rc(G, sigma) = [#colourable graphs * Z_k(G)]^-1 for proper sigma.
  const int n = 5, m = 5, k = 3;
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::map<std::vector<Edge>, std::int64_t> z;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) e.push_back(all[i]);
    const auto c = oracle::brute_count(Graph(n, e, true), k);
    if (c > 0) z[e] = c;
  }
  std::map<std::pair<std::vector<Edge>, std::vector<int>>, double> prob;
  for (auto& [e, c] : z) {
    const Graph g(n, e, true);
    oracle::for_each_assignment(n, k, [&](const std::vector<int>& a) {
      if (oracle::proper(g, a)) prob[{e, a}] = 1.0 / (static_cast<double>(z.size()) * c);
    });
  }
  std::map<std::pair<std::vector<Edge>, std::vector<int>>, double> seen;
  Rng rng(RandomSource{13, 0});
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    auto [g, c] = sample_rc_pair(n, m, k, rng);
    auto e = g.edges();
    std::sort(e.begin(), e.end());
    const auto key = std::make_pair(e, c.colours);
    REQUIRE(prob.count(key) == 1);
    seen[key] += 1;
  }
  std::vector<double> obs, p;
  for (auto& [key, pr] : prob) {
    obs.push_back(seen[key]);
    p.push_back(pr);
  }
  CHECK(chi_square_gof(obs, p).p_value > 0.001);
}

TEST_CASE("colouring text format") {
  std::stringstream ss;
  write_colouring(ss, col(3, {1, 3, 2, 2}));
  CHECK(ss.str().find("1 3 2 2") != std::string::npos);
  CHECK(read_colouring(ss, 3) == col(3, {1, 3, 2, 2}));
  std::istringstream bad("1 4 2");
  CHECK_THROWS(read_colouring(bad, 3));
}

}  // TEST_SUITE
