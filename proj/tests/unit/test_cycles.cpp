#include <doctest.h>

#include "colourlab/cycles.hpp"
#include "colourlab/models.hpp"
#include "colourlab/stats.hpp"
#include "oracles.hpp"

using namespace colourlab;

TEST_SUITE("cycle-census") {

TEST_CASE("census examples") {
  CHECK(cycle_census(oracle::make_graph(2, {{1, 2}, {1, 2}, {1, 2}}, false), 2).at(2) == 3);
  const auto k4 = cycle_census(oracle::complete_graph(4), 4);
  CHECK(k4.at(2) == 0);
  CHECK(k4.at(3) == 4);
  CHECK(k4.at(4) == 3);
  const auto doubled = cycle_census(oracle::make_graph(3, {{1, 2}, {1, 2}, {2, 3}, {3, 1}}, false), 3);
  CHECK(doubled.at(2) == 1);
  CHECK(doubled.at(3) == 2);
}

TEST_CASE("census matches the vertex-sequence oracle on simple graphs") {
  Rng rng(RandomSource{1, 0});
  for (int t = 0; t < 120; ++t) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const auto g = oracle::random_simple_graph(n, rng.uniform01(), rng);
    const auto c = cycle_census(g, n);
    for (int l = 3; l <= n; ++l) CHECK(c.at(l) == oracle::naive_cycles(g, l));
    CHECK(c.at(2) == 0);
  }
}

TEST_CASE("rooted directed cycles are 2l times the census") {
  Rng rng(RandomSource{2, 0});
  for (int t = 0; t < 60; ++t) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const auto g = sample_gnm_multigraph(n, static_cast<std::int64_t>(rng.below(2 * n)), rng);
    const auto c = cycle_census(g, 6);
    for (int l = 2; l <= 6; ++l) CHECK(directed_rooted_cycles(g, l) == 2 * l * c.at(l));
  }
}

TEST_CASE("parallel edges multiply cycle counts") {
  // Triangle with multiplicities 2, 3, 1 gives 6 triangles and 1 + 3 two-cycles.
  const auto g = oracle::make_graph(3, {{1, 2}, {1, 2}, {2, 3}, {2, 3}, {2, 3}, {1, 3}}, false);
  const auto c = cycle_census(g, 3);
  CHECK(c.at(2) == 4);
  CHECK(c.at(3) == 6);
}

TEST_CASE("isolated triangles") {
  const auto g = oracle::make_graph(8, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {7, 8}});
  CHECK(count_isolated_triangles(g) == 2);
  CHECK(count_isolated_triangles(oracle::complete_graph(4)) == 0);
  CHECK(count_isolated_triangles(oracle::make_graph(3, {{1, 2}, {1, 2}, {2, 3}, {1, 3}}, false)) == 0);
}

TEST_CASE("type counts: examples, closed form against recurrence and brute force") {
  CHECK(type_count(3, 2) == 6);
  CHECK(type_count(3, 3) == 6);
  CHECK(type_count(3, 4) == 18);
  for (int k = 2; k <= 10; ++k)
    for (int l = 2; l <= 20; ++l) {
      CHECK(type_count(k, l) == type_count_recurrence(k, l));
      BigInt kk1 = k;
      for (int i = 1; i < l; ++i) kk1 *= (k - 1);
      CHECK(type_count(k, l) + type_count(k, l - 1) == kk1);
    }
  // Cyclically proper colour sequences enumerated directly.
  for (int k = 2; k <= 4; ++k)
    for (int l = 2; l <= 6; ++l) {
      std::int64_t c = 0;
      oracle::for_each_assignment(l, k, [&](const std::vector<int>& a) {
        for (int i = 0; i < l; ++i)
          if (a[i] == a[(i + 1) % l]) return;
        ++c;
      });
      CHECK(type_count(k, l) == c);
    }
}

TEST_CASE("cycle types read colours along the cycle") {
  const Colouring c(3, {0, 1, 2, 1});
  CHECK(cycle_type(c, {0, 1, 2}) == std::vector<int>{0, 1, 2});
  CHECK(cycle_type(c, {3, 0}) == std::vector<int>{1, 0});
}

TEST_CASE("mean two-cycle count pins the multigraph convention") {
  // n=1000, d=2: E[C_2] -> lambda_2 = 1.
  Rng rng(RandomSource{3, 0});
  std::vector<double> c2;
  for (int t = 0; t < 10000; ++t) c2.push_back(static_cast<double>(cycle_census(sample_gnm_multigraph(1000, 1000, rng), 2).at(2)));
  const auto s = summarize(c2);
  CHECK(std::fabs(s.mean - 1.0) < 3 * s.se);
}

TEST_CASE("intersecting cycles") {
  const auto g = oracle::make_graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(has_intersecting_cycles(enumerate_short_cycles(g, 3), 5));
  const auto h = oracle::make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK_FALSE(has_intersecting_cycles(enumerate_short_cycles(h, 3), 6));
}

}  // TEST_SUITE
