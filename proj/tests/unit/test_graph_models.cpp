#include <doctest.h>

#include <map>
#include <sstream>

#include "colourlab/colouring.hpp"
#include "colourlab/errors.hpp"
#include "colourlab/graph.hpp"
#include "colourlab/models.hpp"
#include "colourlab/random.hpp"
#include "colourlab/stats.hpp"
#include "oracles.hpp"

using namespace colourlab;

namespace {

bool all_bichromatic(const Graph& g, const Colouring& c) {
  for (const auto& e : g.edges())
    if (c.colours[e.u] == c.colours[e.v]) return false;
  return true;
}

}  // namespace

TEST_SUITE("graph-models") {

TEST_CASE("multigraph trivial cases") {
  Rng rng(RandomSource{11, 0});
  const auto g = sample_gnm_multigraph(2, 3, rng);
  REQUIRE(g.m() == 3);
  for (const auto& e : g.edges()) CHECK((e == Edge{0, 1}));
  CHECK(sample_gnm_multigraph(3, 0, rng).m() == 0);
  CHECK_THROWS_AS(sample_gnm_multigraph(1, 1, rng), InvalidParameter);
}

TEST_CASE("multigraph single draws are uniform over pairs") {
  // 10^5 graphs of 100 draws each; frequency of {1,2} against 1/4950.
  Rng rng(RandomSource{5, 1});
  std::int64_t hits = 0, draws = 0;
  for (int t = 0; t < 100000; ++t) {
    const auto g = sample_gnm_multigraph(100, 100, rng);
    for (const auto& e : g.edges()) hits += (e == Edge{0, 1}) ? 1 : 0;
    draws += static_cast<std::int64_t>(g.m());
  }
  const double p = 1.0 / 4950.0;
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(draws));
  CHECK(std::fabs(static_cast<double>(hits) / draws - p) < 3 * se);
}

TEST_CASE("simple G(n,m) trivial cases and errors") {
  Rng rng(RandomSource{3, 0});
  const auto k3 = sample_gnm_simple(3, 3, rng);
  CHECK(k3.declared_simple());
  std::vector<Edge> e = k3.edges();
  std::sort(e.begin(), e.end());
  CHECK(e == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(sample_gnm_simple(2, 0, rng).m() == 0);
  CHECK_THROWS_AS(sample_gnm_simple(4, 7, rng), InvalidParameter);
}

TEST_CASE("simple G(4,1) edge frequencies are 1/6") {
  Rng rng(RandomSource{9, 2});
  std::vector<double> counts(6, 0.0);
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const auto g = sample_gnm_simple(4, 1, rng);
    counts[static_cast<std::size_t>(pair_index(g.edges()[0].u, g.edges()[0].v))] += 1;
  }
  const double p = 1.0 / 6.0, se = std::sqrt(p * (1 - p) / trials);
  for (double c : counts) CHECK(std::fabs(c / trials - p) < 3 * se);
}

TEST_CASE("simple graphs are uniform over all m-edge graphs (n=5, m=3)") {
  Rng rng(RandomSource{21, 0});
  std::map<std::vector<Edge>, double> seen;
  const int trials = 60000;
  for (int t = 0; t < trials; ++t) {
    auto e = sample_gnm_simple(5, 3, rng).edges();
    std::sort(e.begin(), e.end());
    seen[e] += 1;
  }
  REQUIRE(seen.size() == 120);  // C(10, 3)
  std::vector<double> obs;
  for (auto& [g, c] : seen) obs.push_back(c);
  const auto chi = chi_square_gof(obs, std::vector<double>(120, 1.0 / 120));
  CHECK(chi.p_value > 0.001);
}

TEST_CASE("pair index bijection") {
  std::int64_t idx = 0;
  for (int v = 1; v < 30; ++v)
    for (int u = 0; u < v; ++u) {
      CHECK(pair_index(u, v) == idx);
      const Edge e = pair_from_index(pair_index(u, v));
      CHECK(e == Edge{u, v});
      ++idx;
    }
  CHECK(idx == pair_count(30));
}

TEST_CASE("determinism: equal (seed, stream) gives equal output, streams differ") {
  for (std::uint64_t seed : {0ull, 1ull, 123456789ull}) {
    Rng a(RandomSource{seed, 4}), b(RandomSource{seed, 4}), c(RandomSource{seed, 5});
    const auto ga = sample_gnm_multigraph(50, 40, a);
    CHECK(ga == sample_gnm_multigraph(50, 40, b));
    CHECK_FALSE(ga == sample_gnm_multigraph(50, 40, c));
  }
  // Pinned output: the engine and the stream mixing are documented and
  // platform-stable, so the first draws never change.
  Rng r(RandomSource{7, 0});
  const auto first = r.next();
  Rng r2(RandomSource{7, 0});
  CHECK(first == r2.next());
}

TEST_CASE("sampler invariants hold on every draw") {
  Rng rng(RandomSource{77, 0});
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng.below(30));
    const auto m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(pair_count(n)) + 1));
    for (const Graph& g : {sample_gnm_multigraph(n, m, rng), sample_gnm_simple(n, m, rng)}) {
      CHECK(static_cast<std::int64_t>(g.m()) == m);
      for (const auto& e : g.edges()) {
        CHECK(e.u < e.v);
        CHECK(e.u >= 0);
        CHECK(e.v < n);
      }
    }
    CHECK(is_simple_event(sample_gnm_simple(n, m, rng)));
  }
}

TEST_CASE("planted pair n=2, k=2, m=1 is forced up to colour swap") {
  Rng rng(RandomSource{1, 0});
  int first = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    const auto p = sample_planted_pair(2, 1, 2, rng);
    CHECK(p.graph.edges() == std::vector<Edge>{{0, 1}});
    CHECK(p.colouring.colours[0] != p.colouring.colours[1]);
    first += p.colouring.colours[0] == 0 ? 1 : 0;
  }
  CHECK(std::fabs(first / double(trials) - 0.5) < 3 * std::sqrt(0.25 / trials));
}

TEST_CASE("planted pair n=4, k=2, m=4: balanced sigma forces all bichromatic edges") {
  Rng rng(RandomSource{2, 0});
  int balanced_seen = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto p = sample_planted_pair(4, 4, 2, rng);
    CHECK(all_bichromatic(p.graph, p.colouring));
    CHECK(forb(p.colouring) <= 6 - 4);
    const auto d = colour_density(p.colouring);
    if (d.class_sizes[0] == 2) {
      ++balanced_seen;
      CHECK(p.graph.m() == 4);
    }
  }
  // Forb <= 2 admits only the six (2,2) maps.
  CHECK(balanced_seen == 2000);
}

TEST_CASE("planted pair law matches exhaustive enumeration (n=4, m=3, k=2)") {
  // P(G, sigma) = [#admissible]^-1 C(N - Forb(sigma), m)^-1 on bichromatic G.
  const int n = 4, m = 3, k = 2;
  const std::int64_t big_n = 6;
  std::vector<std::vector<int>> admissible;
  oracle::for_each_assignment(n, k, [&](const std::vector<int>& a) {
    if (forb(Colouring(k, a)) <= big_n - m) admissible.push_back(a);
  });
  std::map<std::pair<std::vector<int>, std::vector<Edge>>, double> prob;
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  for (const auto& a : admissible) {
    std::vector<Edge> bi;
    for (auto e : all)
      if (a[e.u] != a[e.v]) bi.push_back(e);
    const double per = 1.0 / (admissible.size() * static_cast<double>(binomial(bi.size(), m)));
    for (std::uint32_t mask = 0; mask < (1u << bi.size()); ++mask) {
      if (__builtin_popcount(mask) != m) continue;
      std::vector<Edge> g;
      for (std::size_t i = 0; i < bi.size(); ++i)
        if (mask >> i & 1u) g.push_back(bi[i]);
      prob[{a, g}] = per;
    }
  }
  std::map<std::pair<std::vector<int>, std::vector<Edge>>, double> seen;
  Rng rng(RandomSource{31, 0});
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const auto p = sample_planted_pair(n, m, k, rng);
    auto e = p.graph.edges();
    std::sort(e.begin(), e.end());
    const auto key = std::make_pair(p.colouring.colours, e);
    REQUIRE(prob.count(key) == 1);
    seen[key] += 1;
  }
  std::vector<double> obs, probs;
  for (auto& [key, pr] : prob) {
    obs.push_back(seen[key]);
    probs.push_back(pr);
  }
  CHECK(chi_square_gof(obs, probs).p_value > 0.001);
}

TEST_CASE("planted colourings are uniform over admissible maps (n=6, k=3, m=6)") {
  const int n = 6, k = 3, m = 6;
  std::map<std::vector<int>, double> seen;
  std::size_t admissible = 0;
  oracle::for_each_assignment(n, k, [&](const std::vector<int>& a) {
    if (forb(Colouring(k, a)) <= 15 - m) {
      seen[a] = 0;
      ++admissible;
    }
  });
  Rng rng(RandomSource{8, 0});
  for (int t = 0; t < 100000; ++t) {
    const auto p = sample_planted_pair(n, m, k, rng);
    REQUIRE(seen.count(p.colouring.colours) == 1);
    seen[p.colouring.colours] += 1;
    CHECK(all_bichromatic(p.graph, p.colouring));
  }
  std::vector<double> obs;
  for (auto& [a, c] : seen) obs.push_back(c);
  CHECK(chi_square_gof(obs, std::vector<double>(admissible, 1.0 / admissible)).p_value > 0.001);
}

TEST_CASE("planted pair errors") {
  Rng rng(RandomSource{1, 0});
  // K_3 needs three colours: with k=2 no map leaves 3 bichromatic pairs.
  CHECK_THROWS_AS(sample_planted_pair(3, 3, 2, rng), InfeasibleInstance);
  CHECK(min_forb(9, 3) == 9);
}

TEST_CASE("simple event") {
  CHECK(is_simple_event(oracle::make_graph(3, {{1, 2}, {1, 3}, {2, 3}})));
  CHECK_FALSE(is_simple_event(oracle::make_graph(2, {{1, 2}, {1, 2}}, false)));
}

TEST_CASE("simple-event frequency matches the exact collision product (n=50, m=25)") {
  const int n = 50;
  const std::int64_t m = 25, big_n = pair_count(n);
  double exact = 1.0;
  for (std::int64_t j = 0; j < m; ++j) exact *= 1.0 - static_cast<double>(j) / big_n;
  Rng rng(RandomSource{12, 0});
  const int trials = 10000;
  int simple = 0;
  for (int t = 0; t < trials; ++t) simple += is_simple_event(sample_gnm_multigraph(n, m, rng)) ? 1 : 0;
  const double se = std::sqrt(exact * (1 - exact) / trials);
  CHECK(std::fabs(simple / double(trials) - exact) < 3 * se);
}

TEST_CASE("graph text format round trip and errors") {
  Rng rng(RandomSource{4, 4});
  const auto g = sample_gnm_multigraph(12, 30, rng);
  std::stringstream ss;
  write_graph(ss, g);
  CHECK(read_graph(ss) == g);

  std::istringstream ok("# comment\n3 2 simple\n1 2\n2 3\n");
  CHECK(read_graph(ok).m() == 2);

  const auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_graph(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("3 2\n1 2\n1 4\n") == 3);
  CHECK(line_of("3 1\n2 2\n") == 2);
  CHECK(line_of("3 2 simple\n1 2\n2 1\n") > 0);
  CHECK(line_of("3 x\n") == 1);
  CHECK(line_of("3 1\n1 2 3\n") == 2);
}

}  // TEST_SUITE
