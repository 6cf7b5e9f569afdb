#include "colourlab/models.hpp"

#include <string>
#include <unordered_set>

#include "colourlab/errors.hpp"

namespace colourlab {

Graph sample_gnm_multigraph(int n, std::int64_t m, Rng& rng) {
  if (n < 2) throw InvalidParameter("sample_gnm_multigraph: need n >= 2");
  if (m < 0) throw InvalidParameter("sample_gnm_multigraph: need m >= 0");
  const auto total = static_cast<std::uint64_t>(pair_count(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) edges.push_back(pair_from_index(static_cast<std::int64_t>(rng.below(total))));
  return Graph(n, std::move(edges), false);
}

namespace {

// Floyd's algorithm: m distinct values from [0, total), in insertion order.
std::vector<std::int64_t> floyd_sample(std::int64_t total, std::int64_t m, Rng& rng) {
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t j = total - m; j < total; ++j) {
    auto t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
    if (!chosen.insert(t).second) {
      t = j;
      chosen.insert(t);
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

Graph sample_gnm_simple(int n, std::int64_t m, Rng& rng) {
  if (n < 0) throw InvalidParameter("sample_gnm_simple: need n >= 0");
  const std::int64_t total = pair_count(n);
  if (m < 0 || m > total)
    throw InvalidParameter("sample_gnm_simple: m = " + std::to_string(m) + " outside 0.." + std::to_string(total));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (const auto t : floyd_sample(total, m, rng)) edges.push_back(pair_from_index(t));
  return Graph(n, std::move(edges), true);
}

std::int64_t min_forb(int n, int k) {
  if (k <= 0) throw InvalidParameter("min_forb: k must be positive");
  std::int64_t total = 0;
  for (int i = 0; i < k; ++i) total += pairs(n / k + (i < n % k ? 1 : 0));
  return total;
}

Colouring balanced_colouring(int n, int k) {
  std::vector<int> c(n);
  for (int v = 0; v < n; ++v) c[v] = v % k;
  return Colouring(k, std::move(c));
}

PlantedPair sample_planted_pair(int n, std::int64_t m, int k, Rng& rng, PlantedOptions options) {
  if (n < 0 || k <= 0 || m < 0) throw InvalidParameter("sample_planted_pair: need n >= 0, k >= 1, m >= 0");
  const std::int64_t budget = pair_count(n) - m;
  if (min_forb(n, k) > budget)
    throw InfeasibleInstance("sample_planted_pair: no map [n]->[k] leaves " + std::to_string(m) + " bichromatic pairs");

  for (std::uint64_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<int> colours(n);
    for (auto& c : colours) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    Colouring sigma(k, std::move(colours));
    if (forb(sigma) > budget) continue;

    std::vector<std::int64_t> bichromatic;
    bichromatic.reserve(static_cast<std::size_t>(pair_count(n) - forb(sigma)));
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (sigma.colours[u] != sigma.colours[v]) bichromatic.push_back(pair_index(u, v));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (const auto t : floyd_sample(static_cast<std::int64_t>(bichromatic.size()), m, rng))
      edges.push_back(pair_from_index(bichromatic[static_cast<std::size_t>(t)]));
    return {Graph(n, std::move(edges), true), std::move(sigma)};
  }
  throw ResourceLimit("sample_planted_pair: rejection exceeded " + std::to_string(options.max_attempts) + " attempts");
}

}  // namespace colourlab

namespace colourlab {

Graph sample_planted_multigraph(const Colouring& sigma, std::int64_t m, Rng& rng) {
  const int n = sigma.n();
  if (n < 2 || m < 0) throw InvalidParameter("sample_planted_multigraph: need n >= 2 and m >= 0");
  if (pair_count(n) == forb(sigma) && m > 0)
    throw InfeasibleInstance("sample_planted_multigraph: colouring has no bichromatic pair");
  const auto total = static_cast<std::uint64_t>(pair_count(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<std::int64_t>(edges.size()) < m) {
    const Edge e = pair_from_index(static_cast<std::int64_t>(rng.below(total)));
    if (sigma.colours[e.u] != sigma.colours[e.v]) edges.push_back(e);
  }
  return Graph(n, std::move(edges), false);
}

}  // namespace colourlab
