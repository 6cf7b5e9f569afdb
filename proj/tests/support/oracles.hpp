#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive: exponential-time enumeration over assignments, edge
// sequences or vertex sequences, sharing no code with the library beyond the
// Graph container and the big-integer typedefs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "colourlab/colouring.hpp"
#include "colourlab/graph.hpp"
#include "colourlab/numeric.hpp"
#include "colourlab/random.hpp"

namespace oracle {

using colourlab::BigInt;
using colourlab::Graph;
using colourlab::Rational;

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Calls fn(assignment) for every map [n] -> [k], in lexicographic order.
template <class Fn>
void for_each_assignment(int n, int k, Fn&& fn) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  const std::int64_t total = ipow(k, n);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t x = idx;
    for (int v = n - 1; v >= 0; --v) {
      a[static_cast<std::size_t>(v)] = static_cast<int>(x % k);
      x /= k;
    }
    fn(static_cast<const std::vector<int>&>(a));
  }
}

inline bool proper(const Graph& g, const std::vector<int>& a) {
  for (const auto& e : g.edges())
    if (a[static_cast<std::size_t>(e.u)] == a[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

inline std::int64_t brute_count(const Graph& g, int k) {
  std::int64_t c = 0;
  for_each_assignment(g.n(), k, [&](const std::vector<int>& a) { c += proper(g, a) ? 1 : 0; });
  return c;
}

inline std::int64_t brute_balanced_count(const Graph& g, int k, double omega) {
  std::int64_t c = 0;
  for_each_assignment(g.n(), k, [&](const std::vector<int>& a) {
    if (!proper(g, a)) return;
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(k), 0);
    for (int x : a) ++sizes[static_cast<std::size_t>(x)];
    const double bound = 1.0 / (omega * std::sqrt(static_cast<double>(g.n())));
    for (auto s : sizes)
      if (std::fabs(static_cast<double>(s) / g.n() - 1.0 / k) > bound + 1e-12) return;
    ++c;
  });
  return c;
}

// Chromatic polynomial evaluated at k by deletion-contraction on adjacency
// bitmasks, memoized on the exact adjacency (n <= 16).
class DeletionContraction {
 public:
  explicit DeletionContraction(int k) : k_(k) {}

  BigInt operator()(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
    for (const auto& e : g.edges()) {
      adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
      adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    return eval(adj);
  }

 private:
  BigInt eval(const std::vector<std::uint32_t>& adj) {
    const int n = static_cast<int>(adj.size());
    int u = -1, v = -1;
    for (int i = 0; i < n && u < 0; ++i)
      if (adj[static_cast<std::size_t>(i)]) {
        u = i;
        v = __builtin_ctz(adj[static_cast<std::size_t>(i)]);
      }
    if (u < 0) return BigInt(ipow(k_, n));
    if (auto it = memo_.find(adj); it != memo_.end()) return it->second;

    // P(G) = P(G - uv) - P(G / uv)
    auto del = adj;
    del[static_cast<std::size_t>(u)] &= ~(1u << v);
    del[static_cast<std::size_t>(v)] &= ~(1u << u);

    // Contract v into u, then drop vertex v and reindex.
    auto merged = del;
    merged[static_cast<std::size_t>(u)] |= merged[static_cast<std::size_t>(v)];
    for (int w = 0; w < n; ++w)
      if (merged[static_cast<std::size_t>(w)] >> v & 1u) merged[static_cast<std::size_t>(w)] |= 1u << u;
    merged[static_cast<std::size_t>(u)] &= ~(1u << u);
    std::vector<std::uint32_t> con;
    con.reserve(static_cast<std::size_t>(n - 1));
    const auto squeeze = [v](std::uint32_t m) {
      const std::uint32_t low = m & ((1u << v) - 1u);
      const std::uint32_t high = (m >> (v + 1)) << v;
      return low | high;
    };
    for (int w = 0; w < n; ++w)
      if (w != v) con.push_back(squeeze(merged[static_cast<std::size_t>(w)]));

    BigInt r = eval(del) - eval(con);
    memo_.emplace(adj, r);
    return r;
  }

  int k_;
  std::map<std::vector<std::uint32_t>, BigInt> memo_;
};

// Cycles of length l in a simple graph by enumerating injective vertex
// sequences; each cycle appears 2l times.
inline std::int64_t naive_cycles(const Graph& g, int l) {
  const int n = g.n();
  std::vector<std::vector<char>> a(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  std::int64_t sequences = 0;
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == l) {
      if (a[seq.back()][seq.front()]) ++sequences;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || (!seq.empty() && !a[seq.back()][w])) continue;
      used[w] = 1;
      seq.push_back(w);
      self(self);
      seq.pop_back();
      used[w] = 0;
    }
  };
  rec(rec);
  return sequences / (2 * l);
}

// E[Z_k] and E[Z_k^2] over all N^m equally likely edge sequences of the
// with-replacement model, as exact rationals.
struct ExhaustiveMoments {
  Rational first;
  Rational second;
};

inline ExhaustiveMoments exhaustive_moments(int n, int m, int k) {
  const int big_n = n * (n - 1) / 2;
  std::vector<colourlab::Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  BigInt s1 = 0, s2 = 0;
  const std::int64_t sequences = ipow(big_n, m);
  std::vector<colourlab::Edge> edges(static_cast<std::size_t>(m));
  for (std::int64_t idx = 0; idx < sequences; ++idx) {
    std::int64_t x = idx;
    for (int j = 0; j < m; ++j) {
      edges[static_cast<std::size_t>(j)] = all[static_cast<std::size_t>(x % big_n)];
      x /= big_n;
    }
    const Graph g(n, edges, false);
    const std::int64_t z = brute_count(g, k);
    s1 += z;
    s2 += BigInt(z) * z;
  }
  return {Rational(s1, BigInt(sequences)), Rational(s2, BigInt(sequences))};
}

// Random simple graph for property tests: each pair present with probability p.
inline Graph random_simple_graph(int n, double p, colourlab::Rng& rng) {
  std::vector<colourlab::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.push_back({u, v});
  return Graph(n, edges, true);
}

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> one_indexed, bool simple = true) {
  std::vector<colourlab::Edge> edges;
  for (auto [u, v] : one_indexed) edges.push_back({u - 1, v - 1});
  return Graph(n, edges, simple);
}

inline Graph complete_graph(int n) {
  std::vector<colourlab::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges, true);
}

}  // namespace oracle
