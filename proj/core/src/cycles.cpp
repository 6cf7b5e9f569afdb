#include "colourlab/cycles.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "colourlab/errors.hpp"

namespace colourlab {

namespace {

using Multiplicity = std::unordered_map<std::int64_t, std::int64_t>;

Multiplicity pair_multiplicity(const Graph& g) {
  Multiplicity mult;
  mult.reserve(g.m() * 2);
  for (const auto& e : g.edges()) ++mult[pair_index(e.u, e.v)];
  return mult;
}

}  // namespace

std::vector<ShortCycle> enumerate_short_cycles(const Graph& g, int max_length) {
  if (max_length < 2) throw InvalidParameter("cycle enumeration: L must be at least 2");
  const auto mult = pair_multiplicity(g);
  const auto adj = simple_adjacency(g);
  auto mu = [&](int a, int b) { return mult.at(pair_index(a, b)); };

  std::vector<ShortCycle> out;
  // 2-cycles in pair order
  std::vector<std::pair<std::int64_t, std::int64_t>> parallel;
  for (const auto& [idx, t] : mult)
    if (t >= 2) parallel.emplace_back(idx, t);
  std::sort(parallel.begin(), parallel.end());
  for (const auto& [idx, t] : parallel) {
    const Edge e = pair_from_index(idx);
    out.push_back({{e.u, e.v}, t * (t - 1) / 2});
  }
  if (max_length < 3) return out;

  std::vector<int> path;
  std::vector<char> on_path(g.n(), 0);
  std::function<void(int, std::int64_t)> extend = [&](int v, std::int64_t weight) {
    const int root = path.front();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && path[1] < v && std::binary_search(adj[v].begin(), adj[v].end(), root))
      out.push_back({path, weight * mu(v, root)});
    if (len == max_length) return;
    for (const int w : adj[v]) {
      if (w <= root || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(w, weight * mu(v, w));
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int r = 0; r < g.n(); ++r) {
    path.assign(1, r);
    on_path[r] = 1;
    extend(r, 1);
    on_path[r] = 0;
  }
  return out;
}

CycleCensus cycle_census(const Graph& g, int max_length) {
  CycleCensus census;
  census.max_length = max_length;
  census.counts.assign(static_cast<std::size_t>(std::max(max_length, 2)) + 1, 0);
  for (const auto& c : enumerate_short_cycles(g, max_length)) census.counts[c.length()] += c.multiplicity;
  return census;
}

std::int64_t directed_rooted_cycles(const Graph& g, int length) {
  if (length < 2) throw InvalidParameter("directed_rooted_cycles: length must be at least 2");
  // incidence lists of edge instances
  std::vector<std::vector<std::pair<int, std::size_t>>> inc(g.n());
  for (std::size_t i = 0; i < g.m(); ++i) {
    const auto& e = g.edges()[i];
    inc[e.u].emplace_back(e.v, i);
    inc[e.v].emplace_back(e.u, i);
  }
  std::int64_t total = 0;
  std::vector<char> on_path(g.n(), 0);
  std::vector<std::size_t> used;
  std::function<void(int, int, int)> walk = [&](int start, int v, int steps) {
    for (const auto& [w, id] : inc[v]) {
      if (std::find(used.begin(), used.end(), id) != used.end()) continue;
      if (steps + 1 == length) {
        if (w == start) ++total;
        continue;
      }
      if (w == start || on_path[w]) continue;
      on_path[w] = 1;
      used.push_back(id);
      walk(start, w, steps + 1);
      used.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    on_path[s] = 1;
    walk(s, s, 0);
    on_path[s] = 0;
  }
  return total;
}

bool has_intersecting_cycles(const std::vector<ShortCycle>& cycles, int n) {
  std::vector<std::int64_t> through(n, 0);
  for (const auto& c : cycles)
    for (const int v : c.vertices) {
      through[v] += c.multiplicity;
      if (through[v] >= 2) return true;
    }
  return false;
}

int count_isolated_triangles(const Graph& g) {
  const auto comps = connected_components(g);
  std::vector<int> comp_of(g.n());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (const int v : comps[i]) comp_of[v] = static_cast<int>(i);
  std::vector<std::vector<std::int64_t>> pairs_in(comps.size());
  for (const auto& e : g.edges()) pairs_in[comp_of[e.u]].push_back(pair_index(e.u, e.v));
  int count = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].size() != 3 || pairs_in[i].size() != 3) continue;
    auto p = pairs_in[i];
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) == p.end()) ++count;
  }
  return count;
}

std::vector<int> cycle_type(const Colouring& c, const std::vector<int>& cycle_vertices) {
  std::vector<int> type;
  type.reserve(cycle_vertices.size());
  for (const int v : cycle_vertices) type.push_back(c.colours.at(v));
  return type;
}

BigInt type_count(int k, int l) {
  if (l < 1 || k < 1) throw InvalidParameter("type_count: need k >= 1 and l >= 1");
  BigInt p = boost::multiprecision::pow(BigInt(k - 1), static_cast<unsigned>(l));
  if (l % 2 == 0) return p + (k - 1);
  return p - (k - 1);
}

BigInt type_count_recurrence(int k, int l) {
  if (l < 1 || k < 1) throw InvalidParameter("type_count_recurrence: need k >= 1 and l >= 1");
  BigInt t = 0;  // T_1
  for (int j = 2; j <= l; ++j) t = BigInt(k) * boost::multiprecision::pow(BigInt(k - 1), static_cast<unsigned>(j - 1)) - t;
  return t;
}

}  // namespace colourlab
