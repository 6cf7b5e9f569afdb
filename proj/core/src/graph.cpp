#include "colourlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "colourlab/errors.hpp"

namespace colourlab {

std::int64_t pair_index(int u, int v) {
  if (u == v || u < 0 || v < 0) throw InvalidParameter("pair_index: need two distinct non-negative vertices");
  if (u > v) std::swap(u, v);
  return static_cast<std::int64_t>(v) * (v - 1) / 2 + u;
}

Edge pair_from_index(std::int64_t index) {
  if (index < 0) throw InvalidParameter("pair_from_index: negative index");
  auto v = static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (v * (v - 1) / 2 > index) --v;
  while ((v + 1) * v / 2 <= index) ++v;
  return {static_cast<int>(index - v * (v - 1) / 2), static_cast<int>(v)};
}

Graph::Graph(int n, std::vector<Edge> edges, bool simple)
    : n_(n), edges_(std::move(edges)), simple_(simple) {
  if (n < 0) throw InvalidParameter("Graph: negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw InvalidParameter("Graph: self-loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw InvalidParameter("Graph: endpoint out of range");
  }
  if (simple_ && !is_simple_event(*this)) throw InvalidParameter("Graph: repeated edge in a simple graph");
}

std::vector<std::vector<int>> simple_adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

bool is_simple_event(const Graph& g) {
  std::unordered_set<std::int64_t> seen;
  seen.reserve(g.m() * 2);
  for (const auto& e : g.edges())
    if (!seen.insert(pair_index(e.u, e.v)).second) return false;
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  return Graph(a.n() + b.n(), std::move(edges), a.declared_simple() && b.declared_simple());
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << ' ' << (g.declared_simple() ? "simple" : "multi") << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("empty input, expected header \"n m [simple|multi]\"", 0);

  std::istringstream header(line);
  long long n = -1, m = -1;
  std::string kind = "multi", extra;
  if (!(header >> n >> m)) throw ParseError("malformed header, expected \"n m [simple|multi]\"", lineno);
  if (!(header >> kind)) kind = "multi";
  if (header >> extra) throw ParseError("trailing token '" + extra + "' in header", lineno);
  if (kind != "simple" && kind != "multi") throw ParseError("unknown graph kind '" + kind + "'", lineno);
  if (n < 0 || m < 0) throw ParseError("negative n or m in header", lineno);
  if (n > (1LL << 30)) throw ParseError("vertex count too large", lineno);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::int64_t> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), lineno);
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v)) throw ParseError("malformed edge line '" + line + "'", lineno);
    if (row >> extra) throw ParseError("trailing token '" + extra + "' on edge line", lineno);
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("endpoint out of range 1.." + std::to_string(n), lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    if (kind == "simple" && !seen.insert(pair_index(edges.back().u, edges.back().v)).second)
      throw ParseError("repeated edge in a graph declared simple", lineno);
  }
  if (next_content_line(in, line, lineno)) throw ParseError("unexpected content after the last edge", lineno);

  return Graph(static_cast<int>(n), std::move(edges), kind == "simple");
}

}  // namespace colourlab
