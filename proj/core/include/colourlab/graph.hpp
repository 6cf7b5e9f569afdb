#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace colourlab {

/// Unordered vertex pair stored with u < v (0-based vertices).
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Number of unordered pairs of an n-set, C(n, 2).
constexpr std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

/// Triangular (colex) bijection between pairs u < v and [0, C(n,2)):
///   index(u, v) = v(v-1)/2 + u,
/// so the order is (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
/// It does not depend on n.
std::int64_t pair_index(int u, int v);
Edge pair_from_index(std::int64_t index);

/// A graph on vertices 0..n-1 with an explicit list of edge instances.
///
/// Multigraphs keep repeated pairs as separate instances because cycle
/// counting depends on instance identity. When `simple` is set the
/// constructor rejects repeats.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, bool simple);

  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool declared_simple() const noexcept { return simple_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  bool simple_ = false;
};

/// Neighbour lists of the underlying simple support (sorted, no repeats).
std::vector<std::vector<int>> simple_adjacency(const Graph& g);

/// Connected components of the support as sorted vertex lists, ordered by
/// their smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// True iff no pair occurs twice among the edge instances.
bool is_simple_event(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Text format: header "n m simple|multi", then one "u v" line per edge
/// instance, 1-indexed, in edge-list order. Blank lines and lines starting
/// with # are skipped when reading.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

}  // namespace colourlab
