#pragma once

#include <cstdint>
#include <vector>

#include "colourlab/colouring.hpp"
#include "colourlab/graph.hpp"
#include "colourlab/numeric.hpp"

namespace colourlab {

/// Counts (C_2, ..., C_L) of cycles of each exact length.
///
/// Multigraph convention: a cycle is a set of edge instances. For l >= 3 a
/// cycle on l distinct vertices contributes the product of the multiplicities
/// of its l pairs; for l = 2 every unordered pair of parallel instances is
/// one cycle, so a pair of multiplicity t contributes C(t, 2). This is the
/// convention under which E[C_l] tends to d^l / (2l) for the with-replacement
/// multigraph.
struct CycleCensus {
  int max_length = 2;
  std::vector<std::int64_t> counts;  ///< counts[l] for l in [0, L]; entries 0 and 1 stay zero

  std::int64_t at(int l) const { return l >= 2 && l <= max_length ? counts[l] : 0; }
};

/// One cycle on distinct vertices (smallest vertex first) with the number of
/// edge-instance sets realizing it.
struct ShortCycle {
  std::vector<int> vertices;
  std::int64_t multiplicity = 1;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// All cycles of length 2..L. Each vertex cycle appears once: rooted at its
/// smallest vertex and traversed towards the smaller of the two root
/// neighbours.
std::vector<ShortCycle> enumerate_short_cycles(const Graph& g, int max_length);

CycleCensus cycle_census(const Graph& g, int max_length);

/// D_l: rooted, directed cycles of length l counted by walking edge
/// instances from every start vertex. Equals 2l * C_l.
std::int64_t directed_rooted_cycles(const Graph& g, int length);

/// True iff two of the given cycles share a vertex (a cycle of multiplicity
/// above one counts as several cycles on the same vertices).
bool has_intersecting_cycles(const std::vector<ShortCycle>& cycles, int n);

/// Components that are exactly a simple triangle: 3 vertices, 3 edge
/// instances, no repeated pair.
int count_isolated_triangles(const Graph& g);

/// Colour sequence of a rooted directed cycle under a colouring.
std::vector<int> cycle_type(const Colouring& c, const std::vector<int>& cycle_vertices);

/// T_l: sequences (a_1..a_l) over [k] with cyclically distinct neighbours,
/// closed form (k-1)^l + (-1)^l (k-1).
BigInt type_count(int k, int l);

/// T_l from T_1 = 0 and T_l + T_{l-1} = k (k-1)^{l-1}.
BigInt type_count_recurrence(int k, int l);

}  // namespace colourlab
