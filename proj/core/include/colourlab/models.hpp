#pragma once

#include <cstdint>

#include "colourlab/colouring.hpp"
#include "colourlab/graph.hpp"
#include "colourlab/random.hpp"

namespace colourlab {

/// m edge instances drawn independently and uniformly from the C(n,2) pairs.
Graph sample_gnm_multigraph(int n, std::int64_t m, Rng& rng);

/// Uniform simple graph with exactly m edges. Edge indices are drawn with
/// Floyd's distinct-sampling algorithm over [0, C(n,2)) and decoded with
/// pair_from_index; the edge list keeps Floyd's insertion order.
Graph sample_gnm_simple(int n, std::int64_t m, Rng& rng);

struct PlantedPair {
  Graph graph;
  Colouring colouring;
};

struct PlantedOptions {
  std::uint64_t max_attempts = 1000000;
};

/// PL1: sigma uniform over maps with Forb(sigma) <= C(n,2) - m (rejection
/// from uniform [k]^n). PL2: a uniform m-subset of the bichromatic pairs.
PlantedPair sample_planted_pair(int n, std::int64_t m, int k, Rng& rng, PlantedOptions options = {});

/// Smallest Forb over all maps [n] -> [k] (attained by the most even split).
std::int64_t min_forb(int n, int k);

/// Most even colouring: vertex v gets colour v mod k.
Colouring balanced_colouring(int n, int k);

/// m edge instances drawn independently and uniformly from the pairs that are
/// bichromatic under `sigma` (the law of the multigraph given that sigma is a
/// colouring of it).
Graph sample_planted_multigraph(const Colouring& sigma, std::int64_t m, Rng& rng);

}  // namespace colourlab
