#pragma once

#include <cstdint>
#include <vector>

#include "colourlab/random.hpp"
#include "colourlab/record.hpp"

namespace colourlab {

// Every experiment is a pure function of its config: trial i draws from
// RandomSource{seed, tag}.child(i) whatever the thread count, and results are
// merged in trial order. threads = 0 uses the hardware concurrency.

struct PoissonCyclesConfig {
  int n = 1000;
  double d = 2.0;
  int L = 3;
  int trials = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
};

/// Cycle counts of the multigraph against independent Po(lambda_l).
ExperimentRecord exp_poisson_cycles(const PoissonCyclesConfig& cfg);

struct PlantedCyclesConfig {
  int n = 999;
  double d = 2.0;
  int k = 3;
  int L = 3;
  int trials = 10000;
  std::vector<int> intersect_n = {250, 500, 1000};
  int intersect_trials = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
};

/// Cycle counts of the planted multigraph (balanced sigma, m edges uniform
/// over bichromatic pairs) against Po(mu_l), plus the frequency of two
/// vertex-intersecting cycles of length <= L across intersect_n.
ExperimentRecord exp_planted_cycles(const PlantedCyclesConfig& cfg);

struct ConditionedRatioConfig {
  int n = 60;
  double d = 1.0;
  int k = 3;
  double omega = 1.0;
  std::vector<std::int64_t> x = {0};  ///< x_2, ..., x_L
  int trials = 100000;
  int min_hits = 100;
  double tolerance = 0.10;  ///< relative
  std::uint64_t seed = 1;
  int threads = 0;
};

/// Monte-Carlo E[Z_{k,omega} | C_l = x_l, l <= L] / E[Z_{k,omega}] with exact
/// per-sample counts and the exact denominator. Throws InsufficientSamples
/// when fewer than min_hits samples match x.
ExperimentRecord exp_conditioned_ratio(const ConditionedRatioConfig& cfg);

struct WSample {
  double value = 1.0;
  int truncation = 1;       ///< last l included
  double tail_bound = 0.0;  ///< error bound on ln W from the omitted l
};

/// Tail bound for ln W after truncating at L:
/// |sum_{l>L} lambda_l (ln(1+delta_l) - delta_l)| + 3 sqrt(sum_{l>L} lambda_l ln^2(1+delta_l)).
double w_tail_bound(double d, int k, int L);

/// Smallest L >= 2 whose tail bound is below eps_tail. Throws DomainError
/// when d >= (k-1)^2.
int w_truncation(double d, int k, double eps_tail);

/// W = prod_{l<=L} (1+delta_l)^{X_l} exp(-lambda_l delta_l), X_l ~ Po(lambda_l).
WSample sample_W(double d, int k, double eps_tail, Rng& rng);

struct LimitDistributionConfig {
  std::vector<int> n_list = {30, 60, 120};
  double d = 1.0;
  int k = 3;
  double omega = 0.0;  ///< 0 means ln n for each n
  int trials = 2000;
  int w_samples = 1000000;
  double eps_tail = 1e-6;
  double ks_final = 0.1;
  std::uint64_t seed = 1;
  int threads = 0;
};

/// E[W] = 1 by Monte Carlo, and the KS distance between Z_{k,omega}/E[Z_{k,omega}]
/// over the multigraph and W for each n.
ExperimentRecord exp_limit_distribution(const LimitDistributionConfig& cfg);

struct ConcentrationConfig {
  std::vector<int> n_list = {30, 60, 120};
  double d = 1.0;
  int k = 3;
  int L = 12;
  int trials = 1000;
  int regression_n = 120;
  double slope_tolerance = 0.15;
  int grafted_triangles = 3;
  std::uint64_t seed = 1;
  int threads = 0;
};

/// ln Z_k(G(n,m)) - ln E[Z_k(G(n,m))] for the simple model with the exact
/// denominator, its regression on sum_l C_l ln(1+delta_l), and the exact
/// effect of grafting isolated triangles.
ExperimentRecord exp_concentration(const ConcentrationConfig& cfg);

struct ContiguityConfig {
  int n = 5;
  std::int64_t m = 5;
  int k = 3;
  int events = 20;
  std::uint64_t seed = 1;
  std::int64_t max_pairs = 20000000;  ///< cap on C(C(n,2), m) * k^n
};

/// Exact random-colouring and planted distributions over all (G, sigma)
/// with G a simple graph with m edges.
ExperimentRecord exp_contiguity_enum(const ContiguityConfig& cfg);

struct ClusterConfig {
  int n = 6;
  std::int64_t m = 4;
  int k = 3;
  double omega = 1.0;
  int trials = 20;
  std::uint64_t seed = 1;
  int max_n = 10;
};

/// For sampled simple graphs, the number of balanced colourings tau whose
/// overlap with sigma is k-stable, for every balanced colouring sigma.
ExperimentRecord exp_cluster_tiny(const ClusterConfig& cfg);

}  // namespace colourlab
