#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "colourlab/graph.hpp"
#include "colourlab/numeric.hpp"
#include "colourlab/random.hpp"

namespace colourlab {

/// A map [n] -> [k]; colours are stored 0-based.
struct Colouring {
  int k = 0;
  std::vector<int> colours;

  Colouring() = default;
  Colouring(int k, std::vector<int> colours);  // validates range

  int n() const noexcept { return static_cast<int>(colours.size()); }
  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Colour density rho(sigma) = class sizes / n, held as integer class sizes so
/// every entry is an exact multiple of 1/n.
struct ColourDensity {
  int n = 0;
  std::vector<std::int64_t> class_sizes;

  static ColourDensity from_sizes(std::vector<std::int64_t> sizes);  // rejects negatives
  int k() const noexcept { return static_cast<int>(class_sizes.size()); }
  double rho(int i) const { return static_cast<double>(class_sizes[i]) / n; }
  friend bool operator==(const ColourDensity&, const ColourDensity&) = default;
};

/// Finite stand-in for omega(n) in the balance condition
/// |rho_i - 1/k| <= omega^{-1} n^{-1/2}.
struct BalanceParams {
  double omega = 1.0;
};

bool is_proper(const Graph& g, const Colouring& c);

/// Number of monochromatic pairs of K_n: sum_i C(n_i, 2).
std::int64_t forb(const Colouring& c);

ColourDensity colour_density(const Colouring& c);

/// The balance test is evaluated as |k n_i - n| * omega * sqrt(n) <= k n with a
/// relative slack of 1e-12 so exact boundary cases count as balanced.
bool is_balanced(const ColourDensity& rho, BalanceParams params);
bool is_balanced_sizes(int n, const std::vector<std::int64_t>& sizes, double omega);

/// Caps for the exact counter. A connected component of the support larger
/// than `max_component`, or a vertex order whose frontier exceeds
/// `max_frontier`, raises ResourceLimit.
struct CountLimits {
  int max_component = 256;
  int max_frontier = 16;
};

/// Z_k(G): exact number of proper k-colourings. Parallel edges are ignored.
BigInt count_colourings(const Graph& g, int k, CountLimits limits = {});

/// Same count restricted to colourings whose class-size vector passes
/// `is_balanced_sizes`.
BigInt count_balanced_colourings(const Graph& g, int k, BalanceParams params, CountLimits limits = {});

/// Double-precision variants of the two counters for Monte-Carlo loops.
/// Exact up to floating-point rounding of the intermediate sums.
double count_colourings_fp(const Graph& g, int k, CountLimits limits = {});
double count_balanced_colourings_fp(const Graph& g, int k, BalanceParams params, CountLimits limits = {});

/// Proper colourings broken down by class-size vector.
/// `values` is dense over (n_0, ..., n_{k-2}) with extent n+1 per axis;
/// n_{k-1} is implied by the total.
struct ProfileCounts {
  int n = 0;
  int k = 0;
  std::vector<BigInt> values;

  const BigInt& at(const std::vector<std::int64_t>& sizes) const;
};
ProfileCounts count_by_profile(const Graph& g, int k, CountLimits limits = {});

/// Colourings that are proper and use, for vertex v, only colours in
/// allowed[v] (a bit mask). An empty `allowed` means no restriction.
BigInt count_list_colourings(const Graph& g, int k, const std::vector<std::uint32_t>& allowed,
                             CountLimits limits = {});

/// Exactly uniform proper colouring, drawn vertex by vertex with probability
/// proportional to the exact number of proper extensions.
/// Throws InfeasibleInstance when Z_k(g) = 0.
Colouring sample_uniform_colouring(const Graph& g, int k, Rng& rng, CountLimits limits = {});

struct RcOptions {
  int max_n = 64;
  std::uint64_t max_attempts = 1000000;
};

/// RC1-RC2: G(n, m) conditioned on being k-colourable, then a uniform
/// colouring of it.
std::pair<Graph, Colouring> sample_rc_pair(int n, std::int64_t m, int k, Rng& rng, RcOptions options = {});

/// Colourings as whitespace-separated 1-indexed colours.
void write_colouring(std::ostream& out, const Colouring& c);
Colouring read_colouring(std::istream& in, int k);

}  // namespace colourlab
