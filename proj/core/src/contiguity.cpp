#include <algorithm>
#include <cmath>

#include "colourlab/colouring.hpp"
#include "colourlab/errors.hpp"
#include "colourlab/experiments.hpp"
#include "colourlab/graph.hpp"
#include "colourlab/numeric.hpp"

namespace colourlab {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational abs_r(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Membership of (graph g, colouring s) in random event e.
bool in_event(std::uint64_t seed, int e, std::int64_t g, std::int64_t s) {
  const std::uint64_t h = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(e) * 0x9E3779B97F4A7C15ULL ^
                                                       splitmix64(static_cast<std::uint64_t>(g) << 20 ^
                                                                  static_cast<std::uint64_t>(s))));
  return (h >> 63) != 0;
}

}  // namespace

ExperimentRecord exp_contiguity_enum(const ContiguityConfig& cfg) {
  if (cfg.n < 2 || cfg.k < 2 || cfg.m < 0 || cfg.events < 0)
    throw InvalidParameter("contiguity_enum: need n >= 2, k >= 2, m >= 0, events >= 0");
  const std::int64_t big_n = pair_count(cfg.n);
  if (cfg.m > big_n) throw InvalidParameter("contiguity_enum: m exceeds C(n,2)");
  const BigInt graphs_big = binomial(big_n, cfg.m);
  BigInt maps_big = boost::multiprecision::pow(BigInt(cfg.k), static_cast<unsigned>(cfg.n));
  if (graphs_big * maps_big > cfg.max_pairs) throw ResourceLimit("contiguity_enum: C(C(n,2),m) * k^n exceeds max_pairs");
  const auto graphs = graphs_big.convert_to<std::int64_t>();
  const auto maps = maps_big.convert_to<std::int64_t>();

  ExperimentRecord rec;
  rec.name = "contiguity_enum";
  rec.params = {{"n", cfg.n}, {"m", cfg.m}, {"k", cfg.k}, {"events", cfg.events}, {"seed", cfg.seed},
                {"model", "simple"}};

  // colours of every map, and Forb
  std::vector<std::vector<int>> colour(static_cast<std::size_t>(maps));
  std::vector<std::int64_t> forb_of(static_cast<std::size_t>(maps));
  for (std::int64_t s = 0; s < maps; ++s) {
    std::vector<int> c(static_cast<std::size_t>(cfg.n));
    std::int64_t x = s;
    for (int v = 0; v < cfg.n; ++v) {
      c[v] = static_cast<int>(x % cfg.k);
      x /= cfg.k;
    }
    forb_of[s] = forb(Colouring(cfg.k, c));
    colour[s] = std::move(c);
  }

  // proper[g * maps + s]
  std::vector<char> proper(static_cast<std::size_t>(graphs * maps), 0);
  std::vector<std::int64_t> z(static_cast<std::size_t>(graphs), 0);
  {
    std::vector<std::int64_t> pick(static_cast<std::size_t>(cfg.m));
    for (std::int64_t i = 0; i < cfg.m; ++i) pick[i] = i;
    for (std::int64_t g = 0; g < graphs; ++g) {
      std::vector<Edge> edges;
      for (const auto p : pick) edges.push_back(pair_from_index(p));
      for (std::int64_t s = 0; s < maps; ++s) {
        const auto& c = colour[s];
        const bool ok = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return c[e.u] != c[e.v]; });
        proper[static_cast<std::size_t>(g * maps + s)] = ok ? 1 : 0;
        z[g] += ok ? 1 : 0;
      }
      // next m-subset in lexicographic order
      std::int64_t i = cfg.m - 1;
      while (i >= 0 && pick[i] == big_n - cfg.m + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::int64_t j = i + 1; j < cfg.m; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  const auto colourable = std::count_if(z.begin(), z.end(), [](std::int64_t v) { return v > 0; });
  std::int64_t admissible = 0;
  for (std::int64_t s = 0; s < maps; ++s)
    if (forb_of[s] <= big_n - cfg.m) ++admissible;
  std::vector<std::int64_t> bichromatic_graphs(static_cast<std::size_t>(maps), 0);
  for (std::int64_t g = 0; g < graphs; ++g)
    for (std::int64_t s = 0; s < maps; ++s) bichromatic_graphs[s] += proper[static_cast<std::size_t>(g * maps + s)];

  Rational sum_rc = 0, sum_pl = 0, tv = 0, max_construction_diff = 0, max_lr = 0, max_abs_diff = 0;
  bool support_ok = true;
  for (std::int64_t g = 0; g < graphs; ++g)
    for (std::int64_t s = 0; s < maps; ++s) {
      const bool ok = proper[static_cast<std::size_t>(g * maps + s)] != 0;
      const Rational p_rc = ok ? Rational(1, z[g] * colourable) : Rational(0);
      Rational p_pl = 0, two_step = 0;
      if (ok) {
        p_pl = Rational(BigInt(1), BigInt(admissible) * binomial(big_n - forb_of[s], cfg.m));
        two_step = Rational(1, admissible) * Rational(1, bichromatic_graphs[s]);
      }
      if (p_rc > 0 && p_pl == 0) support_ok = false;
      max_construction_diff = std::max(max_construction_diff, abs_r(p_pl - two_step));
      sum_rc += p_rc;
      sum_pl += p_pl;
      tv += abs_r(p_rc - p_pl);
      max_abs_diff = std::max(max_abs_diff, abs_r(p_rc - p_pl));
      if (p_rc > 0 && p_pl > 0) max_lr = std::max(max_lr, Rational(p_rc / p_pl));
    }
  tv /= 2;

  // E[Z 1_A] = sum_sigma P[G(n,m,sigma) in A] P[sigma is a colouring of G(n,m)]
  int identity_holds = 0;
  Rational worst_identity_gap = 0;
  for (int e = 0; e < cfg.events; ++e) {
    BigInt lhs_count = 0;
    for (std::int64_t g = 0; g < graphs; ++g)
      for (std::int64_t s = 0; s < maps; ++s)
        if (proper[static_cast<std::size_t>(g * maps + s)] && in_event(cfg.seed, e, g, s)) ++lhs_count;
    const Rational lhs(lhs_count, graphs_big);
    Rational rhs = 0;
    for (std::int64_t s = 0; s < maps; ++s) {
      const BigInt free_graphs = binomial(big_n - forb_of[s], cfg.m);
      if (free_graphs == 0) continue;
      std::int64_t in_a = 0;
      for (std::int64_t g = 0; g < graphs; ++g)
        if (proper[static_cast<std::size_t>(g * maps + s)] && in_event(cfg.seed, e, g, s)) ++in_a;
      rhs += Rational(BigInt(in_a), free_graphs) * Rational(free_graphs, graphs_big);
    }
    if (lhs == rhs) ++identity_holds;
    worst_identity_gap = std::max(worst_identity_gap, abs_r(lhs - rhs));
  }

  rec.statistics = {{"graphs", graphs},
                    {"maps", maps},
                    {"colourable_graphs", colourable},
                    {"admissible_maps", admissible},
                    {"tv_distance", to_double(tv)},
                    {"max_likelihood_ratio", to_double(max_lr)},
                    {"max_abs_difference", to_double(max_abs_diff)},
                    {"planted_display_factor", static_cast<double>(admissible) / static_cast<double>(maps)}};
  rec.check("sum of P_rc", to_double(sum_rc), 1.0, 0.0, sum_rc == 1);
  rec.check("sum of P_pl", to_double(sum_pl), 1.0, 0.0, sum_pl == 1);
  rec.check("P_pl vs two-step construction", to_double(max_construction_diff), 0.0, 1e-12,
            to_double(max_construction_diff) <= 1e-12);
  rec.check("P_rc > 0 implies P_pl > 0", support_ok ? 1.0 : 0.0, 1.0, 0.0, support_ok);
  rec.check("E[Z 1_A] identity (events holding exactly)", identity_holds, cfg.events, 0.0,
            identity_holds == cfg.events);
  rec.statistics["max_identity_gap"] = to_double(worst_identity_gap);
  return rec;
}

}  // namespace colourlab
