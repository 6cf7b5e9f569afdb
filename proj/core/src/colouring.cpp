#include "colourlab/colouring.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "colourlab/errors.hpp"
#include "colourlab/models.hpp"

namespace colourlab {

Colouring::Colouring(int k_, std::vector<int> colours_) : k(k_), colours(std::move(colours_)) {
  if (k <= 0) throw InvalidParameter("Colouring: k must be positive");
  for (const int c : colours)
    if (c < 0 || c >= k) throw InvalidParameter("Colouring: colour out of range");
}

ColourDensity ColourDensity::from_sizes(std::vector<std::int64_t> sizes) {
  ColourDensity out;
  std::int64_t total = 0;
  for (const auto s : sizes) {
    if (s < 0) throw InvalidParameter("ColourDensity: negative class size");
    total += s;
  }
  out.n = static_cast<int>(total);
  out.class_sizes = std::move(sizes);
  return out;
}

bool is_proper(const Graph& g, const Colouring& c) {
  if (c.n() != g.n()) throw InvalidParameter("is_proper: colouring length differs from vertex count");
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return c.colours[e.u] == c.colours[e.v]; });
}

ColourDensity colour_density(const Colouring& c) {
  std::vector<std::int64_t> sizes(c.k, 0);
  for (const int x : c.colours) ++sizes[x];
  return ColourDensity::from_sizes(std::move(sizes));
}

std::int64_t forb(const Colouring& c) {
  std::int64_t total = 0;
  for (const auto s : colour_density(c).class_sizes) total += pairs(s);
  return total;
}

bool is_balanced_sizes(int n, const std::vector<std::int64_t>& sizes, double omega) {
  if (!(omega > 0.0)) throw InvalidParameter("balance: omega must be positive");
  if (n <= 0) return true;
  const double k = static_cast<double>(sizes.size());
  const double rhs = k * n;
  const double scale = omega * std::sqrt(static_cast<double>(n));
  for (const auto s : sizes) {
    const double lhs = std::fabs(k * static_cast<double>(s) - n) * scale;
    if (lhs > rhs * (1.0 + 1e-12)) return false;
  }
  return true;
}

bool is_balanced(const ColourDensity& rho, BalanceParams params) {
  return is_balanced_sizes(rho.n, rho.class_sizes, params.omega);
}

namespace {

// Vertex order for the frontier sweep: start from a minimum-degree vertex,
// then repeatedly add the candidate adjacent to the processed set that keeps
// the frontier smallest (ties: more processed neighbours, then lower index).
std::vector<int> sweep_order(const std::vector<int>& comp, const std::vector<std::vector<int>>& adj) {
  const std::size_t c = comp.size();
  std::vector<int> order;
  order.reserve(c);
  if (c == 0) return order;

  std::unordered_map<int, int> rem;  // unprocessed-neighbour count per vertex
  std::unordered_map<int, bool> done;
  for (const int v : comp) {
    rem[v] = static_cast<int>(adj[v].size());
    done[v] = false;
  }
  int start = comp.front();
  for (const int v : comp)
    if (adj[v].size() < adj[start].size()) start = v;

  std::vector<int> candidates{start};
  while (order.size() < c) {
    int best = -1, best_score = std::numeric_limits<int>::max(), best_proc = -1;
    for (const int v : candidates) {
      if (done[v]) continue;
      int proc = 0, removed = 0;
      for (const int u : adj[v])
        if (done[u]) {
          ++proc;
          if (rem[u] == 1) ++removed;
        }
      const int joins = (static_cast<int>(adj[v].size()) - proc) > 0 ? 1 : 0;
      const int score = joins - removed;
      if (score < best_score || (score == best_score && (proc > best_proc || (proc == best_proc && v < best)))) {
        best = v;
        best_score = score;
        best_proc = proc;
      }
    }
    done[best] = true;
    order.push_back(best);
    for (const int u : adj[best]) {
      --rem[u];
      if (!done[u]) candidates.push_back(u);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(), [&](int v) { return done[v]; }),
                     candidates.end());
  }
  return order;
}

// Counts proper (list-)colourings of one connected component with a sweep
// over `order`. The DP state is the colouring of the frontier (processed
// vertices that still have unprocessed neighbours). With `profile` set, every
// state carries a dense table over the class sizes of colours 0..k-2 among the
// processed vertices (extent c+1 per axis); otherwise the table has one cell.
template <class T>
std::vector<T> sweep_count(const std::vector<int>& comp, const std::vector<std::vector<int>>& adj, int k,
                           const std::vector<std::uint32_t>& allowed, bool profile, const CountLimits& limits) {
  const int c = static_cast<int>(comp.size());
  if (c > limits.max_component)
    throw ResourceLimit("exact counting: component of size " + std::to_string(c) + " exceeds cap " +
                        std::to_string(limits.max_component));
  const auto order = sweep_order(comp, adj);

  std::size_t table_size = 1;
  std::vector<std::size_t> stride(k, 0);
  if (profile) {
    for (int a = 0; a < k - 1; ++a) {
      stride[a] = table_size;
      table_size *= static_cast<std::size_t>(c + 1);
    }
  }

  const std::uint32_t full = k >= 32 ? ~0u : ((1u << k) - 1u);
  auto allowed_of = [&](int v) { return allowed.empty() ? full : (allowed[v] & full); };

  // remaining unprocessed neighbours
  std::unordered_map<int, int> rem;
  for (const int v : comp) rem[v] = static_cast<int>(adj[v].size());

  const int max_width = std::min(limits.max_frontier, static_cast<int>(63.0 / std::log2(std::max(k, 2))));

  std::vector<int> frontier;
  std::unordered_map<std::uint64_t, std::size_t> index{{0, 0}};
  std::vector<std::uint64_t> codes{0};
  std::vector<std::vector<T>> tables(1, std::vector<T>(table_size, T(0)));
  tables[0][0] = T(1);

  std::vector<std::uint64_t> power(static_cast<std::size_t>(max_width) + 2, 1);
  for (std::size_t i = 1; i < power.size(); ++i) power[i] = power[i - 1] * static_cast<std::uint64_t>(k);

  std::vector<int> digits;
  for (int t = 0; t < c; ++t) {
    const int v = order[t];
    // frontier slots holding neighbours of v
    std::vector<int> nbr_slots;
    for (std::size_t s = 0; s < frontier.size(); ++s)
      if (std::binary_search(adj[v].begin(), adj[v].end(), frontier[s])) nbr_slots.push_back(static_cast<int>(s));
    for (const int u : adj[v]) --rem[u];

    std::vector<int> keep;  // old slots that stay on the frontier
    for (std::size_t s = 0; s < frontier.size(); ++s)
      if (rem[frontier[s]] > 0) keep.push_back(static_cast<int>(s));
    const bool v_stays = rem[v] > 0;
    const int new_width = static_cast<int>(keep.size()) + (v_stays ? 1 : 0);
    if (new_width > max_width)
      throw ResourceLimit("exact counting: frontier width " + std::to_string(new_width) + " exceeds cap in component of size " +
                          std::to_string(c));

    std::unordered_map<std::uint64_t, std::size_t> next_index;
    std::vector<std::uint64_t> next_codes;
    std::vector<std::vector<T>> next_tables;
    const std::uint32_t mask = allowed_of(v);

    for (std::size_t st = 0; st < codes.size(); ++st) {
      digits.assign(frontier.size(), 0);
      std::uint64_t code = codes[st];
      for (std::size_t s = 0; s < frontier.size(); ++s) {
        digits[s] = static_cast<int>(code % k);
        code /= k;
      }
      std::uint32_t blocked = 0;
      for (const int s : nbr_slots) blocked |= 1u << digits[s];
      std::uint64_t base = 0;
      for (std::size_t i = 0; i < keep.size(); ++i) base += power[i] * static_cast<std::uint64_t>(digits[keep[i]]);
      const auto& src = tables[st];
      for (int a = 0; a < k; ++a) {
        if (!(mask >> a & 1u) || (blocked >> a & 1u)) continue;
        const std::uint64_t ncode = base + (v_stays ? power[keep.size()] * static_cast<std::uint64_t>(a) : 0);
        auto [it, inserted] = next_index.try_emplace(ncode, next_codes.size());
        if (inserted) {
          next_codes.push_back(ncode);
          next_tables.emplace_back(table_size, T(0));
        }
        auto& dst = next_tables[it->second];
        const std::size_t shift = stride[a];
        if (profile) {
          for (std::size_t i = 0; i + shift < table_size; ++i)
            if (src[i] != 0) dst[i + shift] += src[i];
        } else {
          dst[0] += src[0];
        }
      }
    }
    std::vector<int> next_frontier;
    for (const int s : keep) next_frontier.push_back(frontier[s]);
    if (v_stays) next_frontier.push_back(v);
    frontier = std::move(next_frontier);
    codes = std::move(next_codes);
    tables = std::move(next_tables);
    index = std::move(next_index);
    if (codes.empty()) break;
  }

  std::vector<T> out(table_size, T(0));
  for (const auto& tab : tables)
    for (std::size_t i = 0; i < table_size; ++i) out[i] += tab[i];
  return out;
}

template <class T>
T count_total(const Graph& g, int k, const std::vector<std::uint32_t>& allowed, const CountLimits& limits) {
  if (k <= 0) throw InvalidParameter("count: k must be positive");
  if (k > 31) throw InvalidParameter("count: k must be at most 31");
  if (!allowed.empty() && static_cast<int>(allowed.size()) != g.n())
    throw InvalidParameter("count: allowed-colour list length differs from n");
  const auto adj = simple_adjacency(g);
  T total(1);
  for (const auto& comp : connected_components(g)) {
    const auto part = sweep_count<T>(comp, adj, k, allowed, false, limits);
    total *= part[0];
    if (total == 0) break;
  }
  return total;
}

// Dense (k-1)-dimensional tables with a common extent E = n+1; class sizes
// never exceed n so index arithmetic never carries.
struct DenseIndex {
  int k;
  std::size_t extent;
  std::size_t size() const {
    std::size_t s = 1;
    for (int a = 0; a < k - 1; ++a) s *= extent;
    return s;
  }
  std::size_t of(const std::vector<std::int64_t>& sizes) const {
    std::size_t idx = 0, w = 1;
    for (int a = 0; a < k - 1; ++a) {
      idx += static_cast<std::size_t>(sizes[a]) * w;
      w *= extent;
    }
    return idx;
  }
  void decode(std::size_t idx, std::vector<std::int64_t>& out) const {
    out.assign(k - 1, 0);
    for (int a = 0; a < k - 1; ++a) {
      out[a] = static_cast<std::int64_t>(idx % extent);
      idx /= extent;
    }
  }
};

// Per-component profile tables, convolved into a table over the non-isolated
// vertices; returns (table, number of unconstrained isolated vertices).
template <class T>
std::pair<std::vector<T>, int> profile_table(const Graph& g, int k, const CountLimits& limits, DenseIndex& dense) {
  const auto adj = simple_adjacency(g);
  dense = DenseIndex{k, static_cast<std::size_t>(g.n()) + 1};
  std::vector<T> acc(dense.size(), T(0));
  acc[0] = T(1);
  std::vector<std::size_t> nonzero{0};
  int isolated = 0;
  std::vector<std::int64_t> local;

  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) {
      ++isolated;
      continue;
    }
    const auto tab = sweep_count<T>(comp, adj, k, {}, true, limits);
    const DenseIndex cidx{k, comp.size() + 1};
    std::vector<std::pair<std::size_t, T>> terms;
    for (std::size_t i = 0; i < tab.size(); ++i) {
      if (tab[i] == 0) continue;
      cidx.decode(i, local);
      terms.emplace_back(dense.of(local), tab[i]);
    }
    std::vector<T> next(dense.size(), T(0));
    std::vector<std::size_t> next_nz;
    for (const auto a : nonzero)
      for (const auto& [b, w] : terms) {
        auto& cell = next[a + b];
        if (cell == 0) next_nz.push_back(a + b);
        cell += acc[a] * w;
      }
    std::sort(next_nz.begin(), next_nz.end());
    next_nz.erase(std::unique(next_nz.begin(), next_nz.end()), next_nz.end());
    acc = std::move(next);
    nonzero = std::move(next_nz);
    if (nonzero.empty()) break;
  }
  return {std::move(acc), isolated};
}

template <class T>
T multinomial_as(const std::vector<std::int64_t>& parts, const std::vector<double>& logfact);

template <>
BigInt multinomial_as<BigInt>(const std::vector<std::int64_t>& parts, const std::vector<double>&) {
  return multinomial(parts);
}

template <>
double multinomial_as<double>(const std::vector<std::int64_t>& parts, const std::vector<double>& logfact) {
  std::int64_t total = 0;
  double l = 0.0;
  for (const auto p : parts) {
    total += p;
    l -= logfact[p];
  }
  l += logfact[total];
  return std::exp(l);
}

// Enumerates all class-size vectors of n into k parts accepted by `keep`.
void for_each_size_vector(int n, int k, const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                          const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> cur(k, 0);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
    if (i == k - 1) {
      if (left >= lo[i] && left <= hi[i]) {
        cur[i] = left;
        fn(cur);
      }
      return;
    }
    for (std::int64_t s = lo[i]; s <= std::min(hi[i], left); ++s) {
      cur[i] = s;
      rec(i + 1, left - s);
    }
  };
  rec(0, n);
}

template <class T>
T count_balanced(const Graph& g, int k, BalanceParams params, const CountLimits& limits) {
  if (k <= 0 || k > 31) throw InvalidParameter("count: k must be in 1..31");
  if (!(params.omega > 0.0)) throw InvalidParameter("count: omega must be positive");
  const int n = g.n();
  if (n == 0) return T(1);

  // Range of balanced class sizes.
  const double half_width = static_cast<double>(n) / (params.omega * std::sqrt(static_cast<double>(n)));
  std::vector<std::int64_t> lo(k), hi(k);
  for (int a = 0; a < k; ++a) {
    lo[a] = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(static_cast<double>(n) / k - half_width)) - 1);
    hi[a] = std::min<std::int64_t>(n, static_cast<std::int64_t>(std::ceil(static_cast<double>(n) / k + half_width)) + 1);
  }
  std::vector<std::vector<std::int64_t>> balanced;
  for_each_size_vector(n, k, lo, hi, [&](const std::vector<std::int64_t>& s) {
    if (is_balanced_sizes(n, s, params.omega)) balanced.push_back(s);
  });
  if (balanced.empty()) return T(0);

  DenseIndex dense{k, 1};
  auto [acc, isolated] = profile_table<T>(g, k, limits, dense);
  const auto logfact = log_factorials(static_cast<std::size_t>(n));

  T total(0);
  std::vector<std::int64_t> p, q(k);
  for (std::size_t idx = 0; idx < acc.size(); ++idx) {
    if (acc[idx] == 0) continue;
    dense.decode(idx, p);
    std::int64_t ps = 0;
    for (const auto x : p) ps += x;
    const std::int64_t s = n - isolated;  // vertices covered by acc
    if (ps > s) continue;
    for (const auto& b : balanced) {
      bool ok = true;
      std::int64_t qs = 0;
      for (int a = 0; a < k - 1; ++a) {
        q[a] = b[a] - p[a];
        if (q[a] < 0) {
          ok = false;
          break;
        }
        qs += q[a];
      }
      if (!ok) continue;
      q[k - 1] = b[k - 1] - (s - ps);
      if (q[k - 1] < 0 || qs + q[k - 1] != isolated) continue;
      total += acc[idx] * multinomial_as<T>(q, logfact);
    }
  }
  return total;
}

BigInt uniform_below(const BigInt& bound, Rng& rng) {
  if (bound <= 0) throw InvalidParameter("uniform_below: bound must be positive");
  const auto bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    BigInt x = 0;
    std::size_t have = 0;
    while (have < bits) {
      x <<= 64;
      x |= BigInt(rng.next());
      have += 64;
    }
    x >>= static_cast<unsigned>(have - bits);
    if (x < bound) return x;
  }
}

}  // namespace

BigInt count_colourings(const Graph& g, int k, CountLimits limits) { return count_total<BigInt>(g, k, {}, limits); }

double count_colourings_fp(const Graph& g, int k, CountLimits limits) { return count_total<double>(g, k, {}, limits); }

BigInt count_list_colourings(const Graph& g, int k, const std::vector<std::uint32_t>& allowed, CountLimits limits) {
  return count_total<BigInt>(g, k, allowed, limits);
}

BigInt count_balanced_colourings(const Graph& g, int k, BalanceParams params, CountLimits limits) {
  return count_balanced<BigInt>(g, k, params, limits);
}

double count_balanced_colourings_fp(const Graph& g, int k, BalanceParams params, CountLimits limits) {
  return count_balanced<double>(g, k, params, limits);
}

const BigInt& ProfileCounts::at(const std::vector<std::int64_t>& sizes) const {
  static const BigInt zero = 0;
  if (static_cast<int>(sizes.size()) != k) throw InvalidParameter("ProfileCounts::at: wrong number of classes");
  std::int64_t total = 0;
  for (const auto s : sizes) {
    if (s < 0) return zero;
    total += s;
  }
  if (total != n) return zero;
  const DenseIndex dense{k, static_cast<std::size_t>(n) + 1};
  return values[dense.of(sizes)];
}

ProfileCounts count_by_profile(const Graph& g, int k, CountLimits limits) {
  if (k <= 0 || k > 31) throw InvalidParameter("count: k must be in 1..31");
  DenseIndex dense{k, 1};
  auto [acc, isolated] = profile_table<BigInt>(g, k, limits, dense);
  // Fold the isolated vertices in one at a time.
  for (int i = 0; i < isolated; ++i) {
    std::vector<BigInt> next(acc.size(), 0);
    std::vector<std::int64_t> p;
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
      if (acc[idx] == 0) continue;
      dense.decode(idx, p);
      next[idx] += acc[idx];  // colour k-1
      for (int a = 0; a < k - 1; ++a) {
        auto q = p;
        ++q[a];
        if (q[a] >= static_cast<std::int64_t>(dense.extent)) continue;
        std::size_t j = 0, w = 1;
        for (int b = 0; b < k - 1; ++b) {
          j += static_cast<std::size_t>(q[b]) * w;
          w *= dense.extent;
        }
        next[j] += acc[idx];
      }
    }
    acc = std::move(next);
  }
  return ProfileCounts{g.n(), k, std::move(acc)};
}

Colouring sample_uniform_colouring(const Graph& g, int k, Rng& rng, CountLimits limits) {
  if (k <= 0 || k > 31) throw InvalidParameter("sample_uniform_colouring: k must be in 1..31");
  const std::uint32_t full = (1u << k) - 1u;
  std::vector<std::uint32_t> allowed(g.n(), full);
  const auto adj = simple_adjacency(g);
  std::vector<int> colours(g.n(), 0);

  for (const auto& comp : connected_components(g)) {
    for (const int v : comp) {
      std::vector<BigInt> weight(k, 0);
      BigInt total = 0;
      for (int a = 0; a < k; ++a) {
        allowed[v] = 1u << a;
        weight[a] = sweep_count<BigInt>(comp, adj, k, allowed, false, limits)[0];
        total += weight[a];
      }
      if (total == 0) throw InfeasibleInstance("sample_uniform_colouring: graph has no proper " + std::to_string(k) + "-colouring");
      BigInt r = uniform_below(total, rng);
      int chosen = 0;
      for (int a = 0; a < k; ++a) {
        if (r < weight[a]) {
          chosen = a;
          break;
        }
        r -= weight[a];
      }
      allowed[v] = 1u << chosen;
      colours[v] = chosen;
    }
  }
  return Colouring(k, std::move(colours));
}

std::pair<Graph, Colouring> sample_rc_pair(int n, std::int64_t m, int k, Rng& rng, RcOptions options) {
  if (n > options.max_n) throw ResourceLimit("sample_rc_pair: n = " + std::to_string(n) + " exceeds cap " + std::to_string(options.max_n));
  for (std::uint64_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    Graph g = sample_gnm_simple(n, m, rng);
    if (count_colourings(g, k) == 0) continue;
    Colouring c = sample_uniform_colouring(g, k, rng);
    return {std::move(g), std::move(c)};
  }
  throw ResourceLimit("sample_rc_pair: no colourable graph within " + std::to_string(options.max_attempts) + " attempts");
}

void write_colouring(std::ostream& out, const Colouring& c) {
  for (int i = 0; i < c.n(); ++i) out << (i ? " " : "") << c.colours[i] + 1;
  out << '\n';
}

Colouring read_colouring(std::istream& in, int k) {
  std::vector<int> colours;
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    ++position;
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("token " + std::to_string(position) + " ('" + token + "') is not an integer", 0);
    if (value < 1 || value > k)
      throw ParseError("token " + std::to_string(position) + ": colour " + token + " outside 1.." + std::to_string(k), 0);
    colours.push_back(static_cast<int>(value - 1));
  }
  return Colouring(k, std::move(colours));
}

}  // namespace colourlab
