#include "colourlab/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "colourlab/colouring.hpp"
#include "colourlab/cycles.hpp"
#include "colourlab/errors.hpp"
#include "colourlab/experiments.hpp"
#include "colourlab/graph.hpp"
#include "colourlab/models.hpp"
#include "colourlab/moments.hpp"
#include "colourlab/overlap.hpp"
#include "colourlab/record.hpp"

namespace colourlab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    try {
      if constexpr (std::is_integral_v<T>)
        out.push_back(static_cast<T>(std::stoll(item, &used)));
      else
        out.push_back(static_cast<T>(std::stod(item, &used)));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
  }
  return out;
}

std::filesystem::path output_path(const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  return path;
}

std::ofstream open_output(const std::string& p) {
  const auto path = output_path(p);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path.string());
  return f;
}

Graph load_graph(const std::string& p) {
  std::ifstream f(p);
  if (!f) throw UsageError("cannot open graph file " + p);
  return read_graph(f);
}

// Optional numeric flag: the value is only meaningful when given() is true.
template <class T>
struct Flag {
  T value{};
  CLI::Option* opt = nullptr;
  bool given() const { return opt && opt->count() > 0; }
};

template <class T>
void add(CLI::App* app, Flag<T>& f, const std::string& name, const std::string& help) {
  f.opt = app->add_option(name, f.value, help);
}

struct SizeFlags {
  Flag<int> n;
  Flag<std::int64_t> m;
  Flag<double> d;

  void attach(CLI::App* app) {
    add(app, n, "--n", "number of vertices");
    add(app, m, "--m", "number of edges (exclusive with --d)");
    add(app, d, "--d", "average degree; m = ceil(d n / 2) (exclusive with --m)");
  }
  int need_n() const {
    if (!n.given()) throw UsageError("--n is required");
    return n.value;
  }
  // Resolves (m, d) from whichever one was supplied.
  std::pair<std::int64_t, double> resolve() const {
    const int nv = need_n();
    if (m.given() == d.given()) throw UsageError("exactly one of --m and --d must be given");
    if (m.given()) {
      if (m.value < 0) throw UsageError("--m must be non-negative");
      return {m.value, 2.0 * static_cast<double>(m.value) / nv};
    }
    return {edges_for_degree(nv, d.value), d.value};
  }
  double need_d() const {
    if (m.given() && d.given()) throw UsageError("exactly one of --m and --d may be given");
    if (d.given()) return d.value;
    if (m.given() && n.given()) return 2.0 * static_cast<double>(m.value) / n.value;
    throw UsageError("--d is required");
  }
};

void print_value(std::ostream& out, const std::string& format, const std::string& name, const json& params,
                 double value, const double* log_value = nullptr) {
  if (format == "json") {
    json j{{"name", name}, {"params", params}, {"value", value}};
    if (log_value) j["log_value"] = *log_value;
    out << round_floats(j).dump() << '\n';
  } else {
    out << format_number(value) << '\n';
  }
}

json edges_json(const Graph& g) {
  json e = json::array();
  for (const auto& x : g.edges()) e.push_back({x.u + 1, x.v + 1});
  return e;
}

json colouring_json(const Colouring& c) {
  json a = json::array();
  for (const int x : c.colours) a.push_back(x + 1);
  return a;
}

// ---- subcommands -----------------------------------------------------------

struct SampleCmd {
  std::string model = "gnm";
  SizeFlags size;
  int k = 3;
  Flag<std::uint64_t> seed;
  std::uint64_t stream = 0;
  std::string out_path, colouring_path;

  void attach(CLI::App* app) {
    app->add_option("--model", model, "gnm | multi | planted | rc")
        ->check(CLI::IsMember({"gnm", "multi", "planted", "rc"}));
    size.attach(app);
    app->add_option("--k", k, "number of colours (planted, rc)");
    add(app, seed, "--seed", "random seed (required)");
    app->add_option("--stream", stream, "stream id");
    app->add_option("--out", out_path, "write the graph to this file");
    app->add_option("--colouring-out", colouring_path, "write the colouring to this file");
  }

  int run(std::ostream& out) const {
    if (!seed.given()) throw UsageError("--seed is required for sampling");
    const auto [m, d] = size.resolve();
    const int n = size.need_n();
    Rng rng(RandomSource{seed.value, stream});
    Graph g;
    std::optional<Colouring> c;
    if (model == "gnm") {
      g = sample_gnm_simple(n, m, rng);
    } else if (model == "multi") {
      g = sample_gnm_multigraph(n, m, rng);
    } else if (model == "planted") {
      auto p = sample_planted_pair(n, m, k, rng);
      g = std::move(p.graph);
      c = std::move(p.colouring);
    } else {
      auto p = sample_rc_pair(n, m, k, rng);
      g = std::move(p.first);
      c = std::move(p.second);
    }
    json rec{{"command", "sample"},
             {"params", {{"model", model}, {"n", n}, {"m", m}, {"d", d}, {"k", k}, {"seed", seed.value},
                         {"stream", stream}}}};
    if (!out_path.empty()) {
      auto f = open_output(out_path);
      write_graph(f, g);
      rec["graph_file"] = output_path(out_path).string();
    } else {
      rec["edges"] = edges_json(g);
    }
    if (c) {
      if (!colouring_path.empty()) {
        auto f = open_output(colouring_path);
        write_colouring(f, *c);
        rec["colouring_file"] = output_path(colouring_path).string();
      } else {
        rec["colouring"] = colouring_json(*c);
      }
    }
    out << round_floats(rec).dump() << '\n';
    return kOk;
  }
};

struct CountCmd {
  std::string graph;
  int k = 3;
  Flag<double> omega;
  bool balanced = false;
  CountLimits limits;
  std::string format = "text";

  void attach(CLI::App* app) {
    app->add_option("--graph", graph, "graph file")->required();
    app->add_option("--k", k, "number of colours")->required();
    app->add_flag("--balanced", balanced, "count (omega, n)-balanced colourings only");
    add(app, omega, "--omega", "balance parameter (implies --balanced; default 1)");
    app->add_option("--max-component", limits.max_component, "largest component the counter accepts");
    app->add_option("--max-frontier", limits.max_frontier, "widest frontier the counter accepts");
    app->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  }

  int run(std::ostream& out) const {
    const Graph g = load_graph(graph);
    const bool bal = balanced || omega.given();
    const double w = omega.given() ? omega.value : 1.0;
    const BigInt z = bal ? count_balanced_colourings(g, k, BalanceParams{w}, limits) : count_colourings(g, k, limits);
    if (format == "json") {
      json params{{"graph", graph}, {"n", g.n()}, {"m", g.m()}, {"k", k}};
      if (bal) params["omega"] = w;
      json value = z <= std::numeric_limits<std::int64_t>::max() ? json(z.convert_to<std::int64_t>()) : json(z.str());
      out << round_floats(json{{"name", bal ? "count_balanced" : "count"}, {"params", params}, {"value", value}}).dump()
          << '\n';
    } else {
      out << z.str() << '\n';
    }
    return kOk;
  }
};

struct CensusCmd {
  std::string graph;
  int L = 4;

  void attach(CLI::App* app) {
    app->add_option("--graph", graph, "graph file")->required();
    app->add_option("--L", L, "longest cycle length counted");
  }
  int run(std::ostream& out) const {
    if (L < 2) throw UsageError("--L must be at least 2");
    const auto c = cycle_census(load_graph(graph), L);
    out << json(std::vector<std::int64_t>(c.counts.begin() + 2, c.counts.end())).dump() << '\n';
    return kOk;
  }
};

struct MomentCmd {
  std::string name;
  SizeFlags size;
  int k = 3;
  Flag<int> l;
  double omega = 1.0;
  std::string sizes, counts, rho, x;
  double tol = 1e-12;
  std::string format = "text";

  void attach(CLI::App* app) {
    app->add_option("--name", name,
                    "lambda | delta | mu | ssc | conditioned_ratio | alpha | g | c_n | B | first_exact | "
                    "first_total | first_total_asymptotic | first_simple_total | balanced_first | "
                    "balanced_ratio | balanced_count | second_exact | f | C_n | D | threshold | cond_bounds")
        ->required();
    size.attach(app);
    app->add_option("--k", k, "number of colours");
    add(app, l, "--l", "cycle length");
    app->add_option("--omega", omega, "balance parameter");
    app->add_option("--sizes", sizes, "class sizes, comma separated");
    app->add_option("--counts", counts, "k*k overlap counts, row-major, comma separated");
    app->add_option("--rho", rho, "density or overlap entries, comma separated");
    app->add_option("--x", x, "cycle counts x_2,x_3,..., comma separated");
    app->add_option("--tol", tol, "series tolerance");
    app->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  }

  int need_l() const {
    if (!l.given()) throw UsageError("--l is required");
    return l.value;
  }

  ModelParams params() const {
    const auto [m, d] = size.resolve();
    ModelParams p = ModelParams::from_edges(size.need_n(), m, k);
    p.d = d;
    return p;
  }

  int run(std::ostream& out) const {
    json pj{{"k", k}};
    if (size.n.given()) pj["n"] = size.n.value;
    if (size.m.given()) pj["m"] = size.m.value;
    if (size.d.given()) pj["d"] = size.d.value;
    const auto emit = [&](double v) { print_value(out, format, name, pj, v); };
    const auto emit_log = [&](double lv) {
      const double v = std::exp(lv);
      print_value(out, format, name, pj, v, &lv);
    };
    const auto with_size = [&](const ModelParams& p) {
      pj["n"] = p.n;
      pj["m"] = p.m;
      pj["d"] = p.d;
    };

    if (name == "lambda") return emit(lambda(need_l(), size.need_d())), kOk;
    if (name == "delta") return emit(delta(need_l(), k)), kOk;
    if (name == "mu") return emit(mu(need_l(), size.need_d(), k)), kOk;
    if (name == "ssc") {
      const auto s = ssc_series(size.need_d(), k, tol);
      if (format == "json") {
        out << round_floats(json{{"name", name}, {"params", pj}, {"value", s.value}, {"series", s.series},
                                 {"terms", s.terms}})
                   .dump()
            << '\n';
      } else {
        out << format_number(s.value) << '\n';
      }
      return kOk;
    }
    if (name == "conditioned_ratio") {
      pj["x"] = parse_list<std::int64_t>(x, "--x");
      return emit(conditioned_ratio(parse_list<std::int64_t>(x, "--x"), size.need_d(), k)), kOk;
    }
    if (name == "alpha") return emit(alpha(size.need_d(), k)), kOk;
    if (name == "g") return emit(g_density(parse_list<double>(rho, "--rho"), size.need_d(), k)), kOk;
    if (name == "c_n") return emit(first_prefactor(size.need_d(), k, size.need_n())), kOk;
    if (name == "B") return emit(first_curvature(size.need_d(), k)), kOk;
    if (name == "first_exact") {
      const auto p = params();
      with_size(p);
      pj["sizes"] = parse_list<std::int64_t>(sizes, "--sizes");
      return emit_log(first_moment_exact_log(p, parse_list<std::int64_t>(sizes, "--sizes"))), kOk;
    }
    if (name == "first_total") {
      const auto p = params();
      with_size(p);
      return emit_log(first_moment_total_log(p)), kOk;
    }
    if (name == "first_total_asymptotic") return emit_log(first_moment_total_asymptotic_log(size.need_d(), k, size.need_n())), kOk;
    if (name == "first_simple_total") {
      const auto p = params();
      with_size(p);
      return emit_log(first_moment_simple_total_log(p)), kOk;
    }
    if (name == "balanced_first") {
      const auto p = params();
      with_size(p);
      pj["omega"] = omega;
      return emit_log(balanced_first_moment_log(p, omega)), kOk;
    }
    if (name == "balanced_ratio") {
      pj["omega"] = omega;
      return emit(balanced_ratio_asymptotic(size.need_d(), k, size.need_n(), omega)), kOk;
    }
    if (name == "balanced_count") {
      pj["omega"] = omega;
      return emit(static_cast<double>(enumerate_balanced_densities(size.need_n(), k, omega).size())), kOk;
    }
    if (name == "second_exact") {
      const auto p = params();
      with_size(p);
      OverlapCounts c{k, parse_list<std::int64_t>(counts, "--counts")};
      pj["counts"] = c.counts;
      return emit_log(second_moment_exact_log(p, c)), kOk;
    }
    if (name == "f") return emit(f_overlap(OverlapMatrix(k, parse_list<double>(rho, "--rho")), size.need_d(), k)), kOk;
    if (name == "C_n") return emit(second_prefactor(size.need_d(), k, size.need_n())), kOk;
    if (name == "D") return emit(second_curvature(size.need_d(), k)), kOk;
    if (name == "threshold") return emit(first_moment_threshold(k)), kOk;
    if (name == "cond_bounds") {
      const auto [lo, hi] = cond_bound_display(k);
      if (format == "json")
        out << round_floats(json{{"name", name}, {"params", pj}, {"value", {lo, hi}}}).dump() << '\n';
      else
        out << format_number(lo) << ' ' << format_number(hi) << '\n';
      return kOk;
    }
    throw UsageError("unknown moment name '" + name + "'");
  }
};

struct OverlapCmd {
  std::string action;
  double d = 2.0;
  int k = 3;
  std::string domain = "balanced";
  MaximizeOptions options;
  std::string rho;
  int n = 100;
  double scale = 1.0;
  double cutoff = 8.0;
  std::string form = "matrix";

  void attach(CLI::App* app) {
    app->add_option("--action", action, "maximize | gap | classify | hessian | lattice")
        ->required()
        ->check(CLI::IsMember({"maximize", "gap", "classify", "hessian", "lattice"}));
    app->add_option("--d", d, "average degree");
    app->add_option("--k", k, "number of colours");
    app->add_option("--domain", domain, "simplex | balanced")->check(CLI::IsMember({"simplex", "balanced"}));
    app->add_option("--starts", options.starts, "multi-start count");
    app->add_option("--tol", options.tol, "tolerance for reporting local maxima");
    app->add_option("--seed", options.seed, "seed for the start points");
    app->add_option("--rho", rho, "k*k overlap entries, row-major, comma separated");
    app->add_option("--n", n, "lattice scale n");
    app->add_option("--scale", scale, "Gaussian scale (D or B)");
    app->add_option("--cutoff", cutoff, "box radius in standard deviations");
    app->add_option("--form", form, "matrix (H) | vector (I + ones)")->check(CLI::IsMember({"matrix", "vector"}));
  }

  int run(std::ostream& out) const {
    json params{{"action", action}, {"d", d}, {"k", k}};
    json value;
    if (action == "maximize") {
      const auto r = maximize_f(d, k, domain == "simplex" ? OverlapDomain::simplex : OverlapDomain::balanced, options);
      params["domain"] = domain;
      params["seed"] = options.seed;
      value = r.to_json();
      value["barycentre_value"] = f_overlap(OverlapMatrix::barycentre(k), d, k);
    } else if (action == "gap") {
      value = achlioptas_naor_gap(OverlapMatrix(k, parse_list<double>(rho, "--rho")), d, k);
    } else if (action == "classify") {
      const auto c = classify_stability(OverlapMatrix(k, parse_list<double>(rho, "--rho")), k);
      value = {{"s", c.s}, {"separable", c.separable}, {"kappa", separability_kappa(k)}};
    } else if (action == "hessian") {
      const auto h = hessian_H(k);
      json rows = json::array();
      for (int i = 0; i < h.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < h.cols(); ++j) row.push_back(h(i, j));
        rows.push_back(row);
      }
      const auto [det, expected] = det_check(k);
      value = {{"H", rows}, {"det", det}, {"expected_det", expected}, {"eigenvalues", hessian_eigenvalues(k)}};
    } else {
      const auto q = form == "matrix" ? hessian_H(k) : zero_sum_vector_form(k);
      const auto s = gaussian_lattice_sum(q, n, scale, cutoff);
      params.update({{"n", n}, {"scale", scale}, {"cutoff", cutoff}, {"form", form}});
      value = {{"sum", s.sum}, {"asymptotic", s.asymptotic}, {"ratio", s.sum / s.asymptotic},
               {"tail_bound", s.tail_bound}, {"points", s.points}, {"cutoff_warning", s.cutoff_warning}};
    }
    out << round_floats(json{{"name", "overlap"}, {"params", params}, {"value", value}}).dump() << '\n';
    return kOk;
  }
};

struct ExperimentCmd {
  std::string name;
  SizeFlags size;
  Flag<int> k, L, trials, threads, events, w_samples;
  Flag<double> omega;
  Flag<std::uint64_t> seed;
  std::string x, n_list;
  std::string out_path, csv_path;
  std::string format = "json";

  void attach(CLI::App* app) {
    app->add_option("--name", name,
                    "poisson_cycles | planted_cycles | conditioned_ratio | limit_distribution | concentration | "
                    "contiguity | cluster_tiny")
        ->required()
        ->check(CLI::IsMember({"poisson_cycles", "planted_cycles", "conditioned_ratio", "limit_distribution",
                               "concentration", "contiguity", "cluster_tiny"}));
    size.attach(app);
    add(app, k, "--k", "number of colours");
    add(app, L, "--L", "longest cycle length");
    add(app, trials, "--trials", "number of trials");
    add(app, threads, "--threads", "worker threads (0 = all cores)");
    add(app, events, "--events", "random events (contiguity)");
    add(app, w_samples, "--w-samples", "samples of W (limit_distribution)");
    add(app, omega, "--omega", "balance parameter");
    add(app, seed, "--seed", "random seed (required)");
    app->add_option("--x", x, "census prefix x_2,x_3,... (conditioned_ratio)");
    app->add_option("--n-list", n_list, "comma separated n values");
    app->add_option("--out", out_path, "append the JSON record to this file");
    app->add_option("--csv", csv_path, "write the CSV summary to this file");
    app->add_option("--format", format, "stdout format: json | csv")->check(CLI::IsMember({"json", "csv"}));
  }

  template <class Cfg>
  void common(Cfg& c) const {
    c.seed = seed.value;
    if constexpr (requires { c.threads; })
      if (threads.given()) c.threads = threads.value;
    if constexpr (requires { c.trials; })
      if (trials.given()) c.trials = trials.value;
    if constexpr (requires { c.k; })
      if (k.given()) c.k = k.value;
    if constexpr (requires { c.L; })
      if (L.given()) c.L = L.value;
    if constexpr (requires { c.omega; })
      if (omega.given()) c.omega = omega.value;
  }

  // For configs parametrized by d; --m is converted with n.
  template <class Cfg>
  void degree(Cfg& c) const {
    if (size.n.given()) c.n = size.n.value;
    if (size.m.given() && size.d.given()) throw UsageError("exactly one of --m and --d may be given");
    if (size.d.given()) c.d = size.d.value;
    if (size.m.given()) c.d = 2.0 * static_cast<double>(size.m.value) / c.n;
  }

  // For configs parametrized by m; --d is converted with the ceiling rule.
  template <class Cfg>
  void edges(Cfg& c) const {
    if (size.n.given()) c.n = size.n.value;
    if (size.m.given() && size.d.given()) throw UsageError("exactly one of --m and --d may be given");
    if (size.m.given()) c.m = size.m.value;
    if (size.d.given()) c.m = edges_for_degree(c.n, size.d.value);
  }

  template <class Cfg>
  void degree_list(Cfg& c) const {
    if (size.n.given() || size.m.given()) throw UsageError("use --n-list and --d for this experiment");
    if (!n_list.empty()) c.n_list = parse_list<int>(n_list, "--n-list");
    if (size.d.given()) c.d = size.d.value;
  }

  ExperimentRecord execute() const {
    if (name == "poisson_cycles") {
      PoissonCyclesConfig c;
      common(c);
      degree(c);
      return exp_poisson_cycles(c);
    }
    if (name == "planted_cycles") {
      PlantedCyclesConfig c;
      common(c);
      degree(c);
      if (!n_list.empty()) c.intersect_n = parse_list<int>(n_list, "--n-list");
      if (trials.given()) c.intersect_trials = trials.value;
      return exp_planted_cycles(c);
    }
    if (name == "conditioned_ratio") {
      ConditionedRatioConfig c;
      common(c);
      degree(c);
      if (!x.empty()) c.x = parse_list<std::int64_t>(x, "--x");
      return exp_conditioned_ratio(c);
    }
    if (name == "limit_distribution") {
      LimitDistributionConfig c;
      common(c);
      degree_list(c);
      if (w_samples.given()) c.w_samples = w_samples.value;
      return exp_limit_distribution(c);
    }
    if (name == "concentration") {
      ConcentrationConfig c;
      common(c);
      degree_list(c);
      c.regression_n = c.n_list.back();
      return exp_concentration(c);
    }
    if (name == "contiguity") {
      ContiguityConfig c;
      common(c);
      edges(c);
      if (events.given()) c.events = events.value;
      auto r = exp_contiguity_enum(c);
      r.params["d"] = 2.0 * static_cast<double>(c.m) / c.n;
      return r;
    }
    ClusterConfig c;
    common(c);
    edges(c);
    auto r = exp_cluster_tiny(c);
    r.params["d"] = 2.0 * static_cast<double>(c.m) / c.n;
    return r;
  }

  int run(std::ostream& out) const {
    if (!seed.given()) throw UsageError("--seed is required for experiments");
    const ExperimentRecord r = execute();
    if (!out_path.empty()) {
      const auto path = output_path(out_path);
      std::ofstream f(path, std::ios::binary | std::ios::app);
      if (!f) throw UsageError("cannot open output file " + path.string());
      write_json_line(f, r);
    }
    if (!csv_path.empty()) {
      auto f = open_output(csv_path);
      write_csv_header(f);
      write_csv_rows(f, r);
    }
    if (format == "csv") {
      write_csv_header(out);
      write_csv_rows(out, r);
    } else {
      write_json_line(out, r);
    }
    return r.passed() ? kOk : kFailed;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"colourlab: random graph colouring laboratory"};
  app.require_subcommand(1);
  SampleCmd sample;
  CountCmd count;
  CensusCmd census;
  MomentCmd moment;
  OverlapCmd overlap;
  ExperimentCmd experiment;
  auto* s1 = app.add_subcommand("sample", "sample a random graph or graph/colouring pair");
  auto* s2 = app.add_subcommand("count", "count proper colourings of a graph file");
  auto* s3 = app.add_subcommand("census", "short cycle counts of a graph file");
  auto* s4 = app.add_subcommand("moment", "evaluate a moment formula");
  auto* s5 = app.add_subcommand("overlap", "overlap-matrix landscape tools");
  auto* s6 = app.add_subcommand("experiment", "run a seeded experiment");
  sample.attach(s1);
  count.attach(s2);
  census.attach(s3);
  moment.attach(s4);
  overlap.attach(s5);
  experiment.attach(s6);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (s1->parsed()) return sample.run(out);
    if (s2->parsed()) return count.run(out);
    if (s3->parsed()) return census.run(out);
    if (s4->parsed()) return moment.run(out);
    if (s5->parsed()) return overlap.run(out);
    return experiment.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace colourlab::cli
