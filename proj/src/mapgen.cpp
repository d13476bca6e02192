#include "diffcolor/mapgen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "diffcolor/exact.hpp"

namespace diffcolor {

uint64_t SplitMix64::next() {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int SplitMix64::uniform(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

bool SplitMix64::chance(double p) { return unit() < p; }

uint64_t instance_seed(uint64_t corpus_seed, int n, int p_exponent, int replicate) {
  SplitMix64 mix(corpus_seed);
  mix.state ^= 0x6a09e667f3bcc908ull + static_cast<uint64_t>(n) * 0x100000001b3ull;
  mix.next();
  mix.state ^= static_cast<uint64_t>(p_exponent) * 0xc2b2ae3d27d4eb4full;
  mix.next();
  mix.state ^= static_cast<uint64_t>(replicate) * 0x165667b19e3779f9ull;
  return mix.next();
}

Graph generate_country_graph(int n, int p_exponent, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_country_graph: needs n >= 2");
  if (p_exponent < 0 || p_exponent > 62)
    throw std::invalid_argument("generate_country_graph: p exponent out of range");
  double p = std::ldexp(1.0, -p_exponent);
  SplitMix64 rng(seed);

  int big = 10 * n;
  std::vector<char> adj(static_cast<size_t>(big) * big, 0);
  // Step 1: intra-cluster edges with probability 0.5.
  for (int i = 0; i < big; ++i)
    for (int j = i + 1; j < big; ++j)
      if (i / 10 == j / 10 && rng.chance(0.5))
        adj[static_cast<size_t>(i) * big + j] = 1;
  // Step 2: extra edges between all pairs with probability p (intra-cluster
  // hits are absorbed by existing edges).
  for (int i = 0; i < big; ++i)
    for (int j = i + 1; j < big; ++j)
      if (rng.chance(p)) adj[static_cast<size_t>(i) * big + j] = 1;

  // Contract each 10-vertex cluster to a country.
  std::set<Edge> country_edges;
  for (int i = 0; i < big; ++i)
    for (int j = i + 1; j < big; ++j)
      if (adj[static_cast<size_t>(i) * big + j] && i / 10 != j / 10)
        country_edges.insert({i / 10, j / 10});

  Graph country(n, {country_edges.begin(), country_edges.end()});
  // Re-link any stray component to the main one (the paper's maps are
  // implicitly connected).
  while (!is_connected(country)) {
    auto comp = component_ids(country);
    int stray = -1;
    for (int v = 0; v < n; ++v)
      if (comp[v] != 0) {
        stray = v;
        break;
      }
    std::vector<int> main_side;
    for (int v = 0; v < n; ++v)
      if (comp[v] == 0) main_side.push_back(v);
    int anchor = main_side[rng.uniform(0, static_cast<int>(main_side.size()) - 1)];
    country_edges.insert({std::min(stray, anchor), std::max(stray, anchor)});
    country = Graph(n, {country_edges.begin(), country_edges.end()});
  }
  return country;
}

SpectralResult spectral_heuristic(const Graph& g, int k) {
  if (!is_connected(g)) throw std::invalid_argument("spectral_heuristic: graph must be connected");
  if (k < 1) throw std::invalid_argument("spectral_heuristic: k must be >= 1");
  int n = g.vertex_count();

  SpectralResult res;
  std::vector<double> fiedler(n, 0.0);
  bool converged = false;

  if (n >= 2) {
    // Power iteration on (c*I - L) with the all-ones direction deflated;
    // its dominant eigenvector is the Fiedler vector of L.
    double maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, static_cast<double>(g.degree(v)));
    double shift = 2.0 * maxdeg + 1.0;

    std::vector<double> v(n), next(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i + 1));
    auto deflate = [&](std::vector<double>& x) {
      double mean = 0;
      for (double xv : x) mean += xv;
      mean /= n;
      for (double& xv : x) xv -= mean;
    };
    auto normalize = [&](std::vector<double>& x) {
      double norm = 0;
      for (double xv : x) norm += xv * xv;
      norm = std::sqrt(norm);
      if (norm == 0) return false;
      for (double& xv : x) xv /= norm;
      return true;
    };
    deflate(v);
    if (normalize(v)) {
      const double tol = 1e-9;
      const int max_iters = 10'000;
      for (int it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
          double acc = (shift - g.degree(i)) * v[i];
          for (int nb : g.neighbors(i)) acc += v[nb];
          next[i] = acc;
        }
        deflate(next);
        if (!normalize(next)) break;
        // Align sign before measuring the step.
        double dot = 0;
        for (int i = 0; i < n; ++i) dot += next[i] * v[i];
        if (dot < 0)
          for (double& xv : next) xv = -xv;
        double delta = 0;
        for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - v[i]));
        v = next;
        if (delta < tol) {
          converged = true;
          break;
        }
      }
      if (converged) {
        // Canonical sign: first entry of noticeable magnitude is positive.
        for (int i = 0; i < n; ++i) {
          if (std::abs(v[i]) > 1e-12) {
            if (v[i] < 0)
              for (double& xv : v) xv = -xv;
            break;
          }
        }
        fiedler = v;
      }
    }
  } else {
    converged = true;
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  if (converged) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fiedler[a] < fiedler[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
  }
  res.converged = converged;
  res.coloring.k = k;
  res.coloring.colors.assign(n, 0);
  for (int i = 0; i < n; ++i) res.coloring.colors[order[i]] = k * (i + 1);
  return res;
}

namespace {

std::string make_instance_id(int n, int e, int r) {
  return "n" + std::to_string(n) + "-e" + std::to_string(e) + "-r" + std::to_string(r);
}

std::string format_p(int e) { return "2^-" + std::to_string(e); }

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

std::vector<BenchRow> run_benchmark(const CorpusSpec& spec, const BenchOptions& opts) {
  if (spec.replicates < 1) throw std::invalid_argument("run_benchmark: replicates must be >= 1");
  std::vector<BenchRow> rows;

  for (int n : spec.country_counts)
    for (int e : spec.p_exponents)
      for (int r = 0; r < spec.replicates; ++r) {
        uint64_t seed = instance_seed(spec.seed, n, e, r);
        Graph g = generate_country_graph(n, e, seed);
        std::string id = make_instance_id(n, e, r);
        if (opts.instances_dir)
          write_text_file(*opts.instances_dir + "/" + id + ".edges", edge_list_string(g));

        auto push = [&](const std::string& alg, const Coloring& c, std::optional<int> optimum,
                        double ms, const std::string& outcome) {
          BenchRow row;
          row.instance_id = id;
          row.n = n;
          row.p_exponent = e;
          row.replicate = r;
          row.algorithm = alg;
          row.min_distance = c.n() > 0 ? min_color_distance(g, c) : 0;
          row.optimum = optimum;
          row.wall_ms = opts.omit_timing ? 0.0 : ms;
          row.outcome = outcome;
          row.coloring = c;
          rows.push_back(std::move(row));
          if (opts.instances_dir && c.n() > 0) {
            std::ostringstream body;
            write_coloring(body, c);
            write_text_file(*opts.instances_dir + "/" + id + "." + alg + ".colors", body.str());
          }
        };

        for (int k : {1, 2}) {
          std::string alg = k == 1 ? "ilp-n" : "ilp-2n";
          auto t0 = std::chrono::steady_clock::now();
          SolveReport rep = k_diff_chromatic(g, k, opts.node_budget);
          double ms = ms_between(t0, std::chrono::steady_clock::now());
          if (rep.outcome == SolveOutcome::feasible) {
            push(alg, *rep.coloring, rep.optimum_d, ms, "ok");
          } else {
            // Timeouts keep their row; the best-known coloring, if any, is reported.
            Coloring c = rep.coloring ? *rep.coloring : Coloring{k, {}};
            push(alg, c, std::nullopt, ms, "timeout");
          }
        }
        auto t0 = std::chrono::steady_clock::now();
        SpectralResult sp = spectral_heuristic(g, 1);
        double ms = ms_between(t0, std::chrono::steady_clock::now());
        push("spectral", sp.coloring, std::nullopt, ms, sp.converged ? "ok" : "fallback");
      }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool omit_timing) {
  std::ostringstream out;
  out << "instance_id,n,p,replicate,algorithm,min_distance,optimum,wall_time_ms,outcome\n";
  for (const auto& row : rows) {
    out << row.instance_id << ',' << row.n << ',' << format_p(row.p_exponent) << ','
        << row.replicate << ',' << row.algorithm << ',' << row.min_distance << ',';
    if (row.optimum) out << *row.optimum;
    out << ',';
    if (omit_timing)
      out << "";
    else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", row.wall_ms);
      out << buf;
    }
    out << ',' << row.outcome << '\n';
  }
  return out.str();
}

std::vector<Rgb> gradient_colors(const Coloring& c, const Rgb& low, const Rgb& high) {
  int range = c.range();
  std::vector<Rgb> out(c.n());
  for (int v = 0; v < c.n(); ++v) {
    int col = c.colors[v];
    if (col < 1 || col > range)
      throw std::invalid_argument("gradient_colors: color out of range");
    double t = range == 1 ? 0.0 : static_cast<double>(col - 1) / (range - 1);
    auto lerp = [t](int a, int b) { return static_cast<int>(std::lround(a + t * (b - a))); };
    out[v] = Rgb{lerp(low.r, high.r), lerp(low.g, high.g), lerp(low.b, high.b)};
  }
  return out;
}

}  // namespace diffcolor
