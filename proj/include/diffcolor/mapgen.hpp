#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffcolor/coloring.hpp"
#include "diffcolor/graph.hpp"
#include "diffcolor/io.hpp"

namespace diffcolor {

/// Parameters of the synthetic country-graph corpus. p values are the powers
/// 2^-e for e in p_exponents.
struct CorpusSpec {
  std::vector<int> country_counts = {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  std::vector<int> p_exponents = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  int replicates = 10;
  uint64_t seed = 1;
};

/// One benchmark measurement. optimum is present on exact rows (and equals
/// min_distance there); wall_ms is wall clock and therefore excluded when the
/// harness runs with omit_timing.
struct BenchRow {
  std::string instance_id;
  int n = 0;
  int p_exponent = 1;
  int replicate = 0;
  std::string algorithm;  // "ilp-n" | "ilp-2n" | "spectral"
  int min_distance = 0;
  std::optional<int> optimum;
  double wall_ms = 0.0;
  std::string outcome;  // "ok" | "timeout" | "fallback"
  Coloring coloring;
};

/// Deterministic RNG used across the generators; same seed, same stream on
/// every platform.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  double unit();                      // [0, 1)
  int uniform(int lo, int hi);        // inclusive
  bool chance(double p);
};

uint64_t instance_seed(uint64_t corpus_seed, int n, int p_exponent, int replicate);

/// The synthetic country graph: 10n cluster vertices with intra-cluster edge
/// probability 0.5, extra edges between all pairs with probability p, then
/// each 10-vertex cluster contracts to one country; countries are adjacent
/// iff any cross-cluster edge exists. Components beyond the first are
/// re-linked through seeded random edges so the country graph is connected.
Graph generate_country_graph(int n, int p_exponent, uint64_t seed);

struct SpectralResult {
  Coloring coloring;
  bool converged = true;
  Coloring& operator*() { return coloring; }
};

/// Fiedler-order baseline: deflated power iteration on the Laplacian
/// (tolerance 1e-9, at most 10^4 iterations), vertices sorted by Fiedler
/// value (ties by index) and colored k, 2k, ..., nk in that order. On
/// convergence failure falls back to degree-sorted order with a flag.
SpectralResult spectral_heuristic(const Graph& g, int k);

struct BenchOptions {
  long long node_budget = 100'000'000;
  bool omit_timing = false;                 // zero out wall_ms for byte-stable CSV
  std::optional<std::string> instances_dir; // write per-instance .edges/.colors files
};

/// Runs exact k=1 ("ilp-n"), exact k=2 ("ilp-2n") and the spectral baseline
/// on every corpus instance, verifying each coloring. Deterministic given
/// the spec (timing fields aside).
std::vector<BenchRow> run_benchmark(const CorpusSpec& spec, const BenchOptions& opts = {});

std::string bench_csv(const std::vector<BenchRow>& rows, bool omit_timing);

/// Linear palette interpolation: color v in 1..kn maps to
/// low + (v-1)/(kn-1) * (high-low), rounded per channel; kn = 1 maps to low.
std::vector<Rgb> gradient_colors(const Coloring& c, const Rgb& low, const Rgb& high);

}  // namespace diffcolor
