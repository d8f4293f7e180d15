#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "truss/graph.hpp"
#include "truss/peeler.hpp"

namespace truss {

enum class InitMode { direct, matrix };

inline constexpr std::uint64_t kDefaultSeed = 0x7275737331ULL;
inline constexpr std::uint64_t kDefaultMemCap = 4ULL << 30;

// Parameters of the randomized witness structure. Unset optionals take the
// defaults derived from the graph in resolve().
struct WitnessConfig {
  std::uint32_t k_trunc = 1;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint32_t> sets;  // L, default ceil(10 k_trunc ln n)
  std::optional<double> prob;         // q, default 1 / k_trunc
  std::optional<double> b;            // heavy/light exponent, default max(a, 2/3)
  InitMode init_mode = InitMode::direct;
  std::uint64_t mem_cap_bytes = kDefaultMemCap;
};

struct ResolvedWitnessConfig {
  std::uint32_t k_trunc;
  std::uint64_t seed;
  std::uint32_t sets;
  double prob;
  double a;  // log_m k_trunc
  double b;
  InitMode init_mode;
  std::uint64_t mem_cap_bytes;
};

// Fills in defaults and validates: 1 <= k_trunc <= ceil(sqrt(2m)), 0 < q <= 1,
// L >= 1, a <= b <= 1, and m * L table entries within the memory cap.
ResolvedWitnessConfig resolve(const WitnessConfig& cfg, const Graph& g);

// Bytes held by the witness-sum table for this graph and set count.
std::uint64_t witness_table_bytes(const Graph& g, std::uint32_t sets);

struct EnumerationOutcome {
  std::vector<Vertex> witnesses;  // third vertices of the residual triangles found
  bool used_fallback = false;
  std::uint64_t candidates_tested = 0;
};

// Dynamic witness-sum structure over a graph whose edges get removed.
//
// For every residual edge e = (u, v) and set index l it keeps
//   S(e, l) = sum of id(w) over residual common neighbors w of u, v in X_l
// together with the residual triangle count of e. A set X_l that meets the
// common neighborhood in exactly one vertex w makes S(e, l) = id(w), which
// lets enumerate() recover triangles in O(L) probes.
class WitnessState {
 public:
  // Samples X_1..X_L with seed-driven Bernoulli(q) membership.
  static WitnessState build(const Graph& g, const WitnessConfig& cfg);
  // Uses the given vertex sets as X_1..X_L.
  static WitnessState with_sets(const Graph& g, std::vector<std::vector<Vertex>> sets,
                                InitMode mode = InitMode::direct, double b = 2.0 / 3.0);

  const Graph& graph() const noexcept { return *g_; }
  std::size_t num_sets() const noexcept { return sets_.size(); }
  std::span<const Vertex> set(std::size_t l) const noexcept { return sets_[l]; }
  // Y_v: indices of the sets containing v.
  std::span<const std::uint32_t> memberships(Vertex v) const noexcept { return memberships_[v]; }
  std::span<const Vertex> heavy_vertices() const noexcept { return heavy_; }

  std::uint64_t witness_sum(EdgeId e, std::size_t l) const noexcept {
    return sums_[static_cast<std::size_t>(e) * sets_.size() + l];
  }
  bool residual(EdgeId e) const noexcept { return delta_[e] != kRemoved; }
  // Residual triangle count; meaningful only for residual edges.
  std::uint32_t residual_triangles(EdgeId e) const noexcept { return delta_[e]; }

  // Residual triangles of e: a primary pass decodes the witness sums and
  // keeps only verified candidates; when it finds fewer than the known count
  // a full vertex scan recovers the exact set. Throws ValidationError if e
  // is removed.
  EnumerationOutcome enumerate(EdgeId e);

  // Removes e and retracts its triangles from the counts and witness sums of
  // the two other edges of each triangle. `witnessed` must list every
  // residual triangle of e.
  void remove(EdgeId e, const EnumerationOutcome& witnessed);

 private:
  static constexpr std::uint32_t kRemoved = 0xffffffffu;

  WitnessState(const Graph& g, std::vector<std::vector<Vertex>> sets);
  void init_direct();
  void init_matrix(double b);
  std::uint64_t& sum_at(EdgeId e, std::size_t l) noexcept {
    return sums_[static_cast<std::size_t>(e) * sets_.size() + l];
  }
  bool residual_edge(Vertex x, Vertex y) const noexcept;

  const Graph* g_;
  std::vector<std::vector<Vertex>> sets_;
  std::vector<std::vector<std::uint32_t>> memberships_;
  std::vector<Vertex> heavy_;
  std::vector<std::uint64_t> sums_;
  std::vector<std::uint32_t> delta_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

struct WitnessStats {
  std::uint64_t enumerations = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t candidates_tested = 0;
  std::uint64_t stack_pushes = 0;
  std::uint64_t scan_length = 0;
};

// Exact tau(e) for every edge with tau(e) <= k_trunc - 1; all other edges
// get the lower bound k_trunc. Labels do not depend on the seed or init mode.
TrussLabels truncated_decomposition(const Graph& g, const WitnessConfig& cfg,
                                    WitnessStats* stats = nullptr);

}  // namespace truss
