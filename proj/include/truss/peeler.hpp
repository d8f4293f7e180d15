#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "truss/graph.hpp"

namespace truss {

// Per-edge trussness. For a truncated decomposition, edges whose exact value
// was not determined carry tau = truncated_at and exact = false, meaning
// "tau >= truncated_at".
struct TrussLabels {
  std::vector<std::uint32_t> tau;
  std::vector<std::uint8_t> exact;
  std::optional<std::uint32_t> truncated_at;

  bool is_exact(EdgeId e) const noexcept { return exact[e] != 0; }
  bool fully_exact() const noexcept { return !truncated_at.has_value(); }
  // tau(e) >= k, decidable for every k when exact and for k <= truncated_at
  // otherwise.
  bool at_least(EdgeId e, std::uint32_t k) const noexcept { return tau[e] >= k; }
  std::uint32_t max_tau() const noexcept;

  // Clamps exact labels at k_trunc: values >= k_trunc become lower bounds.
  TrussLabels clamped(std::uint32_t k_trunc) const;

  friend bool operator==(const TrussLabels&, const TrussLabels&) = default;
};

struct PeelOptions {
  // Round 1 labels triangle-free edges directly instead of stacking them.
  bool round_one_shortcut = true;
  // Re-verify the loop invariants after every stack pop. Quadratic; meant
  // for tests on small graphs.
  bool check_invariants = false;
};

struct PeelStats {
  std::uint64_t stack_pushes = 0;
  std::uint64_t scan_length = 0;  // scan-list entries visited over all rounds
  std::uint32_t rounds = 0;
};

// Raised when check_invariants finds a broken loop invariant.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact trussness of every edge by threshold peeling: round k stacks the
// residual edges with k - 1 triangles and removes them, updating the
// triangle counts of their neighbors.
TrussLabels truss_decomposition(const Graph& g, const PeelOptions& options = {},
                                PeelStats* stats = nullptr);

// Largest edge set whose edge-induced subgraph has every edge in at least k
// triangles, found by deleting violating edges to a fixed point.
EdgeSet max_k_truss(const Graph& g, std::uint32_t k);
// Same, restricted to the edges of `within`.
EdgeSet max_k_truss(const Graph& g, std::uint32_t k, const EdgeSet& within);

// Connected components of {e : tau(e) >= k}, ordered by smallest edge id.
// Throws RangeError for k == 0 or k above a truncation.
std::vector<EdgeSet> k_truss_components(const Graph& g, std::uint32_t k, const TrussLabels& labels);

// (k, number of edges with tau == k) for every k present, ascending.
std::vector<std::pair<std::uint32_t, std::uint64_t>> tau_histogram(const TrussLabels& labels);

}  // namespace truss
