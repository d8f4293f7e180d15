#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "truss/graph.hpp"
#include "truss/peeler.hpp"
#include "truss/triangles.hpp"

namespace truss {

inline constexpr std::size_t kOracleVertexCap = 200;

// All-triples triangle count. Throws CapacityError above `cap` vertices.
TriangleCounts brute_force_triangles(const Graph& g, std::size_t cap = kOracleVertexCap);

// Trussness by the definition: for k = 1, 2, ... recount every residual
// edge's triangles from scratch and drop all edges below k, until stable.
// Works on a dense adjacency matrix and shares no code with the peeler.
TrussLabels oracle_truss_decomposition(const Graph& g, std::size_t cap = kOracleVertexCap);

// Every edge in at least k triangles and no isolated vertex.
bool is_k_truss(const Graph& g, std::uint32_t k);

// A nonempty k-truss with no nonempty proper sub-edge-set inducing a
// k-truss. Decided with one peel per edge: every such subset lies inside
// E - e for some e, and the peel of E - e keeps all of them.
bool is_critical_k_truss(const Graph& g, std::uint32_t k);

// Same question by enumerating every edge subset. Throws CapacityError for
// m > kSubsetEdgeCap.
inline constexpr std::size_t kSubsetEdgeCap = 20;
bool is_critical_by_subsets(const Graph& g, std::uint32_t k);

enum class Relation { at_least, at_most };

struct BoundCheck {
  std::string name;
  std::uint32_t k = 0;  // 0 for checks not tied to a truss level
  Relation relation = Relation::at_most;
  Rational bound{0};
  Rational observed{0};  // the extreme value over everything checked
  bool passed = true;
  std::string witness;   // where `observed` was attained
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool passed() const noexcept;
  std::size_t violations() const noexcept;
};

// Checks the structural bounds implied by exact trussness labels:
//   tau-sqrt      tau(e) <= sqrt(2m + 1/4) - 3/2
//   tau-degen     tau(e) <= degeneracy - 1
//   degen-sqrt    degeneracy^2 <= 2m
//   avg-degen     average degeneracy <= 2 * degeneracy
// and for every k (or only `only_k`) and each connected k-truss component
// with n_c vertices, m_c edges, T_c triangles:
//   min-degree    d(v) >= k+1
//   vertices      n_c >= k+2
//   clustering    cc(v) >= C(k+1,2) / C(d(v),2)
//   closed-nbhd   d(v) + triangles(v) >= C(k+2,2)
//   edges         m_c >= (n_c - 1)(1 + k/2)
//   triangles     T_c >= (n_c - 1)(k+2)k / 6
// Throws ValidationError for truncated labels.
BoundReport bound_report(const Graph& g, const TrussLabels& labels,
                         std::optional<std::uint32_t> only_k = std::nullopt);

}  // namespace truss
