#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "truss/embedding.hpp"
#include "truss/graph.hpp"

namespace truss {

// What a generator promised and what it produced.
struct ConstructionReceipt {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t expected_n = 0;
  std::optional<std::uint64_t> expected_m;  // exact count when a formula gives one
  std::optional<Rational> m_upper_bound;    // when only a bound is known
  std::uint64_t actual_n = 0;
  std::uint64_t actual_m = 0;
  std::vector<std::string> checks_passed;
  std::vector<std::string> notes;

  bool counts_match() const noexcept;
};

struct Construction {
  Graph graph;
  ConstructionReceipt receipt;
};

// k_{k+2} copies glued in a chain, each sharing one vertex with the next:
// s(k+1) + 1 vertices and s * C(k+2, 2) edges.
Construction clique_chain(std::uint32_t k, std::uint32_t s);

// A k-truss on exactly n >= k+2 vertices: s copies of K_{k+2} chained onto
// K_r, with n = s(k+1) + r and k+2 <= r < 2k+3.
Construction clique_chain_remainder(std::uint32_t k, std::uint32_t n);

// C_{n-2} plus two non-adjacent apexes joined to every cycle vertex.
// Critical 2-truss with 3n - 6 edges; n >= 6.
Construction critical_2truss(std::uint32_t n);

// Adds `added` (1 or 2) apex vertices to the k-truss g, joined to old
// vertices by an inclusion-minimal edge set F that makes the result a
// (k + added)-truss. Candidates are tried in ascending (apex, old vertex)
// order; dropping a candidate keeps every edge the peel still supports, so F
// stays a subset of the largest (k + added)-truss containing the old edges.
Construction suspend(const Graph& g, std::uint32_t k, std::uint32_t added);

// T plus, for each face F, a clique K_{k-1} joined to every vertex of F.
// r(k-2) + g/2 vertices and r*C(k-1, 2) + (k - 1/2) g edges for r faces of
// total length g.
Construction truss_from_embedding(const FaceEmbedding& emb, std::uint32_t k);

// critical_2truss(n + 2 - k) lifted by two per step for even k; odd k
// suspends the ladder for (k-1, n-1) by one. Needs n >= k+4.
Construction suspension_ladder(std::uint32_t k, std::uint32_t n);

// Critical k-truss on n >= k+4 vertices. k = 2 uses critical_2truss;
// n <= 2k uses the suspension ladder; otherwise n = ik + j is realized from
// a clean torus embedding with i-2 squares and two (j+4)-faces. When no
// clean embedding exists, or the result fails the criticality check, the
// ladder is used and the receipt says so.
Construction critical_truss(std::uint32_t k, std::uint32_t n);

// Largest m for which critical_truss checks criticality before returning.
inline constexpr std::size_t kCriticalCheckEdgeLimit = 4000;

}  // namespace truss
