#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "truss/graph.hpp"

namespace truss {

// Vertex triple with a < b < c.
struct Triangle {
  Vertex a;
  Vertex b;
  Vertex c;

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct TriangleCounts {
  std::vector<std::uint32_t> per_edge;    // indexed by edge id
  std::vector<std::uint64_t> per_vertex;  // indexed by vertex
  std::uint64_t total = 0;
};

// Orientation used by every triangle scan: `low` is the endpoint whose
// adjacency list gets iterated (smaller degree, ties to smaller id).
struct ScanOrder {
  Vertex low;
  Vertex high;
};

inline ScanOrder scan_order(const Graph& g, Edge e) noexcept {
  const auto du = g.degree(e.u), dv = g.degree(e.v);
  if (du < dv || (du == dv && e.u < e.v)) return {e.u, e.v};
  return {e.v, e.u};
}

// Streams every triangle of g to `sink` exactly once and returns the count.
// For each edge (u, v), scanned from the smaller-degree endpoint u, a
// neighbor w of u closes a triangle that is emitted only when id(w) exceeds
// both endpoint ids. Work is O(sum over edges of min degree * log degree).
template <class Sink>
std::uint64_t enumerate_triangles(const Graph& g, Sink&& sink) {
  std::uint64_t count = 0;
  for (const Edge& e : g.edges()) {
    const auto [u, v] = scan_order(g, e);
    const Vertex top = std::max(u, v);
    for (Vertex w : g.neighbors(u)) {
      if (w <= top || !g.has_edge(v, w)) continue;
      Triangle t{u, v, w};
      if (t.a > t.b) std::swap(t.a, t.b);
      sink(t);
      ++count;
    }
  }
  return count;
}

std::vector<Triangle> list_triangles(const Graph& g);

// Exact per-edge, per-vertex and total counts. Each edge intersects its
// endpoints' lists by probing the larger list from the smaller one.
TriangleCounts triangle_counts(const Graph& g);

}  // namespace truss
