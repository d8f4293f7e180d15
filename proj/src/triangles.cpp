#include "truss/triangles.hpp"

namespace truss {

std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> out;
  enumerate_triangles(g, [&](const Triangle& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

TriangleCounts triangle_counts(const Graph& g) {
  TriangleCounts counts;
  counts.per_edge.assign(g.num_edges(), 0);
  counts.per_vertex.assign(g.num_vertices(), 0);
  std::uint64_t edge_sum = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = scan_order(g, g.endpoints(e));
    std::uint32_t c = 0;
    for (Vertex w : g.neighbors(u))
      if (w != v && g.has_edge(v, w)) ++c;
    counts.per_edge[e] = c;
    edge_sum += c;
  }
  // Each triangle on v contributes to exactly two of v's incident edges.
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::uint64_t s = 0;
    for (EdgeId e : g.incident_edges(v)) s += counts.per_edge[e];
    counts.per_vertex[v] = s / 2;
  }
  counts.total = edge_sum / 3;
  return counts;
}

}  // namespace truss
