#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace truss {

// Vertices are dense indices in [0, n). The 1-based identifier used by
// witness sums is Graph::id(v) = v + 1, so a sum of identifiers is zero only
// for the empty set.
using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Rational = boost::rational<std::int64_t>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph in compressed sparse row form.
//
// Adjacency lists are sorted ascending and each slot carries the dense id of
// the edge it represents. Edge ids are assigned in (min endpoint, max
// endpoint) order, so edge_endpoints() is sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on vertices [0, n). Endpoint order inside each Edge is
  // irrelevant. Throws ValidationError on self-loops, parallel edges and
  // out-of-range endpoints. Empty `labels` means decimal 1-based ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::uint32_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const noexcept {
    return {adjacency_edges_.data() + offsets_[v], degree(v)};
  }

  // Endpoints with u < v.
  Edge endpoints(EdgeId e) const noexcept { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Binary search in the shorter of the two adjacency lists.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept { return find_edge(u, v).has_value(); }

  static std::uint64_t id(Vertex v) noexcept { return static_cast<std::uint64_t>(v) + 1; }

  const std::string& label(Vertex v) const noexcept { return labels_[v]; }
  std::span<const std::string> labels() const noexcept { return labels_; }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> adjacency_edges_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Sorted, duplicate-free set of edge ids of some graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  // Sorts and validates; throws ValidationError on duplicates or ids >= m.
  static EdgeSet from_ids(std::vector<EdgeId> ids, std::size_t m);
  static EdgeSet all(std::size_t m);

  bool contains(EdgeId e) const noexcept;
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::span<const EdgeId> ids() const noexcept { return ids_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

struct ParseOptions {
  // Admit single-token vertex declarations that end up without edges and
  // drop them instead of rejecting the input.
  bool drop_isolated = false;
};

// Whitespace separated "u v" lines; '#' starts a comment line. A single-token
// line declares a vertex. Labels become ids in first-appearance order.
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});

// One "u v" line per edge, using labels. Lines are grouped by the larger
// endpoint so that vertices first appear in id order and a reparse assigns
// the same ids. A vertex that no line can introduce in order gets a
// single-token declaration line.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

// G[U]. Vertices keep their relative order and labels.
Graph induced_by_vertices(const Graph& g, std::span<const Vertex> vertices);

// G(L): the edges of L and their endpoints only.
Graph induced_by_edges(const Graph& g, const EdgeSet& edges);

// G * H: identifies g_vertex of G with h_vertex of H. G's vertices keep their
// ids, H's remaining vertices follow in order. Labels are renumbered 1..n.
Graph contract(const Graph& g, const Graph& h, Vertex g_vertex, Vertex h_vertex);

struct EdgeComponents {
  // component_of[e] in [0, count), numbered by smallest edge id.
  std::vector<std::uint32_t> component_of;
  std::uint32_t count = 0;

  std::vector<std::vector<EdgeId>> groups() const;
};

EdgeComponents connected_components(const Graph& g);

struct DegeneracyReport {
  std::uint32_t degeneracy = 0;
  std::vector<Vertex> elimination_order;
  // (1/m) * sum over edges of min(d(u), d(v)); zero for the empty graph.
  Rational average_degeneracy{0};
};

DegeneracyReport degeneracy(const Graph& g);

// Sum over edges of min(d(u), d(v)), i.e. m times the average degeneracy.
std::uint64_t min_degree_sum(const Graph& g);

// triangles(v) / C(d(v), 2). Throws RangeError if d(v) < 2.
Rational clustering_coefficient(const Graph& g, Vertex v);

}  // namespace truss
