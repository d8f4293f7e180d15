#include "truss/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "truss/errors.hpp"

namespace truss {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (n > std::numeric_limits<Vertex>::max() - 1)
    throw CapacityError("vertex count exceeds 32-bit ids");
  if (!labels.empty() && labels.size() != n)
    throw ValidationError("label count " + std::to_string(labels.size()) +
                          " does not match vertex count " + std::to_string(n));

  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw ValidationError("edge endpoint out of range");
    if (e.u == e.v)
      throw ValidationError("self-loop on vertex " + std::to_string(Graph::id(e.u)));
    sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw ValidationError("parallel edge between " + std::to_string(Graph::id(dup->u)) +
                          " and " + std::to_string(Graph::id(dup->v)));

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : sorted) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  g.adjacency_.resize(2 * sorted.size());
  g.adjacency_edges_.resize(2 * sorted.size());
  std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v). The first pass appends every smaller neighbor
  // in ascending order, the second every larger one, so each list ends up
  // sorted without a per-list sort.
  for (EdgeId id = 0; id < sorted.size(); ++id) {
    const auto [u, v] = sorted[id];
    g.adjacency_[fill[v]] = u;
    g.adjacency_edges_[fill[v]++] = id;
  }
  for (EdgeId id = 0; id < sorted.size(); ++id) {
    const auto [u, v] = sorted[id];
    g.adjacency_[fill[u]] = v;
    g.adjacency_edges_[fill[u]++] = id;
  }

  g.edges_ = std::move(sorted);
  if (labels.empty()) {
    labels.reserve(n);
    for (Vertex v = 0; v < n; ++v) labels.push_back(std::to_string(Graph::id(v)));
  }
  g.labels_ = std::move(labels);
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const noexcept {
  if (u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[it - nbrs.begin()];
}

EdgeSet EdgeSet::from_ids(std::vector<EdgeId> ids, std::size_t m) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ValidationError("duplicate edge id in edge set");
  if (!ids.empty() && ids.back() >= m)
    throw ValidationError("edge id " + std::to_string(ids.back()) + " out of range (m = " +
                          std::to_string(m) + ")");
  EdgeSet s;
  s.ids_ = std::move(ids);
  return s;
}

EdgeSet EdgeSet::all(std::size_t m) {
  EdgeSet s;
  s.ids_.resize(m);
  std::iota(s.ids_.begin(), s.ids_.end(), EdgeId{0});
  return s;
}

bool EdgeSet::contains(EdgeId e) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(lineno, "expected \"u v\", got " + std::to_string(tokens.size()) + " fields");
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    if (u == v)
      throw ValidationError("line " + std::to_string(lineno) + ": self-loop on " +
                            std::string(tokens[0]));
    edges.push_back({std::min(u, v), std::max(u, v)});
    edge_line.push_back(lineno);
  }
  if (in.bad()) throw Error("read failure");

  // Report duplicates with the line of the second occurrence.
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const Edge& e = edges[order[i]];
      throw ValidationError("line " + std::to_string(edge_line[order[i]]) + ": duplicate edge " +
                            labels[e.u] + " " + labels[e.v]);
    }
  }

  std::vector<std::uint32_t> degree(labels.size(), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  auto isolated = std::find(degree.begin(), degree.end(), 0u);
  if (isolated == degree.end()) {
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
  }
  if (!options.drop_isolated)
    throw ValidationError("isolated vertex " + labels[isolated - degree.begin()]);

  std::vector<Vertex> remap(labels.size());
  std::vector<std::string> kept;
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (degree[v] == 0) continue;
    remap[v] = static_cast<Vertex>(kept.size());
    kept.push_back(std::move(labels[v]));
  }
  for (Edge& e : edges) e = {remap[e.u], remap[e.v]};
  const std::size_t n = kept.size();
  return Graph::from_edges(n, edges, std::move(kept));
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  bool lead_with_previous = false;
  for (Vertex t = 0; t < n; ++t) {
    auto nbrs = g.neighbors(t);
    const auto smaller = static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), t) - nbrs.begin());
    if (lead_with_previous) out << g.label(t - 1) << ' ' << g.label(t) << '\n';
    for (std::size_t i = 0; i < smaller; ++i) {
      if (lead_with_previous && nbrs[i] == t - 1) continue;
      out << g.label(nbrs[i]) << ' ' << g.label(t) << '\n';
    }
    lead_with_previous = false;
    if (smaller == 0 && t + 1 < n && g.has_edge(t, t + 1)) {
      lead_with_previous = true;  // the line "t t+1" introduces both in order
    } else if (smaller == 0) {
      out << g.label(t) << '\n';
    }
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

Graph induced_by_vertices(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t n = g.num_vertices();
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> remap(n, kAbsent);
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> labels;
  for (Vertex v : sorted) {
    if (v >= n) throw ValidationError("unknown vertex id " + std::to_string(Graph::id(v)));
    remap[v] = static_cast<Vertex>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (remap[e.u] != kAbsent && remap[e.v] != kAbsent) edges.push_back({remap[e.u], remap[e.v]});
  const std::size_t kept = labels.size();
  return Graph::from_edges(kept, edges, std::move(labels));
}

Graph induced_by_edges(const Graph& g, const EdgeSet& edge_set) {
  if (!edge_set.empty() && edge_set.ids().back() >= g.num_edges())
    throw ValidationError("edge id out of range");
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * edge_set.size());
  for (EdgeId e : edge_set.ids()) {
    endpoints.push_back(g.endpoints(e).u);
    endpoints.push_back(g.endpoints(e).v);
  }
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

  std::vector<std::string> labels;
  labels.reserve(endpoints.size());
  for (Vertex v : endpoints) labels.push_back(g.label(v));
  auto index_of = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(endpoints.begin(), endpoints.end(), v) -
                               endpoints.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(edge_set.size());
  for (EdgeId e : edge_set.ids()) edges.push_back({index_of(g.endpoints(e).u), index_of(g.endpoints(e).v)});
  return Graph::from_edges(endpoints.size(), edges, std::move(labels));
}

Graph contract(const Graph& g, const Graph& h, Vertex g_vertex, Vertex h_vertex) {
  if (g_vertex >= g.num_vertices() || h_vertex >= h.num_vertices())
    throw ValidationError("contraction vertex out of range");
  const auto gn = static_cast<Vertex>(g.num_vertices());
  auto map_h = [&](Vertex v) -> Vertex {
    if (v == h_vertex) return g_vertex;
    return gn + (v < h_vertex ? v : v - 1);
  };
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.push_back({map_h(e.u), map_h(e.v)});
  // from_edges rejects the parallel edges a misuse would create.
  return Graph::from_edges(g.num_vertices() + h.num_vertices() - 1, edges);
}

std::vector<std::vector<EdgeId>> EdgeComponents::groups() const {
  std::vector<std::vector<EdgeId>> out(count);
  for (EdgeId e = 0; e < component_of.size(); ++e) out[component_of[e]].push_back(e);
  return out;
}

EdgeComponents connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  EdgeComponents out;
  out.component_of.assign(g.num_edges(), kUnset);
  std::vector<std::uint32_t> vertex_component(n, kUnset);
  std::vector<Vertex> stack;
  for (EdgeId first = 0; first < g.num_edges(); ++first) {
    if (out.component_of[first] != kUnset) continue;
    const std::uint32_t c = out.count++;
    Vertex root = g.endpoints(first).u;
    vertex_component[root] = c;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      auto nbrs = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        out.component_of[inc[i]] = c;
        if (vertex_component[nbrs[i]] == kUnset) {
          vertex_component[nbrs[i]] = c;
          stack.push_back(nbrs[i]);
        }
      }
    }
  }
  return out;
}

DegeneracyReport degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyReport report;
  report.elimination_order.reserve(n);

  // Bucket queue keyed by residual degree: vertices sorted by degree in
  // `order`, `bucket_start[d]` is the first slot holding degree >= d.
  std::uint32_t max_deg = 0;
  std::vector<std::uint32_t> deg(n);
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));
  std::vector<std::uint32_t> bucket_start(max_deg + 2, 0);
  for (Vertex v = 0; v < n; ++v) ++bucket_start[deg[v] + 1];
  std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());
  std::vector<Vertex> order(n);
  std::vector<std::uint32_t> pos(n);
  {
    std::vector<std::uint32_t> next(bucket_start.begin(), bucket_start.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      pos[v] = next[deg[v]]++;
      order[pos[v]] = v;
    }
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    report.degeneracy = std::max(report.degeneracy, deg[v]);
    report.elimination_order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] <= i || deg[w] <= deg[v]) continue;
      // Move w to the front of its bucket, then shrink the bucket by one.
      std::uint32_t dw = deg[w];
      std::uint32_t front = std::max(bucket_start[dw], i + 1);
      Vertex u = order[front];
      std::swap(order[front], order[pos[w]]);
      std::swap(pos[u], pos[w]);
      bucket_start[dw] = front + 1;
      --deg[w];
    }
  }

  if (g.num_edges() > 0)
    report.average_degeneracy =
        Rational(static_cast<std::int64_t>(min_degree_sum(g)), static_cast<std::int64_t>(g.num_edges()));
  return report;
}

std::uint64_t min_degree_sum(const Graph& g) {
  std::uint64_t sum = 0;
  for (const Edge& e : g.edges()) sum += std::min(g.degree(e.u), g.degree(e.v));
  return sum;
}

Rational clustering_coefficient(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw ValidationError("unknown vertex id");
  const std::int64_t d = g.degree(v);
  if (d < 2)
    throw RangeError("clustering coefficient undefined for degree " + std::to_string(d));
  auto nbrs = g.neighbors(v);
  std::int64_t links = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.has_edge(nbrs[i], nbrs[j])) ++links;
  return Rational(links, d * (d - 1) / 2);
}

}  // namespace truss
