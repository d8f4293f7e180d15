#include "truss/verify.hpp"

#include <algorithm>

#include "truss/errors.hpp"

namespace truss {

namespace {

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.num_vertices() > cap)
    throw CapacityError(std::string(what) + " is limited to " + std::to_string(cap) + " vertices, got " +
                        std::to_string(g.num_vertices()));
}

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

std::string edge_name(const Graph& g, EdgeId e) {
  const auto [u, v] = g.endpoints(e);
  return "edge " + g.label(u) + "-" + g.label(v);
}

std::string vertex_name(const Graph& g, Vertex v) { return "vertex " + g.label(v); }

// Keeps the item with the least slack against its bound.
class Tracker {
 public:
  Tracker(std::string name, std::uint32_t k, Relation rel) {
    check_.name = std::move(name);
    check_.k = k;
    check_.relation = rel;
  }
  void add(Rational observed, Rational bound, const std::string& witness) {
    Rational slack = check_.relation == Relation::at_least ? observed - bound : bound - observed;
    if (!seen_ || slack < slack_) {
      seen_ = true;
      slack_ = slack;
      check_.observed = observed;
      check_.bound = bound;
      check_.witness = witness;
      check_.passed = slack >= 0;
    }
  }
  bool empty() const noexcept { return !seen_; }
  BoundCheck take() { return std::move(check_); }

 private:
  BoundCheck check_;
  Rational slack_{0};
  bool seen_ = false;
};

}  // namespace

TriangleCounts brute_force_triangles(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "brute-force triangle counting");
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::int64_t>> edge_at(n, std::vector<std::int64_t>(n, -1));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    edge_at[u][v] = edge_at[v][u] = e;
  }
  TriangleCounts out;
  out.per_edge.assign(g.num_edges(), 0);
  out.per_vertex.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (edge_at[a][b] < 0) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (edge_at[a][c] < 0 || edge_at[b][c] < 0) continue;
        ++out.total;
        ++out.per_edge[edge_at[a][b]];
        ++out.per_edge[edge_at[a][c]];
        ++out.per_edge[edge_at[b][c]];
        ++out.per_vertex[a];
        ++out.per_vertex[b];
        ++out.per_vertex[c];
      }
    }
  return out;
}

TrussLabels oracle_truss_decomposition(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "the trussness oracle");
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  std::vector<std::vector<std::uint8_t>> alive(n, std::vector<std::uint8_t>(n, 0));
  for (const Edge& e : g.edges()) alive[e.u][e.v] = alive[e.v][e.u] = 1;
  std::vector<std::uint8_t> residual(m, 1);
  std::size_t remaining = m;

  TrussLabels out;
  out.tau.assign(m, 0);
  out.exact.assign(m, 1);
  for (std::uint32_t k = 1; remaining > 0; ++k) {
    while (true) {
      std::vector<EdgeId> doomed;
      for (EdgeId e = 0; e < m; ++e) {
        if (!residual[e]) continue;
        const auto [u, v] = g.endpoints(e);
        std::uint32_t count = 0;
        for (std::size_t w = 0; w < n; ++w) count += alive[u][w] & alive[v][w];
        if (count < k) doomed.push_back(e);
      }
      if (doomed.empty()) break;
      for (EdgeId e : doomed) {
        const auto [u, v] = g.endpoints(e);
        alive[u][v] = alive[v][u] = 0;
        residual[e] = 0;
        out.tau[e] = k - 1;
      }
      remaining -= doomed.size();
    }
  }
  return out;
}

bool is_k_truss(const Graph& g, std::uint32_t k) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) return false;
  const auto counts = triangle_counts(g);
  return std::all_of(counts.per_edge.begin(), counts.per_edge.end(), [k](auto c) { return c >= k; });
}

bool is_critical_k_truss(const Graph& g, std::uint32_t k) {
  if (g.num_edges() == 0 || !is_k_truss(g, k)) return false;
  const std::size_t m = g.num_edges();
  for (EdgeId e = 0; e < m; ++e) {
    std::vector<EdgeId> rest;
    rest.reserve(m - 1);
    for (EdgeId f = 0; f < m; ++f)
      if (f != e) rest.push_back(f);
    if (!max_k_truss(g, k, EdgeSet::from_ids(std::move(rest), m)).empty()) return false;
  }
  return true;
}

bool is_critical_by_subsets(const Graph& g, std::uint32_t k) {
  const std::size_t m = g.num_edges();
  if (m > kSubsetEdgeCap)
    throw CapacityError("subset enumeration is limited to " + std::to_string(kSubsetEdgeCap) + " edges");
  if (m == 0) return false;
  // For each edge, the edge pairs closing a triangle with it.
  std::vector<std::vector<std::uint32_t>> closers(m);
  for (EdgeId e = 0; e < m; ++e) {
    const auto [u, v] = g.endpoints(e);
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
      auto uw = g.find_edge(u, w), vw = g.find_edge(v, w);
      if (uw && vw) closers[e].push_back((1u << *uw) | (1u << *vw));
    }
  }
  auto truss_mask = [&](std::uint32_t mask) {
    for (EdgeId e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      std::uint32_t count = 0;
      for (auto pair : closers[e]) count += (mask & pair) == pair;
      if (count < k) return false;
    }
    return true;
  };
  const std::uint32_t full = (1u << m) - 1;
  // Edge-induced subgraphs have no isolated vertices, so the full set needs
  // the vertex check separately.
  if (!is_k_truss(g, k)) return false;
  for (std::uint32_t mask = 1; mask < full; ++mask)
    if (truss_mask(mask)) return false;
  return true;
}

bool BoundReport::passed() const noexcept { return violations() == 0; }

std::size_t BoundReport::violations() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.passed; }));
}

BoundReport bound_report(const Graph& g, const TrussLabels& labels, std::optional<std::uint32_t> only_k) {
  if (labels.tau.size() != g.num_edges()) throw ValidationError("labels do not match graph");
  if (!labels.fully_exact()) throw ValidationError("bound checks need exact labels, got a truncated decomposition");
  BoundReport report;
  const std::int64_t m = static_cast<std::int64_t>(g.num_edges());
  if (m == 0) return report;
  const auto degen = degeneracy(g);

  // Largest integer t with (2t + 3)^2 <= 8m + 1.
  std::int64_t tau_cap = -1;
  while ((2 * (tau_cap + 1) + 3) * (2 * (tau_cap + 1) + 3) <= 8 * m + 1) ++tau_cap;
  Tracker sqrt_bound("tau-sqrt", 0, Relation::at_most);
  Tracker degen_bound("tau-degen", 0, Relation::at_most);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    sqrt_bound.add(labels.tau[e], tau_cap, edge_name(g, e));
    degen_bound.add(labels.tau[e], static_cast<std::int64_t>(degen.degeneracy) - 1, edge_name(g, e));
  }
  report.checks.push_back(sqrt_bound.take());
  report.checks.push_back(degen_bound.take());
  Tracker degen_sqrt("degen-sqrt", 0, Relation::at_most);
  degen_sqrt.add(static_cast<std::int64_t>(degen.degeneracy) * degen.degeneracy, 2 * m, "graph");
  report.checks.push_back(degen_sqrt.take());
  Tracker avg("avg-degen", 0, Relation::at_most);
  avg.add(degen.average_degeneracy, 2 * static_cast<std::int64_t>(degen.degeneracy), "graph");
  report.checks.push_back(avg.take());

  const std::uint32_t top = labels.max_tau();
  for (std::uint32_t k = 1; k <= top; ++k) {
    if (only_k && *only_k != k) continue;
    const auto kk = static_cast<std::int64_t>(k);
    Tracker min_degree("min-degree", k, Relation::at_least);
    Tracker vertices("vertices", k, Relation::at_least);
    Tracker clustering("clustering", k, Relation::at_least);
    Tracker closed("closed-nbhd", k, Relation::at_least);
    Tracker edges("edges", k, Relation::at_least);
    Tracker triangles("triangles", k, Relation::at_least);
    for (const EdgeSet& comp : k_truss_components(g, k, labels)) {
      const Graph c = induced_by_edges(g, comp);
      const auto counts = triangle_counts(c);
      const auto nc = static_cast<std::int64_t>(c.num_vertices());
      const auto mc = static_cast<std::int64_t>(c.num_edges());
      const std::string where = "component of " + edge_name(g, comp.ids().front());
      for (Vertex v = 0; v < c.num_vertices(); ++v) {
        const std::string who = vertex_name(c, v);
        const std::int64_t d = c.degree(v);
        const auto tv = static_cast<std::int64_t>(counts.per_vertex[v]);
        min_degree.add(d, kk + 1, who);
        if (d >= 2)
          clustering.add(Rational(tv, static_cast<std::int64_t>(choose2(d))),
                         Rational(static_cast<std::int64_t>(choose2(k + 1)), static_cast<std::int64_t>(choose2(d))),
                         who);
        closed.add(d + tv, static_cast<std::int64_t>(choose2(k + 2)), who);
      }
      vertices.add(nc, kk + 2, where);
      edges.add(mc, Rational((nc - 1) * (kk + 2), 2), where);
      triangles.add(static_cast<std::int64_t>(counts.total), Rational((nc - 1) * (kk + 2) * kk, 6), where);
    }
    for (Tracker* t : {&min_degree, &vertices, &clustering, &closed, &edges, &triangles})
      if (!t->empty()) report.checks.push_back(t->take());
  }
  return report;
}

}  // namespace truss
