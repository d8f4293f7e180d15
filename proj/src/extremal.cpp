#include "truss/extremal.hpp"

#include <algorithm>

#include "truss/errors.hpp"
#include "truss/families.hpp"
#include "truss/peeler.hpp"
#include "truss/verify.hpp"

namespace truss {

bool ConstructionReceipt::counts_match() const noexcept {
  if (actual_n != expected_n) return false;
  if (expected_m && *expected_m != actual_m) return false;
  if (m_upper_bound && Rational(static_cast<std::int64_t>(actual_m)) > *m_upper_bound) return false;
  return true;
}

namespace {

std::uint64_t choose2(std::uint64_t x) { return x * (x - 1) / 2; }

ConstructionReceipt receipt_for(const Graph& g, std::string name,
                                std::vector<std::pair<std::string, std::string>> params) {
  ConstructionReceipt r;
  r.name = std::move(name);
  r.parameters = std::move(params);
  r.actual_n = g.num_vertices();
  r.actual_m = g.num_edges();
  return r;
}

// Records the count checks and the k-truss check; a failure here is a bug
// in the generator, never a property of the request.
void certify(const Graph& g, ConstructionReceipt& r, std::uint32_t k) {
  if (!r.counts_match())
    throw std::logic_error(r.name + ": produced " + std::to_string(r.actual_n) + " vertices and " +
                           std::to_string(r.actual_m) + " edges, outside the expected counts");
  r.checks_passed.push_back("vertex-count");
  if (r.expected_m) r.checks_passed.push_back("edge-count");
  if (r.m_upper_bound) r.checks_passed.push_back("edge-bound");
  if (!is_k_truss(g, k)) throw std::logic_error(r.name + ": output is not a " + std::to_string(k) + "-truss");
  r.checks_passed.push_back(std::to_string(k) + "-truss");
}

std::string str(std::uint64_t x) { return std::to_string(x); }

Graph chain_onto(Graph g, std::uint32_t k, std::uint32_t copies) {
  const Graph clique = families::complete(k + 2);
  for (std::uint32_t c = 0; c < copies; ++c)
    g = contract(g, clique, static_cast<Vertex>(g.num_vertices() - 1), 0);
  return g;
}

}  // namespace

Construction clique_chain(std::uint32_t k, std::uint32_t s) {
  if (k < 1 || s < 1) throw RangeError("clique chain needs k >= 1 and s >= 1");
  Graph g = chain_onto(families::complete(k + 2), k, s - 1);
  auto r = receipt_for(g, "clique-chain", {{"k", str(k)}, {"s", str(s)}});
  r.expected_n = static_cast<std::uint64_t>(s) * (k + 1) + 1;
  r.expected_m = static_cast<std::uint64_t>(s) * choose2(k + 2);
  certify(g, r, k);
  return {std::move(g), std::move(r)};
}

Construction clique_chain_remainder(std::uint32_t k, std::uint32_t n) {
  if (k < 1) throw RangeError("clique chain needs k >= 1");
  if (n < k + 2) throw RangeError("a " + str(k) + "-truss needs at least " + str(k + 2) + " vertices");
  const std::uint32_t s = (n - (k + 2)) / (k + 1);
  const std::uint32_t rem = n - s * (k + 1);
  Graph g = chain_onto(families::complete(rem), k, s);
  auto r = receipt_for(g, "chain-remainder", {{"k", str(k)}, {"n", str(n)}});
  r.expected_n = n;
  r.expected_m = static_cast<std::uint64_t>(s) * choose2(k + 2) + choose2(rem);
  r.notes.push_back("s = " + str(s) + " copies of K_" + str(k + 2) + " chained onto K_" + str(rem));
  certify(g, r, k);
  return {std::move(g), std::move(r)};
}

Construction critical_2truss(std::uint32_t n) {
  if (n < 6) throw RangeError("critical 2-truss construction needs n >= 6");
  const Vertex len = n - 2, x1 = n - 2, x2 = n - 1;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < len; ++v) {
    edges.push_back({v, (v + 1) % len});
    edges.push_back({v, x1});
    edges.push_back({v, x2});
  }
  Graph g = Graph::from_edges(n, edges);
  auto r = receipt_for(g, "critical-2truss", {{"n", str(n)}});
  r.expected_n = n;
  r.expected_m = 3ULL * n - 6;
  certify(g, r, 2);
  return {std::move(g), std::move(r)};
}

Construction suspend(const Graph& g, std::uint32_t k, std::uint32_t added) {
  if (added != 1 && added != 2) throw RangeError("suspension adds 1 or 2 vertices");
  if (g.num_edges() == 0 || !is_k_truss(g, k))
    throw ValidationError("suspension input is not a " + str(k) + "-truss");
  const auto n = static_cast<Vertex>(g.num_vertices());
  const std::uint32_t target = k + added;

  // Old edges plus every apex-to-old-vertex candidate.
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex a = n; a < n + added; ++a)
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, a});
  const Graph full = Graph::from_edges(n + added, edges);
  const std::size_t m_old = g.num_edges(), m_full = full.num_edges();
  std::vector<std::uint8_t> is_old(m_full, 0);
  for (EdgeId e = 0; e < m_full; ++e) is_old[e] = full.endpoints(e).v < n;

  // Candidate ids in (apex, old vertex) order.
  std::vector<EdgeId> order;
  for (Vertex a = n; a < n + added; ++a)
    for (Vertex v = 0; v < n; ++v) order.push_back(*full.find_edge(v, a));

  auto keeps_old = [&](const EdgeSet& z) {
    std::size_t old = 0;
    for (EdgeId e : z.ids()) old += is_old[e];
    return old == m_old;
  };
  auto with_old = [&](const std::vector<std::uint8_t>& in_f) {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < m_full; ++e)
      if (is_old[e] || in_f[e]) ids.push_back(e);
    return EdgeSet::from_ids(std::move(ids), m_full);
  };
  auto adopt = [&](const EdgeSet& z, std::vector<std::uint8_t>& in_f) {
    std::fill(in_f.begin(), in_f.end(), 0);
    for (EdgeId e : z.ids())
      if (!is_old[e]) in_f[e] = 1;
  };

  std::vector<std::uint8_t> in_f(m_full, 0);
  for (EdgeId e = 0; e < m_full; ++e) in_f[e] = !is_old[e];
  EdgeSet z = max_k_truss(full, target, with_old(in_f));
  if (!keeps_old(z))
    throw InfeasibleError("no " + str(target) + "-truss extends the input by " + str(added) + " apexes");
  adopt(z, in_f);

  for (bool changed = true; changed;) {
    changed = false;
    for (EdgeId f : order) {
      if (!in_f[f]) continue;
      in_f[f] = 0;
      EdgeSet trial = max_k_truss(full, target, with_old(in_f));
      if (keeps_old(trial)) {
        adopt(trial, in_f);
        changed = true;
      } else {
        in_f[f] = 1;
      }
    }
  }

  std::vector<Edge> kept(g.edges().begin(), g.edges().end());
  for (EdgeId e = 0; e < m_full; ++e)
    if (in_f[e]) kept.push_back(full.endpoints(e));
  Graph out = Graph::from_edges(n + added, kept);
  for (Vertex a = n; a < n + added; ++a)
    if (out.degree(a) == 0)
      throw InfeasibleError("suspension leaves apex " + str(a - n + 1) + " without edges");

  auto r = receipt_for(out, "suspend", {{"k", str(k)}, {"added", str(added)}, {"input_n", str(n)},
                                        {"input_m", str(m_old)}});
  r.expected_n = n + added;
  r.m_upper_bound = Rational(static_cast<std::int64_t>(m_old + static_cast<std::uint64_t>(added) * n));
  r.notes.push_back("apex edges kept: " + str(out.num_edges() - m_old));
  certify(out, r, target);
  r.checks_passed.push_back("apex-set-minimal");
  return {std::move(out), std::move(r)};
}

Construction truss_from_embedding(const FaceEmbedding& emb, std::uint32_t k) {
  if (k < 3) throw RangeError("face construction needs k >= 3");
  const Graph& t = emb.skeleton();
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  auto next = static_cast<Vertex>(t.num_vertices());
  for (const auto& face : emb.faces()) {
    const Vertex first = next;
    next += k - 1;
    for (Vertex a = first; a < next; ++a) {
      for (Vertex b = a + 1; b < next; ++b) edges.push_back({a, b});
      for (Vertex v : face) edges.push_back({v, a});
    }
  }
  Graph g = Graph::from_edges(next, edges);

  const std::uint64_t r_faces = emb.face_count(), len = emb.total_length();
  auto r = receipt_for(g, "truss-from-embedding", {{"k", str(k)}, {"faces", str(r_faces)}, {"g", str(len)}});
  r.expected_n = r_faces * (k - 2) + len / 2;
  r.expected_m = r_faces * choose2(k - 1) + (2ULL * k - 1) * len / 2;
  if (!emb.clean()) r.notes.push_back("embedding has chords or skeleton triangles");
  certify(g, r, k);
  return {std::move(g), std::move(r)};
}

Construction suspension_ladder(std::uint32_t k, std::uint32_t n) {
  if (k < 2) throw RangeError("suspension ladder needs k >= 2");
  if (n < k + 4) throw RangeError("suspension ladder needs n >= k + 4");
  Construction c;
  if (k % 2 == 0) {
    c = critical_2truss(n + 2 - k);
    for (std::uint32_t level = 2; level < k; level += 2) c = suspend(c.graph, level, 2);
  } else {
    c = suspend(suspension_ladder(k - 1, n - 1).graph, k - 1, 1);
  }
  auto r = receipt_for(c.graph, "suspension-ladder", {{"k", str(k)}, {"n", str(n)}});
  r.expected_n = n;
  const auto kk = static_cast<std::int64_t>(k);
  r.m_upper_bound = Rational(static_cast<std::int64_t>(n) * (kk + 1)) - Rational(kk * kk, 2) - 2 * kk +
                    Rational(1, 2);
  if (Rational(static_cast<std::int64_t>(r.actual_m)) > *r.m_upper_bound) {
    r.notes.push_back("edge count exceeds n(k+1) - k^2/2 - 2k + 1/2");
    r.m_upper_bound.reset();
  }
  certify(c.graph, r, k);
  return {std::move(c.graph), std::move(r)};
}

Construction critical_truss(std::uint32_t k, std::uint32_t n) {
  if (k < 2) throw RangeError("critical k-truss construction needs k >= 2");
  if (n < k + 4) throw RangeError("critical " + str(k) + "-truss construction needs n >= " + str(k + 4));
  const auto kk = static_cast<std::int64_t>(k);
  const Rational bound = Rational(static_cast<std::int64_t>(n)) * (Rational(kk, 2) + Rational(5, 2) - Rational(1, kk)) +
                         10 * kk * kk;
  const std::vector<std::pair<std::string, std::string>> params{{"k", str(k)}, {"n", str(n)}};

  auto finish = [&](Construction c, std::string route, std::vector<std::string> notes, bool checked) {
    auto r = receipt_for(c.graph, "critical", params);
    r.expected_n = n;
    r.expected_m = c.receipt.expected_m;
    r.m_upper_bound = bound;
    r.notes = std::move(notes);
    r.notes.push_back("route: " + route);
    if (Rational(static_cast<std::int64_t>(r.actual_m)) > bound) {
      r.notes.push_back("edge count exceeds n(k/2 + 5/2 - 1/k) + 10k^2");
      r.m_upper_bound.reset();
    }
    certify(c.graph, r, k);
    if (c.graph.num_edges() <= kCriticalCheckEdgeLimit) {
      if (!checked && !is_critical_k_truss(c.graph, k))
        throw std::logic_error("critical: " + route + " output is not critical");
      r.checks_passed.push_back("critical");
    } else {
      r.notes.push_back("criticality not checked above " + str(kCriticalCheckEdgeLimit) + " edges");
    }
    return Construction{std::move(c.graph), std::move(r)};
  };

  if (k == 2) return finish(critical_2truss(n), "critical-2truss", {}, false);
  if (n <= 2 * k) return finish(suspension_ladder(k, n), "suspension-ladder", {"n <= 2k"}, false);

  const std::uint32_t i = n / k, j = n % k;
  std::vector<std::string> notes{"n = " + str(i) + "*" + str(k) + " + " + str(j)};
  try {
    TorusEmbedding te = torus_embedding(i - 2, j + 4);
    if (!te.embedding.clean()) {
      notes.push_back("fallback: torus embedding for (" + str(i - 2) + ", " + str(j + 4) +
                      ") has chords or skeleton triangles");
    } else {
      Construction c = truss_from_embedding(te.embedding, k);
      if (c.graph.num_edges() > kCriticalCheckEdgeLimit || is_critical_k_truss(c.graph, k))
        return finish(std::move(c), "torus", std::move(notes), true);
      notes.push_back("fallback: torus construction failed the criticality check");
    }
  } catch (const InfeasibleError& e) {
    notes.push_back(std::string("fallback: ") + e.what());
  }
  return finish(suspension_ladder(k, n), "suspension-ladder", std::move(notes), false);
}

}  // namespace truss
