#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "truss/errors.hpp"
#include "truss/families.hpp"
#include "truss/graph.hpp"

using namespace truss;

namespace {

std::vector<std::string> sorted_label_edges(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u), b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out.push_back(a + " " + b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> prob(0.1, 0.9);
  return families::gnp(size(rng), prob(rng), rng());
}

}  // namespace

TEST(Parse, Triangle) {
  Graph g = parse_edge_list("1 2\n2 3\n3 1");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));
}

TEST(Parse, CommentsAndLabels) {
  Graph g = parse_edge_list("a b\n# comment\nb c");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(g.label(2), "c");
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Parse, FirstAppearanceOrder) {
  Graph g = parse_edge_list("z y\nx z\n");
  EXPECT_EQ(g.label(0), "z");
  EXPECT_EQ(g.label(1), "y");
  EXPECT_EQ(g.label(2), "x");
}

TEST(Parse, SelfLoopRejected) { EXPECT_THROW(parse_edge_list("1 1"), ValidationError); }

TEST(Parse, DuplicateRejected) {
  EXPECT_THROW(parse_edge_list("1 2\n2 1\n"), ValidationError);
  EXPECT_THROW(parse_edge_list("1 2\n1 2\n"), ValidationError);
}

TEST(Parse, MalformedLineReportsLine) {
  try {
    parse_edge_list("1 2\n2 3 4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parse, IsolatedVertexPolicy) {
  EXPECT_THROW(parse_edge_list("1 2\n7\n"), ValidationError);
  ParseOptions opts;
  opts.drop_isolated = true;
  Graph g = parse_edge_list("1 2\n7\n", opts);
  EXPECT_EQ(g.num_vertices(), 2u);
  // A declared vertex that later gets an edge is not isolated.
  Graph h = parse_edge_list("7\n1 7\n");
  EXPECT_EQ(h.num_edges(), 1u);
}

TEST(Graph, Invariants) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = random_graph(rng, 30);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      degree_sum += g.degree(v);
      auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (std::size_t i = 0; i < nb.size(); ++i) {
        EXPECT_NE(nb[i], v);
        EXPECT_TRUE(g.has_edge(nb[i], v));
        const Edge e = g.endpoints(g.incident_edges(v)[i]);
        EXPECT_TRUE((e.u == v && e.v == nb[i]) || (e.v == v && e.u == nb[i]));
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.endpoints(e);
      EXPECT_LT(u, v);
      EXPECT_EQ(g.find_edge(v, u), e);
    }
  }
}

TEST(Graph, RejectsBadEdges) {
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph::from_edges(2, loop), ValidationError);
  std::vector<Edge> range{{0, 5}};
  EXPECT_THROW(Graph::from_edges(2, range), ValidationError);
}

TEST(EdgeSet, Validation) {
  EXPECT_THROW(EdgeSet::from_ids({0, 0}, 3), ValidationError);
  EXPECT_THROW(EdgeSet::from_ids({3}, 3), ValidationError);
  EdgeSet s = EdgeSet::from_ids({2, 0}, 3);
  EXPECT_TRUE(s.contains(0) && s.contains(2) && !s.contains(1));
}

TEST(Induced, ByVertices) {
  std::vector<Vertex> three{0, 2, 4};
  Graph k3 = induced_by_vertices(families::complete(5), three);
  EXPECT_EQ(k3.num_vertices(), 3u);
  EXPECT_EQ(k3.num_edges(), 3u);

  std::vector<Vertex> run{0, 1, 2};
  Graph p = induced_by_vertices(families::cycle(5), run);
  EXPECT_EQ(p.num_edges(), 2u);

  Graph empty = induced_by_vertices(families::complete(4), {});
  EXPECT_EQ(empty.num_vertices(), 0u);
  EXPECT_EQ(empty.num_edges(), 0u);

  std::vector<Vertex> bad{9};
  EXPECT_THROW(induced_by_vertices(families::complete(4), bad), ValidationError);
}

TEST(Induced, ByEdges) {
  Graph k4 = families::complete(4);
  // Triangle 0-1-2 in K4.
  std::vector<EdgeId> tri{*k4.find_edge(0, 1), *k4.find_edge(1, 2), *k4.find_edge(0, 2)};
  Graph t = induced_by_edges(k4, EdgeSet::from_ids(tri, k4.num_edges()));
  EXPECT_EQ(t.num_vertices(), 3u);
  EXPECT_EQ(t.num_edges(), 3u);

  Graph none = induced_by_edges(k4, EdgeSet{});
  EXPECT_EQ(none.num_vertices(), 0u);

  // One triangle of the bowtie: vertices 0, 1, 2 by hand.
  Graph bow = families::bowtie();
  std::vector<EdgeId> left{*bow.find_edge(0, 1), *bow.find_edge(0, 2), *bow.find_edge(1, 2)};
  Graph l = induced_by_edges(bow, EdgeSet::from_ids(left, bow.num_edges()));
  EXPECT_EQ(l.num_vertices(), 3u);
  EXPECT_EQ(l.num_edges(), 3u);
}

TEST(Contract, Examples) {
  Graph k4k4 = contract(families::complete(4), families::complete(4), 2, 3);
  EXPECT_EQ(k4k4.num_vertices(), 7u);
  EXPECT_EQ(k4k4.num_edges(), 12u);

  Graph bow = contract(families::complete(3), families::complete(3), 0, 0);
  EXPECT_EQ(bow.num_vertices(), 5u);
  EXPECT_EQ(bow.num_edges(), 6u);

  Graph p = contract(families::path(2), families::path(2), 1, 0);
  EXPECT_EQ(p.num_vertices(), 3u);
  EXPECT_EQ(p.num_edges(), 2u);
  EXPECT_EQ(p.degree(1), 2u);
}

TEST(Contract, CountsOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(rng, 12), h = random_graph(rng, 12);
    Vertex gv = std::uniform_int_distribution<Vertex>(0, g.num_vertices() - 1)(rng);
    Vertex hv = std::uniform_int_distribution<Vertex>(0, h.num_vertices() - 1)(rng);
    Graph c = contract(g, h, gv, hv);
    EXPECT_EQ(c.num_vertices(), g.num_vertices() + h.num_vertices() - 1);
    EXPECT_EQ(c.num_edges(), g.num_edges() + h.num_edges());
    EXPECT_EQ(c.degree(gv), g.degree(gv) + h.degree(hv));
  }
}

TEST(Contract, RejectsOutOfRange) {
  EXPECT_THROW(contract(families::complete(3), families::complete(3), 3, 0), ValidationError);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(families::bowtie()).count, 1u);
  std::vector<Edge> two{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  auto comps = connected_components(Graph::from_edges(6, two));
  EXPECT_EQ(comps.count, 2u);
  EXPECT_EQ(comps.groups()[0].size(), 3u);
  EXPECT_EQ(connected_components(Graph{}).count, 0u);
}

TEST(Components, MatchesReachability) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = families::gnp(20, 0.08, rng());
    auto comps = connected_components(g);
    // Independent union-find over vertices.
    std::vector<Vertex> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Vertex(Vertex)> find = [&](Vertex x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);
    for (EdgeId a = 0; a < g.num_edges(); ++a)
      for (EdgeId b = 0; b < g.num_edges(); ++b)
        EXPECT_EQ(comps.component_of[a] == comps.component_of[b],
                  find(g.endpoints(a).u) == find(g.endpoints(b).u));
  }
}

TEST(Degeneracy, Examples) {
  auto k5 = degeneracy(families::complete(5));
  EXPECT_EQ(k5.degeneracy, 4u);
  EXPECT_EQ(k5.average_degeneracy, Rational(4));

  auto star = degeneracy(families::star(6));
  EXPECT_EQ(star.degeneracy, 1u);
  auto path = degeneracy(families::path(9));
  EXPECT_EQ(path.degeneracy, 1u);

  // P_4: min-degrees over its three edges are 1, 2, 1.
  EXPECT_EQ(degeneracy(families::path(4)).average_degeneracy, Rational(4, 3));
  EXPECT_EQ(min_degree_sum(families::path(4)), 4u);
}

TEST(Degeneracy, OrderRealizesDegeneracyAndBounds) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    Graph g = random_graph(rng, 40);
    auto rep_ = degeneracy(g);
    ASSERT_EQ(rep_.elimination_order.size(), g.num_vertices());
    std::vector<std::size_t> pos(g.num_vertices());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[rep_.elimination_order[i]] = i;
    // Orient each edge toward the later vertex: out-degree <= degeneracy.
    std::uint32_t max_out = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::uint32_t out = 0;
      for (Vertex w : g.neighbors(v)) out += pos[w] > pos[v];
      max_out = std::max(max_out, out);
    }
    EXPECT_EQ(max_out, rep_.degeneracy);  // the order attains it exactly
    // Average degeneracy by its definition.
    std::int64_t sum = 0;
    for (const auto& e : g.edges()) sum += std::min(g.degree(e.u), g.degree(e.v));
    if (g.num_edges() > 0) {
      EXPECT_EQ(rep_.average_degeneracy, Rational(sum, static_cast<std::int64_t>(g.num_edges())));
      EXPECT_LE(rep_.average_degeneracy, Rational(2 * rep_.degeneracy));
      EXPECT_LE(std::uint64_t{rep_.degeneracy} * rep_.degeneracy, 2 * g.num_edges());
    }
  }
}

TEST(Clustering, Examples) {
  EXPECT_EQ(clustering_coefficient(families::complete(4), 0), Rational(1));
  EXPECT_EQ(clustering_coefficient(families::star(4), 0), Rational(0));
  // Triangle 0-1-2 plus pendant 0-3: vertex 0 has degree 3 and one triangle.
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  EXPECT_EQ(clustering_coefficient(Graph::from_edges(4, edges), 0), Rational(1, 3));
  EXPECT_THROW(clustering_coefficient(families::path(3), 0), RangeError);
}

TEST(Serialize, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = families::gnp(25, 0.2, rng());
    ParseOptions opts;
    opts.drop_isolated = true;
    Graph g1 = parse_edge_list(to_edge_list(g), opts);
    // Same labelled edge set.
    std::vector<std::string> expected;
    for (const auto& e : g.edges()) {
      auto a = g.label(e.u), b = g.label(e.v);
      if (b < a) std::swap(a, b);
      expected.push_back(a + " " + b);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(sorted_label_edges(g1), expected);
    // From the first parse on, ids and bytes are stable.
    const std::string text = to_edge_list(g1);
    Graph g2 = parse_edge_list(text);
    EXPECT_EQ(to_edge_list(g2), text);
    EXPECT_EQ(std::vector<std::string>(g2.labels().begin(), g2.labels().end()),
              std::vector<std::string>(g1.labels().begin(), g1.labels().end()));
    ASSERT_EQ(g2.num_edges(), g1.num_edges());
    for (EdgeId e = 0; e < g1.num_edges(); ++e) EXPECT_EQ(g2.endpoints(e), g1.endpoints(e));
  }
}

TEST(Serialize, VerticesAppearInIdOrder) {
  // Vertex 2 has no smaller neighbour and no edge to 3: it needs a
  // declaration line.
  const std::vector<Edge> edges{{0, 1}, {0, 4}, {2, 4}, {3, 4}, {1, 3}};
  const Graph g = Graph::from_edges(5, edges);
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text, "1 2\n3\n2 4\n1 5\n3 5\n4 5\n");
  const Graph h = parse_edge_list(text);
  for (EdgeId e = 0; e < g.num_edges(); ++e) EXPECT_EQ(h.endpoints(e), g.endpoints(e));
  EXPECT_EQ(to_edge_list(h), text);
}

TEST(Families, Shapes) {
  EXPECT_EQ(families::complete(6).num_edges(), 15u);
  EXPECT_EQ(families::cycle(7).num_edges(), 7u);
  EXPECT_EQ(families::petersen().num_edges(), 15u);
  EXPECT_EQ(families::star(5).degree(0), 5u);
  EXPECT_EQ(families::bowtie().degree(0), 4u);
  Graph g = families::gnp(30, 0.3, 1);
  EXPECT_EQ(to_edge_list(g), to_edge_list(families::gnp(30, 0.3, 1)));
}
