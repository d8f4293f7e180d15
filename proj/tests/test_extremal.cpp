#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "truss/errors.hpp"
#include "truss/extremal.hpp"
#include "truss/families.hpp"
#include "truss/peeler.hpp"
#include "truss/triangles.hpp"
#include "truss/verify.hpp"

using namespace truss;

namespace {

std::uint64_t binom2(std::uint64_t x) { return x * (x - 1) / 2; }

// Every edge in at least k triangles, checked with the oracle's recount.
bool oracle_k_truss(const Graph& g, std::size_t k) {
  for (auto [e, t] : oracle::edge_triangles(g))
    if (t < k) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) return false;
  return g.num_edges() > 0;
}

// Criticality through the oracle: for each edge e, the largest k-truss in
// E - e must be empty.
bool oracle_critical(const Graph& g, std::size_t k) {
  if (!oracle_k_truss(g, k)) return false;
  const auto all = oracle::edge_keys(g);
  for (auto e : all) {
    auto rest = all;
    rest.erase(e);
    if (!oracle::max_truss(g.num_vertices(), rest, k).empty()) return false;
  }
  return true;
}

bool has_check(const ConstructionReceipt& r, const std::string& name) {
  return std::find(r.checks_passed.begin(), r.checks_passed.end(), name) != r.checks_passed.end();
}

bool has_note_containing(const ConstructionReceipt& r, const std::string& text) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.find(text) != std::string::npos; });
}

}  // namespace

TEST(CliqueChain, Examples) {
  const auto c = clique_chain(2, 2);
  EXPECT_EQ(c.graph.num_vertices(), 7u);
  EXPECT_EQ(c.graph.num_edges(), 12u);
  EXPECT_TRUE(has_check(c.receipt, "2-truss"));
  const auto one = clique_chain(3, 1);
  EXPECT_EQ(one.graph.num_edges(), 10u);
  EXPECT_THROW(clique_chain(0, 1), RangeError);
}

TEST(CliqueChain, CountsAndTruss) {
  for (std::uint32_t k = 1; k <= 5; ++k)
    for (std::uint32_t s = 1; s <= 5; ++s) {
      const auto c = clique_chain(k, s);
      EXPECT_EQ(c.graph.num_vertices(), s * (k + 1) + 1);
      EXPECT_EQ(c.graph.num_edges(), s * binom2(k + 2));
      EXPECT_TRUE(oracle_k_truss(c.graph, k));
      EXPECT_TRUE(c.receipt.counts_match());
      // Each copy is its own k-truss, so the chain is never critical past s = 1.
      EXPECT_EQ(is_critical_k_truss(c.graph, k), s == 1);
    }
}

TEST(ChainRemainder, Examples) {
  const auto c = clique_chain_remainder(2, 8);
  EXPECT_EQ(c.graph.num_vertices(), 8u);
  EXPECT_EQ(c.graph.num_edges(), 16u);
  const auto k4 = clique_chain_remainder(2, 4);
  EXPECT_EQ(k4.graph.num_edges(), 6u);
  EXPECT_THROW(clique_chain_remainder(3, 4), RangeError);
}

TEST(ChainRemainder, ExactVertexCountAndTruss) {
  for (std::uint32_t k = 1; k <= 6; ++k)
    for (std::uint32_t n = k + 2; n <= 40; ++n) {
      const auto c = clique_chain_remainder(k, n);
      ASSERT_EQ(c.graph.num_vertices(), n);
      EXPECT_TRUE(oracle_k_truss(c.graph, k)) << "k=" << k << " n=" << n;
      EXPECT_EQ(c.receipt.actual_m, c.graph.num_edges());
    }
}

TEST(Critical2Truss, Examples) {
  const auto c6 = critical_2truss(6);
  EXPECT_EQ(c6.graph.num_edges(), 12u);
  for (auto [e, t] : oracle::edge_triangles(c6.graph)) EXPECT_EQ(t, 2u);
  const auto c10 = critical_2truss(10);
  EXPECT_EQ(c10.graph.num_edges(), 24u);
  EXPECT_TRUE(oracle_critical(c10.graph, 2));
  EXPECT_TRUE(is_critical_by_subsets(c6.graph, 2));
  EXPECT_THROW(critical_2truss(5), RangeError);
}

TEST(Critical2Truss, RangeOfSizes) {
  for (std::uint32_t n = 6; n <= 30; ++n) {
    const auto c = critical_2truss(n);
    EXPECT_EQ(c.graph.num_edges(), 3u * n - 6);
    EXPECT_TRUE(oracle_critical(c.graph, 2)) << n;
  }
}

TEST(Suspend, TriangleToK4) {
  const auto c = suspend(families::complete(3), 1, 1);
  EXPECT_EQ(c.graph.num_vertices(), 4u);
  EXPECT_EQ(c.graph.num_edges(), 6u);
  EXPECT_TRUE(has_check(c.receipt, "apex-set-minimal"));
}

TEST(Suspend, CriticalTwoTrussToFourTruss) {
  const auto c = suspend(critical_2truss(6).graph, 2, 2);
  EXPECT_EQ(c.graph.num_vertices(), 8u);
  EXPECT_LE(c.graph.num_edges(), 12u + 2 * 6);
  EXPECT_TRUE(oracle_k_truss(c.graph, 4));
  EXPECT_TRUE(oracle_critical(c.graph, 4));
}

TEST(Suspend, ApexSetIsInclusionMinimal) {
  for (auto [base, k] : {std::pair{families::complete(4), 2u}, {critical_2truss(6).graph, 2u},
                         {critical_2truss(7).graph, 2u}, {families::complete(5), 3u}}) {
    for (std::uint32_t added : {1u, 2u}) {
      Construction c;
      try {
        c = suspend(base, k, added);
      } catch (const InfeasibleError&) {
        continue;
      }
      const std::size_t n = base.num_vertices();
      const auto all = oracle::edge_keys(c.graph);
      ASSERT_TRUE(oracle_k_truss(c.graph, k + added));
      // Dropping any single apex edge must lose some old edge from the
      // largest (k + added)-truss.
      for (auto e : all) {
        if (e.second < n) continue;
        auto rest = all;
        rest.erase(e);
        const auto kept = oracle::max_truss(c.graph.num_vertices(), rest, k + added);
        bool lost_old = false;
        for (auto old : oracle::edge_keys(base)) lost_old |= !kept.count(old);
        EXPECT_TRUE(lost_old) << "removable apex edge " << e.first << "-" << e.second;
      }
    }
  }
}

TEST(Suspend, Errors) {
  EXPECT_THROW(suspend(families::complete(3), 1, 3), RangeError);
  EXPECT_THROW(suspend(families::cycle(5), 1, 1), ValidationError);
  // A single triangle cannot become a 3-truss with one apex.
  EXPECT_THROW(suspend(families::complete(3), 1, 2), InfeasibleError);
}

TEST(SuspensionLadder, BoundAndTruss) {
  for (std::uint32_t k = 2; k <= 6; ++k)
    for (std::uint32_t n = k + 4; n <= k + 12; ++n) {
      const auto c = suspension_ladder(k, n);
      ASSERT_EQ(c.graph.num_vertices(), n);
      EXPECT_TRUE(oracle_k_truss(c.graph, k));
      const auto kk = static_cast<std::int64_t>(k);
      const Rational bound = Rational(static_cast<std::int64_t>(n) * (kk + 1)) - Rational(kk * kk, 2) -
                             2 * kk + Rational(1, 2);
      EXPECT_LE(Rational(static_cast<std::int64_t>(c.graph.num_edges())), bound) << "k=" << k << " n=" << n;
    }
}

TEST(TrussFromEmbedding, FiveSquareLadderCounts) {
  const auto te = torus_embedding(3, 4);
  ASSERT_EQ(te.embedding.face_count(), 5u);
  ASSERT_EQ(te.embedding.total_length(), 20u);
  const auto c = truss_from_embedding(te.embedding, 3);
  EXPECT_EQ(c.graph.num_vertices(), 15u);
  EXPECT_EQ(c.graph.num_edges(), 55u);
}

TEST(TrussFromEmbedding, SixSquaresTwoSixFaces) {
  const auto c = truss_from_embedding(torus_embedding(4, 6).embedding, 5);
  EXPECT_EQ(c.graph.num_vertices(), 32u);
  EXPECT_EQ(c.graph.num_edges(), 162u);
  EXPECT_TRUE(has_check(c.receipt, "edge-count"));
}

TEST(TrussFromEmbedding, PerEdgeTrianglesOnCleanEmbedding) {
  // Clique vertices of face f get ids V + f(k-1) .. V + f(k-1) + k-2.
  const auto te = torus_embedding(6, 6);
  ASSERT_TRUE(te.embedding.clean());
  const std::size_t skeleton_n = te.embedding.vertex_count();
  for (std::uint32_t k = 3; k <= 6; ++k) {
    const auto c = truss_from_embedding(te.embedding, k);
    auto face_len = [&](Vertex x) { return te.embedding.faces()[(x - skeleton_n) / (k - 1)].size(); };
    for (auto [e, t] : oracle::edge_triangles(c.graph)) {
      const bool a_old = e.first < skeleton_n, b_old = e.second < skeleton_n;
      std::size_t expected;
      if (a_old && b_old)
        expected = 2 * (k - 1);  // the cliques of its two faces
      else if (!a_old && !b_old)
        expected = (k - 3) + face_len(e.first);
      else
        expected = (k - 2) + 2;  // rest of the clique and two face neighbours
      EXPECT_EQ(t, expected) << "k=" << k << " edge " << e.first << "-" << e.second;
    }
  }
}

TEST(TrussFromEmbedding, CriticalOnCleanEmbeddings) {
  for (auto [i, t] : {std::pair{6u, 4u}, {6u, 5u}, {8u, 6u}, {9u, 7u}})
    for (std::uint32_t k = 3; k <= 5; ++k) {
      const auto te = torus_embedding(i, t);
      ASSERT_TRUE(te.embedding.clean());
      const auto c = truss_from_embedding(te.embedding, k);
      EXPECT_TRUE(oracle_critical(c.graph, k)) << "i=" << i << " t=" << t << " k=" << k;
    }
  EXPECT_THROW(truss_from_embedding(torus_embedding(6, 4).embedding, 2), RangeError);
}

TEST(CriticalTruss, TwoTrussExample) {
  const auto c = critical_truss(2, 9);
  EXPECT_EQ(c.graph.num_edges(), 21u);
  EXPECT_TRUE(has_check(c.receipt, "critical"));
}

TEST(CriticalTruss, GridIsCriticalWithinBound) {
  for (std::uint32_t k = 2; k <= 5; ++k)
    for (std::uint32_t n = k + 4; n <= 40; ++n) {
      const auto c = critical_truss(k, n);
      ASSERT_EQ(c.graph.num_vertices(), n) << "k=" << k;
      EXPECT_TRUE(oracle_critical(c.graph, k)) << "k=" << k << " n=" << n;
      const auto kk = static_cast<std::int64_t>(k);
      const Rational bound =
          Rational(static_cast<std::int64_t>(n)) * (Rational(kk, 2) + Rational(5, 2) - Rational(1, kk)) +
          10 * kk * kk;
      EXPECT_LE(Rational(static_cast<std::int64_t>(c.graph.num_edges())), bound);
      EXPECT_TRUE(has_note_containing(c.receipt, "route: "));
    }
}

TEST(CriticalTruss, TorusRouteUsedWhenClean) {
  const auto c = critical_truss(5, 40);  // i = 8, j = 0: six squares, two 4-faces
  EXPECT_TRUE(has_note_containing(c.receipt, "route: torus"));
  const auto fallback = critical_truss(5, 32);  // i = 6, j = 2: four squares
  EXPECT_TRUE(has_note_containing(fallback.receipt, "fallback"));
  EXPECT_TRUE(has_note_containing(fallback.receipt, "route: suspension-ladder"));
}

TEST(CriticalTruss, Errors) {
  EXPECT_THROW(critical_truss(1, 10), RangeError);
  EXPECT_THROW(critical_truss(4, 7), RangeError);
}

TEST(Extremal, CliqueIsTheSmallestTruss) {
  for (std::uint32_t k = 1; k <= 5; ++k) {
    const Graph clique = families::complete(k + 2);
    EXPECT_TRUE(oracle_critical(clique, k));
    // Minimum degree and vertex lower bounds on critical constructions.
    const std::uint32_t kc = std::max(k, 2u);
    for (std::uint32_t n = kc + 4; n <= kc + 10; ++n) {
      const Graph g = critical_truss(kc, n).graph;
      for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_GE(g.degree(v), kc + 1);
    }
  }
}

TEST(Extremal, NoKTrussOnKPlusThreeVerticesIsCritical) {
  // Exhaustive over all graphs on k+3 vertices for k = 1, 2.
  for (std::uint32_t k = 1; k <= 2; ++k) {
    const std::uint32_t n = k + 3;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
      const Graph g = Graph::from_edges(n, edges);
      bool isolated = false;
      for (Vertex v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
      if (isolated) continue;
      EXPECT_FALSE(oracle::critical_by_definition(g, k)) << "mask=" << mask;
    }
  }
}

TEST(Extremal, TriangleLowerBoundOnConstructions) {
  for (std::uint32_t k = 2; k <= 5; ++k)
    for (std::uint32_t n = k + 4; n <= 30; n += 3) {
      const Graph g = critical_truss(k, n).graph;
      const auto t = triangle_counts(g).total;
      EXPECT_GE(Rational(static_cast<std::int64_t>(t) * 6),
                Rational(static_cast<std::int64_t>(n - 1) * (k + 2) * k));
    }
}
