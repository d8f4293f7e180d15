#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "truss/errors.hpp"
#include "truss/families.hpp"
#include "truss/peeler.hpp"
#include "truss/verify.hpp"

using namespace truss;

namespace {

Graph k4_chain() { return contract(families::complete(4), families::complete(4), 3, 0); }

Graph two_k4() {
  std::vector<Edge> edges;
  for (Vertex base : {0u, 4u})
    for (Vertex a = 0; a < 4; ++a)
      for (Vertex b = a + 1; b < 4; ++b) edges.push_back({base + a, base + b});
  return Graph::from_edges(8, edges);
}

void expect_all(const TrussLabels& labels, std::uint32_t tau) {
  for (auto t : labels.tau) EXPECT_EQ(t, tau);
}

}  // namespace

TEST(Decomposition, Examples) {
  expect_all(truss_decomposition(families::complete(5)), 3);
  expect_all(truss_decomposition(k4_chain()), 2);
  expect_all(truss_decomposition(families::bowtie()), 1);
  expect_all(truss_decomposition(families::star(5)), 0);
  const auto k5 = truss_decomposition(families::complete(5));
  EXPECT_TRUE(k5.fully_exact());
  EXPECT_EQ(k5.max_tau(), 3u);
}

TEST(Decomposition, EmptyGraph) {
  PeelStats stats;
  const auto labels = truss_decomposition(Graph{}, {}, &stats);
  EXPECT_TRUE(labels.tau.empty());
  EXPECT_EQ(stats.rounds, 0u);
}

TEST(Decomposition, MatchesDefinition) {
  std::mt19937_64 rng(101);
  for (std::size_t n : {20, 40, 60})
    for (double p : {0.1, 0.3, 0.6})
      for (int rep = 0; rep < 20; ++rep) {
        const Graph g = families::gnp(n, p, rng());
        const auto labels = truss_decomposition(g);
        const auto reference = oracle::trussness(g);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          const auto [u, v] = g.endpoints(e);
          ASSERT_EQ(labels.tau[e], reference.at({u, v})) << "n=" << n << " p=" << p;
        }
      }
}

TEST(Decomposition, InvariantsHoldWithAndWithoutShortcut) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = families::gnp(25, rep % 2 ? 0.3 : 0.6, rng());
    PeelOptions checked;
    checked.check_invariants = true;
    const auto a = truss_decomposition(g, checked);
    checked.round_one_shortcut = false;
    const auto b = truss_decomposition(g, checked);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, truss_decomposition(g));
  }
}

TEST(Decomposition, WorkCounters) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = families::gnp(40, 0.1 + 0.1 * (rep % 6), rng());
    PeelStats stats;
    PeelOptions opts;
    opts.round_one_shortcut = rep % 2 == 0;
    const auto labels = truss_decomposition(g, opts, &stats);
    const std::uint64_t m = g.num_edges();
    EXPECT_LE(stats.stack_pushes, m);
    std::uint64_t tau_sum = 0;
    for (auto t : labels.tau) tau_sum += t + 1;
    EXPECT_LE(stats.scan_length, tau_sum + m);
    const Rational budget = 2 * (Rational(static_cast<std::int64_t>(m)) +
                                 degeneracy(g).average_degeneracy * static_cast<std::int64_t>(m));
    EXPECT_LE(Rational(static_cast<std::int64_t>(stats.scan_length)), budget);
    // Rounds stay within (2k + 1)^2 <= 8m + 1.
    EXPECT_LE((2ULL * stats.rounds + 1) * (2ULL * stats.rounds + 1), 8 * m + 1);
  }
}

TEST(Decomposition, TriangleFreeStopsInRoundOne) {
  PeelStats stats;
  truss_decomposition(families::petersen(), {}, &stats);
  EXPECT_EQ(stats.rounds, 1u);
  EXPECT_EQ(stats.stack_pushes, 0u);
}

TEST(Decomposition, PermutationInvariant) {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = families::gnp(30, 0.3, rng());
    std::vector<Vertex> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = families::permute(g, perm);
    auto a = truss_decomposition(g).tau, b = truss_decomposition(h).tau;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(MaxTruss, Examples) {
  const Graph k5 = families::complete(5);
  EXPECT_EQ(max_k_truss(k5, 3).size(), 10u);
  EXPECT_TRUE(max_k_truss(k5, 4).empty());
  // K4 plus pendant edge 3-4.
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
  const Graph g = Graph::from_edges(5, edges);
  const EdgeSet kept = max_k_truss(g, 2);
  EXPECT_EQ(kept.size(), 6u);
  EXPECT_FALSE(kept.contains(*g.find_edge(3, 4)));
}

TEST(MaxTruss, FixedPointCharacterization) {
  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = families::gnp(30, 0.4, rng());
    const auto labels = truss_decomposition(g);
    for (std::uint32_t k = 0; k <= labels.max_tau() + 1; ++k) {
      const EdgeSet kept = max_k_truss(g, k);
      for (EdgeId e = 0; e < g.num_edges(); ++e) EXPECT_EQ(kept.contains(e), labels.tau[e] >= k);
    }
  }
}

TEST(Components, Examples) {
  const auto bow = k_truss_components(families::bowtie(), 1, truss_decomposition(families::bowtie()));
  ASSERT_EQ(bow.size(), 1u);
  EXPECT_EQ(bow[0].size(), 6u);

  const Graph pair = two_k4();
  const auto two = k_truss_components(pair, 2, truss_decomposition(pair));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].size(), 6u);
  EXPECT_EQ(two[1].size(), 6u);

  const Graph chain = k4_chain();
  const auto one = k_truss_components(chain, 2, truss_decomposition(chain));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].size(), 12u);
}

TEST(Components, EachIsAConnectedKTruss) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = families::gnp(40, 0.3, rng());
    const auto labels = truss_decomposition(g);
    for (std::uint32_t k = 1; k <= labels.max_tau(); ++k)
      for (const EdgeSet& comp : k_truss_components(g, k, labels)) {
        const Graph c = induced_by_edges(g, comp);
        EXPECT_TRUE(is_k_truss(c, k));
        EXPECT_EQ(connected_components(c).count, 1u);
      }
  }
}

TEST(Components, RangeErrors) {
  const Graph k5 = families::complete(5);
  const auto labels = truss_decomposition(k5);
  EXPECT_THROW(k_truss_components(k5, 0, labels), RangeError);
  EXPECT_THROW(k_truss_components(k5, 3, labels.clamped(2)), RangeError);
  EXPECT_NO_THROW(k_truss_components(k5, 2, labels.clamped(2)));
}

TEST(Labels, ClampAndHistogram) {
  const Graph g = contract(families::complete(5), families::bowtie(), 0, 0);
  const auto labels = truss_decomposition(g);
  const auto hist = tau_histogram(labels);
  ASSERT_EQ(hist.size(), 2u);
  EXPECT_EQ(hist[0], (std::pair<std::uint32_t, std::uint64_t>{1, 6}));
  EXPECT_EQ(hist[1], (std::pair<std::uint32_t, std::uint64_t>{3, 10}));
  const auto c = labels.clamped(2);
  EXPECT_EQ(c.truncated_at, 2u);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    EXPECT_EQ(c.is_exact(e), labels.tau[e] < 2);
    EXPECT_EQ(c.tau[e], std::min<std::uint32_t>(labels.tau[e], 2));
  }
}
