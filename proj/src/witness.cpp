#include "truss/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "truss/errors.hpp"
#include "truss/triangles.hpp"

namespace truss {

std::uint64_t witness_table_bytes(const Graph& g, std::uint32_t sets) {
  return static_cast<std::uint64_t>(g.num_edges()) * sets * sizeof(std::uint64_t);
}

ResolvedWitnessConfig resolve(const WitnessConfig& cfg, const Graph& g) {
  const double m = static_cast<double>(g.num_edges());
  const double n = static_cast<double>(g.num_vertices());
  const auto k_max = static_cast<std::uint32_t>(std::ceil(std::sqrt(2.0 * m)));
  if (cfg.k_trunc < 1 || cfg.k_trunc > k_max)
    throw RangeError("k_trunc = " + std::to_string(cfg.k_trunc) + " outside [1, " +
                     std::to_string(k_max) + "] for m = " + std::to_string(g.num_edges()));

  ResolvedWitnessConfig r{};
  r.k_trunc = cfg.k_trunc;
  r.seed = cfg.seed;
  r.init_mode = cfg.init_mode;
  r.mem_cap_bytes = cfg.mem_cap_bytes;
  r.prob = cfg.prob.value_or(1.0 / cfg.k_trunc);
  if (!(r.prob > 0.0 && r.prob <= 1.0)) throw RangeError("inclusion probability must lie in (0, 1]");

  if (cfg.sets) {
    r.sets = *cfg.sets;
  } else {
    // Natural log: the miss bound n^-3.6 ~ n^(-10/e) relies on it.
    const double l = std::ceil(10.0 * cfg.k_trunc * std::log(std::max(n, 2.0)));
    r.sets = static_cast<std::uint32_t>(std::max(1.0, l));
  }
  if (r.sets < 1) throw RangeError("number of random sets must be at least 1");

  r.a = m > 1.0 ? std::min(1.0, std::log(static_cast<double>(cfg.k_trunc)) / std::log(m)) : 0.0;
  r.b = cfg.b.value_or(std::max(r.a, 2.0 / 3.0));
  if (!(r.b >= r.a && r.b <= 1.0))
    throw RangeError("heavy/light exponent b must lie in [a, 1] with a = " + std::to_string(r.a));

  const auto bytes = witness_table_bytes(g, r.sets);
  if (bytes > r.mem_cap_bytes)
    throw CapacityError("witness table needs " + std::to_string(bytes) + " bytes (m = " +
                        std::to_string(g.num_edges()) + ", L = " + std::to_string(r.sets) +
                        "), above the cap of " + std::to_string(r.mem_cap_bytes));
  return r;
}

WitnessState::WitnessState(const Graph& g, std::vector<std::vector<Vertex>> sets)
    : g_(&g), sets_(std::move(sets)), memberships_(g.num_vertices()),
      delta_(g.num_edges(), 0), stamp_(g.num_vertices(), 0) {
  if (sets_.empty()) throw RangeError("witness structure needs at least one set");
  for (std::uint32_t l = 0; l < sets_.size(); ++l) {
    auto& x = sets_[l];
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    for (Vertex v : x) {
      if (v >= g.num_vertices()) throw ValidationError("set member out of range");
      memberships_[v].push_back(l);
    }
  }
  sums_.assign(g.num_edges() * sets_.size(), 0);
}

WitnessState WitnessState::build(const Graph& g, const WitnessConfig& cfg) {
  const ResolvedWitnessConfig r = resolve(cfg, g);
  std::mt19937_64 rng(r.seed);
  std::bernoulli_distribution coin(r.prob);
  std::vector<std::vector<Vertex>> sets(r.sets);
  for (auto& x : sets)
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (coin(rng)) x.push_back(v);
  WitnessState state(g, std::move(sets));
  if (r.init_mode == InitMode::matrix)
    state.init_matrix(r.b);
  else
    state.init_direct();
  return state;
}

WitnessState WitnessState::with_sets(const Graph& g, std::vector<std::vector<Vertex>> sets,
                                     InitMode mode, double b) {
  WitnessState state(g, std::move(sets));
  if (mode == InitMode::matrix)
    state.init_matrix(b);
  else
    state.init_direct();
  return state;
}

void WitnessState::init_direct() {
  const Graph& g = *g_;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = scan_order(g, g.endpoints(e));
    for (Vertex w : g.neighbors(u)) {
      if (w == v || !g.has_edge(v, w)) continue;
      ++delta_[e];
      for (auto l : memberships_[w]) sum_at(e, l) += Graph::id(w);
    }
  }
}

// Triangles with at least one light vertex are charged to their smallest
// light vertex and found by pairing its incident edges. Triangles on heavy
// vertices only come from one product per set over the heavy subgraph.
void WitnessState::init_matrix(double b) {
  const Graph& g = *g_;
  const double threshold = std::pow(static_cast<double>(g.num_edges()), 1.0 - b);
  std::vector<std::uint8_t> light(g.num_vertices(), 0);
  heavy_.clear();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > threshold)
      heavy_.push_back(v);
    else
      light[v] = 1;
  }

  auto credit = [&](EdgeId e, Vertex w) {
    ++delta_[e];
    for (auto l : memberships_[w]) sum_at(e, l) += Graph::id(w);
  };
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!light[v]) continue;
    auto nbrs = g.neighbors(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex x = nbrs[i];
      if (light[x] && x < v) continue;
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex y = nbrs[j];
        if (light[y] && y < v) continue;
        auto xy = g.find_edge(x, y);
        if (!xy) continue;
        credit(*xy, v);
        credit(inc[i], y);
        credit(inc[j], x);
      }
    }
  }

  const auto h = static_cast<Eigen::Index>(heavy_.size());
  if (h == 0) return;
  using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  std::vector<Eigen::Index> heavy_index(g.num_vertices(), -1);
  for (Eigen::Index i = 0; i < h; ++i) heavy_index[heavy_[i]] = i;

  // Heavy-heavy edges, each with its row/column in the heavy adjacency.
  struct HeavyEdge {
    EdgeId id;
    Eigen::Index r, c;
  };
  std::vector<HeavyEdge> heavy_edges;
  Matrix adjacency = Matrix::Zero(h, h);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    if (heavy_index[u] < 0 || heavy_index[v] < 0) continue;
    adjacency(heavy_index[u], heavy_index[v]) = adjacency(heavy_index[v], heavy_index[u]) = 1;
    heavy_edges.push_back({e, heavy_index[u], heavy_index[v]});
  }
  if (heavy_edges.empty()) return;

  const Matrix common = adjacency * adjacency;
  for (const auto& he : heavy_edges) delta_[he.id] += static_cast<std::uint32_t>(common(he.r, he.c));

  for (std::size_t l = 0; l < sets_.size(); ++l) {
    std::vector<Eigen::Index> cols;
    for (Vertex w : sets_[l])
      if (heavy_index[w] >= 0) cols.push_back(heavy_index[w]);
    if (cols.empty()) continue;
    const auto c = static_cast<Eigen::Index>(cols.size());
    Matrix incidence(h, c), weighted(h, c);
    for (Eigen::Index j = 0; j < c; ++j) {
      const auto id = static_cast<std::int64_t>(Graph::id(heavy_[cols[j]]));
      incidence.col(j) = adjacency.col(cols[j]);
      weighted.col(j) = adjacency.col(cols[j]) * id;
    }
    const Matrix product = incidence * weighted.transpose();
    for (const auto& he : heavy_edges) sum_at(he.id, l) += static_cast<std::uint64_t>(product(he.r, he.c));
  }
}

bool WitnessState::residual_edge(Vertex x, Vertex y) const noexcept {
  auto e = g_->find_edge(x, y);
  return e && delta_[*e] != kRemoved;
}

EnumerationOutcome WitnessState::enumerate(EdgeId e) {
  if (e >= g_->num_edges()) throw ValidationError("edge id out of range");
  if (!residual(e)) throw ValidationError("edge " + std::to_string(e) + " already removed");
  const auto [u, v] = g_->endpoints(e);
  const std::uint64_t n = g_->num_vertices();
  const std::uint32_t target = delta_[e];

  EnumerationOutcome out;
  if (target == 0) return out;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (std::size_t l = 0; l < sets_.size() && out.witnesses.size() < target; ++l) {
    const std::uint64_t s = witness_sum(e, l);
    if (s < 1 || s > n) continue;
    const auto x = static_cast<Vertex>(s - 1);
    ++out.candidates_tested;
    if (stamp_[x] == epoch_) continue;
    if (x == u || x == v || !residual_edge(u, x) || !residual_edge(v, x)) continue;
    stamp_[x] = epoch_;
    out.witnesses.push_back(x);
  }
  if (out.witnesses.size() == target) return out;

  out.used_fallback = true;
  out.witnesses.clear();
  for (Vertex x = 0; x < n; ++x) {
    if (x == u || x == v) continue;
    if (residual_edge(u, x) && residual_edge(v, x)) out.witnesses.push_back(x);
  }
  return out;
}

void WitnessState::remove(EdgeId e, const EnumerationOutcome& witnessed) {
  if (e >= g_->num_edges()) throw ValidationError("edge id out of range");
  if (!residual(e)) throw ValidationError("edge " + std::to_string(e) + " already removed");
  if (witnessed.witnesses.size() != delta_[e])
    throw ValidationError("witness list does not cover every residual triangle");
  const auto [u, v] = g_->endpoints(e);
  std::vector<Vertex> sorted = witnessed.witnesses;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("witness list repeats a vertex");
  // Validate before mutating so a bad witness list leaves the state intact.
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  pairs.reserve(witnessed.witnesses.size());
  for (Vertex w : witnessed.witnesses) {
    auto uw = g_->find_edge(u, w), vw = g_->find_edge(v, w);
    if (!uw || !vw || !residual(*uw) || !residual(*vw))
      throw ValidationError("witness is not a residual common neighbor");
    pairs.emplace_back(*uw, *vw);
  }
  delta_[e] = kRemoved;
  for (auto [uw, vw] : pairs) {
    --delta_[uw];
    --delta_[vw];
    for (auto l : memberships_[v]) sum_at(uw, l) -= Graph::id(v);
    for (auto l : memberships_[u]) sum_at(vw, l) -= Graph::id(u);
  }
}

TrussLabels truncated_decomposition(const Graph& g, const WitnessConfig& cfg, WitnessStats* stats) {
  const std::uint32_t k_trunc = resolve(cfg, g).k_trunc;
  WitnessState state = WitnessState::build(g, cfg);
  WitnessStats local;

  const std::size_t m = g.num_edges();
  TrussLabels labels;
  labels.tau.assign(m, 0);
  labels.exact.assign(m, 1);
  labels.truncated_at = k_trunc;

  std::vector<EdgeId> scan(m), stack;
  std::iota(scan.begin(), scan.end(), EdgeId{0});
  std::size_t residual = m;
  auto push = [&](EdgeId f) {
    stack.push_back(f);
    ++local.stack_pushes;
  };

  for (std::uint32_t k = 1; k <= k_trunc && residual > 0; ++k) {
    std::size_t i = 0;
    while (i < scan.size()) {
      ++local.scan_length;
      const EdgeId e = scan[i];
      if (!state.residual(e)) {
        scan[i] = scan.back();
        scan.pop_back();
        continue;
      }
      if (state.residual_triangles(e) == k - 1) push(e);
      ++i;
    }
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      EnumerationOutcome found = state.enumerate(e);
      ++local.enumerations;
      local.candidates_tested += found.candidates_tested;
      if (found.used_fallback) ++local.fallbacks;
      labels.tau[e] = k - 1;
      state.remove(e, found);
      --residual;
      const auto [u, v] = g.endpoints(e);
      for (Vertex w : found.witnesses) {
        for (Vertex end : {u, v}) {
          const EdgeId f = *g.find_edge(end, w);
          if (state.residual_triangles(f) == k - 1) push(f);
        }
      }
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (!state.residual(e)) continue;
    labels.tau[e] = k_trunc;
    labels.exact[e] = 0;
  }
  if (stats) *stats = local;
  return labels;
}

}  // namespace truss
