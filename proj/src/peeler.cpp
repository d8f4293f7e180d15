#include "truss/peeler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "truss/errors.hpp"
#include "truss/triangles.hpp"

namespace truss {

std::uint32_t TrussLabels::max_tau() const noexcept {
  return tau.empty() ? 0 : *std::max_element(tau.begin(), tau.end());
}

TrussLabels TrussLabels::clamped(std::uint32_t k_trunc) const {
  TrussLabels out = *this;
  out.truncated_at = k_trunc;
  for (std::size_t e = 0; e < tau.size(); ++e) {
    if (tau[e] >= k_trunc) {
      out.tau[e] = k_trunc;
      out.exact[e] = 0;
    }
  }
  return out;
}

namespace {

constexpr std::uint32_t kRemoved = std::numeric_limits<std::uint32_t>::max();

// Largest round that can still hold a residual edge: tau + 1 <= k with
// tau <= sqrt(2m + 1/4) - 3/2, i.e. (2k + 1)^2 <= 8m + 1.
std::uint32_t round_limit(std::size_t m) {
  auto k = static_cast<std::uint64_t>((std::sqrt(8.0 * m + 1.0) - 1.0) / 2.0) + 1;
  while ((2 * k + 1) * (2 * k + 1) > 8 * m + 1) --k;
  return static_cast<std::uint32_t>(std::max<std::uint64_t>(k, 1));
}

class Peeler {
 public:
  Peeler(const Graph& g, const PeelOptions& options)
      : g_(g), options_(options), delta_(triangle_counts(g).per_edge),
        pushed_(g.num_edges(), 0), on_stack_(g.num_edges(), 0), scan_(g.num_edges()) {
    std::iota(scan_.begin(), scan_.end(), EdgeId{0});
    labels_.tau.assign(g.num_edges(), 0);
    labels_.exact.assign(g.num_edges(), 1);
    residual_ = g.num_edges();
  }

  TrussLabels run(PeelStats* stats) {
    const std::uint32_t limit = round_limit(g_.num_edges());
    std::uint32_t k = 1;
    for (; residual_ > 0; ++k) {
      if (k > limit) throw InvariantViolation("round counter exceeded sqrt(2m) bound");
      scan_round(k);
      if (options_.check_invariants) check(k);
      while (!stack_.empty()) {
        EdgeId e = stack_.back();
        stack_.pop_back();
        on_stack_[e] = 0;
        remove(e, k);
        if (options_.check_invariants) check(k);
      }
    }
    stats_.rounds = k - 1;
    if (stats) *stats = stats_;
    return std::move(labels_);
  }

 private:
  void push(EdgeId e) {
    if (pushed_[e]) throw InvariantViolation("edge stacked twice");
    pushed_[e] = 1;
    on_stack_[e] = 1;
    stack_.push_back(e);
    ++stats_.stack_pushes;
  }

  // One pass over the scan list. Removed edges are swapped to the end and
  // dropped; edges at k - 1 triangles are stacked.
  void scan_round(std::uint32_t k) {
    std::size_t i = 0;
    while (i < scan_.size()) {
      ++stats_.scan_length;
      EdgeId e = scan_[i];
      bool drop = delta_[e] == kRemoved;
      if (!drop && delta_[e] == k - 1) {
        if (k == 1 && options_.round_one_shortcut) {
          // No triangles, so no neighbor counts to update.
          delta_[e] = kRemoved;
          labels_.tau[e] = 0;
          --residual_;
          drop = true;
        } else {
          push(e);
        }
      }
      if (drop) {
        scan_[i] = scan_.back();
        scan_.pop_back();
      } else {
        ++i;
      }
    }
  }

  void remove(EdgeId e, std::uint32_t k) {
    const auto [u, v] = scan_order(g_, g_.endpoints(e));
    delta_[e] = kRemoved;
    --residual_;
    auto nbrs = g_.neighbors(u);
    auto inc = g_.incident_edges(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      const EdgeId uw = inc[i];
      if (w == v || delta_[uw] == kRemoved) continue;
      auto vw = g_.find_edge(v, w);
      if (!vw || delta_[*vw] == kRemoved) continue;
      if (--delta_[uw] == k - 1) push(uw);
      if (--delta_[*vw] == k - 1) push(*vw);
    }
    labels_.tau[e] = k - 1;
  }

  void check(std::uint32_t k) const {
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (on_stack_[e] && (delta_[e] == kRemoved || delta_[e] >= k))
        throw InvariantViolation("stacked edge is removed or has >= k triangles");
      if (delta_[e] == kRemoved) continue;
      const auto [u, v] = g_.endpoints(e);
      std::uint32_t actual = 0;
      for (Vertex w : g_.neighbors(u)) {
        if (w == v) continue;
        auto uw = g_.find_edge(u, w);
        auto vw = g_.find_edge(v, w);
        if (vw && delta_[*uw] != kRemoved && delta_[*vw] != kRemoved) ++actual;
      }
      if (actual != delta_[e]) throw InvariantViolation("residual triangle count out of date");
      if (delta_[e] < k && !on_stack_[e])
        throw InvariantViolation("residual edge below k is not stacked");
    }
  }

  const Graph& g_;
  PeelOptions options_;
  std::vector<std::uint32_t> delta_;
  std::vector<std::uint8_t> pushed_;
  std::vector<std::uint8_t> on_stack_;
  std::vector<EdgeId> scan_;
  std::vector<EdgeId> stack_;
  std::size_t residual_ = 0;
  TrussLabels labels_;
  PeelStats stats_;
};

}  // namespace

TrussLabels truss_decomposition(const Graph& g, const PeelOptions& options, PeelStats* stats) {
  return Peeler(g, options).run(stats);
}

EdgeSet max_k_truss(const Graph& g, std::uint32_t k) {
  return max_k_truss(g, k, EdgeSet::all(g.num_edges()));
}

EdgeSet max_k_truss(const Graph& g, std::uint32_t k, const EdgeSet& within) {
  const std::size_t m = g.num_edges();
  if (!within.empty() && within.ids().back() >= m) throw ValidationError("edge id out of range");
  std::vector<std::uint8_t> alive(m, 0);
  for (EdgeId e : within.ids()) alive[e] = 1;

  std::vector<std::uint32_t> count(m, 0);
  std::vector<EdgeId> queue;
  std::vector<std::uint8_t> queued(m, 0);
  for (EdgeId e : within.ids()) {
    const auto [u, v] = scan_order(g, g.endpoints(e));
    auto nbrs = g.neighbors(u);
    auto inc = g.incident_edges(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == v || !alive[inc[i]]) continue;
      auto vw = g.find_edge(v, nbrs[i]);
      if (vw && alive[*vw]) ++count[e];
    }
    if (count[e] < k) {
      queue.push_back(e);
      queued[e] = 1;
    }
  }

  while (!queue.empty()) {
    EdgeId e = queue.back();
    queue.pop_back();
    const auto [u, v] = scan_order(g, g.endpoints(e));
    alive[e] = 0;
    auto nbrs = g.neighbors(u);
    auto inc = g.incident_edges(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const EdgeId uw = inc[i];
      if (nbrs[i] == v || !alive[uw]) continue;
      auto vw = g.find_edge(v, nbrs[i]);
      if (!vw || !alive[*vw]) continue;
      for (EdgeId f : {uw, *vw}) {
        if (--count[f] < k && !queued[f]) {
          queued[f] = 1;
          queue.push_back(f);
        }
      }
    }
  }

  std::vector<EdgeId> kept;
  for (EdgeId e : within.ids())
    if (alive[e]) kept.push_back(e);
  return EdgeSet::from_ids(std::move(kept), m);
}

std::vector<EdgeSet> k_truss_components(const Graph& g, std::uint32_t k, const TrussLabels& labels) {
  if (k == 0) throw RangeError("k-truss components need k >= 1");
  if (labels.tau.size() != g.num_edges()) throw ValidationError("labels do not match graph");
  if (labels.truncated_at && k > *labels.truncated_at)
    throw RangeError("k = " + std::to_string(k) + " exceeds truncation at " +
                     std::to_string(*labels.truncated_at));

  // Union-find over vertices joined by qualifying edges.
  std::vector<Vertex> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!labels.at_least(e, k)) continue;
    Vertex a = find(g.endpoints(e).u), b = find(g.endpoints(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::map<Vertex, std::size_t> index;
  std::vector<std::vector<EdgeId>> groups;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!labels.at_least(e, k)) continue;
    auto [it, inserted] = index.try_emplace(find(g.endpoints(e).u), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(e);
  }
  std::vector<EdgeSet> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.push_back(EdgeSet::from_ids(std::move(grp), g.num_edges()));
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> tau_histogram(const TrussLabels& labels) {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (auto t : labels.tau) ++hist[t];
  return {hist.begin(), hist.end()};
}

}  // namespace truss
