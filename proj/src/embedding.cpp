#include "truss/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "truss/errors.hpp"
#include "truss/triangles.hpp"

namespace truss {

namespace {

using Faces = std::vector<std::vector<Vertex>>;

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Analysis {
  std::optional<std::string> defect;
  std::vector<Edge> edges;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_faces;
  std::size_t vertices = 0;
};

// The faces through v, glued along their edges at v, must close up into one
// cycle around v.
bool single_link_cycle(const std::vector<std::pair<Vertex, Vertex>>& corners) {
  if (corners.empty()) return false;
  std::map<Vertex, std::vector<Vertex>> link;
  for (auto [a, b] : corners) {
    link[a].push_back(b);
    link[b].push_back(a);
  }
  for (const auto& [x, nb] : link)
    if (nb.size() != 2) return false;
  Vertex start = link.begin()->first, prev = start, cur = link.begin()->second[0];
  std::size_t steps = 1;
  while (cur != start) {
    const auto& nb = link[cur];
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (++steps > link.size()) return false;
  }
  return steps == link.size();
}

bool orientable(const Faces& faces, const std::map<Edge, std::vector<std::uint32_t>>& incidence) {
  // sign[f] = +1 keeps face f's walk direction, -1 reverses it. Adjacent
  // faces must traverse their shared edge in opposite directions.
  auto forward = [&](std::uint32_t f, Edge e) {
    const auto& w = faces[f];
    for (std::size_t x = 0; x < w.size(); ++x)
      if (w[x] == e.u && w[(x + 1) % w.size()] == e.v) return true;
    return false;
  };
  std::vector<int> sign(faces.size(), 0);
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> adj(faces.size());
  for (const auto& [e, fs] : incidence) {
    bool same = forward(fs[0], e) == forward(fs[1], e);
    adj[fs[0]].push_back({fs[1], same});
    adj[fs[1]].push_back({fs[0], same});
  }
  for (std::uint32_t root = 0; root < faces.size(); ++root) {
    if (sign[root]) continue;
    sign[root] = 1;
    std::vector<std::uint32_t> queue{root};
    while (!queue.empty()) {
      auto f = queue.back();
      queue.pop_back();
      for (auto [h, same] : adj[f]) {
        int want = same ? -sign[f] : sign[f];
        if (!sign[h]) {
          sign[h] = want;
          queue.push_back(h);
        } else if (sign[h] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

Analysis analyze(const Faces& faces) {
  Analysis out;
  auto fail = [&](std::string why) {
    out.defect = std::move(why);
    return out;
  };
  if (faces.empty()) return fail("embedding has no faces");

  Vertex max_vertex = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f];
    if (w.size() < 4) return fail("face " + std::to_string(f) + " has length below 4");
    std::set<Vertex> distinct(w.begin(), w.end());
    if (distinct.size() != w.size()) return fail("face " + std::to_string(f) + " repeats a vertex");
    max_vertex = std::max(max_vertex, *distinct.rbegin());
  }
  out.vertices = static_cast<std::size_t>(max_vertex) + 1;

  std::vector<std::vector<std::pair<Vertex, Vertex>>> corners(out.vertices);
  std::map<Edge, std::vector<std::uint32_t>> incidence;
  for (std::uint32_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f];
    const std::size_t len = w.size();
    for (std::size_t x = 0; x < len; ++x) {
      incidence[ordered(w[x], w[(x + 1) % len])].push_back(f);
      corners[w[x]].push_back({w[(x + len - 1) % len], w[(x + 1) % len]});
    }
  }
  for (Vertex v = 0; v < out.vertices; ++v)
    if (corners[v].empty()) return fail("vertex " + std::to_string(v) + " lies on no face");
  for (const auto& [e, fs] : incidence) {
    if (fs.size() != 2 || fs[0] == fs[1])
      return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " does not lie on exactly two distinct faces");
    out.edges.push_back(e);
    out.edge_faces.push_back({fs[0], fs[1]});
  }
  const auto euler = static_cast<std::int64_t>(out.vertices) - static_cast<std::int64_t>(incidence.size()) +
                     static_cast<std::int64_t>(faces.size());
  if (euler != 0) return fail("Euler characteristic is " + std::to_string(euler) + ", not 0");
  for (Vertex v = 0; v < out.vertices; ++v)
    if (!single_link_cycle(corners[v]))
      return fail("faces around vertex " + std::to_string(v) + " do not form a single cycle");
  if (!orientable(faces, incidence)) return fail("faces admit no consistent orientation");

  Graph t = Graph::from_edges(out.vertices, out.edges);
  if (connected_components(t).count != 1) return fail("skeleton is not connected");
  return out;
}

// Vertex (x, y) of the grid modulo the lattice spanned by (q, 0), (sigma, p).
struct Lattice {
  std::int64_t q, sigma, p;
  Vertex at(std::int64_t x, std::int64_t y) const {
    std::int64_t k = y >= 0 ? y / p : -((-y + p - 1) / p);
    x -= k * sigma;
    y -= k * p;
    x %= q;
    if (x < 0) x += q;
    return static_cast<Vertex>(y * q + x);
  }
};

std::optional<Faces> lattice_faces(const Lattice& lat, std::int64_t w, bool odd, std::int64_t bx,
                                   std::int64_t by) {
  const auto cells = static_cast<std::size_t>(lat.q * lat.p);
  std::vector<std::uint8_t> used(cells, 0);
  auto strip = [&](std::int64_t x0, std::int64_t y0) -> std::optional<std::vector<Vertex>> {
    for (std::int64_t d = 0; d < w; ++d) {
      Vertex c = lat.at(x0 + d, y0);
      if (used[c]) return std::nullopt;
      used[c] = 1;
    }
    std::vector<Vertex> face;
    for (std::int64_t d = 0; d <= w; ++d) face.push_back(lat.at(x0 + d, y0));
    for (std::int64_t d = w; d >= 0; --d) face.push_back(lat.at(x0 + d, y0 + 1));
    std::set<Vertex> distinct(face.begin(), face.end());
    if (distinct.size() != face.size()) return std::nullopt;
    return face;
  };
  auto a = strip(0, 0);
  if (!a) return std::nullopt;
  auto b = strip(bx, by);
  if (!b) return std::nullopt;

  Faces faces;
  for (std::int64_t y = 0; y < lat.p; ++y)
    for (std::int64_t x = 0; x < lat.q; ++x)
      if (!used[lat.at(x, y)])
        faces.push_back({lat.at(x, y), lat.at(x + 1, y), lat.at(x + 1, y + 1), lat.at(x, y + 1)});
  faces.push_back(*a);
  faces.push_back(*b);

  if (odd) {
    auto edges_of = [](const std::vector<Vertex>& f) {
      std::set<Edge> s;
      for (std::size_t x = 0; x < f.size(); ++x) s.insert(ordered(f[x], f[(x + 1) % f.size()]));
      return s;
    };
    const auto ea = edges_of(*a), eb = edges_of(*b);
    std::optional<Edge> shared;
    for (const Edge& e : ea)
      if (eb.count(e)) {
        shared = e;
        break;
      }
    if (!shared) return std::nullopt;
    const auto z = static_cast<Vertex>(cells);
    for (auto& f : faces) {
      std::vector<Vertex> g;
      for (std::size_t x = 0; x < f.size(); ++x) {
        g.push_back(f[x]);
        if (ordered(f[x], f[(x + 1) % f.size()]) == *shared) g.push_back(z);
      }
      f = std::move(g);
    }
  }
  return faces;
}

}  // namespace

std::optional<std::string> FaceEmbedding::defect(const std::vector<std::vector<Vertex>>& faces) {
  return analyze(faces).defect;
}

FaceEmbedding FaceEmbedding::from_faces(std::vector<std::vector<Vertex>> faces) {
  Analysis a = analyze(faces);
  if (a.defect) throw ValidationError("invalid face embedding: " + *a.defect);
  FaceEmbedding emb;
  emb.faces_ = std::move(faces);
  emb.skeleton_ = Graph::from_edges(a.vertices, a.edges);
  // from_edges orders edge ids lexicographically, as does the analysis map.
  emb.edge_faces_ = std::move(a.edge_faces);
  for (const auto& f : emb.faces_)
    for (std::size_t x = 0; x < f.size(); ++x)
      for (std::size_t y = x + 2; y < f.size(); ++y)
        if (!(x == 0 && y == f.size() - 1) && emb.skeleton_.has_edge(f[x], f[y])) ++emb.chords_;
  emb.triangle_free_ = triangle_counts(emb.skeleton_).total == 0;
  return emb;
}

TorusEmbedding torus_embedding(std::uint32_t i, std::uint32_t t) {
  if (t < 4) throw RangeError("long face length t must be at least 4");
  const bool odd = t % 2 == 1;
  const std::int64_t w = odd ? (t - 3) / 2 : t / 2 - 1;
  const std::int64_t cells = static_cast<std::int64_t>(i) + 2 * w;

  std::optional<TorusEmbedding> fallback;
  for (std::int64_t p = 1; p <= cells; ++p) {
    if (cells % p) continue;
    const std::int64_t q = cells / p;
    for (std::int64_t sigma = 0; sigma < q; ++sigma) {
      const Lattice lat{q, sigma, p};
      for (std::int64_t by = 0; by < p; ++by) {
        for (std::int64_t bx = 0; bx < q; ++bx) {
          auto faces = lattice_faces(lat, w, odd, bx, by);
          if (!faces || FaceEmbedding::defect(*faces)) continue;
          FaceEmbedding emb = FaceEmbedding::from_faces(std::move(*faces));
          TorusLayout layout{static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(sigma),
                             static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(bx),
                             static_cast<std::uint32_t>(by), odd};
          if (emb.clean()) return {std::move(emb), layout};
          if (!fallback) fallback = TorusEmbedding{std::move(emb), layout};
        }
      }
    }
  }
  if (fallback) return std::move(*fallback);
  throw InfeasibleError("no simple torus embedding with two " + std::to_string(t) + "-faces and " +
                        std::to_string(i) + " four-faces");
}

}  // namespace truss
