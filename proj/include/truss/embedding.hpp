#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "truss/graph.hpp"

namespace truss {

// Combinatorial embedding of a graph T in the torus, given by its faces as
// cyclic vertex sequences. Construction validates:
//   - vertices are 0..V-1 and every face is a simple cycle of length >= 4
//   - every edge of T lies on exactly two distinct faces
//   - T is simple and connected
//   - the faces around each vertex form a single cycle (a surface, not a
//     pinched one) and the faces can be oriented consistently
//   - V - E + F = 0
class FaceEmbedding {
 public:
  // Throws ValidationError naming the first violated condition.
  static FaceEmbedding from_faces(std::vector<std::vector<Vertex>> faces);
  // Reason the faces fail validation, or nullopt when they are valid.
  static std::optional<std::string> defect(const std::vector<std::vector<Vertex>>& faces);

  std::size_t vertex_count() const noexcept { return skeleton_.num_vertices(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  const std::vector<std::vector<Vertex>>& faces() const noexcept { return faces_; }
  // Sum of face lengths, twice the edge count of T.
  std::uint64_t total_length() const noexcept { return 2 * skeleton_.num_edges(); }
  const Graph& skeleton() const noexcept { return skeleton_; }
  // The two faces containing edge e of the skeleton.
  std::pair<std::uint32_t, std::uint32_t> edge_faces(EdgeId e) const noexcept { return edge_faces_[e]; }

  // Pairs of non-consecutive face vertices adjacent in T, over all faces.
  std::uint64_t chord_count() const noexcept { return chords_; }
  bool triangle_free() const noexcept { return triangle_free_; }
  // Triangle-free skeleton and chordless faces. Built trusses are critical
  // on every clean embedding we have generated; unclean ones can fail.
  bool clean() const noexcept { return chords_ == 0 && triangle_free_; }

 private:
  std::vector<std::vector<Vertex>> faces_;
  Graph skeleton_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_faces_;
  std::uint64_t chords_ = 0;
  bool triangle_free_ = true;
};

// Parameters of a torus embedding found by the lattice search.
struct TorusLayout {
  std::uint32_t q = 0;      // lattice basis (q, 0), (sigma, p)
  std::uint32_t sigma = 0;
  std::uint32_t p = 0;
  std::uint32_t strip_x = 0;  // cell where the second long face starts
  std::uint32_t strip_y = 0;
  bool subdivided = false;    // odd t: one shared edge carries an extra vertex
};

struct TorusEmbedding {
  FaceEmbedding embedding;
  TorusLayout layout;
};

// Embedding with two t-faces and i four-faces.
//
// The torus is the unit-square grid Z^2 modulo a lattice with N = i + 2w
// cells. Each long face merges a horizontal strip of w cells into a face of
// length 2w + 2; for odd t an edge shared by the two strips is subdivided.
// Lattices are tried with p ascending, then sigma, then the second strip's
// cell. The first clean embedding wins; without one, the first valid one is
// returned. Throws InfeasibleError when no valid realization exists.
TorusEmbedding torus_embedding(std::uint32_t i, std::uint32_t t);

}  // namespace truss
