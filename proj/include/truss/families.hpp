#pragma once

#include <cstdint>
#include <span>

#include "truss/graph.hpp"

// Small named graph families used by tests, benchmarks and generators.
namespace truss::families {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);            // n vertices, n - 1 edges
Graph star(std::size_t leaves);       // center is vertex 0
Graph petersen();
Graph bowtie();                       // two triangles sharing vertex 0

// Erdos-Renyi G(n, p). May contain isolated vertices.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Relabels vertex v as perm[v]. Labels follow their vertices.
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace truss::families
