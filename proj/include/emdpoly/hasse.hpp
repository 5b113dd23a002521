#pragma once

#include <vector>

#include "emdpoly/bigint.hpp"
#include "emdpoly/caps.hpp"
#include "emdpoly/partition.hpp"

namespace emdpoly {

// Hasse diagram of the lattice Par(rows × cols): vertices in
// enumerate_partitions order, edges between diagrams differing by exactly
// one box.
struct HasseGraph {
  RectBound bound;
  std::vector<Partition> vertices;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor indices
};

// Builds the graph by generating each vertex's single-box additions
// (each edge is found once from its lower endpoint).  Throws CapExceeded
// when the vertex count C(rows+cols, rows) exceeds max_vertices.
HasseGraph build_hasse(RectBound bound,
                       unsigned long long max_vertices = kDefaultMaxVertices);

// Wiener index: Σ of BFS shortest-path lengths over all ordered vertex
// pairs.  Per-source BFS runs are independent; the OpenMP version farms
// them out, serial::wiener_bfs is the reference.  Throws std::logic_error
// if the graph is disconnected (impossible for a lattice built here).
BigInt wiener_bfs(const HasseGraph& g);

namespace serial {
BigInt wiener_bfs(const HasseGraph& g);
}  // namespace serial

// d(P_{a,b}) = ab/(4a+4b+2) · C(2a+2b+2, 2a+1) for a,b >= 1, with the
// exact divisibility asserted.
BigInt wiener_formula(long long a, long long b);

}  // namespace emdpoly
