#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wedge {

/// A finite undirected graph; used as the discretized track.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
};

/// The wedge of three circles with each circle split into k >= 3 edges:
/// 3(k-1)+1 vertices (vertex 0 is the center), 3k edges. k >= 3 keeps every
/// loop at length >= 3, which the two-particle complex needs.
Graph subdivided_wedge(int k);

/// A single circle with k >= 3 edges (control input).
Graph cycle_graph(int k);

/// Cell counts of the ordered two-particle complex built from products of
/// graph cells with disjoint closures: vertex-vertex pairs (distinct),
/// vertex-edge pairs in both orders (vertex off the edge's closure), and
/// edge-edge pairs (closures disjoint).
struct DiscreteComplexSummary {
  int subdivision = 0;  // k for subdivided wedges, 0 otherwise
  std::int64_t vertex_cells = 0;
  std::int64_t edge_cells = 0;
  std::int64_t square_cells = 0;
  std::int64_t euler = 0;  // V - E + F
  bool connected = false;
  int first_betti = 0;  // 1 - euler, valid for connected graph-like complexes
  int tc = 0;
};

DiscreteComplexSummary build_complex(const Graph& g, int subdivision = 0);

/// Serial reference for the parallel counting kernels.
DiscreteComplexSummary build_complex_serial(const Graph& g, int subdivision = 0);

/// Minimal number of continuity domains for a connected graph with the
/// given cycle rank: 1, 2, or 3.
int farber_tc(int first_betti);

struct Reachability {
  bool reachable = false;
  int hops = -1;
};

/// Breadth-first search between two 0-cells of the complex (ordered pairs
/// of distinct vertices), moving one robot along one edge at a time with
/// the other robot off that edge's closure.
Reachability bfs_reachable(const Graph& g, std::pair<int, int> from,
                           std::pair<int, int> to);

}  // namespace wedge
