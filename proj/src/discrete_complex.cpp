#include "wedge/discrete_complex.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wedge {

void Graph::add_edge(int u, int v) {
  edges.emplace_back(u, v);
  adjacency[u].push_back(v);
  adjacency[v].push_back(u);
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency[u];
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

Graph subdivided_wedge(int k) {
  if (k < 3) {
    throw std::invalid_argument("subdivision must be at least 3 edges per circle");
  }
  Graph g;
  g.vertex_count = 3 * (k - 1) + 1;
  g.adjacency.resize(g.vertex_count);
  int next = 1;
  for (int circle = 0; circle < 3; ++circle) {
    int prev = 0;  // the center vertex
    for (int step = 0; step < k - 1; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 0);
  }
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 edges");
  Graph g;
  g.vertex_count = k;
  g.adjacency.resize(k);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

namespace {

bool closures_disjoint(const std::pair<int, int>& e, const std::pair<int, int>& f) {
  return e.first != f.first && e.first != f.second && e.second != f.first &&
         e.second != f.second;
}

bool off_edge(int v, const std::pair<int, int>& e) {
  return v != e.first && v != e.second;
}

/// Connectivity of the complex via BFS over 0-cells; 1-cells connect
/// (v, w) to (v, w') when w~w' and v is off the traversed edge, and
/// symmetrically for the first robot.
bool complex_connected(const Graph& g) {
  const int n = g.vertex_count;
  if (n < 2) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::queue<int> queue;
  const int start = 0 * n + 1;  // (0, 1); distinct vertices exist for n >= 2
  seen[start] = 1;
  queue.push(start);
  std::int64_t visited = 1;
  while (!queue.empty()) {
    const int cell = queue.front();
    queue.pop();
    const int u = cell / n;
    const int w = cell % n;
    auto try_push = [&](int nu, int nw) {
      const int next = nu * n + nw;
      if (!seen[next]) {
        seen[next] = 1;
        queue.push(next);
        ++visited;
      }
    };
    for (int nu : g.adjacency[u]) {
      if (nu != w && w != u) try_push(nu, w);
    }
    for (int nw : g.adjacency[w]) {
      if (nw != u && u != w) try_push(u, nw);
    }
  }
  return visited == static_cast<std::int64_t>(n) * (n - 1);
}

DiscreteComplexSummary count_cells(const Graph& g, int subdivision, bool parallel) {
  const int n = g.vertex_count;
  const auto m = static_cast<std::int64_t>(g.edges.size());

  // Ordered distinct vertex pairs.
  const std::int64_t vertex_cells = static_cast<std::int64_t>(n) * (n - 1);

  std::int64_t edge_cells = 0;
  std::int64_t square_cells = 0;

#pragma omp parallel if (parallel)
  {
#pragma omp for reduction(+ : edge_cells) schedule(static)
    for (int v = 0; v < n; ++v) {
      std::int64_t local = 0;
      for (const auto& e : g.edges) {
        if (off_edge(v, e)) ++local;
      }
      edge_cells += 2 * local;  // both robot orders
    }

#pragma omp for reduction(+ : square_cells) schedule(static)
    for (std::int64_t i = 0; i < m; ++i) {
      std::int64_t local = 0;
      for (std::int64_t j = 0; j < m; ++j) {
        if (i != j && closures_disjoint(g.edges[i], g.edges[j])) ++local;
      }
      square_cells += local;
    }
  }

  DiscreteComplexSummary s;
  s.subdivision = subdivision;
  s.vertex_cells = vertex_cells;
  s.edge_cells = edge_cells;
  s.square_cells = square_cells;
  s.euler = vertex_cells - edge_cells + square_cells;
  s.connected = complex_connected(g);
  s.first_betti = s.connected ? static_cast<int>(1 - s.euler) : -1;
  s.tc = s.connected ? farber_tc(s.first_betti) : 0;
  return s;
}

}  // namespace

DiscreteComplexSummary build_complex(const Graph& g, int subdivision) {
  return count_cells(g, subdivision, true);
}

DiscreteComplexSummary build_complex_serial(const Graph& g, int subdivision) {
  return count_cells(g, subdivision, false);
}

int farber_tc(int first_betti) {
  if (first_betti < 0) {
    throw std::invalid_argument("cycle rank cannot be negative");
  }
  if (first_betti == 0) return 1;
  if (first_betti == 1) return 2;
  return 3;
}

Reachability bfs_reachable(const Graph& g, std::pair<int, int> from,
                           std::pair<int, int> to) {
  const int n = g.vertex_count;
  auto valid = [n](std::pair<int, int> c) {
    return c.first >= 0 && c.first < n && c.second >= 0 && c.second < n &&
           c.first != c.second;
  };
  if (!valid(from) || !valid(to)) {
    throw std::invalid_argument("bfs_reachable: states must be ordered distinct vertex pairs");
  }
  const int start = from.first * n + from.second;
  const int goal = to.first * n + to.second;
  std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
  std::queue<int> queue;
  dist[start] = 0;
  queue.push(start);
  while (!queue.empty()) {
    const int cell = queue.front();
    queue.pop();
    if (cell == goal) return {true, dist[cell]};
    const int u = cell / n;
    const int w = cell % n;
    auto try_push = [&](int nu, int nw) {
      const int next = nu * n + nw;
      if (dist[next] < 0) {
        dist[next] = dist[cell] + 1;
        queue.push(next);
      }
    };
    for (int nu : g.adjacency[u]) {
      if (nu != w) try_push(nu, w);
    }
    for (int nw : g.adjacency[w]) {
      if (nw != u) try_push(u, nw);
    }
  }
  return {false, -1};
}

}  // namespace wedge
