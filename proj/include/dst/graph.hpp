#ifndef DST_GRAPH_HPP
#define DST_GRAPH_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dst {

// Canonical edge key: always (min, max).
using Edge = std::pair<int, int>;

inline Edge edge_key(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Undirected simple graph on vertices 0..n-1.
/// Immutable by convention once built; all algorithms are const.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  // Returns false if the edge was already present. Throws on self-loops
  // and out-of-range endpoints.
  bool add_edge(int u, int v);

  bool has_edge(int u, int v) const;
  const std::set<int>& neighbors(int v) const;
  int degree(int v) const;
  int min_degree() const;

  // Sorted canonical edge list.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

  bool connected() const;
  std::vector<std::vector<int>> components() const;

  // BFS distances from src; -1 for unreachable vertices.
  std::vector<int> bfs_distances(int src) const;
  int distance(int u, int v) const;
  // All-pairs BFS; -1 when disconnected.
  int diameter() const;

  // Is the subgraph induced by vs connected? Empty set counts as connected.
  bool induced_connected(const std::vector<int>& vs) const;

  void check_vertex(int v) const;

 private:
  std::vector<std::set<int>> adj_;
  int m_ = 0;
};

/// Articulation/bridge census. `a` counts articulation vertices not
/// incident to any bridge, `b` counts bridges.
struct StructureReport {
  int components = 0;
  std::vector<int> articulation_vertices;
  std::vector<Edge> bridges;
  int min_degree = 0;
  int diameter = -1;
  int a = 0;
  int b = 0;
};

StructureReport structure(const Graph& g);

// Named generators. Vertex labelings are documented per generator so
// certificates stay diffable.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Rows x cols, index = row * n2 + col.
Graph grid_graph(int n1, int n2);
// Ring coordinate wraps: (i,j)~(i+1 mod n1, j) plus path edges along j.
// Index = i * n2 + j. Requires n1 >= 3 and n2 >= 3.
Graph cylinder_graph(int n1, int n2);
// Left part 0..a-1, right part a..a+b-1.
Graph complete_bipartite(int a, int b);
// Two cliques K_floor((n+1)/2) and K_ceil((n+1)/2) sharing vertex 0.
Graph glued_cliques(int n);

// Vertex (a, x) of g x h gets id a * h.vertex_count() + x.
Graph cartesian_product(const Graph& g, const Graph& h);

// Adds an edge for every pair at distance exactly 2. Requires connected.
Graph square(const Graph& g);

// Incidence graph of the complete k-uniform hypergraph on {0..l-1}.
// Left vertices 0..l-1; set-vertices follow in lexicographic subset order.
Graph kriesell_graph(int k, int l);

struct BlowupResult {
  Graph graph;
  // source[v] = original vertex this vertex stems from (identity outside a).
  std::vector<int> source;
};

// Replaces each vertex of `a` (in ascending order) by a k-clique joined to
// its neighborhood. The first clique vertex reuses the original id, the
// rest get fresh ids, so k=1 is the identity.
BlowupResult clique_blowup(const Graph& g, const std::vector<int>& a, int k);

// Fan: path 0..n-1 plus hub u=n adjacent to every path vertex. n >= 3.
Graph pn_star(int n);
// pn_star plus v=n+1 adjacent to u, 0 and n-1. n >= 3.
Graph pn_plus(int n);

}  // namespace dst

#endif
