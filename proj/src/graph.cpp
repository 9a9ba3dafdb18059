#include "dst/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace dst {

namespace {

[[noreturn]] void domain_error(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void require(bool cond, const std::string& msg) {
  if (!cond) domain_error(msg);
}

}  // namespace

Graph::Graph(int n) {
  require(n >= 0, "graph: vertex count must be nonnegative");
  adj_.resize(n);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    domain_error("graph: vertex " + std::to_string(v) + " out of range 0.." +
                 std::to_string(vertex_count() - 1));
  }
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  require(u != v, "graph: self-loops are not allowed");
  if (adj_[u].count(v)) return false;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].count(v) > 0;
}

const std::set<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int Graph::min_degree() const {
  require(vertex_count() > 0, "graph: min degree of empty graph");
  int d = vertex_count();
  for (int v = 0; v < vertex_count(); ++v)
    d = std::min(d, static_cast<int>(adj_[v].size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return adj_ == other.adj_;
}

std::vector<int> Graph::bfs_distances(int src) const {
  check_vertex(src);
  std::vector<int> dist(vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj_[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int Graph::distance(int u, int v) const {
  check_vertex(v);
  return bfs_distances(u)[v];
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d < 0; });
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(vertex_count(), 0);
  for (int s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : adj_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int Graph::diameter() const {
  if (vertex_count() == 0) return -1;
  int d = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    auto dist = bfs_distances(v);
    for (int x : dist) {
      if (x < 0) return -1;
      d = std::max(d, x);
    }
  }
  return d;
}

bool Graph::induced_connected(const std::vector<int>& vs) const {
  if (vs.empty()) return true;
  std::vector<char> in(vertex_count(), 0);
  for (int v : vs) {
    check_vertex(v);
    in[v] = 1;
  }
  std::vector<char> seen(vertex_count(), 0);
  std::queue<int> q;
  q.push(vs[0]);
  seen[vs[0]] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj_[u]) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  std::vector<int> uniq(vs);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  return reached == uniq.size();
}

namespace {

struct LowLink {
  const Graph& g;
  std::vector<int> disc, low, parent;
  std::vector<char> is_art;
  std::vector<Edge> bridges;
  int timer = 0;

  explicit LowLink(const Graph& graph)
      : g(graph),
        disc(graph.vertex_count(), -1),
        low(graph.vertex_count(), 0),
        parent(graph.vertex_count(), -1),
        is_art(graph.vertex_count(), 0) {}

  void dfs(int root) {
    // Iterative DFS; recursion depth is unbounded on paths.
    struct Frame {
      int v;
      std::set<int>::const_iterator it;
    };
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, g.neighbors(root).begin()});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.it == g.neighbors(f.v).end()) {
        int v = f.v;
        int p = parent[v];
        stack.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p] && parent[p] >= 0) is_art[p] = 1;
          if (low[v] > disc[p]) bridges.push_back(edge_key(p, v));
        }
        continue;
      }
      int w = *f.it;
      ++f.it;
      if (w == parent[f.v]) continue;
      if (disc[w] >= 0) {
        low[f.v] = std::min(low[f.v], disc[w]);
      } else {
        parent[w] = f.v;
        disc[w] = low[w] = timer++;
        stack.push_back({w, g.neighbors(w).begin()});
      }
    }
    // Root rule: articulation iff it has >= 2 DFS children.
    int children = 0;
    for (int w : g.neighbors(root))
      if (parent[w] == root) ++children;
    if (children >= 2) is_art[root] = 1;
  }
};

}  // namespace

StructureReport structure(const Graph& g) {
  StructureReport rep;
  rep.components = static_cast<int>(g.components().size());
  rep.min_degree = g.vertex_count() > 0 ? g.min_degree() : 0;
  rep.diameter = g.diameter();

  LowLink ll(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (ll.disc[v] < 0) ll.dfs(v);

  std::vector<char> on_bridge(g.vertex_count(), 0);
  for (const Edge& e : ll.bridges) {
    on_bridge[e.first] = 1;
    on_bridge[e.second] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (ll.is_art[v]) {
      rep.articulation_vertices.push_back(v);
      if (!on_bridge[v]) ++rep.a;
    }
  }
  std::sort(ll.bridges.begin(), ll.bridges.end());
  rep.bridges = ll.bridges;
  rep.b = static_cast<int>(rep.bridges.size());
  return rep;
}

Graph complete_graph(int n) {
  require(n >= 1, "K_n: n >= 1 required");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "P_n: n >= 1 required");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "C_n: n >= 3 required");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph grid_graph(int n1, int n2) {
  require(n1 >= 3 && n2 >= 3, "grid: n1, n2 >= 3 required");
  Graph g(n1 * n2);
  auto id = [n2](int i, int j) { return i * n2 + j; };
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (i + 1 < n1) g.add_edge(id(i, j), id(i + 1, j));
      if (j + 1 < n2) g.add_edge(id(i, j), id(i, j + 1));
    }
  }
  return g;
}

Graph cylinder_graph(int n1, int n2) {
  require(n1 >= 3 && n2 >= 3, "cylinder: n1, n2 >= 3 required");
  Graph g(n1 * n2);
  auto id = [n2](int i, int j) { return i * n2 + j; };
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      g.add_edge(id(i, j), id((i + 1) % n1, j));
      if (j + 1 < n2) g.add_edge(id(i, j), id(i, j + 1));
    }
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "K_{a,b}: a, b >= 1 required");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph glued_cliques(int n) {
  require(n >= 3, "glued-cliques: n >= 3 required");
  int s1 = (n + 1) / 2;
  int s2 = n + 1 - s1;
  Graph g(n);
  // Clique 1 on {0} u {1..s1-1}, clique 2 on {0} u {s1..n-1}.
  for (int u = 0; u < s1; ++u)
    for (int v = u + 1; v < s1; ++v) g.add_edge(u, v);
  std::vector<int> c2{0};
  for (int v = s1; v < n; ++v) c2.push_back(v);
  require(static_cast<int>(c2.size()) == s2, "glued-cliques: size mismatch");
  for (std::size_t x = 0; x < c2.size(); ++x)
    for (std::size_t y = x + 1; y < c2.size(); ++y)
      g.add_edge(c2[x], c2[y]);
  return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  require(g.vertex_count() > 0 && h.vertex_count() > 0,
          "cartesian product: nonempty inputs required");
  int nh = h.vertex_count();
  Graph out(g.vertex_count() * nh);
  auto id = [nh](int a, int x) { return a * nh + x; };
  for (int a = 0; a < g.vertex_count(); ++a)
    for (const Edge& e : h.edges()) out.add_edge(id(a, e.first), id(a, e.second));
  for (const Edge& e : g.edges())
    for (int x = 0; x < nh; ++x) out.add_edge(id(e.first, x), id(e.second, x));
  return out;
}

Graph square(const Graph& g) {
  require(g.connected(), "square: connected input required");
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(e.first, e.second);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = g.bfs_distances(v);
    for (int w = v + 1; w < g.vertex_count(); ++w)
      if (dist[w] == 2) out.add_edge(v, w);
  }
  return out;
}

Graph kriesell_graph(int k, int l) {
  require(k >= 1, "kriesell: k >= 1 required");
  require(l >= k, "kriesell: l >= k required");
  // Left vertices 0..l-1; one vertex per k-subset in lexicographic order.
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto gen = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int x = start; x < l; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  gen(gen, 0);
  Graph g(l + static_cast<int>(subsets.size()));
  for (std::size_t s = 0; s < subsets.size(); ++s)
    for (int x : subsets[s]) g.add_edge(x, l + static_cast<int>(s));
  return g;
}

BlowupResult clique_blowup(const Graph& g, const std::vector<int>& a, int k) {
  require(k >= 1, "clique blowup: k >= 1 required");
  std::vector<char> in_a(g.vertex_count(), 0);
  for (int v : a) {
    g.check_vertex(v);
    require(!in_a[v], "clique blowup: duplicate vertex in replacement set");
    in_a[v] = 1;
  }
  std::vector<int> sorted_a(a);
  std::sort(sorted_a.begin(), sorted_a.end());

  int n = g.vertex_count();
  int total = n + (k - 1) * static_cast<int>(sorted_a.size());
  BlowupResult res{Graph(total), std::vector<int>(total)};
  for (int v = 0; v < total; ++v) res.source[v] = v < n ? v : -1;

  for (const Edge& e : g.edges()) res.graph.add_edge(e.first, e.second);

  int next = n;
  for (int u : sorted_a) {
    std::vector<int> clique{u};
    for (int t = 1; t < k; ++t) {
      clique.push_back(next);
      res.source[next] = u;
      ++next;
    }
    std::vector<int> nbrs(res.graph.neighbors(u).begin(),
                          res.graph.neighbors(u).end());
    for (std::size_t x = 0; x < clique.size(); ++x)
      for (std::size_t y = x + 1; y < clique.size(); ++y)
        res.graph.add_edge(clique[x], clique[y]);
    for (int c : clique)
      for (int w : nbrs)
        if (c != u) res.graph.add_edge(c, w);
  }
  return res;
}

Graph pn_star(int n) {
  require(n >= 3, "pn_star: n >= 3 required");
  Graph g(n + 1);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  for (int v = 0; v < n; ++v) g.add_edge(v, n);
  return g;
}

Graph pn_plus(int n) {
  require(n >= 3, "pn_plus: n >= 3 required");
  Graph g(n + 2);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  for (int v = 0; v < n; ++v) g.add_edge(v, n);
  g.add_edge(n, n + 1);
  g.add_edge(0, n + 1);
  g.add_edge(n - 1, n + 1);
  return g;
}

}  // namespace dst
