#include "dst/trees.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace dst {

namespace {

struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::vector<char> make_mask(const std::vector<int>& vs, int n) {
  std::vector<char> mask(n, 0);
  for (int v : vs) mask[v] = 1;
  return mask;
}

}  // namespace

SpanningTree::SpanningTree(std::shared_ptr<const Graph> host,
                           std::vector<Edge> edges)
    : host_(std::move(host)), edges_(std::move(edges)) {
  if (!host_) throw CertificateError("spanning tree: null host");
  int n = host_->vertex_count();
  for (Edge& e : edges_) e = edge_key(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  if (static_cast<int>(edges_.size()) != n - 1)
    throw CertificateError("spanning tree: expected " + std::to_string(n - 1) +
                           " distinct edges, got " +
                           std::to_string(edges_.size()));
  Dsu dsu(n);
  degree_.assign(n, 0);
  for (const Edge& e : edges_) {
    if (!host_->has_edge(e.first, e.second))
      throw CertificateError("spanning tree: edge " + edge_str(e) +
                             " not in host graph");
    if (!dsu.merge(e.first, e.second))
      throw CertificateError("spanning tree: edge " + edge_str(e) +
                             " closes a cycle");
    ++degree_[e.first];
    ++degree_[e.second];
  }
  for (int v = 0; v < n; ++v)
    if (degree_[v] >= 2) inner_.push_back(v);
}

bool SpanningTree::contains(const Edge& e) const {
  Edge k = edge_key(e.first, e.second);
  return std::binary_search(edges_.begin(), edges_.end(), k);
}

int SpanningTree::tree_degree(int v) const {
  host_->check_vertex(v);
  return degree_[v];
}

bool SpanningTree::is_inner(int v) const { return tree_degree(v) >= 2; }

std::vector<int> SpanningTree::path_vertices(int u, int v) const {
  auto es = path_edges(u, v);
  std::vector<int> verts{u};
  int cur = u;
  for (const Edge& e : es) {
    cur = e.first == cur ? e.second : e.first;
    verts.push_back(cur);
  }
  return verts;
}

std::vector<Edge> SpanningTree::path_edges(int u, int v) const {
  int n = host_->vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges_) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> prev(n, -2);
  std::queue<int> q;
  prev[u] = -1;
  q.push(u);
  while (!q.empty() && prev[v] == -2) {
    int x = q.front();
    q.pop();
    for (int w : adj[x]) {
      if (prev[w] == -2) {
        prev[w] = x;
        q.push(w);
      }
    }
  }
  std::vector<Edge> path;
  for (int cur = v; prev[cur] >= 0; cur = prev[cur])
    path.push_back(edge_key(cur, prev[cur]));
  std::reverse(path.begin(), path.end());
  return path;
}

TreeFamily::TreeFamily(std::shared_ptr<const Graph> host,
                       std::vector<std::vector<Edge>> trees)
    : host_(std::move(host)) {
  if (!host_) throw CertificateError("tree family: null host");
  for (auto& edges : trees) trees_.emplace_back(host_, std::move(edges));
  int n = host_->vertex_count();
  std::vector<int> inner_count(n, 0);
  std::map<Edge, int> edge_count;
  for (const SpanningTree& t : trees_) {
    for (int v : t.inner_vertices()) ++inner_count[v];
    for (const Edge& e : t.edges()) ++edge_count[e];
  }
  for (int v = 0; v < n; ++v)
    if (inner_count[v] >= 2) overlap_inner_.push_back(v);
  for (const auto& [e, c] : edge_count)
    if (c >= 2) overlap_edges_.push_back(e);
}

Overlaps family_overlaps(const TreeFamily& f) {
  int n = f.host().vertex_count();
  std::vector<int> inner_count(n, 0);
  std::map<Edge, int> edge_count;
  for (const SpanningTree& t : f.trees()) {
    for (int v = 0; v < n; ++v)
      if (t.tree_degree(v) >= 2) ++inner_count[v];
    for (const Edge& e : t.edges()) ++edge_count[e];
  }
  Overlaps o;
  for (int v = 0; v < n; ++v)
    if (inner_count[v] >= 2) o.inner.push_back(v);
  for (const auto& [e, c] : edge_count)
    if (c >= 2) o.edges.push_back(e);
  return o;
}

Verdict verify_ij_disjoint(const TreeFamily& f, int i, int j) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("verify_ij_disjoint: i, j >= 0 required");
  Verdict v;
  bool inner_ok = static_cast<int>(f.overlap_inner().size()) <= i;
  bool edges_ok = static_cast<int>(f.overlap_edges().size()) <= j;
  v.ok = inner_ok && edges_ok;
  if (!inner_ok) {
    v.offending_vertices = f.overlap_inner();
    v.reason = "shared inner vertices: " +
               std::to_string(f.overlap_inner().size()) + " > " +
               std::to_string(i);
  }
  if (!edges_ok) {
    v.offending_edges = f.overlap_edges();
    if (!v.reason.empty()) v.reason += "; ";
    v.reason += "shared edges: " + std::to_string(f.overlap_edges().size()) +
                " > " + std::to_string(j);
  }
  return v;
}

Verdict verify_cds(const Graph& g, const std::vector<int>& d) {
  Verdict v;
  std::vector<char> in = make_mask(d, g.vertex_count());
  if (d.empty()) {
    v.reason = "empty set is not dominating";
    return v;
  }
  if (!g.induced_connected(d)) {
    v.reason = "induced subgraph not connected";
    v.offending_vertices = d;
    return v;
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (in[u]) continue;
    bool dominated = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                 [&](int w) { return in[w]; });
    if (!dominated) v.offending_vertices.push_back(u);
  }
  if (!v.offending_vertices.empty()) {
    v.reason = "undominated vertices";
    return v;
  }
  v.ok = true;
  return v;
}

Verdict verify_rooted_cds(const Graph& g,
                          const std::vector<std::vector<int>>& ds, int l) {
  Verdict v;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Verdict one = verify_cds(g, ds[i]);
    if (!one.ok) {
      one.reason = "set " + std::to_string(i) + ": " + one.reason;
      return one;
    }
  }
  std::set<int> shared;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<char> mi = make_mask(ds[i], g.vertex_count());
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      for (int x : ds[j])
        if (mi[x]) shared.insert(x);
  }
  if (static_cast<int>(shared.size()) > l) {
    v.reason = "pairwise intersections exceed " + std::to_string(l);
    v.offending_vertices.assign(shared.begin(), shared.end());
    return v;
  }
  v.ok = true;
  return v;
}

namespace {

Verdict check_partition_shape(const Graph& g, const VertexPartition& p,
                              std::size_t min_blocks) {
  Verdict v;
  if (p.blocks.size() < min_blocks) {
    v.reason = "too few blocks";
    return v;
  }
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (int x : p.blocks[b]) {
      g.check_vertex(x);
      if (owner[x] >= 0) {
        v.reason = "vertex " + std::to_string(x) + " in two blocks";
        v.offending_vertices.push_back(x);
        return v;
      }
      owner[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (owner[x] < 0) {
      v.reason = "vertex " + std::to_string(x) + " not covered";
      v.offending_vertices.push_back(x);
      return v;
    }
  }
  v.ok = true;
  return v;
}

// Connected components of B(V_i, V_j): host edges crossing the two blocks.
struct CrossComponent {
  std::vector<int> vertices;
  std::vector<Edge> edges;
  bool is_tree() const { return edges.size() + 1 == vertices.size(); }
};

std::vector<CrossComponent> cross_components(const Graph& g,
                                             const std::vector<int>& vi,
                                             const std::vector<int>& vj,
                                             std::vector<int>* isolated) {
  int n = g.vertex_count();
  std::vector<char> in_i = make_mask(vi, n), in_j = make_mask(vj, n);
  std::vector<std::vector<int>> adj(n);
  for (int u : vi)
    for (int w : g.neighbors(u))
      if (in_j[w]) {
        adj[u].push_back(w);
        adj[w].push_back(u);
      }
  std::vector<int> members(vi);
  members.insert(members.end(), vj.begin(), vj.end());
  std::sort(members.begin(), members.end());
  std::vector<CrossComponent> comps;
  std::vector<char> seen(n, 0);
  for (int s : members) {
    if (seen[s]) continue;
    if (adj[s].empty()) {
      seen[s] = 1;
      if (isolated) isolated->push_back(s);
      continue;
    }
    CrossComponent comp;
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.vertices.push_back(u);
      for (int w : adj[u]) {
        if (u < w) comp.edges.emplace_back(u, w);
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

LcistReport verify_lcist(const Graph& g, const VertexPartition& p, int l) {
  if (p.rooted)
    throw std::invalid_argument("verify_lcist: partition must have no root block");
  LcistReport rep;
  rep.verdict = check_partition_shape(g, p, 1);
  if (!rep.verdict.ok) return rep;

  int k = static_cast<int>(p.blocks.size());
  for (int i = 0; i < k; ++i) {
    if (p.blocks[i].empty() || !g.induced_connected(p.blocks[i])) {
      rep.verdict.ok = false;
      rep.verdict.reason = "block " + std::to_string(i) + " not connected";
      rep.verdict.offending_vertices = p.blocks[i];
      return rep;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> isolated;
      auto comps = cross_components(g, p.blocks[i], p.blocks[j], &isolated);
      if (!isolated.empty()) {
        rep.verdict.ok = false;
        rep.verdict.reason = "isolated vertex in B(V" + std::to_string(i) +
                             ",V" + std::to_string(j) + ")";
        rep.verdict.offending_vertices = isolated;
        return rep;
      }
      PairComponents pc{i, j, 0};
      for (const auto& c : comps)
        if (c.is_tree()) ++pc.tree_components;
      rep.total_tree_components += pc.tree_components;
      rep.pairs.push_back(pc);
    }
  }
  if (rep.total_tree_components > l) {
    rep.verdict.ok = false;
    rep.verdict.reason =
        "tree components " + std::to_string(rep.total_tree_components) +
        " > " + std::to_string(l);
    return rep;
  }
  rep.verdict.ok = true;
  return rep;
}

Verdict verify_lrooted_partition(const Graph& g, const VertexPartition& p,
                                 int l) {
  if (!p.rooted)
    throw std::invalid_argument(
        "verify_lrooted_partition: partition must carry a root block");
  Verdict v = check_partition_shape(g, p, 2);
  if (!v.ok) return v;

  const std::vector<int>& a = p.blocks.back();
  if (static_cast<int>(a.size()) > l) {
    v.ok = false;
    v.reason = "|A| = " + std::to_string(a.size()) + " > " + std::to_string(l);
    v.offending_vertices = a;
    return v;
  }
  int k = static_cast<int>(p.blocks.size()) - 1;
  for (int i = 0; i < k; ++i) {
    std::vector<int> with_a(p.blocks[i]);
    with_a.insert(with_a.end(), a.begin(), a.end());
    if (with_a.empty() || !g.induced_connected(with_a)) {
      v.ok = false;
      v.reason = "g[V" + std::to_string(i) + " u A] not connected";
      v.offending_vertices = p.blocks[i];
      return v;
    }
  }
  // N(A): neighbors of A outside A.
  std::vector<char> in_a = make_mask(a, g.vertex_count());
  std::vector<char> in_na(g.vertex_count(), 0);
  for (int x : a)
    for (int w : g.neighbors(x))
      if (!in_a[w]) in_na[w] = 1;

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<char> in_j = make_mask(p.blocks[j], g.vertex_count());
      std::vector<char> in_i = make_mask(p.blocks[i], g.vertex_count());
      auto survives = [&](int x) { return !in_na[x]; };
      for (int side = 0; side < 2; ++side) {
        const std::vector<int>& mine = side == 0 ? p.blocks[i] : p.blocks[j];
        const std::vector<char>& other = side == 0 ? in_j : in_i;
        for (int x : mine) {
          if (!survives(x)) continue;
          bool has = std::any_of(
              g.neighbors(x).begin(), g.neighbors(x).end(),
              [&](int w) { return other[w] && survives(w); });
          if (!has) {
            v.ok = false;
            v.reason = "isolated vertex in B(V" + std::to_string(i) + ",V" +
                       std::to_string(j) + ") - N(A)";
            v.offending_vertices.push_back(x);
            return v;
          }
        }
      }
    }
  }
  v.ok = true;
  return v;
}

namespace {

// BFS spanning tree of the subgraph induced by `vs`, rooted at its lowest
// vertex. Assumes induced connectivity.
std::vector<Edge> induced_bfs_tree(const Graph& g, const std::vector<int>& vs) {
  std::vector<Edge> out;
  if (vs.empty()) return out;
  std::vector<int> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> in = make_mask(sorted, g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(sorted[0]);
  seen[sorted[0]] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(edge_key(u, w));
        q.push(w);
      }
    }
  }
  return out;
}

// Bridges of a small standalone edge set (component of a cross graph).
std::set<Edge> component_bridges(const CrossComponent& comp) {
  std::set<Edge> bridges;
  // Deletion test per edge; components are tiny.
  for (const Edge& cand : comp.edges) {
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : comp.edges) {
      if (e == cand) continue;
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::set<int> seen;
    std::queue<int> q;
    q.push(comp.vertices[0]);
    seen.insert(comp.vertices[0]);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (seen.insert(w).second) q.push(w);
    }
    if (seen.size() != comp.vertices.size()) bridges.insert(cand);
  }
  return bridges;
}

std::map<int, int> bfs_layers(const std::vector<Edge>& edges, int root) {
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::map<int, int> layer;
  std::queue<int> q;
  layer[root] = 0;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (!layer.count(w)) {
        layer[w] = layer[u] + 1;
        q.push(w);
      }
    }
  }
  return layer;
}

}  // namespace

TreeFamily trees_from_lcist(std::shared_ptr<const Graph> host,
                            const VertexPartition& p) {
  const Graph& g = *host;
  LcistReport pre = verify_lcist(g, p, std::numeric_limits<int>::max());
  if (!pre.verdict.ok)
    throw CertificateError("trees_from_lcist: invalid partition: " +
                           pre.verdict.reason);

  int k = static_cast<int>(p.blocks.size());
  std::vector<std::set<Edge>> tree_edges(k);
  for (int i = 0; i < k; ++i)
    for (const Edge& e : induced_bfs_tree(g, p.blocks[i]))
      tree_edges[i].insert(e);

  for (int i = 0; i < k; ++i) {
    std::vector<char> in_i = make_mask(p.blocks[i], g.vertex_count());
    for (int j = i + 1; j < k; ++j) {
      auto comps = cross_components(g, p.blocks[i], p.blocks[j], nullptr);
      for (const CrossComponent& comp : comps) {
        std::vector<int> side_i;
        for (int x : comp.vertices)
          if (in_i[x]) side_i.push_back(x);

        if (comp.is_tree()) {
          int u = side_i.front();
          Edge e{-1, -1};
          for (const Edge& cand : comp.edges) {
            if (cand.first == u || cand.second == u) {
              e = cand;
              break;
            }
          }
          auto layer = bfs_layers(comp.edges, u);
          for (const Edge& ce : comp.edges) {
            int d = std::min(layer[ce.first], layer[ce.second]);
            tree_edges[d % 2 == 0 ? i : j].insert(ce);
          }
          tree_edges[j].insert(e);  // the shared edge
        } else {
          auto bridges = component_bridges(comp);
          int u = -1;
          for (int x : side_i) {
            bool on_cycle = false;
            for (const Edge& ce : comp.edges)
              if ((ce.first == x || ce.second == x) && !bridges.count(ce))
                on_cycle = true;
            if (on_cycle) {
              u = x;
              break;
            }
          }
          if (u < 0)
            throw CertificateError(
                "trees_from_lcist: no cycle vertex on the V_i side");
          Edge e{-1, -1};
          for (const Edge& cand : comp.edges) {
            if ((cand.first == u || cand.second == u) && !bridges.count(cand)) {
              e = cand;
              break;
            }
          }
          // Spanning tree of the component minus e, BFS from u.
          std::vector<Edge> remaining;
          for (const Edge& ce : comp.edges)
            if (!(ce == e)) remaining.push_back(ce);
          std::map<int, std::vector<int>> adj;
          for (const Edge& ce : remaining) {
            adj[ce.first].push_back(ce.second);
            adj[ce.second].push_back(ce.first);
          }
          std::vector<Edge> sub;
          std::set<int> seen{u};
          std::queue<int> q;
          q.push(u);
          while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : adj[x]) {
              if (seen.insert(w).second) {
                sub.push_back(edge_key(x, w));
                q.push(w);
              }
            }
          }
          auto layer = bfs_layers(sub, u);
          for (const Edge& ce : sub) {
            int d = std::min(layer[ce.first], layer[ce.second]);
            tree_edges[d % 2 == 0 ? i : j].insert(ce);
          }
          tree_edges[j].insert(e);
        }
      }
    }
  }

  std::vector<std::vector<Edge>> out;
  for (auto& s : tree_edges) out.emplace_back(s.begin(), s.end());
  return TreeFamily(std::move(host), std::move(out));
}

TreeFamily trees_from_cds(std::shared_ptr<const Graph> host,
                          const std::vector<std::vector<int>>& ds) {
  const Graph& g = *host;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Verdict v = verify_cds(g, ds[i]);
    if (!v.ok)
      throw CertificateError("trees_from_cds: set " + std::to_string(i) +
                             " is not a CDS: " + v.reason);
  }
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& d : ds)
    for (int x : d) {
      if (used[x])
        throw CertificateError("trees_from_cds: sets are not disjoint at " +
                               std::to_string(x));
      used[x] = 1;
    }

  std::vector<std::vector<Edge>> trees;
  for (const auto& d : ds) {
    std::vector<char> in = make_mask(d, g.vertex_count());
    std::vector<Edge> edges = induced_bfs_tree(g, d);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (in[v]) continue;
      int best = -1;
      for (int w : g.neighbors(v)) {
        if (in[w]) {
          best = w;
          break;  // neighbors are sorted: lowest id
        }
      }
      if (best < 0)
        throw CertificateError("trees_from_cds: vertex " + std::to_string(v) +
                               " has no neighbor in the set");
      edges.push_back(edge_key(v, best));
    }
    trees.push_back(std::move(edges));
  }
  return TreeFamily(std::move(host), std::move(trees));
}

namespace {

// Exact share minimization for a pair of rooted CDS with at most one shared
// vertex. The only edges that can land in both trees are the cross
// attachments and the root's incident edges, so the choice space factors
// into small independent clusters that are searched exhaustively.
TreeFamily rooted_pair_min_shares(std::shared_ptr<const Graph> host,
                                  const std::vector<int>& d1,
                                  const std::vector<int>& d2, int root) {
  const Graph& g = *host;
  int n = g.vertex_count();
  std::vector<char> in1 = make_mask(d1, n), in2 = make_mask(d2, n);

  auto comps_minus_root = [&](const std::vector<int>& d,
                              const std::vector<char>& in) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s : d) {
      if (s == root || seen[s]) continue;
      std::vector<int> comp, stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : g.neighbors(u))
          if (in[w] && w != root && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
  };

  struct Var {
    int kind;  // 0 attach1(p), 1 attach2(q), 2 conn1[c], 3 conn2[c]
    int key;
    std::vector<int> options;
  };
  std::vector<Var> vars;
  std::map<std::pair<int, int>, int> var_of;
  auto add_var = [&](int kind, int key, std::vector<int> options) {
    var_of[{kind, key}] = static_cast<int>(vars.size());
    vars.push_back({kind, key, std::move(options)});
  };

  for (int p = 0; p < n; ++p) {
    if (in2[p] && p != root) {
      std::vector<int> opts;
      for (int w : g.neighbors(p))
        if (in1[w]) opts.push_back(w);
      add_var(0, p, std::move(opts));
    }
    if (in1[p] && p != root) {
      std::vector<int> opts;
      for (int w : g.neighbors(p))
        if (in2[w]) opts.push_back(w);
      add_var(1, p, std::move(opts));
    }
  }
  std::vector<std::vector<int>> comps1, comps2;
  if (root >= 0) {
    comps1 = comps_minus_root(d1, in1);
    comps2 = comps_minus_root(d2, in2);
    for (std::size_t c = 0; c < comps1.size(); ++c) {
      std::vector<int> opts;
      for (int x : comps1[c])
        if (g.neighbors(x).count(root)) opts.push_back(x);
      add_var(2, static_cast<int>(c), std::move(opts));
    }
    for (std::size_t c = 0; c < comps2.size(); ++c) {
      std::vector<int> opts;
      for (int y : comps2[c])
        if (g.neighbors(y).count(root)) opts.push_back(y);
      add_var(3, static_cast<int>(c), std::move(opts));
    }
  }

  struct Clash {
    int a, ao, b, bo;
  };
  std::vector<Clash> clashes;
  auto add_clashes_for = [&](int va) {
    const Var& v = vars[va];
    for (std::size_t ao = 0; ao < v.options.size(); ++ao) {
      int target = v.options[ao];
      if (v.kind == 0) {
        if (target == root) {
          // attach1(p) = root shares with T2 picking p as a connector.
          for (std::size_t c = 0; c < comps2.size(); ++c) {
            int vb = var_of[{3, static_cast<int>(c)}];
            for (std::size_t bo = 0; bo < vars[vb].options.size(); ++bo)
              if (vars[vb].options[bo] == v.key)
                clashes.push_back({va, static_cast<int>(ao), vb,
                                   static_cast<int>(bo)});
          }
        } else {
          int vb = var_of[{1, target}];
          for (std::size_t bo = 0; bo < vars[vb].options.size(); ++bo)
            if (vars[vb].options[bo] == v.key)
              clashes.push_back(
                  {va, static_cast<int>(ao), vb, static_cast<int>(bo)});
        }
      } else if (v.kind == 1 && target == root) {
        for (std::size_t c = 0; c < comps1.size(); ++c) {
          int vb = var_of[{2, static_cast<int>(c)}];
          for (std::size_t bo = 0; bo < vars[vb].options.size(); ++bo)
            if (vars[vb].options[bo] == v.key)
              clashes.push_back(
                  {va, static_cast<int>(ao), vb, static_cast<int>(bo)});
        }
      }
    }
  };
  for (int va = 0; va < static_cast<int>(vars.size()); ++va)
    add_clashes_for(va);

  // Deduplicate (attach1 clashes were added from both sides).
  std::sort(clashes.begin(), clashes.end(), [](const Clash& x, const Clash& y) {
    return std::tie(x.a, x.ao, x.b, x.bo) < std::tie(y.a, y.ao, y.b, y.bo);
  });
  clashes.erase(std::unique(clashes.begin(), clashes.end(),
                            [](const Clash& x, const Clash& y) {
                              return std::tie(x.a, x.ao, x.b, x.bo) ==
                                     std::tie(y.a, y.ao, y.b, y.bo);
                            }),
                clashes.end());

  int nv = static_cast<int>(vars.size());
  std::vector<int> pick(nv, 0);
  std::vector<std::vector<int>> var_adj(nv);
  for (const Clash& cl : clashes) {
    var_adj[cl.a].push_back(cl.b);
    var_adj[cl.b].push_back(cl.a);
  }
  std::vector<int> cluster(nv, -1);
  int nc = 0;
  for (int v = 0; v < nv; ++v) {
    if (cluster[v] >= 0) continue;
    std::vector<int> stack{v};
    cluster[v] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : var_adj[u])
        if (cluster[w] < 0) {
          cluster[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<int> members;
    for (int v = 0; v < nv; ++v)
      if (cluster[v] == c) members.push_back(v);
    std::vector<Clash> local;
    for (const Clash& cl : clashes)
      if (cluster[cl.a] == c) local.push_back(cl);
    if (local.empty()) continue;
    std::vector<int> assign(members.size(), -1);
    std::vector<int> best_assign;
    int best = std::numeric_limits<int>::max();
    std::map<int, int> slot;
    for (std::size_t s = 0; s < members.size(); ++s) slot[members[s]] = static_cast<int>(s);
    auto rec = [&](auto&& self, std::size_t idx, int cost) -> void {
      if (cost >= best) return;
      if (idx == members.size()) {
        best = cost;
        best_assign = assign;
        return;
      }
      int v = members[idx];
      for (std::size_t o = 0; o < vars[v].options.size(); ++o) {
        assign[idx] = static_cast<int>(o);
        int add = 0;
        for (const Clash& cl : local) {
          int other = -1, oo = -1, mo = -1;
          if (cl.a == v) {
            other = cl.b;
            oo = cl.bo;
            mo = cl.ao;
          } else if (cl.b == v) {
            other = cl.a;
            oo = cl.ao;
            mo = cl.bo;
          } else {
            continue;
          }
          std::size_t os = slot[other];
          if (static_cast<int>(o) == mo && os < idx && assign[os] == oo) ++add;
        }
        self(self, idx + 1, cost + add);
      }
      assign[idx] = -1;
    };
    rec(rec, 0, 0);
    for (std::size_t s = 0; s < members.size(); ++s)
      pick[members[s]] = best_assign[s];
  }

  // Assemble both trees from the chosen assignments.
  std::vector<std::set<Edge>> tree_edges(2);
  auto build_core = [&](int which, const std::vector<int>& d,
                        const std::vector<char>& in,
                        const std::vector<std::vector<int>>& comps,
                        int conn_kind) {
    if (root < 0) {
      for (const Edge& e : induced_bfs_tree(g, d)) tree_edges[which].insert(e);
      return;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (const Edge& e : induced_bfs_tree(g, comps[c]))
        tree_edges[which].insert(e);
      const Var& v = vars[var_of[{conn_kind, static_cast<int>(c)}]];
      tree_edges[which].insert(
          edge_key(root, v.options[pick[var_of[{conn_kind, static_cast<int>(c)}]]]));
    }
  };
  build_core(0, d1, in1, comps1, 2);
  build_core(1, d2, in2, comps2, 3);
  for (const Var& v : vars) {
    if (v.kind == 0)
      tree_edges[0].insert(edge_key(v.key, v.options[pick[var_of[{0, v.key}]]]));
    else if (v.kind == 1)
      tree_edges[1].insert(edge_key(v.key, v.options[pick[var_of[{1, v.key}]]]));
  }
  std::vector<std::vector<Edge>> out;
  for (auto& s : tree_edges) out.emplace_back(s.begin(), s.end());
  return TreeFamily(std::move(host), std::move(out));
}

}  // namespace

TreeFamily trees_from_rooted_cds(std::shared_ptr<const Graph> host,
                                 const std::vector<std::vector<int>>& ds) {
  const Graph& g = *host;
  int n = g.vertex_count();
  int k = static_cast<int>(ds.size());
  for (int i = 0; i < k; ++i) {
    Verdict v = verify_cds(g, ds[i]);
    if (!v.ok)
      throw CertificateError("trees_from_rooted_cds: set " +
                             std::to_string(i) + " is not a CDS: " + v.reason);
  }
  // A = union of pairwise intersections.
  std::vector<int> owners(n, 0);
  for (const auto& d : ds)
    for (int x : d) ++owners[x];
  std::vector<char> in_a(n, 0);
  int shared_count = 0, shared_vertex = -1;
  for (int x = 0; x < n; ++x)
    if (owners[x] >= 2) {
      in_a[x] = 1;
      ++shared_count;
      shared_vertex = x;
    }

  if (k == 2 && shared_count <= 1)
    return rooted_pair_min_shares(std::move(host), ds[0], ds[1],
                                  shared_count == 1 ? shared_vertex : -1);

  std::vector<std::vector<char>> in_d(k, std::vector<char>(n, 0));
  for (int i = 0; i < k; ++i)
    for (int x : ds[i]) in_d[i][x] = 1;

  // Cores: spanning tree of g[D_i] with as few A-incident edges as
  // possible (Kruskal over weight = number of endpoints in A).
  std::vector<std::set<Edge>> tree_edges(k);
  for (int i = 0; i < k; ++i) {
    std::vector<std::pair<int, Edge>> cand;
    for (const Edge& e : g.edges())
      if (in_d[i][e.first] && in_d[i][e.second])
        cand.push_back({(in_a[e.first] ? 1 : 0) + (in_a[e.second] ? 1 : 0), e});
    std::sort(cand.begin(), cand.end());
    Dsu dsu(n);
    int need = static_cast<int>(ds[i].size()) - 1;
    for (const auto& [w, e] : cand) {
      if (need == 0) break;
      if (dsu.merge(e.first, e.second)) {
        tree_edges[i].insert(e);
        --need;
      }
    }
  }

  // Attachments, tree by tree; avoid edges already placed in other trees,
  // then avoid A, then prefer boosting a current leaf of the core.
  auto edge_elsewhere = [&](int self, const Edge& e) {
    for (int t = 0; t < k; ++t)
      if (t != self && tree_edges[t].count(e)) return true;
    return false;
  };
  for (int i = 0; i < k; ++i) {
    std::vector<int> deg(n, 0);
    for (const Edge& e : tree_edges[i]) {
      ++deg[e.first];
      ++deg[e.second];
    }
    for (int v = 0; v < n; ++v) {
      if (in_d[i][v]) continue;
      int best = -1;
      std::tuple<int, int, int, int> best_score{4, 4, 4, n + 1};
      for (int w : g.neighbors(v)) {
        if (!in_d[i][w]) continue;
        Edge e = edge_key(v, w);
        std::tuple<int, int, int, int> score{edge_elsewhere(i, e) ? 1 : 0,
                                             in_a[w] ? 1 : 0,
                                             deg[w] <= 1 ? 0 : 1, w};
        if (score < best_score) {
          best_score = score;
          best = w;
        }
      }
      if (best < 0)
        throw CertificateError("trees_from_rooted_cds: vertex " +
                               std::to_string(v) + " has no neighbor in set " +
                               std::to_string(i));
      tree_edges[i].insert(edge_key(v, best));
      ++deg[v];
      ++deg[best];
    }
  }

  std::vector<std::vector<Edge>> out;
  for (auto& s : tree_edges) out.emplace_back(s.begin(), s.end());
  return TreeFamily(std::move(host), std::move(out));
}

}  // namespace dst
