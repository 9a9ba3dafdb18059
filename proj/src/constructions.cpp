#include "dst/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace dst {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Double-star CIST block of K_b on ids 0..b-1: trees with inner pairs
// (0,1),(2,3),..., pairwise edge-disjoint; an odd leftover vertex attaches
// as a leaf everywhere.
std::vector<std::vector<Edge>> double_star_cists(int b) {
  int d = b / 2;
  std::vector<std::vector<Edge>> trees(d);
  for (int p = 0; p < d; ++p) {
    int xp = 2 * p, yp = 2 * p + 1;
    std::vector<Edge>& t = trees[p];
    t.push_back(edge_key(xp, yp));
    for (int q = 0; q < d; ++q) {
      if (q == p) continue;
      int xq = 2 * q, yq = 2 * q + 1;
      if (q > p) {
        t.push_back(edge_key(xq, xp));
        t.push_back(edge_key(yq, yp));
      } else {
        t.push_back(edge_key(xq, yp));
        t.push_back(edge_key(yq, xp));
      }
    }
    if (b % 2 == 1) t.push_back(edge_key(b - 1, xp));
  }
  return trees;
}

}  // namespace

int dst_0l_complete(int n, int l) {
  require(n >= 3 && l >= 0, "complete_0l: n >= 3 and l >= 0 required");
  int extra = n % 2 == 0 ? l / (n - 1) : (2 * l + (n - 1)) / (2 * (n - 1));
  return n / 2 + std::min(extra, (n + 1) / 2);
}

TreeFamily complete_0l(int n, int l) {
  require(n >= 3 && l >= 0, "complete_0l: n >= 3 and l >= 0 required");
  int k = dst_0l_complete(n, l);
  int extra = k - n / 2;
  int stars = extra == 0 ? 0 : 2 * extra - (n % 2);

  auto host = std::make_shared<const Graph>(complete_graph(n));
  std::vector<std::vector<Edge>> trees;

  for (int c = 0; c < stars; ++c) {
    std::vector<Edge> t;
    for (int v = 0; v < n; ++v)
      if (v != c) t.push_back(edge_key(c, v));
    trees.push_back(std::move(t));
  }

  // Remaining vertices pair up in id order; n - stars is even unless there
  // are no stars and n is odd, in which case the top id rides as a leaf.
  int first = stars;
  int rest = n - stars;
  int pairs = rest / 2;
  bool leftover = rest % 2 == 1;
  for (int p = 0; p < pairs; ++p) {
    int xp = first + 2 * p, yp = xp + 1;
    std::vector<Edge> t;
    t.push_back(edge_key(xp, yp));
    for (int q = 0; q < pairs; ++q) {
      if (q == p) continue;
      int xq = first + 2 * q, yq = xq + 1;
      if (q > p) {
        t.push_back(edge_key(xq, xp));
        t.push_back(edge_key(yq, yp));
      } else {
        t.push_back(edge_key(xq, yp));
        t.push_back(edge_key(yq, xp));
      }
    }
    for (int c = 0; c < stars; ++c) t.push_back(edge_key(c, xp));
    if (leftover) t.push_back(edge_key(n - 1, xp));
    trees.push_back(std::move(t));
  }
  return TreeFamily(host, std::move(trees));
}

int dst_1l_complete(int n, int l) {
  require(n >= 4, "complete_1l: n >= 4 required");
  require(l >= 1, "complete_1l: l >= 1 required");
  int extra = n % 2 == 0 ? (l - 1) / 2 : l / 2;
  return n / 2 + extra;
}

TreeFamily complete_1l(int n, int l) {
  require(n >= 4, "complete_1l: n >= 4 required");
  require(l >= 1, "complete_1l: l >= 1 required");
  if (l >= n - 1)
    throw UnboundedFamily("complete_1l: dst_{1,l}(K_n) is not finite for l >= n-1");
  int extra = n % 2 == 0 ? (l - 1) / 2 : l / 2;
  if (extra == 0) return complete_0l(n, 0);

  int b = n % 2 == 0 ? n - 2 * (extra + 1) : n - 2 * extra - 1;
  int hub = n - 1;
  auto host = std::make_shared<const Graph>(complete_graph(n));
  std::vector<std::vector<Edge>> trees;

  // CISTs of the induced K_b, extended through the hub.
  for (std::vector<Edge>& t : double_star_cists(b)) {
    int anchor = t.front().first;  // lowest inner vertex of the block tree
    t.push_back(edge_key(hub, anchor));
    for (int w = b; w < n - 1; ++w) t.push_back(edge_key(hub, w));
    trees.push_back(std::move(t));
  }
  // Double stars with inner pair {hub, u_k}.
  for (int uk = b; uk < n - 1; ++uk) {
    std::vector<Edge> t;
    for (int w = b; w < n - 1; ++w) t.push_back(edge_key(hub, w));
    for (int v = 0; v < b; ++v) t.push_back(edge_key(uk, v));
    trees.push_back(std::move(t));
  }
  return TreeFamily(host, std::move(trees));
}

Verdict validate_clique_path(const Graph& g, const CliquePath& cp) {
  Verdict v;
  if (cp.bags.empty()) {
    v.reason = "clique path has no bags";
    return v;
  }
  int n = g.vertex_count();
  std::vector<int> first(n, -1), last(n, -1);
  for (std::size_t t = 0; t < cp.bags.size(); ++t) {
    if (cp.bags[t].empty()) {
      v.reason = "bag " + std::to_string(t) + " is empty";
      return v;
    }
    for (int x : cp.bags[t]) {
      g.check_vertex(x);
      if (first[x] < 0) first[x] = static_cast<int>(t);
      last[x] = static_cast<int>(t);
    }
    for (std::size_t a = 0; a < cp.bags[t].size(); ++a) {
      for (std::size_t b = a + 1; b < cp.bags[t].size(); ++b) {
        if (!g.has_edge(cp.bags[t][a], cp.bags[t][b])) {
          v.reason = "bag " + std::to_string(t) + " is not a clique";
          v.offending_vertices = {cp.bags[t][a], cp.bags[t][b]};
          return v;
        }
      }
    }
  }
  // Property ii) is equivalent to each vertex's bags being consecutive.
  for (int x = 0; x < n; ++x) {
    if (first[x] < 0) {
      v.reason = "vertex " + std::to_string(x) + " in no bag";
      v.offending_vertices = {x};
      return v;
    }
    int seen = 0;
    for (std::size_t t = 0; t < cp.bags.size(); ++t)
      if (std::find(cp.bags[t].begin(), cp.bags[t].end(), x) != cp.bags[t].end())
        ++seen;
    if (seen != last[x] - first[x] + 1) {
      v.reason = "vertex " + std::to_string(x) + " has a gap in its bags";
      v.offending_vertices = {x};
      return v;
    }
  }
  for (const Edge& e : g.edges()) {
    bool inside = false;
    for (const auto& bag : cp.bags) {
      bool a = std::find(bag.begin(), bag.end(), e.first) != bag.end();
      bool b = std::find(bag.begin(), bag.end(), e.second) != bag.end();
      if (a && b) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      v.reason = "edge (" + std::to_string(e.first) + "," +
                 std::to_string(e.second) + ") inside no bag";
      v.offending_edges = {e};
      return v;
    }
  }
  v.ok = true;
  return v;
}

std::vector<std::vector<int>> interval_cds(const Graph& g, const CliquePath& cp,
                                           int k) {
  require(k >= 1, "interval_cds: k >= 1 required");
  Verdict cv = validate_clique_path(g, cp);
  require(cv.ok, "interval_cds: invalid clique path: " + cv.reason);

  int bags = static_cast<int>(cp.bags.size());
  if (bags == 1) {
    require(static_cast<int>(cp.bags[0].size()) >= k,
            "interval_cds: single bag smaller than k");
    std::vector<int> bag(cp.bags[0]);
    std::sort(bag.begin(), bag.end());
    std::vector<std::vector<int>> out;
    for (int s = 0; s < k; ++s) out.push_back({bag[s]});
    return out;
  }

  std::vector<std::set<int>> result(k);
  std::vector<int> rep(k, -1);
  for (int t = 0; t + 1 < bags; ++t) {
    std::set<int> junction;
    std::set<int> next(cp.bags[t + 1].begin(), cp.bags[t + 1].end());
    for (int x : cp.bags[t])
      if (next.count(x)) junction.insert(x);
    require(static_cast<int>(junction.size()) >= k,
            "interval_cds: junction between bags " + std::to_string(t) +
                " and " + std::to_string(t + 1) + " has fewer than k vertices");
    std::set<int> taken;
    // Keep survivors first, then fill with the lowest free vertices.
    for (int s = 0; s < k; ++s)
      if (rep[s] >= 0 && junction.count(rep[s])) taken.insert(rep[s]);
    for (int s = 0; s < k; ++s) {
      if (rep[s] >= 0 && junction.count(rep[s])) continue;
      int pick = -1;
      for (int x : junction) {
        if (!taken.count(x)) {
          pick = x;
          break;
        }
      }
      require(pick >= 0, "interval_cds: junction exhausted");
      rep[s] = pick;
      taken.insert(pick);
    }
    for (int s = 0; s < k; ++s) result[s].insert(rep[s]);
  }
  std::vector<std::vector<int>> out;
  for (auto& s : result) out.emplace_back(s.begin(), s.end());
  return out;
}

TreeFamily cylinder_trees(int n1, int n2) {
  require(n1 >= 3 && n2 >= 3, "cylinder_trees: n1, n2 >= 3 required");
  auto host = std::make_shared<const Graph>(cylinder_graph(n1, n2));
  auto id = [n2](int i, int j) { return i * n2 + j; };

  std::vector<Edge> t1, t2;
  // T1: top ring row as a path, vertical runs on even columns, their
  // rightward rungs for the middle rows, wrap edges on odd columns.
  for (int j = 0; j + 1 < n2; ++j) t1.push_back(edge_key(id(0, j), id(0, j + 1)));
  for (int j = 0; j < n2; j += 2) {
    for (int i = 0; i + 1 < n1; ++i) t1.push_back(edge_key(id(i, j), id(i + 1, j)));
    if (j + 1 < n2)
      for (int i = 1; i + 1 < n1; ++i) t1.push_back(edge_key(id(i, j), id(i, j + 1)));
  }
  for (int j = 1; j < n2; j += 2) t1.push_back(edge_key(id(0, j), id(n1 - 1, j)));

  // T2: bottom row as a path, vertical runs on odd columns, their rungs,
  // wrap edges on even columns, plus the first-column rungs.
  for (int j = 0; j + 1 < n2; ++j)
    t2.push_back(edge_key(id(n1 - 1, j), id(n1 - 1, j + 1)));
  for (int j = 1; j < n2; j += 2) {
    for (int i = 0; i + 1 < n1; ++i) t2.push_back(edge_key(id(i, j), id(i + 1, j)));
    if (j + 1 < n2)
      for (int i = 1; i + 1 < n1; ++i) t2.push_back(edge_key(id(i, j), id(i, j + 1)));
  }
  for (int j = 0; j < n2; j += 2) t2.push_back(edge_key(id(0, j), id(n1 - 1, j)));
  for (int i = 1; i + 1 < n1; ++i) t2.push_back(edge_key(id(i, 0), id(i, 1)));

  return TreeFamily(host, {std::move(t1), std::move(t2)});
}

namespace {

std::vector<int> complement_plus(const Graph& g, const std::vector<int>& d1,
                                 int root) {
  std::vector<char> in = std::vector<char>(g.vertex_count(), 0);
  for (int x : d1) in[x] = 1;
  std::vector<int> d2;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in[v] || v == root) d2.push_back(v);
  return d2;
}

int rooted_penalty(const Graph& g, const std::vector<int>& d1,
                   const std::vector<int>& d2) {
  auto piece = [&](const std::vector<int>& d) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int x : d) in[x] = 1;
    int undominated = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (in[v]) continue;
      bool dom = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                             [&](int w) { return in[w]; });
      if (!dom) ++undominated;
    }
    // Component surplus of g[d].
    std::vector<char> seen(g.vertex_count(), 0);
    int comps = 0;
    for (int s : d) {
      if (seen[s]) continue;
      ++comps;
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
      }
    }
    return undominated + (comps > 0 ? comps - 1 : 1);
  };
  return piece(d1) + piece(d2);
}

}  // namespace

RootedCdsResult grid_rooted_cds(int n1, int n2) {
  require(n1 >= 3 && n2 >= 3, "grid_rooted_cds: n1, n2 >= 3 required");
  bool transposed = n1 > n2;
  int r1 = transposed ? n2 : n1;
  int r2 = transposed ? n1 : n2;

  auto inner_id = [r2](int i, int j) { return i * r2 + j; };
  Graph inner = grid_graph(r1, r2);

  std::set<int> d1set;
  int root;
  if (r1 == 3) {
    for (int j = 0; j < r2; ++j) d1set.insert(inner_id(1, j));
    root = inner_id(1, 0);
  } else {
    // Double spiral. Winding w runs a top strip at row 2w, descends on
    // column r2-2-2w, runs a bottom strip at row r1-1-2w and ascends on
    // column 1+2w; the complement is the interleaved corridor spiral. The
    // printed strip ranges overshoot for even heights, so the windings are
    // emitted only while the top strip stays above the bottom one.
    auto hrun = [&](int row, int c0, int c1) {
      for (int j = std::max(0, c0); j <= std::min(r2 - 1, c1); ++j)
        d1set.insert(inner_id(row, j));
    };
    auto vrun = [&](int col, int i0, int i1) {
      for (int i = std::max(0, i0); i <= std::min(r1 - 1, i1); ++i)
        d1set.insert(inner_id(i, col));
    };
    hrun(0, 0, r2 - 1);
    vrun(r2 - 2, 0, r1 - 1);
    hrun(r1 - 1, 1, r2 - 2);
    vrun(1, 2, r1 - 1);
    for (int w = 1;; ++w) {
      int top = 2 * w, bottom = r1 - 1 - 2 * w;
      int rc = r2 - 2 - 2 * w, lc = 1 + 2 * w;
      if (top > bottom || rc < 1) break;
      hrun(top, lc - 2, rc);
      vrun(rc, top, bottom);
      hrun(bottom, lc, rc);
      vrun(lc, top + 2, bottom);
    }
    root = inner_id(1, r2 - 2);
    d1set.insert(root);
  }

  RootedCdsResult res;
  std::vector<int> d1(d1set.begin(), d1set.end());
  std::vector<int> d2 = complement_plus(inner, d1, root);

  // Local repair: move single vertices between the sets until the 1-rooted
  // verification passes; every move is logged.
  const int kMaxRepairs = 200;
  for (int iter = 0; iter < kMaxRepairs; ++iter) {
    Verdict v = verify_rooted_cds(inner, {d1, d2}, 1);
    if (v.ok) break;
    int best_gain = 0;
    int best_vertex = -1;
    int cur = rooted_penalty(inner, d1, d2);
    for (int x = 0; x < inner.vertex_count(); ++x) {
      if (x == root) continue;
      bool in1 =
          std::binary_search(d1.begin(), d1.end(), x);
      std::vector<int> nd1(d1), nd2;
      if (in1) {
        nd1.erase(std::remove(nd1.begin(), nd1.end(), x), nd1.end());
      } else {
        nd1.push_back(x);
        std::sort(nd1.begin(), nd1.end());
      }
      nd2 = complement_plus(inner, nd1, root);
      int pen = rooted_penalty(inner, nd1, nd2);
      if (cur - pen > best_gain) {
        best_gain = cur - pen;
        best_vertex = x;
      }
    }
    if (best_vertex < 0)
      throw std::runtime_error("grid_rooted_cds: repair search stalled at (" +
                               std::to_string(n1) + "," + std::to_string(n2) +
                               ")");
    bool in1 = std::binary_search(d1.begin(), d1.end(), best_vertex);
    if (in1) {
      d1.erase(std::remove(d1.begin(), d1.end(), best_vertex), d1.end());
    } else {
      d1.push_back(best_vertex);
      std::sort(d1.begin(), d1.end());
    }
    d2 = complement_plus(inner, d1, root);
    res.repair_log.push_back(std::string(in1 ? "dropped " : "added ") +
                             std::to_string(best_vertex) +
                             (in1 ? " from D1" : " to D1"));
  }
  Verdict final_v = verify_rooted_cds(inner, {d1, d2}, 1);
  require(final_v.ok, "grid_rooted_cds: certificate did not verify after repair");

  if (transposed) {
    auto flip = [&](std::vector<int>& d) {
      for (int& x : d) {
        int i = x / r2, j = x % r2;
        x = j * n2 + i;
      }
      std::sort(d.begin(), d.end());
    };
    flip(d1);
    flip(d2);
    int ri = root / r2, rj = root % r2;
    root = rj * n2 + ri;
  }
  res.d1 = d1;
  res.d2 = d2;
  res.root = root;
  return res;
}

BaseCdsResult base_cds(BaseCds which) {
  if (which == BaseCds::C4) {
    return {cycle_graph(4), {{0, 1}, {2, 3}}};
  }
  return {complete_bipartite(3, 3), {{0, 3}, {1, 4}, {2, 5}}};
}

namespace {

std::vector<int> bfs_two_coloring(int n, const std::vector<Edge>& tree_edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : tree_edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> color(n, -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        q.push(w);
      }
    }
  }
  return color;
}

VertexPartition partition_from_coloring(const std::vector<int>& color) {
  VertexPartition p;
  p.blocks.assign(2, {});
  for (int v = 0; v < static_cast<int>(color.size()); ++v)
    p.blocks[color[v]].push_back(v);
  return p;
}

// Shortest cycle (its vertex list); shortest cycles are induced.
std::vector<int> shortest_cycle(const Graph& g) {
  std::vector<int> best;
  for (const Edge& e : g.edges()) {
    // Shortest path between the endpoints avoiding the edge itself.
    int n = g.vertex_count();
    std::vector<int> prev(n, -2);
    std::queue<int> q;
    prev[e.first] = -1;
    q.push(e.first);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (u == e.first && w == e.second) continue;
        if (prev[w] == -2) {
          prev[w] = u;
          q.push(w);
        }
      }
    }
    if (prev[e.second] == -2) continue;
    std::vector<int> cycle;
    for (int cur = e.second; cur >= 0; cur = prev[cur]) cycle.push_back(cur);
    if (best.empty() || cycle.size() < best.size()) best = cycle;
  }
  return best;
}

}  // namespace

TreeFamily square_trees(const Graph& g) {
  require(g.vertex_count() >= 3, "square_trees: |V| >= 3 required");
  require(g.connected(), "square_trees: connected input required");
  int n = g.vertex_count();
  auto host = std::make_shared<const Graph>(square(g));

  bool is_tree = g.edge_count() == n - 1;
  bool is_cycle = !is_tree;
  if (!is_tree)
    for (int v = 0; v < n; ++v)
      if (g.degree(v) != 2) is_cycle = false;

  if (is_tree || n == 3) {
    // Bipartition of a spanning tree: a 1-CIST partition of the square.
    std::vector<Edge> tree_edges;
    if (is_tree) {
      tree_edges = g.edges();
    } else {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      for (const Edge& e : g.edges()) {
        int a = find(e.first), b = find(e.second);
        if (a != b) {
          parent[a] = b;
          tree_edges.push_back(e);
        }
      }
    }
    auto color = bfs_two_coloring(n, tree_edges);
    return trees_from_lcist(host, partition_from_coloring(color));
  }

  if (is_cycle) {
    // Parity split: the cross graph keeps the whole cycle plus at least
    // one distance-2 chord, so it is connected and not a tree.
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = v % 2;
    return trees_from_lcist(host, partition_from_coloring(color));
  }

  // General non-tree case: drop one cycle edge, keep a spanning tree that
  // contains the rest of the cycle and one edge leaving it, then use the
  // tree's bipartition.
  std::vector<int> cycle = shortest_cycle(g);
  std::vector<char> on_cycle(n, 0);
  for (int x : cycle) on_cycle[x] = 1;
  int u = -1, v = -1;
  for (int x : cycle) {
    for (int w : g.neighbors(x)) {
      if (!on_cycle[w]) {
        u = x;
        v = w;
        break;
      }
    }
    if (u >= 0) break;
  }
  require(u >= 0, "square_trees: internal error: no edge leaves the cycle");
  int w = -1;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    if (cycle[t] != u) continue;
    int before = cycle[(t + cycle.size() - 1) % cycle.size()];
    int after = cycle[(t + 1) % cycle.size()];
    w = std::min(before, after);
  }
  Edge dropped = edge_key(u, w);

  std::vector<Edge> tree_edges;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto take = [&](const Edge& e) {
    int a = find(e.first), b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
    tree_edges.push_back(e);
    return true;
  };
  for (std::size_t t = 0; t + 1 < cycle.size(); ++t) {
    Edge e = edge_key(cycle[t], cycle[t + 1]);
    if (!(e == dropped)) take(e);
  }
  Edge wrap = edge_key(cycle.back(), cycle.front());
  if (!(wrap == dropped)) take(wrap);
  take(edge_key(u, v));
  for (const Edge& e : g.edges())
    if (!(e == dropped)) take(e);

  auto color = bfs_two_coloring(n, tree_edges);
  return trees_from_lcist(host, partition_from_coloring(color));
}

}  // namespace dst
