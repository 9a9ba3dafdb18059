#include "dst/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>

namespace dst {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
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

long general_edge_bound(int n, int k, int j) {
  return static_cast<long>(k) * (n - 1) - static_cast<long>(j) * (k - 1);
}

}  // namespace

void for_each_spanning_tree(
    const Graph& g, const std::function<bool(const std::vector<Edge>&)>& fn,
    const SearchBudget& budget) {
  if (!g.connected())
    throw std::invalid_argument("spanning tree enumeration: graph must be connected");
  int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (n <= 1) {
    fn({});
    return;
  }

  Timer timer;
  std::uint64_t emitted = 0;
  std::vector<Edge> chosen;
  bool stopped = false;

  // Include/exclude DFS over the canonical edge order; the exclude branch
  // is taken only when the chosen forest plus the remaining edges still
  // spans, so every leaf is a tree and the output order is lexicographic.
  auto can_complete = [&](int idx, const Dsu& dsu) {
    Dsu probe = dsu;
    int comps = n - static_cast<int>(chosen.size());
    for (int e = idx; e < m && comps > 1; ++e)
      if (probe.merge(edges[e].first, edges[e].second)) --comps;
    return comps == 1;
  };

  auto rec = [&](auto&& self, int idx, Dsu& dsu) -> void {
    if (stopped) return;
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (++emitted > budget.max_spanning_trees)
        throw BudgetExceeded("spanning tree enumeration: more than " +
                             std::to_string(budget.max_spanning_trees) +
                             " trees");
      if ((emitted & 1023) == 0 && timer.elapsed() > budget.time_cap_seconds)
        throw BudgetExceeded("spanning tree enumeration: time cap");
      if (!fn(chosen)) stopped = true;
      return;
    }
    if (idx == m) return;
    const Edge& e = edges[idx];
    if (dsu.find(e.first) != dsu.find(e.second)) {
      Dsu saved = dsu;
      dsu.merge(e.first, e.second);
      chosen.push_back(e);
      self(self, idx + 1, dsu);
      chosen.pop_back();
      dsu = saved;
      if (stopped) return;
    }
    if (can_complete(idx + 1, dsu)) self(self, idx + 1, dsu);
  };

  Dsu dsu(n);
  rec(rec, 0, dsu);
}

std::vector<std::vector<Edge>> enumerate_spanning_trees(
    const Graph& g, const SearchBudget& budget) {
  std::vector<std::vector<Edge>> out;
  for_each_spanning_tree(
      g,
      [&](const std::vector<Edge>& t) {
        out.push_back(t);
        return true;
      },
      budget);
  return out;
}

std::uint64_t matrix_tree_count(const Graph& g) {
  int n = g.vertex_count();
  if (n > 17)
    throw std::invalid_argument("matrix_tree_count: supported up to 17 vertices");
  if (n <= 1) return 1;
  int d = n - 1;
  std::vector<std::vector<__int128>> a(d, std::vector<__int128>(d, 0));
  for (int v = 0; v < d; ++v) a[v][v] = g.degree(v);
  for (const Edge& e : g.edges()) {
    if (e.first < d && e.second < d) {
      a[e.first][e.second] -= 1;
      a[e.second][e.first] -= 1;
    }
  }
  // Bareiss fraction-free elimination; exact over the integers.
  __int128 prev = 1;
  int sign = 1;
  for (int c = 0; c < d; ++c) {
    int pivot = -1;
    for (int r = c; r < d; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      sign = -sign;
    }
    for (int r = c + 1; r < d; ++r)
      for (int x = c + 1; x < d; ++x)
        a[r][x] = (a[r][x] * a[c][c] - a[r][c] * a[c][x]) / prev;
    prev = a[c][c];
  }
  __int128 det = sign * a[d - 1][d - 1];
  return static_cast<std::uint64_t>(det < 0 ? -det : det);
}

namespace {

// ---------- bitmask machinery (n <= 64) ----------

struct MaskGraph {
  int n = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> adj;

  explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(g.vertex_count(), 0) {
    if (n > 64)
      throw std::invalid_argument("oracle: exhaustive search supports up to 64 vertices");
    all = n == 64 ? ~0ull : (1ull << n) - 1;
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) adj[v] |= 1ull << w;
  }

  bool connected_subset(std::uint64_t sub) const {
    if (sub == 0) return true;
    std::uint64_t reached = sub & (~sub + 1);  // lowest bit
    while (true) {
      std::uint64_t frontier = reached;
      std::uint64_t grow = reached;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grow |= adj[v] & sub;
      }
      if (grow == reached) break;
      reached = grow;
    }
    return reached == sub;
  }

  bool dominates(std::uint64_t sub) const {
    std::uint64_t covered = sub;
    std::uint64_t rest = sub;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= adj[v];
    }
    return covered == all;
  }

  bool is_cds(std::uint64_t sub) const {
    return sub != 0 && dominates(sub) && connected_subset(sub);
  }
};

std::vector<std::uint64_t> all_cds_masks(const MaskGraph& mg,
                                         const Timer& timer,
                                         const SearchBudget& budget) {
  if (mg.n > 20)
    throw std::invalid_argument("oracle: CDS enumeration supports up to 20 vertices");
  std::vector<std::uint64_t> out;
  std::uint64_t top = 1ull << mg.n;
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    if ((mask & 0xffff) == 0 && timer.elapsed() > budget.time_cap_seconds)
      throw BudgetExceeded("CDS enumeration: time cap");
    if (mg.is_cds(mask)) out.push_back(mask);
  }
  return out;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// ---------- joint DFS over per-edge tree assignments ----------

struct JointSearch {
  const Graph& g;
  int n, m, k, icap, jcap;
  bool distinct_only;
  std::vector<Edge> edges;

  // Per tree: union-find without path compression so merges undo cheaply.
  std::vector<std::vector<int>> parent, compsize;
  std::vector<int> tree_edges;          // edges chosen per tree
  std::vector<std::vector<int>> deg;    // deg[t][v]
  std::vector<int> inner_trees;         // #trees where v is inner
  int shared_inner = 0, shared_edges = 0;
  std::vector<std::uint8_t> assign;     // mask per edge
  std::vector<std::uint64_t> closes;    // vertices whose last edge this is

  SearchStats stats;
  const SearchBudget& budget;
  Timer timer;
  // Returns false to stop the whole search (witness accepted).
  std::function<bool()> on_solution;

  JointSearch(const Graph& graph, int kk, int ii, int jj, bool distinct,
              const SearchBudget& b)
      : g(graph),
        n(graph.vertex_count()),
        m(graph.edge_count()),
        k(kk),
        icap(ii),
        jcap(jj),
        distinct_only(distinct),
        edges(graph.edges()),
        budget(b) {
    if (n > 64)
      throw std::invalid_argument("oracle: joint search supports up to 64 vertices");
    if (k > 8)
      throw std::invalid_argument("oracle: joint search supports up to 8 trees");
    parent.assign(k, std::vector<int>(n));
    compsize.assign(k, std::vector<int>(n, 1));
    for (auto& p : parent) std::iota(p.begin(), p.end(), 0);
    tree_edges.assign(k, 0);
    deg.assign(k, std::vector<int>(n, 0));
    inner_trees.assign(n, 0);
    assign.assign(m, 0);
    closes.assign(m, 0);
    std::vector<int> last(n, -1);
    for (int e = 0; e < m; ++e) {
      last[edges[e].first] = e;
      last[edges[e].second] = e;
    }
    for (int v = 0; v < n; ++v)
      if (last[v] >= 0) closes[last[v]] |= 1ull << v;
  }

  int find(int t, int x) const {
    while (parent[t][x] != x) x = parent[t][x];
    return x;
  }

  // Can tree t still span using its forest plus edges from `from` on?
  bool completable(int t, int from) {
    static thread_local std::vector<int> scratch;
    scratch.assign(n, -1);
    std::vector<int>& p = scratch;
    auto sfind = [&](int x) {
      int r = find(t, x);
      while (p[r] >= 0 && p[r] != r) r = p[r];
      return p[r] < 0 ? r : p[r];
    };
    int comps = n - tree_edges[t];
    for (int e = from; e < m && comps > 1; ++e) {
      int a = sfind(edges[e].first), b = sfind(edges[e].second);
      if (a != b) {
        p[a] = b;
        p[b] = b;
        --comps;
      }
    }
    return comps == 1;
  }

  enum class Step { Found, Exhausted, Budget };

  Step run() {
    for (int t = 0; t < k; ++t)
      if (!completable(t, 0)) return Step::Exhausted;
    // Bit t of `equal`: trees t and t+1 have identical assignments so far.
    std::uint32_t equal = (1u << (k - 1)) - 1;
    return rec(0, equal);
  }

  Step rec(int idx, std::uint32_t equal) {
    if (++stats.nodes > budget.max_nodes) return Step::Budget;
    if ((stats.nodes & 4095) == 0 && timer.elapsed() > budget.time_cap_seconds)
      return Step::Budget;

    if (idx == m) {
      for (int t = 0; t < k; ++t)
        if (tree_edges[t] != n - 1) return Step::Exhausted;
      if (distinct_only && equal != 0) return Step::Exhausted;
      return on_solution() ? Step::Exhausted : Step::Found;
    }

    const Edge e = edges[idx];
    const int u = e.first, v = e.second;
    std::uint64_t must = 0;  // trees that must take this edge (coverage)
    for (int t = 0; t < k; ++t) {
      bool need_u = (closes[idx] >> u & 1) && deg[t][u] == 0;
      bool need_v = (closes[idx] >> v & 1) && deg[t][v] == 0;
      if (need_u || need_v) must |= 1ull << t;
    }

    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if ((mask & must) != must) continue;
      // Left-packed masks among currently identical trees.
      if ((mask >> 1) & ~mask & equal) continue;
      int bits = std::popcount(mask);
      if (bits >= 2 && shared_edges + 1 > jcap) continue;

      // Acyclicity per included tree.
      bool acyclic = true;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        int t = std::countr_zero(rest);
        if (find(t, u) == find(t, v)) {
          acyclic = false;
          break;
        }
      }
      if (!acyclic) continue;

      // Edge-count feasibility after taking this assignment.
      int remaining = m - idx - 1;
      bool count_ok = true;
      for (int t = 0; t < k; ++t) {
        int cnt = tree_edges[t] + ((mask >> t) & 1);
        if (n - 1 - cnt > remaining) {
          count_ok = false;
          break;
        }
      }
      if (!count_ok) continue;

      // Apply.
      struct Undo {
        int t, root_child;
      };
      std::vector<Undo> merges;
      int inner_gain = 0;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        int t = std::countr_zero(rest);
        int a = find(t, u), b = find(t, v);
        if (compsize[t][a] < compsize[t][b]) std::swap(a, b);
        parent[t][b] = a;
        compsize[t][a] += compsize[t][b];
        merges.push_back({t, b});
        ++tree_edges[t];
        for (int x : {u, v}) {
          if (++deg[t][x] == 2) {
            if (++inner_trees[x] == 2) ++inner_gain;
          }
        }
      }
      int edge_gain = bits >= 2 ? 1 : 0;
      shared_inner += inner_gain;
      shared_edges += edge_gain;

      auto undo = [&]() {
        shared_inner -= inner_gain;
        shared_edges -= edge_gain;
        for (auto it = merges.rbegin(); it != merges.rend(); ++it) {
          int t = it->t;
          int b = it->root_child;
          int a = parent[t][b];
          compsize[t][a] -= compsize[t][b];
          parent[t][b] = b;
          --tree_edges[t];
        }
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
          int t = std::countr_zero(rest);
          for (int x : {u, v})
            if (deg[t][x]-- == 2) --inner_trees[x];
        }
      };

      if (shared_inner > icap) {
        undo();
        continue;
      }

      // Trees excluded by this edge must remain completable.
      bool feasible = true;
      for (int t = 0; t < k && feasible; ++t)
        if (!((mask >> t) & 1) && !completable(t, idx + 1)) feasible = false;

      if (feasible) {
        std::uint8_t saved = assign[idx];
        assign[idx] = static_cast<std::uint8_t>(mask);
        std::uint32_t next_equal = equal & ~(mask ^ (mask >> 1));
        Step s = rec(idx + 1, next_equal);
        assign[idx] = saved;
        if (s != Step::Exhausted) {
          undo();
          return s;
        }
      }
      undo();
    }
    return Step::Exhausted;
  }

  std::vector<std::vector<Edge>> current_trees() const {
    std::vector<std::vector<Edge>> trees(k);
    for (int e = 0; e < m; ++e)
      for (int t = 0; t < k; ++t)
        if (assign[e] >> t & 1) trees[t].push_back(edges[e]);
    return trees;
  }
};

}  // namespace

ExistsResult exists_family(std::shared_ptr<const Graph> host, int k, int i,
                           int j, const SearchBudget& budget,
                           bool distinct_only) {
  if (k < 2) throw std::invalid_argument("exists_family: k >= 2 required");
  if (i < 0 || j < 0)
    throw std::invalid_argument("exists_family: i, j >= 0 required");
  const Graph& g = *host;
  int n = g.vertex_count();
  int m = g.edge_count();
  Timer timer;
  ExistsResult res;

  if (n == 0 || !g.connected()) {
    res.verdict = OracleVerdict::Refuted;
    return res;
  }
  if (n == 1) {
    if (distinct_only) {
      res.verdict = OracleVerdict::Refuted;
      return res;
    }
    res.verdict = OracleVerdict::Witness;
    res.witness = TreeFamily(host, std::vector<std::vector<Edge>>(k));
    return res;
  }

  // Necessary edge count; the i = 0 strengthening needs n >= 3.
  long bound = general_edge_bound(n, k, j);
  if (i == 0 && n >= 3)
    bound = std::max(bound, static_cast<long>(k) * (n - 1) - j);
  if (m < bound) {
    res.verdict = OracleVerdict::Refuted;
    res.stats.seconds = timer.elapsed();
    return res;
  }

  // Small hosts: enumerate the trees once and scan index tuples.
  constexpr std::uint64_t kTupleTreeCap = 20000;
  if (n <= 64 && m <= 64 && k <= 8) {
    std::vector<std::uint64_t> edge_masks, inner_masks;
    std::vector<std::vector<Edge>> all_trees;
    bool enumerated = false;
    try {
      SearchBudget probe = budget;
      probe.max_spanning_trees = std::min<std::uint64_t>(
          kTupleTreeCap, budget.max_spanning_trees);
      std::vector<Edge> edges = g.edges();
      auto index_of = [&](const Edge& e) {
        return static_cast<int>(
            std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
      };
      for_each_spanning_tree(
          g,
          [&](const std::vector<Edge>& t) {
            std::uint64_t em = 0, im = 0;
            std::vector<int> degv(n, 0);
            for (const Edge& e : t) {
              em |= 1ull << index_of(e);
              ++degv[e.first];
              ++degv[e.second];
            }
            for (int v = 0; v < n; ++v)
              if (degv[v] >= 2) im |= 1ull << v;
            edge_masks.push_back(em);
            inner_masks.push_back(im);
            all_trees.push_back(t);
            return true;
          },
          probe);
      enumerated = true;
    } catch (const BudgetExceeded&) {
      enumerated = false;  // too many trees; fall through to the joint DFS
    }
    if (enumerated) {
      double tuples_estimate = 1;
      for (int d = 0; d < k; ++d)
        tuples_estimate = tuples_estimate * (all_trees.size() + d) / (d + 1);
      if (tuples_estimate <= 2e8) {
        res.stats.trees = all_trees.size();
        std::vector<int> pick;
        bool budget_hit = false;
        auto rec = [&](auto&& self, std::size_t start, std::uint64_t once_e,
                       std::uint64_t twice_e, std::uint64_t once_i,
                       std::uint64_t twice_i) -> bool {
          if (static_cast<int>(pick.size()) == k) return true;
          for (std::size_t t = start; t < all_trees.size(); ++t) {
            if (++res.stats.nodes > budget.max_nodes ||
                ((res.stats.nodes & 0xffff) == 0 &&
                 timer.elapsed() > budget.time_cap_seconds)) {
              budget_hit = true;
              return false;
            }
            std::uint64_t ne_twice = twice_e | (once_e & edge_masks[t]);
            if (std::popcount(ne_twice) > j) continue;
            std::uint64_t ni_twice = twice_i | (once_i & inner_masks[t]);
            if (std::popcount(ni_twice) > i) continue;
            pick.push_back(static_cast<int>(t));
            if (self(self, distinct_only ? t + 1 : t, once_e | edge_masks[t],
                     ne_twice, once_i | inner_masks[t], ni_twice))
              return true;
            pick.pop_back();
            if (budget_hit) return false;
          }
          return false;
        };
        bool found = rec(rec, 0, 0, 0, 0, 0);
        res.stats.seconds = timer.elapsed();
        if (budget_hit) {
          res.verdict = OracleVerdict::BudgetExceeded;
          return res;
        }
        if (found) {
          std::vector<std::vector<Edge>> trees;
          for (int t : pick) trees.push_back(all_trees[t]);
          res.witness = TreeFamily(host, std::move(trees));
          res.verdict = OracleVerdict::Witness;
        } else {
          res.verdict = OracleVerdict::Refuted;
        }
        return res;
      }
    }
  }

  // General path: simultaneous construction of all k trees.
  JointSearch search(g, k, i, j, distinct_only, budget);
  std::vector<std::vector<Edge>> witness_trees;
  search.on_solution = [&]() {
    witness_trees = search.current_trees();
    return false;  // stop at the first witness
  };
  JointSearch::Step s = search.run();
  res.stats = search.stats;
  res.stats.seconds = timer.elapsed();
  switch (s) {
    case JointSearch::Step::Found:
      res.witness = TreeFamily(host, std::move(witness_trees));
      res.verdict = OracleVerdict::Witness;
      break;
    case JointSearch::Step::Exhausted:
      res.verdict = OracleVerdict::Refuted;
      break;
    case JointSearch::Step::Budget:
      res.verdict = OracleVerdict::BudgetExceeded;
      break;
  }
  return res;
}

int gamma_c(const Graph& g, const SearchBudget& budget) {
  if (!g.connected())
    throw std::invalid_argument("gamma_c: connected graph required");
  int n = g.vertex_count();
  if (n > 24)
    throw std::invalid_argument("gamma_c: exhaustive search supports up to 24 vertices");
  if (n == 1) return 1;
  MaskGraph mg(g);
  Timer timer;
  int best = n;
  std::uint64_t top = 1ull << n;
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    if ((mask & 0xffff) == 0 && timer.elapsed() > budget.time_cap_seconds)
      throw BudgetExceeded("gamma_c: time cap");
    if (std::popcount(mask) >= best) continue;
    if (mg.is_cds(mask)) best = std::popcount(mask);
  }
  return best;
}

int connected_domatic(const Graph& g, const SearchBudget& budget) {
  if (!g.connected())
    throw std::invalid_argument("connected_domatic: connected graph required");
  int n = g.vertex_count();
  if (n == 1) return 1;
  MaskGraph mg(g);
  Timer timer;
  int gam = gamma_c(g, budget);
  int upper = n / gam;

  auto cds = all_cds_masks(mg, timer, budget);
  std::sort(cds.begin(), cds.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  int best = 1;  // the whole vertex set is a CDS of a connected graph
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t used,
                 int count) -> bool {
    best = std::max(best, count);
    if (best >= upper) return true;
    if (++nodes > budget.max_nodes)
      throw BudgetExceeded("connected_domatic: node cap");
    if ((nodes & 0xfff) == 0 && timer.elapsed() > budget.time_cap_seconds)
      throw BudgetExceeded("connected_domatic: time cap");
    int free = n - std::popcount(used);
    if (count + free / gam <= best) return false;
    for (std::size_t idx = start; idx < cds.size(); ++idx) {
      if (cds[idx] & used) continue;
      if (self(self, idx + 1, used | cds[idx], count + 1)) return true;
    }
    return false;
  };
  rec(rec, 0, 0, 0);
  return best;
}

bool has_two_disjoint_cds(const Graph& g) {
  if (!g.connected()) return false;
  MaskGraph mg(g);
  Timer timer;
  SearchBudget budget;
  auto cds = all_cds_masks(mg, timer, budget);
  for (std::size_t a = 0; a < cds.size(); ++a)
    for (std::size_t b = a + 1; b < cds.size(); ++b)
      if ((cds[a] & cds[b]) == 0) return true;
  return false;
}

DstResult dst_value(std::shared_ptr<const Graph> host, int i, int j, int k_max,
                    const SearchBudget& budget) {
  if (k_max < 2) throw std::invalid_argument("dst_value: k_max >= 2 required");
  const Graph& g = *host;
  DstResult res;
  Timer timer;
  if (!g.connected()) {
    res.verdict = OracleVerdict::Refuted;
    return res;
  }
  int n = g.vertex_count();
  if (n >= 2 && i >= gamma_c(g, budget) && j >= n - 1) {
    res.verdict = OracleVerdict::Unbounded;
    return res;
  }
  int value = 1;
  for (int k = 2; k <= k_max; ++k) {
    ExistsResult r = exists_family(host, k, i, j, budget);
    res.stats.nodes += r.stats.nodes;
    res.stats.trees += r.stats.trees;
    if (r.verdict == OracleVerdict::BudgetExceeded) {
      res.verdict = OracleVerdict::BudgetExceeded;
      res.stats.seconds = timer.elapsed();
      return res;
    }
    if (r.verdict == OracleVerdict::Refuted) break;
    value = k;
  }
  res.verdict = OracleVerdict::Witness;
  res.value = value;
  res.stats.seconds = timer.elapsed();
  return res;
}

ImbalanceResult min_imbalance(const Graph& g, ImbalanceMode mode,
                              const SearchBudget& budget) {
  if (!g.connected())
    throw std::invalid_argument("min_imbalance: connected graph required");
  ImbalanceResult res;
  Timer timer;
  if (mode == ImbalanceMode::CdsPair) {
    MaskGraph mg(g);
    auto cds = all_cds_masks(mg, timer, budget);
    for (std::size_t a = 0; a < cds.size(); ++a) {
      for (std::size_t b = a + 1; b < cds.size(); ++b) {
        if (cds[a] & cds[b]) continue;
        int diff =
            std::abs(std::popcount(cds[a]) - std::popcount(cds[b]));
        if (!res.exists || diff < res.value) {
          res.exists = true;
          res.value = diff;
        }
        if (res.exists && res.value == 0) break;
      }
      if (res.exists && res.value == 0) break;
    }
    res.stats.seconds = timer.elapsed();
    return res;
  }

  // CIST pairs: exhaust all (0,0) families of two trees, tracking the
  // inner-set size gap.
  JointSearch search(g, 2, 0, 0, false, budget);
  int n = g.vertex_count();
  search.on_solution = [&]() {
    int i1 = 0, i2 = 0;
    for (int v = 0; v < n; ++v) {
      if (search.deg[0][v] >= 2) ++i1;
      if (search.deg[1][v] >= 2) ++i2;
    }
    int diff = std::abs(i1 - i2);
    if (!res.exists || diff < res.value) {
      res.exists = true;
      res.value = diff;
    }
    return true;  // keep enumerating
  };
  JointSearch::Step s = search.run();
  res.stats = search.stats;
  res.stats.seconds = timer.elapsed();
  if (s == JointSearch::Step::Budget)
    throw BudgetExceeded("min_imbalance: search budget exceeded");
  return res;
}

}  // namespace dst
