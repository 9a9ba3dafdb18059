#ifndef DST_TESTS_CATALOG_HPP
#define DST_TESTS_CATALOG_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "dst/graph.hpp"

namespace test {

// Graphs on n vertices encoded as edge bitmasks; bit of edge (u,v), u < v,
// is v*(v-1)/2 + u.
inline int edge_bit(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

inline dst::Graph graph_of_mask(int n, std::uint32_t mask) {
  dst::Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask >> edge_bit(u, v) & 1) g.add_edge(u, v);
  return g;
}

inline bool mask_connected(int n, std::uint32_t mask) {
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (!(frontier >> v & 1)) continue;
      for (int w = 0; w < n; ++w)
        if (w != v && (mask >> edge_bit(std::min(v, w), std::max(v, w)) & 1))
          next |= 1u << w;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (n >= 32 ? ~0u : (1u << n) - 1);
}

// Calls fn once per isomorphism class of connected graphs on exactly n
// vertices (n <= 6): a mask is kept iff it is the minimum over all vertex
// permutations.
inline void for_each_connected_graph_up_to_iso(
    int n, const std::function<void(const dst::Graph&)>& fn) {
  int bits = n * (n - 1) / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> edge_map(bits);
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u)
        edge_map[edge_bit(u, v)] = edge_bit(std::min(perm[u], perm[v]),
                                            std::max(perm[u], perm[v]));
    perms.push_back(std::move(edge_map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    bool canonical = true;
    for (const auto& pm : perms) {
      std::uint32_t mapped = 0;
      for (int b = 0; b < bits; ++b)
        if (mask >> b & 1) mapped |= 1u << pm[b];
      if (mapped < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    if (!mask_connected(n, mask)) continue;
    fn(graph_of_mask(n, mask));
  }
}

// Every stride-th connected labeled graph on n vertices (deterministic
// sample when the full isomorphism-reduced sweep is too slow).
inline void for_each_connected_mask(
    int n, std::uint32_t stride,
    const std::function<void(const dst::Graph&)>& fn) {
  int bits = n * (n - 1) / 2;
  std::uint64_t kept = 0;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    if (!mask_connected(n, static_cast<std::uint32_t>(mask))) continue;
    if (kept++ % stride) continue;
    fn(graph_of_mask(n, static_cast<std::uint32_t>(mask)));
  }
}

}  // namespace test

#endif
