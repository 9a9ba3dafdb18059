#ifndef DST_TREES_HPP
#define DST_TREES_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dst/graph.hpp"

namespace dst {

/// Thrown when a certificate (tree family, partition, CDS list) fails its
/// precondition.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spanning tree of a host graph, stored as sorted canonical edge keys.
/// The inner-vertex set I(T) = {v : deg_T(v) >= 2} is cached.
class SpanningTree {
 public:
  SpanningTree(std::shared_ptr<const Graph> host, std::vector<Edge> edges);

  const Graph& host() const { return *host_; }
  const std::shared_ptr<const Graph>& host_ptr() const { return host_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& inner_vertices() const { return inner_; }
  bool contains(const Edge& e) const;
  int tree_degree(int v) const;
  bool is_inner(int v) const;

  // Vertex set of the unique u-v path.
  std::vector<int> path_vertices(int u, int v) const;
  std::vector<Edge> path_edges(int u, int v) const;

 private:
  std::shared_ptr<const Graph> host_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<int> inner_;
};

/// Ordered list of spanning trees over one host, with the Def.-1 overlap
/// sets cached: vertices inner in >= 2 trees and edges in >= 2 trees.
class TreeFamily {
 public:
  TreeFamily(std::shared_ptr<const Graph> host,
             std::vector<std::vector<Edge>> trees);

  const Graph& host() const { return *host_; }
  const std::shared_ptr<const Graph>& host_ptr() const { return host_; }
  int size() const { return static_cast<int>(trees_.size()); }
  const SpanningTree& tree(int t) const { return trees_.at(t); }
  const std::vector<SpanningTree>& trees() const { return trees_; }
  const std::vector<int>& overlap_inner() const { return overlap_inner_; }
  const std::vector<Edge>& overlap_edges() const { return overlap_edges_; }

 private:
  std::shared_ptr<const Graph> host_;
  std::vector<SpanningTree> trees_;
  std::vector<int> overlap_inner_;
  std::vector<Edge> overlap_edges_;
};

struct Overlaps {
  std::vector<int> inner;
  std::vector<Edge> edges;
};

// Recomputes the Def.-1 overlap sets from scratch.
Overlaps family_overlaps(const TreeFamily& f);

/// Ordered blocks covering V(G) disjointly. When `rooted` is set the last
/// block is the root block A.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;
  bool rooted = false;
};

struct Verdict {
  bool ok = false;
  std::string reason;
  std::vector<int> offending_vertices;
  std::vector<Edge> offending_edges;
  explicit operator bool() const { return ok; }
};

Verdict verify_ij_disjoint(const TreeFamily& f, int i, int j);

// ok iff g[d] is connected and d dominates every vertex outside d.
Verdict verify_cds(const Graph& g, const std::vector<int>& d);

// ok iff every set is a CDS and the union of pairwise intersections has
// size at most l.
Verdict verify_rooted_cds(const Graph& g,
                          const std::vector<std::vector<int>>& ds, int l);

struct PairComponents {
  int block_i = 0;
  int block_j = 0;
  int tree_components = 0;
};

struct LcistReport {
  Verdict verdict;
  std::vector<PairComponents> pairs;
  int total_tree_components = 0;
};

// l-CIST partition check: connected blocks, no isolated vertex in any
// B(V_i,V_j), and at most l tree components summed over all pairs.
LcistReport verify_lcist(const Graph& g, const VertexPartition& p, int l);

// l-rooted partition check: |A| <= l, each g[V_i u A] connected, and no
// isolated vertex in any B(V_i,V_j) - N(A).
Verdict verify_lrooted_partition(const Graph& g, const VertexPartition& p,
                                 int l);

// Constructive direction of the partition characterization: builds k trees
// that are (0, sum c_ij)-disjoint from a valid l-CIST partition.
TreeFamily trees_from_lcist(std::shared_ptr<const Graph> host,
                            const VertexPartition& p);

// Trees induced by pairwise disjoint CDS: tree inside each g[D_i] plus one
// pendant edge per outside vertex (lowest-id neighbor in D_i).
TreeFamily trees_from_cds(std::shared_ptr<const Graph> host,
                          const std::vector<std::vector<int>>& ds);

// Trees induced by l-rooted CDS (sets may share up to the root set
// A = union of pairwise intersections). Tree and attachment choices favor
// few common edges; every D_i vertex is pushed toward inner where possible.
TreeFamily trees_from_rooted_cds(std::shared_ptr<const Graph> host,
                                 const std::vector<std::vector<int>>& ds);

}  // namespace dst

#endif
