#ifndef DST_CONSTRUCTIONS_HPP
#define DST_CONSTRUCTIONS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dst/graph.hpp"
#include "dst/trees.hpp"

namespace dst {

/// Signals a family whose size is not finite for the requested parameters.
class UnboundedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path-decomposition of a host graph into maximal cliques (interval-graph
/// input form).
struct CliquePath {
  std::vector<std::vector<int>> bags;
};

// Checks the path-decomposition properties: every edge inside some bag,
// X_i n X_k subset of X_j for i <= j <= k, each bag a clique.
Verdict validate_clique_path(const Graph& g, const CliquePath& cp);

// Two trees over square(g): (0,1)-disjoint when g is a tree, completely
// independent otherwise (g connected, |V| >= 3; the 3-vertex non-tree case
// K_3 only admits (0,1) and is returned as such).
TreeFamily square_trees(const Graph& g);

// Exact number of (0,l)-disjoint spanning trees in K_n:
// floor(n/2) + min(floor(l/(n-1) + [n odd]/2), ceil(n/2)).
int dst_0l_complete(int n, int l);
// The realizing family: spanning stars on the lowest ids plus two-inner
// double stars on the remaining vertices paired in id order.
TreeFamily complete_0l(int n, int l);

// Number of trees built for (1,l) in K_n: floor(n/2) + floor(l/2 - [n even]/2).
int dst_1l_complete(int n, int l);
// CIST block inside the low-id clique B extended through hub u = n-1, plus
// double stars with inner pair {u, u_k}. Throws UnboundedFamily when
// l >= n-1.
TreeFamily complete_1l(int n, int l);

// k disjoint CDS of a k-connected interval graph given by a clique path;
// left-to-right sweep keeping one representative per set in each
// consecutive-bag intersection.
std::vector<std::vector<int>> interval_cds(const Graph& g,
                                           const CliquePath& cp, int k);

// The two explicit (0, n1-2)-disjoint spanning trees of the cylinder.
TreeFamily cylinder_trees(int n1, int n2);

struct RootedCdsResult {
  std::vector<int> d1;
  std::vector<int> d2;
  int root = -1;
  std::vector<std::string> repair_log;
};

// Two 1-rooted CDS of the n1 x n2 grid (double-spiral pattern; middle row
// for n1 = 3). Falls back to logged local repairs if the pattern fails
// verification for some size.
RootedCdsResult grid_rooted_cds(int n1, int n2);

enum class BaseCds { C4, K33 };

struct BaseCdsResult {
  Graph graph;
  std::vector<std::vector<int>> sets;
};

// The fixed disjoint-CDS certificates for C_4 (two) and K_3,3 (three).
BaseCdsResult base_cds(BaseCds which);

}  // namespace dst

#endif
