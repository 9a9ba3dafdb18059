#ifndef DST_BOUNDS_HPP
#define DST_BOUNDS_HPP

#include <vector>

#include "dst/graph.hpp"
#include "dst/oracle.hpp"

namespace dst {

// Necessary edge count for k (i,j)-disjoint spanning trees on n vertices:
// k(n-1) - j(k-1), strengthened to k(n-1) - j when i = 0 and n >= 3.
long edge_lower_bound(int n, int k, int i, int j);

// Necessary edge count for d_c(G) >= k: ceil(n(k+1)/2) - k.
long hartnell_rall_bound(int n, int k);

// delta(G) >= n/2.
bool dirac_holds(const Graph& g);
// min{d(u)+d(v) : uv not an edge} >= n; vacuously true for complete graphs.
bool ore_holds(const Graph& g);

struct KriesellCertification {
  bool confirmed = false;        // refuted for every j checked
  std::vector<int> witness_js;   // theory-contradiction if nonempty
  int max_j = 0;
  SearchStats stats;
};

// Checks that G_{k,lpar} admits no two (i,j)-disjoint spanning trees for
// any j up to |E|. Requires lpar >= 2k+i-1.
KriesellCertification certify_kriesell_negative(int k, int i, int lpar,
                                                const SearchBudget& budget = {});

}  // namespace dst

#endif
