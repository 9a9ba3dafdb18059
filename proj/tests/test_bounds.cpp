#include "doctest.h"

#include "dst/bounds.hpp"
#include "dst/graph.hpp"
#include "dst/oracle.hpp"
#include "catalog.hpp"

using namespace dst;

TEST_SUITE("bounds") {

TEST_CASE("edge lower bound values") {
  // G(2,n) meets the bound with equality for k=2, j=n.
  for (int n = 3; n <= 8; ++n) {
    Graph g2n = cartesian_product(path_graph(2), path_graph(n));
    CHECK(edge_lower_bound(2 * n, 2, 1, n) == 3 * n - 2);
    CHECK(g2n.edge_count() == 3 * n - 2);
  }
  CHECK(edge_lower_bound(6, 3, 0, 0) == 15);
  CHECK(edge_lower_bound(30, 2, 0, 2) == 56);
  // The i=0 strengthening kicks in for k >= 3.
  CHECK(edge_lower_bound(6, 3, 0, 4) == std::max(3L * 5 - 4 * 2, 3L * 5 - 4));
  CHECK(edge_lower_bound(6, 3, 1, 4) == 3 * 5 - 4 * 2);
  CHECK_THROWS_AS(edge_lower_bound(1, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("hartnell-rall bound") {
  CHECK(hartnell_rall_bound(6, 3) == 9);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(hartnell_rall_bound(4, 2) == 4);
  CHECK(cycle_graph(4).edge_count() == 4);
  CHECK(hartnell_rall_bound(5, 1) == 4);
  CHECK(path_graph(5).edge_count() == 4);
  // Sharpness: d_c(K_{k,k}) = k for k >= 2. K_{1,1} is the P_2 corner with
  // two singleton CDS.
  for (int k = 2; k <= 3; ++k) {
    Graph kk = complete_bipartite(k, k);
    CHECK(connected_domatic(kk) == k);
    CHECK(kk.edge_count() == hartnell_rall_bound(2 * k, k));
  }
  CHECK(connected_domatic(complete_bipartite(1, 1)) == 2);
}

TEST_CASE("dirac and ore predicates") {
  CHECK(dirac_holds(complete_bipartite(3, 3)));
  CHECK(dirac_holds(cycle_graph(4)));
  CHECK(!dirac_holds(glued_cliques(9)));
  CHECK(!ore_holds(glued_cliques(9)));
  CHECK(ore_holds(complete_graph(4)));  // vacuous minimum
  CHECK(dirac_holds(path_graph(2)));
  CHECK(!dirac_holds(path_graph(4)));
}

TEST_CASE("dirac implies ore on a small catalog") {
  for (int n = 3; n <= 5; ++n) {
    test::for_each_connected_graph_up_to_iso(n, [&](const Graph& g) {
      if (dirac_holds(g)) CHECK(ore_holds(g));
    });
  }
}

namespace {

// Mask-level Dirac-or-Ore filter; the predicates force connectivity.
bool dirac_or_ore_mask(int n, std::uint32_t mask) {
  int deg[8] = {0};
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask >> test::edge_bit(u, v) & 1) {
        ++deg[u];
        ++deg[v];
      }
  int mind = n;
  for (int v = 0; v < n; ++v) mind = std::min(mind, deg[v]);
  if (2 * mind >= n) return true;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!(mask >> test::edge_bit(u, v) & 1) && deg[u] + deg[v] < n)
        return false;
  return true;
}

}  // namespace

TEST_CASE("dirac/ore graphs up to 7 vertices have two disjoint CDS") {
  for (int n = 2; n <= 7; ++n) {
    int bits = n * (n - 1) / 2;
    std::uint64_t failures = 0;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      if (!dirac_or_ore_mask(n, mask)) continue;
      if (!has_two_disjoint_cds(test::graph_of_mask(n, mask))) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("dirac/ore graphs on 8 vertices have two disjoint CDS") {
  std::uint64_t failures = 0, candidates = 0;
  for (std::uint32_t mask = 0; mask < (1u << 28); ++mask) {
    if (!dirac_or_ore_mask(8, mask)) continue;
    ++candidates;
    if (!has_two_disjoint_cds(test::graph_of_mask(8, mask))) ++failures;
  }
  CHECK(failures == 0);
  CHECK(candidates > 0);
}

TEST_CASE("kriesell negative certification") {
  KriesellCertification c = certify_kriesell_negative(2, 0, 3);
  CHECK(c.confirmed);
  CHECK(c.max_j == 6);
  CHECK(c.witness_js.empty());

  KriesellCertification c14 = certify_kriesell_negative(2, 1, 4);
  CHECK(c14.confirmed);
  CHECK(c14.max_j == kriesell_graph(2, 4).edge_count());

  CHECK_THROWS_AS(certify_kriesell_negative(2, 0, 2), std::invalid_argument);
}

TEST_CASE("below the theorem threshold the oracle reports the truth") {
  // G_{2,2} is P_3: two spanning trees exist only as duplicates, so any
  // (i>=1, j>=2) succeeds and (0,j) fails.
  auto host = std::make_shared<const Graph>(kriesell_graph(2, 2));
  CHECK(exists_family(host, 2, 1, 2).verdict == OracleVerdict::Witness);
  CHECK(exists_family(host, 2, 0, 2).verdict == OracleVerdict::Refuted);
}

}  // TEST_SUITE
