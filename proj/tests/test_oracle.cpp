#include "doctest.h"

#include <algorithm>
#include <memory>

#include "dst/graph.hpp"
#include "dst/oracle.hpp"

using namespace dst;

namespace {

std::shared_ptr<const Graph> share(Graph g) {
  return std::make_shared<const Graph>(std::move(g));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("spanning tree enumeration counts") {
  CHECK(enumerate_spanning_trees(cycle_graph(4)).size() == 4);
  CHECK(enumerate_spanning_trees(complete_graph(4)).size() == 16);
  // Triangular prism.
  Graph prism = cartesian_product(cycle_graph(3), path_graph(2));
  CHECK(enumerate_spanning_trees(prism).size() == matrix_tree_count(prism));
  CHECK(matrix_tree_count(prism) == 75);
}

TEST_CASE("enumeration is deterministic, lexicographic and Kirchhoff-exact") {
  std::vector<Graph> hosts;
  hosts.push_back(cycle_graph(5));
  hosts.push_back(complete_graph(5));
  hosts.push_back(complete_bipartite(2, 3));
  hosts.push_back(grid_graph(3, 3));
  hosts.push_back(glued_cliques(7));
  for (const Graph& g : hosts) {
    auto trees = enumerate_spanning_trees(g);
    CHECK(trees.size() == matrix_tree_count(g));
    auto again = enumerate_spanning_trees(g);
    CHECK(trees == again);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    for (const auto& t : trees) CHECK(std::is_sorted(t.begin(), t.end()));
  }
}

TEST_CASE("enumeration budget") {
  SearchBudget tiny;
  tiny.max_spanning_trees = 10;
  CHECK_THROWS_AS(enumerate_spanning_trees(complete_graph(6), tiny),
                  BudgetExceeded);
}

TEST_CASE("exists_family on the classic negatives") {
  CHECK(exists_family(share(cycle_graph(4)), 2, 0, 0).verdict ==
        OracleVerdict::Refuted);
  CHECK(exists_family(share(complete_bipartite(3, 3)), 2, 0, 0).verdict ==
        OracleVerdict::Refuted);
  // G_{2,3} has no two (0,j)-disjoint spanning trees for any j.
  auto g23 = share(kriesell_graph(2, 3));
  for (int j = 0; j <= 6; ++j)
    CHECK(exists_family(g23, 2, 0, j).verdict == OracleVerdict::Refuted);
}

TEST_CASE("exists_family witnesses") {
  ExistsResult c4 = exists_family(share(cycle_graph(4)), 2, 0, 2);
  REQUIRE(c4.verdict == OracleVerdict::Witness);
  CHECK(verify_ij_disjoint(*c4.witness, 0, 2).ok);

  ExistsResult k4 = exists_family(share(complete_graph(4)), 2, 0, 0);
  REQUIRE(k4.verdict == OracleVerdict::Witness);
  CHECK(verify_ij_disjoint(*k4.witness, 0, 0).ok);
}

TEST_CASE("duplicate trees are allowed unless distinct_only") {
  auto p3 = share(path_graph(3));
  ExistsResult dup = exists_family(p3, 2, 1, 2);
  REQUIRE(dup.verdict == OracleVerdict::Witness);
  CHECK(dup.witness->tree(0).edges() == dup.witness->tree(1).edges());

  ExistsResult strict = exists_family(p3, 2, 1, 2, {}, true);
  CHECK(strict.verdict == OracleVerdict::Refuted);
}

TEST_CASE("exists_family handles the single edge host") {
  auto p2 = share(path_graph(2));
  CHECK(exists_family(p2, 3, 0, 1).verdict == OracleVerdict::Witness);
  CHECK(exists_family(p2, 2, 0, 0).verdict == OracleVerdict::Refuted);
}

TEST_CASE("joint search path finds a CIST pair in K8") {
  // K8 has too many spanning trees for the tuple scan.
  ExistsResult r = exists_family(share(complete_graph(8)), 2, 0, 0);
  REQUIRE(r.verdict == OracleVerdict::Witness);
  CHECK(verify_ij_disjoint(*r.witness, 0, 0).ok);
  CHECK(r.stats.trees == 0);  // proves the joint path ran
}

TEST_CASE("node budget reports budget-exceeded") {
  SearchBudget tiny;
  tiny.max_nodes = 3;
  CHECK(exists_family(share(complete_graph(6)), 3, 0, 2, tiny).verdict ==
        OracleVerdict::BudgetExceeded);
}

TEST_CASE("dst values on complete graphs") {
  DstResult k5 = dst_value(share(complete_graph(5)), 0, 2, 5);
  REQUIRE(k5.verdict == OracleVerdict::Witness);
  CHECK(k5.value == 3);

  DstResult k4 = dst_value(share(complete_graph(4)), 0, 0, 4);
  REQUIRE(k4.verdict == OracleVerdict::Witness);
  CHECK(k4.value == 2);

  CHECK(dst_value(share(complete_graph(4)), 1, 3, 4).verdict ==
        OracleVerdict::Unbounded);
}

TEST_CASE("dst monotonicity in (i,j)") {
  auto host = share(complete_graph(5));
  int last = 1;
  for (int step = 0; step <= 3; ++step) {
    DstResult r = dst_value(host, step, step, 6);
    if (r.verdict == OracleVerdict::Unbounded) break;
    REQUIRE(r.verdict == OracleVerdict::Witness);
    CHECK(r.value >= last);
    last = r.value;
  }
}

TEST_CASE("gamma_c") {
  CHECK(gamma_c(cycle_graph(5)) == 3);
  CHECK(gamma_c(complete_graph(5)) == 1);
  CHECK(gamma_c(path_graph(4)) == 2);
  CHECK(gamma_c(grid_graph(3, 3)) == 3);
}

TEST_CASE("connected domatic numbers") {
  CHECK(connected_domatic(cycle_graph(4)) == 2);
  CHECK(connected_domatic(complete_bipartite(3, 3)) == 3);
  CHECK(connected_domatic(glued_cliques(9)) == 1);
  CHECK(connected_domatic(complete_graph(5)) == 5);
  CHECK(connected_domatic(grid_graph(3, 3)) == 1);
  CHECK(has_two_disjoint_cds(cycle_graph(4)));
  CHECK(!has_two_disjoint_cds(grid_graph(3, 3)));
}

TEST_CASE("min imbalance") {
  ImbalanceResult star_cds = min_imbalance(pn_star(6), ImbalanceMode::CdsPair);
  REQUIRE(star_cds.exists);
  CHECK(star_cds.value == 1);  // n - 5

  ImbalanceResult plus_cist =
      min_imbalance(pn_plus(6), ImbalanceMode::CistPair);
  REQUIRE(plus_cist.exists);
  CHECK(plus_cist.value == 4);  // n - 2

  ImbalanceResult star_cist =
      min_imbalance(pn_star(6), ImbalanceMode::CistPair);
  CHECK(!star_cist.exists);
}

TEST_CASE("witnesses respect the edge lower bound") {
  std::vector<std::shared_ptr<const Graph>> hosts;
  hosts.push_back(share(complete_graph(5)));
  hosts.push_back(share(cycle_graph(4)));
  hosts.push_back(share(complete_bipartite(3, 3)));
  for (const auto& host : hosts) {
    for (int j = 0; j <= 4; ++j) {
      ExistsResult r = exists_family(host, 2, 0, j);
      if (r.verdict != OracleVerdict::Witness) continue;
      int ja = static_cast<int>(r.witness->overlap_edges().size());
      CHECK(host->edge_count() >= 2 * (host->vertex_count() - 1) - ja);
    }
  }
}

}  // TEST_SUITE
