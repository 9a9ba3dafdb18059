#include "doctest.h"

#include <memory>

#include "dst/bounds.hpp"
#include "dst/constructions.hpp"
#include "dst/graph.hpp"
#include "dst/oracle.hpp"
#include "catalog.hpp"

using namespace dst;

TEST_SUITE("constructions") {

TEST_CASE("complete_0l figure cases") {
  TreeFamily k6 = complete_0l(6, 0);
  CHECK(k6.size() == 3);
  CHECK(verify_ij_disjoint(k6, 0, 0).ok);

  TreeFamily k5 = complete_0l(5, 2);
  CHECK(k5.size() == 3);
  CHECK(verify_ij_disjoint(k5, 0, 2).ok);

  TreeFamily k6l5 = complete_0l(6, 5);
  CHECK(k6l5.size() == 4);
  CHECK(verify_ij_disjoint(k6l5, 0, 5).ok);
  CHECK(k6l5.overlap_edges().size() == 5);
  // 4 trees * 5 edges - 5 shared meets |E(K6)| exactly.
  CHECK(4 * 5 - 5 == complete_graph(6).edge_count());
}

TEST_CASE("complete_0l across the desk range") {
  for (int n = 3; n <= 9; ++n) {
    for (int l = 0; l <= 2 * (n - 1); ++l) {
      TreeFamily fam = complete_0l(n, l);
      CHECK(fam.size() == dst_0l_complete(n, l));
      CHECK(verify_ij_disjoint(fam, 0, l).ok);
    }
  }
}

TEST_CASE("complete_1l") {
  TreeFamily k63 = complete_1l(6, 3);
  CHECK(k63.size() == 4);
  CHECK(verify_ij_disjoint(k63, 1, 3).ok);

  TreeFamily k52 = complete_1l(5, 2);
  CHECK(k52.size() == 3);
  CHECK(k52.overlap_inner() == std::vector<int>{4});  // the hub
  CHECK(k52.overlap_edges().size() == 2);

  CHECK_THROWS_AS(complete_1l(6, 5), UnboundedFamily);
  CHECK_THROWS_AS(complete_1l(6, 0), std::invalid_argument);

  for (int n = 4; n <= 9; ++n) {
    for (int l = 1; l < n - 1; ++l) {
      TreeFamily fam = complete_1l(n, l);
      CHECK(fam.size() == dst_1l_complete(n, l));
      CHECK(verify_ij_disjoint(fam, 1, l).ok);
    }
  }
}

TEST_CASE("square_trees on trees gives (0,1)") {
  TreeFamily p5 = square_trees(path_graph(5));
  CHECK(p5.host() == square(path_graph(5)));
  CHECK(verify_ij_disjoint(p5, 0, 1).ok);

  Graph spider(7);
  spider.add_edge(0, 1);
  spider.add_edge(0, 2);
  spider.add_edge(0, 3);
  spider.add_edge(1, 4);
  spider.add_edge(2, 5);
  spider.add_edge(3, 6);
  TreeFamily sp = square_trees(spider);
  CHECK(verify_ij_disjoint(sp, 0, 1).ok);
}

TEST_CASE("square_trees on cycles and cycle-bearing graphs gives (0,0)") {
  for (int n = 4; n <= 8; ++n) {
    TreeFamily fam = square_trees(cycle_graph(n));
    CHECK(verify_ij_disjoint(fam, 0, 0).ok);
  }
  {
    Graph g(5);
    for (const Edge& e : cycle_graph(4).edges()) g.add_edge(e.first, e.second);
    g.add_edge(0, 4);
    TreeFamily fam = square_trees(g);
    CHECK(verify_ij_disjoint(fam, 0, 0).ok);
  }
  {
    // Odd cycle with a pendant vertex exercises the odd case analysis.
    Graph g(6);
    for (const Edge& e : cycle_graph(5).edges()) g.add_edge(e.first, e.second);
    g.add_edge(2, 5);
    TreeFamily fam = square_trees(g);
    CHECK(verify_ij_disjoint(fam, 0, 0).ok);
  }
}

TEST_CASE("square_trees sweep over small connected graphs") {
  // K3 is the one non-tree whose square (itself) has no CIST pair; the
  // construction returns the (0,1) certificate there.
  TreeFamily k3 = square_trees(cycle_graph(3));
  CHECK(verify_ij_disjoint(k3, 0, 1).ok);

  for (int n = 4; n <= 6; ++n) {
    test::for_each_connected_graph_up_to_iso(n, [&](const Graph& g) {
      TreeFamily fam = square_trees(g);
      bool is_tree = g.edge_count() == g.vertex_count() - 1;
      CHECK(verify_ij_disjoint(fam, 0, is_tree ? 1 : 0).ok);
    });
  }
  // Strided sample of the 7-vertex catalog (the full isomorphism-reduced
  // sweep runs at <= 6).
  test::for_each_connected_mask(7, 499, [&](const Graph& g) {
    TreeFamily fam = square_trees(g);
    bool is_tree = g.edge_count() == g.vertex_count() - 1;
    CHECK(verify_ij_disjoint(fam, 0, is_tree ? 1 : 0).ok);
  });
}

TEST_CASE("interval_cds") {
  {
    Graph k5 = complete_graph(5);
    CliquePath cp{{{0, 1, 2, 3, 4}}};
    auto ds = interval_cds(k5, cp, 5);
    CHECK(ds.size() == 5);
    for (const auto& d : ds) CHECK(verify_cds(k5, d).ok);
  }
  {
    // Two bags {0,1,2,3} and {2,3,4,5}.
    Graph g(6);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
    int bag2[] = {2, 3, 4, 5};
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) g.add_edge(bag2[a], bag2[b]);
    CliquePath cp{{{0, 1, 2, 3}, {2, 3, 4, 5}}};
    CHECK(validate_clique_path(g, cp).ok);
    auto ds = interval_cds(g, cp, 2);
    CHECK(ds == std::vector<std::vector<int>>{{2}, {3}});
    CHECK(verify_rooted_cds(g, ds, 0).ok);
  }
  {
    // Three bags with size-2 junctions.
    Graph g(7);
    std::vector<std::vector<int>> bags = {{0, 1, 2}, {1, 2, 3, 4}, {3, 4, 5, 6}};
    for (const auto& bag : bags)
      for (std::size_t a = 0; a < bag.size(); ++a)
        for (std::size_t b = a + 1; b < bag.size(); ++b)
          g.add_edge(bag[a], bag[b]);
    CliquePath cp{bags};
    CHECK(validate_clique_path(g, cp).ok);
    auto ds = interval_cds(g, cp, 2);
    CHECK(ds.size() == 2);
    for (const auto& d : ds) CHECK(verify_cds(g, d).ok);
    CHECK(verify_rooted_cds(g, ds, 0).ok);

    CHECK_THROWS_AS(interval_cds(g, cp, 3), std::invalid_argument);
  }
}

TEST_CASE("validate_clique_path rejections") {
  Graph p3 = path_graph(3);
  CHECK(!validate_clique_path(p3, {{{0, 1, 2}}}).ok);  // not a clique
  CHECK(!validate_clique_path(p3, {{{0, 1}}}).ok);     // edge 1-2 uncovered
  CHECK(validate_clique_path(p3, {{{0, 1}, {1, 2}}}).ok);
  // Vertex 0 reappears after leaving: property ii) violated.
  Graph k3 = cycle_graph(3);
  CHECK(!validate_clique_path(k3, {{{0, 1}, {1, 2}, {0, 2}}}).ok);
}

TEST_CASE("cylinder_trees named cases") {
  TreeFamily c56 = cylinder_trees(5, 6);
  CHECK(verify_ij_disjoint(c56, 0, 3).ok);
  CHECK(c56.overlap_edges().size() == 3);
  CHECK(!verify_ij_disjoint(c56, 0, 2).ok);
  // (0,2) is also refuted by the edge bound: 2*29 - 2 = 56 > 55.
  CHECK(edge_lower_bound(30, 2, 0, 2) == 56);
  CHECK(c56.host().edge_count() == 55);

  TreeFamily c33 = cylinder_trees(3, 3);
  CHECK(verify_ij_disjoint(c33, 0, 1).ok);

  TreeFamily c47 = cylinder_trees(4, 7);
  CHECK(verify_ij_disjoint(c47, 0, 2).ok);
  CHECK(edge_lower_bound(28, 2, 0, 1) == 53);
  CHECK(c47.host().edge_count() == 52);
}

TEST_CASE("cylinder_trees sweep") {
  for (int n1 = 3; n1 <= 6; ++n1)
    for (int n2 = 3; n2 <= 6; ++n2)
      CHECK(verify_ij_disjoint(cylinder_trees(n1, n2), 0, n1 - 2).ok);
}

TEST_CASE("grid_rooted_cds base case") {
  RootedCdsResult r = grid_rooted_cds(3, 5);
  Graph g = grid_graph(3, 5);
  CHECK(r.d1 == std::vector<int>{5, 6, 7, 8, 9});  // the middle row
  CHECK(r.root == 5);
  CHECK(verify_rooted_cds(g, {r.d1, r.d2}, 1).ok);
  CHECK(r.repair_log.empty());
}

TEST_CASE("grid_rooted_cds general case and transpose") {
  for (auto [n1, n2] : {std::pair{4, 4}, {4, 9}, {5, 7}, {6, 10}, {7, 13}}) {
    RootedCdsResult r = grid_rooted_cds(n1, n2);
    Graph g = grid_graph(n1, n2);
    CHECK(verify_rooted_cds(g, {r.d1, r.d2}, 1).ok);
    CHECK(r.repair_log.empty());
  }
  // Transposed orientation verifies against the transposed grid.
  RootedCdsResult r = grid_rooted_cds(9, 4);
  Graph g = grid_graph(9, 4);
  CHECK(verify_rooted_cds(g, {r.d1, r.d2}, 1).ok);
}

TEST_CASE("grid 7x13 induced trees reproduce the minimized overlap") {
  RootedCdsResult r = grid_rooted_cds(7, 13);
  auto host = std::make_shared<const Graph>(grid_graph(7, 13));
  TreeFamily fam = trees_from_rooted_cds(host, {r.d1, r.d2});
  CHECK(fam.overlap_inner().size() == 1);
  CHECK(fam.overlap_edges().size() == 18);
}

TEST_CASE("base_cds certificates") {
  BaseCdsResult c4 = base_cds(BaseCds::C4);
  CHECK(c4.sets.size() == 2);
  CHECK(verify_rooted_cds(c4.graph, c4.sets, 0).ok);

  BaseCdsResult k33 = base_cds(BaseCds::K33);
  CHECK(k33.sets.size() == 3);
  CHECK(verify_rooted_cds(k33.graph, k33.sets, 0).ok);
}

TEST_CASE("construction domain errors") {
  CHECK_THROWS_AS(complete_0l(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(cylinder_trees(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(grid_rooted_cds(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(square_trees(path_graph(2)), std::invalid_argument);
  CHECK_THROWS_AS(square_trees(Graph(4)), std::invalid_argument);
}

}  // TEST_SUITE
