#include "doctest.h"

#include "dst/constructions.hpp"
#include "dst/graph.hpp"
#include "dst/io.hpp"

using namespace dst;

TEST_SUITE("io") {

TEST_CASE("edge list round trip is identity and hash stable") {
  std::vector<Graph> all;
  all.push_back(complete_graph(5));
  all.push_back(cylinder_graph(3, 4));
  all.push_back(glued_cliques(7));
  all.push_back(kriesell_graph(2, 4));
  all.push_back(Graph(1));
  for (const Graph& g : all) {
    std::string text = write_edge_list(g);
    Graph back = read_edge_list(text);
    CHECK(back == g);
    CHECK(write_edge_list(back) == text);
    CHECK(graph_hash(back) == graph_hash(g));
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(read_edge_list("3 1\n0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3 1\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3 1\n0 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("2 1\n0 1\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list(""), std::invalid_argument);
}

TEST_CASE("dot export is deterministic and styled per tree") {
  TreeFamily fam = complete_0l(5, 2);
  std::string dot = to_dot(fam);
  CHECK(dot == to_dot(fam));
  CHECK(dot.find("style=\"solid\"") != std::string::npos);
  CHECK(dot.find("style=\"dashed\"") != std::string::npos);
  std::string plain = to_dot(fam.host());
  CHECK(plain.find("0 -- 1") != std::string::npos);
}

TEST_CASE("family certificate round trip") {
  TreeFamily fam = complete_0l(6, 0);
  std::string text = family_to_json(fam);
  CHECK(text == family_to_json(fam));
  TreeFamily back = family_from_json(fam.host_ptr(), text);
  CHECK(back.size() == fam.size());
  for (int t = 0; t < fam.size(); ++t)
    CHECK(back.tree(t).edges() == fam.tree(t).edges());

  auto wrong = std::make_shared<const Graph>(complete_graph(7));
  CHECK_THROWS_AS(family_from_json(wrong, text), CertificateError);
}

TEST_CASE("partition certificate round trip") {
  VertexPartition p;
  p.blocks = {{0, 1, 2}, {3, 4}, {5}};
  p.rooted = true;
  std::string text = partition_to_json(p, 1);
  PartitionCert cert = partition_from_json(text);
  CHECK(cert.partition.blocks == p.blocks);
  CHECK(cert.partition.rooted);
  CHECK(cert.l == 1);
}

}  // TEST_SUITE
