#ifndef DST_IO_HPP
#define DST_IO_HPP

#include <iosfwd>
#include <string>

#include "dst/graph.hpp"
#include "dst/trees.hpp"

namespace dst {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. Writer emits sorted canonical keys; parser rejects
// duplicate, reversed and out-of-range edges.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

// FNV-1a 64 over the canonical edge-list text, as 16 hex digits.
std::string graph_hash(const Graph& g);

// DOT export with deterministic edge order. With a family, each tree's
// edges are drawn in the tree's style (palette cycles at 6).
std::string to_dot(const Graph& g);
std::string to_dot(const TreeFamily& f);

// JSON certificates. Loaders check the embedded host hash and validate
// through the usual constructors.
std::string family_to_json(const TreeFamily& f);
TreeFamily family_from_json(std::shared_ptr<const Graph> host,
                            const std::string& text);
std::string partition_to_json(const VertexPartition& p, int l);
struct PartitionCert {
  VertexPartition partition;
  int l = 0;
};
PartitionCert partition_from_json(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace dst

#endif
