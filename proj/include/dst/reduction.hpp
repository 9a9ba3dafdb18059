#ifndef DST_REDUCTION_HPP
#define DST_REDUCTION_HPP

#include <optional>
#include <vector>

#include "dst/graph.hpp"
#include "dst/trees.hpp"

namespace dst {

enum class GadgetKind { H, Hprime, Hplus };

// Vertex roles of one H block: ports entry1/entry2 attach leftward, the
// apex separates them from the K4 block {a, b, exit1, exit2}.
struct HBlock {
  int entry1 = -1;
  int entry2 = -1;
  int apex = -1;
  int a = -1;  // block vertex on the T1 side
  int b = -1;  // block vertex on the T2 side
  int exit1 = -1;
  int exit2 = -1;
};

// One H' block: two length-3 port paths joined by the rung yy' and a K4
// block {c, cp, exit2, exit1} on the right.
struct HPrimeBlock {
  int entry1 = -1;
  int entry2 = -1;
  int y = -1;
  int yp = -1;
  int c = -1;   // bottom block vertex
  int cp = -1;  // top block vertex
  int exit1 = -1;
  int exit2 = -1;
};

struct PlusBlock {
  int entry1 = -1;
  int entry2 = -1;
  int x = -1;
};

/// A gadget or gadget chain with its attachment ports and per-block vertex
/// tables (the tables drive the tree-lifting patterns).
struct GadgetInstance {
  Graph graph;
  int port1 = -1;
  int port2 = -1;
  int h_count = 0;
  int hprime_count = 0;
  std::vector<HBlock> h_blocks;
  std::vector<HPrimeBlock> hprime_blocks;
  std::optional<PlusBlock> plus;
};

// Single gadgets with ports p1 = 0, p2 = 1, exact Fig-3 edge sets.
GadgetInstance build_gadget(GadgetKind kind);

// The chain H_{i,j}: i H blocks, j H' blocks, capped by H+. i, j >= 1.
// |V| = 5i + 6j + 3; ports are the two degree-one vertices.
GadgetInstance build_chain(int i, int j);

struct ReducedInstance {
  Graph graph;  // G'
  int u = -1;
  int v = -1;
  int i = 0;
  int j = 0;
  // Block tables remapped into G' ids.
  std::vector<HBlock> h_blocks;
  std::vector<HPrimeBlock> hprime_blocks;
  PlusBlock plus;
};

// G' = g with H_{i,j} attached: chain port1 identified with u, port2 with v.
ReducedInstance reduce(const Graph& g, int u, int v, int i, int j);

// Completeness direction: extends a CIST pair of g (u inner in T1, v inner
// in T2) over G' via the per-gadget patterns. Output is (i,j)-disjoint with
// overlap counts exactly (i, j).
TreeFamily lift_trees(const ReducedInstance& inst, const TreeFamily& cists);

}  // namespace dst

#endif
