#include "dst/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace dst {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void add_k4(Graph& g, int a, int b, int c, int d) {
  int vs[4] = {a, b, c, d};
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) g.add_edge(vs[x], vs[y]);
}

// Appends one H block behind the attachment pair (cur1, cur2); returns the
// block table and advances `next`.
HBlock append_h(Graph& g, int cur1, int cur2, int& next) {
  HBlock blk;
  blk.entry1 = cur1;
  blk.entry2 = cur2;
  blk.apex = next++;
  blk.a = next++;
  blk.b = next++;
  blk.exit1 = next++;
  blk.exit2 = next++;
  g.add_edge(cur1, blk.apex);
  g.add_edge(cur2, blk.apex);
  g.add_edge(blk.apex, blk.a);
  g.add_edge(blk.apex, blk.b);
  add_k4(g, blk.a, blk.b, blk.exit1, blk.exit2);
  return blk;
}

HPrimeBlock append_hprime(Graph& g, int cur1, int cur2, int& next) {
  HPrimeBlock blk;
  blk.entry1 = cur1;
  blk.entry2 = cur2;
  blk.y = next++;
  blk.yp = next++;
  blk.c = next++;
  blk.cp = next++;
  blk.exit2 = next++;
  blk.exit1 = next++;
  g.add_edge(cur2, blk.y);
  g.add_edge(cur1, blk.yp);
  g.add_edge(blk.y, blk.yp);
  g.add_edge(blk.y, blk.c);
  g.add_edge(blk.yp, blk.cp);
  add_k4(g, blk.c, blk.cp, blk.exit2, blk.exit1);
  return blk;
}

PlusBlock append_plus(Graph& g, int cur1, int cur2, int& next) {
  PlusBlock blk;
  blk.entry1 = cur1;
  blk.entry2 = cur2;
  blk.x = next++;
  g.add_edge(cur1, blk.x);
  g.add_edge(cur2, blk.x);
  return blk;
}

}  // namespace

GadgetInstance build_gadget(GadgetKind kind) {
  GadgetInstance inst;
  inst.port1 = 0;
  inst.port2 = 1;
  int next = 2;
  switch (kind) {
    case GadgetKind::H: {
      inst.graph = Graph(7);
      inst.h_blocks.push_back(append_h(inst.graph, 0, 1, next));
      inst.h_count = 1;
      break;
    }
    case GadgetKind::Hprime: {
      inst.graph = Graph(8);
      inst.hprime_blocks.push_back(append_hprime(inst.graph, 0, 1, next));
      inst.hprime_count = 1;
      break;
    }
    case GadgetKind::Hplus: {
      inst.graph = Graph(3);
      inst.plus = append_plus(inst.graph, 0, 1, next);
      break;
    }
  }
  return inst;
}

GadgetInstance build_chain(int i, int j) {
  require(i >= 1 && j >= 1, "build_chain: i >= 1 and j >= 1 required");
  GadgetInstance inst;
  inst.graph = Graph(5 * i + 6 * j + 3);
  inst.port1 = 0;
  inst.port2 = 1;
  inst.h_count = i;
  inst.hprime_count = j;
  int next = 2;
  int cur1 = 0, cur2 = 1;
  for (int b = 0; b < i; ++b) {
    HBlock blk = append_h(inst.graph, cur1, cur2, next);
    cur1 = blk.exit1;
    cur2 = blk.exit2;
    inst.h_blocks.push_back(blk);
  }
  for (int b = 0; b < j; ++b) {
    HPrimeBlock blk = append_hprime(inst.graph, cur1, cur2, next);
    cur1 = blk.exit1;
    cur2 = blk.exit2;
    inst.hprime_blocks.push_back(blk);
  }
  inst.plus = append_plus(inst.graph, cur1, cur2, next);
  require(next == inst.graph.vertex_count(), "build_chain: id accounting broke");
  return inst;
}

ReducedInstance reduce(const Graph& g, int u, int v, int i, int j) {
  g.check_vertex(u);
  g.check_vertex(v);
  require(u != v, "reduce: u and v must differ");
  require(i >= 1 && j >= 1, "reduce: i >= 1 and j >= 1 required");

  GadgetInstance chain = build_chain(i, j);
  int ng = g.vertex_count();
  auto remap = [&](int x) {
    if (x == 0) return u;
    if (x == 1) return v;
    return ng + (x - 2);
  };

  ReducedInstance inst;
  inst.u = u;
  inst.v = v;
  inst.i = i;
  inst.j = j;
  inst.graph = Graph(ng + chain.graph.vertex_count() - 2);
  for (const Edge& e : g.edges()) inst.graph.add_edge(e.first, e.second);
  for (const Edge& e : chain.graph.edges())
    inst.graph.add_edge(remap(e.first), remap(e.second));

  auto remap_h = [&](HBlock b) {
    b.entry1 = remap(b.entry1);
    b.entry2 = remap(b.entry2);
    b.apex = remap(b.apex);
    b.a = remap(b.a);
    b.b = remap(b.b);
    b.exit1 = remap(b.exit1);
    b.exit2 = remap(b.exit2);
    return b;
  };
  auto remap_hp = [&](HPrimeBlock b) {
    b.entry1 = remap(b.entry1);
    b.entry2 = remap(b.entry2);
    b.y = remap(b.y);
    b.yp = remap(b.yp);
    b.c = remap(b.c);
    b.cp = remap(b.cp);
    b.exit1 = remap(b.exit1);
    b.exit2 = remap(b.exit2);
    return b;
  };
  for (const HBlock& b : chain.h_blocks) inst.h_blocks.push_back(remap_h(b));
  for (const HPrimeBlock& b : chain.hprime_blocks)
    inst.hprime_blocks.push_back(remap_hp(b));
  inst.plus.entry1 = remap(chain.plus->entry1);
  inst.plus.entry2 = remap(chain.plus->entry2);
  inst.plus.x = remap(chain.plus->x);
  return inst;
}

TreeFamily lift_trees(const ReducedInstance& inst, const TreeFamily& cists) {
  if (cists.size() != 2)
    throw CertificateError("lift_trees: exactly two trees required");
  Verdict cist_check = verify_ij_disjoint(cists, 0, 0);
  if (!cist_check.ok)
    throw CertificateError(
        "lift_trees: input trees are not completely independent: " +
        cist_check.reason);
  if (!cists.tree(0).is_inner(inst.u))
    throw CertificateError("lift_trees: u must be inner in the first tree");
  if (!cists.tree(1).is_inner(inst.v))
    throw CertificateError("lift_trees: v must be inner in the second tree");
  int ng = cists.host().vertex_count();
  if (ng + 5 * inst.i + 6 * inst.j + 1 != inst.graph.vertex_count())
    throw CertificateError("lift_trees: instance/tree size mismatch");

  std::vector<Edge> t1 = cists.tree(0).edges();
  std::vector<Edge> t2 = cists.tree(1).edges();
  for (const HBlock& b : inst.h_blocks) {
    t1.push_back(edge_key(b.entry1, b.apex));
    t1.push_back(edge_key(b.apex, b.a));
    t1.push_back(edge_key(b.a, b.exit1));
    t1.push_back(edge_key(b.b, b.exit1));
    t1.push_back(edge_key(b.a, b.exit2));
    t2.push_back(edge_key(b.entry2, b.apex));
    t2.push_back(edge_key(b.apex, b.b));
    t2.push_back(edge_key(b.b, b.exit2));
    t2.push_back(edge_key(b.a, b.b));
    t2.push_back(edge_key(b.exit1, b.exit2));
  }
  for (const HPrimeBlock& b : inst.hprime_blocks) {
    t1.push_back(edge_key(b.entry1, b.yp));
    t1.push_back(edge_key(b.yp, b.cp));
    t1.push_back(edge_key(b.cp, b.exit1));
    t1.push_back(edge_key(b.y, b.yp));  // the shared rung
    t1.push_back(edge_key(b.c, b.exit1));
    t1.push_back(edge_key(b.cp, b.exit2));
    t2.push_back(edge_key(b.entry2, b.y));
    t2.push_back(edge_key(b.y, b.c));
    t2.push_back(edge_key(b.c, b.exit2));
    t2.push_back(edge_key(b.y, b.yp));
    t2.push_back(edge_key(b.c, b.cp));
    t2.push_back(edge_key(b.exit1, b.exit2));
  }
  t1.push_back(edge_key(inst.plus.entry1, inst.plus.x));
  t2.push_back(edge_key(inst.plus.entry2, inst.plus.x));

  auto host = std::make_shared<const Graph>(inst.graph);
  return TreeFamily(host, {std::move(t1), std::move(t2)});
}

}  // namespace dst
