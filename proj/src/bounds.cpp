#include "dst/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dst {

long edge_lower_bound(int n, int k, int i, int j) {
  if (k < 1 || n < 2)
    throw std::invalid_argument("edge_lower_bound: k >= 1 and n >= 2 required");
  if (i < 0 || j < 0)
    throw std::invalid_argument("edge_lower_bound: i, j >= 0 required");
  long general = static_cast<long>(k) * (n - 1) - static_cast<long>(j) * (k - 1);
  if (i == 0 && n >= 3)
    general = std::max(general, static_cast<long>(k) * (n - 1) - j);
  return general;
}

long hartnell_rall_bound(int n, int k) {
  if (k < 1) throw std::invalid_argument("hartnell_rall_bound: k >= 1 required");
  long num = static_cast<long>(n) * (k + 1);
  return (num + 1) / 2 - k;  // ceil(n(k+1)/2) - k
}

bool dirac_holds(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("dirac_holds: connected graph required");
  return 2 * g.min_degree() >= g.vertex_count();
}

bool ore_holds(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("ore_holds: connected graph required");
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (g.degree(u) + g.degree(v) < n) return false;
    }
  }
  // Empty minimum (complete graph): the condition holds vacuously.
  return true;
}

KriesellCertification certify_kriesell_negative(int k, int i, int lpar,
                                                const SearchBudget& budget) {
  if (lpar < 2 * k + i - 1)
    throw std::invalid_argument(
        "certify_kriesell_negative: lpar >= 2k+i-1 required");
  auto host = std::make_shared<const Graph>(kriesell_graph(k, lpar));
  KriesellCertification cert;
  cert.max_j = host->edge_count();
  cert.confirmed = true;
  for (int j = 0; j <= cert.max_j; ++j) {
    ExistsResult r = exists_family(host, 2, i, j, budget);
    cert.stats.nodes += r.stats.nodes;
    cert.stats.trees += r.stats.trees;
    cert.stats.seconds += r.stats.seconds;
    if (r.verdict == OracleVerdict::BudgetExceeded)
      throw BudgetExceeded("certify_kriesell_negative: search budget exceeded");
    if (r.verdict == OracleVerdict::Witness) {
      cert.confirmed = false;
      cert.witness_js.push_back(j);
    }
  }
  return cert;
}

}  // namespace dst
