#ifndef DST_ORACLE_HPP
#define DST_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>

#include "dst/graph.hpp"
#include "dst/trees.hpp"

namespace dst {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps for the exhaustive searches. A search that hits a cap reports
/// budget-exceeded; it never silently truncates.
struct SearchBudget {
  std::uint64_t max_spanning_trees = 1'000'000;
  std::uint64_t max_nodes = 100'000'000;
  double time_cap_seconds = 60.0;
};

struct SearchStats {
  std::uint64_t trees = 0;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Every spanning tree exactly once, in lexicographic order of the sorted
// canonical edge list. Throws BudgetExceeded past the tree cap.
std::vector<std::vector<Edge>> enumerate_spanning_trees(
    const Graph& g, const SearchBudget& budget = {});

// Streaming variant; the callback returns false to stop early.
void for_each_spanning_tree(const Graph& g,
                            const std::function<bool(const std::vector<Edge>&)>& fn,
                            const SearchBudget& budget = {});

// Kirchhoff matrix-tree count via fraction-free elimination. n <= 17.
std::uint64_t matrix_tree_count(const Graph& g);

enum class OracleVerdict { Witness, Refuted, Unbounded, BudgetExceeded };

struct ExistsResult {
  OracleVerdict verdict = OracleVerdict::Refuted;
  std::optional<TreeFamily> witness;
  SearchStats stats;
};

// Exhaustive search for k (i,j)-disjoint spanning trees. Prunes by the
// edge lower bound first. Duplicate trees are allowed unless distinct_only.
ExistsResult exists_family(std::shared_ptr<const Graph> host, int k, int i,
                           int j, const SearchBudget& budget = {},
                           bool distinct_only = false);

struct DstResult {
  OracleVerdict verdict = OracleVerdict::Refuted;
  int value = 0;  // meaningful when verdict == Witness
  SearchStats stats;
};

// Largest k <= k_max admitting a witness; detects the unboundedness
// condition i >= gamma_c and j >= n-1 up front.
DstResult dst_value(std::shared_ptr<const Graph> host, int i, int j,
                    int k_max, const SearchBudget& budget = {});

// Minimum size of a connected dominating set. Exhaustive; n <= 24.
int gamma_c(const Graph& g, const SearchBudget& budget = {});

// Exact connected domatic number by exhaustive disjoint-CDS packing,
// pruned by d_c <= floor(n / gamma_c).
int connected_domatic(const Graph& g, const SearchBudget& budget = {});

// Existence of two disjoint CDS (early-exit fast path of the above).
bool has_two_disjoint_cds(const Graph& g);

enum class ImbalanceMode { CdsPair, CistPair };

struct ImbalanceResult {
  bool exists = false;
  int value = 0;
  SearchStats stats;
};

// Minimum ||A|-|B|| over all disjoint CDS pairs, or over all CIST pairs by
// inner-set sizes. exists=false when no valid pair exists.
ImbalanceResult min_imbalance(const Graph& g, ImbalanceMode mode,
                              const SearchBudget& budget = {});

}  // namespace dst

#endif
