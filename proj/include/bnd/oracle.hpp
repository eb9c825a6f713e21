#ifndef BND_ORACLE_HPP
#define BND_ORACLE_HPP

#include <functional>
#include <optional>

#include "bnd/graph.hpp"

namespace bnd {
namespace oracle {

struct Caps {
  int max_nodes = 12;
  int max_edges = 20;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Calls `visit` once for every inclusion-minimal tree spanning the
/// terminals (every leaf is a terminal). With terminals = all nodes this
/// enumerates exactly the spanning trees. Throws CapExceeded above caps.
void enumerate_trees(const BiGraph& g, const TerminalSet& terminals,
                     const std::function<void(const TreeSolution&)>& visit,
                     Caps caps = {});

struct ParetoPoint {
  Cost diameter_d = 0;
  Cost total_c = 0;
  std::set<EdgeId> witness;
};

/// Nondominated (diameter_d, total_c) pairs over all enumerated trees,
/// sorted by increasing diameter. Witness ties break on the smallest
/// edge-id sequence.
struct ParetoFront {
  std::vector<ParetoPoint> points;
};

ParetoFront pareto_front(const BiGraph& g, const TerminalSet& terminals, Caps caps = {});

enum class BudgetOn { Diameter, TotalCost };

/// Minimum of the other criterion among front points within the budget,
/// or nullopt when no point qualifies.
std::optional<Cost> opt_given_budget(const ParetoFront& front, BudgetOn budget_on,
                                     Cost value);

/// Number of spanning trees by the matrix-tree determinant; independent of
/// the enumerator. Exact for desk-scale counts.
std::int64_t spanning_tree_count_determinant(const BiGraph& g);

}  // namespace oracle
}  // namespace bnd

#endif
