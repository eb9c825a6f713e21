#ifndef BND_GRAPH_HPP
#define BND_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnd {

using Cost = std::int64_t;
using NodeId = int;
using EdgeId = int;

/// Adds two nonnegative costs, throwing instead of wrapping around.
Cost checked_add(Cost a, Cost b);

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Cost c = 0;  // construction cost
  Cost d = 0;  // delay cost
  EdgeId id = 0;

  NodeId other(NodeId x) const { return x == u ? v : u; }
};

/// Undirected multigraph with two nonnegative integer edge costs.
/// Parallel edges are allowed and distinguished by edge id; self-loops are not.
/// Immutable after construction.
struct BiGraph {
  int node_count = 0;
  std::vector<Edge> edges;

  BiGraph() = default;
  BiGraph(int n, std::vector<Edge> es) : node_count(n), edges(std::move(es)) {}

  const Edge& edge(EdgeId id) const;
};

struct TerminalSet {
  std::set<NodeId> terminals;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural check: self-loops, negative costs, dangling endpoints,
/// duplicate edge ids. Failures are reported, not thrown.
ValidationReport validate(const BiGraph& g);

/// An edge subset forming a tree, with its exact metrics.
struct TreeSolution {
  std::set<EdgeId> edge_ids;
  Cost total_c = 0;
  Cost diameter_d = 0;
  std::set<NodeId> node_set;
};

/// Evaluates an acyclic connected edge set. total_c is the exact integer sum,
/// diameter_d the maximum pairwise d-distance over the tree's nodes.
/// Throws std::invalid_argument on cyclic or disconnected edge sets.
TreeSolution evaluate_tree(const BiGraph& g, const std::set<EdgeId>& edge_ids);

/// Same metrics as evaluate_tree but additionally requires the tree to cover
/// every terminal. The diameter is over all tree nodes, not terminals only.
TreeSolution steiner_metrics(const BiGraph& g, const TreeSolution& tree,
                             const TerminalSet& terminals);

// Edge-list text format. Header `nodes N edges M terminals t1,t2,...`,
// then one `u v c d` line per edge; `#` starts a comment line.
void write_edge_list(std::ostream& out, const BiGraph& g, const TerminalSet& terminals);
std::pair<BiGraph, TerminalSet> read_edge_list(std::istream& in);

}  // namespace bnd

#endif
