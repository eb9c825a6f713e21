#ifndef BND_DCST_HPP
#define BND_DCST_HPP

#include <optional>
#include <vector>

#include "bnd/graph.hpp"
#include "bnd/rational.hpp"
#include "bnd/uni_solvers.hpp"

namespace bnd {
namespace dcst {

enum class PathMode { Exact, Fptas };

/// Connected partial solution: node/edge sets plus a distinguished center,
/// which is always a terminal.
struct Cluster {
  std::set<NodeId> nodes;
  std::set<EdgeId> edge_ids;
  NodeId center = -1;
};

struct PhaseState {
  int phase_index = 0;
  std::vector<Cluster> clusters;
};

/// Complete weighted graph over cluster centers: weight[i][j] is the c-cost
/// of a budget-bounded center-to-center path, nullopt when none exists.
struct AuxiliaryGraph {
  std::vector<std::vector<std::optional<Cost>>> weight;
  std::vector<std::vector<std::optional<PathResult>>> witness;
};

AuxiliaryGraph build_auxiliary_graph(const BiGraph& g,
                                     const std::vector<Cluster>& clusters,
                                     Cost diameter_bound, Rational eps, PathMode mode);

/// Merges each matched pair of clusters by unioning node/edge sets with the
/// witness path; the smaller center id wins. Unmatched clusters carry over.
PhaseState merge_phase(const BiGraph& g, const PhaseState& state,
                       const MatchingResult& matching, const AuxiliaryGraph& aux);

struct Result {
  std::optional<TreeSolution> tree;  // nullopt = no bounded Steiner tree found
  int phases = 0;
  bool matchings_exact = true;
  // Center pairs that had no bounded path when the run aborted.
  std::vector<std::pair<NodeId, NodeId>> infeasible_pairs;
  // Promised c-cost factor: (1+eps)*ceil(log2 |K|), doubled under greedy matching.
  Rational cost_guarantee{0};
};

/// Cluster-merging algorithm for diameter-bounded minimum-cost Steiner trees.
/// Output spans the terminals with d-diameter <= 2*ceil(log2 |K|)*D and
/// c-cost <= (1+eps)*ceil(log2 |K|) times the best D-bounded Steiner tree.
Result solve(const BiGraph& g, const TerminalSet& terminals, Cost diameter_bound,
             Rational eps, PathMode mode, int matching_exact_threshold = 20);

}  // namespace dcst
}  // namespace bnd

#endif
