#ifndef BND_UNI_SOLVERS_HPP
#define BND_UNI_SOLVERS_HPP

#include <optional>
#include <vector>

#include "bnd/graph.hpp"
#include "bnd/rational.hpp"

namespace bnd {

/// Picks the per-edge weight: plain c, plain d, or the composite
/// a*c(e) + b*d(e) with exact rational coefficients.
struct CostSelector {
  Rational coeff_c;
  Rational coeff_d;

  static CostSelector c_only() { return {Rational(1), Rational(0)}; }
  static CostSelector d_only() { return {Rational(0), Rational(1)}; }
  static CostSelector composite(Rational a, Rational b) {
    if (a < Rational(0) || b < Rational(0))
      throw std::invalid_argument("composite coefficients must be nonnegative");
    return {a, b};
  }

  Rational weight(const Edge& e) const {
    return coeff_c * Rational(e.c) + coeff_d * Rational(e.d);
  }
};

/// Minimum spanning tree under sel. Ties break toward the smallest edge-id
/// sequence. Throws on disconnected graphs.
TreeSolution mst(const BiGraph& g, const CostSelector& sel);

/// Exact all-pairs shortest-path distances under sel; nullopt = unreachable.
std::vector<std::vector<std::optional<Rational>>> apsp(const BiGraph& g,
                                                       const CostSelector& sel);

/// Spanning tree minimizing the sel-diameter: shortest-path trees from every
/// vertex and from every candidate split point of every edge, best kept.
/// Throws on disconnected graphs.
TreeSolution min_diameter_spanning_tree(const BiGraph& g, const CostSelector& sel);

struct PathResult {
  std::vector<EdgeId> edges;  // in order from s to t
  Cost total_c = 0;
  Cost total_d = 0;
};

/// Minimum c-cost s-t path of d-length <= budget, by an exact DP over
/// (node, remaining budget) states. nullopt when no budget-bounded path exists.
std::optional<PathResult> restricted_shortest_path_exact(const BiGraph& g, NodeId s,
                                                         NodeId t, Cost budget);

/// Feasible path with d-length <= budget and c-cost <= (1+eps) * optimum,
/// by rounding/scaling on c with an approximate binary search on the optimum.
std::optional<PathResult> restricted_shortest_path_fptas(const BiGraph& g, NodeId s,
                                                         NodeId t, Cost budget,
                                                         Rational eps);

struct MatchingResult {
  std::vector<std::pair<int, int>> pairs;
  Cost total_weight = 0;
  bool is_exact = false;
};

/// Minimum-weight matching of largest cardinality on a symmetric weight
/// matrix; nullopt entries are unusable pairs. Exact subset DP up to
/// exact_threshold nodes, greedy cheapest-pair beyond it.
MatchingResult min_weight_matching(
    const std::vector<std::vector<std::optional<Cost>>>& weights,
    int exact_threshold = 20);

}  // namespace bnd

#endif
