#ifndef BND_SP_HPP
#define BND_SP_HPP

#include <memory>
#include <optional>
#include <string>

#include "bnd/graph.hpp"
#include "bnd/rational.hpp"

namespace bnd {
namespace sp {

/// Recursive series/parallel composition of a two-terminal graph.
/// Series identifies left's sink with right's source; Parallel identifies
/// both terminal pairs.
struct SPParseTree {
  enum class Kind { Leaf, Series, Parallel };
  Kind kind = Kind::Leaf;
  Edge leaf;  // valid for Leaf
  std::unique_ptr<SPParseTree> left, right;
};

/// Parse tree plus the flattened multigraph it denotes. source/sink are the
/// two designated terminals of the whole graph.
struct SPInstance {
  std::unique_ptr<SPParseTree> root;
  BiGraph graph;
  NodeId source = 0;
  NodeId sink = 0;
};

/// Text format: nested `S(...)`, `P(...)`, `E(c,d)` expressions. Node ids and
/// edge ids are assigned during flattening; `E(u,v,c,d)` is accepted too and
/// the u,v fields are ignored (kept for readability of emitted files).
SPInstance parse_sp(const std::string& description);
std::string format_sp(const SPParseTree& tree);

struct DpSolution {
  std::set<EdgeId> edge_ids;
  Cost value = 0;  // the minimized criterion: c-cost or d-diameter
};

/// Exact minimum c-cost spanning tree with d-diameter <= diameter_bound,
/// or nullopt when no spanning tree meets the bound. `costs` overrides the
/// per-edge c-costs when given (used by the scaling layers).
std::optional<DpSolution> dp_min_cost_given_diameter(
    const SPInstance& inst, Cost diameter_bound,
    const std::vector<Cost>* costs = nullptr);

/// Exact minimum d-diameter spanning tree with total c-cost <= cost_budget,
/// by binary search on the diameter over the same table.
std::optional<DpSolution> dp_min_diameter_given_cost(
    const SPInstance& inst, Cost cost_budget,
    const std::vector<Cost>* costs = nullptr);

enum class TestOutcome { Low, High };

/// Rounding/scaling feasibility probe: LOW when some scaled-budget run meets
/// the diameter bound; the contract is two-sided outside the (lambda,
/// lambda*(1+eps)] band.
TestOutcome test_procedure(const SPInstance& inst, Cost diameter_bound, Cost lambda,
                           Rational eps);

/// Approximate binary search over test_procedure plus a final sweep of
/// rounded budgets: spanning tree with d-diameter <= diameter_bound exactly
/// and c-cost within (1+eps) of the exact optimum. 1/eps must be integral.
std::optional<DpSolution> fpas_dcst(const SPInstance& inst, Cost diameter_bound,
                                    Rational eps);

}  // namespace sp
}  // namespace bnd

#endif
