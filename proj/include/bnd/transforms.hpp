#ifndef BND_TRANSFORMS_HPP
#define BND_TRANSFORMS_HPP

#include <functional>
#include <optional>

#include "bnd/graph.hpp"
#include "bnd/rational.hpp"
#include "bnd/uni_solvers.hpp"

namespace bnd {

enum class Criterion { TotalCost, Diameter };

/// Black-box (alpha,beta)-approximation for a budgeted bicriteria problem:
/// given a budget on criterion A (under c), returns a solution whose A-value
/// is at most alpha times the budget and whose B-value (under d) is at most
/// beta times the best budget-respecting solution. nullopt = infeasible.
struct BicriteriaSolver {
  std::function<std::optional<TreeSolution>(const BiGraph&, const TerminalSet&, Cost)>
      solve;
  Rational alpha{1};
  Rational beta{1};
  Criterion criterion_a = Criterion::TotalCost;
  Criterion criterion_b = Criterion::Diameter;
};

/// rho-approximation minimizing one criterion under a single cost function.
struct UnicriterionSolver {
  std::function<TreeSolution(const BiGraph&, const TerminalSet&, const CostSelector&)>
      solve;
  Rational rho{1};
  Criterion criterion = Criterion::TotalCost;
};

struct TransformResult {
  std::optional<TreeSolution> tree;  // nullopt = NO SOLUTION
  int solver_calls = 0;
  bool monotone_fallback = false;  // binary-search bracket failed, linear scan used
};

/// Objective value of a tree under a selector: additive for TotalCost,
/// maximum pairwise tree distance for Diameter.
Rational objective_value(const BiGraph& g, const TreeSolution& t, Criterion which,
                         const CostSelector& sel);

/// Budget-swapping transform: turns an (alpha,beta)-approximation with the
/// budget on A into a (beta,alpha)-approximation with the budget on B, by
/// binary search over the c-budget.
TransformResult bicriteria_equivalence(const BicriteriaSolver& solver, const BiGraph& g,
                                       const TerminalSet& terminals, Cost budget_d);

/// Sum-objective conversion: sweeps geometric budgets and returns the tree
/// minimizing c-value + d-value, within (1+eps)*max(alpha,beta) of optimal.
TransformResult convert_sum(const BicriteriaSolver& solver, const BiGraph& g,
                            const TerminalSet& terminals, Rational eps);

/// Parametric search for same-criterion pairs: binary search on the composite
/// weight (D'/C)*c + d, yielding ((1+gamma)rho, (1+1/gamma)rho) guarantees.
TransformResult parametric_search(const UnicriterionSolver& solver, const BiGraph& g,
                                  const TerminalSet& terminals, Cost budget_c,
                                  Rational gamma);

}  // namespace bnd

#endif
