#include "bnd/transforms.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bnd {

Rational objective_value(const BiGraph& g, const TreeSolution& t, Criterion which,
                         const CostSelector& sel) {
  if (which == Criterion::TotalCost) {
    Rational sum(0);
    for (EdgeId id : t.edge_ids) sum = sum + sel.weight(g.edge(id));
    return sum;
  }
  std::vector<std::vector<std::pair<NodeId, Rational>>> adj(g.node_count);
  for (EdgeId id : t.edge_ids) {
    const Edge& e = g.edge(id);
    adj[e.u].push_back({e.v, sel.weight(e)});
    adj[e.v].push_back({e.u, sel.weight(e)});
  }
  Rational best(0);
  for (NodeId s : t.node_set) {
    std::vector<std::tuple<NodeId, NodeId, Rational>> stack = {{s, -1, Rational(0)}};
    while (!stack.empty()) {
      auto [x, par, dx] = stack.back();
      stack.pop_back();
      if (best < dx) best = dx;
      for (auto& [y, w] : adj[x])
        if (y != par) stack.push_back({y, x, dx + w});
    }
  }
  return best;
}

namespace {

// A criterion's natural value: TotalCost totals the c-costs, Diameter is the
// tree diameter under the d-costs.
Rational crit_value(const BiGraph& g, const TreeSolution& t, Criterion which) {
  return objective_value(g, t, which,
                         which == Criterion::TotalCost ? CostSelector::c_only()
                                                       : CostSelector::d_only());
}

Cost crit_budget_hi(const BiGraph& g, Criterion which) {
  Cost hi = 0;
  for (const Edge& e : g.edges)
    hi = checked_add(hi, which == Criterion::TotalCost ? e.c : e.d);
  return hi;
}

}  // namespace

TransformResult bicriteria_equivalence(const BicriteriaSolver& solver, const BiGraph& g,
                                       const TerminalSet& terminals, Cost budget_d) {
  TransformResult result;
  std::map<Cost, std::optional<TreeSolution>> cache;
  auto solve_at = [&](Cost budget) -> const std::optional<TreeSolution>& {
    auto it = cache.find(budget);
    if (it == cache.end()) {
      ++result.solver_calls;
      it = cache.emplace(budget, solver.solve(g, terminals, budget)).first;
    }
    return it->second;
  };
  Rational threshold = solver.beta * Rational(budget_d);
  auto within = [&](Cost budget) {
    const auto& sol = solve_at(budget);
    if (!sol) return false;
    return crit_value(g, *sol, solver.criterion_b) <= threshold;
  };

  Cost c_hi = crit_budget_hi(g, solver.criterion_a);

  if (within(0)) {
    result.tree = solve_at(0);
    return result;
  }
  if (!within(c_hi)) {
    // A hostile solver would be feasible at the full budget; scan a coarse
    // grid in case a plugged heuristic is non-monotone.
    result.monotone_fallback = true;
    std::optional<Rational> best_a;
    for (Cost b = 1;; b = checked_add(b, b)) {
      Cost budget = std::min(b, c_hi);
      if (within(budget)) {
        Rational av = crit_value(g, *solve_at(budget), solver.criterion_a);
        if (!best_a || av < *best_a) {
          best_a = av;
          result.tree = solve_at(budget);
        }
      }
      if (budget == c_hi) break;
    }
    return result;
  }
  Cost lo = 0, hi = c_hi;  // within(lo) false, within(hi) true
  while (hi - lo > 1) {
    Cost mid = lo + (hi - lo) / 2;
    (within(mid) ? hi : lo) = mid;
  }
  result.tree = solve_at(hi);
  return result;
}

TransformResult convert_sum(const BicriteriaSolver& solver, const BiGraph& g,
                            const TerminalSet& terminals, Rational eps) {
  if (eps <= Rational(0)) throw std::invalid_argument("convert_sum: eps must be positive");
  TransformResult result;
  Cost c_hi = crit_budget_hi(g, solver.criterion_a);

  std::optional<Rational> best_sum;
  auto try_budget = [&](Cost budget) {
    ++result.solver_calls;
    auto sol = solver.solve(g, terminals, budget);
    if (!sol) return;
    Rational sum = crit_value(g, *sol, solver.criterion_a) +
                   crit_value(g, *sol, solver.criterion_b);
    if (!best_sum || sum < *best_sum) {
      best_sum = sum;
      result.tree = *sol;
    }
  };

  try_budget(0);  // zero-cost edges may already span
  Rational growth = Rational(1) + eps;
  for (Cost m = 1;;) {
    try_budget(m);
    if (m >= c_hi) break;
    m = std::max(m + 1, (Rational(m) * growth).floor());
  }
  return result;
}

TransformResult parametric_search(const UnicriterionSolver& solver, const BiGraph& g,
                                  const TerminalSet& terminals, Cost budget_c,
                                  Rational gamma) {
  if (gamma <= Rational(0))
    throw std::invalid_argument("parametric_search: gamma must be positive");
  if (budget_c < 1)
    throw std::invalid_argument("parametric_search: c-budget must be at least 1");
  TransformResult result;

  Cost d_hi = 0;
  for (const Edge& e : g.edges) d_hi = checked_add(d_hi, e.d);
  Cost x_hi = std::max<Cost>((gamma * Rational(d_hi)).ceil(), 1);
  Rational threshold = (Rational(1) + gamma) * solver.rho;

  std::map<Cost, std::pair<TreeSolution, Rational>> cache;  // x -> (tree, h(x))
  auto h_at = [&](Cost x) -> const std::pair<TreeSolution, Rational>& {
    auto it = cache.find(x);
    if (it == cache.end()) {
      ++result.solver_calls;
      CostSelector sel =
          CostSelector::composite(Rational(x, budget_c), Rational(1));
      TreeSolution t = solver.solve(g, terminals, sel);
      Rational h = objective_value(g, t, solver.criterion, sel);
      it = cache.emplace(x, std::make_pair(std::move(t), h)).first;
    }
    return it->second;
  };
  auto ratio_ok = [&](Cost x) {
    return h_at(x).second <= threshold * Rational(x);
  };

  if (ratio_ok(1)) {  // h(0)/0 counts as unbounded, so x=1 is the boundary
    result.tree = h_at(1).first;
    return result;
  }
  if (!ratio_ok(x_hi)) {
    // Non-monotone plug-in: coarse scan, keep the best answer respecting
    // the c-side bound.
    result.monotone_fallback = true;
    std::optional<Rational> best_d;
    for (Cost x = 1;; x = checked_add(x, x)) {
      Cost probe = std::min(x, x_hi);
      const auto& [tree, h] = h_at(probe);
      Rational cv = objective_value(g, tree, solver.criterion, CostSelector::c_only());
      Rational dv = objective_value(g, tree, solver.criterion, CostSelector::d_only());
      if (cv <= threshold * Rational(budget_c) && (!best_d || dv < *best_d)) {
        best_d = dv;
        result.tree = tree;
      }
      if (probe == x_hi) break;
    }
    return result;
  }
  Cost lo = 1, hi = x_hi;  // ratio_ok(lo) false, ratio_ok(hi) true
  while (hi - lo > 1) {
    Cost mid = lo + (hi - lo) / 2;
    (ratio_ok(mid) ? hi : lo) = mid;
  }
  result.tree = h_at(hi).first;
  return result;
}

}  // namespace bnd
