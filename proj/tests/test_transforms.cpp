#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bnd/generators.hpp"
#include "bnd/oracle.hpp"
#include "bnd/transforms.hpp"

using namespace bnd;

namespace {

TerminalSet all_nodes(const BiGraph& g) {
  TerminalSet t;
  for (NodeId v = 0; v < g.node_count; ++v) t.terminals.insert(v);
  return t;
}

// Exact (1,1) solver budgeted on diameter: min-c spanning tree among those
// with diameter_d <= budget, straight off the enumeration.
BicriteriaSolver exact_diameter_budgeted() {
  BicriteriaSolver s;
  s.alpha = Rational(1);
  s.beta = Rational(1);
  s.criterion_a = Criterion::Diameter;
  s.criterion_b = Criterion::TotalCost;
  s.solve = [](const BiGraph& g, const TerminalSet& t,
               Cost budget) -> std::optional<TreeSolution> {
    std::optional<TreeSolution> best;
    oracle::enumerate_trees(g, t, [&](const TreeSolution& tree) {
      if (tree.diameter_d > budget) return;
      if (!best || tree.total_c < best->total_c) best = tree;
    });
    return best;
  };
  return s;
}

Cost tree_total_d(const BiGraph& g, const TreeSolution& t) {
  Cost d = 0;
  for (EdgeId id : t.edge_ids) d = checked_add(d, g.edge(id).d);
  return d;
}

}  // namespace

TEST_CASE("objective_value: additive cost vs tree diameter") {
  BiGraph g(3, {{0, 1, 2, 5, 0}, {1, 2, 3, 7, 1}});
  TreeSolution t = evaluate_tree(g, {0, 1});
  CHECK(objective_value(g, t, Criterion::TotalCost, CostSelector::c_only()) ==
        Rational(5));
  CHECK(objective_value(g, t, Criterion::Diameter, CostSelector::d_only()) ==
        Rational(12));
}

TEST_CASE("equivalence: swapped budget matches the oracle front") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    BiGraph g = gen_random(6, 9, 9, 9, seed);
    TerminalSet terms = all_nodes(g);
    auto front = oracle::pareto_front(g, terms);
    // budget C on total cost taken from a mid-front point
    Cost C = front.points[front.points.size() / 2].total_c;
    auto opt_d = oracle::opt_given_budget(front, oracle::BudgetOn::TotalCost, C);
    REQUIRE(opt_d.has_value());

    auto res = bicriteria_equivalence(exact_diameter_budgeted(), g, terms, C);
    REQUIRE(res.tree.has_value());
    CHECK(res.tree->total_c <= C);            // beta = 1
    CHECK(res.tree->diameter_d <= *opt_d);    // alpha = 1
  }
}

TEST_CASE("equivalence: slack budget returns the unconstrained optimum") {
  BiGraph g = gen_random(5, 8, 9, 9, 3);
  TerminalSet terms = all_nodes(g);
  Cost c_hi = 0;
  for (const Edge& e : g.edges) c_hi += e.c;
  auto res = bicriteria_equivalence(exact_diameter_budgeted(), g, terms, c_hi);
  REQUIRE(res.tree.has_value());
  auto front = oracle::pareto_front(g, terms);
  CHECK(res.tree->diameter_d == front.points.front().diameter_d);
}

TEST_CASE("equivalence: impossible budget yields no solution") {
  BiGraph g(3, {{0, 1, 5, 1, 0}, {1, 2, 5, 1, 1}});
  auto res = bicriteria_equivalence(exact_diameter_budgeted(), g, all_nodes(g), 4);
  CHECK_FALSE(res.tree.has_value());
}

TEST_CASE("convert_sum with an exact solver is within (1+eps) of the best sum") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    BiGraph g = gen_random(5, 8, 9, 9, seed);
    TerminalSet terms = all_nodes(g);
    std::optional<Rational> best_sum;
    oracle::enumerate_trees(g, terms, [&](const TreeSolution& t) {
      Rational sum = Rational(t.total_c) + Rational(t.diameter_d);
      if (!best_sum || sum < *best_sum) best_sum = sum;
    });
    for (Rational eps : {Rational(1), Rational(1, 2)}) {
      auto res = convert_sum(exact_diameter_budgeted(), g, terms, eps);
      REQUIRE(res.tree.has_value());
      Rational sum = Rational(res.tree->total_c) + Rational(res.tree->diameter_d);
      CHECK(sum <= (Rational(1) + eps) * *best_sum);
      CHECK(*best_sum <= sum);
    }
  }
}

TEST_CASE("convert_sum on a graph that is already a tree returns it") {
  BiGraph g(4, {{0, 1, 3, 1, 0}, {1, 2, 4, 1, 1}, {1, 3, 5, 1, 2}});
  auto res = convert_sum(exact_diameter_budgeted(), g, all_nodes(g), Rational(1));
  REQUIRE(res.tree.has_value());
  CHECK(res.tree->edge_ids == std::set<EdgeId>{0, 1, 2});
}

TEST_CASE("parametric search with exact MST meets both bounds") {
  UnicriterionSolver plug;
  plug.rho = Rational(1);
  plug.criterion = Criterion::TotalCost;
  plug.solve = [](const BiGraph& g, const TerminalSet&, const CostSelector& sel) {
    return mst(g, sel);
  };
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    BiGraph g = gen_random(6, 9, 9, 9, seed);
    TerminalSet terms = all_nodes(g);
    Cost C = std::max<Cost>(mst(g, CostSelector::c_only()).total_c, 1);
    std::optional<Cost> opt_d;  // best total_d among trees with total_c <= C
    oracle::enumerate_trees(g, terms, [&](const TreeSolution& t) {
      if (t.total_c > C) return;
      Cost td = tree_total_d(g, t);
      if (!opt_d || td < *opt_d) opt_d = td;
    });
    REQUIRE(opt_d.has_value());
    for (Rational gamma : {Rational(1, 2), Rational(1), Rational(2)}) {
      auto res = parametric_search(plug, g, terms, C, gamma);
      REQUIRE(res.tree.has_value());
      CHECK(Rational(res.tree->total_c) <= (Rational(1) + gamma) * Rational(C));
      CHECK(Rational(tree_total_d(g, *res.tree)) <=
            (Rational(1) + Rational(1) / gamma) * Rational(*opt_d));
    }
  }
}

TEST_CASE("parametric search on a tree returns that tree for any gamma") {
  BiGraph g(4, {{0, 1, 3, 2, 0}, {1, 2, 4, 2, 1}, {1, 3, 5, 2, 2}});
  UnicriterionSolver plug;
  plug.rho = Rational(1);
  plug.criterion = Criterion::TotalCost;
  plug.solve = [](const BiGraph& gg, const TerminalSet&, const CostSelector& sel) {
    return mst(gg, sel);
  };
  for (Rational gamma : {Rational(1, 2), Rational(3)}) {
    auto res = parametric_search(plug, g, all_nodes(g), 12, gamma);
    REQUIRE(res.tree.has_value());
    CHECK(res.tree->edge_ids == std::set<EdgeId>{0, 1, 2});
  }
}

TEST_CASE("parametric search on the diameter diagonal") {
  UnicriterionSolver plug;
  plug.rho = Rational(1);
  plug.criterion = Criterion::Diameter;
  plug.solve = [](const BiGraph& g, const TerminalSet&, const CostSelector& sel) {
    return min_diameter_spanning_tree(g, sel);
  };
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    BiGraph g = gen_random(5, 8, 6, 6, seed);
    TerminalSet terms = all_nodes(g);
    // budget = c-diameter of the min-c-diameter tree, always feasible
    Cost C = std::max<Cost>(
        objective_value(g, min_diameter_spanning_tree(g, CostSelector::c_only()),
                        Criterion::Diameter, CostSelector::c_only())
            .floor(),
        1);
    std::optional<Rational> opt_d;
    oracle::enumerate_trees(g, terms, [&](const TreeSolution& t) {
      if (objective_value(g, t, Criterion::Diameter, CostSelector::c_only()) >
          Rational(C))
        return;
      Rational dd = objective_value(g, t, Criterion::Diameter, CostSelector::d_only());
      if (!opt_d || dd < *opt_d) opt_d = dd;
    });
    REQUIRE(opt_d.has_value());
    Rational gamma(1);
    auto res = parametric_search(plug, g, terms, C, gamma);
    REQUIRE(res.tree.has_value());
    CHECK(objective_value(g, *res.tree, Criterion::Diameter, CostSelector::c_only()) <=
          (Rational(1) + gamma) * Rational(C));
    CHECK(objective_value(g, *res.tree, Criterion::Diameter, CostSelector::d_only()) <=
          (Rational(1) + Rational(1) / gamma) * *opt_d);
  }
}

TEST_CASE("h(X)/X is monotone nonincreasing for the MST plug-in") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    BiGraph g = gen_random(6, 10, 9, 9, seed);
    Cost C = std::max<Cost>(mst(g, CostSelector::c_only()).total_c, 1);
    std::optional<Rational> prev;
    for (Cost x = 1; x <= 40; x += 3) {
      CostSelector sel = CostSelector::composite(Rational(x, C), Rational(1));
      TreeSolution t = mst(g, sel);
      Rational ratio = objective_value(g, t, Criterion::TotalCost, sel) / Rational(x);
      if (prev) CHECK(ratio <= *prev);
      prev = ratio;
    }
  }
}

TEST_CASE("searches stay within a logarithmic number of solver calls") {
  BiGraph g = gen_random(6, 9, 9, 9, 7);
  TerminalSet terms = all_nodes(g);
  auto front = oracle::pareto_front(g, terms);
  Cost C = front.points[front.points.size() / 2].total_c;
  auto res = bicriteria_equivalence(exact_diameter_budgeted(), g, terms, C);
  Cost d_hi = 0;
  for (const Edge& e : g.edges) d_hi += e.d;
  int log_bound = 2;
  while ((Cost(1) << log_bound) < d_hi) ++log_bound;
  CHECK(res.solver_calls <= log_bound + 3);
}
