#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "bnd/generators.hpp"
#include "bnd/oracle.hpp"
#include "bnd/sp.hpp"

using namespace bnd;

namespace {

TerminalSet all_nodes(const BiGraph& g) {
  TerminalSet t;
  for (NodeId v = 0; v < g.node_count; ++v) t.terminals.insert(v);
  return t;
}

// exact optimum by spanning-tree enumeration on the flattened graph
std::optional<Cost> brute_min_cost(const sp::SPInstance& inst, Cost D) {
  std::optional<Cost> best;
  oracle::enumerate_trees(inst.graph, all_nodes(inst.graph), [&](const TreeSolution& t) {
    if (t.diameter_d > D) return;
    if (!best || t.total_c < *best) best = t.total_c;
  });
  return best;
}

std::optional<Cost> brute_min_diameter(const sp::SPInstance& inst, Cost C) {
  std::optional<Cost> best;
  oracle::enumerate_trees(inst.graph, all_nodes(inst.graph), [&](const TreeSolution& t) {
    if (t.total_c > C) return;
    if (!best || t.diameter_d < *best) best = t.diameter_d;
  });
  return best;
}

// random parse tree with `edges` leaves
std::string random_sp(int edges, std::mt19937_64& rng, Cost cost_cap = 9) {
  if (edges == 1)
    return "E(" + std::to_string(rng() % (cost_cap + 1)) + "," +
           std::to_string(rng() % (cost_cap + 1)) + ")";
  int left = 1 + static_cast<int>(rng() % (edges - 1));
  std::string op = rng() % 2 ? "S" : "P";
  return op + "(" + random_sp(left, rng, cost_cap) + "," +
         random_sp(edges - left, rng, cost_cap) + ")";
}

}  // namespace

TEST_CASE("parse_sp handles the long and short leaf syntax") {
  auto a = sp::parse_sp("edge(0,1,c=1,d=1)");
  REQUIRE(a.graph.edges.size() == 1);
  CHECK(a.graph.edge(0).c == 1);
  CHECK(a.graph.edge(0).d == 1);
  CHECK(a.graph.node_count == 2);

  auto b = sp::parse_sp("P(E(3,4),E(5,6))");
  CHECK(b.graph.node_count == 2);
  REQUIRE(b.graph.edges.size() == 2);
  CHECK(b.graph.edge(0).u == b.graph.edge(1).u);  // true parallel pair
  CHECK(b.graph.edge(0).v == b.graph.edge(1).v);

  CHECK_THROWS_AS(sp::parse_sp("S(E(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(sp::parse_sp("Q(E(1,1),E(2,2))"), std::invalid_argument);
}

TEST_CASE("format_sp round-trips after flattening") {
  auto inst = sp::parse_sp("S(P(E(1,0),E(0,1)),E(2,3))");
  std::string text = sp::format_sp(*inst.root);
  auto again = sp::parse_sp(text);
  REQUIRE(again.graph.edges.size() == inst.graph.edges.size());
  for (std::size_t i = 0; i < inst.graph.edges.size(); ++i) {
    CHECK(again.graph.edges[i].c == inst.graph.edges[i].c);
    CHECK(again.graph.edges[i].d == inst.graph.edges[i].d);
    CHECK(again.graph.edges[i].u == inst.graph.edges[i].u);
    CHECK(again.graph.edges[i].v == inst.graph.edges[i].v);
  }
}

TEST_CASE("the equal-split gadget description parses to the gadget graph") {
  auto gadget = gen_partition_gadget({1, 2, 3});
  auto inst = sp::parse_sp(gadget.sp_description);
  REQUIRE(inst.graph.edges.size() == gadget.graph.edges.size());
  CHECK(inst.graph.node_count == gadget.graph.node_count);
  for (std::size_t i = 0; i < inst.graph.edges.size(); ++i) {
    CHECK(inst.graph.edges[i].c == gadget.graph.edges[i].c);
    CHECK(inst.graph.edges[i].d == gadget.graph.edges[i].d);
  }
}

TEST_CASE("min cost given diameter: single edge") {
  auto inst = sp::parse_sp("E(5,7)");
  auto sol = sp::dp_min_cost_given_diameter(inst, 7);
  REQUIRE(sol);
  CHECK(sol->value == 5);
  CHECK(sol->edge_ids == std::set<EdgeId>{0});
  CHECK_FALSE(sp::dp_min_cost_given_diameter(inst, 6).has_value());
}

TEST_CASE("equal-split gadget {1,2,3}: feasible at (3,3)") {
  auto gadget = gen_partition_gadget({1, 2, 3});
  auto inst = sp::parse_sp(gadget.sp_description);
  auto sol = sp::dp_min_cost_given_diameter(inst, 3);
  REQUIRE(sol);
  CHECK(sol->value == 3);  // partition {3} vs {1,2}
  TreeSolution t = evaluate_tree(inst.graph, sol->edge_ids);
  CHECK(t.diameter_d <= 3);
  CHECK(t.total_c == 3);
}

TEST_CASE("equal-split gadget {1,1,1}: no equal split of an odd sum") {
  auto gadget = gen_partition_gadget({1, 1, 1});
  auto inst = sp::parse_sp(gadget.sp_description);
  auto sol = sp::dp_min_cost_given_diameter(inst, 1);
  // trees with diameter <= 1 exist, but none with cost <= 1
  REQUIRE(sol);
  CHECK(sol->value > 1);
}

TEST_CASE("min diameter given cost: single edge and the gadget") {
  auto one = sp::parse_sp("E(5,7)");
  auto sol = sp::dp_min_diameter_given_cost(one, 5);
  REQUIRE(sol);
  CHECK(sol->value == 7);
  CHECK_FALSE(sp::dp_min_diameter_given_cost(one, 4).has_value());

  auto gadget = gen_partition_gadget({1, 2, 3});
  auto inst = sp::parse_sp(gadget.sp_description);
  auto g3 = sp::dp_min_diameter_given_cost(inst, 3);
  REQUIRE(g3);
  CHECK(g3->value == 3);
}

TEST_CASE("unconstrained budget reduces to the min-diameter spanning tree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    auto inst = sp::parse_sp(random_sp(6, rng));
    Cost c_hi = 0;
    for (const Edge& e : inst.graph.edges) c_hi += e.c;
    auto sol = sp::dp_min_diameter_given_cost(inst, c_hi);
    auto brute = brute_min_diameter(inst, c_hi);
    REQUIRE(sol.has_value() == brute.has_value());
    if (sol) CHECK(sol->value == *brute);
  }
}

TEST_CASE("dp equals brute force on random parse trees up to 8 edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int edges = 1 + static_cast<int>(rng() % 8);
    auto inst = sp::parse_sp(random_sp(edges, rng));
    for (Cost D : {0, 2, 5, 11, 40}) {
      auto sol = sp::dp_min_cost_given_diameter(inst, D);
      auto brute = brute_min_cost(inst, D);
      REQUIRE(sol.has_value() == brute.has_value());
      if (sol) {
        CHECK(sol->value == *brute);
        TreeSolution t = evaluate_tree(inst.graph, sol->edge_ids);
        CHECK(t.total_c == sol->value);
        CHECK(t.diameter_d <= D);
        CHECK(static_cast<int>(t.node_set.size()) == inst.graph.node_count);
      }
    }
  }
}

TEST_CASE("dp optimum is monotone nonincreasing in the diameter bound") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    auto inst = sp::parse_sp(random_sp(6, rng));
    std::optional<Cost> prev;
    for (Cost D = 0; D <= 30; ++D) {
      auto sol = sp::dp_min_cost_given_diameter(inst, D);
      if (sol && prev) CHECK(sol->value <= *prev);
      if (sol) prev = sol->value;
    }
  }
}

TEST_CASE("gadget feasibility at (H,H) matches subset-sum for |T| <= 12") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Cost> values;
    Cost total = 0;
    for (int i = 0; i < n; ++i) {
      values.push_back(1 + static_cast<Cost>(rng() % 9));
      total += values.back();
    }
    // subset-sum brute force: can we hit total/2 exactly?
    bool splittable = false;
    if (total % 2 == 0)
      for (int mask = 0; mask < (1 << n) && !splittable; ++mask) {
        Cost s = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) s += values[i];
        if (2 * s == total) splittable = true;
      }
    auto gadget = gen_partition_gadget(values);
    auto inst = sp::parse_sp(gadget.sp_description);
    Cost H_floor = gadget.half_sum.floor();
    auto sol = sp::dp_min_cost_given_diameter(inst, H_floor);
    bool feasible = sol && sol->value <= H_floor;
    CHECK(feasible == splittable);
  }
}

TEST_CASE("test procedure obeys its two-sided contract") {
  std::mt19937_64 rng(17);
  Rational eps(1);
  for (int trial = 0; trial < 15; ++trial) {
    auto inst = sp::parse_sp(random_sp(5, rng));
    Cost D = 6;
    auto exact = sp::dp_min_cost_given_diameter(inst, D);
    if (!exact || exact->value == 0) continue;
    Cost opt = exact->value;
    for (Cost lambda : {opt, opt + 1, 2 * opt, std::max<Cost>(opt / 4, 1), opt - 1}) {
      if (lambda <= 0) continue;
      auto out = sp::test_procedure(inst, D, lambda, eps);
      if (lambda >= opt) CHECK(out == sp::TestOutcome::Low);
      Rational band = Rational(lambda) * (Rational(1) + eps);
      if (band < Rational(opt)) CHECK(out == sp::TestOutcome::High);
    }
  }
}

TEST_CASE("test procedure validates its inputs") {
  auto inst = sp::parse_sp("E(2,2)");
  CHECK_THROWS(sp::test_procedure(inst, 2, 0, Rational(1)));
  CHECK_THROWS(sp::test_procedure(inst, 2, 1, Rational(2, 3)));
}

TEST_CASE("approximation scheme: bounded diameter, cost within (1+eps)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int edges = 2 + static_cast<int>(rng() % 9);  // up to 10 edges
    auto inst = sp::parse_sp(random_sp(edges, rng));
    for (Cost D : {4, 9}) {
      auto exact = sp::dp_min_cost_given_diameter(inst, D);
      for (Rational eps : {Rational(1), Rational(1, 2), Rational(1, 10)}) {
        auto approx = sp::fpas_dcst(inst, D, eps);
        REQUIRE(approx.has_value() == exact.has_value());
        if (!approx) continue;
        TreeSolution t = evaluate_tree(inst.graph, approx->edge_ids);
        CHECK(t.diameter_d <= D);  // diameter met exactly, never approximately
        CHECK(t.total_c == approx->value);
        CHECK(approx->value >= exact->value);
        CHECK(Rational(approx->value) <=
              (Rational(1) + eps) * Rational(exact->value));
      }
    }
  }
}

TEST_CASE("a series chain has a unique spanning tree for any eps") {
  auto inst = sp::parse_sp("S(E(4,1),S(E(5,2),E(6,3)))");
  for (Rational eps : {Rational(1), Rational(1, 4)}) {
    auto sol = sp::fpas_dcst(inst, 6, eps);
    REQUIRE(sol);
    CHECK(sol->edge_ids == std::set<EdgeId>{0, 1, 2});
    CHECK(sol->value == 15);
  }
}

TEST_CASE("tighter eps never yields a worse tree on a fixed instance") {
  std::mt19937_64 rng(29);
  auto inst = sp::parse_sp(random_sp(8, rng, 30));
  Cost c_hi = 0;
  for (const Edge& e : inst.graph.edges) c_hi += e.c;
  Cost D = sp::dp_min_diameter_given_cost(inst, c_hi)->value + 5;
  auto coarse = sp::fpas_dcst(inst, D, Rational(1));
  auto fine = sp::fpas_dcst(inst, D, Rational(1, 4));
  REQUIRE(coarse);
  REQUIRE(fine);
  CHECK(fine->value <= coarse->value);
}

TEST_CASE("infeasible diameter bound is reported, not approximated") {
  auto inst = sp::parse_sp("E(1,5)");
  CHECK_FALSE(sp::fpas_dcst(inst, 4, Rational(1)).has_value());
}
