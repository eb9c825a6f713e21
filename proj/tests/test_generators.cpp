#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

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

}  // namespace

TEST_CASE("equal-split gadget {1,2,3}: 4 nodes, 6 edges, H=3") {
  auto gadget = gen_partition_gadget({1, 2, 3});
  CHECK(gadget.graph.node_count == 4);
  CHECK(gadget.graph.edges.size() == 6);
  CHECK(gadget.half_sum == Rational(3));
  CHECK(validate(gadget.graph).ok());
  // pair i: (c=t_i, d=0) and (c=0, d=t_i)
  CHECK(gadget.graph.edge(4).c == 3);
  CHECK(gadget.graph.edge(4).d == 0);
  CHECK(gadget.graph.edge(5).c == 0);
  CHECK(gadget.graph.edge(5).d == 3);
}

TEST_CASE("equal-split gadget {2,2}: feasible split at H=2") {
  auto gadget = gen_partition_gadget({2, 2});
  CHECK(gadget.half_sum == Rational(2));
  auto inst = sp::parse_sp(gadget.sp_description);
  auto sol = sp::dp_min_cost_given_diameter(inst, 2);
  REQUIRE(sol);
  CHECK(sol->value == 2);
}

TEST_CASE("equal-split gadget {1}: fractional H still emitted") {
  auto gadget = gen_partition_gadget({1});
  CHECK(gadget.half_sum == Rational(1, 2));
  CHECK(gadget.graph.edges.size() == 2);
}

TEST_CASE("equal-split gadget rejects bad input") {
  CHECK_THROWS(gen_partition_gadget({}));
  CHECK_THROWS(gen_partition_gadget({0}));
}

TEST_CASE("cover gadget structure on the seven-element instance") {
  // x1={0,1,2}, x2={2,3,4}, x3={4}, x4={5,6}
  auto gadget = gen_setcover_gadget(
      7, {{1, {0, 1, 2}}, {1, {2, 3, 4}}, {1, {4}}, {1, {5, 6}}});
  CHECK(gadget.graph.node_count == 7 + 4 + 3);
  CHECK(gadget.graph.edges.size() == 4 + 9 + 2);  // set + element + path edges
  CHECK(gadget.terminals.terminals.size() == 7 + 3);
  CHECK(validate(gadget.graph).ok());
  for (const Edge& e : gadget.graph.edges) CHECK(e.d == 1);
}

TEST_CASE("single covering set: min diameter-4 Steiner tree costs the set") {
  auto gadget = gen_setcover_gadget(3, {{5, {0, 1, 2}}});
  std::optional<Cost> best;
  oracle::enumerate_trees(gadget.graph, gadget.terminals, [&](const TreeSolution& t) {
    if (t.diameter_d > 4) return;
    if (!best || t.total_c < *best) best = t.total_c;
  });
  REQUIRE(best);
  CHECK(*best == 5);
}

TEST_CASE("covers correspond to diameter-4 trees of equal cost") {
  // two sets; the cheap one misses element 2, so the optimal cover costs 3+4
  auto gadget = gen_setcover_gadget(3, {{3, {0, 1}}, {4, {1, 2}}});
  std::optional<Cost> best;
  oracle::enumerate_trees(gadget.graph, gadget.terminals, [&](const TreeSolution& t) {
    if (t.diameter_d > 4) return;
    if (!best || t.total_c < *best) best = t.total_c;
  });
  REQUIRE(best);
  CHECK(*best == 7);
}

TEST_CASE("uncovered element is an error") {
  CHECK_THROWS(gen_setcover_gadget(3, {{1, {0, 1}}}));
}

TEST_CASE("random graphs are connected, deterministic, in range") {
  BiGraph a = gen_random(6, 10, 7, 9, 42);
  BiGraph b = gen_random(6, 10, 7, 9, 42);
  REQUIRE(a.edges.size() == 10);
  CHECK(validate(a).ok());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].u == b.edges[i].u);
    CHECK(a.edges[i].v == b.edges[i].v);
    CHECK(a.edges[i].c == b.edges[i].c);
    CHECK(a.edges[i].d == b.edges[i].d);
    CHECK(a.edges[i].c <= 7);
    CHECK(a.edges[i].d <= 9);
  }
  CHECK(oracle::spanning_tree_count_determinant(a) > 0);  // connected

  BiGraph tree = gen_random(7, 6, 5, 5, 1);  // m = n-1
  CHECK(oracle::spanning_tree_count_determinant(tree) == 1);

  BiGraph zeros = gen_random(4, 5, 0, 0, 9);
  for (const Edge& e : zeros.edges) {
    CHECK(e.c == 0);
    CHECK(e.d == 0);
  }
}

TEST_CASE("random generator rejects unsatisfiable parameters") {
  CHECK_THROWS(gen_random(5, 3, 1, 1, 1));   // m < n-1
  CHECK_THROWS(gen_random(1, 2, 1, 1, 1));   // self-loops forbidden
  CHECK_THROWS(gen_random(0, 0, 1, 1, 1));
}
