#include "bnd/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace bnd {
namespace oracle {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

void enumerate_trees(const BiGraph& g, const TerminalSet& terminals,
                     const std::function<void(const TreeSolution&)>& visit,
                     Caps caps) {
  if (g.node_count > caps.max_nodes || static_cast<int>(g.edges.size()) > caps.max_edges)
    throw CapExceeded("oracle instance exceeds enumeration caps");
  if (terminals.terminals.empty())
    throw std::invalid_argument("enumerate_trees: empty terminal set");

  if (terminals.terminals.size() == 1) {
    visit(TreeSolution{});  // the single terminal alone, no edges
    return;
  }

  const int m = static_cast<int>(g.edges.size());
  std::vector<int> degree(g.node_count);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    UnionFind uf(g.node_count);
    std::fill(degree.begin(), degree.end(), 0);
    bool acyclic = true;
    int used = 0;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(mask & (1u << i))) continue;
      const Edge& e = g.edges[i];
      if (!uf.unite(e.u, e.v)) acyclic = false;
      ++degree[e.u];
      ++degree[e.v];
      ++used;
    }
    if (!acyclic) continue;
    // Single component over the covered nodes, containing all terminals.
    int root = uf.find(*terminals.terminals.begin());
    bool ok = true;
    int covered = 0;
    for (int v = 0; v < g.node_count && ok; ++v) {
      if (degree[v] == 0) {
        if (terminals.terminals.count(v)) ok = false;
        continue;
      }
      ++covered;
      if (uf.find(v) != root) ok = false;
      if (degree[v] == 1 && !terminals.terminals.count(v)) ok = false;  // minimality
    }
    if (!ok || used != covered - 1) continue;
    std::set<EdgeId> ids;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) ids.insert(g.edges[i].id);
    visit(evaluate_tree(g, ids));
  }
}

ParetoFront pareto_front(const BiGraph& g, const TerminalSet& terminals, Caps caps) {
  std::vector<ParetoPoint> all;
  enumerate_trees(
      g, terminals,
      [&](const TreeSolution& t) {
        all.push_back({t.diameter_d, t.total_c, t.edge_ids});
      },
      caps);
  std::sort(all.begin(), all.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    if (a.diameter_d != b.diameter_d) return a.diameter_d < b.diameter_d;
    if (a.total_c != b.total_c) return a.total_c < b.total_c;
    return a.witness < b.witness;
  });
  ParetoFront front;
  for (const ParetoPoint& p : all) {
    if (!front.points.empty()) {
      const ParetoPoint& last = front.points.back();
      if (p.total_c >= last.total_c) continue;  // dominated or duplicate
    }
    front.points.push_back(p);
  }
  return front;
}

std::optional<Cost> opt_given_budget(const ParetoFront& front, BudgetOn budget_on,
                                     Cost value) {
  std::optional<Cost> best;
  for (const ParetoPoint& p : front.points) {
    Cost budgeted = budget_on == BudgetOn::Diameter ? p.diameter_d : p.total_c;
    Cost other = budget_on == BudgetOn::Diameter ? p.total_c : p.diameter_d;
    if (budgeted <= value && (!best || other < *best)) best = other;
  }
  return best;
}

std::int64_t spanning_tree_count_determinant(const BiGraph& g) {
  const int n = g.node_count;
  if (n == 1) return 1;
  // Laplacian minor (drop node 0), Bareiss fraction-free elimination.
  using i128 = __int128;
  std::vector<std::vector<i128>> a(n - 1, std::vector<i128>(n - 1, 0));
  for (const Edge& e : g.edges) {
    if (e.u != 0) a[e.u - 1][e.u - 1] += 1;
    if (e.v != 0) a[e.v - 1][e.v - 1] += 1;
    if (e.u != 0 && e.v != 0) {
      a[e.u - 1][e.v - 1] -= 1;
      a[e.v - 1][e.u - 1] -= 1;
    }
  }
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n - 1; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n - 1; ++r)
      for (int c = k + 1; c < n - 1; ++c)
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  return sign * static_cast<std::int64_t>(a[n - 2][n - 2]);
}

}  // namespace oracle
}  // namespace bnd
