#include "bnd/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace bnd {

Cost checked_add(Cost a, Cost b) {
  if (a < 0 || b < 0) throw std::invalid_argument("checked_add: negative cost");
  if (a > std::numeric_limits<Cost>::max() - b)
    throw std::overflow_error("cost aggregation overflow");
  return a + b;
}

const Edge& BiGraph::edge(EdgeId id) const {
  for (const Edge& e : edges)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

ValidationReport validate(const BiGraph& g) {
  ValidationReport report;
  if (g.node_count <= 0) report.violations.push_back("node_count must be positive");
  std::set<EdgeId> seen;
  for (const Edge& e : g.edges) {
    std::string tag = "edge " + std::to_string(e.id) + ": ";
    if (e.u == e.v) report.violations.push_back(tag + "self-loop");
    if (e.c < 0 || e.d < 0) report.violations.push_back(tag + "negative cost");
    if (e.u < 0 || e.u >= g.node_count || e.v < 0 || e.v >= g.node_count)
      report.violations.push_back(tag + "dangling endpoint");
    if (!seen.insert(e.id).second)
      report.violations.push_back(tag + "duplicate edge id");
  }
  return report;
}

namespace {

// Longest d-distance reachable from `start` within the tree's adjacency.
Cost tree_eccentricity(const std::vector<std::vector<std::pair<NodeId, Cost>>>& adj,
                       NodeId start) {
  Cost best = 0;
  std::vector<std::pair<NodeId, std::pair<NodeId, Cost>>> stack;  // (node, (parent, dist))
  stack.push_back({start, {-1, 0}});
  while (!stack.empty()) {
    auto [x, pd] = stack.back();
    stack.pop_back();
    best = std::max(best, pd.second);
    for (auto [y, w] : adj[x])
      if (y != pd.first) stack.push_back({y, {x, checked_add(pd.second, w)}});
  }
  return best;
}

}  // namespace

TreeSolution evaluate_tree(const BiGraph& g, const std::set<EdgeId>& edge_ids) {
  TreeSolution sol;
  sol.edge_ids = edge_ids;
  std::vector<std::vector<std::pair<NodeId, Cost>>> adj(g.node_count);
  for (EdgeId id : edge_ids) {
    const Edge& e = g.edge(id);
    sol.total_c = checked_add(sol.total_c, e.c);
    sol.node_set.insert(e.u);
    sol.node_set.insert(e.v);
    adj[e.u].push_back({e.v, e.d});
    adj[e.v].push_back({e.u, e.d});
  }
  if (sol.node_set.empty()) return sol;  // empty tree: one implicit node, metrics 0
  if (edge_ids.size() != sol.node_set.size() - 1)
    throw std::invalid_argument("edge set is not a tree (cycle present)");
  // Connectivity: walk from any covered node.
  std::set<NodeId> seen;
  std::vector<NodeId> stack = {*sol.node_set.begin()};
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    for (auto [y, w] : adj[x]) stack.push_back(y);
  }
  if (seen.size() != sol.node_set.size())
    throw std::invalid_argument("edge set is disconnected");
  for (NodeId x : sol.node_set)
    sol.diameter_d = std::max(sol.diameter_d, tree_eccentricity(adj, x));
  return sol;
}

TreeSolution steiner_metrics(const BiGraph& g, const TreeSolution& tree,
                             const TerminalSet& terminals) {
  TreeSolution sol = evaluate_tree(g, tree.edge_ids);
  for (NodeId t : terminals.terminals) {
    bool covered = sol.node_set.count(t) > 0 ||
                   (sol.edge_ids.empty() && terminals.terminals.size() == 1);
    if (!covered)
      throw std::invalid_argument("terminal " + std::to_string(t) +
                                  " not covered by tree");
  }
  return sol;
}

void write_edge_list(std::ostream& out, const BiGraph& g, const TerminalSet& terminals) {
  out << "nodes " << g.node_count << " edges " << g.edges.size() << " terminals ";
  bool first = true;
  for (NodeId t : terminals.terminals) {
    if (!first) out << ',';
    out << t;
    first = false;
  }
  if (terminals.terminals.empty()) out << '-';
  out << '\n';
  for (const Edge& e : g.edges)
    out << e.u << ' ' << e.v << ' ' << e.c << ' ' << e.d << '\n';
}

std::pair<BiGraph, TerminalSet> read_edge_list(std::istream& in) {
  BiGraph g;
  TerminalSet terminals;
  std::string line;
  long m = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (m < 0) {
      std::string kw_nodes, kw_edges, kw_terminals, tlist;
      if (!(ls >> kw_nodes >> g.node_count >> kw_edges >> m >> kw_terminals >> tlist) ||
          kw_nodes != "nodes" || kw_edges != "edges" || kw_terminals != "terminals")
        throw std::invalid_argument("bad edge-list header: " + line);
      if (tlist != "-") {
        std::istringstream ts(tlist);
        std::string tok;
        while (std::getline(ts, tok, ','))
          terminals.terminals.insert(std::stoi(tok));
      }
      continue;
    }
    Edge e;
    if (!(ls >> e.u >> e.v >> e.c >> e.d))
      throw std::invalid_argument("bad edge line: " + line);
    e.id = static_cast<EdgeId>(g.edges.size());
    g.edges.push_back(e);
  }
  if (m != static_cast<long>(g.edges.size()))
    throw std::invalid_argument("edge count mismatch in edge list");
  auto report = validate(g);
  if (!report.ok())
    throw std::invalid_argument("invalid graph: " + report.violations.front());
  for (NodeId t : terminals.terminals)
    if (t < 0 || t >= g.node_count)
      throw std::invalid_argument("terminal out of range");
  return {g, terminals};
}

}  // namespace bnd
