#include "bnd/dcst.hpp"

#include <algorithm>

namespace bnd {
namespace dcst {

AuxiliaryGraph build_auxiliary_graph(const BiGraph& g,
                                     const std::vector<Cluster>& clusters,
                                     Cost diameter_bound, Rational eps, PathMode mode) {
  const int k = static_cast<int>(clusters.size());
  if (k < 2) throw std::invalid_argument("auxiliary graph needs at least 2 clusters");
  AuxiliaryGraph aux;
  aux.weight.assign(k, std::vector<std::optional<Cost>>(k));
  aux.witness.assign(k, std::vector<std::optional<PathResult>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::optional<PathResult> path =
          mode == PathMode::Exact
              ? restricted_shortest_path_exact(g, clusters[i].center,
                                               clusters[j].center, diameter_bound)
              : restricted_shortest_path_fptas(g, clusters[i].center,
                                               clusters[j].center, diameter_bound, eps);
      if (path) {
        aux.weight[i][j] = aux.weight[j][i] = path->total_c;
        aux.witness[i][j] = aux.witness[j][i] = path;
      }
    }
  return aux;
}

PhaseState merge_phase(const BiGraph& g, const PhaseState& state,
                       const MatchingResult& matching, const AuxiliaryGraph& aux) {
  PhaseState next;
  next.phase_index = state.phase_index + 1;
  std::vector<bool> merged(state.clusters.size(), false);
  for (auto [i, j] : matching.pairs) {
    const Cluster& a = state.clusters[i];
    const Cluster& b = state.clusters[j];
    const PathResult& path = *aux.witness[i][j];
    Cluster c;
    c.nodes = a.nodes;
    c.nodes.insert(b.nodes.begin(), b.nodes.end());
    c.edge_ids = a.edge_ids;
    c.edge_ids.insert(b.edge_ids.begin(), b.edge_ids.end());
    // Walk the witness path from a's center, collecting its nodes.
    NodeId at = a.center;
    c.nodes.insert(at);
    for (EdgeId id : path.edges) {
      c.edge_ids.insert(id);
      at = g.edge(id).other(at);
      c.nodes.insert(at);
    }
    c.center = std::min(a.center, b.center);
    merged[i] = merged[j] = true;
    next.clusters.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < state.clusters.size(); ++i)
    if (!merged[i]) next.clusters.push_back(state.clusters[i]);
  return next;
}

Result solve(const BiGraph& g, const TerminalSet& terminals, Cost diameter_bound,
             Rational eps, PathMode mode, int matching_exact_threshold) {
  if (diameter_bound < 0) throw std::invalid_argument("dcst: negative diameter bound");
  if (eps <= Rational(0)) throw std::invalid_argument("dcst: eps must be positive");
  if (terminals.terminals.empty())
    throw std::invalid_argument("dcst: empty terminal set");

  Result result;
  if (terminals.terminals.size() == 1) {
    result.tree = TreeSolution{};
    result.cost_guarantee = Rational(1);
    return result;
  }

  PhaseState state;
  state.phase_index = 0;
  for (NodeId t : terminals.terminals) state.clusters.push_back(Cluster{{t}, {}, t});

  while (state.clusters.size() > 1) {
    AuxiliaryGraph aux =
        build_auxiliary_graph(g, state.clusters, diameter_bound, eps, mode);
    const int k = static_cast<int>(state.clusters.size());
    MatchingResult matching =
        min_weight_matching(aux.weight, matching_exact_threshold);
    if (!matching.is_exact) result.matchings_exact = false;
    if (matching.pairs.empty()) {
      // No center pair admits a bounded path: certify and abort.
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (!aux.weight[i][j])
            result.infeasible_pairs.push_back(
                {state.clusters[i].center, state.clusters[j].center});
      return result;
    }
    state = merge_phase(g, state, matching, aux);
    ++result.phases;
  }

  // Shortest-path tree of the final cluster from its center, under d.
  const Cluster& final_cluster = state.clusters.front();
  for (NodeId t : terminals.terminals)
    if (!final_cluster.nodes.count(t))
      throw std::logic_error("dcst: terminal missing from final cluster");
  std::vector<std::vector<const Edge*>> adj(g.node_count);
  for (EdgeId id : final_cluster.edge_ids) {
    const Edge& e = g.edge(id);
    adj[e.u].push_back(&e);
    adj[e.v].push_back(&e);
  }
  std::vector<std::optional<Cost>> dist(g.node_count);
  std::vector<EdgeId> parent_edge(g.node_count, -1);
  std::vector<bool> done(g.node_count, false);
  dist[final_cluster.center] = 0;
  for (;;) {
    int best = -1;
    for (NodeId v : final_cluster.nodes)
      if (!done[v] && dist[v] && (best < 0 || *dist[v] < *dist[best])) best = v;
    if (best < 0) break;
    done[best] = true;
    for (const Edge* e : adj[best]) {
      NodeId to = e->other(best);
      Cost nd = checked_add(*dist[best], e->d);
      if (!done[to] &&
          (!dist[to] || nd < *dist[to] ||
           (nd == *dist[to] && e->id < parent_edge[to]))) {
        dist[to] = nd;
        parent_edge[to] = e->id;
      }
    }
  }
  std::set<EdgeId> tree_edges;
  for (NodeId v : final_cluster.nodes)
    if (v != final_cluster.center) {
      if (parent_edge[v] < 0)
        throw std::logic_error("dcst: final cluster is disconnected");
      tree_edges.insert(parent_edge[v]);
    }
  result.tree = evaluate_tree(g, tree_edges);

  auto k0 = static_cast<Cost>(terminals.terminals.size());
  int log_k = 0;
  while ((Cost(1) << log_k) < k0) ++log_k;
  result.cost_guarantee = (Rational(1) + eps) * Rational(log_k);
  if (!result.matchings_exact) result.cost_guarantee = result.cost_guarantee * Rational(2);
  return result;
}

}  // namespace dcst
}  // namespace bnd
