#include "bnd/uni_solvers.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace bnd {

TreeSolution mst(const BiGraph& g, const CostSelector& sel) {
  std::vector<Edge> order = g.edges;
  std::sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
    Rational wa = sel.weight(a), wb = sel.weight(b);
    if (wa != wb) return wa < wb;
    return a.id < b.id;
  });
  std::vector<int> parent(g.node_count);
  for (int i = 0; i < g.node_count; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<EdgeId> chosen;
  for (const Edge& e : order) {
    int a = find(e.u), b = find(e.v);
    if (a == b) continue;
    parent[a] = b;
    chosen.insert(e.id);
  }
  if (static_cast<int>(chosen.size()) != g.node_count - 1)
    throw std::invalid_argument("mst: graph is disconnected");
  return evaluate_tree(g, chosen);
}

std::vector<std::vector<std::optional<Rational>>> apsp(const BiGraph& g,
                                                       const CostSelector& sel) {
  const int n = g.node_count;
  std::vector<std::vector<std::optional<Rational>>> dist(
      n, std::vector<std::optional<Rational>>(n));
  for (int i = 0; i < n; ++i) dist[i][i] = Rational(0);
  for (const Edge& e : g.edges) {
    Rational w = sel.weight(e);
    if (!dist[e.u][e.v] || w < *dist[e.u][e.v]) dist[e.u][e.v] = dist[e.v][e.u] = w;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!dist[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!dist[k][j]) continue;
        Rational through = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || through < *dist[i][j]) dist[i][j] = through;
      }
    }
  return dist;
}

namespace {

// Shortest-path tree rooted at `root` over an adjacency list with rational
// weights; ties go to the smaller incoming edge key for determinism.
struct SptAdj {
  struct Arc {
    int to;
    Rational w;
    int key;  // edge id, or a synthetic key for virtual arcs
  };
  std::vector<std::vector<Arc>> adj;
};

std::vector<int> spt_parent_arcs(const SptAdj& graph, int root,
                                 std::vector<std::optional<Rational>>* dist_out) {
  const int n = static_cast<int>(graph.adj.size());
  std::vector<std::optional<Rational>> dist(n);
  std::vector<int> parent_key(n, -1);
  std::vector<int> parent_node(n, -1);
  std::vector<bool> done(n, false);
  dist[root] = Rational(0);
  for (;;) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && dist[v] && (best < 0 || *dist[v] < *dist[best])) best = v;
    if (best < 0) break;
    done[best] = true;
    for (const auto& arc : graph.adj[best]) {
      Rational nd = *dist[best] + arc.w;
      bool better = !dist[arc.to] || nd < *dist[arc.to];
      bool tie = dist[arc.to] && nd == *dist[arc.to] &&
                 std::make_pair(best, arc.key) <
                     std::make_pair(parent_node[arc.to], parent_key[arc.to]);
      if (!done[arc.to] && (better || tie)) {
        dist[arc.to] = nd;
        parent_key[arc.to] = arc.key;
        parent_node[arc.to] = best;
      }
    }
  }
  if (dist_out) *dist_out = dist;
  return parent_key;
}

}  // namespace

TreeSolution min_diameter_spanning_tree(const BiGraph& g, const CostSelector& sel) {
  const int n = g.node_count;
  if (n == 1) return TreeSolution{};
  SptAdj base;
  base.adj.resize(n);
  for (const Edge& e : g.edges) {
    base.adj[e.u].push_back({e.v, sel.weight(e), e.id});
    base.adj[e.v].push_back({e.u, sel.weight(e), e.id});
  }

  std::optional<TreeSolution> best;
  auto diam = [&](const std::set<EdgeId>& ids) -> std::optional<Rational> {
    // sel-diameter of the tree, by eccentricity from each node over sel weights.
    std::vector<std::vector<std::pair<int, Rational>>> adj(n);
    for (EdgeId id : ids) {
      const Edge& e = g.edge(id);
      adj[e.u].push_back({e.v, sel.weight(e)});
      adj[e.v].push_back({e.u, sel.weight(e)});
    }
    Rational best_ecc(0);
    for (int s = 0; s < n; ++s) {
      std::vector<std::tuple<int, int, Rational>> stack = {{s, -1, Rational(0)}};
      while (!stack.empty()) {
        auto [x, par, dx] = stack.back();
        stack.pop_back();
        if (best_ecc < dx) best_ecc = dx;
        for (auto& [y, w] : adj[x])
          if (y != par) stack.push_back({y, x, dx + w});
      }
    }
    return best_ecc;
  };
  std::optional<Rational> best_diam;
  auto consider = [&](const std::set<EdgeId>& ids) {
    if (static_cast<int>(ids.size()) != n - 1) return;
    Rational d = *diam(ids);
    if (!best || d < *best_diam ||
        (d == *best_diam && ids < best->edge_ids)) {
      best = evaluate_tree(g, ids);
      best_diam = d;
    }
  };

  // Vertex-rooted shortest-path trees.
  for (int r = 0; r < n; ++r) {
    std::vector<std::optional<Rational>> dist;
    std::vector<int> keys = spt_parent_arcs(base, r, &dist);
    std::set<EdgeId> ids;
    for (int v = 0; v < n; ++v)
      if (v != r && keys[v] >= 0) ids.insert(keys[v]);
    consider(ids);
  }

  // Split-point candidates on every edge: the absolute 1-center may lie
  // inside an edge, at an equalization point of two vertex distances.
  auto dists_from = [&](int r) {
    std::vector<std::optional<Rational>> dist;
    spt_parent_arcs(base, r, &dist);
    return dist;
  };
  for (const Edge& e : g.edges) {
    auto du = dists_from(e.u);
    auto dv = dists_from(e.v);
    Rational w = sel.weight(e);
    std::vector<Rational> candidates;
    for (int x = 0; x < n; ++x) {
      if (!du[x] || !dv[x]) continue;
      Rational lam = (*dv[x] - *du[x] + w) / Rational(2);
      if (Rational(0) < lam && lam < w) candidates.push_back(lam);
    }
    for (const Rational& lam : candidates) {
      // Virtual split node z on edge e at distance lam from u.
      SptAdj ext = base;
      int z = n;
      ext.adj.resize(n + 1);
      int vkey = -2;  // below all real edge ids so ties resolve consistently
      ext.adj[z].push_back({e.u, lam, vkey});
      ext.adj[z].push_back({e.v, w - lam, vkey});
      ext.adj[e.u].push_back({z, lam, vkey});
      ext.adj[e.v].push_back({z, w - lam, vkey});
      std::vector<std::optional<Rational>> dist;
      std::vector<int> keys = spt_parent_arcs(ext, z, &dist);
      std::set<EdgeId> ids;
      bool via_u = false, via_v = false;
      for (int v2 = 0; v2 < n; ++v2) {
        if (keys[v2] == vkey) {
          (v2 == e.u ? via_u : via_v) = true;
        } else if (keys[v2] >= 0) {
          ids.insert(keys[v2]);
        }
      }
      if (via_u && via_v) ids.insert(e.id);  // z sat on e; restore the real edge
      consider(ids);
    }
  }

  if (!best) throw std::invalid_argument("min_diameter_spanning_tree: disconnected graph");
  return *best;
}

namespace {

struct RspState {
  Cost cost;
  NodeId node;
  Cost used;  // budgeted quantity consumed so far
  bool operator>(const RspState& o) const {
    return std::tie(cost, node, used) > std::tie(o.cost, o.node, o.used);
  }
};

}  // namespace

std::optional<PathResult> restricted_shortest_path_exact(const BiGraph& g, NodeId s,
                                                         NodeId t, Cost budget) {
  if (budget < 0) throw std::invalid_argument("rsp: negative budget");
  if (s == t) return PathResult{};
  // Dijkstra over (node, d-used) states minimizing c; handles d = 0 edges.
  std::map<std::pair<NodeId, Cost>, Cost> dist;
  std::map<std::pair<NodeId, Cost>, std::pair<std::pair<NodeId, Cost>, EdgeId>> parent;
  std::priority_queue<RspState, std::vector<RspState>, std::greater<>> pq;
  dist[{s, 0}] = 0;
  pq.push({0, s, 0});
  std::vector<std::vector<const Edge*>> adj(g.node_count);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(&e);
    adj[e.v].push_back(&e);
  }
  while (!pq.empty()) {
    RspState st = pq.top();
    pq.pop();
    auto it = dist.find({st.node, st.used});
    if (it == dist.end() || it->second != st.cost) continue;
    if (st.node == t) {
      PathResult res;
      std::pair<NodeId, Cost> cur = {st.node, st.used};
      while (cur.first != s || cur.second != 0) {
        auto [prev, eid] = parent.at(cur);
        res.edges.push_back(eid);
        cur = prev;
      }
      std::reverse(res.edges.begin(), res.edges.end());
      res.total_c = st.cost;
      res.total_d = st.used;
      return res;
    }
    for (const Edge* e : adj[st.node]) {
      Cost nu = st.used + e->d;
      if (nu > budget) continue;
      Cost nc = checked_add(st.cost, e->c);
      NodeId to = e->other(st.node);
      auto key = std::make_pair(to, nu);
      auto dit = dist.find(key);
      if (dit == dist.end() || nc < dit->second) {
        dist[key] = nc;
        parent[key] = {{st.node, st.used}, e->id};
        pq.push({nc, to, nu});
      }
    }
  }
  return std::nullopt;
}

namespace {

// Min d-length s-t path with scaled c-cost at most `cap`, via Dijkstra over
// (node, scaled-cost-used) states. Returns per-cap-value best d and parents.
struct ScaledDp {
  // dist[v][b]: min d with scaled cost exactly b consumed; -1 = unreached.
  std::vector<std::vector<Cost>> dist;
  std::vector<std::vector<std::pair<std::pair<NodeId, Cost>, EdgeId>>> parent;
};

ScaledDp scaled_rsp(const BiGraph& g, NodeId s, const std::vector<Cost>& scaled,
                    Cost cap) {
  ScaledDp dp;
  dp.dist.assign(g.node_count, std::vector<Cost>(cap + 1, -1));
  dp.parent.assign(g.node_count,
                   std::vector<std::pair<std::pair<NodeId, Cost>, EdgeId>>(
                       cap + 1, {{-1, -1}, -1}));
  std::vector<std::vector<const Edge*>> adj(g.node_count);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(&e);
    adj[e.v].push_back(&e);
  }
  std::priority_queue<RspState, std::vector<RspState>, std::greater<>> pq;
  dp.dist[s][0] = 0;
  pq.push({0, s, 0});
  while (!pq.empty()) {
    RspState st = pq.top();  // st.cost = d-length, st.used = scaled c
    pq.pop();
    if (dp.dist[st.node][st.used] != st.cost) continue;
    for (const Edge* e : adj[st.node]) {
      Cost nb = st.used + scaled[e->id];
      if (nb > cap) continue;
      Cost nd = checked_add(st.cost, e->d);
      NodeId to = e->other(st.node);
      if (dp.dist[to][nb] < 0 || nd < dp.dist[to][nb]) {
        dp.dist[to][nb] = nd;
        dp.parent[to][nb] = {{st.node, st.used}, e->id};
        pq.push({nd, to, nb});
      }
    }
  }
  return dp;
}

std::vector<Cost> scale_costs(const BiGraph& g, Cost lambda, const Rational& eps,
                              int n_minus_1) {
  // floor(c_e / theta) with theta = lambda*eps/(n-1), in exact integers.
  using i128 = __int128;
  std::vector<Cost> scaled(g.edges.size());
  i128 num = i128(n_minus_1) * eps.den();
  i128 den = i128(lambda) * eps.num();
  for (const Edge& e : g.edges) scaled[e.id] = static_cast<Cost>(i128(e.c) * num / den);
  return scaled;
}

std::optional<PathResult> extract_path(const BiGraph& g, const ScaledDp& dp, NodeId s,
                                       NodeId t, Cost bucket) {
  PathResult res;
  std::pair<NodeId, Cost> cur = {t, bucket};
  while (cur.first != s || cur.second != 0) {
    auto [prev, eid] = dp.parent[cur.first][cur.second];
    if (eid < 0) return std::nullopt;
    res.edges.push_back(eid);
    res.total_c = checked_add(res.total_c, g.edge(eid).c);
    res.total_d = checked_add(res.total_d, g.edge(eid).d);
    cur = prev;
  }
  std::reverse(res.edges.begin(), res.edges.end());
  return res;
}

}  // namespace

std::optional<PathResult> restricted_shortest_path_fptas(const BiGraph& g, NodeId s,
                                                         NodeId t, Cost budget,
                                                         Rational eps) {
  if (eps <= Rational(0)) throw std::invalid_argument("rsp fptas: eps must be positive");
  if (budget < 0) throw std::invalid_argument("rsp fptas: negative budget");
  if (s == t) return PathResult{};
  const int n1 = g.node_count - 1;  // max path length in edges

  // Zero-cost optimum: min-d path over c = 0 edges alone.
  {
    std::vector<Cost> indicator(g.edges.size());
    for (const Edge& e : g.edges) indicator[e.id] = e.c > 0 ? 1 : 0;
    ScaledDp dp = scaled_rsp(g, s, indicator, 0);
    if (dp.dist[t][0] >= 0 && dp.dist[t][0] <= budget) return extract_path(g, dp, s, t, 0);
  }
  // Feasibility regardless of c.
  {
    std::vector<Cost> zero(g.edges.size(), 0);
    ScaledDp dp = scaled_rsp(g, s, zero, 0);
    if (dp.dist[t][0] < 0 || dp.dist[t][0] > budget) return std::nullopt;
  }

  Cost c_hi = 0;
  for (const Edge& e : g.edges) c_hi = checked_add(c_hi, e.c);
  const Cost test_cap = (Rational(n1) / eps).floor();

  auto test_low = [&](Cost lambda) {
    std::vector<Cost> scaled = scale_costs(g, lambda, eps, n1);
    ScaledDp dp = scaled_rsp(g, s, scaled, test_cap);
    for (Cost b = 0; b <= test_cap; ++b)
      if (dp.dist[t][b] >= 0 && dp.dist[t][b] <= budget) return true;
    return false;
  };

  // Invariant: lb <= OPT <= ub. A LOW probe must shrink ub strictly, so
  // lambda is capped below ub/(1+eps); when the window is too tight to split
  // we probe lb itself and a LOW there already gives OPT <= lb*(1+eps) <= 2lb.
  Rational growth = Rational(1) + eps;
  Cost lb = 1, ub = std::max<Cost>(c_hi, 1);
  while (ub >= 2 * lb) {
    Cost lambda = static_cast<Cost>(
        std::sqrt(static_cast<double>(lb) * static_cast<double>(ub)));
    Cost lambda_max = (Rational(ub) / growth).ceil() - 1;
    lambda = std::clamp(lambda, lb, std::max(lb, lambda_max));
    if (test_low(lambda)) {
      Cost new_ub = (Rational(lambda) * growth).floor();
      if (new_ub >= ub) break;
      ub = new_ub;
    } else {
      lb = lambda + 1;
    }
  }

  const Cost final_cap = (Rational(2) * Rational(n1) / eps).floor();
  std::vector<Cost> scaled = scale_costs(g, lb, eps, n1);
  ScaledDp dp = scaled_rsp(g, s, scaled, final_cap);
  for (Cost b = 0; b <= final_cap; ++b)
    if (dp.dist[t][b] >= 0 && dp.dist[t][b] <= budget) return extract_path(g, dp, s, t, b);
  return std::nullopt;
}

namespace {


}  // namespace

MatchingResult min_weight_matching(
    const std::vector<std::vector<std::optional<Cost>>>& weights, int exact_threshold) {
  const int m = static_cast<int>(weights.size());
  if (m < 2) throw std::invalid_argument("matching needs at least 2 nodes");

  MatchingResult result;
  if (m <= exact_threshold) {
    // Subset DP: maximize cardinality, then minimize weight.
    struct Entry {
      int count = 0;
      Cost weight = 0;
      int partner = -2;  // for the lowest set bit: -1 = unmatched, else node
    };
    std::vector<Entry> dp(std::size_t(1) << m);
    for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
      int i = std::countr_zero(mask);
      Entry best = dp[mask ^ (1u << i)];
      best.partner = -1;
      for (int j = i + 1; j < m; ++j) {
        if (!(mask & (1u << j)) || !weights[i][j]) continue;
        const Entry& rest = dp[mask ^ (1u << i) ^ (1u << j)];
        Entry cand{rest.count + 1, checked_add(rest.weight, *weights[i][j]), j};
        if (cand.count > best.count ||
            (cand.count == best.count && cand.weight < best.weight))
          best = cand;
      }
      dp[mask] = best;
    }
    std::uint32_t mask = (m == 32 ? ~0u : (1u << m) - 1);
    while (mask) {
      int i = std::countr_zero(mask);
      int j = dp[mask].partner;
      if (j >= 0) {
        result.pairs.push_back({i, j});
        result.total_weight = checked_add(result.total_weight, *weights[i][j]);
        mask ^= (1u << i) | (1u << j);
      } else {
        mask ^= 1u << i;
      }
    }
    result.is_exact = true;
  } else {
    std::vector<bool> taken(m, false);
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          if (taken[i] || taken[j] || !weights[i][j]) continue;
          if (bi < 0 || *weights[i][j] < *weights[bi][bj]) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) break;
      taken[bi] = taken[bj] = true;
      result.pairs.push_back({bi, bj});
      result.total_weight = checked_add(result.total_weight, *weights[bi][bj]);
    }
    result.is_exact = false;
  }
  return result;
}

}  // namespace bnd
