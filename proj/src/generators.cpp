#include "bnd/generators.hpp"

#include <random>
#include <stdexcept>

namespace bnd {

PartitionGadget gen_partition_gadget(const std::vector<Cost>& values) {
  if (values.empty()) throw std::invalid_argument("partition gadget: empty multiset");
  PartitionGadget out;
  Cost total = 0;
  out.graph.node_count = static_cast<int>(values.size()) + 1;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    Cost t = values[i];
    if (t < 1) throw std::invalid_argument("partition gadget: values must be >= 1");
    total = checked_add(total, t);
    out.graph.edges.push_back({i, i + 1, t, 0, 2 * i});
    out.graph.edges.push_back({i, i + 1, 0, t, 2 * i + 1});
  }
  out.half_sum = Rational(total, 2);

  // Right-folded chain so parse_sp assigns the same edge ids.
  auto pair_text = [](Cost t) {
    std::string ts = std::to_string(t);
    return "P(E(" + ts + ",0),E(0," + ts + "))";
  };
  std::string desc = pair_text(values.back());
  for (int i = static_cast<int>(values.size()) - 2; i >= 0; --i)
    desc = "S(" + pair_text(values[i]) + "," + desc + ")";
  out.sp_description = desc;
  return out;
}

SetCoverGadget gen_setcover_gadget(
    int universe_size, const std::vector<std::pair<Cost, std::vector<int>>>& sets) {
  if (universe_size < 1 || sets.empty())
    throw std::invalid_argument("set cover gadget: empty instance");
  std::vector<bool> covered(universe_size, false);
  for (const auto& [cost, elems] : sets) {
    if (cost < 0) throw std::invalid_argument("set cover gadget: negative set cost");
    for (int e : elems) {
      if (e < 0 || e >= universe_size)
        throw std::invalid_argument("set cover gadget: element out of range");
      covered[e] = true;
    }
  }
  for (int e = 0; e < universe_size; ++e)
    if (!covered[e])
      throw std::invalid_argument("set cover gadget: element " + std::to_string(e) +
                                  " not covered by any set");

  SetCoverGadget out;
  const int m = static_cast<int>(sets.size());
  out.element_nodes.resize(universe_size);
  for (int e = 0; e < universe_size; ++e) out.element_nodes[e] = e;
  out.set_nodes.resize(m);
  for (int j = 0; j < m; ++j) out.set_nodes[j] = universe_size + j;
  out.enforcer = universe_size + m;
  NodeId p1 = out.enforcer + 1;
  NodeId p2 = out.enforcer + 2;
  out.graph.node_count = universe_size + m + 3;

  EdgeId next_id = 0;
  for (int j = 0; j < m; ++j) {
    out.graph.edges.push_back({out.enforcer, out.set_nodes[j], sets[j].first, 1, next_id++});
    for (int e : sets[j].second)
      out.graph.edges.push_back({out.set_nodes[j], out.element_nodes[e], 0, 1, next_id++});
  }
  out.graph.edges.push_back({out.enforcer, p1, 0, 1, next_id++});
  out.graph.edges.push_back({p1, p2, 0, 1, next_id++});

  for (int e = 0; e < universe_size; ++e) out.terminals.terminals.insert(out.element_nodes[e]);
  out.terminals.terminals.insert(out.enforcer);
  out.terminals.terminals.insert(p1);
  out.terminals.terminals.insert(p2);
  return out;
}

BiGraph gen_random(int n, int m, Cost c_max, Cost d_max, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: need n >= 1");
  if (m < n - 1) throw std::invalid_argument("gen_random: need m >= n-1");
  if (n == 1 && m > 0)
    throw std::invalid_argument("gen_random: single node admits no edges");
  if (c_max < 0 || d_max < 0) throw std::invalid_argument("gen_random: negative cost cap");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Cost> cdist(0, c_max), ddist(0, d_max);
  BiGraph g;
  g.node_count = n;
  EdgeId next_id = 0;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.edges.push_back({pick(rng), v, cdist(rng), ddist(rng), next_id++});
  }
  std::uniform_int_distribution<int> node(0, n - 1);
  while (static_cast<int>(g.edges.size()) < m) {
    int u = node(rng), v = node(rng);
    if (u == v) continue;
    g.edges.push_back({u, v, cdist(rng), ddist(rng), next_id++});
  }
  return g;
}

}  // namespace bnd
