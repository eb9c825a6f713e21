#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnd/graph.hpp"
#include "bnd/rational.hpp"

namespace bnd {

// Chain of parallel edge pairs encoding an equal-sum split of `values`:
// pair i carries (c=t_i, d=0) and (c=0, d=t_i), so a spanning tree with
// total_c <= H and diameter_d <= H exists iff the multiset splits evenly.
struct PartitionGadget {
  BiGraph graph;               // nodes 0..n, edge ids 2i / 2i+1 for pair i
  std::string sp_description;  // parse_sp-compatible text of the same chain
  Rational half_sum;           // H = (sum t_i) / 2
};
PartitionGadget gen_partition_gadget(const std::vector<Cost>& values);

// Set-cover gadget: element nodes, set nodes hanging off an enforcer node,
// plus a two-edge path at the enforcer. Diameter-4 Steiner trees correspond
// to covers of equal c-cost. "Infinite" edges are simply omitted.
struct SetCoverGadget {
  BiGraph graph;
  TerminalSet terminals;  // elements, enforcer, both path nodes
  NodeId enforcer = -1;
  std::vector<NodeId> element_nodes;  // element i -> node id
  std::vector<NodeId> set_nodes;      // set j -> node id
};
SetCoverGadget gen_setcover_gadget(int universe_size,
                                   const std::vector<std::pair<Cost, std::vector<int>>>& sets);

// Connected random multigraph with m >= n-1 edges, costs uniform in
// [0, c_max] x [0, d_max]; deterministic per seed.
BiGraph gen_random(int n, int m, Cost c_max, Cost d_max, std::uint64_t seed);

}  // namespace bnd
