#include "bnd/sp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

namespace bnd {
namespace sp {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("sp parse: unexpected end");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("sp parse: expected '") + c + "' at " +
                                  std::to_string(pos));
    ++pos;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string w = text.substr(start, pos - start);
    for (char& ch : w) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return w;
  }
  Cost number() {
    skip_ws();
    // optional "name=" label, as in edge(0,1,c=1,d=1)
    std::size_t save = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos < text.size() && text[pos] == '=')
      ++pos;
    else
      pos = save;
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw std::invalid_argument("sp parse: expected number");
    return std::stoll(text.substr(start, pos - start));
  }

  std::unique_ptr<SPParseTree> node() {
    peek();
    std::string kw = word();
    auto n = std::make_unique<SPParseTree>();
    if (kw == "e" || kw == "edge") {
      expect('(');
      std::vector<Cost> nums;
      nums.push_back(number());
      while (peek() == ',') {
        expect(',');
        nums.push_back(number());
      }
      expect(')');
      if (nums.size() != 2 && nums.size() != 4)
        throw std::invalid_argument("sp parse: E takes (c,d) or (u,v,c,d)");
      n->kind = SPParseTree::Kind::Leaf;
      n->leaf.c = nums[nums.size() - 2];
      n->leaf.d = nums[nums.size() - 1];
      if (n->leaf.c < 0 || n->leaf.d < 0)
        throw std::invalid_argument("sp parse: negative edge cost");
      return n;
    }
    if (kw == "s" || kw == "series" || kw == "p" || kw == "parallel") {
      n->kind = (kw == "s" || kw == "series") ? SPParseTree::Kind::Series
                                              : SPParseTree::Kind::Parallel;
      expect('(');
      n->left = node();
      expect(',');
      n->right = node();
      expect(')');
      return n;
    }
    throw std::invalid_argument("sp parse: expected edge, series or parallel at " +
                                std::to_string(pos));
  }
};

void flatten(SPParseTree& t, NodeId s, NodeId u, int& next_node, BiGraph& g) {
  switch (t.kind) {
    case SPParseTree::Kind::Leaf: {
      t.leaf.u = s;
      t.leaf.v = u;
      t.leaf.id = static_cast<EdgeId>(g.edges.size());
      g.edges.push_back(t.leaf);
      break;
    }
    case SPParseTree::Kind::Series: {
      NodeId mid = next_node++;
      flatten(*t.left, s, mid, next_node, g);
      flatten(*t.right, mid, u, next_node, g);
      break;
    }
    case SPParseTree::Kind::Parallel: {
      flatten(*t.left, s, u, next_node, g);
      flatten(*t.right, s, u, next_node, g);
      break;
    }
  }
}

}  // namespace

SPInstance parse_sp(const std::string& description) {
  Parser parser(description);
  SPInstance inst;
  inst.root = parser.node();
  parser.skip_ws();
  if (parser.pos != description.size())
    throw std::invalid_argument("sp parse: trailing input");
  inst.source = 0;
  inst.sink = 1;
  int next_node = 2;
  flatten(*inst.root, inst.source, inst.sink, next_node, inst.graph);
  inst.graph.node_count = next_node;
  return inst;
}

std::string format_sp(const SPParseTree& tree) {
  switch (tree.kind) {
    case SPParseTree::Kind::Leaf:
      return "E(" + std::to_string(tree.leaf.u) + "," + std::to_string(tree.leaf.v) +
             "," + std::to_string(tree.leaf.c) + "," + std::to_string(tree.leaf.d) + ")";
    case SPParseTree::Kind::Series:
      return "S(" + format_sp(*tree.left) + "," + format_sp(*tree.right) + ")";
    case SPParseTree::Kind::Parallel:
      return "P(" + format_sp(*tree.left) + "," + format_sp(*tree.right) + ")";
  }
  throw std::logic_error("unreachable");
}

namespace {

// One DP table entry. Tuple components are upper bounds on the distances a
// realizing forest attains: ds/dt are terminal eccentricities within their
// trees, dst the inter-terminal distance (together only, else -1 unused).
struct Entry {
  Cost ds = 0, dt = 0, dst = 0;
  Cost cost = 0;
  int tag = 0;       // composition case, for reconstruction
  int li = -1, ri = -1;  // child entry indices
};

enum Tag {
  kLeafUse,
  kLeafSkip,
  kSerTT,  // together x together -> together
  kSerTS,  // together x separate -> separate
  kSerST,  // separate x together -> separate
  kParTS,  // together x separate -> together
  kParST,  // separate x together -> together
  kParSS,  // separate x separate -> separate
};

struct Table {
  std::vector<Entry> together;
  std::vector<Entry> separate;
};

// Keep only nondominated entries (componentwise tuple and cost).
void prune(std::vector<Entry>& list, bool with_dst) {
  std::sort(list.begin(), list.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.cost, a.ds, a.dt, a.dst) < std::tie(b.cost, b.ds, b.dt, b.dst);
  });
  std::vector<Entry> kept;
  for (const Entry& e : list) {
    bool dominated = false;
    for (const Entry& k : kept)
      if (k.cost <= e.cost && k.ds <= e.ds && k.dt <= e.dt &&
          (!with_dst || k.dst <= e.dst)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(e);
  }
  list = std::move(kept);
}

struct Dp {
  const BiGraph& graph;
  Cost cap;  // diameter bound; every tuple component stays within it
  const std::vector<Cost>& costs;
  std::vector<Table> tables;                 // post-order
  std::vector<const SPParseTree*> nodes;     // parallel to tables

  int run(const SPParseTree& t) {
    int li = -1, ri = -1;
    if (t.kind != SPParseTree::Kind::Leaf) {
      li = run(*t.left);
      ri = run(*t.right);
    }
    Table table;
    if (t.kind == SPParseTree::Kind::Leaf) {
      if (t.leaf.d <= cap)
        table.together.push_back(
            {t.leaf.d, t.leaf.d, t.leaf.d, costs[t.leaf.id], kLeafUse, -1, -1});
      table.separate.push_back({0, 0, -1, 0, kLeafSkip, -1, -1});
    } else {
      const Table& L = tables[li];
      const Table& R = tables[ri];
      bool series = t.kind == SPParseTree::Kind::Series;
      for (int i = 0; i < static_cast<int>(L.together.size()); ++i)
        for (int j = 0; j < static_cast<int>(R.together.size()); ++j) {
          const Entry& a = L.together[i];
          const Entry& b = R.together[j];
          if (!series) continue;  // parallel together x together closes a cycle
          if (a.dt + b.ds > cap) continue;
          Entry e;
          e.ds = std::max(a.ds, a.dst + b.ds);
          e.dt = std::max(b.dt, b.dst + a.dt);
          e.dst = a.dst + b.dst;
          if (e.ds > cap || e.dt > cap || e.dst > cap) continue;
          e.cost = checked_add(a.cost, b.cost);
          e.tag = kSerTT;
          e.li = i;
          e.ri = j;
          table.together.push_back(e);
        }
      for (int i = 0; i < static_cast<int>(L.together.size()); ++i)
        for (int j = 0; j < static_cast<int>(R.separate.size()); ++j) {
          const Entry& a = L.together[i];
          const Entry& b = R.separate[j];
          Entry e;
          if (series) {
            // a's tree absorbs b's source-side tree at the shared middle node.
            if (a.dt + b.ds > cap) continue;
            e.ds = std::max(a.ds, a.dst + b.ds);
            e.dt = b.dt;
            e.tag = kSerTS;
            if (e.ds > cap) continue;
            e.dst = -1;
            e.cost = checked_add(a.cost, b.cost);
            e.li = i;
            e.ri = j;
            table.separate.push_back(e);
          } else {
            // b's two trees hang off a's tree at the shared terminals.
            if (a.ds + b.ds > cap || a.dt + b.dt > cap) continue;
            if (b.ds + a.dst + b.dt > cap) continue;
            e.ds = std::max({a.ds, b.ds, a.dst + b.dt});
            e.dt = std::max({a.dt, b.dt, a.dst + b.ds});
            e.dst = a.dst;
            if (e.ds > cap || e.dt > cap) continue;
            e.cost = checked_add(a.cost, b.cost);
            e.tag = kParTS;
            e.li = i;
            e.ri = j;
            table.together.push_back(e);
          }
        }
      for (int i = 0; i < static_cast<int>(L.separate.size()); ++i)
        for (int j = 0; j < static_cast<int>(R.together.size()); ++j) {
          const Entry& a = L.separate[i];
          const Entry& b = R.together[j];
          Entry e;
          if (series) {
            if (a.dt + b.ds > cap) continue;
            e.ds = a.ds;
            e.dt = std::max(b.dt, b.dst + a.dt);
            if (e.dt > cap) continue;
            e.dst = -1;
            e.cost = checked_add(a.cost, b.cost);
            e.tag = kSerST;
            e.li = i;
            e.ri = j;
            table.separate.push_back(e);
          } else {
            if (a.ds + b.ds > cap || a.dt + b.dt > cap) continue;
            if (a.ds + b.dst + a.dt > cap) continue;
            e.ds = std::max({b.ds, a.ds, b.dst + a.dt});
            e.dt = std::max({b.dt, a.dt, b.dst + a.ds});
            e.dst = b.dst;
            if (e.ds > cap || e.dt > cap) continue;
            e.cost = checked_add(a.cost, b.cost);
            e.tag = kParST;
            e.li = i;
            e.ri = j;
            table.together.push_back(e);
          }
        }
      if (!series) {
        for (int i = 0; i < static_cast<int>(L.separate.size()); ++i)
          for (int j = 0; j < static_cast<int>(R.separate.size()); ++j) {
            const Entry& a = L.separate[i];
            const Entry& b = R.separate[j];
            if (a.ds + b.ds > cap || a.dt + b.dt > cap) continue;
            Entry e;
            e.ds = std::max(a.ds, b.ds);
            e.dt = std::max(a.dt, b.dt);
            e.dst = -1;
            e.cost = checked_add(a.cost, b.cost);
            e.tag = kParSS;
            e.li = i;
            e.ri = j;
            table.separate.push_back(e);
          }
      }
      // Series separate x separate strands the middle node in a tree with
      // no terminal of the composed graph; never extendable to a spanning tree.
    }
    prune(table.together, true);
    prune(table.separate, false);
    tables.push_back(std::move(table));
    nodes.push_back(&t);
    return static_cast<int>(tables.size()) - 1;
  }

  void reconstruct(int node_idx, bool together, int entry_idx,
                   std::set<EdgeId>& out) const {
    const Table& table = tables[node_idx];
    const Entry& e = together ? table.together[entry_idx] : table.separate[entry_idx];
    const SPParseTree& t = *nodes[node_idx];
    if (t.kind == SPParseTree::Kind::Leaf) {
      if (e.tag == kLeafUse) out.insert(t.leaf.id);
      return;
    }
    // Children sit at contiguous post-order indices: left subtree ends at
    // node_idx - size(right) - 1. Recompute child indices by re-walking.
    int ri = node_idx - 1;
    int li = ri - subtree_size(*t.right);
    switch (e.tag) {
      case kSerTT:
        reconstruct(li, true, e.li, out);
        reconstruct(ri, true, e.ri, out);
        break;
      case kSerTS:
        reconstruct(li, true, e.li, out);
        reconstruct(ri, false, e.ri, out);
        break;
      case kSerST:
        reconstruct(li, false, e.li, out);
        reconstruct(ri, true, e.ri, out);
        break;
      case kParTS:
        reconstruct(li, true, e.li, out);
        reconstruct(ri, false, e.ri, out);
        break;
      case kParST:
        reconstruct(li, false, e.li, out);
        reconstruct(ri, true, e.ri, out);
        break;
      case kParSS:
        reconstruct(li, false, e.li, out);
        reconstruct(ri, false, e.ri, out);
        break;
      default:
        throw std::logic_error("sp reconstruct: bad tag");
    }
  }

  static int subtree_size(const SPParseTree& t) {
    if (t.kind == SPParseTree::Kind::Leaf) return 1;
    return 1 + subtree_size(*t.left) + subtree_size(*t.right);
  }
};

std::vector<Cost> effective_costs(const SPInstance& inst, const std::vector<Cost>* costs) {
  if (costs) {
    if (costs->size() != inst.graph.edges.size())
      throw std::invalid_argument("sp dp: cost override size mismatch");
    return *costs;
  }
  std::vector<Cost> out(inst.graph.edges.size());
  for (const Edge& e : inst.graph.edges) out[e.id] = e.c;
  return out;
}

}  // namespace

std::optional<DpSolution> dp_min_cost_given_diameter(const SPInstance& inst,
                                                     Cost diameter_bound,
                                                     const std::vector<Cost>* costs) {
  if (diameter_bound < 0) throw std::invalid_argument("sp dp: negative diameter bound");
  std::vector<Cost> cvec = effective_costs(inst, costs);
  Dp dp{inst.graph, diameter_bound, cvec, {}, {}};
  int root = dp.run(*inst.root);
  const std::vector<Entry>& final_states = dp.tables[root].together;
  if (final_states.empty()) return std::nullopt;
  int best = 0;
  for (int i = 1; i < static_cast<int>(final_states.size()); ++i)
    if (final_states[i].cost < final_states[best].cost) best = i;
  DpSolution sol;
  sol.value = final_states[best].cost;
  dp.reconstruct(root, true, best, sol.edge_ids);
  return sol;
}

std::optional<DpSolution> dp_min_diameter_given_cost(const SPInstance& inst,
                                                     Cost cost_budget,
                                                     const std::vector<Cost>* costs) {
  if (cost_budget < 0) throw std::invalid_argument("sp dp: negative cost budget");
  Cost d_hi = 0;
  for (const Edge& e : inst.graph.edges) d_hi = checked_add(d_hi, e.d);
  auto feasible = [&](Cost diameter) {
    auto sol = dp_min_cost_given_diameter(inst, diameter, costs);
    return sol && sol->value <= cost_budget;
  };
  if (!feasible(d_hi)) return std::nullopt;
  Cost lo = 0, hi = d_hi;  // feasible(hi) true
  while (lo < hi) {
    Cost mid = lo + (hi - lo) / 2;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto sol = dp_min_cost_given_diameter(inst, hi, costs);
  DpSolution out;
  out.edge_ids = sol->edge_ids;
  out.value = hi;
  return out;
}

namespace {

std::vector<Cost> scale_costs(const SPInstance& inst, Cost lambda, const Rational& eps) {
  // floor(c_e / theta) with theta = lambda*eps/(n-1), exactly in integers.
  using i128 = __int128;
  const int n1 = inst.graph.node_count - 1;
  std::vector<Cost> scaled(inst.graph.edges.size());
  i128 num = i128(n1) * eps.den();
  i128 den = i128(lambda) * eps.num();
  for (const Edge& e : inst.graph.edges)
    scaled[e.id] = static_cast<Cost>(i128(e.c) * num / den);
  return scaled;
}

void require_unit_fraction(const Rational& eps) {
  if (eps <= Rational(0) || eps.num() != 1)
    throw std::invalid_argument("eps must be a positive unit fraction (1/eps integral)");
}

}  // namespace

TestOutcome test_procedure(const SPInstance& inst, Cost diameter_bound, Cost lambda,
                           Rational eps) {
  if (lambda <= 0) throw std::invalid_argument("test_procedure: lambda must be positive");
  require_unit_fraction(eps);
  const Cost budget = Cost(inst.graph.node_count - 1) * eps.den();  // (n-1)/eps
  std::vector<Cost> scaled = scale_costs(inst, lambda, eps);
  auto sol = dp_min_cost_given_diameter(inst, diameter_bound, &scaled);
  return (sol && sol->value <= budget) ? TestOutcome::Low : TestOutcome::High;
}

std::optional<DpSolution> fpas_dcst(const SPInstance& inst, Cost diameter_bound,
                                    Rational eps) {
  require_unit_fraction(eps);

  // A zero-c-cost bounded tree, when one exists, is exactly optimal.
  {
    std::vector<Cost> indicator(inst.graph.edges.size());
    for (const Edge& e : inst.graph.edges) indicator[e.id] = e.c > 0 ? 1 : 0;
    auto sol = dp_min_cost_given_diameter(inst, diameter_bound, &indicator);
    if (!sol) return std::nullopt;  // no bounded spanning tree at all
    if (sol->value == 0) {
      DpSolution out;
      out.edge_ids = sol->edge_ids;
      out.value = 0;
      return out;
    }
  }

  Cost c_hi = 0;
  for (const Edge& e : inst.graph.edges) c_hi = checked_add(c_hi, e.c);
  Cost lb = 1, ub = std::max<Cost>(c_hi, 1);  // invariant: lb <= OPT_c <= ub

  Rational growth = Rational(1) + eps;
  while (ub >= 2 * lb) {
    Cost lambda = static_cast<Cost>(std::sqrt(static_cast<double>(lb) *
                                              static_cast<double>(ub)));
    // LOW must shrink ub strictly; cap lambda so lambda*(1+eps) < ub, and
    // fall back to lambda = lb when the window is too tight to split.
    Cost lambda_max = (Rational(ub) / growth).ceil() - 1;
    lambda = std::clamp(lambda, lb, std::max(lb, lambda_max));
    if (test_procedure(inst, diameter_bound, lambda, eps) == TestOutcome::High) {
      lb = lambda + 1;
    } else {
      Cost new_ub = (Rational(lambda) * growth).floor();
      if (new_ub >= ub) break;  // lambda == lb: OPT <= lb*(1+eps) <= 2*lb already
      ub = new_ub;
    }
  }

  // Final sweep at theta = lb*eps/(n-1): the minimum scaled-cost bounded tree
  // has true cost at most OPT_c + eps*lb <= (1+eps)*OPT_c.
  std::vector<Cost> scaled = scale_costs(inst, lb, eps);
  auto sol = dp_min_cost_given_diameter(inst, diameter_bound, &scaled);
  if (!sol) return std::nullopt;
  DpSolution out;
  out.edge_ids = sol->edge_ids;
  out.value = 0;
  for (EdgeId id : out.edge_ids)
    out.value = checked_add(out.value, inst.graph.edge(id).c);
  return out;
}

}  // namespace sp
}  // namespace bnd
