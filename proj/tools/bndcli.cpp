// Command-line surface: generators, solver drivers, guarantee checks, and
// CSV/JSON reports. Exit codes: 0 success, 2 infeasible, 3 cap exceeded,
// 1 internal error.
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnd/dcst.hpp"
#include "bnd/generators.hpp"
#include "bnd/graph.hpp"
#include "bnd/oracle.hpp"
#include "bnd/sp.hpp"
#include "bnd/transforms.hpp"
#include "bnd/uni_solvers.hpp"

namespace {

using nlohmann::json;
using namespace bnd;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitCapExceeded = 3;

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

struct Report {
  std::string algorithm;
  std::string instance;
  std::vector<std::pair<std::string, std::string>> fields;  // ordered

  void add(const std::string& k, const std::string& v) { fields.push_back({k, v}); }
  void add(const std::string& k, Cost v) { add(k, std::to_string(v)); }

  void emit(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      json j;
      j["algorithm"] = algorithm;
      j["instance"] = instance;
      for (const auto& [k, v] : fields) j[k] = v;
      out << j.dump(2) << "\n";
      return;
    }
    out << "algorithm,instance";
    for (const auto& [k, v] : fields) out << "," << k;
    out << "\n" << algorithm << "," << instance;
    for (const auto& [k, v] : fields) out << "," << v;
    out << "\n";
  }
};

std::pair<BiGraph, TerminalSet> load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  auto [g, t] = read_edge_list(in);
  if (t.terminals.empty())
    for (NodeId v = 0; v < g.node_count; ++v) t.terminals.insert(v);
  return {g, t};
}

sp::SPInstance load_sp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sp instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return sp::parse_sp(buf.str());
}

std::string edge_list_string(const std::set<EdgeId>& ids) {
  std::string s;
  for (EdgeId id : ids) {
    if (!s.empty()) s += " ";
    s += std::to_string(id);
  }
  return s;
}

void write_witness(const std::string& path, const std::set<EdgeId>& ids) {
  if (path.empty()) return;
  std::ofstream out(path);
  for (EdgeId id : ids) out << id << "\n";
}

// Recompute the reported metrics from the witness; any mismatch is a bug.
void verify_witness(const BiGraph& g, const std::set<EdgeId>& ids, Cost total_c,
                    Cost diameter_d) {
  TreeSolution t = evaluate_tree(g, ids);
  if (t.total_c != total_c || t.diameter_d != diameter_d)
    throw std::logic_error("witness re-evaluation mismatch");
}

struct CommonOpts {
  std::string instance;
  std::string format = "csv";
  std::string witness_out;
  bool check = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_instance = true) {
  auto* opt = cmd->add_option("--instance", o.instance, "instance file");
  if (needs_instance) opt->required();
  cmd->add_option("--format", o.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--witness-out", o.witness_out, "write witness edge ids here");
  cmd->add_flag("--check", o.check, "compare against the exact oracle when caps allow");
}

std::optional<Cost> oracle_opt_c(const BiGraph& g, const TerminalSet& t, Cost D) {
  auto front = oracle::pareto_front(g, t);
  return oracle::opt_given_budget(front, oracle::BudgetOn::Diameter, D);
}

int run_dcst(const CommonOpts& o, Cost D, const Rational& eps,
             const std::string& path_mode) {
  auto [g, terminals] = load_instance(o.instance);
  dcst::PathMode mode = path_mode == "fptas" ? dcst::PathMode::Fptas
                        : path_mode == "exact"
                            ? dcst::PathMode::Exact
                            : (D <= 10000 ? dcst::PathMode::Exact : dcst::PathMode::Fptas);
  auto t0 = std::chrono::steady_clock::now();
  dcst::Result res = dcst::solve(g, terminals, D, eps, mode);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  Report rep;
  rep.algorithm = "dcst";
  rep.instance = o.instance;
  rep.add("D", D);
  rep.add("eps", eps.str());
  rep.add("phases", static_cast<Cost>(res.phases));
  if (!res.tree) {
    rep.add("status", "infeasible");
    rep.emit(std::cout, o.format);
    return kExitInfeasible;
  }
  verify_witness(g, res.tree->edge_ids, res.tree->total_c, res.tree->diameter_d);
  rep.add("total_c", res.tree->total_c);
  rep.add("diameter_d", res.tree->diameter_d);
  Cost k = static_cast<Cost>(terminals.terminals.size());
  Cost log_k = 0;
  while ((Cost(1) << log_k) < k) ++log_k;
  rep.add("diameter_bound", 2 * log_k * D);
  rep.add("cost_guarantee", res.cost_guarantee.str());
  if (o.check) {
    auto opt = oracle_opt_c(g, terminals, D);
    rep.add("oracle_opt_c", opt ? std::to_string(*opt) : "infeasible");
    if (opt)
      rep.add("cost_factor_ok",
              Rational(res.tree->total_c) <= res.cost_guarantee * Rational(*opt)
                  ? "yes"
                  : "no");
  }
  rep.add("wall_ms", static_cast<Cost>(ms));
  rep.add("witness", edge_list_string(res.tree->edge_ids));
  write_witness(o.witness_out, res.tree->edge_ids);
  rep.emit(std::cout, o.format);
  return kExitOk;
}

int run_parametric(const CommonOpts& o, Cost C, const Rational& gamma) {
  auto [g, terminals] = load_instance(o.instance);
  UnicriterionSolver plug;
  plug.rho = Rational(1);
  plug.criterion = Criterion::TotalCost;
  plug.solve = [](const BiGraph& gg, const TerminalSet&, const CostSelector& sel) {
    return mst(gg, sel);
  };
  auto t0 = std::chrono::steady_clock::now();
  TransformResult res = parametric_search(plug, g, terminals, C, gamma);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  Report rep;
  rep.algorithm = "parametric";
  rep.instance = o.instance;
  rep.add("C", C);
  rep.add("gamma", gamma.str());
  rep.add("solver_calls", static_cast<Cost>(res.solver_calls));
  if (!res.tree) {
    rep.add("status", "infeasible");
    rep.emit(std::cout, o.format);
    return kExitInfeasible;
  }
  verify_witness(g, res.tree->edge_ids, res.tree->total_c, res.tree->diameter_d);
  Cost total_d = 0;
  for (EdgeId id : res.tree->edge_ids) total_d = checked_add(total_d, g.edge(id).d);
  rep.add("total_c", res.tree->total_c);
  rep.add("total_d", total_d);
  rep.add("c_bound", ((Rational(1) + gamma) * Rational(C)).str());
  if (o.check) {
    // exact best total_d among spanning trees with total_c <= C
    std::optional<Cost> opt_d;
    TerminalSet all;
    for (NodeId v = 0; v < g.node_count; ++v) all.terminals.insert(v);
    oracle::enumerate_trees(g, all, [&](const TreeSolution& t) {
      if (static_cast<int>(t.node_set.size()) != g.node_count) return;
      if (t.total_c > C) return;
      Cost td = 0;
      for (EdgeId id : t.edge_ids) td = checked_add(td, g.edge(id).d);
      if (!opt_d || td < *opt_d) opt_d = td;
    });
    rep.add("oracle_opt_d", opt_d ? std::to_string(*opt_d) : "infeasible");
  }
  rep.add("wall_ms", static_cast<Cost>(ms));
  rep.add("witness", edge_list_string(res.tree->edge_ids));
  write_witness(o.witness_out, res.tree->edge_ids);
  rep.emit(std::cout, o.format);
  return kExitOk;
}

BicriteriaSolver dcst_as_solver(const Rational& eps, int terminal_count) {
  Cost k = std::max(terminal_count, 1);
  Cost log_k = 0;
  while ((Cost(1) << log_k) < k) ++log_k;
  BicriteriaSolver s;
  s.criterion_a = Criterion::Diameter;
  s.criterion_b = Criterion::TotalCost;
  s.alpha = Rational(2 * std::max<Cost>(log_k, 1));
  s.beta = (Rational(1) + eps) * Rational(std::max<Cost>(log_k, 1));
  s.solve = [eps](const BiGraph& gg, const TerminalSet& tt,
                  Cost budget) -> std::optional<TreeSolution> {
    auto res = dcst::solve(gg, tt, budget, eps, dcst::PathMode::Exact);
    return res.tree;
  };
  return s;
}

int run_equivalence(const CommonOpts& o, Cost C, const Rational& eps) {
  auto [g, terminals] = load_instance(o.instance);
  BicriteriaSolver inner =
      dcst_as_solver(eps, static_cast<int>(terminals.terminals.size()));
  TransformResult res = bicriteria_equivalence(inner, g, terminals, C);

  Report rep;
  rep.algorithm = "equivalence";
  rep.instance = o.instance;
  rep.add("C", C);
  rep.add("eps", eps.str());
  rep.add("solver_calls", static_cast<Cost>(res.solver_calls));
  rep.add("fallback", res.monotone_fallback ? "yes" : "no");
  if (!res.tree) {
    rep.add("status", "infeasible");
    rep.emit(std::cout, o.format);
    return kExitInfeasible;
  }
  verify_witness(g, res.tree->edge_ids, res.tree->total_c, res.tree->diameter_d);
  rep.add("total_c", res.tree->total_c);
  rep.add("diameter_d", res.tree->diameter_d);
  rep.add("witness", edge_list_string(res.tree->edge_ids));
  write_witness(o.witness_out, res.tree->edge_ids);
  rep.emit(std::cout, o.format);
  return kExitOk;
}

int run_convert(const CommonOpts& o, const Rational& eps) {
  auto [g, terminals] = load_instance(o.instance);
  BicriteriaSolver inner =
      dcst_as_solver(Rational(1), static_cast<int>(terminals.terminals.size()));
  TransformResult res = convert_sum(inner, g, terminals, eps);

  Report rep;
  rep.algorithm = "convert";
  rep.instance = o.instance;
  rep.add("eps", eps.str());
  rep.add("solver_calls", static_cast<Cost>(res.solver_calls));
  if (!res.tree) {
    rep.add("status", "infeasible");
    rep.emit(std::cout, o.format);
    return kExitInfeasible;
  }
  verify_witness(g, res.tree->edge_ids, res.tree->total_c, res.tree->diameter_d);
  rep.add("total_c", res.tree->total_c);
  rep.add("diameter_d", res.tree->diameter_d);
  rep.add("objective_sum",
          std::to_string(checked_add(res.tree->total_c, res.tree->diameter_d)));
  rep.add("witness", edge_list_string(res.tree->edge_ids));
  write_witness(o.witness_out, res.tree->edge_ids);
  rep.emit(std::cout, o.format);
  return kExitOk;
}

int run_spdp(const CommonOpts& o, Cost D, bool exact, const Rational& eps) {
  sp::SPInstance inst = load_sp(o.instance);
  auto t0 = std::chrono::steady_clock::now();
  std::optional<sp::DpSolution> sol =
      exact ? sp::dp_min_cost_given_diameter(inst, D) : sp::fpas_dcst(inst, D, eps);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  Report rep;
  rep.algorithm = exact ? "spdp-exact" : "spdp-fpas";
  rep.instance = o.instance;
  rep.add("D", D);
  if (!exact) rep.add("eps", eps.str());
  if (!sol) {
    rep.add("status", "infeasible");
    rep.emit(std::cout, o.format);
    return kExitInfeasible;
  }
  TreeSolution t = evaluate_tree(inst.graph, sol->edge_ids);
  if (t.diameter_d > D) throw std::logic_error("sp witness violates diameter bound");
  rep.add("total_c", t.total_c);
  rep.add("diameter_d", t.diameter_d);
  if (o.check && !exact) {
    auto best = sp::dp_min_cost_given_diameter(inst, D);
    rep.add("exact_opt_c", best ? std::to_string(best->value) : "infeasible");
  }
  rep.add("wall_ms", static_cast<Cost>(ms));
  rep.add("witness", edge_list_string(sol->edge_ids));
  write_witness(o.witness_out, sol->edge_ids);
  rep.emit(std::cout, o.format);
  return kExitOk;
}

int run_oracle(const CommonOpts& o) {
  auto [g, terminals] = load_instance(o.instance);
  auto front = oracle::pareto_front(g, terminals);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& p : front.points)
      rows.push_back({{"diameter_d", p.diameter_d},
                      {"total_c", p.total_c},
                      {"witness", edge_list_string(p.witness)}});
    json j{{"algorithm", "oracle"}, {"instance", o.instance}, {"front", rows}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "diameter_d,total_c,witness\n";
    for (const auto& p : front.points)
      std::cout << p.diameter_d << "," << p.total_c << "," << edge_list_string(p.witness)
                << "\n";
  }
  return kExitOk;
}

int run_rsp(const CommonOpts& o, NodeId s, NodeId t, Cost D, bool fptas,
            const Rational& eps) {
  auto [g, terminals] = load_instance(o.instance);
  (void)terminals;
  auto res = fptas ? restricted_shortest_path_fptas(g, s, t, D, eps)
                   : restricted_shortest_path_exact(g, s, t, D);
  Report rep;
  rep.algorithm = "rsp";
  rep.instance = o.instance;
  rep.add("s", static_cast<Cost>(s));
  rep.add("t", static_cast<Cost>(t));
  rep.add("D", D);
  rep.add("mode", fptas ? "fptas" : "exact");
  if (!res) {
    rep.add("status", "infeasible");
    rep.emit(std::cout, o.format);
    return kExitInfeasible;
  }
  rep.add("total_c", res->total_c);
  rep.add("total_d", res->total_d);
  std::string path;
  for (EdgeId id : res->edges) {
    if (!path.empty()) path += " ";
    path += std::to_string(id);
  }
  rep.add("witness", path);
  rep.emit(std::cout, o.format);
  return kExitOk;
}

std::vector<Cost> parse_values(const std::string& csv) {
  std::vector<Cost> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicriteria spanning/Steiner tree toolkit"};
  app.require_subcommand(1);

  // --- generators ---
  std::string gen_values, gen_out, gen_sets;
  int gen_n = 6, gen_m = 10, gen_universe = 0;
  Cost gen_cmax = 20, gen_dmax = 20;
  std::uint64_t gen_seed = 1;

  auto* gp = app.add_subcommand("gen-partition", "emit the equal-sum-split gadget");
  gp->add_option("--values", gen_values, "comma-separated positive integers")->required();
  gp->add_option("--out", gen_out, "edge-list output file");
  gp->add_option("--sp-out", gen_sets, "parse-tree text output file");

  auto* gs = app.add_subcommand("gen-setcover", "emit the cover gadget");
  std::string gs_sets;
  gs->add_option("--universe", gen_universe, "number of elements")->required();
  gs->add_option("--sets", gs_sets, "semicolon-separated `cost:e1,e2,...` entries")
      ->required();
  gs->add_option("--out", gen_out, "edge-list output file");

  auto* gr = app.add_subcommand("gen-random", "emit a connected random multigraph");
  gr->add_option("--n", gen_n);
  gr->add_option("--m", gen_m);
  gr->add_option("--c-max", gen_cmax);
  gr->add_option("--d-max", gen_dmax);
  gr->add_option("--seed", gen_seed);
  gr->add_option("--out", gen_out, "edge-list output file");

  // --- solvers ---
  CommonOpts dcst_o, par_o, eq_o, conv_o, spe_o, spf_o, orc_o, rsp_o;
  Cost opt_D = 0, opt_C = 0;
  std::string opt_eps = "1", opt_gamma = "1", opt_path_mode = "auto";
  int rsp_s = 0, rsp_t = 1;
  bool rsp_fptas = false;

  auto* cd = app.add_subcommand("dcst", "diameter-bounded Steiner tree heuristic");
  add_common(cd, dcst_o);
  cd->add_option("--D", opt_D, "diameter budget")->required();
  cd->add_option("--eps", opt_eps, "path approximation eps (rational a/b)");
  cd->add_option("--path-mode", opt_path_mode)->check(CLI::IsMember({"auto", "exact", "fptas"}));

  auto* cp = app.add_subcommand("parametric", "parametric search with exact MST plug-in");
  add_common(cp, par_o);
  cp->add_option("--C", opt_C, "c-budget")->required();
  cp->add_option("--gamma", opt_gamma, "tradeoff parameter (rational a/b)");

  auto* ce = app.add_subcommand("equivalence", "budget-swapping transform around dcst");
  add_common(ce, eq_o);
  ce->add_option("--C", opt_C, "budget on total c-cost")->required();
  ce->add_option("--eps", opt_eps);

  auto* cc = app.add_subcommand("convert", "sum-objective transform around dcst");
  add_common(cc, conv_o);
  cc->add_option("--eps", opt_eps);

  auto* cse = app.add_subcommand("spdp-exact", "exact series-parallel DP");
  add_common(cse, spe_o);
  cse->add_option("--D", opt_D, "diameter budget")->required();

  auto* csf = app.add_subcommand("spdp-fpas", "series-parallel approximation scheme");
  add_common(csf, spf_o);
  csf->add_option("--D", opt_D, "diameter budget")->required();
  csf->add_option("--eps", opt_eps);

  auto* co = app.add_subcommand("oracle", "exact Pareto front by enumeration");
  add_common(co, orc_o);

  auto* cr = app.add_subcommand("rsp", "restricted shortest path");
  add_common(cr, rsp_o);
  cr->add_option("--s", rsp_s)->required();
  cr->add_option("--t", rsp_t)->required();
  cr->add_option("--D", opt_D, "d-budget")->required();
  cr->add_flag("--fptas", rsp_fptas);
  cr->add_option("--eps", opt_eps);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gp->parsed()) {
      PartitionGadget gadget = gen_partition_gadget(parse_values(gen_values));
      std::ostream* out = &std::cout;
      std::ofstream f;
      if (!gen_out.empty()) {
        f.open(gen_out);
        out = &f;
      }
      write_edge_list(*out, gadget.graph, TerminalSet{});
      if (!gen_sets.empty()) {
        std::ofstream sf(gen_sets);
        sf << gadget.sp_description << "\n";
      }
      std::cout << "# H = " << gadget.half_sum.str() << "\n";
      return kExitOk;
    }
    if (gs->parsed()) {
      std::vector<std::pair<Cost, std::vector<int>>> sets;
      std::stringstream ss(gs_sets);
      std::string entry;
      while (std::getline(ss, entry, ';')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("set entry needs `cost:e1,e2,...`");
        std::vector<int> elems;
        for (Cost v : parse_values(entry.substr(colon + 1)))
          elems.push_back(static_cast<int>(v));
        sets.push_back({std::stoll(entry.substr(0, colon)), elems});
      }
      SetCoverGadget gadget = gen_setcover_gadget(gen_universe, sets);
      std::ostream* out = &std::cout;
      std::ofstream f;
      if (!gen_out.empty()) {
        f.open(gen_out);
        out = &f;
      }
      write_edge_list(*out, gadget.graph, gadget.terminals);
      return kExitOk;
    }
    if (gr->parsed()) {
      BiGraph g = gen_random(gen_n, gen_m, gen_cmax, gen_dmax, gen_seed);
      std::ostream* out = &std::cout;
      std::ofstream f;
      if (!gen_out.empty()) {
        f.open(gen_out);
        out = &f;
      }
      write_edge_list(*out, g, TerminalSet{});
      return kExitOk;
    }
    if (cd->parsed())
      return run_dcst(dcst_o, opt_D, parse_rational(opt_eps), opt_path_mode);
    if (cp->parsed()) return run_parametric(par_o, opt_C, parse_rational(opt_gamma));
    if (ce->parsed()) return run_equivalence(eq_o, opt_C, parse_rational(opt_eps));
    if (cc->parsed()) return run_convert(conv_o, parse_rational(opt_eps));
    if (cse->parsed()) return run_spdp(spe_o, opt_D, true, Rational(1));
    if (csf->parsed()) return run_spdp(spf_o, opt_D, false, parse_rational(opt_eps));
    if (co->parsed()) return run_oracle(orc_o);
    if (cr->parsed())
      return run_rsp(rsp_o, rsp_s, rsp_t, opt_D, rsp_fptas, parse_rational(opt_eps));
  } catch (const oracle::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
