// Command-line front end. Single-query subcommands print one JSON object to
// stdout; verify streams JSON lines to a file. Exit codes: 0 success,
// 1 mathematical disagreement or check failure, 2 usage or input error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "srpow/betti.hpp"
#include "srpow/checks.hpp"
#include "srpow/enumerate.hpp"
#include "srpow/field.hpp"
#include "srpow/invariants.hpp"
#include "srpow/json_io.hpp"
#include "srpow/polyhedron.hpp"
#include "srpow/takayama.hpp"

namespace {

using namespace srpow;

constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

FieldSpec field_of(long long characteristic) {
  return FieldSpec::of_characteristic(characteristic);
}

OrderedJson edge_list_json(const std::vector<Mask>& edges) {
  OrderedJson out = OrderedJson::array();
  for (Mask e : edges) out.push_back(vertex_list_json(e));
  return out;
}

OrderedJson a_invariants_json(const AInvariants& ai) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < ai.a.size(); ++i) {
    if (!ai.a[i]) continue;
    OrderedJson row;
    row["i"] = i;
    row["a"] = *ai.a[i];
    row["alpha"] = ai.witness[i].alpha;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Rational> delta_or_fail(const SimplicialComplex& cx, const char* what,
                                    Rational* value) {
  if (cx.is_full_simplex())
    throw InputError(std::string(what) + ": the ideal is zero, delta is undefined");
  DeltaInvariant d = delta_invariant(cx);
  *value = d.value;
  return d.witness;
}

int run_reg(const std::string& path, int n, long long characteristic, bool witness,
            const std::string& method) {
  const SimplicialComplex cx = complex_from_json(load_json_file(path), path);
  const FieldSpec field = field_of(characteristic);
  if (cx.is_full_simplex())
    throw InputError(path + ": the ideal is zero, regularity is undefined");

  std::optional<int> via_takayama;
  std::optional<int> via_betti;
  std::optional<AInvariants> ai;
  if (method == "takayama" || method == "both") {
    ai = a_invariants(cx, n, field);
    via_takayama = *ai->reg_quotient() + 1;
  }
  if (method == "betti" || method == "both")
    via_betti = reg_via_betti(symbolic_power(cx, n), field);

  OrderedJson out;
  if (method == "both") {
    if (*via_takayama != *via_betti) {
      out["reg_takayama"] = *via_takayama;
      out["reg_betti"] = *via_betti;
      out["methods_agree"] = false;
      std::cout << out.dump() << '\n';
      return kExitMathFailure;
    }
    out["reg"] = *via_takayama;
    out["methods_agree"] = true;
  } else {
    out["reg"] = via_takayama ? *via_takayama : *via_betti;
  }
  if (witness && ai) out["witness"] = a_invariants_json(*ai);
  std::cout << out.dump() << '\n';
  return 0;
}

int run_delta(const std::string& path) {
  const SimplicialComplex cx = complex_from_json(load_json_file(path), path);
  Rational value;
  const std::vector<Rational> vertex = delta_or_fail(cx, path.c_str(), &value);
  OrderedJson out;
  out["delta"] = to_string(value);
  OrderedJson coords = OrderedJson::array();
  for (const Rational& q : vertex) coords.push_back(to_string(q));
  out["witness"] = coords;
  std::cout << out.dump() << '\n';
  return 0;
}

int run_symbolic_power(const std::string& path, int n) {
  const SimplicialComplex cx = complex_from_json(load_json_file(path), path);
  if (cx.is_full_simplex())
    throw InputError(path + ": the ideal is zero, symbolic powers are undefined");
  OrderedJson out = ideal_to_json(symbolic_power(cx, n));
  out["n"] = n;
  std::cout << out.dump() << '\n';
  return 0;
}

int run_dual(const std::string& complex_path, const std::string& hypergraph_path) {
  OrderedJson out;
  if (!complex_path.empty()) {
    const SimplicialComplex cx =
        complex_from_json(load_json_file(complex_path), complex_path);
    out = complex_to_json(cx.alexander_dual());
  } else {
    const Hypergraph h =
        hypergraph_from_json(load_json_file(hypergraph_path), hypergraph_path);
    out = hypergraph_to_json(h.dual());
  }
  std::cout << out.dump() << '\n';
  return 0;
}

void append_delta_fields(OrderedJson& out, const SimplicialComplex& cx) {
  if (cx.is_full_simplex()) return;  // zero ideal: no polyhedron
  Rational value;
  const std::vector<Rational> vertex = delta_or_fail(cx, "delta", &value);
  out["delta"] = to_string(value);
  OrderedJson coords = OrderedJson::array();
  for (const Rational& q : vertex) coords.push_back(to_string(q));
  out["delta_witness"] = coords;
}

int run_invariants(const std::string& complex_path, const std::string& graph_path,
                   const std::string& hypergraph_path, long long characteristic) {
  const FieldSpec field = field_of(characteristic);
  OrderedJson out;
  if (!complex_path.empty()) {
    const SimplicialComplex cx =
        complex_from_json(load_json_file(complex_path), complex_path);
    out["kind"] = "complex";
    out["r"] = cx.r();
    out["dim"] = cx.dim();
    out["pure"] = cx.is_pure();
    out["matroid"] = cx.is_matroid();
    out["cone"] = cx.is_cone();
    append_delta_fields(out, cx);
    if (!cx.is_full_simplex()) {
      out["max_generator_degree"] = stanley_reisner_ideal(cx).max_generator_degree();
      const BInvariant b = b_invariant(cx, field);
      out["b"] = b.value;
      OrderedJson bw = OrderedJson::array();
      for (int idx : b.witness) bw.push_back(vertex_list_json(cx.facets()[idx]));
      out["b_witness_facets"] = bw;
      out["reg"] = *reg_symbolic_power(cx, 1, field);
    }
  } else if (!graph_path.empty()) {
    const Graph g = graph_from_json(load_json_file(graph_path), graph_path);
    out["kind"] = "graph";
    out["r"] = g.r();
    const MatchingNumbers mn = matching_numbers(g);
    out["matching"] = mn.matching;
    out["matching_witness"] = edge_list_json(mn.matching_witness);
    out["induced_matching"] = mn.induced;
    out["induced_matching_witness"] = edge_list_json(mn.induced_witness);
    out["ordered_matching"] = mn.ordered;
    OrderedJson om = OrderedJson::array();
    for (const auto& [u, v] : mn.ordered_witness) om.push_back({u, v});
    out["ordered_matching_witness"] = om;
    if (!g.edges().empty()) {
      const Hypergraph h = Hypergraph::from_edges(g.r(), g.edges());
      const EdgewiseDomination eps = edgewise_domination(h);
      out["epsilon"] = eps.value;
      out["epsilon_witness"] = edge_list_json(eps.witness);
      const EdgewiseDomination eps_dual = edgewise_domination(h.dual());
      out["epsilon_dual"] = eps_dual.value;
      const SimplicialComplex cx = g.independence_complex();
      append_delta_fields(out, cx);
      out["reg"] = *reg_symbolic_power(cx, 1, field);
    }
  } else {
    const Hypergraph h =
        hypergraph_from_json(load_json_file(hypergraph_path), hypergraph_path);
    out["kind"] = "hypergraph";
    out["r"] = h.r();
    if (h.has_edges()) {
      const EdgewiseDomination eps = edgewise_domination(h);
      out["epsilon"] = eps.value;
      out["epsilon_witness"] = edge_list_json(eps.witness);
      const EdgewiseDomination eps_dual = edgewise_domination(h.dual());
      out["epsilon_dual"] = eps_dual.value;
      const Instance inst{InstanceKind::Hypergraph, h.r(), h.edges()};
      const SimplicialComplex cx = inst.associated_complex();
      append_delta_fields(out, cx);
      out["reg"] = *reg_symbolic_power(cx, 1, field);
    }
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int run_enumerate(const std::string& kind_name, int r, bool up_to_iso, bool count_only) {
  const auto kind = parse_instance_kind(kind_name);
  if (!kind) throw InputError("unknown instance kind: " + kind_name);
  if (count_only) {
    OrderedJson out;
    out["count"] = count_instances(*kind, r, up_to_iso);
    std::cout << out.dump() << '\n';
    return 0;
  }
  enumerate_instances(*kind, r, up_to_iso, [](const Instance& inst) {
    std::cout << instance_to_json(inst).dump() << '\n';
  });
  return 0;
}

int run_verify(const std::string& kind_name, int max_vertices, int n_max,
               std::optional<long long> seed, std::optional<int> samples,
               const std::vector<std::string>& check_names, const std::string& out_path,
               long long characteristic, int threads, bool no_timing, bool up_to_iso) {
  const auto kind = parse_instance_kind(kind_name);
  if (!kind) throw InputError("unknown instance kind: " + kind_name);
  if (seed.has_value() != samples.has_value())
    throw InputError("--seed and --samples must be given together");

  SuiteOptions opt;
  opt.n_max = n_max;
  opt.field = field_of(characteristic);
  opt.threads = threads;
  opt.with_timing = !no_timing;
  if (!check_names.empty()) {
    opt.checks.clear();
    for (const std::string& name : check_names) {
      const auto id = parse_check_id(name);
      if (!id) throw InputError("unknown check name: " + name);
      opt.checks.push_back(*id);
    }
  }

  std::vector<Instance> instances;
  if (samples) {
    if (*samples < 1) throw InputError("--samples must be positive");
    for (int i = 0; i < *samples; ++i)
      instances.push_back(random_instance(
          *kind, max_vertices, static_cast<std::uint64_t>(*seed) + static_cast<std::uint64_t>(i)));
  } else {
    for (int r = 1; r <= max_vertices; ++r)
      enumerate_instances(*kind, r, up_to_iso,
                          [&](const Instance& inst) { instances.push_back(inst); });
  }

  std::ofstream out(out_path);
  if (!out) throw InputError("cannot open output file: " + out_path);
  std::ofstream csv(out_path + ".csv");
  if (!csv) throw InputError("cannot open output file: " + out_path + ".csv");

  const SuiteResult result = run_suite(instances, opt, out, csv);

  OrderedJson summary;
  summary["instances"] = instances.size();
  summary["pass"] = result.pass;
  summary["fail"] = result.fail;
  summary["report_only_fail"] = result.report_only_fail;
  summary["skip"] = result.skip;
  summary["halted"] = result.halted;
  std::cout << summary.dump() << '\n';
  return result.ok() ? 0 : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations around symbolic powers of square-free monomial ideals"};
  app.require_subcommand(1);

  const auto prime_check = [](const std::string& value) -> std::string {
    long long p = 0;
    try {
      p = std::stoll(value);
    } catch (...) {
      return "not an integer: " + value;
    }
    if (p != 0 && !srpow::FieldSpec::is_prime(p)) return "characteristic must be 0 or a prime";
    return {};
  };

  // reg
  auto* reg = app.add_subcommand("reg", "regularity of a symbolic power");
  std::string reg_path;
  int reg_n = 1;
  long long reg_char = 0;
  bool reg_witness = false;
  std::string reg_method = "takayama";
  reg->add_option("--complex", reg_path, "complex JSON file")->required();
  reg->add_option("--n", reg_n, "symbolic power exponent")->required()->check(CLI::PositiveNumber);
  reg->add_option("--char", reg_char, "field characteristic (0 or a prime)")->check(prime_check);
  reg->add_flag("--witness", reg_witness, "include the witness degrees");
  reg->add_option("--method", reg_method, "takayama | betti | both")
      ->check(CLI::IsMember({"takayama", "betti", "both"}));

  // delta
  auto* delta = app.add_subcommand("delta", "delta invariant of the symbolic polyhedron");
  std::string delta_path;
  delta->add_option("--complex", delta_path, "complex JSON file")->required();

  // symbolic-power
  auto* sp = app.add_subcommand("symbolic-power", "minimal generators of a symbolic power");
  std::string sp_path;
  int sp_n = 1;
  sp->add_option("--complex", sp_path, "complex JSON file")->required();
  sp->add_option("--n", sp_n, "symbolic power exponent")->required()->check(CLI::PositiveNumber);

  // dual
  auto* dual = app.add_subcommand("dual", "Alexander dual complex or dual hypergraph");
  std::string dual_complex, dual_hyper;
  auto* dc = dual->add_option("--complex", dual_complex, "complex JSON file");
  auto* dh = dual->add_option("--hypergraph", dual_hyper, "hypergraph JSON file");
  dc->excludes(dh);

  // invariants
  auto* inv = app.add_subcommand("invariants", "combinatorial invariants with witnesses");
  std::string inv_complex, inv_graph, inv_hyper;
  long long inv_char = 0;
  auto* ic = inv->add_option("--complex", inv_complex, "complex JSON file");
  auto* ig = inv->add_option("--graph", inv_graph, "graph JSON file");
  auto* ih = inv->add_option("--hypergraph", inv_hyper, "hypergraph JSON file");
  ic->excludes(ig)->excludes(ih);
  ig->excludes(ih);
  inv->add_option("--char", inv_char, "field characteristic (0 or a prime)")->check(prime_check);

  // verify
  auto* verify = app.add_subcommand("verify", "run the statement checks over an instance suite");
  std::string verify_kind, verify_out;
  int verify_max_vertices = 0;
  int verify_n_max = 3;
  std::optional<long long> verify_seed;
  std::optional<int> verify_samples;
  std::vector<std::string> verify_checks;
  long long verify_char = 0;
  int verify_threads = std::max(1u, std::thread::hardware_concurrency());
  bool verify_no_timing = false;
  bool verify_up_to_iso = false;
  verify->add_option("--kind", verify_kind, "complex | graph | hypergraph")->required();
  verify->add_option("--max-vertices", verify_max_vertices, "suite ground-set bound")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--n-max", verify_n_max, "check powers n = 1..n-max")
      ->check(CLI::Range(1, 4));
  auto* seed_opt = verify->add_option("--seed", verify_seed, "first random seed");
  auto* samples_opt =
      verify->add_option("--samples", verify_samples, "number of random instances");
  seed_opt->needs(samples_opt);
  samples_opt->needs(seed_opt);
  verify->add_option("--checks", verify_checks, "comma-separated check names")
      ->delimiter(',');
  verify->add_option("--out", verify_out, "JSON-lines report path (CSV goes to <out>.csv)")
      ->required();
  verify->add_option("--char", verify_char, "field characteristic (0 or a prime)")
      ->check(prime_check);
  verify->add_option("--threads", verify_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", verify_no_timing, "omit timing fields from the report");
  verify->add_flag("--up-to-iso", verify_up_to_iso,
                   "enumerate one representative per isomorphism class");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream all instances of a kind");
  std::string enum_kind;
  int enum_r = 0;
  bool enum_iso = false, enum_count = false;
  enumerate->add_option("--kind", enum_kind, "complex | graph | hypergraph")->required();
  enumerate->add_option("--r", enum_r, "ground-set size")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--up-to-iso", enum_iso, "one representative per isomorphism class");
  enumerate->add_flag("--count-only", enum_count, "print only the instance count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*reg) return run_reg(reg_path, reg_n, reg_char, reg_witness, reg_method);
    if (*delta) return run_delta(delta_path);
    if (*sp) return run_symbolic_power(sp_path, sp_n);
    if (*dual) {
      if (dual_complex.empty() == dual_hyper.empty())
        throw InputError("dual needs exactly one of --complex or --hypergraph");
      return run_dual(dual_complex, dual_hyper);
    }
    if (*inv) {
      const int given = (!inv_complex.empty()) + (!inv_graph.empty()) + (!inv_hyper.empty());
      if (given != 1)
        throw InputError("invariants needs exactly one of --complex, --graph, --hypergraph");
      return run_invariants(inv_complex, inv_graph, inv_hyper, inv_char);
    }
    if (*verify)
      return run_verify(verify_kind, verify_max_vertices, verify_n_max, verify_seed,
                        verify_samples, verify_checks, verify_out, verify_char, verify_threads,
                        verify_no_timing, verify_up_to_iso);
    if (*enumerate) return run_enumerate(enum_kind, enum_r, enum_iso, enum_count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
