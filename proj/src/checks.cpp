#include "srpow/checks.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "srpow/betti.hpp"
#include "srpow/invariants.hpp"
#include "srpow/polyhedron.hpp"
#include "srpow/takayama.hpp"

namespace srpow {

namespace {

constexpr int kOracleMaxR = 5;

struct RosterEntry {
  CheckId id;
  const char* name;
};

constexpr RosterEntry kRoster[] = {
    {CheckId::THM_2_2, "THM_2_2"},
    {CheckId::THM_2_3, "THM_2_3"},
    {CheckId::COR_2_4, "COR_2_4"},
    {CheckId::THM_2_6, "THM_2_6"},
    {CheckId::EX_2_7, "EX_2_7"},
    {CheckId::REM_LOWER_DN, "REM_LOWER_DN"},
    {CheckId::LEM_1_3_TERAI, "LEM_1_3_TERAI"},
    {CheckId::LEM_1_7_DS, "LEM_1_7_DS"},
    {CheckId::LEM_1_8_LOWER, "LEM_1_8_LOWER"},
    {CheckId::LEM_2_1_RESTRICT, "LEM_2_1_RESTRICT"},
    {CheckId::LEM_1_11_CHAMBER, "LEM_1_11_CHAMBER"},
    {CheckId::THM_3_4_ORDMATCH, "THM_3_4_ORDMATCH"},
    {CheckId::REM_CW_EQUALITY, "REM_CW_EQUALITY"},
    {CheckId::ORACLE_EQ, "ORACLE_EQ"},
    {CheckId::HOCHSTER_N1, "HOCHSTER_N1"},
    {CheckId::FAKHARI_DIAG, "FAKHARI_DIAG"},
};

int roster_index(CheckId id) {
  for (std::size_t k = 0; k < std::size(kRoster); ++k)
    if (kRoster[k].id == id) return static_cast<int>(k);
  throw std::logic_error("check id outside the roster");
}

bool needs_graph(CheckId id) {
  return id == CheckId::LEM_1_8_LOWER || id == CheckId::THM_3_4_ORDMATCH ||
         id == CheckId::REM_CW_EQUALITY || id == CheckId::FAKHARI_DIAG;
}

bool needs_edge_ideal_instance(CheckId id) {
  return id == CheckId::THM_2_6 || id == CheckId::LEM_1_7_DS;
}

bool n_independent(CheckId id) {
  return id == CheckId::LEM_1_3_TERAI || id == CheckId::LEM_1_7_DS ||
         id == CheckId::HOCHSTER_N1;
}

bool betti_guarded(CheckId id) {
  return id == CheckId::LEM_1_3_TERAI || id == CheckId::LEM_1_7_DS ||
         id == CheckId::ORACLE_EQ || id == CheckId::HOCHSTER_N1;
}

// Lazily computed per-instance quantities shared across checks and values
// of n.
class InstanceContext {
 public:
  InstanceContext(const Instance& inst, const FieldSpec& field)
      : inst_(inst), field_(field), cx_(inst.associated_complex()) {
    if (!cx_.is_full_simplex()) ideal_ = stanley_reisner_ideal(cx_);
  }

  const Instance& inst() const { return inst_; }
  const FieldSpec& field() const { return field_; }
  const SimplicialComplex& cx() const { return cx_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  bool zero_ideal() const { return cx_.is_full_simplex(); }
  int r() const { return inst_.r; }

  const DeltaInvariant& delta() {
    if (!delta_) delta_ = delta_invariant(cx_);
    return *delta_;
  }

  const BInvariant& b() {
    if (!b_) b_ = b_invariant(cx_, field_);
    return *b_;
  }

  const MatchingNumbers& matchings() {
    if (!mn_) mn_ = matching_numbers(inst_.graph());
    return *mn_;
  }

  const Hypergraph& as_hypergraph() {
    if (!hyper_) hyper_ = Hypergraph::from_edges(inst_.r, inst_.sets);
    return *hyper_;
  }

  int epsilon_dual() {
    if (!eps_dual_) eps_dual_ = edgewise_domination(as_hypergraph().dual()).value;
    return *eps_dual_;
  }

  int epsilon_self() {
    if (!eps_self_) eps_self_ = edgewise_domination(as_hypergraph()).value;
    return *eps_self_;
  }

  const AInvariants& ainv(int n) {
    auto it = ainv_.find(n);
    if (it == ainv_.end()) it = ainv_.emplace(n, a_invariants(cx_, n, field_)).first;
    return it->second;
  }

  int reg(int n) {
    auto it = reg_.find(n);
    if (it == reg_.end()) {
      const auto q = ainv(n).reg_quotient();
      if (!q) throw std::logic_error("no finite a-invariant for a nonzero proper ideal");
      it = reg_.emplace(n, *q + 1).first;
    }
    return it->second;
  }

 private:
  Instance inst_;
  FieldSpec field_;
  SimplicialComplex cx_;
  MonomialIdeal ideal_;
  std::optional<DeltaInvariant> delta_;
  std::optional<BInvariant> b_;
  std::optional<MatchingNumbers> mn_;
  std::optional<Hypergraph> hyper_;
  std::optional<int> eps_dual_;
  std::optional<int> eps_self_;
  std::map<int, AInvariants> ainv_;
  std::map<int, int> reg_;
};

struct Eval {
  CheckStatus status = CheckStatus::Skip;
  std::string lhs;
  std::string rhs;
  OrderedJson witness = OrderedJson::object();
  std::string note;
};

Eval skip(std::string note) {
  Eval e;
  e.status = CheckStatus::Skip;
  e.note = std::move(note);
  return e;
}

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

Eval eval_thm_2_2(InstanceContext& ctx, int n) {
  const AInvariants& ai = ctx.ainv(n);
  const Rational bound = ctx.delta().value * (n - 1);
  Eval e;
  e.rhs = to_string(bound);
  std::optional<int> amax;
  int best_i = -1;
  bool ok = true;
  for (std::size_t i = 0; i < ai.a.size(); ++i) {
    if (!ai.a[i]) continue;
    if (!amax || *ai.a[i] > *amax) {
      amax = *ai.a[i];
      best_i = static_cast<int>(i);
    }
    if (Rational(*ai.a[i]) > bound) ok = false;
  }
  if (!amax) {
    e.status = CheckStatus::Pass;
    e.lhs = "-inf";
    return e;
  }
  e.status = verdict(ok);
  e.lhs = std::to_string(*amax);
  e.witness["i"] = best_i;
  e.witness["alpha"] = ai.witness[static_cast<std::size_t>(best_i)].alpha;
  return e;
}

Eval eval_thm_2_3(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const Rational rhs = ctx.delta().value * (n - 1) + ctx.b().value;
  Eval e;
  e.status = verdict(Rational(reg) <= rhs);
  e.lhs = std::to_string(reg);
  e.rhs = to_string(rhs);
  e.witness["delta"] = to_string(ctx.delta().value);
  e.witness["b"] = ctx.b().value;
  return e;
}

Eval eval_cor_2_4(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const int dim_quotient = ctx.cx().dim() + 1;
  const Rational rhs = ctx.delta().value * (n - 1) + dim_quotient + 1;
  Eval e;
  e.status = verdict(Rational(reg) <= rhs);
  e.lhs = std::to_string(reg);
  e.rhs = to_string(rhs);
  e.witness["delta"] = to_string(ctx.delta().value);
  e.witness["dim_quotient"] = dim_quotient;
  return e;
}

Eval eval_thm_2_6(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const int eps = ctx.epsilon_dual();
  const Rational rhs = ctx.delta().value * (n - 1) + ctx.r() - eps;
  Eval e;
  e.status = verdict(Rational(reg) <= rhs);
  e.lhs = std::to_string(reg);
  e.rhs = to_string(rhs);
  e.witness["delta"] = to_string(ctx.delta().value);
  e.witness["epsilon_dual"] = eps;
  return e;
}

Eval eval_ex_2_7(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const int d = ctx.ideal().max_generator_degree();
  const int s = ctx.cx().dim() + 1;
  const int rhs = d * (n - 1) + s + 1;
  Eval e;
  e.status = verdict(reg == rhs);
  e.lhs = std::to_string(reg);
  e.rhs = std::to_string(rhs);
  e.witness["d"] = d;
  e.witness["dim_quotient"] = s;
  return e;
}

Eval eval_rem_lower_dn(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const int rhs = ctx.ideal().max_generator_degree() * n;
  Eval e;
  e.status = verdict(reg >= rhs);
  e.lhs = std::to_string(reg);
  e.rhs = std::to_string(rhs);
  return e;
}

Eval eval_lem_1_3_terai(InstanceContext& ctx) {
  const SimplicialComplex dual = ctx.cx().alexander_dual();
  const MonomialIdeal dual_ideal = stanley_reisner_ideal(dual);
  const int lhs = reg_via_betti(ctx.ideal(), ctx.field());
  const int rhs = pd_quotient_via_betti(dual_ideal, ctx.field());
  Eval e;
  e.status = verdict(lhs == rhs);
  e.lhs = std::to_string(lhs);
  e.rhs = std::to_string(rhs);
  return e;
}

Eval eval_lem_1_7_ds(InstanceContext& ctx) {
  const int lhs = pd_quotient_via_betti(ctx.ideal(), ctx.field());
  const int rhs = ctx.r() - ctx.epsilon_self();
  Eval e;
  e.status = verdict(lhs <= rhs);
  e.lhs = std::to_string(lhs);
  e.rhs = std::to_string(rhs);
  e.witness["epsilon"] = ctx.epsilon_self();
  return e;
}

Eval eval_lem_1_8_lower(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const int rhs = 2 * n + ctx.matchings().induced - 1;
  Eval e;
  e.status = verdict(reg >= rhs);
  e.lhs = std::to_string(reg);
  e.rhs = std::to_string(rhs);
  e.witness["nu"] = ctx.matchings().induced;
  return e;
}

Eval eval_lem_2_1(InstanceContext& ctx, int n) {
  const int rhs = ctx.reg(n);
  int worst = std::numeric_limits<int>::min();
  Mask worst_sigma = 0;
  const Mask full = full_mask(ctx.r());
  for (Mask sigma = 0; sigma < full; ++sigma) {
    int lhs_sigma;
    if (sigma == 0) {
      lhs_sigma = rhs;
    } else {
      const Contraction con = contract(ctx.ideal(), sigma);
      if (con.ideal.is_unit()) {
        lhs_sigma = 0;
      } else {
        const SimplicialComplex cj = complex_of(con.ideal);
        lhs_sigma = *reg_symbolic_power(cj, n, ctx.field());
      }
    }
    if (lhs_sigma > worst) {
      worst = lhs_sigma;
      worst_sigma = sigma;
    }
  }
  Eval e;
  e.status = verdict(worst <= rhs);
  e.lhs = std::to_string(worst);
  e.rhs = std::to_string(rhs);
  e.witness["sigma"] = vertex_list_json(worst_sigma);
  return e;
}

Eval eval_lem_1_11(InstanceContext& ctx, int n) {
  const AInvariants& ai = ctx.ainv(n);
  const Rational bound = ctx.delta().value;
  Eval e;
  e.rhs = to_string(bound);
  bool any = false;
  bool ok = true;
  std::optional<Rational> worst;
  for (std::size_t i = 0; i < ai.a.size(); ++i) {
    if (!ai.a[i]) continue;
    const DegreeVector& alpha = ai.witness[i];
    const Mask g = alpha.negative_support();
    if (g == full_mask(ctx.r())) continue;
    any = true;

    const Contraction con = contract(ctx.ideal(), g);
    const SimplicialComplex cj = complex_of(con.ideal);
    const int m = static_cast<int>(con.kept.size());

    // The contracted ideal's complex must be the link of G, relabeled to the
    // surviving coordinates; a mismatch would invalidate the chamber.
    std::vector<Mask> relabeled;
    const SimplicialComplex link = ctx.cx().link(g);
    for (Mask f : link.facets()) {
      Mask img = 0;
      for (int k = 0; k < m; ++k)
        if (has_vertex(f, con.kept[static_cast<std::size_t>(k)])) img |= Mask{1} << k;
      relabeled.push_back(img);
    }
    std::sort(relabeled.begin(), relabeled.end(), canon_less);
    if (relabeled != cj.facets()) {
      e.status = CheckStatus::Fail;
      e.note = "contraction complex disagrees with the relabeled link";
      e.witness["i"] = static_cast<int>(i);
      e.witness["alpha"] = alpha.alpha;
      e.lhs = worst ? to_string(*worst) : std::string("-inf");
      return e;
    }

    std::vector<int> ap(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
      ap[static_cast<std::size_t>(k)] =
          alpha.alpha[static_cast<std::size_t>(con.kept[static_cast<std::size_t>(k)] - 1)];

    std::vector<int> leq;
    for (std::size_t j = 0; j < cj.facets().size(); ++j) {
      long sum = 0;
      for (int v = 1; v <= m; ++v)
        if (!has_vertex(cj.facets()[j], v)) sum += ap[static_cast<std::size_t>(v - 1)];
      if (sum <= n - 1) leq.push_back(static_cast<int>(j));
    }

    const RationalPolyhedron c1 = chamber_polyhedron(cj, leq, 1);
    std::string trouble;
    if (!is_bounded(c1)) trouble = "witness chamber is unbounded";
    std::vector<std::vector<Rational>> verts;
    if (trouble.empty()) {
      verts = vertices(c1);
      if (verts.empty()) trouble = "witness chamber has no vertices";
    }
    if (!trouble.empty()) {
      e.status = CheckStatus::Fail;
      e.note = trouble;
      e.witness["i"] = static_cast<int>(i);
      e.witness["alpha"] = alpha.alpha;
      e.lhs = worst ? to_string(*worst) : std::string("-inf");
      return e;
    }

    const Rational dc1 = max_coordinate_sum(verts);
    if (!worst || dc1 > *worst) {
      worst = dc1;
      e.witness["i"] = static_cast<int>(i);
      e.witness["alpha"] = alpha.alpha;
      e.witness["delta_chamber"] = to_string(dc1);
    }
    if (dc1 > bound) ok = false;
  }
  if (!any) return skip("no local cohomology witness with surviving coordinates");
  e.status = verdict(ok);
  e.lhs = to_string(*worst);
  return e;
}

Eval eval_thm_3_4(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const int rhs = 2 * n + ctx.matchings().ordered - 1;
  Eval e;
  e.status = verdict(reg <= rhs);
  e.lhs = std::to_string(reg);
  e.rhs = std::to_string(rhs);
  e.witness["ordmatch"] = ctx.matchings().ordered;
  return e;
}

Eval eval_rem_cw(InstanceContext& ctx, int n) {
  const MatchingNumbers& mn = ctx.matchings();
  const int reg = ctx.reg(n);
  const int rhs = 2 * n + mn.induced - 1;
  Eval e;
  e.status = verdict(reg == rhs);
  e.lhs = std::to_string(reg);
  e.rhs = std::to_string(rhs);
  e.witness["nu"] = mn.induced;
  return e;
}

Eval eval_oracle_eq(InstanceContext& ctx, int n) {
  const int lhs = ctx.reg(n);
  const MonomialIdeal power = symbolic_power(ctx.cx(), n);
  const int rhs = reg_via_betti(power, ctx.field());
  Eval e;
  e.status = verdict(lhs == rhs);
  e.lhs = std::to_string(lhs);
  e.rhs = std::to_string(rhs);
  return e;
}

Eval eval_hochster_n1(InstanceContext& ctx) {
  const int links = reg_links(ctx.cx(), ctx.field()) + 1;
  const int takayama = ctx.reg(1);
  const int betti = reg_via_betti(ctx.ideal(), ctx.field());
  Eval e;
  e.status = verdict(links == takayama && links == betti);
  e.lhs = std::to_string(links);
  e.rhs = std::to_string(takayama);
  e.witness["betti"] = betti;
  return e;
}

Eval eval_fakhari(InstanceContext& ctx, int n) {
  const int reg = ctx.reg(n);
  const int rhs = 2 * n + ctx.reg(1) - 2;
  Eval e;
  e.status = verdict(reg <= rhs);
  e.lhs = std::to_string(reg);
  e.rhs = std::to_string(rhs);
  e.witness["reg_n1"] = ctx.reg(1);
  return e;
}

Eval evaluate(CheckId id, InstanceContext& ctx, int n) {
  switch (id) {
    case CheckId::THM_2_2: return eval_thm_2_2(ctx, n);
    case CheckId::THM_2_3: return eval_thm_2_3(ctx, n);
    case CheckId::COR_2_4: return eval_cor_2_4(ctx, n);
    case CheckId::THM_2_6: return eval_thm_2_6(ctx, n);
    case CheckId::EX_2_7: return eval_ex_2_7(ctx, n);
    case CheckId::REM_LOWER_DN: return eval_rem_lower_dn(ctx, n);
    case CheckId::LEM_1_3_TERAI: return eval_lem_1_3_terai(ctx);
    case CheckId::LEM_1_7_DS: return eval_lem_1_7_ds(ctx);
    case CheckId::LEM_1_8_LOWER: return eval_lem_1_8_lower(ctx, n);
    case CheckId::LEM_2_1_RESTRICT: return eval_lem_2_1(ctx, n);
    case CheckId::LEM_1_11_CHAMBER: return eval_lem_1_11(ctx, n);
    case CheckId::THM_3_4_ORDMATCH: return eval_thm_3_4(ctx, n);
    case CheckId::REM_CW_EQUALITY: return eval_rem_cw(ctx, n);
    case CheckId::ORACLE_EQ: return eval_oracle_eq(ctx, n);
    case CheckId::HOCHSTER_N1: return eval_hochster_n1(ctx);
    case CheckId::FAKHARI_DIAG: return eval_fakhari(ctx, n);
  }
  throw std::logic_error("check id outside the roster");
}

}  // namespace

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> all = [] {
    std::vector<CheckId> v;
    for (const auto& entry : kRoster) v.push_back(entry.id);
    return v;
  }();
  return all;
}

std::string to_string(CheckId id) { return kRoster[roster_index(id)].name; }

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (const auto& entry : kRoster)
    if (name == entry.name) return entry.id;
  return std::nullopt;
}

bool is_report_only(CheckId id) { return id == CheckId::FAKHARI_DIAG; }

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

OrderedJson CheckRecord::to_json(bool with_timing) const {
  OrderedJson doc;
  doc["instance"] = instance_to_json(instance);
  doc["check"] = to_string(id);
  doc["n"] = n;
  doc["status"] = to_string(status);
  if (!lhs.empty()) doc["lhs"] = lhs;
  if (!rhs.empty()) doc["rhs"] = rhs;
  if (!witness.empty()) doc["witness"] = witness;
  if (!note.empty()) doc["note"] = note;
  if (with_timing) doc["ms"] = ms;
  return doc;
}

std::vector<CheckRecord> run_checks(const Instance& inst, int n_max, const FieldSpec& field,
                                    const std::vector<CheckId>& checks) {
  if (n_max < 1 || n_max > 4)
    throw std::invalid_argument("n_max must be between 1 and 4");

  std::vector<CheckId> ordered = checks;
  std::sort(ordered.begin(), ordered.end(),
            [](CheckId a, CheckId b) { return roster_index(a) < roster_index(b); });
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  InstanceContext ctx(inst, field);
  std::vector<CheckRecord> records;

  const auto emit = [&](CheckId id, int n, Eval e, long long ms) {
    CheckRecord rec;
    rec.instance = inst;
    rec.id = id;
    rec.n = n;
    rec.status = e.status;
    rec.lhs = std::move(e.lhs);
    rec.rhs = std::move(e.rhs);
    rec.witness = std::move(e.witness);
    rec.note = std::move(e.note);
    rec.ms = ms;
    records.push_back(std::move(rec));
  };

  for (CheckId id : ordered) {
    if (ctx.zero_ideal()) {
      emit(id, 1, skip("zero ideal: the associated complex is the full simplex"), 0);
      continue;
    }
    if (needs_graph(id) && inst.kind != InstanceKind::Graph) {
      emit(id, 1, skip("check applies to graph instances only"), 0);
      continue;
    }
    if (needs_edge_ideal_instance(id) && inst.kind == InstanceKind::Complex) {
      emit(id, 1, skip("check applies to graph and hypergraph instances only"), 0);
      continue;
    }
    if (betti_guarded(id) && inst.r > kOracleMaxR) {
      emit(id, 1, skip("Betti oracle checks are limited to r <= 5"), 0);
      continue;
    }
    if (id == CheckId::EX_2_7) {
      if (!ctx.cx().is_matroid()) {
        emit(id, 1, skip("complex is not a matroid"), 0);
        continue;
      }
      if (ctx.cx().is_cone()) {
        emit(id, 1, skip("complex is a cone"), 0);
        continue;
      }
    }
    if (id == CheckId::REM_CW_EQUALITY &&
        ctx.matchings().ordered != ctx.matchings().induced) {
      emit(id, 1, skip("ordered matching number differs from the induced matching number"),
           0);
      continue;
    }
    const int top = n_independent(id) ? 1 : n_max;
    for (int n = 1; n <= top; ++n) {
      const auto t0 = std::chrono::steady_clock::now();
      Eval e = evaluate(id, ctx, n);
      const auto t1 = std::chrono::steady_clock::now();
      const long long ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      emit(id, n, std::move(e), ms);
    }
  }
  return records;
}

namespace {

bool has_gating_failure(const std::vector<CheckRecord>& records) {
  for (const CheckRecord& rec : records)
    if (rec.status == CheckStatus::Fail && !is_report_only(rec.id)) return true;
  return false;
}

}  // namespace

SuiteResult run_suite(const std::vector<Instance>& instances, const SuiteOptions& opt,
                      std::ostream& out, std::ostream& csv) {
  const std::size_t count = instances.size();
  std::vector<std::optional<std::vector<CheckRecord>>> results(count);

  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    for (std::size_t idx = 0; idx < count; ++idx) {
      results[idx] = run_checks(instances[idx], opt.n_max, opt.field, opt.checks);
      if (has_gating_failure(*results[idx])) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> stop_at{count};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= count || idx > stop_at.load()) break;
            auto recs = run_checks(instances[idx], opt.n_max, opt.field, opt.checks);
            const bool failed = has_gating_failure(recs);
            results[idx] = std::move(recs);
            if (failed) {
              std::size_t cur = stop_at.load();
              while (idx < cur && !stop_at.compare_exchange_weak(cur, idx)) {
              }
            }
          }
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  SuiteResult result;
  // (roster index, n) -> [pass, fail, skip]
  std::map<std::pair<int, int>, std::array<std::uint64_t, 3>> summary;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (!results[idx]) break;
    bool failed_here = false;
    for (const CheckRecord& rec : *results[idx]) {
      out << rec.to_json(opt.with_timing).dump() << '\n';
      auto& cell = summary[{roster_index(rec.id), rec.n}];
      switch (rec.status) {
        case CheckStatus::Pass:
          ++result.pass;
          ++cell[0];
          break;
        case CheckStatus::Fail:
          ++cell[1];
          if (is_report_only(rec.id)) {
            ++result.report_only_fail;
          } else {
            ++result.fail;
            failed_here = true;
          }
          break;
        case CheckStatus::Skip:
          ++result.skip;
          ++cell[2];
          break;
      }
    }
    if (failed_here) {
      result.halted = true;
      break;
    }
  }

  csv << "check,n,pass,fail,skip\n";
  for (const auto& [key, cell] : summary)
    csv << kRoster[key.first].name << ',' << key.second << ',' << cell[0] << ',' << cell[1]
        << ',' << cell[2] << '\n';
  return result;
}

}  // namespace srpow
