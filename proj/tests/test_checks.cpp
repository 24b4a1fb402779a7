#include <doctest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "srpow/checks.hpp"

using namespace srpow;

namespace {

Instance single_edge_graph() { return Instance{InstanceKind::Graph, 2, {0b11}}; }

Instance edgeless_graph() { return Instance{InstanceKind::Graph, 2, {}}; }

Instance five_cycle() {
  return Instance{InstanceKind::Graph, 5,
                  Graph::from_vertex_pairs(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}).edges()};
}

Instance path3_complex_instance() {
  return Instance{InstanceKind::Complex, 3,
                  SimplicialComplex::from_vertex_lists(3, {{1, 3}, {2}}).facets()};
}

std::map<CheckId, std::vector<CheckRecord>> by_check(const std::vector<CheckRecord>& recs) {
  std::map<CheckId, std::vector<CheckRecord>> m;
  for (const auto& r : recs) m[r.id].push_back(r);
  return m;
}

}  // namespace

TEST_CASE("check id names round trip") {
  CHECK(all_checks().size() == 16);
  for (CheckId id : all_checks()) CHECK(parse_check_id(to_string(id)) == id);
  CHECK(to_string(CheckId::THM_2_2) == "THM_2_2");
  CHECK(to_string(CheckId::FAKHARI_DIAG) == "FAKHARI_DIAG");
  CHECK_FALSE(parse_check_id("THM_9_9").has_value());
  for (CheckId id : all_checks())
    CHECK(is_report_only(id) == (id == CheckId::FAKHARI_DIAG));
}

TEST_CASE("all statements hold on the single edge graph") {
  const auto recs = run_checks(single_edge_graph(), 3, FieldSpec::rationals(), all_checks());
  const auto m = by_check(recs);
  CHECK(m.size() == 16);
  for (const auto& [id, rs] : m)
    for (const auto& rec : rs) {
      CAPTURE(to_string(id));
      CAPTURE(rec.n);
      CHECK(rec.status == CheckStatus::Pass);
    }
  // reg(I^(n)) = 2n for I = (x1 x2)
  for (const auto& rec : m.at(CheckId::ORACLE_EQ)) {
    CHECK(rec.lhs == std::to_string(2 * rec.n));
    CHECK(rec.lhs == rec.rhs);
  }
  CHECK(m.at(CheckId::ORACLE_EQ).size() == 3);       // n = 1..3
  CHECK(m.at(CheckId::HOCHSTER_N1).size() == 1);     // n-independent
  CHECK(m.at(CheckId::LEM_1_3_TERAI).size() == 1);
  CHECK(m.at(CheckId::THM_2_3).front().rhs == "2");  // 2(n-1) + 2 at n = 1
  CHECK(m.at(CheckId::THM_2_6).front().rhs == "2");  // 2(n-1) + 2 - eps(H*), eps = 0
}

TEST_CASE("the zero ideal skips everything") {
  const auto recs = run_checks(edgeless_graph(), 3, FieldSpec::rationals(), all_checks());
  CHECK(recs.size() == 16);
  for (const auto& rec : recs) {
    CHECK(rec.status == CheckStatus::Skip);
    CHECK(rec.n == 1);
    CHECK(rec.note == "zero ideal: the associated complex is the full simplex");
  }
}

TEST_CASE("kind guards produce skips") {
  const auto complex_recs =
      run_checks(path3_complex_instance(), 2, FieldSpec::rationals(), all_checks());
  const auto m = by_check(complex_recs);
  for (CheckId id : {CheckId::LEM_1_8_LOWER, CheckId::THM_3_4_ORDMATCH,
                     CheckId::REM_CW_EQUALITY, CheckId::FAKHARI_DIAG}) {
    REQUIRE(m.at(id).size() == 1);
    CHECK(m.at(id).front().status == CheckStatus::Skip);
    CHECK(m.at(id).front().note == "check applies to graph instances only");
  }
  for (CheckId id : {CheckId::THM_2_6, CheckId::LEM_1_7_DS}) {
    REQUIRE(m.at(id).size() == 1);
    CHECK(m.at(id).front().status == CheckStatus::Skip);
    CHECK(m.at(id).front().note == "check applies to graph and hypergraph instances only");
  }
  // the complex is not a matroid, so the matroid equality is skipped
  CHECK(m.at(CheckId::EX_2_7).front().status == CheckStatus::Skip);
  CHECK(m.at(CheckId::EX_2_7).front().note == "complex is not a matroid");
  // everything else passes
  for (CheckId id : {CheckId::THM_2_2, CheckId::THM_2_3, CheckId::COR_2_4,
                     CheckId::REM_LOWER_DN, CheckId::LEM_1_3_TERAI,
                     CheckId::LEM_2_1_RESTRICT, CheckId::LEM_1_11_CHAMBER,
                     CheckId::ORACLE_EQ, CheckId::HOCHSTER_N1})
    for (const auto& rec : m.at(id)) {
      CAPTURE(to_string(id));
      CHECK(rec.status == CheckStatus::Pass);
    }
}

TEST_CASE("betti-based checks skip above five vertices") {
  // non-edgeless 6-vertex graph
  Instance inst{InstanceKind::Graph, 6,
                Graph::from_vertex_pairs(6, {{1, 2}, {3, 4}, {5, 6}}).edges()};
  const auto m = by_check(run_checks(inst, 1, FieldSpec::rationals(), all_checks()));
  for (CheckId id : {CheckId::ORACLE_EQ, CheckId::HOCHSTER_N1, CheckId::LEM_1_3_TERAI}) {
    REQUIRE(m.at(id).size() == 1);
    CHECK(m.at(id).front().status == CheckStatus::Skip);
    CHECK(m.at(id).front().note == "Betti oracle checks are limited to r <= 5");
  }
  CHECK(m.at(CheckId::LEM_1_7_DS).front().status == CheckStatus::Skip);
  for (const auto& rec : m.at(CheckId::THM_2_2)) CHECK(rec.status == CheckStatus::Pass);
  for (const auto& rec : m.at(CheckId::LEM_1_8_LOWER)) CHECK(rec.status == CheckStatus::Pass);
}

TEST_CASE("ordered/induced mismatch skips the equality remark") {
  const auto m = by_check(run_checks(five_cycle(), 2, FieldSpec::rationals(),
                                     {CheckId::REM_CW_EQUALITY, CheckId::THM_3_4_ORDMATCH}));
  REQUIRE(m.at(CheckId::REM_CW_EQUALITY).size() == 1);
  CHECK(m.at(CheckId::REM_CW_EQUALITY).front().status == CheckStatus::Skip);
  CHECK(m.at(CheckId::REM_CW_EQUALITY).front().note ==
        "ordered matching number differs from the induced matching number");
  for (const auto& rec : m.at(CheckId::THM_3_4_ORDMATCH))
    CHECK(rec.status == CheckStatus::Pass);
}

TEST_CASE("requested check lists are filtered and deduplicated") {
  const auto recs = run_checks(single_edge_graph(), 2, FieldSpec::rationals(),
                               {CheckId::ORACLE_EQ, CheckId::THM_2_2, CheckId::ORACLE_EQ});
  CHECK(recs.size() == 4);  // two checks, n = 1..2 each
  CHECK(recs[0].id == CheckId::THM_2_2);  // roster order, not request order
  CHECK(recs[2].id == CheckId::ORACLE_EQ);
}

TEST_CASE("record serialization is stable") {
  const auto recs = run_checks(single_edge_graph(), 1, FieldSpec::rationals(),
                               {CheckId::ORACLE_EQ});
  REQUIRE(recs.size() == 1);
  const OrderedJson with_ms = recs.front().to_json(true);
  CHECK(with_ms.contains("ms"));
  const OrderedJson plain = recs.front().to_json(false);
  CHECK_FALSE(plain.contains("ms"));
  CHECK(plain["instance"]["kind"] == "graph");
  CHECK(plain["check"] == "ORACLE_EQ");
  CHECK(plain["n"] == 1);
  CHECK(plain["status"] == "pass");
  CHECK(plain["lhs"] == "2");
  CHECK(plain["rhs"] == "2");
}

TEST_CASE("n_max is validated") {
  CHECK_THROWS_AS(run_checks(single_edge_graph(), 0, FieldSpec::rationals(), all_checks()),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_checks(single_edge_graph(), 5, FieldSpec::rationals(), all_checks()),
                  std::invalid_argument);
}

TEST_CASE("suites are deterministic and halt on gating failures") {
  std::vector<Instance> instances;
  for (int r = 1; r <= 3; ++r)
    enumerate_instances(InstanceKind::Graph, r, false,
                        [&](const Instance& inst) { instances.push_back(inst); });

  SuiteOptions opt;
  opt.n_max = 2;
  opt.with_timing = false;

  std::ostringstream out1, csv1;
  const SuiteResult r1 = run_suite(instances, opt, out1, csv1);
  CHECK(r1.ok());
  CHECK(r1.fail == 0);
  CHECK(r1.report_only_fail == 0);
  CHECK_FALSE(r1.halted);
  CHECK(r1.pass > 0);
  CHECK(r1.skip > 0);

  std::ostringstream out2, csv2;
  run_suite(instances, opt, out2, csv2);
  CHECK(out1.str() == out2.str());
  CHECK(csv1.str() == csv2.str());

  SuiteOptions threaded = opt;
  threaded.threads = 4;
  std::ostringstream out3, csv3;
  run_suite(instances, threaded, out3, csv3);
  CHECK(out1.str() == out3.str());
  CHECK(csv1.str() == csv3.str());

  CHECK(csv1.str().rfind("check,n,pass,fail,skip\n", 0) == 0);
  // one JSON line per record
  std::istringstream lines(out1.str());
  std::string line;
  std::uint64_t parsed = 0;
  while (std::getline(lines, line)) {
    const Json doc = parse_json_text(line, "report");
    CHECK(doc.contains("check"));
    CHECK_FALSE(doc.contains("ms"));
    ++parsed;
  }
  CHECK(parsed == r1.pass + r1.fail + r1.report_only_fail + r1.skip);
}
