#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "srpow/enumerate.hpp"
#include "srpow/field.hpp"
#include "srpow/json_io.hpp"

namespace srpow {

// Closed roster of verifiable statements. The names are part of the report
// format and the CLI surface; unknown names are rejected.
enum class CheckId {
  THM_2_2,
  THM_2_3,
  COR_2_4,
  THM_2_6,
  EX_2_7,
  REM_LOWER_DN,
  LEM_1_3_TERAI,
  LEM_1_7_DS,
  LEM_1_8_LOWER,
  LEM_2_1_RESTRICT,
  LEM_1_11_CHAMBER,
  THM_3_4_ORDMATCH,
  REM_CW_EQUALITY,
  ORACLE_EQ,
  HOCHSTER_N1,
  FAKHARI_DIAG,
};

const std::vector<CheckId>& all_checks();
std::string to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

// FAKHARI_DIAG records its outcome but never gates a suite.
bool is_report_only(CheckId id);

enum class CheckStatus { Pass, Fail, Skip };
std::string to_string(CheckStatus s);

struct CheckRecord {
  Instance instance;
  CheckId id = CheckId::THM_2_2;
  int n = 1;
  CheckStatus status = CheckStatus::Skip;
  std::string lhs;     // exact integer/fraction string, or "-inf"; empty on skips
  std::string rhs;
  OrderedJson witness = OrderedJson::object();
  std::string note;    // skip reason or failure detail
  long long ms = 0;

  OrderedJson to_json(bool with_timing) const;
};

// Evaluates the requested checks on one instance for n = 1..n_max.
// n-independent checks contribute a single record at n = 1. Checks that do
// not apply to the instance kind, or whose Betti oracle would exceed the
// r <= 5 guard, produce skip records. Instances whose associated complex is
// the full simplex (zero ideal) skip everything.
std::vector<CheckRecord> run_checks(const Instance& inst, int n_max, const FieldSpec& field,
                                    const std::vector<CheckId>& checks);

struct SuiteOptions {
  int n_max = 3;
  FieldSpec field = FieldSpec::rationals();
  std::vector<CheckId> checks = all_checks();
  int threads = 1;
  bool with_timing = true;
};

struct SuiteResult {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;         // gating failures only
  std::uint64_t report_only_fail = 0;
  std::uint64_t skip = 0;
  bool halted = false;            // stopped at the first gating failure
  bool ok() const { return fail == 0; }
};

// Runs the checks over the given instances in order, writing one JSON line
// per record to `out` and a (check, n, pass, fail, skip) summary to `csv`.
// Processing stops after the first instance with a gating failure; records
// for later instances are not emitted, so reports are deterministic for any
// thread count.
SuiteResult run_suite(const std::vector<Instance>& instances, const SuiteOptions& opt,
                      std::ostream& out, std::ostream& csv);

}  // namespace srpow
