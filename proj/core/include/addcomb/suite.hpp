#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "addcomb/instances.hpp"
#include "addcomb/report.hpp"

namespace addcomb {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckOutcome {
  CheckStatus status = CheckStatus::kSkip;
  Json detail;  // counterexample payload on failure
};

struct SuiteConfig;
using CheckFn = std::function<CheckOutcome(const Instance&, const SuiteConfig&)>;

struct SuiteConfig {
  std::string id = "suite";
  std::vector<std::string> checks{"all"};
  GeneratorSpec generator;

  int incm_m = 4;
  int jbound_k = 4;
  int jbound_m = 10;
  int moment_m = 2;
  int iso_k = 3;
  std::vector<Rational> deltas{make_rational(1, 10), make_rational(1, 5), make_rational(3, 10)};
  std::vector<Rational> epsilons{make_rational(1, 10), make_rational(1, 4), make_rational(2, 5)};
  std::size_t witness_budget = 12;

  // Extra checks by name, on top of the registry; they may shadow built-ins.
  std::map<std::string, CheckFn> extra_checks;
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct Counterexample {
  std::string check;
  std::string instance;
  Json payload;
};

struct SuiteReport {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t instance_count = 0;
  std::vector<CheckTally> tallies;
  std::vector<Counterexample> counterexamples;
  double seconds = 0.0;  // wall time, not serialized

  // 0 when every check passed, 1 when a counterexample was found.
  int exit_code() const { return counterexamples.empty() ? 0 : 1; }
};

// Names of the built-in checks, in execution order.
std::vector<std::string> registered_checks();

// Throws DomainError on an unknown check name and BudgetExceeded when the
// generator or a check runs out of budget.
SuiteReport run_suite(const SuiteConfig& config);

// Deterministic document (no timing): identical across runs for a fixed
// config.
Json to_json(const SuiteReport& r);

}  // namespace addcomb
