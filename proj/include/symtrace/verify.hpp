#ifndef SYMTRACE_VERIFY_HPP
#define SYMTRACE_VERIFY_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace symtrace {

// Self-check suite options. `only` keeps the criteria whose name contains
// it as a substring; empty runs everything. `corrupt_alpha` is a negative
// control for the harness itself: it injects a 1/1000 error into the
// harmonic correction of one power, which must fail the first criterion.
struct VerifyOptions {
  std::string only;
  bool corrupt_alpha = false;
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured errors, counts, or the first failure
  double ms = 0;
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  bool all_pass() const;
};

// Runs the full criteria matrix (filtered by opts.only), never throws;
// a criterion that raises an error is reported as failed with its message.
VerifyReport run_verify(const VerifyOptions& opts = {});

// One line per criterion: "PASS  name  (12 ms)  detail".
std::string verify_pretty(const VerifyReport& r);

nlohmann::json verify_json(const VerifyReport& r);

}  // namespace symtrace

#endif
