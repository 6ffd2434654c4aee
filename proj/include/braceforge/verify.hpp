#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "braceforge/catalog.hpp"

namespace braceforge {

// Outcome of one property suite on one catalog subject. Subjects outside a
// suite's hypotheses are reported as "skip" with the reason.
struct SuiteResult {
  std::string subject;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

using SuiteFn = std::function<std::vector<SuiteResult>(const std::vector<NamedBrace>&)>;

// Executable property suites, keyed by selector name.
const std::map<std::string, SuiteFn>& suite_registry();
std::vector<std::string> suite_names();

struct VerifySummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

// Runs one suite (or every suite for selector "all") over the catalog braces
// whose name contains `filter`. Appends to `results`.
VerifySummary run_suites(const std::string& selector, const std::string& filter,
                         std::vector<SuiteResult>& results);

}  // namespace braceforge
