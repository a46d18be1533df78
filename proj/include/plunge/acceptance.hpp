#pragma once

// End-to-end verification suite. Each check recomputes its quantities from
// scratch and compares them against closed forms, independent brute-force
// evaluations or the stated bounds. Tolerances are fixed in the source.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace plunge::acceptance {

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    double measured = 0.0;   ///< the headline number compared against the limit
    double limit = 0.0;
    std::string detail;
    double seconds = 0.0;
};

struct Check {
    std::string id;
    std::string name;
    std::function<CheckResult()> run;
};

const std::vector<Check>& checks();

/// Runs every check in order. Exceptions are caught and reported as failures.
std::vector<CheckResult> run_all(const std::function<void(const CheckResult&)>& on_result = {});

/// "PASS|FAIL  id  name  measured=... limit=...  (detail) [t s]"
std::string format_line(const CheckResult& r);

}  // namespace plunge::acceptance
