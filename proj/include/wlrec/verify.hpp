#pragma once

#include <string>
#include <vector>

namespace wlrec {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Suites: "tables" (published closed forms and 1F1 values), "appendixB"
/// (partition sum and mixed moments), "small" (recursion vs quadrature, n <= 3), "all".
std::vector<CheckResult> run_verify_suite(const std::string& suite);

}  // namespace wlrec
