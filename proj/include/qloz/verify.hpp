#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qloz/qpoly.hpp"

namespace qloz {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string expected;  // formula-side value
    std::string got;       // enumeration-side value
};

struct VerifyCase {
    std::string name;
    std::function<CaseResult()> run;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    std::size_t passed = 0;
    double duration_ms = 0;

    std::size_t total() const { return cases.size(); }
    bool all_pass() const { return passed == cases.size(); }
    std::string to_json() const;
};

/// Suites: hex, k, q, b, f, kuo, recurrences, corollary, calibration,
/// qalgebra, oracle, all. max_n bounds the parameter sweeps; jobs shards the
/// independent cases. Report order is canonical regardless of scheduling.
SuiteReport run_suite(const std::string& suite, long long max_n, int jobs);

std::vector<std::string> suite_names();

/// Runs prepared cases on `jobs` workers; order of results is preserved.
std::vector<CaseResult> run_cases(const std::vector<VerifyCase>& cases, int jobs);

}  // namespace qloz
