// Acceptance suite: one criterion per block, exact comparisons throughout,
// one PASS/FAIL line each, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <thread>

#include "qloz/verify.hpp"

using namespace qloz;

namespace {

int failures = 0;

int jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : static_cast<int>(hw);
}

void criterion(int number, const char* label, const SuiteReport& report) {
    bool pass = report.all_pass();
    if (!pass) ++failures;
    std::printf("%s criterion %2d %-28s %zu/%zu cases, %.1fs\n", pass ? "PASS" : "FAIL",
                number, label, report.passed, report.total(), report.duration_ms / 1000.0);
    if (!pass) {
        for (const auto& c : report.cases)
            if (!c.pass) {
                std::printf("     first failure: %s\n       formula:    %s\n       "
                            "enumerated: %s\n",
                            c.name.c_str(), c.expected.c_str(), c.got.c_str());
                break;
            }
    }
    std::fflush(stdout);
}

}  // namespace

int main() {
    const int J = jobs();

    criterion(1, "hexagon wt1/wt2 (<=3)", run_suite("hex", 3, J));
    criterion(2, "K regions (<=2)", run_suite("k", 2, J));
    criterion(3, "Q regions wt2/wt3 (<=2)", run_suite("q", 2, J));
    criterion(4, "B regions (<=1 + sampled 2)", run_suite("b", 2, J));
    // Criteria 5-7 share one F-suite run: wt2 polynomial vs the shifted
    // product and q=1 counts (5), the wt1/wt2 monomial ratio (6), and the two
    // Propp cases (7).
    {
        SuiteReport f = run_suite("f", 2, J);
        SuiteReport main_f, ratio, propp;
        main_f.suite = "f";
        ratio.suite = "f ratio";
        propp.suite = "propp";
        main_f.duration_ms = f.duration_ms;
        for (auto& c : f.cases) {
            SuiteReport* dst = &main_f;
            if (c.name.find("ratio") != std::string::npos) dst = &ratio;
            if (c.name.find("propp") != std::string::npos) dst = &propp;
            if (c.pass) ++dst->passed;
            dst->cases.push_back(std::move(c));
        }
        criterion(5, "F regions (<=1 + sampled 2)", main_f);
        criterion(6, "wt1/wt2 ratio is q^(g-h)", ratio);
        criterion(7, "Propp specialization n=0,1", propp);
    }
    {
        SuiteReport kuo = run_suite("kuo", 2, J);
        SuiteReport rec = run_suite("recurrences", 2, J);
        SuiteReport merged;
        merged.suite = "kuo+recurrences";
        merged.duration_ms = kuo.duration_ms + rec.duration_ms;
        for (auto& c : kuo.cases) merged.cases.push_back(std::move(c));
        for (auto& c : rec.cases) merged.cases.push_back(std::move(c));
        for (const auto& c : merged.cases)
            if (c.pass) ++merged.passed;
        criterion(8, "Kuo identities + recurrences", merged);
    }
    criterion(9, "constrained plane partitions", run_suite("corollary", 2, J));
    criterion(10, "q-algebra properties", run_suite("qalgebra", 3, J));
    criterion(11, "dp vs naive oracle (<=2)", run_suite("oracle", 2, J));

    if (failures == 0) {
        std::printf("ACCEPTANCE: all criteria pass\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    return 1;
}
