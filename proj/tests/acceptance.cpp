// Acceptance suite: runs the full verification registry and reports one
// line per criterion, enforcing the stated runtime budgets. Exit code 0
// only when every criterion passes.

#include <cstdio>
#include <map>
#include <vector>

#include "g2c/verify.hpp"

int main() {
    g2c::VerificationReport report = g2c::run_verification(/*seed=*/20240901, /*jobs=*/1);

    struct Criterion {
        const char* section;
        const char* description;
        double budget_ms;  // 0 = no budget
    };
    const std::vector<Criterion> criteria = {
        {"octonion", "octonion/derivation core: span 14, Leibniz, cyclic identity, bracket vectors", 1000},
        {"grading", "grading: seven 2-dim Cartan components, component products", 1000},
        {"combinatorics", "combinatorics: |group|=168, 28 triplets, 779 nice sets, 24 orbits, table", 60000},
        {"contraction", "contraction: success iff (b2) on 500 maps, center formula", 0},
        {"canonical", "canonical forms: T14 lambda=15/8, parameter merges, T8~T10 with swap map", 0},
        {"invariants", "invariant table: 24 rows plus parameter samples", 10000},
        {"fixtures", "fixture suite: the three small graded examples", 0},
        {"properties", "property suites: spectral law, profile invariance", 0},
    };

    std::map<std::string, double> section_ms;
    for (const auto& [name, ms] : report.section_ms) section_ms[name] = ms;

    int failed_criteria = 0;
    int n = 0;
    for (const auto& c : criteria) {
        ++n;
        int total = 0, failed = 0;
        for (const auto& check : report.checks)
            if (check.section == c.section) {
                ++total;
                if (!check.pass) ++failed;
            }
        double ms = section_ms.count(c.section) ? section_ms[c.section] : 0.0;
        bool in_budget = (c.budget_ms <= 0.0) || (ms <= c.budget_ms);
        bool pass = (failed == 0) && (total > 0) && in_budget;
        if (!pass) ++failed_criteria;
        std::printf("criterion %d: %s  [%d/%d checks, %.0f ms]%s -- %s\n", n, pass ? "PASS" : "FAIL",
                    total - failed, total, ms, in_budget ? "" : " (over budget)", c.description);
        if (failed > 0)
            for (const auto& check : report.checks)
                if (check.section == c.section && !check.pass)
                    std::printf("    failed: %s expected %s got %s\n", check.id.c_str(),
                                check.expected.c_str(), check.computed.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed_criteria,
                criteria.size());
    return failed_criteria == 0 ? 0 : 1;
}
