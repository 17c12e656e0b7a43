#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace g2c {

struct Check {
    std::string id;        // stable machine name
    std::string section;   // pipeline stage that produced it
    std::string locator;   // golden-table row this asserts
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    std::vector<std::pair<std::string, double>> section_ms;

    int total() const { return static_cast<int>(checks.size()); }
    int failed() const;
    std::string text() const;         // one line per check plus a summary; deterministic
    std::string timing_text() const;  // per-section runtimes (varies run to run)
    nlohmann::json json() const;
};

/// Runs the whole pipeline (octonion core, grading, combinatorics,
/// contraction equivalences, canonical forms, the 24-row invariant
/// sweep, fixtures, property suites) against the embedded golden data.
/// A failing check never aborts the run.
VerificationReport run_verification(std::uint64_t seed = 20240901, int jobs = 1);

/// Expected invariant profile rows of the golden table, keyed by class.
struct GoldenRow {
    int id;
    int dim_center, dim_derived;
    int nilindex;   // 0 = not nilpotent
    int solvindex;  // 0 = not solvable
    bool semisimple, reductive, simple;
    int dim_radical, levi_dim;
};
const std::vector<GoldenRow>& golden_invariant_rows();

}  // namespace g2c
