#pragma once

#include <string>
#include <vector>

#include "sequences.hpp"

namespace bse {

struct CheckResult {
    std::string name;
    unsigned long count;       // indices checked
    bool pass;
    long first_mismatch;       // -1 when everything agreed
};

struct SelftestReport {
    std::vector<CheckResult> checks;
    bool all_pass;
};

/*
 * Cross-checks the primary recurrences against the oracle routes: Bernoulli
 * vs Akiyama-Tanigawa and Euler vs the series reciprocal for n <= 200,
 * Stirling rows vs the polynomial product for n <= 200, plus the
 * von Staudt-Clausen denominator test for B_{2m}, m <= 50. With
 * `inject_fault` one oracle value is deliberately perturbed; the run must
 * then report a mismatch (negative-path hook for the CLI contract).
 */
SelftestReport run_selftest(Sequences& seq, bool inject_fault);

std::string selftest_to_json(const SelftestReport& report);

/*
 * Times `repeats` cold-cache runs of computing every sequence up to max_n
 * and verifying the three theorem identities up to max_n. Values recomputed
 * during the run are compared against a reference instance; the report
 * carries a `values_consistent` flag. Returns the JSON report.
 */
std::string run_bench(unsigned long max_n, unsigned int repeats);

}  // namespace bse
