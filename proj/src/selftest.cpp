#include "selftest.hpp"

#include <chrono>
#include <nlohmann/json.hpp>

#include "identities.hpp"
#include "oracles.hpp"

namespace bse {

namespace {

constexpr unsigned long kOracleMaxN = 200;
constexpr unsigned long kVonStaudtMaxM = 50;

// Product of primes p with (p-1) | m. Trial division is plenty for p <= 101.
Int von_staudt_denominator(unsigned long m) {
    Int d(1);
    for (unsigned long p = 2; p <= m + 1; ++p) {
        bool prime = p >= 2;
        for (unsigned long q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (prime && m % (p - 1) == 0)
            d *= Int(p);
    }
    return d;
}

}  // namespace

SelftestReport run_selftest(Sequences& seq, bool inject_fault) {
    SelftestReport report;

    CheckResult bern{"bernoulli_vs_akiyama_tanigawa", kOracleMaxN + 1, true, -1};
    const auto bern_oracle = oracles::bernoulli_akiyama_tanigawa_prefix(kOracleMaxN);
    for (unsigned long n = 0; n <= kOracleMaxN; ++n) {
        Rat oracle = bern_oracle[n];
        if (inject_fault && n == 12)
            oracle += 1;
        if (seq.bernoulli(n) != oracle) {
            bern.pass = false;
            bern.first_mismatch = static_cast<long>(n);
            break;
        }
    }
    report.checks.push_back(bern);

    CheckResult euler{"euler_vs_series_reciprocal", kOracleMaxN + 1, true, -1};
    const auto euler_oracle = oracles::euler_by_series_reciprocal_prefix(kOracleMaxN);
    for (unsigned long n = 0; n <= kOracleMaxN; ++n)
        if (seq.euler_number(n) != euler_oracle[n]) {
            euler.pass = false;
            euler.first_mismatch = static_cast<long>(n);
            break;
        }
    report.checks.push_back(euler);

    CheckResult stirling{"stirling_vs_poly_product", kOracleMaxN + 1, true, -1};
    const auto stirling_oracle = oracles::stirling_rows_by_product_prefix(kOracleMaxN);
    for (unsigned long n = 0; n <= kOracleMaxN; ++n)
        if (seq.stirling_row(n) != stirling_oracle[n]) {
            stirling.pass = false;
            stirling.first_mismatch = static_cast<long>(n);
            break;
        }
    report.checks.push_back(stirling);

    CheckResult vsc{"von_staudt_clausen", kVonStaudtMaxM, true, -1};
    for (unsigned long m = 1; m <= kVonStaudtMaxM; ++m)
        if (seq.bernoulli(2 * m).get_den() != von_staudt_denominator(2 * m)) {
            vsc.pass = false;
            vsc.first_mismatch = static_cast<long>(2 * m);
            break;
        }
    report.checks.push_back(vsc);

    report.all_pass = true;
    for (const auto& c : report.checks)
        report.all_pass = report.all_pass && c.pass;
    return report;
}

std::string selftest_to_json(const SelftestReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json row;
        row["name"] = c.name;
        row["count"] = c.count;
        row["pass"] = c.pass;
        if (c.first_mismatch >= 0)
            row["first_mismatch"] = c.first_mismatch;
        checks.push_back(std::move(row));
    }
    nlohmann::ordered_json out;
    out["kind"] = "report";
    out["check"] = "selftest";
    out["rows"] = std::move(checks);
    out["all_pass"] = report.all_pass;
    return out.dump();
}

std::string run_bench(unsigned long max_n, unsigned int repeats) {
    using clock = std::chrono::steady_clock;
    const auto ms = [](clock::duration d) {
        return std::chrono::duration<double, std::milli>(d).count();
    };

    // Reference values for the consistency check.
    Sequences ref;
    const auto ref_row = ref.stirling_row(max_n);
    const Rat ref_bern = ref.bernoulli(max_n + 1);
    const Int ref_euler = ref.euler_number(max_n);

    bool consistent = true;
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (unsigned int r = 0; r < repeats; ++r) {
        Sequences fresh;
        const auto t0 = clock::now();
        const auto row = fresh.stirling_row(max_n);
        const Rat bern = fresh.bernoulli(max_n + 1);
        const Int eul = fresh.euler_number(max_n);
        fresh.bernoulli_poly_coeffs(max_n);
        const auto t1 = clock::now();
        for (IdentityId id : {IdentityId::first, IdentityId::second, IdentityId::third}) {
            const auto rep = verify_range(fresh, id, 0, max_n);
            consistent = consistent && rep.all_pass;
        }
        const auto t2 = clock::now();
        consistent = consistent && row == ref_row && bern == ref_bern && eul == ref_euler;

        nlohmann::ordered_json run;
        run["sequences_ms"] = ms(t1 - t0);
        run["verify_ms"] = ms(t2 - t1);
        runs.push_back(std::move(run));
    }

    nlohmann::ordered_json out;
    out["kind"] = "bench";
    out["max_n"] = max_n;
    out["repeats"] = repeats;
    out["runs"] = std::move(runs);
    out["values_consistent"] = consistent;
    return out.dump();
}

}  // namespace bse
