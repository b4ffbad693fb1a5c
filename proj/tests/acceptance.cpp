// Acceptance suite: one line per criterion, exit nonzero on any failure.
// argv[1] is the path to the CLI binary (wired up by CMake).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

#include "identities.hpp"
#include "oracles.hpp"
#include "sequences.hpp"

using namespace bse;

namespace {

int failures = 0;

void criterion(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS " : "FAIL ") << name;
    if (!pass && !detail.empty())
        std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass)
        ++failures;
}

struct CliResult {
    int exit_code;
    std::string stdout_text;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Int von_staudt_denominator(unsigned long m) {
    Int d(1);
    for (unsigned long p = 2; p <= m + 1; ++p) {
        bool prime = true;
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

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    Sequences seq;

    // Eqs. verified with exact rational equality for every n in 0..300.
    {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        unsigned long bad = 0;
        for (unsigned long n = 0; n <= 300 && ok; ++n) {
            if (!identity_one_sides(seq, n).equal || !identity_two_sides(seq, n).equal ||
                !identity_three_sides(seq, n).equal) {
                ok = false;
                bad = n;
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        criterion("theorem_sweep_exact_0_300", ok, "first failure at n=" + std::to_string(bad));
        criterion("theorem_sweep_under_30s", secs < 30.0,
                  "took " + std::to_string(secs) + "s");
    }

    // Hand-derived anchors.
    {
        bool ok = identity_one_sides(seq, 0).lhs == 1 &&
                  identity_one_sides(seq, 1).lhs == make_rat(-1, 2) &&
                  identity_one_sides(seq, 2).lhs == make_rat(2, 3) &&
                  identity_two_sides(seq, 0).lhs == make_rat(1, 2) &&
                  identity_two_sides(seq, 1).lhs == make_rat(-1, 8) &&
                  identity_two_sides(seq, 2).lhs == make_rat(1, 8) &&
                  identity_three_sides(seq, 0).lhs == make_rat(-1, 4) &&
                  identity_three_sides(seq, 1).lhs == make_rat(3, 32);
        criterion("hand_derived_anchors", ok);
    }

    // Oracle equivalence to n = 200.
    {
        const auto bern = oracles::bernoulli_akiyama_tanigawa_prefix(200);
        const auto eul = oracles::euler_by_series_reciprocal_prefix(200);
        const auto stir = oracles::stirling_rows_by_product_prefix(200);
        bool ok = true;
        for (unsigned long n = 0; n <= 200; ++n)
            ok = ok && seq.bernoulli(n) == bern[n] && seq.euler_number(n) == eul[n] &&
                 seq.stirling_row(n) == stir[n];
        criterion("oracle_equivalence_0_200", ok);
    }

    // Von Staudt-Clausen denominators for B_{2m}, m <= 50.
    {
        bool ok = true;
        for (unsigned long m = 1; m <= 50; ++m)
            ok = ok && seq.bernoulli(2 * m).get_den() == von_staudt_denominator(2 * m);
        criterion("von_staudt_clausen_denominators", ok);
    }

    // Proof-chain checks, all exact.
    {
        bool ok = true;
        for (unsigned long k = 0; k <= 40; ++k)
            ok = ok && check_forward_difference_poly(seq, k);
        criterion("forward_difference_poly_k_40", ok);

        const auto tel = verify_range(seq, IdentityId::telescoped, 0, 40);
        criterion("telescoped_n_40_y_50", tel.all_pass);

        bool hv = true, qv = true;
        for (unsigned long k = 0; k <= 100; ++k) {
            hv = hv && check_half_value(seq, k);
            qv = qv && check_quarter_value(seq, k);
        }
        criterion("half_value_k_100", hv);
        criterion("quarter_value_k_100", qv);
    }

    // Swapping in B_1 = +1/2 must break identity (first) at n = 1.
    {
        const auto row = seq.stirling_row(1);
        Rat lhs = Rat(row[0]) * seq.bernoulli(0) + Rat(row[1]) * make_rat(1, 2);
        criterion("wrong_convention_fails", lhs != identity_one_sides(seq, 1).rhs);
    }

    // CLI contract.
    if (cli.empty()) {
        criterion("cli_contract", false, "no CLI path given");
    } else {
        const auto ok_run = run_cli(cli, "verify --identity all --max-n 100");
        criterion("cli_verify_all_exit_0", ok_run.exit_code == 0,
                  "exit=" + std::to_string(ok_run.exit_code));

        const auto fault = run_cli(cli, "selftest --inject-fault");
        criterion("cli_injected_fault_exit_1", fault.exit_code == 1,
                  "exit=" + std::to_string(fault.exit_code));

        const auto bad = run_cli(cli, "verify --no-such-flag");
        const auto bad2 = run_cli(cli, "compute bernoulli");
        criterion("cli_malformed_flags_exit_2", bad.exit_code == 2 && bad2.exit_code == 2,
                  "exit=" + std::to_string(bad.exit_code) + "," +
                      std::to_string(bad2.exit_code));

        bool rt = false;
        const auto json_run = run_cli(cli, "compute bernoulli --n 12 --format json");
        try {
            const auto obj = nlohmann::json::parse(json_run.stdout_text);
            const Rat parsed = parse_rat(obj["value"].get<std::string>());
            rt = json_run.exit_code == 0 && parsed == seq.bernoulli(12) &&
                 to_string(parsed) == obj["value"].get<std::string>();
        } catch (...) {
        }
        criterion("cli_json_rational_round_trip", rt);

        const auto csv_run = run_cli(cli, "compute stirling --n 4 --row --format csv");
        criterion("cli_stirling_row_csv",
                  csv_run.exit_code == 0 && csv_run.stdout_text == "0,-6,11,-6,1\n");
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
