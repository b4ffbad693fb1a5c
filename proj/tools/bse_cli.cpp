// Command-line front end. Links only the public C API (bse.h); all output
// formatting happens here.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "bse.h"

namespace {

// Owns a context for the lifetime of the invocation.
struct Ctx {
    bse_ctx *p = bse_ctx_new();
    ~Ctx() { bse_ctx_free(p); }
};

// Takes ownership of a C string result.
std::string take(char *s) {
    std::string out = s ? s : "";
    bse_free(s);
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(',', start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

int fail_usage(bse_ctx *ctx) {
    std::cerr << "error: " << bse_last_error(ctx) << "\n";
    return 2;
}

void print_value(const std::string& sequence, const std::string& value,
                 const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json out;
        out["kind"] = "value";
        out["sequence"] = sequence;
        out["value"] = value;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

void print_row(const std::string& sequence, const std::string& row_csv,
               const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json out;
        out["kind"] = "row";
        out["sequence"] = sequence;
        out["rows"] = split_csv(row_csv);
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << row_csv << "\n";
    } else {
        for (const auto& v : split_csv(row_csv))
            std::cout << v << "\n";
    }
}

void print_report(const std::string& report_json, const std::string& format) {
    if (format == "json") {
        std::cout << report_json << "\n";
        return;
    }
    const auto report = nlohmann::json::parse(report_json);
    if (format == "csv") {
        std::cout << "identity,n,lhs,rhs,pass\n";
        const std::string top = report.value("identity", report.value("check", ""));
        for (const auto& row : report["rows"]) {
            std::cout << row.value("identity", top) << ","
                      << (row.contains("n") ? std::to_string(row["n"].get<unsigned long>())
                                            : row.value("name", std::string()))
                      << "," << row.value("lhs", "") << "," << row.value("rhs", "") << ","
                      << (row["pass"].get<bool>() ? "true" : "false") << "\n";
        }
    } else {
        const std::string top = report.value("identity", report.value("check", ""));
        for (const auto& row : report["rows"]) {
            std::cout << row.value("identity", top);
            if (row.contains("n"))
                std::cout << " n=" << row["n"].get<unsigned long>();
            if (row.contains("name"))
                std::cout << " " << row["name"].get<std::string>();
            if (row.contains("count"))
                std::cout << " count=" << row["count"].get<unsigned long>();
            if (row.contains("first_mismatch"))
                std::cout << " first_mismatch=" << row["first_mismatch"].get<long>();
            if (row.contains("lhs"))
                std::cout << " lhs=" << row["lhs"].get<std::string>()
                          << " rhs=" << row["rhs"].get<std::string>();
            std::cout << (row["pass"].get<bool>() ? " pass" : " FAIL") << "\n";
        }
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact Bernoulli / Euler / Stirling sequence computation and "
                 "identity verification"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"json", "csv", "plain"};
    const std::vector<std::string> sequences = {"stirling", "bernoulli", "euler",
                                                "bernoulli-poly", "falling", "rising",
                                                "double-factorial"};
    const std::vector<std::string> identities = {"first", "second", "third",  "recur",
                                                 "stirdef", "telescoped", "half",
                                                 "quarter", "all"};

    std::string sequence, format = "json", x_str, identity = "all";
    unsigned long n = 0, k = 0, max_n = 100;
    unsigned int repeats = 1;
    bool row_flag = false, inject_fault = false;

    auto *compute = app.add_subcommand("compute", "Compute one sequence value or row");
    compute->add_option("sequence", sequence, "Which sequence")
        ->required()
        ->check(CLI::IsMember(sequences));
    auto *n_opt = compute->add_option("--n", n, "Index n");
    auto *k_opt = compute->add_option("--k", k, "Second index (stirling)");
    compute->add_flag("--row", row_flag, "Emit the whole row (stirling)");
    auto *x_opt = compute->add_option("--x", x_str, "Rational argument as p/q");
    compute->add_option("--format", format)->check(CLI::IsMember(formats));

    auto *verify = app.add_subcommand("verify", "Verify identities over 0..max-n");
    verify->add_option("--identity", identity)->check(CLI::IsMember(identities));
    verify->add_option("--max-n", max_n, "Upper end of the sweep");
    verify->add_option("--format", format)->check(CLI::IsMember(formats));

    auto *selftest = app.add_subcommand("selftest", "Cross-check against oracle algorithms");
    selftest->add_flag("--inject-fault", inject_fault,
                       "Perturb one oracle value (must fail; for testing)");
    selftest->add_option("--format", format)->check(CLI::IsMember(formats));

    auto *bench = app.add_subcommand("bench", "Time sequence computation and verification");
    bench->add_option("--max-n", max_n, "Upper end of the sweep");
    bench->add_option("--repeats", repeats, "Number of timed runs")->check(CLI::PositiveNumber);
    bench->add_option("--format", format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Ctx ctx;
    if (!ctx.p) {
        std::cerr << "error: out of memory\n";
        return 2;
    }

    if (compute->parsed()) {
        const bool needs_n = sequence != "falling" && sequence != "rising";
        if (needs_n && n_opt->count() == 0) {
            std::cerr << "error: " << sequence << " requires --n\n";
            return 2;
        }
        char *out = nullptr;
        bse_status st = BSE_OK;
        bool is_row = false;
        if (sequence == "stirling") {
            if (row_flag) {
                st = bse_stirling_row(ctx.p, n, &out);
                is_row = true;
            } else if (k_opt->count() == 0) {
                std::cerr << "error: stirling requires --k or --row\n";
                return 2;
            } else {
                st = bse_stirling(ctx.p, n, k, &out);
            }
        } else if (sequence == "bernoulli") {
            st = bse_bernoulli(ctx.p, n, &out);
        } else if (sequence == "euler") {
            st = bse_euler(ctx.p, n, &out);
        } else if (sequence == "bernoulli-poly") {
            if (x_opt->count() > 0) {
                st = bse_bernoulli_poly_eval(ctx.p, n, x_str.c_str(), &out);
            } else {
                st = bse_bernoulli_poly(ctx.p, n, &out);
                is_row = true;
            }
        } else if (sequence == "double-factorial") {
            st = bse_double_factorial_odd(ctx.p, n, &out);
        } else {  // falling | rising
            if (x_opt->count() == 0 || n_opt->count() == 0) {
                std::cerr << "error: " << sequence << " requires --x and --n\n";
                return 2;
            }
            st = sequence == "falling"
                     ? bse_falling_factorial(ctx.p, x_str.c_str(), n, &out)
                     : bse_rising_factorial(ctx.p, x_str.c_str(), n, &out);
        }
        if (st != BSE_OK)
            return fail_usage(ctx.p);
        const std::string result = take(out);
        if (is_row)
            print_row(sequence, result, format);
        else
            print_value(sequence, result, format);
        return 0;
    }

    if (verify->parsed()) {
        char *out = nullptr;
        int all_pass = 0;
        if (bse_verify(ctx.p, identity.c_str(), 0, max_n, &all_pass, &out) != BSE_OK)
            return fail_usage(ctx.p);
        print_report(take(out), format);
        return all_pass ? 0 : 1;
    }

    if (selftest->parsed()) {
        char *out = nullptr;
        int all_pass = 0;
        if (bse_selftest(ctx.p, inject_fault ? 1 : 0, &all_pass, &out) != BSE_OK)
            return fail_usage(ctx.p);
        print_report(take(out), format);
        return all_pass ? 0 : 1;
    }

    // bench
    char *out = nullptr;
    if (bse_bench(ctx.p, max_n, repeats, &out) != BSE_OK)
        return fail_usage(ctx.p);
    std::cout << take(out) << "\n";
    return 0;
}
