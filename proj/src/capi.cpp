#include "bse.h"

#include <cstdlib>
#include <cstring>
#include <nlohmann/json.hpp>
#include <string>

#include "identities.hpp"
#include "rational.hpp"
#include "selftest.hpp"
#include "sequences.hpp"

struct bse_ctx {
    bse::Sequences seq;
    std::string last_error;
};

namespace {

char *dup_string(const std::string& s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
bse_status guarded(bse_ctx *ctx, Fn&& fn) {
    if (!ctx)
        return BSE_ERR_INVALID_ARGUMENT;
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return BSE_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return BSE_ERR_INTERNAL;
    }
}

std::string join_csv(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += parts[i];
    }
    return out;
}

// Combined sweep over every identity; rows carry the identity name.
std::string verify_all_json(bse::Sequences& seq, unsigned long n_min, unsigned long n_max,
                            bool *all_pass) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool ok = true;
    for (bse::IdentityId id : bse::all_identities()) {
        const auto report = bse::verify_range(seq, id, n_min, n_max);
        ok = ok && report.all_pass;
        for (const auto& r : report.rows) {
            nlohmann::ordered_json row;
            row["identity"] = bse::identity_name(id);
            row["n"] = r.n;
            if (r.lhs)
                row["lhs"] = bse::to_string(*r.lhs);
            if (r.rhs)
                row["rhs"] = bse::to_string(*r.rhs);
            row["pass"] = r.pass;
            rows.push_back(std::move(row));
        }
    }
    nlohmann::ordered_json out;
    out["kind"] = "report";
    out["identity"] = "all";
    out["n_min"] = n_min;
    out["n_max"] = n_max;
    out["rows"] = std::move(rows);
    out["all_pass"] = ok;
    *all_pass = ok;
    return out.dump();
}

}  // namespace

extern "C" {

bse_ctx *bse_ctx_new(void) {
    try {
        return new bse_ctx();
    } catch (...) {
        return nullptr;
    }
}

void bse_ctx_free(bse_ctx *ctx) { delete ctx; }

const char *bse_last_error(const bse_ctx *ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void bse_free(char *s) { std::free(s); }

bse_status bse_stirling(bse_ctx *ctx, unsigned long n, unsigned long k, char **out) {
    return guarded(ctx, [&] {
        *out = dup_string(bse::to_string(ctx->seq.stirling_s1(n, k)));
        return BSE_OK;
    });
}

bse_status bse_stirling_row(bse_ctx *ctx, unsigned long n, char **out_csv) {
    return guarded(ctx, [&] {
        std::vector<std::string> parts;
        for (const auto& v : ctx->seq.stirling_row(n))
            parts.push_back(bse::to_string(v));
        *out_csv = dup_string(join_csv(parts));
        return BSE_OK;
    });
}

bse_status bse_bernoulli(bse_ctx *ctx, unsigned long n, char **out) {
    return guarded(ctx, [&] {
        *out = dup_string(bse::to_string(ctx->seq.bernoulli(n)));
        return BSE_OK;
    });
}

bse_status bse_euler(bse_ctx *ctx, unsigned long n, char **out) {
    return guarded(ctx, [&] {
        *out = dup_string(bse::to_string(ctx->seq.euler_number(n)));
        return BSE_OK;
    });
}

bse_status bse_bernoulli_poly(bse_ctx *ctx, unsigned long n, char **out_csv) {
    return guarded(ctx, [&] {
        const bse::RatPoly poly = ctx->seq.bernoulli_poly_coeffs(n);
        std::vector<std::string> parts;
        for (const auto& c : poly.coeffs())
            parts.push_back(bse::to_string(c));
        *out_csv = dup_string(join_csv(parts));
        return BSE_OK;
    });
}

bse_status bse_bernoulli_poly_eval(bse_ctx *ctx, unsigned long n, const char *x, char **out) {
    return guarded(ctx, [&] {
        if (!x)
            throw std::invalid_argument("null argument x");
        const bse::Rat xv = bse::parse_rat(x);
        *out = dup_string(bse::to_string(ctx->seq.bernoulli_poly_eval(n, xv)));
        return BSE_OK;
    });
}

bse_status bse_falling_factorial(bse_ctx *ctx, const char *x, unsigned long n, char **out) {
    return guarded(ctx, [&] {
        if (!x)
            throw std::invalid_argument("null argument x");
        *out = dup_string(bse::to_string(bse::falling_factorial(bse::parse_rat(x), n)));
        return BSE_OK;
    });
}

bse_status bse_rising_factorial(bse_ctx *ctx, const char *x, unsigned long n, char **out) {
    return guarded(ctx, [&] {
        if (!x)
            throw std::invalid_argument("null argument x");
        *out = dup_string(bse::to_string(bse::rising_factorial(bse::parse_rat(x), n)));
        return BSE_OK;
    });
}

bse_status bse_double_factorial_odd(bse_ctx *ctx, unsigned long n, char **out) {
    return guarded(ctx, [&] {
        *out = dup_string(bse::to_string(bse::double_factorial_odd(n)));
        return BSE_OK;
    });
}

bse_status bse_binomial(bse_ctx *ctx, unsigned long n, unsigned long k, char **out) {
    return guarded(ctx, [&] {
        *out = dup_string(bse::to_string(bse::binomial_int(n, k)));
        return BSE_OK;
    });
}

bse_status bse_binomial_rat(bse_ctx *ctx, const char *x, unsigned long n, char **out) {
    return guarded(ctx, [&] {
        if (!x)
            throw std::invalid_argument("null argument x");
        *out = dup_string(bse::to_string(bse::binomial_rat(bse::parse_rat(x), n)));
        return BSE_OK;
    });
}

bse_status bse_verify(bse_ctx *ctx, const char *identity, unsigned long n_min,
                      unsigned long n_max, int *all_pass, char **report_json) {
    return guarded(ctx, [&] {
        if (!identity || !all_pass || !report_json)
            throw std::invalid_argument("null argument");
        if (std::string(identity) == "all") {
            bool ok = false;
            *report_json = dup_string(verify_all_json(ctx->seq, n_min, n_max, &ok));
            *all_pass = ok ? 1 : 0;
            return BSE_OK;
        }
        const auto id = bse::identity_from_name(identity);
        if (!id)
            throw std::invalid_argument("unknown identity: '" + std::string(identity) + "'");
        const auto report = bse::verify_range(ctx->seq, *id, n_min, n_max);
        *all_pass = report.all_pass ? 1 : 0;
        *report_json = dup_string(bse::report_to_json(report));
        return BSE_OK;
    });
}

bse_status bse_selftest(bse_ctx *ctx, int inject_fault, int *all_pass, char **report_json) {
    return guarded(ctx, [&] {
        if (!all_pass || !report_json)
            throw std::invalid_argument("null argument");
        const auto report = bse::run_selftest(ctx->seq, inject_fault != 0);
        *all_pass = report.all_pass ? 1 : 0;
        *report_json = dup_string(bse::selftest_to_json(report));
        return BSE_OK;
    });
}

bse_status bse_bench(bse_ctx *ctx, unsigned long max_n, unsigned int repeats,
                     char **report_json) {
    return guarded(ctx, [&] {
        if (!report_json)
            throw std::invalid_argument("null argument");
        if (repeats < 1)
            throw std::invalid_argument("repeats must be >= 1");
        *report_json = dup_string(bse::run_bench(max_n, repeats));
        return BSE_OK;
    });
}

}  // extern "C"
