#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>

#include "bse.h"
#include "rational.hpp"

namespace {

struct Ctx {
    bse_ctx *p = bse_ctx_new();
    ~Ctx() { bse_ctx_free(p); }
};

std::string take(char *s) {
    std::string out = s ? s : "";
    bse_free(s);
    return out;
}

}  // namespace

TEST_CASE("sequence values cross the C boundary as strings") {
    Ctx ctx;
    REQUIRE(ctx.p);
    char *out = nullptr;

    REQUIRE(bse_bernoulli(ctx.p, 12, &out) == BSE_OK);
    CHECK(take(out) == "-691/2730");

    REQUIRE(bse_stirling(ctx.p, 4, 1, &out) == BSE_OK);
    CHECK(take(out) == "-6");

    REQUIRE(bse_stirling_row(ctx.p, 4, &out) == BSE_OK);
    CHECK(take(out) == "0,-6,11,-6,1");

    REQUIRE(bse_euler(ctx.p, 6, &out) == BSE_OK);
    CHECK(take(out) == "-61");

    REQUIRE(bse_bernoulli_poly(ctx.p, 2, &out) == BSE_OK);
    CHECK(take(out) == "1/6,-1,1");

    REQUIRE(bse_bernoulli_poly_eval(ctx.p, 2, "1/4", &out) == BSE_OK);
    CHECK(take(out) == "-1/48");

    REQUIRE(bse_falling_factorial(ctx.p, "1/2", 2, &out) == BSE_OK);
    CHECK(take(out) == "-1/4");

    REQUIRE(bse_rising_factorial(ctx.p, "3/4", 2, &out) == BSE_OK);
    CHECK(take(out) == "21/16");

    REQUIRE(bse_rising_factorial(ctx.p, "3/4", 0, &out) == BSE_OK);
    CHECK(take(out) == "1");

    REQUIRE(bse_double_factorial_odd(ctx.p, 3, &out) == BSE_OK);
    CHECK(take(out) == "15");

    REQUIRE(bse_binomial(ctx.p, 5, 2, &out) == BSE_OK);
    CHECK(take(out) == "10");

    REQUIRE(bse_binomial_rat(ctx.p, "1/2", 2, &out) == BSE_OK);
    CHECK(take(out) == "-1/8");
}

TEST_CASE("invalid arguments set the error message") {
    Ctx ctx;
    char *out = nullptr;
    CHECK(bse_bernoulli_poly_eval(ctx.p, 2, "not-a-rational", &out) ==
          BSE_ERR_INVALID_ARGUMENT);
    CHECK(std::string(bse_last_error(ctx.p)).find("not-a-rational") != std::string::npos);
    CHECK(bse_falling_factorial(ctx.p, "1/0", 2, &out) == BSE_ERR_INVALID_ARGUMENT);
    CHECK(bse_falling_factorial(ctx.p, nullptr, 2, &out) == BSE_ERR_INVALID_ARGUMENT);
    CHECK(bse_bernoulli(nullptr, 0, &out) == BSE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify reports") {
    Ctx ctx;
    char *out = nullptr;
    int all_pass = 0;

    REQUIRE(bse_verify(ctx.p, "first", 0, 2, &all_pass, &out) == BSE_OK);
    CHECK(all_pass == 1);
    const auto report = nlohmann::json::parse(take(out));
    CHECK(report["identity"] == "first");
    REQUIRE(report["rows"].size() == 3);
    CHECK(bse::parse_rat(report["rows"][2]["rhs"].get<std::string>()) == bse::make_rat(2, 3));

    REQUIRE(bse_verify(ctx.p, "all", 0, 5, &all_pass, &out) == BSE_OK);
    CHECK(all_pass == 1);
    const auto all = nlohmann::json::parse(take(out));
    CHECK(all["identity"] == "all");
    CHECK(all["rows"].size() == 8 * 6);
    CHECK(all["all_pass"] == true);

    CHECK(bse_verify(ctx.p, "fourth", 0, 2, &all_pass, &out) == BSE_ERR_INVALID_ARGUMENT);
    CHECK(bse_verify(ctx.p, "first", 3, 2, &all_pass, &out) == BSE_ERR_INVALID_ARGUMENT);
    CHECK(bse_verify(ctx.p, nullptr, 0, 2, &all_pass, &out) == BSE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("selftest and the fault-injection hook") {
    Ctx ctx;
    char *out = nullptr;
    int all_pass = 0;

    REQUIRE(bse_selftest(ctx.p, 1, &all_pass, &out) == BSE_OK);
    CHECK(all_pass == 0);
    const auto report = nlohmann::json::parse(take(out));
    CHECK(report["all_pass"] == false);
    bool found = false;
    for (const auto& row : report["rows"])
        if (row["name"] == "bernoulli_vs_akiyama_tanigawa") {
            found = true;
            CHECK(row["pass"] == false);
            CHECK(row["first_mismatch"] == 12);
        }
    CHECK(found);
}

TEST_CASE("bench argument validation") {
    Ctx ctx;
    char *out = nullptr;
    CHECK(bse_bench(ctx.p, 10, 0, &out) == BSE_ERR_INVALID_ARGUMENT);
    REQUIRE(bse_bench(ctx.p, 0, 1, &out) == BSE_OK);
    const auto report = nlohmann::json::parse(take(out));
    CHECK(report["kind"] == "bench");
    CHECK(report["runs"].size() == 1);
    CHECK(report["values_consistent"] == true);
}
