#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "poly.hpp"
#include "rational.hpp"

using namespace bse;

TEST_CASE("rational serialization conventions") {
    CHECK(to_string(make_rat(-691, 2730)) == "-691/2730");
    CHECK(to_string(make_rat(1, 1)) == "1");
    CHECK(to_string(make_rat(4, 2)) == "2");
    CHECK(to_string(make_rat(0, 7)) == "0");
    CHECK(to_string(make_rat(1, -2)) == "-1/2");  // sign moves to the numerator
    CHECK(to_string(Int(-6)) == "-6");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rat("-691/2730") == make_rat(-691, 2730));
    CHECK(parse_rat("5") == make_rat(5));
    CHECK(parse_rat("6/4") == make_rat(3, 2));
    CHECK(parse_rat("1/-2") == make_rat(-1, 2));
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("3/"), std::invalid_argument);
}

TEST_CASE("parse(serialize(x)) == x over random rationals") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const Rat x = make_rat(num(rng), den(rng));
        CHECK(parse_rat(to_string(x)) == x);
    }
}

TEST_CASE("RatPoly normalization") {
    CHECK(RatPoly().is_zero());
    CHECK(RatPoly().coeffs() == std::vector<Rat>{Rat(0)});
    CHECK(RatPoly({Rat(1), Rat(0), Rat(0)}).degree() == 0);
    CHECK(RatPoly({Rat(0), Rat(0)}).is_zero());
    CHECK(RatPoly::monomial(3).coeff(3) == 1);
    CHECK(RatPoly::monomial(3).coeff(5) == 0);
}

TEST_CASE("RatPoly arithmetic") {
    const RatPoly p({make_rat(1, 2), Rat(0), Rat(1)});  // 1/2 + x^2
    const RatPoly q({Rat(-1), Rat(1)});                 // x - 1
    CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK((p + q) - q == p);
    CHECK((p - p).is_zero());
    CHECK((p * RatPoly()).is_zero());
    CHECK(p.eval(make_rat(1, 2)) == make_rat(3, 4));
    CHECK((p * q).eval(Rat(3)) == p.eval(Rat(3)) * q.eval(Rat(3)));
}

TEST_CASE("substitute_linear agrees with evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> small(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> c;
        for (int i = 0; i < 6; ++i)
            c.push_back(make_rat(small(rng), den(rng)));
        const RatPoly p(std::move(c));
        const Rat a = make_rat(small(rng), den(rng));
        const Rat b = make_rat(small(rng), den(rng));
        const RatPoly sub = p.substitute_linear(a, b);
        for (long xi = -3; xi <= 3; ++xi) {
            const Rat x = make_rat(xi, 2);
            CHECK(sub.eval(x) == p.eval(a + b * x));
        }
    }
}
