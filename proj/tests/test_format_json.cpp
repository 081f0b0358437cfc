#include <catch2/catch_amalgamated.hpp>

#include "qgauss/format.hpp"
#include "qgauss/json_io.hpp"
#include "test_support.hpp"

using namespace qgauss;
using qgauss::testing::Rng;

TEST_CASE("plain rendering of reference values") {
    RatFunc is_inv = RatFunc::i() / RatFunc::s();
    REQUIRE(to_plain(is_inv) == "i*s^-1");
    REQUIRE(to_plain(RatFunc(0)) == "0");
    REQUIRE(to_plain(RatFunc(1) + RatFunc::q()) == "1 + s^2");
    PlainOptions q_var{true};
    REQUIRE(to_plain(RatFunc(1) + RatFunc::q(), q_var) == "1 + q");
    REQUIRE(to_plain(RatFunc::q().pow(-1), q_var) == "q^-1");
}

TEST_CASE("plain output re-parses to the same canonical value") {
    REQUIRE(parse_rat_func("i*s^-1") == RatFunc::i() / RatFunc::s());
    REQUIRE(parse_rat_func("(1 - q)/(1 + q^2)") ==
            (RatFunc(1) - RatFunc::q()) / (RatFunc(1) + RatFunc::q().pow(2)));
    REQUIRE(parse_rat_func("2/3*s") == RatFunc(GaussRat(Rational(2, 3))) * RatFunc::s());

    Rng rng(101);
    for (int k = 0; k < 100; ++k) {
        RatFunc f = qgauss::testing::random_rat_func(rng);
        REQUIRE(parse_rat_func(to_plain(f)) == f);
        PlainOptions q_var{true};
        REQUIRE(parse_rat_func(to_plain(f, q_var)) == f);
    }
}

TEST_CASE("parse errors carry position information") {
    REQUIRE_THROWS_AS(parse_rat_func("1 + "), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rat_func("(1"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rat_func("x"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rat_func("1/0"), std::domain_error);
}

TEST_CASE("latex rendering is syntactically sound") {
    RatFunc is_inv = RatFunc::i() / RatFunc::s();
    REQUIRE(to_latex(is_inv) == "i\\,q^{-\\frac{1}{2}}");
    REQUIRE(latex_syntax_ok(to_latex(is_inv)));
    Rng rng(103);
    for (int k = 0; k < 100; ++k) {
        RatFunc f = qgauss::testing::random_rat_func(rng);
        REQUIRE(latex_syntax_ok(to_latex(f)));
    }
    REQUIRE_FALSE(latex_syntax_ok("\\frac{1}{2"));
    REQUIRE_FALSE(latex_syntax_ok("\\unknowncmd{x}"));
}

TEST_CASE("json round-trip is exact") {
    RatFunc is_inv = RatFunc::i() / RatFunc::s();
    nlohmann::json j = rat_func_to_json(is_inv);
    REQUIRE(j["num"]["-1"][1].get<std::string>() == "1");
    REQUIRE(rat_func_from_json(j) == is_inv);

    Rng rng(107);
    for (int k = 0; k < 100; ++k) {
        RatFunc f = qgauss::testing::random_rat_func(rng);
        REQUIRE(rat_func_from_json_string(to_json_string(f)) == f);
    }
}

TEST_CASE("json input validation") {
    REQUIRE_THROWS_AS(rat_func_from_json_string("{\"num\": {}}"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_func_from_json_string("{\"num\": {}, \"den\": {\"0\": [\"1\"]}}"),
                      std::invalid_argument);
    // zero denominator object
    REQUIRE_THROWS_AS(rat_func_from_json_string("{\"num\": {\"0\": [\"1\", \"0\"]}, \"den\": {}}"),
                      std::domain_error);
}
