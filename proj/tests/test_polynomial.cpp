#include <gtest/gtest.h>

#include "duval/polynomial.hpp"

using namespace duval;

TEST(Parse, A2Equation) {
    const auto f = parse_polynomial("x*y - z^3");
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.coefficient({1, 1, 0}), 1);
    EXPECT_EQ(f.coefficient({0, 0, 3}), -1);
}

TEST(Parse, E6HasThreeTerms) { EXPECT_EQ(parse_polynomial("z^2+y^3+x^4").size(), 3u); }

TEST(Parse, ZeroIsEmpty) {
    EXPECT_TRUE(parse_polynomial("0").is_zero());
    EXPECT_EQ(parse_polynomial("0").to_string(), "0");
}

TEST(Parse, WhitespaceAndOptionalStar) {
    EXPECT_EQ(parse_polynomial(" 2 x y^2 -  3z "), parse_polynomial("2*x*y^2-3*z"));
    EXPECT_EQ(parse_polynomial("x*x*y"), parse_polynomial("x^2*y"));
    EXPECT_EQ(parse_polynomial("x + x - 2x"), parse_polynomial("0"));
    EXPECT_EQ(parse_polynomial("-x"), Polynomial() - parse_polynomial("x"));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_polynomial(""), ParseError);
    EXPECT_THROW(parse_polynomial("x^-2"), ParseError);
    EXPECT_THROW(parse_polynomial("x^0"), ParseError);
    EXPECT_THROW(parse_polynomial("w*x"), ParseError);
    EXPECT_THROW(parse_polynomial("x +"), ParseError);
    EXPECT_THROW(parse_polynomial("x y )"), ParseError);
    try {
        parse_polynomial("x + w");
        FAIL();
    } catch (const ParseError& ex) {
        EXPECT_EQ(ex.position(), 4u);
        EXPECT_NE(std::string(ex.what()).find("unknown variable 'w'"), std::string::npos);
    }
}

TEST(Print, RoundTripIsFixedPoint) {
    for (const char* text : {"x*y - z^3", "z^2 + y^3 + x^5", "-3*x^2*y + 7 - y*z^3 + x", "z^2 - x*y^2 - x^3"}) {
        const auto f = parse_polynomial(text);
        const auto s = f.to_string();
        EXPECT_EQ(parse_polynomial(s), f) << s;
        EXPECT_EQ(parse_polynomial(s).to_string(), s);
    }
    EXPECT_EQ(parse_polynomial("x*y - z^3").to_string(), "x*y - z^3");
    EXPECT_EQ(parse_polynomial("- z^2 + 2x").to_string(), "2*x - z^2");
}

TEST(Arithmetic, RingLaws) {
    const auto f = parse_polynomial("x + y");
    const auto g = parse_polynomial("x - y");
    EXPECT_EQ(f * g, parse_polynomial("x^2 - y^2"));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f.pow(3), f * f * f);
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ(parse_polynomial("x^3*y").derivative(0), parse_polynomial("3x^2*y"));
}

TEST(Arithmetic, BigCoefficientsStayExact) {
    const auto f = parse_polynomial("99999999999*x + 1");
    const auto p = f.pow(4);
    BigInt c = 99999999999LL;
    EXPECT_EQ(p.coefficient({4, 0, 0}), c * c * c * c);
}

TEST(Arithmetic, DifferentRingsRejected) {
    const Polynomial a = Polynomial::variable({"q", "r", "s"}, 0);
    EXPECT_THROW(a + parse_polynomial("x"), std::invalid_argument);
}

TEST(Modular, MatchesExactEvaluation) {
    const auto f = parse_polynomial("z^2 + y^3 + x^5 - 4*x*y*z");
    for (Int p : {5, 7, 11}) {
        const ModularPolynomial g(f, p);
        for (Int a = 0; a < p; ++a) {
            for (Int b = 0; b < p; ++b) {
                const std::array<Int, 3> pt{a, b, (a + 2 * b) % p};
                EXPECT_EQ(g(pt), f.evaluate_mod(pt, p));
                Int exact = pt[2] * pt[2] + pt[1] * pt[1] * pt[1] + a * a * a * a * a - 4 * a * b * pt[2];
                exact %= p;
                if (exact < 0) {
                    exact += p;
                }
                EXPECT_EQ(g(pt), exact);
            }
        }
    }
    EXPECT_THROW(ModularPolynomial(f, 1), std::invalid_argument);
}
