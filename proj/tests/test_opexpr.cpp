#include "commop/opdata.hpp"
#include "commop/opexpr.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

using namespace commop;

namespace {

XLaurent xpow(int k, const Rational& c = Rational(1)) { return XLaurent::monomial(c, 0, k); }

struct ErrorCase {
    const char* text;
    int line;
    int column;
    const char* fragment;
};

}  // namespace

TEST(OpExpr, CompositionSemantics) {
    EXPECT_EQ(parse_op("D*x"), xpow(1) * XOp::d(1) + XOp::identity());
    EXPECT_EQ(parse_op("x*D"), xpow(1) * XOp::d(1));
    EXPECT_EQ(parse_op("(D + x)^2"), compose(XOp::d(1) + XOp::scalar(xpow(1)), XOp::d(1) + XOp::scalar(xpow(1))));
    EXPECT_EQ(parse_op("D^3 - 26/x^2*D"), XOp::d(3) - xpow(-2, Rational(26)) * XOp::d(1));
    EXPECT_EQ(parse_op("eps^4/3888"), XOp::scalar(XLaurent::monomial(Rational(1, 3888), 4, 0)));
    EXPECT_EQ(parse_op("-(-D)"), XOp::d(1));
    EXPECT_EQ(parse_op("0"), XOp());
    EXPECT_EQ(parse_op("  D # trailing comment\n + 1 # more"), XOp::d(1) + XOp::identity());
}

TEST(OpExpr, CanonicalText) {
    EXPECT_EQ(print_op(opdata::make_calL()), "D^3 - (26/x^2)*D + x^6/5832 - 28/x^3");
    EXPECT_EQ(print_op(XOp()), "0");
    EXPECT_EQ(print_op(XOp::d(1)), "D");
    EXPECT_EQ(print_op(XOp::identity()), "1");
    EXPECT_EQ(print_op(XOp::d(2) * Rational(-1)), "-D^2");
}

TEST(OpExpr, RoundTripCorpus) {
    const std::vector<std::string> corpus = {
        "D",
        "D^12",
        "1",
        "-1",
        "x",
        "eps",
        "eps^4",
        "x^0",
        "1/x",
        "1/x^5",
        "3/7",
        "-3/7*x^2",
        "D + 1",
        "D - 1",
        "D*D*D",
        "D^2*x^2",
        "x^2*D^2",
        "(x + 1)*D",
        "(x + eps)^3",
        "(D + x)*(D - x)",
        "(D - x)*(D + x)",
        "D^3 - 26/x^2*D - 28/x^3 + x^6/5832",
        "D^3 - (26/x^2)*D + x^6/5832 - 28/x^3",
        "(D^3 - 26/x^2*D - 28/x^3 + x^6/5832)^3 - 1",
        "eps^2*x^3/1944 + x^6/5832",
        "(eps^2 + x^3)*D^2",
        "eps^4*D^4/11337408",
        "1541*eps^4/11337408",
        "D*(x^0 + 1)",
        "(1/x)*D*(x)",
        "x*D/x",
        "(D + 1)^4",
        "-(D^2 - x^3)",
        "((D))",
        "2*3*D",
        "D/2",
        "D/x",
        "D^2/x^3",
        "(D + eps*x)^2",
        "x^256",
        "D*x^0*D",
        "1/2 + 1/3 - 5/6",
        "D - D",
        "(D + x)^0",
        "eps^3*x^0",
        "D^5*eps*x",
        "(x^2 + 1)*(x^0 - 1)*D",
        "-D^9 + x*D^8",
        "100000000000000000000*D",
        "D^2 - 2/x^2",
    };
    for (const auto& text : corpus) {
        SCOPED_TRACE(text);
        XOp a;
        ASSERT_NO_THROW(a = parse_op(text));
        const std::string canon = print_op(a);
        EXPECT_EQ(parse_op(canon), a);
        EXPECT_EQ(print_op(parse_op(canon)), canon);
        EXPECT_EQ(parse_op_json(print_op(a, OpFormat::Json)), a);
    }
}

TEST(OpExpr, BuiltinOperatorsRoundTrip) {
    for (const XOp& a : {opdata::make_L1(), opdata::make_L2(), opdata::make_L2_mu(), opdata::make_calL()}) {
        EXPECT_EQ(parse_op(print_op(a)), a);
        EXPECT_EQ(parse_op_json(print_op(a, OpFormat::Json)), a);
    }
}

TEST(OpExpr, ErrorPositions) {
    const std::vector<ErrorCase> cases = {
        {"D D", 1, 3, "implicit multiplication"},
        {"2x", 1, 2, "implicit multiplication"},
        {"D +", 1, 4, "expected"},
        {"(D + 1", 1, 7, "expected ')'"},
        {"D^3 +\n  x^2 * y", 2, 9, "unknown symbol 'y'"},
        {"D^-1", 1, 3, "negative exponents"},
        {"D^2^3", 1, 4, "chained"},
        {"D^x", 1, 3, "integer exponent"},
        {"x^257", 1, 3, "exponent exceeds 256"},
        {"1/D", 1, 3, "division is only allowed"},
        {"1/(x + 1)", 1, 3, "division is only allowed"},
        {"1/eps", 1, 3, "division is only allowed"},
        {"1/0", 1, 3, "division by zero"},
        {"D $", 1, 3, "unexpected character"},
        {"# only a comment\n", 2, 1, "empty"},
        {"", 1, 1, "empty"},
        {"D)", 1, 2, ""},
    };
    for (const auto& c : cases) {
        SCOPED_TRACE(c.text);
        try {
            (void)parse_op(c.text);
            ADD_FAILURE() << "no error";
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line(), c.line);
            EXPECT_EQ(e.column(), c.column);
            EXPECT_NE(e.message().find(c.fragment), std::string::npos) << e.message();
            EXPECT_EQ(std::string(e.what()),
                      std::to_string(c.line) + ":" + std::to_string(c.column) + ": " + e.message());
        }
    }
}

TEST(OpExpr, JsonShapeAndErrors) {
    const std::string j = print_op(XOp::d(1) + XOp::scalar(XLaurent::monomial(Rational(-1, 2), 2, -3)), OpFormat::Json);
    EXPECT_NE(j.find("\"order\""), std::string::npos);
    EXPECT_NE(j.find("\"coefficients\""), std::string::npos);
    EXPECT_NE(j.find("\"-1/2\""), std::string::npos);
    EXPECT_THROW(parse_op_json("{"), std::invalid_argument);
    EXPECT_THROW(parse_op_json(R"({"order": 1, "coefficients": [{"d": 5, "terms": []}]})"), std::invalid_argument);
    EXPECT_THROW(parse_op_json(R"({"order": 3, "coefficients": [{"d": 1, "terms": [{"coef": "1", "eps": 0, "x": 0}]}]})"),
                 std::invalid_argument);
}

TEST(OpExpr, TexAndFormats) {
    const std::string t = print_op(opdata::make_calL(), OpFormat::Tex);
    EXPECT_NE(t.find("\\frac"), std::string::npos);
    EXPECT_NE(t.find("D^{3}"), std::string::npos);
    EXPECT_EQ(parse_format("text"), OpFormat::Text);
    EXPECT_EQ(parse_format("json"), OpFormat::Json);
    EXPECT_EQ(parse_format("tex"), OpFormat::Tex);
    EXPECT_THROW(parse_format("yaml"), std::invalid_argument);
}
