#include "commop/eps_poly.hpp"
#include "commop/rational.hpp"
#include "commop/x_laurent.hpp"
#include "commop/xz_fraction.hpp"
#include "commop/z_series.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace commop;

namespace {

XLaurent mono(long num, long den, int e, int x) { return XLaurent::monomial(Rational(num, den), e, x); }

}  // namespace

// ------------------------------------------------------------------ Rational

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).denominator(), 2);
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("-15552"), Rational(-15552));
    EXPECT_EQ(Rational::parse("1541/11337408"), Rational(1541, 11337408));
    EXPECT_EQ(Rational::parse("+3/6"), Rational(1, 2));
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("abc"), std::exception);
    EXPECT_THROW(Rational::parse(""), std::exception);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(1, 3) / Rational(-1, 3), Rational(-1));
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(5, 7).inverse(), Rational(7, 5));
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    Rational acc(1);
    acc.add_product(Rational(2, 3), Rational(3, 4));
    EXPECT_EQ(acc, Rational(3, 2));
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, Binomial) {
    EXPECT_EQ(binomial(12, 0), Rational(1));
    EXPECT_EQ(binomial(12, 5), Rational(792));
    EXPECT_EQ(binomial(36, 18), Rational(9075135300L));
}

// ------------------------------------------------------------------- EpsPoly

TEST(EpsPoly, Basics) {
    const EpsPoly p = EpsPoly::monomial(Rational(1, 1944), 2) + EpsPoly(1);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.low_degree(), 0);
    EXPECT_EQ(p.coefficient(2), Rational(1, 1944));
    EXPECT_EQ(p.coefficient(1), Rational(0));
    EXPECT_EQ(p.str(), "eps^2/1944 + 1");
    EXPECT_EQ(p.evaluate(Rational(-1)), Rational(1945, 1944));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(EpsPoly::from_terms({{2, Rational(1)}, {2, Rational(-1)}, {0, Rational(3)}}), EpsPoly(3));
}

TEST(EpsPoly, MultiplyAndDivide) {
    const EpsPoly a = EpsPoly::monomial(Rational(1), 1) + EpsPoly(1);
    const EpsPoly sq = a * a;
    EXPECT_EQ(sq.coefficient(1), Rational(2));
    EXPECT_EQ((sq * EpsPoly::monomial(Rational(3), 2)).divide_by_monomial(Rational(3), 2), sq);
    EXPECT_THROW(sq.divide_by_monomial(Rational(1), 1), std::domain_error);
}

// ------------------------------------------------------------------ XLaurent

TEST(XLaurent, DeriveAndUnits) {
    const XLaurent f = mono(-28, 1, 0, -3) + mono(1, 5832, 0, 6);
    EXPECT_EQ(f.derive(), mono(84, 1, 0, -4) + mono(1, 972, 0, 5));
    EXPECT_TRUE(mono(3, 1, 2, -1).is_unit());
    EXPECT_FALSE(f.is_unit());
    EXPECT_EQ((f * mono(2, 1, 2, 3)).divide_by_unit(mono(2, 1, 2, 3)), f);
    EXPECT_THROW(f.divide_by_unit(f), std::domain_error);
    EXPECT_THROW(f.divide_by_unit(mono(1, 1, 2, 0)), std::domain_error);
}

TEST(XLaurent, ProductAndSubstitution) {
    const XLaurent x = XLaurent::x();
    const XLaurent e2 = mono(1, 1, 2, 0);
    const XLaurent u = x * x * x + e2;
    EXPECT_EQ(u.min_exp(), 0);
    EXPECT_EQ(u.max_exp(), 3);
    EXPECT_EQ(u.eps_degree(), 2);
    EXPECT_EQ(u.substitute_eps(Rational(-1)), x * x * x + XLaurent(1));
    EXPECT_EQ(u.str(), "x^3 + eps^2");
    EXPECT_EQ(mono(-55, 243, 2, -3).str(), "-55*eps^2/(243*x^3)");
}

TEST(XLaurent, Accumulator) {
    XLaurentAccumulator acc;
    const XLaurent a = mono(1, 1, 0, -2) + mono(1, 1, 2, 1);
    acc.add_product(a, a, Rational(2));
    acc.add(a, Rational(-1));
    EXPECT_EQ(acc.take(), Rational(2) * (a * a) - a);
}

// ------------------------------------------------------------------- ZSeries

TEST(ZSeries, InverseAndSqrt) {
    // 1/(1 - z) = 1 + z + z^2 + ...
    const ZSeries one_minus_z = ZSeries(1) - ZSeries::monomial(XLaurent(1), 1);
    const ZSeries inv = one_minus_z.inverse(8);
    EXPECT_EQ(inv.precision(), 9);
    for (int k = 0; k < 9; ++k) EXPECT_EQ(inv.coefficient(k), XLaurent(1));
    EXPECT_THROW(inv.coefficient(9), std::out_of_range);
    // sqrt(1 + 2z + z^2) = 1 + z
    const ZSeries sq = ZSeries(1) + ZSeries::monomial(XLaurent(2), 1) + ZSeries::monomial(XLaurent(1), 2);
    const ZSeries r = sq.sqrt(10);
    EXPECT_EQ(r.coefficient(0), XLaurent(1));
    EXPECT_EQ(r.coefficient(1), XLaurent(1));
    for (int k = 2; k < 10; ++k) EXPECT_TRUE(r.coefficient(k).is_zero());
}

TEST(ZSeries, PrecisionPropagation) {
    const ZSeries a = ZSeries::from_coefficients(-3, {XLaurent(1), XLaurent(2)}, 4);
    const ZSeries b = ZSeries::monomial(XLaurent(1), 2);
    const ZSeries p = a * b;
    EXPECT_EQ(p.precision(), 6);
    EXPECT_EQ(p.valuation(), -1);
    EXPECT_EQ((a + b).precision(), 4);
    EXPECT_TRUE(b.is_exact());
    EXPECT_EQ(a.truncate(-2).precision(), -2);
    EXPECT_EQ(ZSeries::big_o(5).valuation(), 5);
}

TEST(ZSeries, DivisionByPole) {
    // (1 + z)/z^3 has a pole of order 3.
    const ZSeries num = ZSeries(1) + ZSeries::monomial(XLaurent(1), 1);
    const ZSeries den = ZSeries::monomial(XLaurent(1), 3);
    const ZSeries q = num / den;
    EXPECT_EQ(q.valuation(), -3);
    EXPECT_EQ(q.coefficient(-2), XLaurent(1));
}

// --------------------------------------------------------------- XZFraction

TEST(XZFraction, EqualityByCrossMultiplication) {
    const XZPoly x = XZPoly::x();
    const XZPoly z = XZPoly::z();
    const XZFraction a(x * z, x * x);
    const XZFraction b(z, x);
    EXPECT_TRUE(fraction_equal(a, b));
    EXPECT_FALSE(fraction_equal(a, XZFraction(z)));
    EXPECT_TRUE(fraction_equal(a - b, XZFraction()));
}

TEST(XZFraction, ToSeries) {
    // 1/(1 - z) as a fraction
    const XZFraction f(XZPoly(1), XZPoly(1) - XZPoly::z());
    const ZSeries s = fraction_to_series(f, 6);
    for (int k = 0; k < 6; ++k) EXPECT_EQ(s.coefficient(k), XLaurent(1));
}
