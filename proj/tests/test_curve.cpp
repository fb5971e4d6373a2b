#include "commop/curve.hpp"
#include "commop/opdata.hpp"

#include <gtest/gtest.h>

using namespace commop;

TEST(Curve, WSeriesSquaresToW) {
    const CurveDef c = CurveDef::standard();
    const ZSeries w = w_series(c, 14);
    EXPECT_EQ(w.coefficient(0), XLaurent(1));
    EXPECT_TRUE(w.coefficient(1).is_zero());
    EXPECT_EQ(w.coefficient(3), XLaurent(-1));
    const ZSeries sq = w * w;
    const ZSeries big_w = c.W.to_series();
    for (int k = 0; k < 14; ++k) EXPECT_EQ(sq.coefficient(k), big_w.coefficient(k)) << "z^" << k;
}

TEST(Curve, ElementArithmetic) {
    const CurveDef c = CurveDef::standard();
    const CurveElem w = CurveElem::w();
    // w * w reduces to W(z)
    const CurveElem ww = CurveElem::mul(w, w, c);
    EXPECT_TRUE(fraction_equal(ww.a(), XZFraction(c.W)));
    EXPECT_TRUE(ww.b().is_zero());
    // (1 + w)(1 - w) = 1 - W = norm(1 + w)
    const CurveElem one_w(XZFraction(1), XZFraction(1));
    const CurveElem prod = CurveElem::mul(one_w, one_w.sigma_conj(), c);
    EXPECT_TRUE(fraction_equal(prod.a(), one_w.norm(c)));
    EXPECT_TRUE(prod.b().is_zero());
    EXPECT_TRUE(curve_equal(CurveElem::pow(one_w, 3, c), CurveElem::mul(one_w, CurveElem::mul(one_w, one_w, c), c)));
    EXPECT_FALSE((one_w - one_w.sigma_conj()).is_zero());
}

TEST(Curve, LambdaAndMuPoles) {
    const ZSeries lam = curve_series(lambda_fn(), 10);
    const ZSeries mu = curve_series(mu_fn(), 10);
    EXPECT_EQ(lam.valuation(), -3);
    EXPECT_EQ(lam.coefficient(-3), XLaurent(1));
    EXPECT_EQ(mu.valuation(), -4);
    EXPECT_EQ(mu.coefficient(-4), XLaurent(1));
    // lambda = (1 + w)/(2z^3) - 1/2 and w = 1 - z^3 + ...: the constant term is -1.
    EXPECT_EQ(lam.coefficient(0), XLaurent(-1));
}

TEST(Curve, ChiIndexRange) {
    EXPECT_NO_THROW(chi(0));
    EXPECT_NO_THROW(chi(2));
    EXPECT_THROW(chi(3), std::invalid_argument);
    EXPECT_THROW(chi(-1), std::invalid_argument);
}

TEST(Curve, Chi1ConstantTerm) {
    const ZSeries c1 = curve_series(chi(1), 8);
    EXPECT_EQ(c1.coefficient(0), opdata::zeta2());
}

TEST(Curve, BurchnallChaundyOnFunctions) {
    EXPECT_TRUE(bc_function_identity(CurveDef::standard()));
    EXPECT_FALSE(bc_function_identity(CurveDef::eps2_variant()));
}

TEST(Curve, BcSpecializations) {
    // The identity is polynomial in eps, so it survives any specialization.
    const CurveDef c = CurveDef::standard();
    const BiPoly q = opdata::bc_polynomial().substitute_eps(Rational(-3));
    const CurveElem v = eval_poly_at_functions(q, lambda_fn().substitute_eps(Rational(-3)),
                                               mu_fn().substitute_eps(Rational(-3)),
                                               CurveDef{c.W.substitute_eps(Rational(-3)), "eps=-3"});
    EXPECT_TRUE(v.is_zero());
}
