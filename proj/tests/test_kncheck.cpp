#include "commop/kncheck.hpp"

#include <gtest/gtest.h>

using namespace commop;
using namespace commop::kn;

namespace {

Real ten_to(int k) { return boost::multiprecision::pow(Real(10), k); }

Real cbrt(const Real& v) { return boost::multiprecision::cbrt(v); }

}  // namespace

TEST(KnComplex, RootsAndPolar) {
    PrecisionScope p(50);
    const BigComplex m27(-27);
    // principal 4th root of -27 has argument pi/4
    const BigComplex r = m27.root(4, 0);
    EXPECT_LT(abs(r.arg() - boost::multiprecision::atan(Real(1))), ten_to(-45));
    const BigComplex back = r * r * r * r;
    EXPECT_LT((back - m27).abs(), ten_to(-44));
    // every branch is a root, and branches are distinct
    for (int k = 1; k < 4; ++k) {
        const BigComplex b = m27.root(4, k);
        EXPECT_LT((b * b * b * b - m27).abs(), ten_to(-44));
        EXPECT_GT((b - r).abs(), Real(1));
    }
    EXPECT_THROW(m27.root(0), std::invalid_argument);
    EXPECT_THROW(BigComplex(1) / BigComplex(0), std::domain_error);
    const BigComplex q = BigComplex::from_rational(Rational(1, 3));
    EXPECT_LT(abs(q.re * 3 - 1), ten_to(-48));
}

TEST(KnComplex, PrecisionScopeRestores) {
    const unsigned before = Real::default_precision();
    {
        PrecisionScope p(120);
        EXPECT_EQ(Real::default_precision(), 120u);
        PrecisionScope inner(40);
        EXPECT_EQ(Real::default_precision(), 40u);
    }
    EXPECT_EQ(Real::default_precision(), before);
}

TEST(KnJet, ClosedForms) {
    PrecisionScope p(50);
    const Jet x = Jet::variable(BigComplex(2), 6);
    // 1/x at 2: c_k = (-1)^k / 2^(k+1)
    const Jet inv = x.inverse();
    for (int k = 0; k < 6; ++k) {
        const Real expect = Real((k % 2) ? -1 : 1) / boost::multiprecision::pow(Real(2), k + 1);
        EXPECT_LT((inv.coefficients()[k] - BigComplex(expect)).abs(), ten_to(-45)) << k;
    }
    // x^(1/3): c_1 = (1/3) 2^(-2/3)
    const BigComplex c = BigComplex(cbrt(Real(2)));
    const Jet r = x.pow(Rational(1, 3), c);
    EXPECT_LT((r.coefficients()[1] - BigComplex(Real(1) / (3 * cbrt(Real(4))))).abs(), ten_to(-45));
    // (x^(1/3))^3 = x
    const Jet cube_minus_x = r * r * r - x;
    for (const auto& v : cube_minus_x.coefficients()) EXPECT_LT(v.abs(), ten_to(-45));
    // sqrt(x)^2 = x
    const Jet s = x.sqrt(BigComplex(boost::multiprecision::sqrt(Real(2))));
    const Jet sq = s * s - x;
    for (const auto& v : sq.coefficients()) EXPECT_LT(v.abs(), ten_to(-45));
    // derivative of x^2 is 2x
    const Jet d = (x * x).derive();
    EXPECT_EQ(d.size(), 5u);
    EXPECT_LT((d.value() - BigComplex(4)).abs(), ten_to(-45));
    EXPECT_LT((d.coefficients()[1] - BigComplex(2)).abs(), ten_to(-45));
    EXPECT_THROW(Jet::constant(BigComplex(1), 1).derive(), std::length_error);
}

TEST(KnGamma, Oracles) {
    // x = 1, eps = -1: u = 2, gamma = 2^(-1/3), gamma' = eps^2 u^(-4/3) = 2^(-4/3)
    const auto g = gamma_eval(Rational(1), Rational(-1), 1, 50);
    PrecisionScope p(50);
    EXPECT_LT((g[0] - BigComplex(1 / cbrt(Real(2)))).abs(), ten_to(-45));
    EXPECT_LT((g[1] - BigComplex(1 / (2 * cbrt(Real(2))))).abs(), ten_to(-45));
    // x = 0 is allowed: gamma = 0
    const auto g0 = gamma_eval(Rational(0), Rational(-1), 0, 50);
    EXPECT_LT(g0[0].abs(), ten_to(-45));
}

TEST(KnGamma, Identities) {
    // (1 - gamma^3)^2 = eps^4/u^2 and gamma'^(3/2) = |eps|^3/u^2
    for (const Rational& x : {Rational(3, 2), Rational(2), Rational(5)}) {
        const Rational eps(-2);
        const auto g = gamma_eval(x, eps, 2, 60);
        PrecisionScope p(60);
        const Rational u = x.pow(3) + eps * eps;
        const BigComplex one_minus = BigComplex(1) - g[0] * g[0] * g[0];
        const BigComplex lhs1 = one_minus * one_minus;
        const BigComplex rhs1 = BigComplex::from_rational(eps.pow(4) / (u * u));
        EXPECT_LT((lhs1 - rhs1).abs(), ten_to(-55));
        const Real gp = g[1].re;
        const Real lhs2 = gp * boost::multiprecision::sqrt(gp);
        const BigComplex rhs2 = BigComplex::from_rational(Rational(8) / (u * u));
        EXPECT_LT(abs(lhs2 - rhs2.re), ten_to(-55));
        EXPECT_LT(abs(g[1].im), ten_to(-55));
    }
}

TEST(KnGamma, JetAgreesWithClosedForm) {
    // gamma = x u^(-1/3) built from jets matches gamma_eval derivatives.
    const Rational x0(2);
    const auto g = gamma_eval(x0, Rational(-1), 4, 60);
    PrecisionScope p(60);
    const Jet x = Jet::variable(BigComplex(2), 6);
    const Jet u = x * x * x + BigComplex(1);
    const Jet gj = x * u.pow(Rational(-1, 3), BigComplex(1 / cbrt(Real(9))));
    Real factorial = 1;
    for (int k = 0; k <= 4; ++k) {
        if (k > 0) factorial *= k;
        EXPECT_LT((gj.coefficients()[k] * BigComplex(factorial) - g[k]).abs(), ten_to(-50)) << "derivative " << k;
    }
}

TEST(KnGamma, Domain) {
    EXPECT_THROW(gamma_eval(Rational(1), Rational(0), 0, 50), std::domain_error);
    EXPECT_THROW(gamma_eval(Rational(1), Rational(1), 0, 50), std::domain_error);
    EXPECT_THROW(gamma_eval(Rational(-2), Rational(-1), 0, 50), std::domain_error);
    EXPECT_THROW(gamma_eval(Rational(1), Rational(-1), 5, 50), std::invalid_argument);
}

TEST(KnSystem, ResidualsVanishWithCorrections) {
    KnOptions o;
    const PointResult r = kn_point(Rational(2), Rational(-1), o);
    ASSERT_TRUE(r.success);
    EXPECT_LT(r.max_residual, ten_to(-40));
    for (const auto& v : r.residuals) EXPECT_LT(v, ten_to(-40));
    EXPECT_LT(r.gamma_eq_real_residual, ten_to(-50));
    EXPECT_LT(r.unity_residual, ten_to(-50));
    EXPECT_LT(r.sigma_pairing_residual, ten_to(-50));
    EXPECT_LT(r.fd_crosscheck, ten_to(-30));
    EXPECT_GE(r.assignments_tried, 1);
    // The reported assignment reproduces the residuals.
    const auto again = kn_residuals(Rational(2), Rational(-1), r.branches, o);
    for (std::size_t i = 0; i < again.size(); ++i) EXPECT_LT(again[i], ten_to(-40));
}

TEST(KnSystem, PrintedFormulasFail) {
    for (int which = 0; which < 2; ++which) {
        KnOptions o;
        o.literal_h = which == 0;
        o.literal_d1 = which == 1;
        const PointResult r = kn_point(Rational(2), Rational(-1), o);
        EXPECT_FALSE(r.success);
        EXPECT_GT(r.best_max_residual, ten_to(-3));
        EXPECT_EQ(r.assignments_tried, 64);
    }
}

TEST(KnSystem, PrecisionDoubling) {
    const std::vector<Rational> xs = {Rational(1), Rational(3)};
    KnOptions o60;
    KnOptions o120;
    o120.precision = 120;
    const KnReport a = kn_check(xs, Rational(-1), o60);
    const KnReport b = kn_check(xs, Rational(-1), o120);
    ASSERT_TRUE(a.pass);
    ASSERT_TRUE(b.pass);
    EXPECT_GE(log10_abs(a.max_residual) - log10_abs(b.max_residual), 10);
}

TEST(KnSystem, Domain) {
    KnOptions o;
    EXPECT_THROW(kn_point(Rational(0), Rational(-1), o), std::domain_error);
    EXPECT_THROW(kn_point(Rational(1), Rational(1), o), std::domain_error);
    EXPECT_THROW(kn_point(Rational(-2), Rational(-1), o), std::domain_error);
    o.jet_terms = 4;
    EXPECT_THROW(kn_point(Rational(1), Rational(-1), o), std::invalid_argument);
    o.jet_terms = 7;
    o.precision = 20;
    EXPECT_THROW(kn_point(Rational(1), Rational(-1), o), std::invalid_argument);
}

TEST(KnFormat, Scientific) {
    PrecisionScope p(40);
    EXPECT_EQ(format_real(Real(12345), 3), "1.23e+04");
    EXPECT_EQ(format_real(Real("6.3e-58"), 2), "6.3e-58");
    EXPECT_NEAR(log10_abs(Real("0.001")), -3, 1e-12);
    EXPECT_LT(log10_abs(Real(0)), -1000);
    EXPECT_EQ((Branches{0, 1, 0, -1}.str()), "b3=0 c1=1 s3=0 sg=-");
}
