#include "commop/opdata.hpp"
#include "commop/opexpr.hpp"
#include "commop/pipeline.hpp"

#include <gtest/gtest.h>

#include <string>
#include <utility>
#include <vector>

using namespace commop;

namespace {

// Second, independent transcription of the printed coefficients, written in
// the operator text grammar rather than as monomial tables.
const std::vector<std::pair<int, const char*>> kF = {
    {0, "(152)/(243) -(58240)/(x^9) -(55*eps^2)/(243*x^3) -(37*eps^4*x^3)/(11337408) + "
         "(115*eps^2*x^6)/(11337408) +(37*x^9)/(1417176) +(eps^6*x^9)/(198359290368) "
         "+(eps^4*x^12)/(66119763456) +(eps^2*x^15)/(66119763456) +(x^18)/(198359290368)"},
    {1, "(58240)/(x^8) +(55*eps^2)/(243*x^2) -(152*x)/(243) +(5*eps^4*x^4)/(5668704) "
         "+(2*eps^2*x^7)/(177147) +(17*x^10)/(1417176)"},
    {2, "-(43200)/(x^7) +(26*eps^2)/(243*x) -(73*x^2)/(243) +(eps^4*x^5)/(1259712) "
         "+(eps^2*x^8)/(419904) +(x^11)/(629856)"},
    {3, "-(143*eps^2)/(1944) +(19120)/(x^6) +(79*x^3)/(486) + (eps^4*x^6)/(11337408) "
         "+(eps^2*x^9)/(5668704) +(x^12)/(11337408)"},
    {4, "-(4800)/(x^5) -(2*eps^2*x)/(243) +(16*x^4)/(243)"},
    {5, "-(24)/(x^4) +(eps^2*x^2)/(216) +(x^5)/(108)"},
    {6, "(384)/(x^3) +(eps^2*x^3)/(1944) +(x^6)/(1944)"},
    {7, "-(78)/(x^2)"},
};

const std::vector<std::pair<int, const char*>> kG = {
    {0, "(45660160)/(x^12) -(4928*eps^2)/(729*x^6) -(20048)/(729*x^3) "
         "-(605*eps^2*x^3)/(708588) +(4553*x^6)/(708588) +(79*eps^6*x^6)/(99179645184) "
         "+(269*eps^4*x^9)/(16529940864) +(683*eps^2*x^12)/(16529940864) "
         "+(eps^8*x^12)/(1156831381426176) +(661*x^15)/(24794911296) "
         "+(eps^6*x^15)/(289207845356544) + (eps^4*x^18)/(192805230237696) "
         "+(eps^2*x^21)/(289207845356544) +(x^24)/(1156831381426176)"},
    {1, "-(45660160)/(x^11) +(4928*eps^2)/(729*x^5) +(20048)/(729*x^2) "
         "-(203*eps^4*x)/(2834352) +(1691*eps^2*x^4)/(2834352) +(7111*x^7)/(708588) "
         "+(55*eps^6*x^7)/(49589822592) +(127*eps^4*x^10)/(16529940864) "
         "+(217*eps^2*x^13)/(16529940864) +(325*x^16)/(49589822592)"},
    {2, "(27758080)/(x^10) -(182*eps^2)/(27*x^4) +(296)/(9*x) -(413*eps^4*x^2)/(5668704) "
         "+(4339*eps^2*x^5)/(2834352) +(6595*x^8)/(1417176) +(eps^6*x^8)/(3673320192) "
         "+(eps^4*x^11)/(918330048) +(5*eps^2*x^14)/(3673320192) +(x^17)/(1836660096)"},
    {3, "-(5992)/(729) -(11567360)/(x^9) +(1028*eps^2)/(729*x^3) +(25*eps^4*x^3)/(1417176) "
         "+(457*eps^2*x^6)/(708588) +(1393*x^9)/(1417176) +(eps^6*x^9)/(49589822592) "
         "+(eps^4*x^12)/(16529940864) +(eps^2*x^15)/(16529940864) +(x^18)/(49589822592)"},
    {4, "(3395840)/(x^8) +(271*eps^2)/(243*x^2) -(2834*x)/(243) "
         "+(193*eps^4*x^4)/(11337408) +(317*eps^2*x^7)/(2834352) +(307*x^10)/(2834352)"},
    {5, "-(693504)/(x^7) -(13*eps^2)/(243*x) +(221*x^2)/(243) +(eps^4*x^5)/(314928) "
         "+(eps^2*x^8)/(104976) +(x^11)/(157464)"},
    {6, "-(167*eps^2)/(972) +(86464)/(x^6) +(316*x^3)/(243) +(eps^4*x^6)/(5668704) "
         "+(eps^2*x^9)/(2834352) +(x^12)/(5668704)"},
    {7, "-(672)/(x^5) +(eps^2*x)/(486) +(109*x^4)/(486)"},
    {8, "-(2856)/(x^4) +(eps^2*x^2)/(108) +(x^5)/(54)"},
    {9, "(824)/(x^3) +(eps^2*x^3)/(1458) +(x^6)/(1458)"},
    {10, "-(104)/(x^2)"},
};

XLaurent parse_coefficient(const char* text) {
    const XOp op = parse_op(text);
    EXPECT_LE(op.order(), 0) << text;
    return op.coefficient(0);
}

std::size_t monomial_count(const XLaurent& c) {
    std::size_t n = 0;
    for (const auto& t : c.terms()) n += t.coef.size();
    return n;
}

void compare_coefficients(const XOp& op, const std::vector<std::pair<int, const char*>>& table, const char* name) {
    for (const auto& [k, text] : table) {
        const XLaurent expect = parse_coefficient(text);
        const XLaurent got = op.coefficient(k);
        EXPECT_EQ(got, expect) << name << k << ": table gives " << got.str() << ", text gives " << expect.str();
        EXPECT_EQ(monomial_count(got), monomial_count(expect)) << name << k;
        for (const auto& t : expect.terms())
            for (const auto& e : t.coef.terms())
                EXPECT_EQ(got.coefficient(t.exp).coefficient(e.exp), e.coef)
                    << name << k << " at eps^" << e.exp << " x^" << t.exp;
    }
}

}  // namespace

TEST(Transcription, L1MatchesIndependentText) {
    const XOp l1 = opdata::make_L1();
    ASSERT_EQ(l1.order(), 9);
    EXPECT_EQ(l1.coefficient(9), XLaurent(1));
    EXPECT_TRUE(l1.coefficient(8).is_zero());
    compare_coefficients(l1, kF, "f");
}

TEST(Transcription, L2MatchesIndependentText) {
    const XOp l2 = opdata::make_L2();
    ASSERT_EQ(l2.order(), 12);
    EXPECT_EQ(l2.coefficient(12), XLaurent(1));
    EXPECT_TRUE(l2.coefficient(11).is_zero());
    compare_coefficients(l2, kG, "g");
}

TEST(Transcription, MonomialTablesAreConsistent) {
    EXPECT_EQ(opdata::l1_table().size(), 38u);
    EXPECT_EQ(opdata::l2_table().size(), 72u);
    for (const auto& m : opdata::l1_table()) {
        EXPECT_GE(m.d, 0);
        EXPECT_LE(m.d, 7);
        EXPECT_EQ(m.eps_exp % 2, 0);
    }
    for (const auto& m : opdata::l2_table()) {
        EXPECT_GE(m.d, 0);
        EXPECT_LE(m.d, 10);
        EXPECT_EQ(m.eps_exp % 2, 0);
    }
}

TEST(Transcription, MuNormalizedL2DiffersOnlyInConstant) {
    const XOp diff = opdata::make_L2_mu() - opdata::make_L2();
    ASSERT_EQ(diff.order(), 0);
    EXPECT_EQ(diff.coefficient(0), XLaurent::monomial(Rational(1541, 11337408), 4, 0));
    EXPECT_EQ(opdata::g0_constant_term(), Rational(1541, 11337408));
}

TEST(Transcription, CalLAndZetas) {
    EXPECT_EQ(opdata::make_calL(), parse_op("D^3 - (26/x^2)*D - 28/x^3 + x^6/5832"));
    EXPECT_EQ(opdata::zeta2(), parse_coefficient("26/x^2"));
    EXPECT_EQ(opdata::zeta1(), parse_coefficient("28/x^3 - (eps^2*x^3 + x^6)/5832"));
    EXPECT_EQ(opdata::zeta1_displayed(), parse_coefficient("28/x^2 - (eps^2*x^3 + x^6)/5832"));
}

TEST(Transcription, BundleAndRelation) {
    const auto b = opdata::make_bundle();
    EXPECT_EQ(b.L1, opdata::make_L1());
    EXPECT_EQ(b.L2, opdata::make_L2());
    EXPECT_EQ(b.bcQ.str(), "w^3 - (eps^4/15552)*w^2 - z^4 - z^3");
}
