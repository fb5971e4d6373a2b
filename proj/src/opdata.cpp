#include "commop/opdata.hpp"

#include <array>

namespace commop::opdata {

namespace {

// clang-format off
constexpr std::array kL1 = {
    // f7
    Monomial{7, "-78", 0, -2},
    // f6
    Monomial{6, "384", 0, -3}, Monomial{6, "1/1944", 2, 3}, Monomial{6, "1/1944", 0, 6},
    // f5
    Monomial{5, "-24", 0, -4}, Monomial{5, "1/216", 2, 2}, Monomial{5, "1/108", 0, 5},
    // f4
    Monomial{4, "-4800", 0, -5}, Monomial{4, "-2/243", 2, 1}, Monomial{4, "16/243", 0, 4},
    // f3
    Monomial{3, "-143/1944", 2, 0}, Monomial{3, "19120", 0, -6}, Monomial{3, "79/486", 0, 3},
    Monomial{3, "1/11337408", 4, 6}, Monomial{3, "1/5668704", 2, 9}, Monomial{3, "1/11337408", 0, 12},
    // f2
    Monomial{2, "-43200", 0, -7}, Monomial{2, "26/243", 2, -1}, Monomial{2, "-73/243", 0, 2},
    Monomial{2, "1/1259712", 4, 5}, Monomial{2, "1/419904", 2, 8}, Monomial{2, "1/629856", 0, 11},
    // f1
    Monomial{1, "58240", 0, -8}, Monomial{1, "55/243", 2, -2}, Monomial{1, "-152/243", 0, 1},
    Monomial{1, "5/5668704", 4, 4}, Monomial{1, "2/177147", 2, 7}, Monomial{1, "17/1417176", 0, 10},
    // f0
    Monomial{0, "152/243", 0, 0}, Monomial{0, "-58240", 0, -9}, Monomial{0, "-55/243", 2, -3},
    Monomial{0, "-37/11337408", 4, 3}, Monomial{0, "115/11337408", 2, 6}, Monomial{0, "37/1417176", 0, 9},
    Monomial{0, "1/198359290368", 6, 9}, Monomial{0, "1/66119763456", 4, 12},
    Monomial{0, "1/66119763456", 2, 15}, Monomial{0, "1/198359290368", 0, 18},
};

constexpr std::array kL2 = {
    // g10
    Monomial{10, "-104", 0, -2},
    // g9
    Monomial{9, "824", 0, -3}, Monomial{9, "1/1458", 2, 3}, Monomial{9, "1/1458", 0, 6},
    // g8
    Monomial{8, "-2856", 0, -4}, Monomial{8, "1/108", 2, 2}, Monomial{8, "1/54", 0, 5},
    // g7
    Monomial{7, "-672", 0, -5}, Monomial{7, "1/486", 2, 1}, Monomial{7, "109/486", 0, 4},
    // g6
    Monomial{6, "-167/972", 2, 0}, Monomial{6, "86464", 0, -6}, Monomial{6, "316/243", 0, 3},
    Monomial{6, "1/5668704", 4, 6}, Monomial{6, "1/2834352", 2, 9}, Monomial{6, "1/5668704", 0, 12},
    // g5
    Monomial{5, "-693504", 0, -7}, Monomial{5, "-13/243", 2, -1}, Monomial{5, "221/243", 0, 2},
    Monomial{5, "1/314928", 4, 5}, Monomial{5, "1/104976", 2, 8}, Monomial{5, "1/157464", 0, 11},
    // g4
    Monomial{4, "3395840", 0, -8}, Monomial{4, "271/243", 2, -2}, Monomial{4, "-2834/243", 0, 1},
    Monomial{4, "193/11337408", 4, 4}, Monomial{4, "317/2834352", 2, 7}, Monomial{4, "307/2834352", 0, 10},
    // g3
    Monomial{3, "-5992/729", 0, 0}, Monomial{3, "-11567360", 0, -9}, Monomial{3, "1028/729", 2, -3},
    Monomial{3, "25/1417176", 4, 3}, Monomial{3, "457/708588", 2, 6}, Monomial{3, "1393/1417176", 0, 9},
    Monomial{3, "1/49589822592", 6, 9}, Monomial{3, "1/16529940864", 4, 12},
    Monomial{3, "1/16529940864", 2, 15}, Monomial{3, "1/49589822592", 0, 18},
    // g2
    Monomial{2, "27758080", 0, -10}, Monomial{2, "-182/27", 2, -4}, Monomial{2, "296/9", 0, -1},
    Monomial{2, "-413/5668704", 4, 2}, Monomial{2, "4339/2834352", 2, 5}, Monomial{2, "6595/1417176", 0, 8},
    Monomial{2, "1/3673320192", 6, 8}, Monomial{2, "1/918330048", 4, 11},
    Monomial{2, "5/3673320192", 2, 14}, Monomial{2, "1/1836660096", 0, 17},
    // g1
    Monomial{1, "-45660160", 0, -11}, Monomial{1, "4928/729", 2, -5}, Monomial{1, "20048/729", 0, -2},
    Monomial{1, "-203/2834352", 4, 1}, Monomial{1, "1691/2834352", 2, 4}, Monomial{1, "7111/708588", 0, 7},
    Monomial{1, "55/49589822592", 6, 7}, Monomial{1, "127/16529940864", 4, 10},
    Monomial{1, "217/16529940864", 2, 13}, Monomial{1, "325/49589822592", 0, 16},
    // g0 (the display wraps; the line starting with eps^6 x^15 continues g0)
    Monomial{0, "45660160", 0, -12}, Monomial{0, "-4928/729", 2, -6}, Monomial{0, "-20048/729", 0, -3},
    Monomial{0, "-605/708588", 2, 3}, Monomial{0, "4553/708588", 0, 6}, Monomial{0, "79/99179645184", 6, 6},
    Monomial{0, "269/16529940864", 4, 9}, Monomial{0, "683/16529940864", 2, 12},
    Monomial{0, "1/1156831381426176", 8, 12}, Monomial{0, "661/24794911296", 0, 15},
    Monomial{0, "1/289207845356544", 6, 15}, Monomial{0, "1/192805230237696", 4, 18},
    Monomial{0, "1/289207845356544", 2, 21}, Monomial{0, "1/1156831381426176", 0, 24},
};
// clang-format on

XOp from_table(std::span<const Monomial> table, int order) {
    std::vector<std::vector<XLaurent::Term>> terms(order + 1);
    for (const auto& m : table)
        terms[m.d].push_back({m.x_exp, EpsPoly::monomial(Rational::parse(m.coef), m.eps_exp)});
    std::vector<XLaurent> coeffs;
    coeffs.reserve(order + 1);
    for (auto& t : terms) coeffs.push_back(XLaurent::from_terms(std::move(t)));
    coeffs[order] = XLaurent(1);
    return XOp(std::move(coeffs));
}

}  // namespace

std::span<const Monomial> l1_table() { return kL1; }
std::span<const Monomial> l2_table() { return kL2; }

XOp make_L1() { return from_table(kL1, 9); }
XOp make_L2() { return from_table(kL2, 12); }

Rational g0_constant_term() { return Rational(1541, 11337408); }

XOp make_L2_mu() {
    return make_L2() + XOp::scalar(XLaurent::monomial(g0_constant_term(), 4, 0));
}

XOp make_calL() {
    std::vector<XLaurent> c(4);
    c[3] = XLaurent(1);
    c[1] = XLaurent::monomial(Rational(-26), 0, -2);
    c[0] = XLaurent::monomial(Rational(-28), 0, -3) + XLaurent::monomial(Rational(1, 5832), 0, 6);
    return XOp(std::move(c));
}

XLaurent zeta1() {
    return XLaurent::monomial(Rational(28), 0, -3) - XLaurent::monomial(Rational(1, 5832), 2, 3) -
           XLaurent::monomial(Rational(1, 5832), 0, 6);
}

XLaurent zeta1_displayed() {
    return XLaurent::monomial(Rational(28), 0, -2) - XLaurent::monomial(Rational(1, 5832), 2, 3) -
           XLaurent::monomial(Rational(1, 5832), 0, 6);
}

XLaurent zeta2() { return XLaurent::monomial(Rational(26), 0, -2); }

BiPoly bc_polynomial() {
    BiPoly q;
    q.add_term(EpsPoly(1), 0, 3);
    q.add_term(EpsPoly::monomial(Rational(-1, 15552), 4), 0, 2);
    q.add_term(EpsPoly(-1), 4, 0);
    q.add_term(EpsPoly(-1), 3, 0);
    return q;
}

Bundle make_bundle() { return {make_L1(), make_L2(), make_calL(), zeta1(), zeta2(), bc_polynomial()}; }

}  // namespace commop::opdata
