#pragma once

#include "commop/bipoly.hpp"
#include "commop/diffop.hpp"

#include <span>
#include <string_view>

namespace commop::opdata {

/// One displayed monomial: coef * eps^eps_exp * x^x_exp in the coefficient of
/// D^d. `coef` is a rational literal "p" or "p/q".
struct Monomial {
    int d;
    std::string_view coef;
    int eps_exp;
    int x_exp;
};

/// The monomials of L1 = D^9 + sum_{n=0}^{7} f_n D^n, as printed.
std::span<const Monomial> l1_table();
/// The monomials of L2 = D^12 + sum_{m=0}^{10} g_m D^m, as printed.
std::span<const Monomial> l2_table();

/// Order 9, monic, no D^8 term.
XOp make_L1();
/// Order 12, monic, no D^11 term.
XOp make_L2();
/// Coefficient c of the constant term c*eps^4 that the printed g0 omits.
Rational g0_constant_term();
/// The printed L2 plus c*eps^4: the operator whose rank-3 remainder is mu
/// exactly, and the one satisfying the displayed Burchnall-Chaundy relation.
/// The pipeline re-derives it from mu; the constant here is only a reference.
XOp make_L2_mu();
/// D^3 - (26/x^2) D - 28/x^3 + x^6/5832, the eps = 0 cube root of L1 + 1.
XOp make_calL();

/// 28/x^3 - (eps^2 x^3 + x^6)/5832, the z^0 term of chi0. The display
/// prints 28/x^2; the x^3 form is the one the chi0 expansion and f6 force.
XLaurent zeta1();
/// The displayed form 28/x^2 - (eps^2 x^3 + x^6)/5832, kept for comparison.
XLaurent zeta1_displayed();
/// 26/x^2
XLaurent zeta2();

/// w^3 - (eps^4/15552) w^2 - z^4 - z^3
BiPoly bc_polynomial();

struct Bundle {
    XOp L1;
    XOp L2;
    XOp calL;
    XLaurent zeta1;
    XLaurent zeta2;
    BiPoly bcQ;
};

Bundle make_bundle();

}  // namespace commop::opdata
