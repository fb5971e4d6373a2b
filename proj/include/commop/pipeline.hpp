#pragma once

#include "commop/bipoly.hpp"
#include "commop/curve.hpp"
#include "commop/diffop.hpp"
#include "commop/linsolve.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commop::pipeline {

/// Expansions of chi0, chi1, chi2 at q.
struct ChiSeries {
    ZSeries chi0;
    ZSeries chi1;
    ZSeries chi2;
};

ChiSeries chi_series(int order = kDefaultSeriesOrder, const CurveDef& curve = CurveDef::standard());
/// T = D^3 - chi2 D^2 - chi1 D - chi0 over series coefficients.
SeriesOp reduction_divisor(const ChiSeries& chi);

/// Remainders R_n = D^n mod T for n = 0..max_order, via
/// D o (a2 D^2 + a1 D + a0) = a2 D^3 + (a2' + a1) D^2 + (a1' + a0) D + a0'.
std::vector<std::array<ZSeries, 3>> remainder_table(const ChiSeries& chi, int max_order);

struct DeriveResult {
    bool ok = false;
    /// f_0..f_{order-2}; the D^(order-1) coefficient is fixed to zero.
    std::vector<XLaurent> coeffs;
    /// D^order + sum f_n D^n when ok.
    XOp op;
    int equations = 0;
    int lowest_z_order = 0;
    std::string diagnostic;
};

/// Solves Q_j = delta_j0 * eigen at every z-order from the pole up to z^0,
/// where (Q_0, Q_1, Q_2) is the remainder of D^order + sum f_n D^n mod T.
DeriveResult derive_coeffs(const ChiSeries& chi, const ZSeries& eigen, int order);
/// derive_coeffs with eigen = lambda and order 9.
DeriveResult derive_L1_coeffs(const ChiSeries& chi);

struct Rank3Report {
    bool pass = false;
    /// Largest z-order through which the remainder equals (eigen, 0, 0).
    int verified_through = 0;
    int lowest_z_order = 0;
    /// First mismatch (j, z-order), if any.
    std::optional<std::pair<int, int>> first_failure;
    std::string detail;
};

/// Remainder of L mod T (computed by right_reduce) against (eigen, 0, 0)
/// through z^check_order.
Rank3Report verify_rank3(const XOp& L, const ChiSeries& chi, const ZSeries& eigen, int check_order);

struct Window {
    int lo = -16;
    int hi = 28;
};

struct AffineSolutionSet {
    bool consistent = false;
    XOp particular;
    /// Q-basis of the homogeneous solutions inside the ansatz.
    std::vector<XOp> rational_basis;
    /// Generators of the homogeneous part over Q(eps).
    std::vector<XOp> basis;
    /// Rank over Q(eps): the number of independent generators.
    int dimension = 0;
    int rational_dimension = 0;
    /// True when every homogeneous solution is c(eps) I + c'(eps) A.
    bool spanned_by_identity_and_input = false;
    /// Particular and every rational basis element commute with A (checked).
    bool verified = false;
    int unknowns = 0;
    long equations = 0;
    int rank = 0;
    std::vector<std::string> warnings;

    /// B lies in particular + Q-span(rational_basis).
    [[nodiscard]] bool contains(const XOp& b) const;

    // ansatz bookkeeping
    int target_order = 0;
    Window window;
    int eps_degree = 0;
};

/// All monic B of order target with coefficients supported on
/// window x even eps-powers <= eps_degree such that [A, B] = 0.
AffineSolutionSet solve_commuting(const XOp& a, int target_order, Window window = {}, int eps_degree = 8);

struct BcResult {
    bool found = false;
    BiPoly q;
    int weight = 0;
    bool unique = true;
    bool verified = false;
    std::string message;
};

/// Minimal weight Q with Q(A, B) = 0, z ~ A (weight ord A), w ~ B
/// (weight ord B), highest monomial (weight, then w before z) normalized to 1.
BcResult find_bc_relation(const XOp& a, const XOp& b, int weight_bound, int eps_degree = 12);

/// [A, B] coefficient-wise; exposes the W_k of the commutation system.
std::vector<XLaurent> commutation_system(const XOp& a, const XOp& b);

}  // namespace commop::pipeline
