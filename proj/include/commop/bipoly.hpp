#pragma once

#include "commop/diffop.hpp"
#include "commop/eps_poly.hpp"

#include <map>
#include <tuple>
#include <vector>
#include <stdexcept>
#include <string>
#include <utility>

namespace commop {

/// Polynomial Q(z, w) over EpsPoly; keys are (z-exponent, w-exponent).
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly monomial(const EpsPoly& c, int zexp, int wexp);

    void add_term(const EpsPoly& c, int zexp, int wexp);
    [[nodiscard]] const std::map<Key, EpsPoly>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] EpsPoly coefficient(int zexp, int wexp) const;
    [[nodiscard]] BiPoly substitute_eps(const Rational& eps) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Monomials in descending lexicographic order with w before z, e.g.
    /// "w^3 - (eps^4/15552)*w^2 - z^4 - z^3".
    [[nodiscard]] std::string str() const;

private:
    std::map<Key, EpsPoly> terms_;
};

/// Raised by eval_poly_at_pair when [A, B] != 0.
class NonCommutingError : public std::runtime_error {
public:
    NonCommutingError(int k, const std::string& coefficient)
        : std::runtime_error("operators do not commute: W_" + std::to_string(k) + " = " + coefficient), k_(k) {}
    [[nodiscard]] int first_nonzero() const { return k_; }

private:
    int k_;
};

enum class MonomialOrder { AThenB, BThenA };

/// Products A^a o B^b with memoized powers.
class PowerTable {
public:
    PowerTable(XOp a, XOp b);
    const XOp& power_a(int k);
    const XOp& power_b(int k);
    /// A^a o B^b (or B^b o A^a).
    XOp product(int a, int b, MonomialOrder order = MonomialOrder::AThenB);

private:
    std::vector<XOp> pa_;
    std::vector<XOp> pb_;
    std::map<std::tuple<int, int, int>, XOp> products_;
};

/// sum_{a,b} q_ab A^a o B^b for a commuting pair (A as z, B as w).
/// Throws NonCommutingError naming the lowest k with W_k != 0.
XOp eval_poly_at_pair(const BiPoly& q, const XOp& a, const XOp& b, MonomialOrder order = MonomialOrder::AThenB);
/// Same, reusing a caller-owned table; the commutation check is skipped.
XOp eval_poly_at_pair(const BiPoly& q, PowerTable& table, MonomialOrder order = MonomialOrder::AThenB);

}  // namespace commop
