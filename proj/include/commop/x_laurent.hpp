#pragma once

#include "commop/eps_poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace commop {

/// Laurent polynomial in x with EpsPoly coefficients: the coefficient ring
/// of the operators L1, L2. Sorted by x-exponent, no zero coefficients.
class XLaurent {
public:
    struct Term {
        int exp;
        EpsPoly coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    XLaurent() = default;
    XLaurent(const EpsPoly& c);  // NOLINT(google-explicit-constructor)
    XLaurent(const Rational& c) : XLaurent(EpsPoly(c)) {}  // NOLINT(google-explicit-constructor)
    XLaurent(long c) : XLaurent(EpsPoly(c)) {}  // NOLINT(google-explicit-constructor)
    XLaurent(int c) : XLaurent(EpsPoly(c)) {}   // NOLINT(google-explicit-constructor)

    static XLaurent monomial(const EpsPoly& c, int xexp);
    /// c * eps^eexp * x^xexp
    static XLaurent monomial(const Rational& c, int eexp, int xexp);
    static XLaurent x() { return monomial(Rational(1), 0, 1); }
    static XLaurent from_terms(std::vector<Term> terms);

    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] EpsPoly coefficient(int xexp) const;
    [[nodiscard]] int min_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }
    [[nodiscard]] int max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }
    [[nodiscard]] int eps_degree() const;
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }

    /// True iff a single monomial c * eps^k * x^a with c != 0.
    [[nodiscard]] bool is_unit() const { return terms_.size() == 1 && terms_[0].coef.is_monomial(); }
    /// Exact division by a unit. Throws std::domain_error when `u` is not a
    /// unit or when its eps-power does not divide every coefficient.
    [[nodiscard]] XLaurent divide_by_unit(const XLaurent& u) const;

    [[nodiscard]] XLaurent derive() const;
    [[nodiscard]] XLaurent substitute_eps(const Rational& eps) const;

    XLaurent& operator+=(const XLaurent& o);
    XLaurent& operator-=(const XLaurent& o);
    XLaurent& operator*=(const Rational& c);
    XLaurent& operator*=(const EpsPoly& c);
    XLaurent& operator*=(const XLaurent& o) { return *this = *this * o; }
    friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
    friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
    friend XLaurent operator-(XLaurent a);
    friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
    friend XLaurent operator*(XLaurent a, const Rational& c) { return a *= c; }
    friend XLaurent operator*(const Rational& c, XLaurent a) { return a *= c; }
    friend XLaurent operator*(XLaurent a, const EpsPoly& c) { return a *= c; }

    friend bool operator==(const XLaurent&, const XLaurent&) = default;

    /// Text grammar form, highest x-power first, e.g. "x^6/5832 - 28/x^3".
    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::string tex() const;

private:
    std::vector<Term> terms_;
    friend class XLaurentAccumulator;
};

inline XLaurent derive(const XLaurent& p) { return p.derive(); }

/// Dense-in-x scratch buffer for sums of XLaurent products.
class XLaurentAccumulator {
public:
    void add_product(const XLaurent& a, const XLaurent& b, const Rational& scale = Rational(1));
    void add(const XLaurent& a, const Rational& scale = Rational(1));
    [[nodiscard]] XLaurent take();

private:
    void cover(int lo, int hi);
    int lo_ = 0;
    std::vector<EpsAccumulator> slots_;
};

}  // namespace commop
