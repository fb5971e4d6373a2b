#pragma once

#include "commop/z_series.hpp"

#include <span>
#include <string>
#include <vector>

namespace commop {

/// Polynomial in x and z (non-negative exponents) over EpsPoly.
class XZPoly {
public:
    struct Term {
        int xexp;
        int zexp;
        EpsPoly coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    XZPoly() = default;
    XZPoly(const EpsPoly& c);  // NOLINT(google-explicit-constructor)
    XZPoly(const Rational& c) : XZPoly(EpsPoly(c)) {}  // NOLINT(google-explicit-constructor)
    XZPoly(long c) : XZPoly(EpsPoly(c)) {}  // NOLINT(google-explicit-constructor)
    XZPoly(int c) : XZPoly(EpsPoly(c)) {}   // NOLINT(google-explicit-constructor)

    /// c * eps^eexp * x^xexp * z^zexp
    static XZPoly monomial(const Rational& c, int eexp, int xexp, int zexp);
    static XZPoly from_terms(std::vector<Term> terms);
    static XZPoly x() { return monomial(Rational(1), 0, 1, 0); }
    static XZPoly z() { return monomial(Rational(1), 0, 0, 1); }
    static XZPoly eps() { return monomial(Rational(1), 1, 0, 0); }

    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] int min_xexp() const;
    [[nodiscard]] int min_zexp() const;
    /// Divides by x^a z^b; every term must carry at least that power.
    [[nodiscard]] XZPoly shift_down(int a, int b) const;
    [[nodiscard]] XZPoly pow(unsigned k) const;
    [[nodiscard]] XZPoly substitute_eps(const Rational& eps) const;
    /// Exact series in z with XLaurent coefficients.
    [[nodiscard]] ZSeries to_series() const;

    XZPoly& operator+=(const XZPoly& o);
    XZPoly& operator-=(const XZPoly& o) { return *this += -o; }
    friend XZPoly operator+(XZPoly a, const XZPoly& b) { return a += b; }
    friend XZPoly operator-(XZPoly a, const XZPoly& b) { return a -= b; }
    friend XZPoly operator-(XZPoly a);
    friend XZPoly operator*(const XZPoly& a, const XZPoly& b);
    friend XZPoly operator*(XZPoly a, const Rational& c);

    friend bool operator==(const XZPoly&, const XZPoly&) = default;

    [[nodiscard]] std::string str() const;

private:
    std::vector<Term> terms_;  // sorted by (zexp, xexp)
};

/// num/den with den != 0. No canonical form: equality is decided by
/// cross-multiplication. Common monomial factors x^a z^b are cancelled.
class XZFraction {
public:
    XZFraction() : num_(), den_(1) {}
    XZFraction(const XZPoly& num);  // NOLINT(google-explicit-constructor)
    XZFraction(const Rational& c) : XZFraction(XZPoly(c)) {}  // NOLINT(google-explicit-constructor)
    XZFraction(int c) : XZFraction(XZPoly(c)) {}  // NOLINT(google-explicit-constructor)
    XZFraction(XZPoly num, XZPoly den);

    [[nodiscard]] const XZPoly& num() const { return num_; }
    [[nodiscard]] const XZPoly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] XZFraction substitute_eps(const Rational& eps) const;

    XZFraction& operator+=(const XZFraction& o);
    XZFraction& operator-=(const XZFraction& o) { return *this += -o; }
    friend XZFraction operator+(XZFraction a, const XZFraction& b) { return a += b; }
    friend XZFraction operator-(XZFraction a, const XZFraction& b) { return a -= b; }
    friend XZFraction operator-(XZFraction a);
    friend XZFraction operator*(const XZFraction& a, const XZFraction& b);
    friend XZFraction operator/(const XZFraction& a, const XZFraction& b);

    [[nodiscard]] std::string str() const;

private:
    void cancel_monomial_content();
    XZPoly num_;
    XZPoly den_;
};

/// a.num * b.den - b.num * a.den == 0, exactly.
bool fraction_equal(const XZFraction& a, const XZFraction& b);

/// Laurent expansion in z. The leading z-coefficient of the denominator
/// must be a unit XLaurent; `order` counts terms beyond the lowest exponent.
ZSeries fraction_to_series(const XZFraction& a, int order = kDefaultSeriesOrder);

}  // namespace commop
