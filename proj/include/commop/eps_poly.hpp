#pragma once

#include "commop/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace commop {

/// Polynomial in the curve parameter eps over Q. Sparse, sorted by exponent,
/// no stored zero coefficients.
class EpsPoly {
public:
    struct Term {
        int exp;
        Rational coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    EpsPoly() = default;
    EpsPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    EpsPoly(long c) : EpsPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    EpsPoly(int c) : EpsPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static EpsPoly monomial(const Rational& c, int exp);
    /// Builds from unsorted terms; merges duplicates and drops zeros.
    static EpsPoly from_terms(std::vector<Term> terms);

    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
    [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    /// Highest exponent; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return terms_.empty() ? -1 : terms_.back().exp; }
    /// Lowest exponent with nonzero coefficient; -1 for zero.
    [[nodiscard]] int low_degree() const { return terms_.empty() ? -1 : terms_.front().exp; }
    [[nodiscard]] Rational coefficient(int exp) const;

    /// Substitutes a rational value for eps.
    [[nodiscard]] Rational evaluate(const Rational& eps) const;
    /// Exact division by c*eps^exp; throws std::domain_error if some term has
    /// eps-exponent below exp.
    [[nodiscard]] EpsPoly divide_by_monomial(const Rational& c, int exp) const;

    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);
    EpsPoly& operator*=(const Rational& c);
    friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
    friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
    friend EpsPoly operator-(EpsPoly a);
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
    friend EpsPoly operator*(EpsPoly a, const Rational& c) { return a *= c; }
    friend EpsPoly operator*(const Rational& c, EpsPoly a) { return a *= c; }

    friend bool operator==(const EpsPoly&, const EpsPoly&) = default;

    /// Human readable, e.g. "eps^2/1944 + 1". Grammar compatible with the
    /// operator text format.
    [[nodiscard]] std::string str() const;

private:
    std::vector<Term> terms_;
    friend class EpsAccumulator;
};

/// Dense scratch buffer for sums of products of EpsPoly values.
class EpsAccumulator {
public:
    void add_product(const EpsPoly& a, const EpsPoly& b);
    void add_scaled(const EpsPoly& a, const Rational& c);
    void add(const EpsPoly& a);
    [[nodiscard]] bool empty() const { return coef_.empty(); }
    [[nodiscard]] EpsPoly take();

private:
    void reserve_degree(int deg);
    std::vector<Rational> coef_;
};

}  // namespace commop
