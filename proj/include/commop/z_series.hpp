#pragma once

#include "commop/x_laurent.hpp"

#include <limits>
#include <string>
#include <vector>

namespace commop {

/// Default number of terms kept beyond the lowest exponent when a series is
/// produced from exact data.
inline constexpr int kDefaultSeriesOrder = 16;

/// Truncated Laurent series in z with XLaurent coefficients.
///
/// Coefficients are dense from `lowest()` and every term with exponent below
/// `precision()` is known; the rest is O(z^precision). Exact (finite) series
/// have precision `kExact`. Results of arithmetic carry the largest precision
/// justified by their inputs, never more.
class ZSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    /// Exact zero.
    ZSeries() = default;
    ZSeries(const XLaurent& c);  // NOLINT(google-explicit-constructor)
    ZSeries(const Rational& c) : ZSeries(XLaurent(c)) {}  // NOLINT(google-explicit-constructor)
    ZSeries(long c) : ZSeries(XLaurent(c)) {}  // NOLINT(google-explicit-constructor)
    ZSeries(int c) : ZSeries(XLaurent(c)) {}   // NOLINT(google-explicit-constructor)

    static ZSeries monomial(const XLaurent& c, int zexp);
    /// Coefficients for z^lowest, z^(lowest+1), ...; precision is absolute.
    static ZSeries from_coefficients(int lowest, std::vector<XLaurent> coeffs, int precision = kExact);
    /// O(z^precision) with no known nonzero terms.
    static ZSeries big_o(int precision);

    /// Exponent of the first stored coefficient (the valuation once normalized).
    [[nodiscard]] int lowest() const { return lowest_; }
    /// First exponent with a nonzero coefficient; precision() if none known.
    [[nodiscard]] int valuation() const;
    [[nodiscard]] int precision() const { return precision_; }
    [[nodiscard]] bool is_exact() const { return precision_ == kExact; }
    /// Number of known terms beyond the lowest exponent (the truncation order).
    [[nodiscard]] int order() const;
    /// All known coefficients are zero.
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of z^e; throws std::out_of_range when e >= precision().
    [[nodiscard]] XLaurent coefficient(int e) const;
    [[nodiscard]] const std::vector<XLaurent>& coefficients() const { return coeffs_; }

    [[nodiscard]] ZSeries truncate(int precision) const;
    /// d/dx applied coefficient-wise.
    [[nodiscard]] ZSeries derive() const;
    /// Multiplicative inverse. The leading coefficient must be a unit XLaurent.
    /// Exact inputs are expanded through `order` terms beyond the lowest one.
    [[nodiscard]] ZSeries inverse(int order = kDefaultSeriesOrder) const;
    /// Branch with constant term 1, through z^order for exact inputs. Requires
    /// lowest() == 0 and constant term 1.
    [[nodiscard]] ZSeries sqrt(int order = kDefaultSeriesOrder) const;
    [[nodiscard]] ZSeries substitute_eps(const Rational& eps) const;

    ZSeries& operator+=(const ZSeries& o);
    ZSeries& operator-=(const ZSeries& o);
    ZSeries& operator*=(const Rational& c);
    ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
    friend ZSeries operator-(ZSeries a);
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator*(ZSeries a, const Rational& c) { return a *= c; }
    friend ZSeries operator*(const Rational& c, ZSeries a) { return a *= c; }
    /// a * inverse(b)
    friend ZSeries operator/(const ZSeries& a, const ZSeries& b);

    /// Equal known coefficients and equal precision.
    friend bool operator==(const ZSeries&, const ZSeries&) = default;

    [[nodiscard]] std::string str() const;

private:
    void normalize();

    int lowest_ = 0;
    std::vector<XLaurent> coeffs_;
    int precision_ = kExact;
};

inline ZSeries derive(const ZSeries& s) { return s.derive(); }

}  // namespace commop
