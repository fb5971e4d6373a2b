#pragma once

#include "commop/bipoly.hpp"
#include "commop/xz_fraction.hpp"

#include <string>

namespace commop {

/// The curve w^2 = W(z) with marked point q = (0, 1).
struct CurveDef {
    XZPoly W;
    std::string name;

    /// w^2 = 1 - 2z^3 - (eps^4/3888) z^4 + z^6.
    static CurveDef standard();
    /// Same with eps^2 in place of eps^4 (the form shown beside the chi
    /// formulas); kept for comparison.
    static CurveDef eps2_variant();
};

/// a + b*w in the quadratic extension of the (x, z) function field.
class CurveElem {
public:
    CurveElem() = default;
    CurveElem(XZFraction a, XZFraction b = XZFraction()) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
    static CurveElem w() { return {XZFraction(), XZFraction(1)}; }

    [[nodiscard]] const XZFraction& a() const { return a_; }
    [[nodiscard]] const XZFraction& b() const { return b_; }

    /// (z, w) -> (z, -w)
    [[nodiscard]] CurveElem sigma_conj() const { return {a_, -b_}; }
    /// (a + bw)(a - bw) = a^2 - b^2 W; w-free.
    [[nodiscard]] XZFraction norm(const CurveDef& c) const;
    [[nodiscard]] CurveElem substitute_eps(const Rational& eps) const;

    friend CurveElem operator+(const CurveElem& p, const CurveElem& q) { return {p.a_ + q.a_, p.b_ + q.b_}; }
    friend CurveElem operator-(const CurveElem& p, const CurveElem& q) { return {p.a_ - q.a_, p.b_ - q.b_}; }
    friend CurveElem operator-(const CurveElem& p) { return {-p.a_, -p.b_}; }
    /// Product reducing w^2 -> W(z) on curve c.
    static CurveElem mul(const CurveElem& p, const CurveElem& q, const CurveDef& c);
    static CurveElem pow(const CurveElem& p, unsigned k, const CurveDef& c);

    /// Both parts vanish (exact, by cross-multiplication).
    [[nodiscard]] bool is_zero() const;
    friend bool curve_equal(const CurveElem& p, const CurveElem& q) { return (p - q).is_zero(); }

    [[nodiscard]] std::string str() const;

private:
    XZFraction a_;
    XZFraction b_;
};

/// kappa = (eps^2 + x^3) z^3 - x^3
XZPoly kappa();
/// chi_j, j in {0, 1, 2}, in closed form.
CurveElem chi(int j);
/// (1 + w)/(2z^3) - 1/2
CurveElem lambda_fn();
/// (1 + w)/(2z^4) - 1/(2z)
CurveElem mu_fn();

/// Branch of sqrt(W) with w(0) = 1, to `order` terms.
ZSeries w_series(const CurveDef& c, int order = kDefaultSeriesOrder);
/// Laurent expansion at q with w -> w_series. At least `order` terms beyond
/// the lowest exponent are known.
ZSeries curve_series(const CurveElem& e, int order = kDefaultSeriesOrder, const CurveDef& c = CurveDef::standard());

/// Q(lambda, mu) with Q = w^3 - (eps^4/15552) w^2 - z^4 - z^3 (z -> lambda,
/// w -> mu) vanishes on curve c.
bool bc_function_identity(const CurveDef& c = CurveDef::standard());
/// Q evaluated at (lambda, mu) on curve c.
CurveElem eval_poly_at_functions(const BiPoly& q, const CurveElem& zval, const CurveElem& wval, const CurveDef& c);

}  // namespace commop
