#include "commop/curve.hpp"

#include "commop/opdata.hpp"

#include <stdexcept>

namespace commop {

namespace {

XZPoly zp(long c, int eexp, int xexp, int zexp) { return XZPoly::monomial(Rational(c), eexp, xexp, zexp); }
XZPoly zp(const Rational& c, int eexp, int xexp, int zexp) { return XZPoly::monomial(c, eexp, xexp, zexp); }

CurveDef make_curve(int eps_power, std::string name) {
    return {zp(1, 0, 0, 0) - zp(2, 0, 0, 3) - zp(Rational(1, 3888), eps_power, 0, 4) + zp(1, 0, 0, 6),
            std::move(name)};
}

}  // namespace

CurveDef CurveDef::standard() { return make_curve(4, "standard"); }
CurveDef CurveDef::eps2_variant() { return make_curve(2, "eps2-variant"); }

XZFraction CurveElem::norm(const CurveDef& c) const { return a_ * a_ - b_ * b_ * XZFraction(c.W); }

CurveElem CurveElem::substitute_eps(const Rational& eps) const {
    return {a_.substitute_eps(eps), b_.substitute_eps(eps)};
}

CurveElem CurveElem::mul(const CurveElem& p, const CurveElem& q, const CurveDef& c) {
    XZFraction a = p.a_ * q.a_;
    if (!p.b_.is_zero() && !q.b_.is_zero()) a += p.b_ * q.b_ * XZFraction(c.W);
    return {std::move(a), p.a_ * q.b_ + p.b_ * q.a_};
}

CurveElem CurveElem::pow(const CurveElem& p, unsigned k, const CurveDef& c) {
    CurveElem r(XZFraction(1));
    for (unsigned i = 0; i < k; ++i) r = mul(r, p, c);
    return r;
}

bool CurveElem::is_zero() const { return a_.is_zero() && b_.is_zero(); }

std::string CurveElem::str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + " + " + b_.str() + "*w";
}

XZPoly kappa() { return zp(1, 2, 0, 3) + zp(1, 0, 3, 3) - zp(1, 0, 3, 0); }

CurveElem chi(int j) {
    const XZPoly k = kappa();
    switch (j) {
        case 0: {
            // 1/(2z) - x^3(eps^2+x^3)/5832 + 10(z^3-1)/kappa + eps^2 x^3 z/(216 kappa)
            //   - (108 w + eps^2 z^2)/(6 kappa) - x^3 w/(2 kappa z) + 16 eps^2 z^3/(kappa x^3)
            XZFraction a = XZFraction(XZPoly(1), zp(2, 0, 0, 1));
            a += XZFraction(-(zp(1, 2, 3, 0) + zp(1, 0, 6, 0)) * Rational(1, 5832));
            a += XZFraction(zp(10, 0, 0, 3) - zp(10, 0, 0, 0), k);
            a += XZFraction(zp(1, 2, 3, 1), k * XZPoly(216));
            a += XZFraction(-zp(1, 2, 0, 2), k * XZPoly(6));
            a += XZFraction(zp(16, 2, 0, 3), k * zp(1, 0, 3, 0));
            XZFraction b = XZFraction(XZPoly(-108), k * XZPoly(6));
            b += XZFraction(-zp(1, 0, 3, 0), k * zp(2, 0, 0, 1));
            return {std::move(a), std::move(b)};
        }
        case 1: {
            // (132 eps^2 z^3 - x^3 [204 - 204 z^3 + 108 w + eps^2 z^2]) / (12 x^2 kappa)
            const XZPoly den = k * zp(12, 0, 2, 0);
            XZFraction a(zp(132, 2, 0, 3) - zp(204, 0, 3, 0) + zp(204, 0, 3, 3) - zp(1, 2, 3, 2), den);
            XZFraction b(zp(-108, 0, 3, 0), den);
            return {std::move(a), std::move(b)};
        }
        case 2:
            return {XZFraction(zp(-3, 2, 0, 3), k * zp(1, 0, 1, 0))};
        default:
            throw std::invalid_argument("chi: index must be 0, 1 or 2");
    }
}

CurveElem lambda_fn() {
    const XZFraction half_inv_z3(XZPoly(1), zp(2, 0, 0, 3));
    return {half_inv_z3 - XZFraction(Rational(1, 2)), half_inv_z3};
}

CurveElem mu_fn() {
    const XZFraction half_inv_z4(XZPoly(1), zp(2, 0, 0, 4));
    return {half_inv_z4 - XZFraction(XZPoly(1), zp(2, 0, 0, 1)), half_inv_z4};
}

ZSeries w_series(const CurveDef& c, int order) { return c.W.to_series().sqrt(order); }

ZSeries curve_series(const CurveElem& e, int order, const CurveDef& c) {
    // Poles in the parts shift precision; widen the working order until the
    // requested number of terms is known.
    for (int margin = 8;; margin *= 2) {
        const int work = order + margin;
        ZSeries s = fraction_to_series(e.a(), work);
        if (!e.b().is_zero()) s += fraction_to_series(e.b(), work) * w_series(c, work);
        if (s.is_zero() && s.precision() == ZSeries::kExact) return s;
        if (s.order() >= order || margin > 256) return s.truncate(s.valuation() + order + 1);
    }
}

CurveElem eval_poly_at_functions(const BiPoly& q, const CurveElem& zval, const CurveElem& wval, const CurveDef& c) {
    CurveElem result;
    for (const auto& [key, coef] : q.terms()) {
        const auto [za, wb] = key;
        CurveElem m = CurveElem::mul(CurveElem::pow(zval, za, c), CurveElem::pow(wval, wb, c), c);
        XZPoly cp;
        for (const auto& t : coef.terms()) cp += XZPoly::monomial(t.coef, t.exp, 0, 0);
        result = result + CurveElem::mul(CurveElem(XZFraction(cp)), m, c);
    }
    return result;
}

bool bc_function_identity(const CurveDef& c) {
    return eval_poly_at_functions(opdata::bc_polynomial(), lambda_fn(), mu_fn(), c).is_zero();
}

}  // namespace commop
