#include "commop/xz_fraction.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "format_util.hpp"

namespace commop {

namespace {

bool term_less(const XZPoly::Term& a, const XZPoly::Term& b) {
    return a.zexp != b.zexp ? a.zexp < b.zexp : a.xexp < b.xexp;
}

}  // namespace

XZPoly::XZPoly(const EpsPoly& c) {
    if (!c.is_zero()) terms_.push_back({0, 0, c});
}

XZPoly XZPoly::monomial(const Rational& c, int eexp, int xexp, int zexp) {
    if (xexp < 0 || zexp < 0) throw std::domain_error("XZPoly: negative exponent");
    XZPoly p;
    if (!c.is_zero()) p.terms_.push_back({xexp, zexp, EpsPoly::monomial(c, eexp)});
    return p;
}

XZPoly XZPoly::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), term_less);
    XZPoly p;
    for (auto& t : terms) {
        if (t.xexp < 0 || t.zexp < 0) throw std::domain_error("XZPoly: negative exponent");
        if (!p.terms_.empty() && p.terms_.back().xexp == t.xexp && p.terms_.back().zexp == t.zexp)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    }
    return p;
}

int XZPoly::min_xexp() const {
    int m = INT_MAX;
    for (const auto& t : terms_) m = std::min(m, t.xexp);
    return terms_.empty() ? 0 : m;
}

int XZPoly::min_zexp() const { return terms_.empty() ? 0 : terms_.front().zexp; }

XZPoly XZPoly::shift_down(int a, int b) const {
    XZPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.xexp < a || t.zexp < b) throw std::domain_error("XZPoly: shift below zero");
        p.terms_.push_back({t.xexp - a, t.zexp - b, t.coef});
    }
    return p;
}

XZPoly XZPoly::pow(unsigned k) const {
    XZPoly r(1);
    XZPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

XZPoly XZPoly::substitute_eps(const Rational& eps) const {
    std::vector<Term> out;
    for (const auto& t : terms_) out.push_back({t.xexp, t.zexp, EpsPoly(t.coef.evaluate(eps))});
    return from_terms(std::move(out));
}

ZSeries XZPoly::to_series() const {
    if (terms_.empty()) return {};
    const int lo = terms_.front().zexp;
    const int hi = terms_.back().zexp;
    std::vector<std::vector<XLaurent::Term>> rows(hi - lo + 1);
    for (const auto& t : terms_) rows[t.zexp - lo].push_back({t.xexp, t.coef});
    std::vector<XLaurent> coeffs;
    coeffs.reserve(rows.size());
    for (auto& r : rows) coeffs.push_back(XLaurent::from_terms(std::move(r)));
    return ZSeries::from_coefficients(lo, std::move(coeffs));
}

XZPoly& XZPoly::operator+=(const XZPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return *this = from_terms(std::move(all));
}

XZPoly operator-(XZPoly a) {
    for (auto& t : a.terms_) t.coef = -t.coef;
    return a;
}

XZPoly operator*(const XZPoly& a, const XZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<std::pair<int, int>, EpsAccumulator> acc;  // (z, x)
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc[{ta.zexp + tb.zexp, ta.xexp + tb.xexp}].add_product(ta.coef, tb.coef);
    XZPoly r;
    for (auto& [key, slot] : acc) {
        EpsPoly c = slot.take();
        if (!c.is_zero()) r.terms_.push_back({key.second, key.first, std::move(c)});
    }
    return r;
}

XZPoly operator*(XZPoly a, const Rational& c) {
    if (c.is_zero()) return {};
    for (auto& t : a.terms_) t.coef *= c;
    return a;
}

std::string XZPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto eps_terms = it->coef.terms();
        for (auto e = eps_terms.rbegin(); e != eps_terms.rend(); ++e) {
            detail::write_monomial(os, e->coef, {{"eps", e->exp}, {"x", it->xexp}, {"z", it->zexp}}, first);
            first = false;
        }
    }
    return os.str();
}

XZFraction::XZFraction(const XZPoly& num) : num_(num), den_(1) {}

XZFraction::XZFraction(XZPoly num, XZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("XZFraction: zero denominator");
    cancel_monomial_content();
}

void XZFraction::cancel_monomial_content() {
    if (num_.is_zero()) {
        den_ = XZPoly(1);
        return;
    }
    const int a = std::min(num_.min_xexp(), den_.min_xexp());
    const int b = std::min(num_.min_zexp(), den_.min_zexp());
    if (a > 0 || b > 0) {
        num_ = num_.shift_down(a, b);
        den_ = den_.shift_down(a, b);
    }
}

XZFraction XZFraction::substitute_eps(const Rational& eps) const {
    return {num_.substitute_eps(eps), den_.substitute_eps(eps)};
}

XZFraction& XZFraction::operator+=(const XZFraction& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    cancel_monomial_content();
    return *this;
}

XZFraction operator-(XZFraction a) {
    a.num_ = -a.num_;
    return a;
}

XZFraction operator*(const XZFraction& a, const XZFraction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.num_ * b.num_, a.den_ * b.den_};
}

XZFraction operator/(const XZFraction& a, const XZFraction& b) {
    if (b.is_zero()) throw std::domain_error("XZFraction: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string XZFraction::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

bool fraction_equal(const XZFraction& a, const XZFraction& b) {
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

ZSeries fraction_to_series(const XZFraction& a, int order) {
    const ZSeries num = a.num().to_series();
    const ZSeries den = a.den().to_series();
    if (num.is_zero()) return {};
    const ZSeries inv = den.inverse(order);
    return (num * inv).truncate(num.valuation() + inv.precision());
}

}  // namespace commop
