#include "commop/x_laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "format_util.hpp"

namespace commop {

XLaurent::XLaurent(const EpsPoly& c) {
    if (!c.is_zero()) terms_.push_back({0, c});
}

XLaurent XLaurent::monomial(const EpsPoly& c, int xexp) {
    XLaurent p;
    if (!c.is_zero()) p.terms_.push_back({xexp, c});
    return p;
}

XLaurent XLaurent::monomial(const Rational& c, int eexp, int xexp) {
    return monomial(EpsPoly::monomial(c, eexp), xexp);
}

XLaurent XLaurent::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    XLaurent p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    }
    return p;
}

EpsPoly XLaurent::coefficient(int xexp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), xexp, [](const Term& t, int e) { return t.exp < e; });
    return (it != terms_.end() && it->exp == xexp) ? it->coef : EpsPoly();
}

int XLaurent::eps_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.coef.degree());
    return d;
}

XLaurent XLaurent::divide_by_unit(const XLaurent& u) const {
    if (!u.is_unit()) throw std::domain_error("XLaurent: " + u.str() + " is not a unit");
    const auto& ut = u.terms_[0];
    const auto& ue = ut.coef.terms()[0];
    XLaurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp - ut.exp, t.coef.divide_by_monomial(ue.coef, ue.exp)});
    return r;
}

XLaurent XLaurent::derive() const {
    XLaurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        if (t.exp != 0) r.terms_.push_back({t.exp - 1, t.coef * Rational(t.exp)});
    return r;
}

XLaurent XLaurent::substitute_eps(const Rational& eps) const {
    XLaurent r;
    for (const auto& t : terms_) {
        Rational v = t.coef.evaluate(eps);
        if (!v.is_zero()) r.terms_.push_back({t.exp, EpsPoly(v)});
    }
    return r;
}

namespace {

template <class Op>
std::vector<XLaurent::Term> merge(std::span<const XLaurent::Term> a, std::span<const XLaurent::Term> b, Op op) {
    std::vector<XLaurent::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exp < a[i].exp) {
            out.push_back({b[j].exp, op(EpsPoly(), b[j].coef)});
            ++j;
        } else {
            EpsPoly c = op(a[i].coef, b[j].coef);
            if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

XLaurent& XLaurent::operator+=(const XLaurent& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, [](const EpsPoly& x, const EpsPoly& y) { return x + y; });
    return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, [](const EpsPoly& x, const EpsPoly& y) { return x - y; });
    return *this;
}

XLaurent& XLaurent::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

XLaurent& XLaurent::operator*=(const EpsPoly& c) {
    std::vector<Term> out;
    for (auto& t : terms_) {
        EpsPoly p = t.coef * c;
        if (!p.is_zero()) out.push_back({t.exp, std::move(p)});
    }
    terms_ = std::move(out);
    return *this;
}

XLaurent operator-(XLaurent a) {
    for (auto& t : a.terms_) t.coef = -t.coef;
    return a;
}

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    XLaurentAccumulator acc;
    acc.add_product(a, b);
    return acc.take();
}

std::string XLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto eps_terms = it->coef.terms();
        for (auto e = eps_terms.rbegin(); e != eps_terms.rend(); ++e) {
            detail::write_monomial(os, e->coef, {{"eps", e->exp}, {"x", it->exp}}, first);
            first = false;
        }
    }
    return os.str();
}

std::string XLaurent::tex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto eps_terms = it->coef.terms();
        for (auto e = eps_terms.rbegin(); e != eps_terms.rend(); ++e) {
            detail::write_monomial_tex(os, e->coef, {{"eps", e->exp}, {"x", it->exp}}, first);
            first = false;
        }
    }
    return os.str();
}

void XLaurentAccumulator::cover(int lo, int hi) {
    if (slots_.empty()) {
        lo_ = lo;
        slots_.resize(hi - lo + 1);
        return;
    }
    const int cur_hi = lo_ + static_cast<int>(slots_.size()) - 1;
    if (lo < lo_) {
        slots_.insert(slots_.begin(), lo_ - lo, EpsAccumulator());
        lo_ = lo;
    }
    if (hi > cur_hi) slots_.resize(hi - lo_ + 1);
}

void XLaurentAccumulator::add_product(const XLaurent& a, const XLaurent& b, const Rational& scale) {
    if (a.is_zero() || b.is_zero() || scale.is_zero()) return;
    cover(a.min_exp() + b.min_exp(), a.max_exp() + b.max_exp());
    if (scale.is_one()) {
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) slots_[ta.exp + tb.exp - lo_].add_product(ta.coef, tb.coef);
        return;
    }
    for (const auto& ta : a.terms_) {
        const EpsPoly scaled = ta.coef * scale;
        for (const auto& tb : b.terms_) slots_[ta.exp + tb.exp - lo_].add_product(scaled, tb.coef);
    }
}

void XLaurentAccumulator::add(const XLaurent& a, const Rational& scale) {
    if (a.is_zero() || scale.is_zero()) return;
    cover(a.min_exp(), a.max_exp());
    for (const auto& t : a.terms_) slots_[t.exp - lo_].add_scaled(t.coef, scale);
}

XLaurent XLaurentAccumulator::take() {
    XLaurent r;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].empty()) continue;
        EpsPoly c = slots_[i].take();
        if (!c.is_zero()) r.terms_.push_back({lo_ + static_cast<int>(i), std::move(c)});
    }
    slots_.clear();
    return r;
}

}  // namespace commop
