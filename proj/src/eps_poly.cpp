#include "commop/eps_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "format_util.hpp"

namespace commop {

EpsPoly::EpsPoly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({0, c});
}

EpsPoly EpsPoly::monomial(const Rational& c, int exp) {
    if (exp < 0) throw std::domain_error("EpsPoly: negative eps exponent");
    EpsPoly p;
    if (!c.is_zero()) p.terms_.push_back({exp, c});
    return p;
}

EpsPoly EpsPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    EpsPoly p;
    for (auto& t : terms) {
        if (t.exp < 0) throw std::domain_error("EpsPoly: negative eps exponent");
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    }
    return p;
}

Rational EpsPoly::coefficient(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
    return (it != terms_.end() && it->exp == exp) ? it->coef : Rational(0);
}

Rational EpsPoly::evaluate(const Rational& eps) const {
    Rational acc;
    int at = degree();
    // Horner over the sparse representation.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (; at > it->exp; --at) acc *= eps;
        acc += it->coef;
    }
    for (; at > 0; --at) acc *= eps;
    return acc;
}

EpsPoly EpsPoly::divide_by_monomial(const Rational& c, int exp) const {
    if (c.is_zero()) throw std::domain_error("EpsPoly: division by zero");
    EpsPoly r;
    r.terms_.reserve(terms_.size());
    const Rational inv = c.inverse();
    for (const auto& t : terms_) {
        if (t.exp < exp)
            throw std::domain_error("EpsPoly: " + str() + " is not divisible by eps^" + std::to_string(exp));
        r.terms_.push_back({t.exp - exp, t.coef * inv});
    }
    return r;
}

namespace {

template <class Op>
std::vector<EpsPoly::Term> merge(const std::vector<EpsPoly::Term>& a, const std::vector<EpsPoly::Term>& b, Op op) {
    std::vector<EpsPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exp < a[i].exp) {
            out.push_back({b[j].exp, op(Rational(0), b[j].coef)});
            ++j;
        } else {
            Rational c = op(a[i].coef, b[j].coef);
            if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x + y; });
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x - y; });
    return *this;
}

EpsPoly& EpsPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

EpsPoly operator-(EpsPoly a) {
    for (auto& t : a.terms_) t.coef = -t.coef;
    return a;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    EpsAccumulator acc;
    acc.add_product(a, b);
    return acc.take();
}

std::string EpsPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        detail::write_monomial(os, it->coef, {{"eps", it->exp}}, first);
        first = false;
    }
    return os.str();
}

void EpsAccumulator::reserve_degree(int deg) {
    if (static_cast<int>(coef_.size()) <= deg) coef_.resize(deg + 1);
}

void EpsAccumulator::add_product(const EpsPoly& a, const EpsPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    reserve_degree(a.degree() + b.degree());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) coef_[ta.exp + tb.exp].add_product(ta.coef, tb.coef);
}

void EpsAccumulator::add_scaled(const EpsPoly& a, const Rational& c) {
    if (a.is_zero() || c.is_zero()) return;
    reserve_degree(a.degree());
    for (const auto& t : a.terms_) coef_[t.exp].add_product(t.coef, c);
}

void EpsAccumulator::add(const EpsPoly& a) {
    if (a.is_zero()) return;
    reserve_degree(a.degree());
    for (const auto& t : a.terms_) coef_[t.exp] += t.coef;
}

EpsPoly EpsAccumulator::take() {
    EpsPoly p;
    for (std::size_t e = 0; e < coef_.size(); ++e)
        if (!coef_[e].is_zero()) p.terms_.push_back({static_cast<int>(e), std::move(coef_[e])});
    coef_.clear();
    return p;
}

}  // namespace commop
