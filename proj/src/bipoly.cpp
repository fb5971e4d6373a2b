#include "commop/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace commop {

BiPoly BiPoly::monomial(const EpsPoly& c, int zexp, int wexp) {
    BiPoly p;
    p.add_term(c, zexp, wexp);
    return p;
}

void BiPoly::add_term(const EpsPoly& c, int zexp, int wexp) {
    if (zexp < 0 || wexp < 0) throw std::domain_error("BiPoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({zexp, wexp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EpsPoly BiPoly::coefficient(int zexp, int wexp) const {
    auto it = terms_.find({zexp, wexp});
    return it == terms_.end() ? EpsPoly() : it->second;
}

BiPoly BiPoly::substitute_eps(const Rational& eps) const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.add_term(EpsPoly(c.evaluate(eps)), k.first, k.second);
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(c, k.first, k.second);
    return r;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly r;
    for (const auto& [k, c] : a.terms_) r.add_term(-c, k.first, k.second);
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, EpsPoly>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        const auto& [za, wa] = x.first;
        const auto& [zb, wb] = y.first;
        return wa != wb ? wa > wb : za > zb;
    });
    std::ostringstream os;
    bool first = true;
    for (auto [key, c] : ordered) {
        const auto [z, w] = key;
        const bool negative = c.terms().back().coef.sign() < 0;
        if (negative) c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::string mono;
        auto append = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        append("w", w);
        append("z", z);
        if (mono.empty()) {
            os << (c.size() > 1 ? "(" + c.str() + ")" : c.str());
        } else if (c.is_constant() && c.coefficient(0).is_one()) {
            os << mono;
        } else if (c.is_constant() && c.coefficient(0).is_integer()) {
            os << c.str() << "*" << mono;
        } else {
            os << "(" << c.str() << ")*" << mono;
        }
    }
    return os.str();
}

PowerTable::PowerTable(XOp a, XOp b) : pa_{XOp::identity(), std::move(a)}, pb_{XOp::identity(), std::move(b)} {}

const XOp& PowerTable::power_a(int k) {
    while (static_cast<int>(pa_.size()) <= k) pa_.push_back(compose(pa_.back(), pa_[1]));
    return pa_[k];
}

const XOp& PowerTable::power_b(int k) {
    while (static_cast<int>(pb_.size()) <= k) pb_.push_back(compose(pb_.back(), pb_[1]));
    return pb_[k];
}

XOp PowerTable::product(int a, int b, MonomialOrder order) {
    if (b == 0) return power_a(a);
    if (a == 0) return power_b(b);
    const int tag = order == MonomialOrder::AThenB ? 0 : 1;
    auto it = products_.find({a, b, tag});
    if (it != products_.end()) return it->second;
    XOp p = tag == 0 ? compose(power_a(a), power_b(b)) : compose(power_b(b), power_a(a));
    return products_.emplace(std::make_tuple(a, b, tag), std::move(p)).first->second;
}

XOp eval_poly_at_pair(const BiPoly& q, PowerTable& table, MonomialOrder order) {
    XOp result;
    for (const auto& [key, c] : q.terms()) {
        const auto [za, wb] = key;
        result += XLaurent(c) * table.product(za, wb, order);
    }
    return result;
}

XOp eval_poly_at_pair(const BiPoly& q, const XOp& a, const XOp& b, MonomialOrder order) {
    const XOp w = commutator(a, b);
    if (!w.is_zero()) {
        for (int k = 0; k <= w.order(); ++k)
            if (!w.coefficients()[k].is_zero()) throw NonCommutingError(k, w.coefficients()[k].str());
    }
    PowerTable table(a, b);
    return eval_poly_at_pair(q, table, order);
}

}  // namespace commop
