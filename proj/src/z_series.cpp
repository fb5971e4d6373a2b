#include "commop/z_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace commop {

namespace {

// Precision arithmetic saturating at kExact.
int add_prec(int p, int shift) {
    if (p == ZSeries::kExact) return p;
    return p + shift;
}

}  // namespace

ZSeries::ZSeries(const XLaurent& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

ZSeries ZSeries::monomial(const XLaurent& c, int zexp) {
    ZSeries s;
    s.lowest_ = zexp;
    if (!c.is_zero()) s.coeffs_.push_back(c);
    s.normalize();
    return s;
}

ZSeries ZSeries::from_coefficients(int lowest, std::vector<XLaurent> coeffs, int precision) {
    ZSeries s;
    s.lowest_ = lowest;
    s.coeffs_ = std::move(coeffs);
    s.precision_ = precision;
    s.normalize();
    return s;
}

ZSeries ZSeries::big_o(int precision) {
    ZSeries s;
    s.lowest_ = precision;
    s.precision_ = precision;
    return s;
}

void ZSeries::normalize() {
    if (precision_ != kExact) {
        const long keep = static_cast<long>(precision_) - lowest_;
        if (keep <= 0)
            coeffs_.clear();
        else if (static_cast<long>(coeffs_.size()) > keep)
            coeffs_.resize(keep);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        lowest_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) lowest_ = precision_ == kExact ? 0 : precision_;
}

int ZSeries::valuation() const { return coeffs_.empty() ? precision_ : lowest_; }

int ZSeries::order() const {
    if (precision_ == kExact) return kExact;
    return precision_ - lowest_ - 1;
}

XLaurent ZSeries::coefficient(int e) const {
    if (e >= precision_)
        throw std::out_of_range("ZSeries: coefficient of z^" + std::to_string(e) + " is beyond O(z^" +
                                std::to_string(precision_) + ")");
    if (coeffs_.empty() || e < lowest_ || e >= lowest_ + static_cast<int>(coeffs_.size())) return {};
    return coeffs_[e - lowest_];
}

ZSeries ZSeries::truncate(int precision) const {
    ZSeries s = *this;
    s.precision_ = std::min(precision_, precision);
    s.normalize();
    return s;
}

ZSeries ZSeries::derive() const {
    ZSeries s;
    s.lowest_ = lowest_;
    s.precision_ = precision_;
    s.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) s.coeffs_.push_back(c.derive());
    s.normalize();
    return s;
}

ZSeries ZSeries::substitute_eps(const Rational& eps) const {
    ZSeries s;
    s.lowest_ = lowest_;
    s.precision_ = precision_;
    for (const auto& c : coeffs_) s.coeffs_.push_back(c.substitute_eps(eps));
    s.normalize();
    return s;
}

ZSeries ZSeries::inverse(int order) const {
    if (coeffs_.empty()) throw std::domain_error("ZSeries: inverse of a series with no known nonzero term");
    const XLaurent& lead = coeffs_.front();
    if (!lead.is_unit())
        throw std::domain_error("ZSeries: leading coefficient " + lead.str() + " of z^" + std::to_string(lowest_) +
                                " is not invertible");
    const int v = lowest_;
    const int rel = precision_ == kExact ? order + 1 : std::min(precision_ - v, order + 1);
    std::vector<XLaurent> b;
    b.reserve(rel);
    b.push_back(XLaurent(1).divide_by_unit(lead));
    for (int n = 1; n < rel; ++n) {
        XLaurentAccumulator acc;
        for (int k = 1; k <= n && k < static_cast<int>(coeffs_.size()); ++k) acc.add_product(coeffs_[k], b[n - k]);
        b.push_back((-acc.take()).divide_by_unit(lead));
    }
    return from_coefficients(-v, std::move(b), -v + rel);
}

ZSeries ZSeries::sqrt(int order) const {
    if (coeffs_.empty() || lowest_ != 0 || coeffs_.front() != XLaurent(1))
        throw std::domain_error("ZSeries: sqrt needs constant term 1 (no Puiseux support)");
    const int rel = precision_ == kExact ? order + 1 : std::min(precision_, order + 1);
    std::vector<XLaurent> r;
    r.reserve(rel);
    r.push_back(XLaurent(1));
    const Rational half(1, 2);
    for (int n = 1; n < rel; ++n) {
        XLaurentAccumulator acc;
        if (n < static_cast<int>(coeffs_.size())) acc.add(coeffs_[n]);
        for (int k = 1; k < n; ++k) acc.add_product(r[k], r[n - k], Rational(-1));
        r.push_back(acc.take() * half);
    }
    return from_coefficients(0, std::move(r), rel);
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
    if (o.coeffs_.empty() && o.precision_ == kExact) return *this;
    const int prec = std::min(precision_, o.precision_);
    if (o.coeffs_.empty()) {
        precision_ = prec;
        normalize();
        return *this;
    }
    if (coeffs_.empty()) {
        *this = o;
        precision_ = prec;
        normalize();
        return *this;
    }
    const int lo = std::min(lowest_, o.lowest_);
    const int hi = std::max(lowest_ + static_cast<int>(coeffs_.size()), o.lowest_ + static_cast<int>(o.coeffs_.size()));
    std::vector<XLaurent> out(hi - lo);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[lowest_ - lo + i] = std::move(coeffs_[i]);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.lowest_ - lo + i] += o.coeffs_[i];
    coeffs_ = std::move(out);
    lowest_ = lo;
    precision_ = prec;
    normalize();
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) { return *this += -o; }

ZSeries& ZSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        normalize();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

ZSeries operator-(ZSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    const bool a_zero_exact = a.coeffs_.empty() && a.is_exact();
    const bool b_zero_exact = b.coeffs_.empty() && b.is_exact();
    if (a_zero_exact || b_zero_exact) return {};
    const int va = a.valuation();
    const int vb = b.valuation();
    const int prec = std::min(add_prec(a.precision_, vb), add_prec(b.precision_, va));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return ZSeries::big_o(prec);
    const int lo = va + vb;
    const long full_len = static_cast<long>(a.coeffs_.size()) + static_cast<long>(b.coeffs_.size()) - 1;
    const long len = prec == ZSeries::kExact ? full_len : std::min<long>(full_len, static_cast<long>(prec) - lo);
    std::vector<XLaurent> out;
    out.reserve(std::max<long>(len, 0));
    for (long n = 0; n < len; ++n) {
        XLaurentAccumulator acc;
        const long i_lo = std::max<long>(0, n - static_cast<long>(b.coeffs_.size()) + 1);
        const long i_hi = std::min<long>(n, static_cast<long>(a.coeffs_.size()) - 1);
        for (long i = i_lo; i <= i_hi; ++i) acc.add_product(a.coeffs_[i], b.coeffs_[n - i]);
        out.push_back(acc.take());
    }
    return ZSeries::from_coefficients(lo, std::move(out), prec);
}

ZSeries operator/(const ZSeries& a, const ZSeries& b) {
    // Enough terms of 1/b to cover a's window.
    int order = kDefaultSeriesOrder;
    if (!a.is_exact() && !a.coeffs_.empty()) order = std::max(order, a.precision_ - a.valuation());
    if (!b.is_exact()) order = std::max(order, b.precision_ - b.valuation());
    return a * b.inverse(order);
}

std::string ZSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const int e = lowest_ + static_cast<int>(i);
        os << "(" << coeffs_[i].str() << ")";
        if (e != 0) os << "*z^" << e;
    }
    if (precision_ != kExact) os << (first ? "" : " + ") << "O(z^" << precision_ << ")";
    if (first && precision_ == kExact) os << "0";
    return os.str();
}

}  // namespace commop
