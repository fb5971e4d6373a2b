#pragma once

#include "commop/rational.hpp"
#include "commop/x_laurent.hpp"
#include "commop/z_series.hpp"

#include <algorithm>
#include <concepts>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace commop {

/// What DiffOp needs from its coefficients: a commutative ring with a
/// derivation d/dx and a test for zero.
template <class C>
concept DifferentialRing = requires(C a, const C& b, const Rational& r) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a * r } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { derive(b) } -> std::convertible_to<C>;
    { b.is_zero() } -> std::convertible_to<bool>;
    C(1);
};

/// Accumulates sum of scale * a * b. Specialized where a faster path exists.
template <class C>
class CoeffAccumulator {
public:
    void add_product(const C& a, const C& b, const Rational& scale) {
        if (scale.is_one())
            sum_ = sum_ + a * b;
        else
            sum_ = sum_ + (a * b) * scale;
    }
    C take() { return std::exchange(sum_, C()); }

private:
    C sum_{};
};

template <>
class CoeffAccumulator<XLaurent> {
public:
    void add_product(const XLaurent& a, const XLaurent& b, const Rational& scale) { acc_.add_product(a, b, scale); }
    XLaurent take() { return acc_.take(); }

private:
    XLaurentAccumulator acc_;
};

/// Ordinary differential operator sum_k c_k D^k, D = d/dx, over a
/// differential coefficient ring. Trailing zero coefficients are trimmed; the
/// zero operator has no coefficients and order kZeroOrder.
template <DifferentialRing C>
class DiffOp {
public:
    static constexpr int kZeroOrder = std::numeric_limits<int>::min() / 4;

    DiffOp() = default;
    explicit DiffOp(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    /// c * D^0
    static DiffOp scalar(const C& c) { return DiffOp(std::vector<C>{c}); }
    static DiffOp identity() { return scalar(C(1)); }
    /// D^k
    static DiffOp d(int k = 1) {
        std::vector<C> c(k + 1);
        c[k] = C(1);
        return DiffOp(std::move(c));
    }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] int order() const { return coeffs_.empty() ? kZeroOrder : static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<C>& coefficients() const { return coeffs_; }
    [[nodiscard]] C coefficient(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : C();
    }
    [[nodiscard]] const C& leading() const {
        if (coeffs_.empty()) throw std::domain_error("DiffOp: zero operator has no leading coefficient");
        return coeffs_.back();
    }

    template <class F>
    [[nodiscard]] auto map_coefficients(F f) const {
        using R = std::decay_t<decltype(f(std::declval<const C&>()))>;
        std::vector<R> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return DiffOp<R>(std::move(out));
    }

    DiffOp& operator+=(const DiffOp& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        trim();
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        trim();
        return *this;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator-(DiffOp a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    /// Left multiplication by a function: c * A = sum c a_k D^k.
    friend DiffOp operator*(const C& c, const DiffOp& a) {
        std::vector<C> out;
        out.reserve(a.coeffs_.size());
        for (const auto& ak : a.coeffs_) out.push_back(c * ak);
        return DiffOp(std::move(out));
    }
    friend DiffOp operator*(DiffOp a, const Rational& r) {
        for (auto& c : a.coeffs_) c = c * r;
        a.trim();
        return a;
    }

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<C> coeffs_;
};

using XOp = DiffOp<XLaurent>;
using SeriesOp = DiffOp<ZSeries>;

/// Operator product A o B via the Leibniz rule
/// D^n o b = sum_k C(n,k) b^(k) D^(n-k).
template <DifferentialRing C>
DiffOp<C> compose(const DiffOp<C>& a, const DiffOp<C>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int na = a.order();
    const int nb = b.order();
    // derivs[j][k] = k-th derivative of b_j
    std::vector<std::vector<C>> derivs(nb + 1);
    for (int j = 0; j <= nb; ++j) {
        derivs[j].reserve(na + 1);
        derivs[j].push_back(b.coefficients()[j]);
        for (int k = 1; k <= na; ++k) {
            if (derivs[j].back().is_zero()) break;
            derivs[j].push_back(derive(derivs[j].back()));
        }
    }
    std::vector<CoeffAccumulator<C>> acc(na + nb + 1);
    for (int i = 0; i <= na; ++i) {
        const C& ai = a.coefficients()[i];
        if (ai.is_zero()) continue;
        for (int j = 0; j <= nb; ++j)
            for (int k = 0; k <= i && k < static_cast<int>(derivs[j].size()); ++k) {
                if (derivs[j][k].is_zero()) continue;
                acc[i - k + j].add_product(ai, derivs[j][k], binomial(i, k));
            }
    }
    std::vector<C> out;
    out.reserve(acc.size());
    for (auto& slot : acc) out.push_back(slot.take());
    return DiffOp<C>(std::move(out));
}

template <DifferentialRing C>
DiffOp<C> commutator(const DiffOp<C>& a, const DiffOp<C>& b) {
    return compose(a, b) - compose(b, a);
}

template <DifferentialRing C>
DiffOp<C> op_power(const DiffOp<C>& a, int k) {
    if (k < 0) throw std::invalid_argument("op_power: negative exponent");
    if (k == 0) return DiffOp<C>::identity();
    DiffOp<C> result = a;
    for (int i = 1; i < k; ++i) result = compose(result, a);
    return result;
}

/// A applied to a function f of x: sum_k c_k f^(k).
template <DifferentialRing C>
C apply(const DiffOp<C>& a, const C& f) {
    C result{};
    C deriv = f;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) deriv = derive(deriv);
        if (deriv.is_zero()) break;
        const C& c = a.coefficients()[k];
        if (!c.is_zero()) result = result + c * deriv;
    }
    return result;
}

template <DifferentialRing C>
struct Reduction {
    DiffOp<C> quotient;
    DiffOp<C> remainder;
    /// Remainder coefficients c_0..c_{m-1}, untrimmed (m = order of divisor).
    std::vector<C> remainder_coeffs;
};

/// Right division A = Q o T + R with ord R < ord T. T must be monic.
template <DifferentialRing C>
Reduction<C> right_reduce(const DiffOp<C>& a, const DiffOp<C>& t) {
    if (t.is_zero() || !(t.leading() == C(1))) throw std::invalid_argument("right_reduce: divisor is not monic");
    const int m = t.order();
    std::vector<C> r = a.coefficients();
    if (static_cast<int>(r.size()) < m) r.resize(m);
    std::vector<C> q(std::max(0, a.order() - m + 1));
    // shifted[j] = D^j o T
    std::vector<DiffOp<C>> shifted{t};
    for (int k = static_cast<int>(r.size()) - 1; k >= m; --k) {
        if (r[k].is_zero()) continue;
        const int j = k - m;
        while (static_cast<int>(shifted.size()) <= j) shifted.push_back(compose(DiffOp<C>::d(1), shifted.back()));
        const C c = r[k];
        q[j] = c;
        const auto& s = shifted[j].coefficients();
        for (int i = 0; i <= k; ++i)
            if (!s[i].is_zero()) r[i] = r[i] - c * s[i];
    }
    Reduction<C> out;
    out.remainder_coeffs.assign(r.begin(), r.begin() + m);
    out.remainder = DiffOp<C>(out.remainder_coeffs);
    out.quotient = DiffOp<C>(std::move(q));
    return out;
}

/// Coefficient-wise eps -> value.
XOp substitute_eps(const XOp& a, const Rational& eps);
/// Embeds an operator over XLaurent into one over exact ZSeries.
SeriesOp to_series_op(const XOp& a);

}  // namespace commop
