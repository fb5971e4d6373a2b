#include "commop/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace commop {

namespace {

using Terms = std::vector<std::pair<int, mpz_class>>;

void remove_content(Terms& t) {
    if (t.empty()) return;
    mpz_class g = abs(t.front().second);
    for (std::size_t i = 1; i < t.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t[i].second.get_mpz_t());
    // Leading coefficient positive, so identical equations give identical rows.
    if (sgn(t.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : t) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// a*r - b*p, merging two sorted rows.
Terms combine(const mpz_class& a, const Terms& r, const mpz_class& b, const Terms& p) {
    Terms out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    mpz_class v;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            v = a * r[i].second - b * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

void SparseLinearSystem::add_equation(const std::vector<Entry>& entries, const Rational& rhs) {
    ++equations_;
    std::map<int, Rational> merged;
    for (const auto& [col, c] : entries) {
        if (col < 0 || col >= n_) throw std::out_of_range("SparseLinearSystem: column out of range");
        if (!c.is_zero()) merged[col] += c;
    }
    if (!rhs.is_zero()) merged[n_] = rhs;
    mpz_class lcm = 1;
    for (const auto& [col, c] : merged)
        if (!c.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    Row row;
    for (const auto& [col, c] : merged) {
        if (c.is_zero()) continue;
        mpz_class v = lcm / c.raw().get_den() * c.raw().get_num();
        row.terms.emplace_back(col, std::move(v));
    }
    reduce_and_insert(std::move(row));
}

void SparseLinearSystem::reduce_and_insert(Row row) {
    remove_content(row.terms);
    while (!row.terms.empty()) {
        const int lead = row.terms.front().first;
        if (lead == n_) {
            consistent_ = false;
            return;
        }
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            pivots_.emplace(lead, std::move(row));
            return;
        }
        const Terms& p = it->second.terms;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.terms.front().second.get_mpz_t());
        const mpz_class a = p.front().second / g;
        const mpz_class b = row.terms.front().second / g;
        row.terms = combine(a, row.terms, b, p);
        remove_content(row.terms);
    }
}

SparseLinearSystem::Solution SparseLinearSystem::solve() const {
    Solution s;
    s.consistent = consistent_;
    if (!consistent_) return s;
    for (int c = 0; c < n_; ++c)
        if (!pivots_.contains(c)) s.free_columns.push_back(c);
    const std::size_t nf = s.free_columns.size();
    // value[c] = const + sum_k coef_k * t_k over free parameters t_k.
    std::vector<std::vector<Rational>> value(n_);
    for (std::size_t k = 0; k < nf; ++k) {
        auto& v = value[s.free_columns[k]];
        v.assign(nf + 1, Rational(0));
        v[k + 1] = Rational(1);
    }
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        const auto& terms = it->second.terms;
        const int lead = it->first;
        std::vector<Rational> acc(nf + 1, Rational(0));
        for (std::size_t i = 1; i < terms.size(); ++i) {
            const auto& [col, coef] = terms[i];
            const Rational c(coef);
            if (col == n_) {
                acc[0] += c;
                continue;
            }
            const auto& vc = value[col];
            for (std::size_t k = 0; k <= nf; ++k)
                if (!vc[k].is_zero()) acc[k].add_product(-c, vc[k]);
        }
        const Rational inv = Rational(terms.front().second).inverse();
        for (auto& a : acc) a *= inv;
        value[lead] = std::move(acc);
    }
    s.particular.resize(n_);
    s.kernel.assign(nf, std::vector<Rational>(n_));
    for (int c = 0; c < n_; ++c) {
        const auto& v = value[c];
        s.particular[c] = v[0];
        for (std::size_t k = 0; k < nf; ++k) s.kernel[k][c] = v[k + 1];
    }
    return s;
}

}  // namespace commop
