#include "commop/rational.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace commop {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw std::invalid_argument("not a rational literal: " + std::string(text));
    Rational r{mpz_class(std::string(num)), mpz_class(std::string(den))};
    return negative ? -r : r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(unsigned k) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

const Rational& binomial(int n, int k) {
    static std::mutex mutex;
    // deque: push_back never invalidates references to existing rows
    static std::deque<std::vector<Rational>> rows{{Rational(1)}};
    if (n < 0 || k < 0 || k > n) throw std::out_of_range("binomial: need 0 <= k <= n");
    std::lock_guard lock(mutex);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Rational> next(prev.size() + 1, Rational(1));
        for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return rows[n][k];
}

}  // namespace commop
