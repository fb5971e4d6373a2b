#pragma once

#include "commop/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace commop::detail {

using VarPower = std::pair<std::string, int>;

/// Writes one signed monomial of a sum in the operator text grammar, e.g.
/// " - 55*eps^2/(243*x^3)". Variables with negative exponents go to the
/// denominator. `first` suppresses the leading " + ".
inline void write_monomial(std::ostream& os, const Rational& c, const std::vector<VarPower>& vars, bool first) {
    const bool negative = c.sign() < 0;
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");

    std::vector<std::string> num, den;
    const mpz_class n = abs(c.numerator());
    const mpz_class d = c.denominator();
    bool any_positive = false;
    for (const auto& [name, e] : vars)
        if (e > 0) any_positive = true;
    if (n != 1 || !any_positive) num.push_back(n.get_str());
    for (const auto& [name, e] : vars) {
        if (e == 1) num.push_back(name);
        else if (e > 1) num.push_back(name + "^" + std::to_string(e));
    }
    if (d != 1) den.push_back(d.get_str());
    for (const auto& [name, e] : vars) {
        if (e == -1) den.push_back(name);
        else if (e < -1) den.push_back(name + "^" + std::to_string(-e));
    }
    for (std::size_t i = 0; i < num.size(); ++i) os << (i ? "*" : "") << num[i];
    if (!den.empty()) {
        os << "/";
        if (den.size() > 1) os << "(";
        for (std::size_t i = 0; i < den.size(); ++i) os << (i ? "*" : "") << den[i];
        if (den.size() > 1) os << ")";
    }
}

/// Same monomial in LaTeX, e.g. " - \frac{55 \epsilon^{2}}{243 x^{3}}".
inline void write_monomial_tex(std::ostream& os, const Rational& c, const std::vector<VarPower>& vars, bool first) {
    const bool negative = c.sign() < 0;
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    auto tex_name = [](const std::string& v) { return v == "eps" ? std::string("\\epsilon") : v; };
    std::string num, den;
    const mpz_class n = abs(c.numerator());
    const mpz_class d = c.denominator();
    bool any_positive = false;
    for (const auto& [name, e] : vars)
        if (e > 0) any_positive = true;
    if (n != 1 || !any_positive) num = n.get_str();
    for (const auto& [name, e] : vars) {
        if (e <= 0) continue;
        if (!num.empty()) num += " ";
        num += tex_name(name) + (e == 1 ? "" : "^{" + std::to_string(e) + "}");
    }
    if (d != 1) den = d.get_str();
    for (const auto& [name, e] : vars) {
        if (e >= 0) continue;
        if (!den.empty()) den += " ";
        den += tex_name(name) + (e == -1 ? "" : "^{" + std::to_string(-e) + "}");
    }
    if (den.empty())
        os << num;
    else
        os << "\\frac{" << (num.empty() ? "1" : num) << "}{" << den << "}";
}

}  // namespace commop::detail
