#include "commop/opexpr.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace commop {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      msg_(msg),
      line_(line),
      column_(column) {}

namespace {

constexpr int kMaxExponent = 256;

enum class Tok { Number, X, Eps, D, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Number: return "number '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l0 = line;
        const int c0 = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l0, c0});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            const std::string word(s.substr(i, j - i));
            if (word == "x")
                out.push_back({Tok::X, word, l0, c0});
            else if (word == "eps")
                out.push_back({Tok::Eps, word, l0, c0});
            else if (word == "D")
                out.push_back({Tok::D, word, l0, c0});
            else
                throw ParseError("unknown symbol '" + word + "' (expected x, eps or D)", l0, c0);
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
        }
        out.push_back({k, std::string(1, c), l0, c0});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    XOp parse() {
        if (peek().kind == Tok::End) fail("empty operator expression");
        XOp v = expr();
        if (peek().kind != Tok::End) {
            if (starts_primary(peek().kind)) fail("implicit multiplication is not allowed; write '*'");
            fail("unexpected " + describe(peek()));
        }
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

    static bool starts_primary(Tok k) {
        return k == Tok::Number || k == Tok::X || k == Tok::Eps || k == Tok::D || k == Tok::LParen;
    }

    XOp expr() {
        XOp v = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = take().kind == Tok::Minus;
            XOp r = term();
            v = minus ? v - r : v + r;
        }
        return v;
    }

    XOp term() {
        XOp v = unary();
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                v = compose(v, unary());
            } else if (peek().kind == Tok::Slash) {
                take();
                const Token next = peek();
                XOp d = unary();
                v = divide(v, d, next);
            } else {
                if (starts_primary(peek().kind)) fail("implicit multiplication is not allowed; write '*'");
                return v;
            }
        }
    }

    static XOp divide(const XOp& num, const XOp& den, const Token& where) {
        if (den.is_zero()) fail_at(where, "division by zero");
        if (den.order() != 0 || !den.coefficient(0).is_unit() || den.coefficient(0).terms()[0].coef.low_degree() != 0)
            fail_at(where, "division is only allowed by x-monomials and rational constants");
        const XLaurent& u = den.coefficient(0);
        std::vector<XLaurent> c;
        for (const auto& a : num.coefficients()) c.push_back(a.divide_by_unit(u));
        return XOp(std::move(c));
    }

    XOp unary() {
        if (peek().kind == Tok::Minus) {
            take();
            return -unary();
        }
        if (peek().kind == Tok::Plus) {
            take();
            return unary();
        }
        return power();
    }

    XOp power() {
        const Token start = peek();
        XOp base = primary();
        if (peek().kind != Tok::Caret) return base;
        take();
        const Token& e = peek();
        if (e.kind == Tok::Minus) fail("negative exponents are not allowed; divide instead");
        if (e.kind != Tok::Number) fail("expected an integer exponent after '^', got " + describe(e));
        take();
        if (e.text.size() > 4 || std::stoi(e.text) > kMaxExponent)
            fail_at(e, "exponent exceeds " + std::to_string(kMaxExponent));
        const int k = std::stoi(e.text);
        if (peek().kind == Tok::Caret) fail("chained '^' is ambiguous; use parentheses");
        if (start.kind == Tok::D) return XOp::d(k);
        if (base.order() == 0) {
            XLaurent c(1);
            for (int i = 0; i < k; ++i) c = c * base.coefficient(0);
            return XOp::scalar(c);
        }
        return op_power(base, k);
    }

    XOp primary() {
        const Token& t = take();
        switch (t.kind) {
            case Tok::Number: return XOp::scalar(XLaurent(Rational(mpz_class(t.text), mpz_class(1))));
            case Tok::X: return XOp::scalar(XLaurent::x());
            case Tok::Eps: return XOp::scalar(XLaurent::monomial(Rational(1), 1, 0));
            case Tok::D: return XOp::d(1);
            case Tok::LParen: {
                XOp v = expr();
                if (peek().kind != Tok::RParen) fail("expected ')', got " + describe(peek()));
                take();
                return v;
            }
            default: fail_at(t, "expected a number, x, eps, D or '(', got " + describe(t));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool is_single_monomial(const XLaurent& c) { return c.is_unit(); }

/// Sign-extracted single monomial: returns the text of |c| and whether c < 0.
std::pair<std::string, bool> monomial_abs(const XLaurent& c) {
    const auto& t = c.terms()[0];
    const auto& e = t.coef.terms()[0];
    const bool negative = e.coef.sign() < 0;
    const XLaurent a = XLaurent::monomial(e.coef.abs(), e.exp, t.exp);
    return {a.str(), negative};
}

std::string d_power(int k, bool tex) {
    if (k == 1) return "D";
    return tex ? "D^{" + std::to_string(k) + "}" : "D^" + std::to_string(k);
}

std::string print_text(const XOp& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = a.order(); k >= 0; --k) {
        const XLaurent& c = a.coefficients()[k];
        if (c.is_zero()) continue;
        if (k == 0) {
            // Constant coefficient as a bare sum; its own signs join the chain.
            std::string s = c.str();
            if (!first) {
                if (s[0] == '-')
                    os << " - " << s.substr(1);
                else
                    os << " + " << s;
            } else {
                os << s;
            }
            first = false;
            continue;
        }
        bool negative = false;
        std::string body;
        if (c == XLaurent(1)) {
            body = d_power(k, false);
        } else if (c == XLaurent(-1)) {
            negative = true;
            body = d_power(k, false);
        } else if (is_single_monomial(c)) {
            auto [m, neg] = monomial_abs(c);
            negative = neg;
            body = "(" + m + ")*" + d_power(k, false);
        } else {
            body = "(" + c.str() + ")*" + d_power(k, false);
        }
        if (first)
            os << (negative ? "-" : "") << body;
        else
            os << (negative ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

std::string print_tex(const XOp& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = a.order(); k >= 0; --k) {
        const XLaurent& c = a.coefficients()[k];
        if (c.is_zero()) continue;
        std::string body;
        bool negative = false;
        if (k == 0) {
            body = c.tex();
            if (body[0] == '-') {
                negative = true;
                body = body.substr(1);
            }
        } else if (c == XLaurent(1) || c == XLaurent(-1)) {
            negative = c == XLaurent(-1);
            body = d_power(k, true);
        } else if (is_single_monomial(c)) {
            body = c.tex();
            if (body[0] == '-') {
                negative = true;
                body = body.substr(1);
            }
            body += " " + d_power(k, true);
        } else {
            body = "\\left(" + c.tex() + "\\right) " + d_power(k, true);
        }
        if (first)
            os << (negative ? "-" : "") << body;
        else
            os << (negative ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

std::string print_json(const XOp& a) {
    nlohmann::ordered_json j;
    j["order"] = a.is_zero() ? -1 : a.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (int k = a.is_zero() ? -1 : a.order(); k >= 0; --k) {
        const XLaurent& c = a.coefficients()[k];
        if (c.is_zero()) continue;
        auto terms = nlohmann::ordered_json::array();
        for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
            for (auto e = it->coef.terms().rbegin(); e != it->coef.terms().rend(); ++e)
                terms.push_back({{"coef", e->coef.str()}, {"eps", e->exp}, {"x", it->exp}});
        coeffs.push_back({{"d", k}, {"terms", std::move(terms)}});
    }
    j["coefficients"] = std::move(coeffs);
    return j.dump(2);
}

}  // namespace

XOp parse_op(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string print_op(const XOp& a, OpFormat format) {
    switch (format) {
        case OpFormat::Text: return print_text(a);
        case OpFormat::Tex: return print_tex(a);
        case OpFormat::Json: return print_json(a);
    }
    return {};
}

XOp parse_op_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("operator JSON: ") + e.what());
    }
    try {
        const int order = j.at("order").get<int>();
        std::vector<XLaurent> c(order >= 0 ? order + 1 : 0);
        for (const auto& entry : j.at("coefficients")) {
            const int d = entry.at("d").get<int>();
            if (d < 0 || d > order) throw std::invalid_argument("operator JSON: D-power out of range");
            for (const auto& t : entry.at("terms"))
                c[d] += XLaurent::monomial(Rational::parse(t.at("coef").get<std::string>()), t.at("eps").get<int>(),
                                           t.at("x").get<int>());
        }
        XOp op(std::move(c));
        if (op.order() != order && !(op.is_zero() && order == -1))
            throw std::invalid_argument("operator JSON: declared order does not match coefficients");
        return op;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("operator JSON: ") + e.what());
    }
}

OpFormat parse_format(std::string_view name) {
    if (name == "text") return OpFormat::Text;
    if (name == "json") return OpFormat::Json;
    if (name == "tex") return OpFormat::Tex;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or tex)");
}

}  // namespace commop
