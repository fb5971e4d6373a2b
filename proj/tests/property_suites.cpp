#include "property_suites.hpp"

#include "commop/diffop.hpp"
#include "commop/eps_poly.hpp"
#include "commop/opexpr.hpp"
#include "commop/rational.hpp"
#include "commop/x_laurent.hpp"
#include "commop/xz_fraction.hpp"
#include "commop/z_series.hpp"

#include <exception>
#include <random>

namespace commop::props {
namespace {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        int num = uniform(-9, 9);
        if (num == 0) num = 1;
        return {num, uniform(1, 4)};
    }
    EpsPoly eps_poly(int max_terms = 3) {
        std::vector<EpsPoly::Term> t;
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i) t.push_back({uniform(0, 4), rational()});
        return EpsPoly::from_terms(std::move(t));
    }
    XLaurent laurent(int max_terms = 3, int xlo = -3, int xhi = 3) {
        XLaurent out;
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i) out += XLaurent::monomial(rational(), 2 * uniform(0, 2), uniform(xlo, xhi));
        return out;
    }
    XOp op(int max_order = 3) {
        std::vector<XLaurent> c(uniform(0, max_order) + 1);
        for (auto& k : c) k = laurent();
        return XOp(std::move(c));
    }
    XOp monic(int lo, int hi) {
        const int m = uniform(lo, hi);
        std::vector<XLaurent> c(m + 1);
        for (int k = 0; k < m; ++k) c[k] = laurent(2);
        c[m] = XLaurent(1);
        return XOp(std::move(c));
    }
    /// 1 + z * (random polynomial in z of degree < terms).
    ZSeries unit_series(int terms) {
        std::vector<XLaurent> c(terms + 1);
        c[0] = XLaurent(1);
        for (int k = 1; k <= terms; ++k) c[k] = laurent(2, -2, 2);
        return ZSeries::from_coefficients(0, std::move(c));
    }
    XZPoly xz_poly(int zlo, int zhi) {
        XZPoly out;
        const int n = uniform(1, 3);
        for (int i = 0; i < n; ++i)
            out += XZPoly::monomial(rational(), 2 * uniform(0, 1), uniform(0, 3), uniform(zlo, zhi));
        return out;
    }

private:
    std::mt19937_64 rng_;
};

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    void record(bool ok, int index, const std::string& what) {
        ++r_.cases;
        if (ok) return;
        if (r_.failures++ == 0) r_.first_failure = "case " + std::to_string(index) + ": " + what;
    }
    template <class F>
    void run(int cases, F body) {
        for (int i = 0; i < cases; ++i) {
            std::string what;
            bool ok = false;
            try {
                ok = body(what);
            } catch (const std::exception& e) {
                what += std::string(" threw: ") + e.what();
            }
            record(ok, i, what);
        }
    }
    SuiteResult result() const { return r_; }

private:
    SuiteResult r_;
};

template <class T>
bool ring_laws(const T& a, const T& b, const T& c) {
    const T zero{};
    const T one(1);
    return (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
           a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a - a == zero && (a * zero) == zero;
}

}  // namespace

SuiteResult ring_axioms(std::uint64_t seed, int cases) {
    Gen g(seed);
    Tally t("ring axioms");
    t.run(cases, [&](std::string& what) {
        const Rational r1 = g.rational(), r2 = g.rational(), r3 = g.rational();
        const EpsPoly e1 = g.eps_poly(), e2 = g.eps_poly(), e3 = g.eps_poly();
        const XLaurent l1 = g.laurent(), l2 = g.laurent(), l3 = g.laurent();
        const XOp a = g.op(), b = g.op(), c = g.op();
        const Rational s = g.rational();
        const bool rat = ring_laws(r1, r2, r3);
        const bool eps = ring_laws(e1, e2, e3);
        const bool lau = ring_laws(l1, l2, l3);
        const bool ops = (a + b) + c == a + (b + c) && a + b == b + a && (a - a).is_zero() &&
                         (a + b) * s == a * s + b * s && l1 * (a + b) == l1 * a + l1 * b &&
                         compose(XOp::identity(), a) == a && compose(a, XOp::identity()) == a;
        const bool deriv = (l1 * l2).derive() == l1.derive() * l2 + l1 * l2.derive() &&
                           (l1 + l2).derive() == l1.derive() + l2.derive();
        what = "L1 = " + l1.str() + ", L2 = " + l2.str() + ", A = " + print_op(a);
        return rat && eps && lau && ops && deriv;
    });
    return t.result();
}

SuiteResult leibniz_assoc_jacobi(std::uint64_t seed, int cases) {
    Gen g(seed + 1);
    Tally t("Leibniz / associativity / Jacobi");
    t.run(cases, [&](std::string& what) {
        const XLaurent f = g.laurent();
        const XOp a = g.op(), b = g.op(), c = g.op();
        what = "A = " + print_op(a) + ", B = " + print_op(b) + ", C = " + print_op(c) + ", f = " + f.str();
        const XOp fd = compose(XOp::d(1), XOp::scalar(f));
        const bool leibniz = fd == f * XOp::d(1) + XOp::scalar(f.derive());
        const bool action = apply(compose(a, b), f) == apply(a, apply(b, f));
        const bool assoc = compose(compose(a, b), c) == compose(a, compose(b, c));
        const XOp jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
        const bool anti = commutator(a, b) == -commutator(b, a);
        return leibniz && action && assoc && jac.is_zero() && anti;
    });
    return t.result();
}

SuiteResult reduction_round_trip(std::uint64_t seed, int cases) {
    Gen g(seed + 2);
    Tally t("reduction round trip");
    t.run(cases, [&](std::string& what) {
        const XOp a = g.op(6);
        const XOp tt = g.monic(1, 3);
        what = "A = " + print_op(a) + ", T = " + print_op(tt);
        const auto red = right_reduce(a, tt);
        const bool shape = red.remainder.is_zero() || red.remainder.order() < tt.order();
        const bool width = static_cast<int>(red.remainder_coeffs.size()) == tt.order();
        return shape && width && compose(red.quotient, tt) + red.remainder == a;
    });
    return t.result();
}

SuiteResult parser_round_trip(std::uint64_t seed, int cases) {
    Gen g(seed + 3);
    Tally t("parser round trip");
    t.run(cases, [&](std::string& what) {
        const XOp a = g.op(4);
        const std::string text = print_op(a);
        what = "A = " + text;
        const XOp back = parse_op(text);
        const bool text_ok = back == a && print_op(back) == text;
        const bool json_ok = parse_op_json(print_op(a, OpFormat::Json)) == a;
        return text_ok && json_ok;
    });
    return t.result();
}

SuiteResult series_round_trip(std::uint64_t seed, int cases) {
    Gen g(seed + 4);
    Tally t("sqrt and fraction round trip");
    constexpr int kOrder = 6;
    t.run(cases, [&](std::string& what) {
        const ZSeries s = g.unit_series(g.uniform(1, 3));
        what = "s = " + s.str();
        const ZSeries r = (s * s).sqrt(kOrder);
        bool ok = true;
        for (int k = 0; k < kOrder; ++k) ok = ok && r.coefficient(k) == s.coefficient(k);

        const XZPoly p = g.xz_poly(0, 3);
        const XZPoly q = XZPoly(1) + XZPoly::z() * g.xz_poly(0, 2);
        what += "; p = " + p.str() + ", q = " + q.str();
        const ZSeries f = fraction_to_series(XZFraction(p, q), kOrder);
        const ZSeries back = f * q.to_series();
        const ZSeries ps = p.to_series();
        for (int k = 0; k < kOrder; ++k) ok = ok && back.coefficient(k) == ps.coefficient(k);
        return ok;
    });
    return t.result();
}

std::vector<SuiteResult> run_all(std::uint64_t seed, int cases) {
    return {ring_axioms(seed, cases), leibniz_assoc_jacobi(seed, cases), reduction_round_trip(seed, cases),
            parser_round_trip(seed, cases), series_round_trip(seed, cases)};
}

}  // namespace commop::props
