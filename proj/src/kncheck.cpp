#include "commop/kncheck.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace commop::kn {

namespace {

std::recursive_mutex& precision_mutex() {
    static std::recursive_mutex m;
    return m;
}

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- BigComplex

BigComplex BigComplex::from_rational(const Rational& q) { return {to_real(q), Real(0)}; }

BigComplex BigComplex::polar(const Real& r, const Real& theta) {
    return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

Real BigComplex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

Real BigComplex::arg() const { return boost::multiprecision::atan2(im, re); }

BigComplex BigComplex::root(int n, int k) const {
    if (n <= 0) throw std::invalid_argument("BigComplex::root: n must be positive");
    const Real r = abs();
    if (r == 0) return {};
    const Real mag = boost::multiprecision::pow(r, Real(1) / n);
    return polar(mag, (arg() + 2 * pi() * k) / n);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    if (d == 0) throw std::domain_error("BigComplex: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// ------------------------------------------------------------ PrecisionScope

PrecisionScope::PrecisionScope(unsigned digits) {
    precision_mutex().lock();
    saved_ = Real::default_precision();
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() {
    Real::default_precision(saved_);
    precision_mutex().unlock();
}

// ----------------------------------------------------------------------- Jet

Jet Jet::constant(const BigComplex& v, std::size_t n) {
    std::vector<BigComplex> c(n);
    if (n > 0) c[0] = v;
    return Jet(std::move(c));
}

Jet Jet::variable(const BigComplex& x0, std::size_t n) {
    std::vector<BigComplex> c(n);
    if (n > 0) c[0] = x0;
    if (n > 1) c[1] = BigComplex(1);
    return Jet(std::move(c));
}

Jet Jet::derive() const {
    if (c_.size() <= 1) throw std::length_error("Jet::derive: no terms left");
    std::vector<BigComplex> d(c_.size() - 1);
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) d[k] = BigComplex(static_cast<int>(k + 1)) * c_[k + 1];
    return Jet(std::move(d));
}

Jet Jet::inverse() const {
    const std::size_t n = c_.size();
    if (n == 0) return {};
    std::vector<BigComplex> r(n);
    const BigComplex inv0 = BigComplex(1) / c_[0];
    r[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        BigComplex acc;
        for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
        r[k] = -(acc * inv0);
    }
    return Jet(std::move(r));
}

Jet Jet::pow(const Rational& e, const BigComplex& value_pow) const {
    // h = f^e satisfies f h' = e f' h; coefficientwise
    // h_k = 1/(k f_0) sum_{j=1..k} ((e+1) j - k) f_j h_{k-j}.
    const std::size_t n = c_.size();
    if (n == 0) return {};
    std::vector<BigComplex> h(n);
    h[0] = value_pow;
    const Real er = to_real(e);
    const BigComplex inv0 = BigComplex(1) / c_[0];
    for (std::size_t k = 1; k < n; ++k) {
        BigComplex acc;
        for (std::size_t j = 1; j <= k; ++j) {
            const Real w = (er + 1) * static_cast<long>(j) - static_cast<long>(k);
            acc += BigComplex(w) * c_[j] * h[k - j];
        }
        h[k] = acc * inv0 * BigComplex(Real(1) / static_cast<long>(k));
    }
    return Jet(std::move(h));
}

Jet Jet::sqrt(const BigComplex& value_sqrt) const { return pow(Rational(1, 2), value_sqrt); }

Jet operator+(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<BigComplex> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a.c_[k] + b.c_[k];
    return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<BigComplex> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a.c_[k] - b.c_[k];
    return Jet(std::move(c));
}

Jet operator-(const Jet& a) {
    std::vector<BigComplex> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = -a.c_[k];
    return Jet(std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<BigComplex> c(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) c[k] += a.c_[j] * b.c_[k - j];
    return Jet(std::move(c));
}

Jet operator*(const BigComplex& s, const Jet& a) {
    std::vector<BigComplex> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = s * a.c_[k];
    return Jet(std::move(c));
}

Jet operator+(const Jet& a, const BigComplex& s) {
    Jet r = a;
    if (!r.c_.empty()) r.c_[0] += s;
    return r;
}

// ------------------------------------------------------------- gamma oracle

std::vector<BigComplex> gamma_eval(const Rational& x, const Rational& eps, int derivatives, unsigned precision) {
    if (derivatives < 0 || derivatives > 4) throw std::invalid_argument("gamma_eval: derivatives must be 0..4");
    if (eps.sign() >= 0) throw std::domain_error("gamma_eval: eps must be negative");
    const Rational uq = x.pow(3) + eps * eps;
    if (uq.sign() <= 0) throw std::domain_error("gamma_eval: x^3 + eps^2 must be positive");
    PrecisionScope scope(precision);
    const Real xr = to_real(x);
    const Real e2 = to_real(eps * eps);
    const Real u = to_real(uq);
    const Real cbrt = boost::multiprecision::cbrt(u);
    // u^(-k/3) for k = 4, 7, 10, 13
    const Real um4 = 1 / (u * cbrt);
    const Real um7 = um4 / u;
    const Real um10 = um7 / u;
    const Real um13 = um10 / u;
    std::vector<BigComplex> out;
    out.emplace_back(xr / cbrt);
    if (derivatives >= 1) out.emplace_back(e2 * um4);
    if (derivatives >= 2) out.emplace_back(-4 * e2 * xr * xr * um7);
    if (derivatives >= 3) out.emplace_back(-8 * e2 * xr * um7 + 28 * e2 * pow(xr, 4) * um10);
    if (derivatives >= 4)
        out.emplace_back(-8 * e2 * um7 + 168 * e2 * pow(xr, 3) * um10 - 280 * e2 * pow(xr, 6) * um13);
    return out;
}

// ------------------------------------------------------------ the KN system

std::string Branches::str() const {
    std::ostringstream os;
    os << "b3=" << b3 << " c1=" << c1 << " s3=" << s3 << " sg=" << (sg > 0 ? "+" : "-");
    return os.str();
}

namespace {

struct Constants {
    BigComplex i = BigComplex::i();
    BigComplex b3, c1, s3;
    BigComplex c3, c4;
    BigComplex eps;
    std::array<BigComplex, 3> a;
};

Constants make_constants(const Rational& eps, const Branches& br) {
    Constants k;
    const Rational c4 = -eps.pow(4) / Rational(3888);
    k.c3 = BigComplex(-2);
    k.c4 = BigComplex::from_rational(c4);
    k.eps = BigComplex::from_rational(eps);
    k.b3 = BigComplex(-27).root(4, br.b3);
    k.c1 = k.c4.root(4, br.c1);
    k.s3 = (BigComplex(3) * k.c4).root(2, br.s3);
    const Real half = Real(1) / 2;
    const BigComplex a(-half, boost::multiprecision::sqrt(Real(3)) / 2);
    k.a = {BigComplex(1), a, a.conj()};
    return k;
}

/// Everything the twelve equations need, as jets about x0.
struct Fields {
    Jet g, g1, g2, g3, g4, sq, g32, h1, h0, h1p, h0p, tau0, tau1;
    std::array<Jet, 3> G, H;
};

Fields make_fields(const Rational& x0, const Rational& eps, const Constants& k, int sg, bool literal_h, int terms) {
    Fields f;
    const std::size_t n = static_cast<std::size_t>(terms);
    const Jet x = Jet::variable(BigComplex::from_rational(x0), n);
    const Jet u = x * x * x + BigComplex::from_rational(eps * eps);
    const Real u0 = u.value().re;
    f.g = x * u.pow(Rational(-1, 3), BigComplex(1 / boost::multiprecision::cbrt(u0)));
    f.g1 = f.g.derive();
    f.g2 = f.g1.derive();
    f.g3 = f.g2.derive();
    f.g4 = f.g3.derive();
    const BigComplex sq0 = BigComplex(Real(sg)) * BigComplex(boost::multiprecision::sqrt(f.g1.value().re));
    f.sq = f.g1.sqrt(sq0);
    f.g32 = f.g1 * f.sq;
    const Jet& g = f.g;
    const Jet& g1 = f.g1;
    const Jet& g2 = f.g2;
    const Jet& g3 = f.g3;
    const Jet& g4 = f.g4;
    const BigComplex& I = k.i;
    f.h1 = (I * k.b3 / k.c1) * g * f.sq;
    f.h0 = (I * k.b3 / (BigComplex(2) * k.c1)) * (g * g2 - BigComplex(4) * g1 * g1) / f.sq;
    f.h1p = f.h1.derive();
    f.h0p = f.h0.derive();
    const Jet& h1 = f.h1;
    const Jet& h0 = f.h0;
    for (int s = 0; s < 3; ++s) {
        const BigComplex as = k.a[s];
        const Jet ag2 = (as * as) * g * g;
        f.G[s] = (f.h1p - h0 - ag2) / (BigComplex(2) * h1) + g1 / (BigComplex(2) * g) - g2 / (BigComplex(2) * g1);
        const Jet u_s = h0 + ag2;
        const Jet first = literal_h ? u_s * f.h1p / (BigComplex(2) * h1) : u_s * f.h1p / (BigComplex(2) * h1 * h1);
        f.H[s] = first + (BigComplex(-2) * f.h0p - (BigComplex(7) * as * as) * g * g1) / (BigComplex(2) * h1) -
                 u_s * u_s / (BigComplex(2) * h1 * h1) - h0 * g1 / (BigComplex(2) * h1 * g) +
                 u_s * g2 / (BigComplex(2) * h1 * g1);
    }
    const Jet g3m1 = g * g * g - BigComplex(1);
    const Jet q = g3m1 * g3m1;
    f.tau1 = (BigComplex(4) * g1 * g1 - BigComplex(9) * g * g2) / (BigComplex(2) * g * g) +
             (BigComplex(4) * g1 * g3 - BigComplex(3) * g2 * g2) / (BigComplex(4) * g1 * g1) +
             I * q / (BigComplex(4) * k.s3 * g * g * g1);
    const BigComplex c13 = k.c1 * k.c1 * k.c1;
    f.tau0 = I * q / (k.s3 * g * g * g) - BigComplex(1) / g - I * q * g2 / (BigComplex(4) * k.s3 * g * g * g1 * g1) -
             (BigComplex(2) * I * k.b3 * c13 / BigComplex(27)) * g * g * g / f.g32 -
             (I * k.b3 / (BigComplex(18) * k.c1)) * q / (g * f.g32) - BigComplex(3) * g3 / g +
             BigComplex(10) * g1 * g2 / (g * g) - BigComplex(4) * g1 * g1 * g1 / (g * g * g) + g4 / g1 -
             BigComplex(5) * g2 * g3 / (BigComplex(2) * g1 * g1) +
             BigComplex(3) * g2 * g2 * g2 / (BigComplex(2) * g1 * g1 * g1) - BigComplex(3) * g2 * g2 / (g * g1);
    return f;
}

struct Alphas {
    Jet a0, a1;
    Jet e0, e1;
};

/// i = s + 1 (sgn = +1) or s + 4 (sgn = -1): w -> -w realizes sigma.
Alphas make_equations(const Fields& f, const Constants& k, int s, int sgn, bool literal_d1) {
    const BigComplex as = k.a[s];
    const Jet z = as * f.g;
    const Jet z2 = z * z;
    const Jet z3 = z2 * z;
    const Jet wz = BigComplex(1) + k.c3 * z3 + k.c4 * z3 * z + z3 * z3;
    const Jet dwz = (BigComplex(3) * k.c3) * z2 + (BigComplex(4) * k.c4) * z3 + BigComplex(6) * z3 * z2;
    const BigComplex w0 = BigComplex(Real(sgn)) * wz.value().root(2, 0);
    const Jet w = wz.sqrt(w0);
    const Jet wp = dwz / (BigComplex(2) * w);
    const Jet& g = f.g;
    const Jet& g1 = f.g1;
    const Jet gg = g * g;
    const Jet ggg = gg * g;
    Alphas r;
    r.a0 = f.H[s] + w * f.h0 / (BigComplex(6) * gg * g1) + (as * as) * w / (BigComplex(6) * g1);
    r.a1 = f.G[s] - w * f.h1 / (BigComplex(6) * gg * g1);
    Jet sum_h = Jet::constant(BigComplex(0), g.size());
    Jet sum_g = Jet::constant(BigComplex(0), g.size());
    for (int m = 1; m <= 2; ++m) {
        const int t = (s + m) % 3;
        sum_h = sum_h + (BigComplex(1) - as * as * k.a[t]) * f.H[t];
        const BigComplex factor = literal_d1 ? BigComplex(1) : k.a[t];
        sum_g = sum_g + (factor / (as - k.a[t])) * f.G[t];
    }
    const Jet d0 = f.tau0 / BigComplex(2) + (as * as) / (BigComplex(2) * g) + g1 * sum_h / (BigComplex(3) * g) +
                   ((f.h0 + BigComplex(2) * z2) * w - (f.h0 + z2) * z * wp) / (BigComplex(6) * ggg);
    const Jet d1 = f.tau1 - sum_g * g1 / g + (z * wp - w) * f.h1 / (BigComplex(6) * ggg);
    const Jet d2 = BigComplex(-2) * g1 / g;
    r.e0 = r.a0 * r.a1 + r.a0 * d2 - r.a0.derive() - d0;
    r.e1 = r.a1 * r.a1 - r.a0 + r.a1 * d2 - r.a1.derive() - d1;
    return r;
}

void check_domain(const Rational& x, const Rational& eps, const KnOptions& opt) {
    if (x.is_zero()) throw std::domain_error("kn: x = 0 is excluded");
    if (eps.sign() >= 0) throw std::domain_error("kn: eps must be negative");
    if ((x.pow(3) + eps * eps).sign() <= 0) throw std::domain_error("kn: x^3 + eps^2 must be positive");
    if (opt.jet_terms < 5) throw std::invalid_argument("kn: at least 5 jet terms are needed");
    if (opt.precision < 30) throw std::invalid_argument("kn: precision must be at least 30 digits");
}

std::array<Real, 12> residuals_for(const Rational& x, const Rational& eps, const Branches& br, const KnOptions& opt,
                                   const Constants& k, Real* sigma_residual) {
    const Fields f = make_fields(x, eps, k, br.sg, opt.literal_h, opt.jet_terms);
    std::array<Real, 12> out;
    Real sig = 0;
    for (int s = 0; s < 3; ++s) {
        const Alphas p = make_equations(f, k, s, +1, opt.literal_d1);
        const Alphas m = make_equations(f, k, s, -1, opt.literal_d1);
        out[2 * s] = p.e0.value().abs();
        out[2 * s + 1] = p.e1.value().abs();
        out[2 * (s + 3)] = m.e0.value().abs();
        out[2 * (s + 3) + 1] = m.e1.value().abs();
        if (sigma_residual) {
            sig += (p.a0.value() + m.a0.value() - BigComplex(2) * f.H[s].value()).abs();
            sig += (p.a1.value() + m.a1.value() - BigComplex(2) * f.G[s].value()).abs();
        }
    }
    if (sigma_residual) *sigma_residual = sig;
    return out;
}

Real max_of(const std::array<Real, 12>& r) {
    Real m = 0;
    for (const auto& v : r)
        if (v > m) m = v;
    return m;
}

Real tolerance_for(unsigned precision) {
    return boost::multiprecision::pow(Real(10), -static_cast<int>(precision) + 20);
}

}  // namespace

std::array<Real, 12> kn_residuals(const Rational& x, const Rational& eps, const Branches& br, const KnOptions& opt) {
    check_domain(x, eps, opt);
    PrecisionScope scope(opt.precision);
    const Constants k = make_constants(eps, br);
    return residuals_for(x, eps, br, opt, k, nullptr);
}

PointResult kn_point(const Rational& x, const Rational& eps, const KnOptions& opt) {
    check_domain(x, eps, opt);
    PrecisionScope scope(opt.precision);
    const Real tol = tolerance_for(opt.precision);
    PointResult res;
    res.x = x;

    std::vector<Branches> order{Branches{}};
    for (int b3 = 0; b3 < 4; ++b3)
        for (int c1 = 0; c1 < 4; ++c1)
            for (int s3 = 0; s3 < 2; ++s3)
                for (int sg : {1, -1}) {
                    const Branches b{b3, c1, s3, sg};
                    if (!(b == Branches{})) order.push_back(b);
                }

    // First assignment under tolerance wins; otherwise report the smallest.
    bool have_best = false;
    for (const auto& br : order) {
        ++res.assignments_tried;
        const Constants k = make_constants(eps, br);
        Real sig;
        const auto r = residuals_for(x, eps, br, opt, k, &sig);
        const Real m = max_of(r);
        if (!have_best || m < res.best_max_residual) {
            have_best = true;
            res.best_max_residual = m;
            res.branches = br;
            res.residuals = r;
            res.max_residual = m;
            res.sigma_pairing_residual = sig;
        }
        if (m < tol) {
            res.success = true;
            res.branches = br;
            res.residuals = r;
            res.max_residual = m;
            res.sigma_pairing_residual = sig;
            break;
        }
    }
    res.principal = res.branches == Branches{};

    const Constants k = make_constants(eps, res.branches);
    const Fields f = make_fields(x, eps, k, res.branches.sg, opt.literal_h, opt.jet_terms);

    // (-3)^(1/4) chosen to minimize 1 + c3 gamma^3 + gamma^6 - 6 B1 C1 gamma'^(3/2).
    const BigComplex gv = f.g.value();
    const BigComplex g3v = gv * gv * gv;
    const BigComplex lhs = BigComplex(1) + k.c3 * g3v + g3v * g3v;
    for (int b1 = 0; b1 < 4; ++b1) {
        const BigComplex B1 = BigComplex(-3).root(4, b1);
        const Real r = (lhs - BigComplex(6) * B1 * k.c1 * f.g32.value()).abs();
        if (b1 == 0 || r < res.gamma_eq_residual) {
            res.gamma_eq_residual = r;
            res.b1 = b1;
        }
    }
    // Real branch of gamma'^(3/2).
    {
        const Real g1 = f.g1.value().re;
        const Real g32 = g1 * boost::multiprecision::sqrt(g1);
        const Real gr = gv.re;
        const Real g3r = gr * gr * gr;
        res.gamma_eq_real_residual = boost::multiprecision::abs(1 - 2 * g3r + g3r * g3r + k.eps.re * g32);
    }
    const BigComplex a = k.a[1];
    res.unity_residual = (a * a * a - BigComplex(1)).abs() + (BigComplex(1) + a + a * a).abs();

    // Central difference of alpha_{1,0} from fields rebuilt at x0 +- h.
    {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, opt.precision / 3);
        const Rational h(mpz_class(1), den);
        auto alpha10 = [&](const Rational& at) {
            const Fields fa = make_fields(at, eps, k, res.branches.sg, opt.literal_h, opt.jet_terms);
            return make_equations(fa, k, 0, +1, opt.literal_d1).a0;
        };
        const BigComplex fd = (alpha10(x + h).value() - alpha10(x - h).value()) /
                              BigComplex::from_rational(Rational(2) * h);
        res.fd_crosscheck = (fd - alpha10(x).derive().value()).abs();
    }
    return res;
}

KnReport kn_check(const std::vector<Rational>& xs, const Rational& eps, const KnOptions& opt) {
    PrecisionScope scope(opt.precision);
    KnReport rep;
    rep.precision = opt.precision;
    rep.tolerance = tolerance_for(opt.precision);
    rep.max_residual = 0;
    rep.max_gamma_real_residual = 0;
    rep.pass = !xs.empty();
    for (const auto& x : xs) {
        PointResult p = kn_point(x, eps, opt);
        if (p.max_residual > rep.max_residual) rep.max_residual = p.max_residual;
        if (p.gamma_eq_real_residual > rep.max_gamma_real_residual) rep.max_gamma_real_residual = p.gamma_eq_real_residual;
        rep.pass = rep.pass && p.success && p.gamma_eq_real_residual < rep.tolerance;
        rep.points.push_back(std::move(p));
    }
    return rep;
}

std::string format_real(const Real& v, int digits) {
    // boost treats 0 fraction digits as "all digits", so keep at least one.
    return v.str(std::max(digits, 2) - 1, std::ios::scientific);
}

double log10_abs(const Real& v) {
    if (v == 0) return -1e9;
    return boost::multiprecision::log10(boost::multiprecision::abs(v)).convert_to<double>();
}

}  // namespace commop::kn
