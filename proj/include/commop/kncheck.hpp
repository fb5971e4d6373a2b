#pragma once

#include "commop/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <string>
#include <vector>

namespace commop::kn {

using Real = boost::multiprecision::mpfr_float;

/// Complex number over MPFR reals. Precision is the MPFR default in force
/// when a value is created (see PrecisionScope).
struct BigComplex {
    Real re;
    Real im;

    BigComplex() : re(0), im(0) {}
    BigComplex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
    BigComplex(int r) : re(r), im(0) {}  // NOLINT
    static BigComplex i() { return {Real(0), Real(1)}; }
    static BigComplex from_rational(const Rational& q);
    static BigComplex polar(const Real& r, const Real& theta);

    [[nodiscard]] Real abs() const;
    [[nodiscard]] Real arg() const;
    [[nodiscard]] BigComplex conj() const { return {re, -im}; }
    /// Branch k (0..n-1) of the n-th root: |z|^(1/n) exp(i (arg z + 2 pi k)/n).
    /// k = 0 is the principal root.
    [[nodiscard]] BigComplex root(int n, int k = 0) const;

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
};

/// Holds the process-wide MPFR default precision (decimal digits) for its
/// lifetime. Evaluations are serialized by a lock because that default is
/// shared state.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// Truncated Taylor series f(x0 + t) = sum c_k t^k. Derivatives in x are
/// exact on the retained terms; every operation keeps the shorter length.
class Jet {
public:
    Jet() = default;
    explicit Jet(std::vector<BigComplex> c) : c_(std::move(c)) {}
    /// Constant with n terms.
    static Jet constant(const BigComplex& v, std::size_t n);
    /// The variable x0 + t with n terms.
    static Jet variable(const BigComplex& x0, std::size_t n);

    [[nodiscard]] std::size_t size() const { return c_.size(); }
    [[nodiscard]] const BigComplex& value() const { return c_.at(0); }
    [[nodiscard]] const std::vector<BigComplex>& coefficients() const { return c_; }
    /// d/dx; one term shorter.
    [[nodiscard]] Jet derive() const;
    [[nodiscard]] Jet inverse() const;
    /// f^r with the given value chosen for f(x0)^r.
    [[nodiscard]] Jet pow(const Rational& r, const BigComplex& value_pow) const;
    /// sqrt with the given value chosen for sqrt(f(x0)).
    [[nodiscard]] Jet sqrt(const BigComplex& value_sqrt) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
    friend Jet operator*(const BigComplex& s, const Jet& a);
    friend Jet operator*(const Jet& a, const BigComplex& s) { return s * a; }
    friend Jet operator/(const Jet& a, const BigComplex& s) { return (BigComplex(1) / s) * a; }
    friend Jet operator+(const Jet& a, const BigComplex& s);
    friend Jet operator+(const BigComplex& s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, const BigComplex& s) { return a + (-s); }
    friend Jet operator-(const BigComplex& s, const Jet& a) { return (-a) + s; }
    friend Jet operator/(const BigComplex& s, const Jet& a) { return s * a.inverse(); }

private:
    std::vector<BigComplex> c_;
};

/// gamma = x / (x^3 + eps^2)^(1/3) and its derivatives 1..derivatives (at most 4),
/// from the closed forms gamma' = eps^2 u^(-4/3), u = x^3 + eps^2, and their
/// successors, with the real cube root. Requires eps < 0 and u > 0.
std::vector<BigComplex> gamma_eval(const Rational& x, const Rational& eps, int derivatives, unsigned precision);

/// Branch choice for each fractional power, as root indices (see
/// BigComplex::root): b3 for (-3)^(3/4) = (-27)^(1/4), c1 for c4^(1/4),
/// s3 for sqrt(3 c4), sg = +1/-1 for sqrt(gamma').
struct Branches {
    int b3 = 0;
    int c1 = 0;
    int s3 = 0;
    int sg = 1;
    [[nodiscard]] std::string str() const;
    friend bool operator==(const Branches&, const Branches&) = default;
};

struct KnOptions {
    unsigned precision = 60;
    /// First summand of H_s over 2 h1 as printed, instead of 2 h1^2.
    bool literal_h = false;
    /// Cross terms of d_{s,1} without the factor a_{s+m}, as printed.
    bool literal_d1 = false;
    /// Taylor terms carried; 5 is the minimum (gamma'''' needs four derivatives).
    int jet_terms = 7;
};

struct PointResult {
    Rational x;
    Branches branches;
    bool principal = false;
    bool success = false;
    int assignments_tried = 0;
    /// |Eq[i,0]|, |Eq[i,1]| for i = 1..6, in the order Eq[1,0], Eq[1,1], Eq[2,0], ...
    std::array<Real, 12> residuals;
    Real max_residual;
    /// Smallest max-residual over every assignment tried (for failure reports).
    Real best_max_residual;
    /// Root index for (-3)^(1/4) minimizing the gamma equation residual.
    int b1 = 0;
    Real gamma_eq_residual;
    /// 1 - 2 gamma^3 + gamma^6 + eps gamma'^(3/2), real branch.
    Real gamma_eq_real_residual;
    /// |a^3 - 1| + |1 + a + a^2|
    Real unity_residual;
    /// |alpha_{s+3,r} - sigma alpha_{s,r}| summed; zero by construction.
    Real sigma_pairing_residual;
    /// |alpha_{1,0}'| from the jet minus a central difference (cross-check).
    Real fd_crosscheck;
};

struct KnReport {
    std::vector<PointResult> points;
    unsigned precision = 60;
    Real tolerance;
    Real max_residual;
    Real max_gamma_real_residual;
    bool pass = false;
};

/// Evaluates the twelve residuals of the Krichever-Novikov system at one
/// point: principal branches first, then every assignment in a fixed order;
/// reports the first assignment under tolerance.
PointResult kn_point(const Rational& x, const Rational& eps, const KnOptions& opt);
/// The twelve residual magnitudes for a fixed assignment.
std::array<Real, 12> kn_residuals(const Rational& x, const Rational& eps, const Branches& br, const KnOptions& opt);
KnReport kn_check(const std::vector<Rational>& xs, const Rational& eps, const KnOptions& opt);

/// Scientific notation with `digits` significant digits (at least 2).
std::string format_real(const Real& v, int digits = 6);
/// log10 |v|, or a large negative number for zero.
double log10_abs(const Real& v);

}  // namespace commop::kn
