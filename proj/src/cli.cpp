#include "commop/cli.hpp"

#include "commop/bipoly.hpp"
#include "commop/curve.hpp"
#include "commop/kncheck.hpp"
#include "commop/opdata.hpp"
#include "commop/opexpr.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef COMMOP_VERSION
#define COMMOP_VERSION "0.0.0"
#endif

namespace commop::cli {

namespace {

using Clock = std::chrono::steady_clock;

const char* const kG0Erratum = "g0-constant";
const char* const kNz1Erratum = "zeta1-x3";
const char* const kHsErratum = "hs-denominator";
const char* const kDs1Erratum = "ds1-factor";

Check make_check(std::string name, bool ok, std::string summary) {
    return Check{std::move(name), ok ? Outcome::Pass : Outcome::Fail, std::move(summary), {}};
}

Check make_finding(std::string name, std::string summary) {
    return Check{std::move(name), Outcome::Finding, std::move(summary), {}};
}

std::string eps_text(const Options& opt) { return opt.eps ? opt.eps->str() : "symbolic"; }

XOp maybe_specialize(const XOp& a, const Options& opt) { return opt.eps ? substitute_eps(a, *opt.eps) : a; }

/// First nonzero coefficient of a nonzero operator, highest D-power first.
std::string leading_text(const XOp& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    os << "order " << a.order() << ", leading coefficient " << a.leading().str();
    return os.str();
}

// ------------------------------------------------------------------- suites

std::vector<Check> suite_commute(const Options& opt) {
    const XOp l1 = maybe_specialize(opdata::make_L1(), opt);
    const XOp l2 = maybe_specialize(opdata::make_L2(), opt);
    const auto w = pipeline::commutation_system(l1, l2);
    std::vector<std::string> nonzero;
    for (std::size_t k = 0; k < w.size(); ++k)
        if (!w[k].is_zero()) nonzero.push_back("W_" + std::to_string(k));
    const int checked = static_cast<int>(w.size());
    Check c = make_check("commute", nonzero.empty(),
                         nonzero.empty() ? "[L1, L2] = 0: all " + std::to_string(checked) + " coefficients W_0..W_" +
                                               std::to_string(checked - 1) + " vanish"
                                         : "[L1, L2] != 0: " + std::to_string(nonzero.size()) + " nonzero coefficients");
    c.details = {{"eps", eps_text(opt)},
                 {"coefficients_checked", static_cast<long long>(checked)},
                 {"nonzero", nonzero}};
    return {c};
}

std::vector<Check> suite_bc(const Options& opt) {
    std::vector<Check> out;
    const BiPoly q0 = opdata::bc_polynomial();
    const BiPoly q = opt.eps ? q0.substitute_eps(*opt.eps) : q0;
    const XOp l1 = maybe_specialize(opdata::make_L1(), opt);
    const XOp l2_printed = maybe_specialize(opdata::make_L2(), opt);
    const XOp l2_mu = maybe_specialize(opdata::make_L2_mu(), opt);
    const XOp& l2 = opt.literal ? l2_printed : l2_mu;

    const XOp r = eval_poly_at_pair(q, l1, l2);
    Check c = make_check("bc", r.is_zero(),
                         std::string(r.is_zero() ? "Q(L1, L2) = 0" : "Q(L1, L2) != 0 (" + leading_text(r) + ")") +
                             " for Q = " + q0.str() +
                             (opt.literal ? ", L2 as printed"
                                          : ", L2 with g0 constant term " +
                                                XLaurent::monomial(opdata::g0_constant_term(), 4, 0).str() +
                                                " (erratum " + kG0Erratum + ")"));
    c.details = {{"eps", eps_text(opt)}, {"l2", std::string(opt.literal ? "printed" : "mu-normalized")}};
    out.push_back(std::move(c));
    if (!opt.literal) {
        const XOp rl = eval_poly_at_pair(q, l1, l2_printed);
        Check f = make_finding("bc-printed-l2", "Q(L1, L2) with L2 exactly as printed is " +
                                                    (rl.is_zero() ? std::string("zero") : "nonzero: " + leading_text(rl)));
        f.details = {{"erratum", std::string(kG0Erratum)}};
        out.push_back(std::move(f));
    }
    const bool on_curve = bc_function_identity(CurveDef::standard());
    const bool on_variant = bc_function_identity(CurveDef::eps2_variant());
    Check s = make_check("bc-function-field", on_curve && !on_variant,
                         std::string("Q(lambda, mu) = 0 on the curve: ") + (on_curve ? "true" : "false") +
                             "; on the eps^2 variant: " + (on_variant ? "true" : "false"));
    out.push_back(std::move(s));
    return out;
}

std::vector<Check> suite_limit(const Options&) {
    const XOp calL = opdata::make_calL();
    const XOp l1 = substitute_eps(opdata::make_L1(), Rational(0));
    const XOp l2 = substitute_eps(opdata::make_L2(), Rational(0));
    const XOp t1 = op_power(calL, 3) - XOp::identity();
    const XOp t2 = op_power(calL, 4) - calL;
    const bool ok1 = l1 == t1;
    const bool ok2 = l2 == t2;
    Check c = make_check("limit", ok1 && ok2,
                         std::string("eps = 0: L1 = calL^3 - 1 ") + (ok1 ? "holds" : "fails") + ", L2 = calL^4 - calL " +
                             (ok2 ? "holds" : "fails") + ", calL = " + print_op(calL));
    return {c};
}

std::vector<Check> suite_rank(const Options& opt) {
    if (opt.order < 12) throw std::invalid_argument("--order must be at least 12 for the rank-3 checks");
    std::vector<Check> out;
    const int check_order = opt.order - 4;
    const auto chi = pipeline::chi_series(opt.order);
    const ZSeries lam = curve_series(lambda_fn(), opt.order);
    const ZSeries mu = curve_series(mu_fn(), opt.order);

    auto rank_check = [&](const std::string& name, const XOp& l, const ZSeries& eigen, const std::string& what) {
        const auto r = pipeline::verify_rank3(l, chi, eigen, check_order);
        Check c = make_check(name, r.pass,
                             what + (r.pass ? " reduces to its eigenvalue through z^" + std::to_string(r.verified_through)
                                            : " fails: " + r.detail));
        c.details = {{"verified_through", static_cast<long long>(r.verified_through)},
                     {"lowest_z_order", static_cast<long long>(r.lowest_z_order)},
                     {"check_order", static_cast<long long>(check_order)}};
        return c;
    };
    out.push_back(rank_check("rank-l1", opdata::make_L1(), lam, "L1 mod T with lambda"));
    if (opt.literal) {
        out.push_back(rank_check("rank-l2", opdata::make_L2(), mu, "printed L2 mod T with mu"));
    } else {
        out.push_back(rank_check("rank-l2", opdata::make_L2_mu(), mu,
                                 std::string("L2 (erratum ") + kG0Erratum + ") mod T with mu"));
        const auto r = pipeline::verify_rank3(opdata::make_L2(), chi, mu, check_order);
        out.push_back(make_finding("rank-printed-l2", "printed L2: " + (r.pass ? std::string("passes") : r.detail)));
    }
    {
        const auto r = pipeline::verify_rank3(opdata::make_L1() + XOp::d(1), chi, lam, check_order);
        Check c = make_check("rank-perturbation", !r.pass,
                             "L1 + D is rejected" + (r.pass ? std::string(" (NOT: it passed)") : ": " + r.detail));
        out.push_back(std::move(c));
    }

    // Series data of the chi expansions.
    const XLaurent x2inv = XLaurent::monomial(Rational(1), 0, -2);
    const XLaurent z0_expect = opt.literal ? opdata::zeta1_displayed() : opdata::zeta1();
    const XLaurent z2_expect =
        XLaurent::monomial(Rational(2, 3), 2, opt.literal ? -2 : -3);
    const bool c1 = chi.chi1.coefficient(0) == opdata::zeta2() && opdata::zeta2() == XLaurent(26) * x2inv;
    const bool c0 = chi.chi0.coefficient(0) == z0_expect;
    const bool c01 = chi.chi0.coefficient(1) == XLaurent::monomial(Rational(-1, 216), 2, 0);
    const bool c02 = chi.chi0.coefficient(2) == z2_expect;
    Check s = make_check("chi-series", c1 && c0 && c01 && c02,
                         "chi1 z^0 = " + chi.chi1.coefficient(0).str() + "; chi0 z^0 = " + chi.chi0.coefficient(0).str() +
                             ", z^1 = " + chi.chi0.coefficient(1).str() + ", z^2 = " + chi.chi0.coefficient(2).str() +
                             (opt.literal ? " (compared with the printed display)"
                                          : std::string(" (erratum ") + kNz1Erratum + ")"));
    s.details = {{"chi1_z0", c1}, {"chi0_z0", c0}, {"chi0_z1", c01}, {"chi0_z2", c02}};
    out.push_back(std::move(s));
    if (!opt.literal)
        out.push_back(make_finding("chi-series-display", "printed zeta1 = " + opdata::zeta1_displayed().str() +
                                                            " and z^2 term 2*eps^2/(3*x^2) do not match the expansion"));
    return out;
}

std::vector<Check> suite_kn(const Options& opt) {
    std::vector<Check> out;
    const Rational eps = opt.eps.value_or(Rational(-1));
    if (eps.sign() >= 0) throw std::invalid_argument("kn requires eps < 0");
    if (opt.precision < 30) throw std::invalid_argument("--precision must be at least 30 for kn");
    kn::KnOptions ko;
    ko.precision = opt.precision;
    ko.literal_h = opt.literal;
    ko.literal_d1 = opt.literal;
    const kn::KnReport rep = kn::kn_check(opt.points, eps, ko);

    std::vector<std::string> per_point;
    bool unity_ok = true;
    bool sigma_ok = true;
    bool fd_ok = true;
    const kn::Real fd_tol = boost::multiprecision::pow(kn::Real(10), -static_cast<int>(opt.precision) / 2);
    for (const auto& p : rep.points) {
        per_point.push_back("x=" + p.x.str() + " " + p.branches.str() + " tried=" + std::to_string(p.assignments_tried) +
                            " max=" + kn::format_real(p.max_residual, 3) +
                            " gamma_eq=" + kn::format_real(p.gamma_eq_real_residual, 3));
        unity_ok = unity_ok && p.unity_residual < rep.tolerance;
        sigma_ok = sigma_ok && p.sigma_pairing_residual < rep.tolerance;
        fd_ok = fd_ok && p.fd_crosscheck < fd_tol;
    }
    bool all_success = true;
    for (const auto& p : rep.points) all_success = all_success && p.success;
    Check c = make_check("kn-residuals", all_success,
                         "max |Eq[i,j]| = " + kn::format_real(rep.max_residual, 3) + " over " +
                             std::to_string(rep.points.size()) + " points at " + std::to_string(opt.precision) +
                             " digits (tolerance " + kn::format_real(rep.tolerance, 1) + ")" +
                             (opt.literal ? ", formulas as printed"
                                          : std::string(", errata ") + kHsErratum + " and " + kDs1Erratum));
    c.details = {{"eps", eps.str()}, {"points", per_point}};
    out.push_back(std::move(c));

    const kn::Real g_tol = boost::multiprecision::pow(kn::Real(10), -static_cast<int>(opt.precision) + 10);
    out.push_back(make_check("kn-gamma-equation", rep.max_gamma_real_residual < g_tol,
                             "|1 - 2 gamma^3 + gamma^6 + eps gamma'^(3/2)| <= " +
                                 kn::format_real(rep.max_gamma_real_residual, 3)));

    {
        kn::KnOptions k2 = ko;
        k2.precision = 2 * opt.precision;
        const kn::KnReport rep2 = kn::kn_check(opt.points, eps, k2);
        bool ok = rep2.points.size() == rep.points.size();
        for (const auto& p : rep2.points) ok = ok && p.success;
        const double drop = kn::log10_abs(rep.max_residual) - kn::log10_abs(rep2.max_residual);
        ok = ok && drop >= 10;
        std::ostringstream os;
        os << "max residual at " << k2.precision << " digits = " << kn::format_real(rep2.max_residual, 3)
           << ", a drop of 10^" << static_cast<long>(drop);
        out.push_back(make_check("kn-precision-doubling", ok, os.str()));
    }
    out.push_back(make_check("kn-bookkeeping", unity_ok && sigma_ok && fd_ok,
                             std::string("a^3 = 1 and 1 + a + a^2 = 0: ") + (unity_ok ? "ok" : "FAIL") +
                                 "; sigma pairing: " + (sigma_ok ? "ok" : "FAIL") +
                                 "; central-difference cross-check: " + (fd_ok ? "ok" : "FAIL")));
    if (!opt.literal) {
        // Each printed form alone, at one point, shows the erratum is needed.
        const Rational x = opt.points.front();
        for (int which = 0; which < 2; ++which) {
            kn::KnOptions kl = ko;
            kl.literal_h = which == 0;
            kl.literal_d1 = which == 1;
            const kn::PointResult p = kn::kn_point(x, eps, kl);
            out.push_back(make_finding(which == 0 ? "kn-printed-hs" : "kn-printed-ds1",
                                       std::string("printed ") + (which == 0 ? "H_s" : "d_{s,1}") + " at x=" + x.str() +
                                           ": best max residual over " + std::to_string(p.assignments_tried) +
                                           " assignments = " + kn::format_real(p.best_max_residual, 3)));
        }
    }
    return out;
}

std::vector<Check> run_suite(std::string_view suite, const Options& opt) {
    if (suite == "commute") return suite_commute(opt);
    if (suite == "bc") return suite_bc(opt);
    if (suite == "limit") return suite_limit(opt);
    if (suite == "rank") return suite_rank(opt);
    if (suite == "kn") return suite_kn(opt);
    if (suite == "all") {
        std::vector<Check> all;
        for (const char* s : {"commute", "bc", "limit", "rank", "kn"}) {
            auto c = run_suite(s, opt);
            all.insert(all.end(), c.begin(), c.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) +
                                "' (expected all, commute, bc, limit, rank or kn)");
}

void write_artifact(const std::string& path, const std::string& header, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    std::istringstream h(header);
    for (std::string line; std::getline(h, line);) f << "# " << line << "\n";
    f << body << "\n";
}

nlohmann::ordered_json detail_json(const DetailValue& v) {
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

}  // namespace

std::vector<Rational> Options::default_points() {
    return {Rational(1), Rational(3, 2), Rational(2), Rational(3), Rational(5)};
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Finding: return "finding";
    }
    return "fail";
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (c.outcome == Outcome::Fail) return false;
    return true;
}

Outcome Report::outcome() const { return passed() ? Outcome::Pass : Outcome::Fail; }

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = "commop";
    j["tool_version"] = COMMOP_VERSION;
    j["command"] = r.command;
    j["target"] = r.target;
    nlohmann::ordered_json in;
    in["eps"] = eps_text(r.inputs);
    in["precision"] = r.inputs.precision;
    in["order"] = r.inputs.order;
    in["window"] = {{"lo", r.inputs.window.lo}, {"hi", r.inputs.window.hi}};
    in["seed"] = r.inputs.seed;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : r.inputs.points) pts.push_back(p.str());
    in["points"] = std::move(pts);
    in["literal"] = r.inputs.literal;
    j["inputs"] = std::move(in);
    j["outcome"] = std::string(outcome_name(r.outcome()));
    int passed = 0, failed = 0, findings = 0;
    for (const auto& c : r.checks) {
        if (c.outcome == Outcome::Pass) ++passed;
        if (c.outcome == Outcome::Fail) ++failed;
        if (c.outcome == Outcome::Finding) ++findings;
    }
    j["counts"] = {{"checks", r.checks.size()}, {"passed", passed}, {"failed", failed}, {"findings", findings}};
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["outcome"] = std::string(outcome_name(c.outcome));
        cj["summary"] = c.summary;
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.details) d[k] = detail_json(v);
        cj["details"] = std::move(d);
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["artifacts"] = r.artifacts;
    j["wall_time_seconds"] = r.wall_time_seconds;
    return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        const char* tag = c.outcome == Outcome::Pass ? "PASS" : (c.outcome == Outcome::Fail ? "FAIL" : "FINDING");
        os << "[" << tag << "] " << c.name << ": " << c.summary << "\n";
    }
    for (const auto& a : r.artifacts) os << "wrote " << a << "\n";
    os << r.command << " " << r.target << ": " << outcome_name(r.outcome()) << "\n";
    return os.str();
}

Report verify(std::string_view suite, const Options& opt) {
    const auto t0 = Clock::now();
    Report r;
    r.command = "verify";
    r.target = std::string(suite);
    r.inputs = opt;
    r.checks = run_suite(suite, opt);
    r.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

Report construct(std::string_view target, const Options& opt, const std::string& out_path) {
    const auto t0 = Clock::now();
    Report r;
    r.command = "construct";
    r.target = std::string(target);
    r.inputs = opt;
    const XOp l1 = opdata::make_L1();
    if (target == "l1") {
        const auto chi = pipeline::chi_series();
        const auto d = pipeline::derive_L1_coeffs(chi);
        const bool match = d.ok && d.op == l1;
        Check c = make_check("derive-l1", match,
                             d.ok ? std::string("f_0..f_7 from the chi series ") +
                                        (match ? "match the transcription exactly" : "differ from the transcription")
                                  : "derivation failed: " + d.diagnostic);
        c.details = {{"equations", static_cast<long long>(d.equations)},
                     {"lowest_z_order", static_cast<long long>(d.lowest_z_order)}};
        r.checks.push_back(std::move(c));
        if (d.ok) {
            write_artifact(out_path, "L1 derived from the chi series (commop construct l1)", print_op(d.op));
            r.artifacts.push_back(out_path);
        }
    } else if (target == "l2") {
        const auto s = pipeline::solve_commuting(l1, 12, opt.window);
        const bool has_l2 = s.contains(opdata::make_L2());
        const bool ok = s.consistent && s.verified && s.dimension == 2 && s.spanned_by_identity_and_input && has_l2;
        std::ostringstream os;
        if (!s.consistent)
            os << "window " << opt.window.lo << ".." << opt.window.hi;
        else
            os << "solution set of dimension " << s.dimension << " (" << s.rational_dimension << " over Q)"
               << (s.spanned_by_identity_and_input ? ", homogeneous part spanned by {I, L1}" : "")
               << (has_l2 ? ", contains the printed L2" : ", does NOT contain the printed L2");
        for (const auto& w : s.warnings) os << "; " << w;
        Check c = make_check("solve-l2", ok, os.str());
        c.details = {{"unknowns", static_cast<long long>(s.unknowns)},
                     {"equations", static_cast<long long>(s.equations)},
                     {"rank", static_cast<long long>(s.rank)},
                     {"dimension", static_cast<long long>(s.dimension)},
                     {"rational_dimension", static_cast<long long>(s.rational_dimension)},
                     {"verified", s.verified},
                     {"warnings", s.warnings}};
        r.checks.push_back(std::move(c));

        const auto chi = pipeline::chi_series();
        const auto d = pipeline::derive_coeffs(chi, curve_series(mu_fn()), 12);
        const bool member = d.ok && s.consistent && s.contains(d.op);
        r.checks.push_back(make_check("derive-l2-mu", member,
                                      d.ok ? std::string("L2 with mu as its rank-3 eigenvalue ") +
                                                 (member ? "lies in the solution set" : "is not in the solution set")
                                           : "derivation failed: " + d.diagnostic));
        if (member) {
            const XOp diff = d.op - opdata::make_L2();
            r.checks.push_back(make_finding("l2-transcription-diff",
                                            "derived minus printed L2 = " + print_op(diff) + " (erratum " +
                                                kG0Erratum + ")"));
            write_artifact(out_path, "L2 derived with mu as rank-3 eigenvalue (commop construct l2)", print_op(d.op));
            r.artifacts.push_back(out_path);
        }
    } else if (target == "bc") {
        const XOp l2 = opt.literal ? opdata::make_L2() : opdata::make_L2_mu();
        const auto b = pipeline::find_bc_relation(l1, l2, 36);
        const bool ok = b.found && b.verified && b.q == opdata::bc_polynomial();
        r.checks.push_back(make_check("bc-discovery", ok,
                                      b.found ? "weight " + std::to_string(b.weight) + ": " + b.q.str() +
                                                    (b.unique ? "" : " (not unique)")
                                              : "no relation: " + b.message));
        if (!opt.literal) {
            const auto bl = pipeline::find_bc_relation(l1, opdata::make_L2(), 36);
            r.checks.push_back(make_finding("bc-printed-l2", "relation for L2 as printed: " +
                                                                 (bl.found ? bl.q.str() : "none (" + bl.message + ")")));
        }
        if (b.found) {
            write_artifact(out_path, "Burchnall-Chaundy relation Q(z, w), z ~ L1, w ~ L2 (commop construct bc)",
                           b.q.str());
            r.artifacts.push_back(out_path);
        }
    } else {
        throw std::invalid_argument("unknown construct target '" + std::string(target) + "' (expected l1, l2 or bc)");
    }
    r.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

pipeline::Window parse_window(std::string_view text) {
    const auto pos = text.find("..");
    if (pos == std::string_view::npos) throw std::invalid_argument("window must look like lo..hi");
    try {
        const int lo = std::stoi(std::string(text.substr(0, pos)));
        const int hi = std::stoi(std::string(text.substr(pos + 2)));
        if (lo >= hi) throw std::invalid_argument("window needs lo < hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("window must look like lo..hi with integers lo < hi");
    }
}

std::optional<Rational> parse_eps(std::string_view text) {
    if (text == "symbolic") return std::nullopt;
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("--eps takes 'symbolic' or a rational such as -1 or 3/2");
    }
}

std::vector<Rational> parse_points(std::string_view text) {
    if (text.find(',') == std::string_view::npos && text.find('/') == std::string_view::npos &&
        text.find('-') == std::string_view::npos) {
        int n = 0;
        try {
            n = std::stoi(std::string(text));
        } catch (const std::exception&) {
            throw std::invalid_argument("--points takes a count 1..5 or a comma-separated list");
        }
        const auto all = Options::default_points();
        if (n < 1 || n > static_cast<int>(all.size()))
            throw std::invalid_argument("--points count must be 1..5 (or give an explicit list)");
        return {all.begin(), all.begin() + n};
    }
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(',', start);
        const auto item = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad point '" + std::string(item) + "'");
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

XOp load_operator(const std::string& path_or_name) {
    if (path_or_name == "l1") return opdata::make_L1();
    if (path_or_name == "l2") return opdata::make_L2();
    if (path_or_name == "l2mu") return opdata::make_L2_mu();
    if (path_or_name == "calL") return opdata::make_calL();
    std::ifstream f(path_or_name);
    if (!f) throw std::invalid_argument("cannot read operator file '" + path_or_name + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    const bool json = path_or_name.size() > 5 && path_or_name.ends_with(".json");
    try {
        return json ? parse_op_json(text) : parse_op(text);
    } catch (const ParseError& e) {
        throw std::invalid_argument(path_or_name + ":" + e.what());
    }
}

}  // namespace commop::cli
