#include "commop/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace commop::pipeline {

namespace {

/// Coefficient of eps^e x^a in D^k of op.
Rational op_coefficient(const XOp& op, int k, int a, int e) {
    return op.coefficient(k).coefficient(a).coefficient(e);
}

XLaurent x_power_derivative(int a, int j) {
    Rational c(1);
    for (int i = 0; i < j; ++i) c *= Rational(a - i);
    return c.is_zero() ? XLaurent() : XLaurent::monomial(c, 0, a - j);
}

/// Exact commutators [A, x^a D^k] with the derivatives of A cached.
class MonomialCommutators {
public:
    MonomialCommutators(const XOp& a, int max_k) : a_(a) {
        const int n = a.order();
        derivs_.resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            derivs_[i].push_back(a.coefficients()[i]);
            for (int j = 1; j <= max_k; ++j) derivs_[i].push_back(derive(derivs_[i].back()));
        }
    }

    XOp operator()(int xexp, int k) const {
        const int n = a_.order();
        std::vector<XLaurentAccumulator> acc(n + k + 1);
        const XLaurent m = XLaurent::monomial(Rational(1), 0, xexp);
        // A o m = sum_i A_i sum_j C(i,j) (x^a)^(j) D^(i-j+k)
        for (int i = 0; i <= n; ++i) {
            const XLaurent& ai = a_.coefficients()[i];
            if (ai.is_zero()) continue;
            for (int j = 0; j <= i; ++j) {
                const XLaurent dm = x_power_derivative(xexp, j);
                if (dm.is_zero()) break;
                acc[i - j + k].add_product(ai, dm, binomial(i, j));
            }
        }
        // - m o A = - sum_i x^a sum_j C(k,j) A_i^(j) D^(i+k-j)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= k; ++j) {
                const XLaurent& d = derivs_[i][j];
                if (d.is_zero()) continue;
                acc[i + k - j].add_product(m, d, -binomial(k, j));
            }
        std::vector<XLaurent> out;
        out.reserve(acc.size());
        for (auto& s : acc) out.push_back(s.take());
        return XOp(std::move(out));
    }

private:
    const XOp& a_;
    std::vector<std::vector<XLaurent>> derivs_;
};

int eps_degree_of(const XOp& op) {
    int d = 0;
    for (const auto& c : op.coefficients()) d = std::max(d, c.eps_degree());
    return d;
}

}  // namespace

ChiSeries chi_series(int order, const CurveDef& curve) {
    return {curve_series(chi(0), order, curve), curve_series(chi(1), order, curve), curve_series(chi(2), order, curve)};
}

SeriesOp reduction_divisor(const ChiSeries& chi) {
    return SeriesOp(std::vector<ZSeries>{-chi.chi0, -chi.chi1, -chi.chi2, ZSeries(1)});
}

std::vector<std::array<ZSeries, 3>> remainder_table(const ChiSeries& chi, int max_order) {
    std::vector<std::array<ZSeries, 3>> r;
    r.push_back({ZSeries(1), ZSeries(), ZSeries()});
    for (int n = 1; n <= max_order; ++n) {
        const auto& [a0, a1, a2] = r.back();
        r.push_back({a0.derive() + a2 * chi.chi0, a1.derive() + a0 + a2 * chi.chi1, a2.derive() + a1 + a2 * chi.chi2});
    }
    return r;
}

DeriveResult derive_coeffs(const ChiSeries& chi, const ZSeries& eigen, int order) {
    DeriveResult res;
    if (order < 3) {
        res.diagnostic = "order must be at least 3";
        return res;
    }
    const auto table = remainder_table(chi, order);
    const int m = order - 1;  // unknowns f_0..f_{order-2}
    int zmin = eigen.valuation();
    for (const auto& row : table)
        for (const auto& s : row)
            if (!s.is_zero()) zmin = std::min(zmin, s.valuation());
    res.lowest_z_order = zmin;

    struct Eq {
        std::vector<XLaurent> a;
        XLaurent b;
        int j;
        int s;
    };
    std::vector<Eq> eqs;
    auto known = [](const ZSeries& s, int e) { return e < s.precision(); };
    for (int s = zmin; s <= 0; ++s)
        for (int j = 0; j < 3; ++j) {
            Eq eq{std::vector<XLaurent>(m), XLaurent(), j, s};
            for (int n = 0; n < m; ++n) {
                if (!known(table[n][j], s)) {
                    res.diagnostic = "truncation too short: remainder of D^" + std::to_string(n) + " unknown at z^" +
                                     std::to_string(s);
                    return res;
                }
                eq.a[n] = table[n][j].coefficient(s);
            }
            if (!known(table[order][j], s) || !known(eigen, s)) {
                res.diagnostic = "truncation too short at z^" + std::to_string(s);
                return res;
            }
            eq.b = (j == 0 ? eigen.coefficient(s) : XLaurent()) - table[order][j].coefficient(s);
            eqs.push_back(std::move(eq));
        }
    res.equations = static_cast<int>(eqs.size());

    // Gauss-Jordan over the Laurent ring, pivoting on units only.
    std::vector<int> pivot_row(m, -1);
    std::vector<bool> used(eqs.size(), false);
    for (int col = m - 1; col >= 0; --col) {
        int p = -1;
        bool nonunit = false;
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (used[r] || eqs[r].a[col].is_zero()) continue;
            if (eqs[r].a[col].is_unit()) {
                p = static_cast<int>(r);
                break;
            }
            nonunit = true;
        }
        if (p < 0) {
            res.diagnostic = "f_" + std::to_string(col) +
                             (nonunit ? " has no invertible pivot" : " is not determined by z-orders up to 0");
            return res;
        }
        used[p] = true;
        pivot_row[col] = p;
        const XLaurent piv = eqs[p].a[col];
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (static_cast<int>(r) == p || eqs[r].a[col].is_zero()) continue;
            const XLaurent factor = eqs[r].a[col].divide_by_unit(piv);
            for (int c = 0; c < m; ++c)
                if (!eqs[p].a[c].is_zero()) eqs[r].a[c] -= factor * eqs[p].a[c];
            eqs[r].b -= factor * eqs[p].b;
        }
    }
    for (std::size_t r = 0; r < eqs.size(); ++r)
        if (!used[r] && !eqs[r].b.is_zero()) {
            res.diagnostic = "inconsistent system: Q_" + std::to_string(eqs[r].j) + " at z^" + std::to_string(eqs[r].s);
            return res;
        }
    res.coeffs.resize(m);
    std::vector<XLaurent> full(order + 1);
    for (int col = 0; col < m; ++col) {
        const Eq& e = eqs[pivot_row[col]];
        res.coeffs[col] = e.b.divide_by_unit(e.a[col]);
        full[col] = res.coeffs[col];
    }
    full[order] = XLaurent(1);
    res.op = XOp(std::move(full));
    res.ok = true;
    return res;
}

DeriveResult derive_L1_coeffs(const ChiSeries& chi) {
    return derive_coeffs(chi, curve_series(lambda_fn(), kDefaultSeriesOrder), 9);
}

Rank3Report verify_rank3(const XOp& L, const ChiSeries& chi, const ZSeries& eigen, int check_order) {
    Rank3Report rep;
    const auto red = right_reduce(to_series_op(L), reduction_divisor(chi));
    std::array<ZSeries, 3> diff{red.remainder_coeffs[0] - eigen, red.remainder_coeffs[1], red.remainder_coeffs[2]};
    int lowest = eigen.valuation();
    int prec = ZSeries::kExact;
    for (const auto& d : diff) {
        if (!d.is_zero()) lowest = std::min(lowest, d.valuation());
        prec = std::min(prec, d.precision());
    }
    for (const auto& c : red.remainder_coeffs)
        if (!c.is_zero()) lowest = std::min(lowest, c.lowest());
    rep.lowest_z_order = lowest;
    rep.verified_through = lowest - 1;
    for (int s = lowest; s <= check_order; ++s) {
        if (s >= prec) {
            rep.detail = "series known only below z^" + std::to_string(prec);
            break;
        }
        for (int j = 0; j < 3; ++j)
            if (!diff[j].coefficient(s).is_zero()) {
                rep.first_failure = std::make_pair(j, s);
                std::ostringstream os;
                os << "Q_" << j << " differs at z^" << s << ": " << diff[j].coefficient(s).str();
                rep.detail = os.str();
                break;
            }
        if (rep.first_failure) break;
        rep.verified_through = s;
    }
    rep.pass = !rep.first_failure && rep.verified_through >= check_order;
    return rep;
}

bool AffineSolutionSet::contains(const XOp& b) const {
    if (!consistent) return false;
    XOp d = b - particular;
    for (const auto& k : rational_basis) {
        // each basis element carries a coefficient 1 at a monomial where the others vanish
        bool done = false;
        for (int kk = 0; kk <= k.order() && !done; ++kk)
            for (const auto& t : k.coefficients()[kk].terms()) {
                for (const auto& et : t.coef.terms()) {
                    bool isolated = et.coef.is_one();
                    for (const auto& other : rational_basis)
                        if (&other != &k && !op_coefficient(other, kk, t.exp, et.exp).is_zero()) isolated = false;
                    if (!isolated) continue;
                    const Rational c = op_coefficient(d, kk, t.exp, et.exp);
                    if (!c.is_zero()) d -= k * c;
                    done = true;
                    break;
                }
                if (done) break;
            }
        if (!done) return false;
    }
    return d.is_zero();
}

AffineSolutionSet solve_commuting(const XOp& a, int target_order, Window window, int eps_degree) {
    AffineSolutionSet out;
    out.target_order = target_order;
    out.window = window;
    out.eps_degree = eps_degree;
    const int nx = window.hi - window.lo + 1;
    const int ne = eps_degree / 2 + 1;
    const int nk = target_order;
    const int n = nk * nx * ne;
    out.unknowns = n;
    // Column order: highest D-power first, then x, then eps.
    auto col_of = [&](int k, int xexp, int eidx) { return ((nk - 1 - k) * nx + (xexp - window.lo)) * ne + eidx; };

    const MonomialCommutators comm(a, std::max(0, target_order));
    using Key = std::tuple<int, int, int>;
    std::map<Key, std::vector<SparseLinearSystem::Entry>> rows;
    std::map<Key, Rational> rhs;
    for (int k = 0; k < nk; ++k)
        for (int xexp = window.lo; xexp <= window.hi; ++xexp) {
            const XOp c = comm(xexp, k);
            for (int d = 0; d <= c.order(); ++d)
                for (const auto& t : c.coefficients()[d].terms())
                    for (const auto& et : t.coef.terms())
                        for (int ei = 0; ei < ne; ++ei)
                            rows[{d, t.exp, et.exp + 2 * ei}].emplace_back(col_of(k, xexp, ei), et.coef);
        }
    const XOp lead = commutator(a, XOp::d(target_order));
    for (int d = 0; d <= lead.order(); ++d)
        for (const auto& t : lead.coefficients()[d].terms())
            for (const auto& et : t.coef.terms()) {
                rhs[{d, t.exp, et.exp}] = -et.coef;
                rows[{d, t.exp, et.exp}];
            }
    // Highest D-power equations first: they involve only the top unknowns, so
    // pivot rows stay short and the system is solved nearly triangularly.
    SparseLinearSystem sys(n);
    for (auto r = rows.rbegin(); r != rows.rend(); ++r) {
        auto it = rhs.find(r->first);
        sys.add_equation(r->second, it == rhs.end() ? Rational(0) : it->second);
    }
    out.equations = sys.equations();
    out.rank = sys.rank();
    const auto sol = sys.solve();
    out.consistent = sol.consistent;
    if (!sol.consistent) {
        out.warnings.push_back("no monic operator of this order commutes within the ansatz");
        return out;
    }

    auto to_op = [&](const std::vector<Rational>& v, bool monic) {
        std::vector<std::vector<XLaurent::Term>> terms(target_order + 1);
        for (int k = 0; k < nk; ++k)
            for (int xexp = window.lo; xexp <= window.hi; ++xexp) {
                std::vector<EpsPoly::Term> et;
                for (int ei = 0; ei < ne; ++ei) {
                    const Rational& c = v[col_of(k, xexp, ei)];
                    if (!c.is_zero()) et.push_back({2 * ei, c});
                }
                if (!et.empty()) terms[k].push_back({xexp, EpsPoly::from_terms(std::move(et))});
            }
        std::vector<XLaurent> coeffs;
        for (auto& t : terms) coeffs.push_back(XLaurent::from_terms(std::move(t)));
        if (monic) coeffs[target_order] = XLaurent(1);
        return XOp(std::move(coeffs));
    };
    out.particular = to_op(sol.particular, true);
    for (const auto& kv : sol.kernel) out.rational_basis.push_back(to_op(kv, false));
    out.rational_dimension = static_cast<int>(out.rational_basis.size());

    // Verification by substitution, never trusted from elimination alone.
    out.verified = commutator(a, out.particular).is_zero();
    for (const auto& k : out.rational_basis) out.verified = out.verified && commutator(a, k).is_zero();

    auto touches_edge = [&](const XOp& op) {
        for (int k = 0; k < std::min(nk, op.order() + 1); ++k) {
            const XLaurent& c = op.coefficients()[k];
            if (!c.is_zero() && (c.min_exp() == window.lo || c.max_exp() == window.hi)) return true;
        }
        return false;
    };
    bool edge = touches_edge(out.particular);
    for (const auto& k : out.rational_basis) edge = edge || touches_edge(k);
    if (edge) out.warnings.push_back("solution support touches the window edge; widen the window");

    // Homogeneous part over Q(eps): is it c(eps) I + c'(eps) A?
    bool spanned = true;
    for (const auto& k : out.rational_basis) {
        XOp rest = k;
        if (a.order() < target_order && a.order() > 0) {
            const XLaurent top = rest.coefficient(a.order());
            if (!top.is_constant()) {
                spanned = false;
                break;
            }
            rest -= top * a;
        }
        if (rest.order() > 0 || (!rest.is_zero() && !rest.coefficient(0).is_constant())) spanned = false;
        if (!spanned) break;
    }
    out.spanned_by_identity_and_input = spanned && !out.rational_basis.empty();
    if (out.spanned_by_identity_and_input) {
        out.basis.push_back(XOp::identity());
        bool has_a = false;
        for (const auto& k : out.rational_basis) has_a = has_a || k.order() == a.order();
        if (has_a && a.order() > 0) out.basis.push_back(a);
    } else {
        // Greedy generators: rank over Q(eps) read off at a generic eps.
        std::vector<const XOp*> order;
        for (const auto& k : out.rational_basis) order.push_back(&k);
        std::stable_sort(order.begin(), order.end(), [](const XOp* p, const XOp* q) { return p->order() < q->order(); });
        const Rational generic(13, 7);
        std::map<std::pair<int, int>, int> index;
        SparseLinearSystem probe(nk * nx + 1);
        for (const XOp* k : order) {
            std::vector<SparseLinearSystem::Entry> e;
            const XOp s = substitute_eps(*k, generic);
            for (int d = 0; d <= s.order(); ++d)
                for (const auto& t : s.coefficients()[d].terms())
                    e.emplace_back((nk - 1 - d) * nx + (t.exp - window.lo), t.coef.coefficient(0));
            const int before = probe.rank();
            probe.add_equation(e);
            if (probe.rank() > before) {
                XOp g = *k;
                const XLaurent& lc = g.leading();
                if (lc.is_unit()) g = g.map_coefficients([&](const XLaurent& c) { return c.divide_by_unit(lc); });
                out.basis.push_back(std::move(g));
            }
        }
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

BcResult find_bc_relation(const XOp& a, const XOp& b, int weight_bound, int eps_degree) {
    BcResult res;
    const auto nonzero = commutator(a, b);
    if (!nonzero.is_zero()) {
        for (int k = 0; k <= nonzero.order(); ++k)
            if (!nonzero.coefficients()[k].is_zero()) throw NonCommutingError(k, nonzero.coefficients()[k].str());
    }
    const int wa = a.order();
    const int wb = b.order();
    if (wa <= 0 || wb <= 0) throw std::invalid_argument("find_bc_relation: operators must have positive order");
    if (eps_degree_of(a) == 0 && eps_degree_of(b) == 0) eps_degree = 0;
    const int ne = eps_degree + 1;

    struct Mono {
        int za;
        int wb;
        int weight;
    };
    std::vector<Mono> monos;
    for (int i = 0; i * wa <= weight_bound; ++i)
        for (int j = 0; i * wa + j * wb <= weight_bound; ++j) monos.push_back({i, j, i * wa + j * wb});
    // Rank: weight ascending, then w-degree ascending (so w^3 ranks above z^4).
    std::sort(monos.begin(), monos.end(), [](const Mono& p, const Mono& q) {
        return std::tie(p.weight, p.wb) < std::tie(q.weight, q.wb);
    });
    PowerTable table(a, b);

    std::vector<int> weights;
    for (const auto& m : monos)
        if (weights.empty() || weights.back() != m.weight) weights.push_back(m.weight);
    for (int w : weights) {
        if (w == 0) continue;
        // leader candidates at this weight, best first
        std::vector<std::size_t> leaders;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (monos[i].weight == w) leaders.push_back(i);
        std::reverse(leaders.begin(), leaders.end());
        for (std::size_t li : leaders) {
            // unknowns: every monomial ranked at or below the leader
            const int nm = static_cast<int>(li) + 1;
            const int n = nm * ne;
            SparseLinearSystem sys(n);
            using Key = std::tuple<int, int, int>;
            std::map<Key, std::vector<SparseLinearSystem::Entry>> rows;
            for (int mi = 0; mi < nm; ++mi) {
                const XOp& op = table.product(monos[mi].za, monos[mi].wb);
                for (int d = 0; d <= op.order(); ++d)
                    for (const auto& t : op.coefficients()[d].terms())
                        for (const auto& et : t.coef.terms())
                            for (int e = 0; e < ne; ++e) rows[{d, t.exp, et.exp + e}].emplace_back(mi * ne + e, et.coef);
            }
            for (const auto& [key, entries] : rows) sys.add_equation(entries);
            sys.add_equation({{static_cast<int>(li) * ne, Rational(1)}}, Rational(1));
            for (int e = 1; e < ne; ++e) sys.add_equation({{static_cast<int>(li) * ne + e, Rational(1)}});
            const auto sol = sys.solve();
            if (!sol.consistent) continue;
            BiPoly q;
            for (int mi = 0; mi < nm; ++mi) {
                std::vector<EpsPoly::Term> et;
                for (int e = 0; e < ne; ++e)
                    if (!sol.particular[mi * ne + e].is_zero()) et.push_back({e, sol.particular[mi * ne + e]});
                if (!et.empty()) q.add_term(EpsPoly::from_terms(std::move(et)), monos[mi].za, monos[mi].wb);
            }
            res.found = true;
            res.q = q;
            res.weight = w;
            res.unique = sol.kernel.empty();
            res.verified = eval_poly_at_pair(q, table).is_zero();
            res.message = res.unique ? "unique under the normalization"
                                     : "relation not unique at this weight; free parameters set to zero";
            return res;
        }
    }
    res.message = "no relation within weight bound " + std::to_string(weight_bound);
    return res;
}

std::vector<XLaurent> commutation_system(const XOp& a, const XOp& b) {
    const XOp c = commutator(a, b);
    const int top = std::max(0, a.order() + b.order() - 1);
    std::vector<XLaurent> w(top + 1);
    for (int k = 0; k <= std::min(top, c.order()); ++k) w[k] = c.coefficients()[k];
    return w;
}

}  // namespace commop::pipeline
