#include "resolvent.hpp"

#include <algorithm>

namespace bhc {

namespace {

// a = q*c + r with c monic of positive degree in variable v, deg_v(r) < deg_v(c)
void divmod_monic_var(const MultiPoly& a, const MultiPoly& c, size_t v, MultiPoly& q,
                      MultiPoly& r) {
    int m = c.degree_in(v);
    r = a;
    q = MultiPoly(a.vars());
    MultiPoly xpow(a.vars());
    while (!r.is_zero() && r.degree_in(v) >= m) {
        int e = r.degree_in(v);
        MultiPoly lead = r.coeff_in_var(v, e);
        Exps shift(a.vars().size(), 0);
        shift[v] = e - m;
        MultiPoly term(a.vars());
        term.add_term(shift, 1);
        term = term * lead;
        q += term;
        r -= term * c;
    }
}

MultiPoly swap_vars(const MultiPoly& p, size_t i, size_t j) {
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exps f = e;
        std::swap(f[i], f[j]);
        r.add_term(f, c);
    }
    return r;
}

// Splitting algebra of a monic univariate polynomial over a coefficient ring:
// Q[coeff vars][y_1..y_d] modulo the Cauchy modules C_1..C_d, where
// C_1(y_1) = Ghat(y_1) and C_{i+1} = (C_i(.., y_i) - C_i(.., y_{i+1})) / (y_i - y_{i+1}).
// Normal forms have deg(y_i) <= d - i; symmetric elements reduce to scalars.
struct SplittingAlgebra {
    std::vector<std::string> vars;  // coefficient vars, then y_1..y_d
    size_t first_y = 0;
    int d = 0;
    std::vector<MultiPoly> cauchy;  // cauchy[i] monic of degree d-i in y_{i+1}

    MultiPoly reduce(MultiPoly x) const {
        for (;;) {
            int worst = -1;
            for (int i = d - 1; i >= 0; --i) {
                if (x.degree_in(first_y + i) > d - 1 - i) {
                    worst = i;
                    break;
                }
            }
            if (worst < 0) return x;
            MultiPoly q, r;
            divmod_monic_var(x, cauchy[worst], first_y + worst, q, r);
            x = std::move(r);
        }
    }
};

SplittingAlgebra make_splitting_algebra(const std::vector<std::string>& coeff_vars,
                                        const std::vector<MultiPoly>& ghat_coeffs, int d) {
    SplittingAlgebra A;
    A.d = d;
    A.first_y = coeff_vars.size();
    A.vars = coeff_vars;
    for (int i = 1; i <= d; ++i) A.vars.push_back("_y" + std::to_string(i));
    for (const auto& v : coeff_vars)
        if (v.rfind("_y", 0) == 0) throw input_error("variable name collides with internals: " + v);

    // C_1 = Ghat(y_1)
    MultiPoly c1(A.vars);
    for (int m = 0; m <= d; ++m) {
        MultiPoly am = ghat_coeffs[m].with_vars(A.vars);  // coefficient of U^(d-m)
        Exps e(A.vars.size(), 0);
        e[A.first_y] = d - m;
        MultiPoly mono(A.vars);
        mono.add_term(e, 1);
        c1 += mono * am;
    }
    A.cauchy.push_back(c1);
    for (int i = 1; i < d; ++i) {
        const MultiPoly& ci = A.cauchy.back();
        MultiPoly shifted = swap_vars(ci, A.first_y + i - 1, A.first_y + i);
        MultiPoly num = ci - shifted;
        MultiPoly div(A.vars);
        Exps ei(A.vars.size(), 0), ej(A.vars.size(), 0);
        ei[A.first_y + i - 1] = 1;
        ej[A.first_y + i] = 1;
        div.add_term(ei, 1);
        div.add_term(ej, -1);
        MultiPoly q, r;
        divmod_monic_var(num, div, A.first_y + i - 1, q, r);
        if (!r.is_zero()) throw internal_error("cauchy module division not exact");
        A.cauchy.push_back(q);
    }
    return A;
}

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, fn);
        cur.pop_back();
    }
}

mpz_class binomial(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

MultiPoly elementary_symmetric(const std::vector<std::string>& vars, size_t first_y, int d,
                               int i) {
    MultiPoly r(vars);
    if (i == 0) return MultiPoly::constant(vars, 1);
    std::vector<int> cur;
    subsets_rec(d, i, 0, cur, [&](const std::vector<int>& w) {
        Exps e(vars.size(), 0);
        for (int x : w) e[first_y + x] = 1;
        r.add_term(e, 1);
    });
    return r;
}

MultiPoly reduce_symmetric(const MultiPoly& p) {
    size_t d = p.vars().size();
    if (d == 0) throw input_error("reduce_symmetric: no variables");
    for (size_t i = 0; i + 1 < d; ++i) {
        MultiPoly sw(p.vars());
        for (const auto& [e, c] : p.terms()) {
            Exps f = e;
            std::swap(f[i], f[i + 1]);
            sw.add_term(f, c);
        }
        if (sw != p) throw input_error("reduce_symmetric: input is not symmetric");
    }

    std::vector<std::string> evars;
    for (size_t i = 1; i <= d; ++i) evars.push_back("e" + std::to_string(i));
    MultiPoly out(evars);
    MultiPoly work = p;
    while (!work.is_zero()) {
        // lex-leading exponent (variable order as declared)
        const Exps* lead = nullptr;
        const mpq_class* clead = nullptr;
        for (const auto& [e, c] : work.terms()) {
            if (!lead || e > *lead) {
                lead = &e;
                clead = &c;
            }
        }
        Exps lam = *lead;
        for (size_t i = 0; i + 1 < d; ++i)
            if (lam[i] < lam[i + 1])
                throw internal_error("reduce_symmetric: non-dominant leading term");
        mpq_class c = *clead;
        // e-monomial prod e_i^(lam_i - lam_{i+1}) and its expansion in the y's
        Exps emono(d, 0);
        MultiPoly expansion = MultiPoly::constant(p.vars(), 1);
        for (size_t i = 0; i < d; ++i) {
            int32_t diff = lam[i] - (i + 1 < d ? lam[i + 1] : 0);
            emono[i] = diff;
            if (diff > 0)
                expansion =
                    expansion *
                    elementary_symmetric(p.vars(), 0, static_cast<int>(d), static_cast<int>(i) + 1)
                        .pow(diff);
        }
        out.add_term(emono, c);
        work -= expansion.scaled(c);
    }
    return out;
}

Resolvent resolvent(const MultiPoly& g, int k, int j) {
    if (g.is_zero()) throw input_error("resolvent of the zero polynomial");
    if (g.vars().empty()) throw input_error("resolvent needs a main variable");
    size_t yvar = g.vars().size() - 1;
    int d = g.degree_in(yvar);
    if (d < 1) throw input_error("resolvent: main variable does not occur");
    if (k < 1 || j < 1 || j > k || (k > 1 && 2 * k > d) || k > d)
        throw input_error("resolvent: k, j out of range");

    std::vector<std::string> coeff_vars(g.vars().begin(), g.vars().end() - 1);
    // coefficients a_m of Y^(d-m), as polynomials in the coefficient vars
    std::vector<MultiPoly> a(d + 1, MultiPoly(coeff_vars));
    for (int m = 0; m <= d; ++m) a[m] = g.coeff_in_var(yvar, d - m).with_vars(g.vars()).with_vars(
        [&] {
            std::vector<std::string> vs = coeff_vars;
            vs.push_back(g.vars()[yvar]);
            return vs;
        }());
    // drop the main variable from each coefficient
    for (int m = 0; m <= d; ++m) a[m] = a[m].with_vars(coeff_vars);
    const MultiPoly& a0 = a[0];
    if (a0.is_zero()) throw internal_error("resolvent: zero leading coefficient");

    // monicised polynomial: Ghat(U) = U^d + sum_{m>=1} a_m a0^{m-1} U^{d-m}
    std::vector<MultiPoly> ghat(d + 1, MultiPoly(coeff_vars));
    ghat[0] = MultiPoly::constant(coeff_vars, 1);
    MultiPoly a0pow = MultiPoly::constant(coeff_vars, 1);
    for (int m = 1; m <= d; ++m) {
        ghat[m] = a[m] * a0pow;
        a0pow = a0pow * a0;
    }

    SplittingAlgebra A = make_splitting_algebra(coeff_vars, ghat, d);

    // Rhat(Zhat) = prod over k-subsets (Zhat - tau_j(yhat_w)), coefficients in A
    std::vector<MultiPoly> R = {MultiPoly::constant(A.vars, 1)};
    std::vector<int> cur;
    subsets_rec(d, k, 0, cur, [&](const std::vector<int>& w) {
        MultiPoly tau(A.vars);
        std::vector<int> sub;
        subsets_rec(k, j, 0, sub, [&](const std::vector<int>& jw) {
            Exps e(A.vars.size(), 0);
            for (int idx : jw) e[A.first_y + w[idx]] = 1;
            tau.add_term(e, 1);
        });
        tau = A.reduce(tau);
        std::vector<MultiPoly> next(R.size() + 1, MultiPoly(A.vars));
        for (size_t t = 0; t < R.size(); ++t) {
            next[t + 1] += R[t];
            next[t] -= A.reduce(tau * R[t]);
        }
        R = std::move(next);
    });

    mpz_class C = binomial(d, k);
    if (mpz_class(static_cast<long>(R.size()) - 1) != C)
        throw internal_error("resolvent: degree bookkeeping failed");

    // coefficients must be scalars in the algebra; unscale by a0^((j-1)(C-t))
    std::vector<std::string> outvars = coeff_vars;
    for (const auto& v : outvars)
        if (v == "Z") throw input_error("variable name Z is reserved for the resolvent");
    outvars.push_back("Z");
    MultiPoly out(outvars);
    size_t zvar = outvars.size() - 1;
    for (size_t t = 0; t < R.size(); ++t) {
        for (int i = 0; i < d; ++i)
            if (R[t].degree_in(A.first_y + i) > 0)
                throw internal_error("resolvent: coefficient not symmetric");
        MultiPoly coef = R[t].with_vars(coeff_vars);
        if (j > 1) {
            long pw = static_cast<long>((j - 1) * (C.get_si() - static_cast<long>(t)));
            if (pw > 0) {
                MultiPoly den = a0.pow(static_cast<int>(pw));
                if (!divides(den, coef))
                    throw internal_error("resolvent: leading-coefficient clearing failed");
                coef = exact_divide(den, coef);
            }
        }
        for (const auto& [e, c] : coef.terms()) {
            Exps f(outvars.size(), 0);
            for (size_t i = 0; i < coeff_vars.size(); ++i) f[i] = e[i];
            f[zvar] = static_cast<int32_t>(t);
            out.add_term(f, c);
        }
    }
    return {k, j, out};
}

std::vector<PomegaCandidate> pomega_set(const MultiPoly& f) {
    if (f.is_zero()) throw input_error("pomega_set of the zero polynomial");
    size_t yvar = f.vars().size() - 1;
    int dy = f.degree_in(yvar);
    if (dy < 2) throw input_error("pomega_set requires degree >= 2 in the main variable");
    if (!is_irreducible(f)) throw input_error("pomega_set requires an irreducible polynomial");

    std::vector<PomegaCandidate> out;
    for (int k = 1; 2 * k <= dy; ++k) {
        for (int j = 1; j <= k; ++j) {
            Resolvent R = resolvent(f, k, j);
            Factorization fac = factor_multivariate(R.poly);
            size_t zvar = R.poly.vars().size() - 1;
            for (const auto& [h, m] : fac.factors) {
                if (h.degree_in(zvar) >= 2) out.push_back({k, j, h});
            }
        }
    }
    return out;
}

ResolventWitness reducible_implies_resolvent_root(const MultiPoly& f, const Rat& t,
                                                  const std::vector<PomegaCandidate>& candidates) {
    size_t yvar = f.vars().size() - 1;
    size_t tvar = 0;
    if (f.vars().size() != 2) throw input_error("expected a polynomial in (T, Y)");
    int dy = f.degree_in(yvar);
    MultiPoly a0 = f.coeff_in_var(yvar, dy);
    if (a0.eval_partial({{tvar, t}}).is_zero())
        throw input_error("leading coefficient vanishes at t");

    const std::string& tname = f.vars()[tvar];
    MultiPoly spec = specialise_clear(f, {{tname, t}});
    Factorization fac = factor_univariate(spec);
    ResolventWitness w;
    w.reducible = fac.num_irreducible_with_multiplicity() >= 2;
    if (!w.reducible) return w;

    for (const auto& cand : candidates) {
        MultiPoly pt = specialise_clear(cand.factor, {{tname, t}});
        if (pt.is_constant()) continue;
        auto roots = rational_roots(pt);
        if (!roots.empty()) {
            w.k = cand.k;
            w.j = cand.j;
            w.candidate = cand.factor;
            w.root = roots.front();
            return w;
        }
    }
    throw internal_error("reducible specialisation without a resolvent witness");
}

ResolventWitness reducible_implies_resolvent_root(const MultiPoly& f, const Rat& t) {
    return reducible_implies_resolvent_root(f, t, pomega_set(f));
}

}  // namespace bhc
