#include "count.hpp"

#include <algorithm>

namespace bhc {

namespace {

// ceil(n^(1/k)) for n >= 0
mpz_class ceil_kth_root(const mpz_class& n, unsigned k) {
    if (n <= 0) return 0;
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) r += 1;
    return r;
}

// a rational >= |a|^(1/k)
Rat ceil_rat_kth_root(const mpq_class& a, unsigned k) {
    mpq_class v = abs(a);
    if (v == 0) return 0;
    // (p/q)^(1/k) = (p q^(k-1))^(1/k) / q
    mpz_class p = v.get_num(), q = v.get_den();
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k - 1);
    return make_rat(ceil_kth_root(p * qk, k), q);
}

mpz_class pow_mpz(const mpz_class& b, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// enumerate tuples of rationals with H(t_i) <= box[i] for i in [0, upto)
void for_each_tuple(const HeightBox& box, size_t upto,
                    const std::function<void(const std::vector<Rat>&)>& fn) {
    std::vector<Rat> tuple(upto);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == upto) {
            fn(tuple);
            return;
        }
        for_each_rational(box.bounds[i], [&](const Rat& t) {
            tuple[i] = t;
            rec(i + 1);
            return true;
        });
    };
    rec(0);
}

}  // namespace

Rat lagrange_bound(const MultiPoly& g) {
    if (g.is_zero()) throw input_error("lagrange_bound of the zero polynomial");
    int var = -1;
    for (size_t i = 0; i < g.vars().size(); ++i)
        if (g.degree_in(i) > 0) {
            if (var >= 0) throw input_error("lagrange_bound requires a univariate polynomial");
            var = static_cast<int>(i);
        }
    if (var < 0) throw input_error("lagrange_bound requires degree >= 1");
    int d = g.degree_in(var);
    Exps lead(g.vars().size(), 0);
    lead[var] = d;
    if (g.coeff(lead) != 1) throw input_error("lagrange_bound requires a monic polynomial");
    Rat best = 0;
    for (int k = 1; k <= d; ++k) {
        Exps e(g.vars().size(), 0);
        e[var] = d - k;
        const mpq_class& a = g.coeff(e);
        if (a == 0) continue;
        Rat r = ceil_rat_kth_root(a, static_cast<unsigned>(k));
        if (r > best) best = r;
    }
    return 2 * best;
}

RootBox root_box(const MultiPoly& f, const Rat& t) {
    if (f.vars().size() != 2) throw input_error("root_box expects a polynomial in (T, Y)");
    int dY = f.degree_in(1);
    if (dY < 1) throw input_error("root_box: main variable does not occur");
    MultiPoly lead = f.coeff_in_var(1, dY);
    if (!(lead.is_constant() && !lead.is_zero() && lead.terms().begin()->second == 1))
        throw input_error("root_box requires f monic in Y");
    int dT = std::max(f.degree_in(0), 0);
    RootBox box;
    box.denominator = pow_mpz(t.get_den(), dT);
    box.numerator_bound = 2 * (dT + 1) * poly_norm(f) * pow_mpz(height(t), dT);
    return box;
}

CountReport count_affine(const MultiPoly& f, const HeightBox& box) {
    if (f.is_zero()) throw input_error("count_affine of the zero polynomial");
    if (!f.is_integer()) throw input_error("integer coefficients required");
    size_t n = f.vars().size();
    if (box.size() != n) throw input_error("height box arity mismatch");

    size_t last = n - 1;
    int dlast = std::max(f.degree_in(last), 0);
    mpz_class full_fibre = count_rationals(box.bounds[last]);

    CountReport rep;
    rep.has_breakdown = true;
    std::map<std::string, Rat> assign;

    for_each_tuple(box, n - 1, [&](const std::vector<Rat>& tuple) {
        rep.work += 1;
        assign.clear();
        for (size_t i = 0; i + 1 < n; ++i) assign.emplace(f.vars()[i], tuple[i]);
        MultiPoly g = n == 1 ? f : specialise_clear(f, assign);
        if (g.is_zero()) {
            rep.value += full_fibre;
            rep.zero += full_fibre;
            return;
        }
        if (g.is_constant()) return;  // no points on this fibre
        Factorization fac = factor_univariate(g);
        mpz_class cnt = 0;
        size_t gv = 0;
        for (size_t i = 0; i < g.vars().size(); ++i)
            if (g.degree_in(i) > 0) gv = i;
        for (const auto& [h, m] : fac.factors) {
            if (h.total_degree() != 1) continue;
            Exps e1(g.vars().size(), 0), e0(g.vars().size(), 0);
            e1[gv] = 1;
            Rat root = make_rat(-h.coeff(e0).get_num(), h.coeff(e1).get_num());
            if (height(root) <= box.bounds[last]) cnt += 1;
        }
        rep.value += cnt;
        int gd = 0;
        for (size_t i = 0; i < g.vars().size(); ++i) gd = std::max(gd, g.degree_in(i));
        if (n > 1 && gd < dlast)
            rep.degree_drop += cnt;
        else if (fac.num_irreducible_with_multiplicity() <= 1)
            rep.irreducible += cnt;
        else
            rep.reducible += cnt;
    });
    return rep;
}

CountReport count_projective(const MultiPoly& f, int64_t B) {
    if (f.is_zero()) throw input_error("count_projective of the zero polynomial");
    if (!f.is_integer()) throw input_error("integer coefficients required");
    if (!is_homogeneous(f)) throw input_error("count_projective requires a homogeneous polynomial");
    int dim = static_cast<int>(f.vars().size()) - 1;
    if (dim < 1) throw input_error("count_projective needs at least two variables");
    CountReport rep;
    for_each_projective_point(B, dim, [&](const std::vector<mpz_class>& p) {
        rep.work += 1;
        if (f.eval_int(p) == 0) rep.value += 1;
        return true;
    });
    return rep;
}

CountReport count_biprojective(const MultiPoly& f, int64_t B1, int64_t B2) {
    if (f.is_zero()) throw input_error("count_biprojective of the zero polynomial");
    if (!f.is_integer()) throw input_error("integer coefficients required");
    if (!bidegree_of(f)) throw input_error("count_biprojective requires a bihomogeneous polynomial");
    CountReport rep;
    auto xs = enumerate_projective_points(B1, 1);
    auto ys = enumerate_projective_points(B2, 1);
    std::vector<mpz_class> point(4);
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            rep.work += 1;
            point[0] = x[0];
            point[1] = x[1];
            point[2] = y[0];
            point[3] = y[1];
            if (f.eval_int(point) == 0) rep.value += 1;
        }
    }
    return rep;
}

CountReport count_reducible_special(const MultiPoly& f, const HeightBox& box, bool include_zero) {
    if (f.is_zero()) throw input_error("count of the zero polynomial");
    if (!f.is_integer()) throw input_error("integer coefficients required");
    size_t s = box.size();
    size_t n = f.vars().size();
    if (s < 1 || s >= n)
        throw input_error("specialisation box must cover a proper prefix of the variables");

    CountReport rep;
    rep.has_breakdown = true;
    std::map<std::string, Rat> assign;
    for_each_tuple(box, s, [&](const std::vector<Rat>& tuple) {
        rep.work += 1;
        assign.clear();
        for (size_t i = 0; i < s; ++i) assign.emplace(f.vars()[i], tuple[i]);
        MultiPoly h = specialise_clear(f, assign);
        if (h.is_zero()) {
            rep.zero += 1;
            return;
        }
        if (h.is_constant()) {
            rep.degree_drop += 1;
            return;
        }
        Factorization fac = factor_multivariate(h);
        if (fac.num_irreducible_with_multiplicity() >= 2)
            rep.reducible += 1;
        else
            rep.irreducible += 1;
    });
    rep.value = rep.reducible;
    if (include_zero) rep.value += rep.zero;
    return rep;
}

CountReport count_root_special(const MultiPoly& f, int64_t B, bool include_zero,
                               bool relax_leading) {
    if (f.is_zero()) throw input_error("count of the zero polynomial");
    if (!f.is_integer()) throw input_error("integer coefficients required");
    size_t n = f.vars().size();
    if (n < 2) throw input_error("count_root_special expects (Y, T_1..T_n)");
    int dY = f.degree_in(0);
    if (dY < 1) throw input_error("the root variable does not occur");
    if (!f.coeff_in_var(0, dY).is_constant() && !relax_leading)
        throw input_error("leading coefficient in Y is not constant (pass the relaxed flag)");

    HeightBox box(std::vector<int64_t>(n - 1, B));
    CountReport rep;
    rep.has_breakdown = true;
    std::map<std::string, Rat> assign;
    for_each_tuple(box, n - 1, [&](const std::vector<Rat>& tuple) {
        rep.work += 1;
        assign.clear();
        for (size_t i = 0; i < n - 1; ++i) assign.emplace(f.vars()[i + 1], tuple[i]);
        MultiPoly g = specialise_clear(f, assign);
        if (g.is_zero()) {
            rep.zero += 1;
            return;
        }
        if (g.is_constant()) {
            rep.degree_drop += 1;
            return;
        }
        Factorization fac = factor_univariate(g);
        if (fac.num_irreducible_with_multiplicity() >= 2)
            rep.reducible += 1;
        else
            rep.irreducible += 1;
        for (const auto& [h, m] : fac.factors) {
            if (h.total_degree() == 1) {
                rep.value += 1;
                break;
            }
        }
    });
    if (include_zero) rep.value += rep.zero;
    return rep;
}

mpz_class schwartz_zippel_ceiling(const MultiPoly& f, int64_t B) {
    if (f.is_zero()) throw input_error("ceiling of the zero polynomial");
    int d = f.total_degree();
    size_t n = f.vars().size();
    mpz_class cnt = count_rationals(B);
    mpz_class r = d;
    for (size_t i = 1; i < n; ++i) r *= cnt;
    return r;
}

}  // namespace bhc
