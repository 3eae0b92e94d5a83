#pragma once

/*
 * Exact counting of rational zeros of bounded height: affine, projective,
 * on P^1 x P^1, reducible specialisations (S), specialisations with a
 * rational root (R), and the root-bound lemmas backing them.
 */

#include "factor.hpp"
#include "poly.hpp"

namespace bhc {

struct CountReport {
    mpz_class value;  // the counting function's value
    // classification tallies; for count_affine these partition the points by
    // their fibre's type, for S and R they tally the examined tuples
    mpz_class irreducible, reducible, zero, degree_drop;
    bool has_breakdown = false;
    mpz_class work;  // candidates examined (fibres, points or tuples)
};

struct RootBox {
    mpz_class denominator;      // b^{d_T}
    mpz_class numerator_bound;  // 2 (d_T + 1) ||f|| H(t)^{d_T}
};

/// 2 max_k |a_{d-k}|^{1/k} for monic g, the k-th roots rounded up to
/// rationals; every complex root has modulus <= the result.
Rat lagrange_bound(const MultiPoly& g);

/// For f in (T, Y) monic in Y: every rational root y of f(t, Y) can be
/// written y = c / b^{d_T} with |c| <= the numerator bound.
RootBox root_box(const MultiPoly& f, const Rat& t);

/// N_Q(f, B_1..B_n): enumerate the first n-1 coordinates, solve the last.
CountReport count_affine(const MultiPoly& f, const HeightBox& box);

/// N_proj(f, B) over canonical representatives of P^(n-1).
CountReport count_projective(const MultiPoly& f, int64_t B);

/// N_{P^1 x P^1}(f, B1, B2) for bihomogeneous f in (X1, X2, Y1, Y2).
CountReport count_biprojective(const MultiPoly& f, int64_t B1, int64_t B2);

/// S(f, B_1..B_s): tuples (t_1..t_s) making f(t, Y_1..Y_r) reducible.
/// The first box.size() variables are specialised. Zero specialisations are
/// tallied separately and included in the value only when include_zero.
CountReport count_reducible_special(const MultiPoly& f, const HeightBox& box, bool include_zero);

/// R(f, B): tuples (t_1..t_n) for which f(Y, t_1..t_n) has a rational root.
/// The first variable is the root variable. Requires a constant leading
/// coefficient in Y unless relax_leading.
CountReport count_root_special(const MultiPoly& f, int64_t B, bool include_zero = false,
                               bool relax_leading = false);

/// d * count_rationals(B)^(n-1), the trivial ceiling on N_Q(f, B).
mpz_class schwartz_zippel_ceiling(const MultiPoly& f, int64_t B);

}  // namespace bhc
