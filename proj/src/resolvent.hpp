#pragma once

/*
 * Symmetric-function machinery and resolvent polynomials.
 *
 * For g = a0(T) Y^d + ... of degree d in its main (last) variable, the
 * (k, j)-resolvent is
 *
 *     R(Z) = prod over all k-subsets w of {1..d} of (Z - a0 tau_j(y_i : i in w)),
 *
 * where y_1..y_d are the roots of g and tau_j is the j-th elementary
 * symmetric function. R is monic in Z of degree binom(d, k) with integer
 * polynomial coefficients; its irreducible factors of Z-degree >= 2 are the
 * candidates whose rational roots witness reducible specialisations.
 *
 * R is computed exactly in the splitting algebra of the monicised g
 * (triangular Cauchy-module normal forms), which realises the rewrite of
 * symmetric coordinates in terms of the coefficients without ever leaving
 * the coefficient ring.
 */

#include <vector>

#include "factor.hpp"
#include "poly.hpp"

namespace bhc {

/// Rewrite a symmetric polynomial in y_1..y_d as a polynomial in the
/// elementary symmetric polynomials e_1..e_d (classical Gauss reduction).
/// Throws input_error when the input is not symmetric.
MultiPoly reduce_symmetric(const MultiPoly& p);

/// e_i(y_1..y_d) over the given variable context, the y's sitting at
/// positions first_y..first_y+d-1.
MultiPoly elementary_symmetric(const std::vector<std::string>& vars, size_t first_y, int d, int i);

struct Resolvent {
    int k = 0;
    int j = 0;
    MultiPoly poly;  // in (coefficient vars..., Z); monic in Z of degree C(d, k)
};

/// The (k, j)-resolvent of g; g's last variable is the main variable, any
/// other variables form the coefficient ring. Requires 1 <= j <= k and
/// 2k <= d (k = 1 is always allowed).
Resolvent resolvent(const MultiPoly& g, int k, int j);

struct PomegaCandidate {
    int k = 0;
    int j = 0;
    MultiPoly factor;  // irreducible over Q, Z-degree >= 2
};

/// All irreducible resolvent factors of Z-degree >= 2, over every k <= d_Y/2
/// and j <= k. Requires f irreducible with deg_Y >= 2.
std::vector<PomegaCandidate> pomega_set(const MultiPoly& f);

struct ResolventWitness {
    bool reducible = false;
    int k = 0;
    int j = 0;
    MultiPoly candidate;  // the factor P with P(t, Z) having a rational root
    Rat root;
};

/// If f(t, Y) is reducible, find a candidate with a rational root at t; if it
/// is irreducible, report the refutation. A reducible specialisation with no
/// witness raises internal_error (it would falsify the construction).
ResolventWitness reducible_implies_resolvent_root(const MultiPoly& f, const Rat& t,
                                                  const std::vector<PomegaCandidate>& candidates);
ResolventWitness reducible_implies_resolvent_root(const MultiPoly& f, const Rat& t);

}  // namespace bhc
