#pragma once

/*
 * Exact factorization over the rationals.
 *
 * Univariate: squarefree decomposition, factorization modulo a suitable
 * prime, Hensel lifting past the Landau-Mignotte bound, subset
 * recombination. Multivariate: collapse all variables with a Kronecker
 * substitution, factor the image, recombine subsets of univariate factors
 * whose products pull back and divide the input.
 */

#include <vector>

#include "poly.hpp"

namespace bhc {

struct Factorization {
    // content * prod factors[i]^mult[i] == input, exactly.
    // Each factor is primitive, irreducible over Q, with positive leading
    // (grlex) coefficient; factors are sorted canonically.
    mpq_class content;
    std::vector<std::pair<MultiPoly, int>> factors;

    MultiPoly reconstruct(const std::vector<std::string>& vars) const;
    int num_irreducible_with_multiplicity() const;
};

/// Factor a nonzero univariate integer polynomial.
Factorization factor_univariate(const MultiPoly& g);

/// All rational roots of a nonzero univariate integer polynomial, each once,
/// sorted ascending.
std::vector<Rat> rational_roots(const MultiPoly& g);

/// Factor a nonzero integer polynomial in any number of variables.
Factorization factor_multivariate(const MultiPoly& f);

/// true iff f is non-constant and factors as a single irreducible with
/// multiplicity one. Constants report false.
bool is_irreducible(const MultiPoly& f);

}  // namespace bhc
