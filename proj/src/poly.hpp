#pragma once

/*
 * Sparse multivariate polynomials with exact rational coefficients,
 * and the structural transforms used throughout: specialisation with
 * denominator clearing, homogenisation, Kronecker substitution, the
 * Y -> T^E + Y shift, and exact divisibility.
 *
 * Terms are kept in a map ordered by graded lexicographic order (total
 * degree first, then left-to-right on the declared variable order),
 * largest term first, so iteration and printing are canonical.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"

namespace bhc {

using Exps = std::vector<int32_t>;

// graded lex, reversed so that map.begin() is the leading term
struct GrlexGreater {
    bool operator()(const Exps& a, const Exps& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Exps, mpq_class, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const mpq_class& c);
    static MultiPoly variable(std::vector<std::string> vars, size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_integer() const;  // all coefficients have denominator 1

    int var_index(const std::string& name) const;  // -1 if absent

    void add_term(const Exps& e, const mpq_class& c);
    const mpq_class& coeff(const Exps& e) const;  // 0 if absent

    int total_degree() const;            // -1 for the zero polynomial
    int degree_in(size_t var) const;     // -1 for the zero polynomial

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const mpq_class& c) const;
    MultiPoly pow(int e) const;

    // coefficient of var^k, as a polynomial in the same variable context
    MultiPoly coeff_in_var(size_t var, int k) const;
    MultiPoly derivative(size_t var) const;

    /// Substitute a subset of variables by rationals; result keeps the full
    /// variable context (substituted variables appear with exponent 0).
    MultiPoly eval_partial(const std::map<size_t, Rat>& assignment) const;
    /// Substitute one variable by a polynomial over the same context.
    MultiPoly substitute(size_t var, const MultiPoly& value) const;

    mpq_class eval(const std::vector<Rat>& point) const;
    mpz_class eval_int(const std::vector<mpz_class>& point) const;

    /// Same polynomial over a new variable list; every old variable must map
    /// to a new one by name, or be absent from all terms.
    MultiPoly with_vars(const std::vector<std::string>& newvars) const;

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// max(2, max |coefficient|) of an integer polynomial.
mpz_class poly_norm(const MultiPoly& f);

/// gcd of the integer coefficients (0 for the zero polynomial).
mpz_class int_content(const MultiPoly& f);

/// Largest c > 0 with f = c * (integer primitive polynomial); 0 for f = 0.
mpq_class rational_content(const MultiPoly& f);

/// f / rational_content(f): primitive integer polynomial, sign preserved.
MultiPoly primitive_part_keep_sign(const MultiPoly& f);

/// Primitive integer polynomial with positive leading (grlex) coefficient.
MultiPoly primitive_part_canonical(const MultiPoly& f);

/// Specialise a subset of variables at rational points, clear denominators,
/// divide by the content: the primitive integer polynomial proportional to
/// the raw substitution by a positive rational. Result drops the substituted
/// variables from the context.
MultiPoly specialise_clear(const MultiPoly& f, const std::map<std::string, Rat>& assignment);

/// U^d f(X1/U, ..., Xn/U) for d = total degree; newvar is appended last.
MultiPoly homogenise(const MultiPoly& f, const std::string& newvar);

struct BiDegree {
    int d1 = 0;
    int d2 = 0;
};

struct BihomResult {
    MultiPoly poly;  // in X1, X2, Y1, Y2
    BiDegree bidegree;
};

/// X2^dX Y2^dY f(X1/X2, Y1/Y2) for bivariate f (first var -> X, second -> Y).
BihomResult bihomogenise(const MultiPoly& f);

/// Bidegree of a bihomogeneous polynomial in (X1,X2,Y1,Y2); nullopt if the
/// polynomial is not bihomogeneous.
std::optional<BiDegree> bidegree_of(const MultiPoly& f);

bool is_homogeneous(const MultiPoly& f);

struct KroneckerResult {
    MultiPoly poly;
    int64_t base = 0;  // a = 1 + max degree over the collapsed variables
};

/// Collapse vars[keep..] into a single variable Z, Z^(a^i) per position.
/// The collapsed variable keeps the name of the first collapsed variable.
KroneckerResult kronecker(const MultiPoly& f, size_t keep);

/// Undo the collapse: rewrite exponents of the collapsed variable in base a
/// into r variables (named after `names`). Fails (nullopt) when an exponent
/// has a digit beyond position r-1.
std::optional<MultiPoly> inverse_kronecker(const MultiPoly& g, size_t collapsed_var,
                                           int64_t base, int r,
                                           const std::vector<std::string>& names);

/// f(T, T^E + Y) for bivariate f in (T, Y).
MultiPoly shift_transform(const MultiPoly& f, int64_t E);

/// true iff g = f * q for some polynomial q with rational coefficients.
bool divides(const MultiPoly& f, const MultiPoly& g);

/// Exact quotient g / f; throws internal_error when f does not divide g.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Parse the CLI polynomial grammar: integer literals, identifiers,
/// + - * ^, parentheses. Throws input_error with an offset on bad input.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace bhc
