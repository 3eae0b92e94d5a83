#pragma once

/*
 * The determinant method made explicit: monomial evaluation matrices on the
 * bounded-height points of a bihomogeneous curve, exact integer kernels via
 * fraction-free elimination, and the auxiliary polynomial g (vanishing on
 * every bounded-height zero of f, not divisible by f). No floating point in
 * any rank or kernel computation.
 */

#include <optional>
#include <vector>

#include "count.hpp"
#include "factor.hpp"
#include "poly.hpp"

namespace bhc {

struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<mpz_class>> a;

    static IntMatrix zero(size_t r, size_t c) {
        IntMatrix m;
        m.rows = r;
        m.cols = c;
        m.a.assign(r, std::vector<mpz_class>(c, mpz_class(0)));
        return m;
    }
};

struct BiPoint {
    mpz_class x1, x2, y1, y2;
};

/// Canonical representatives of the points of V(f) in P^1 x P^1 with
/// heights <= (B1, B2), in enumeration order.
std::vector<BiPoint> points_on_curve(const MultiPoly& f, int64_t B1, int64_t B2);

/// One row per point, one column per bidegree-(M1, M2) monomial
/// X1^i X2^(M1-i) Y1^j Y2^(M2-j), (i, j) descending lexicographically.
IntMatrix evaluation_matrix(const std::vector<BiPoint>& points, int M1, int M2);

/// Rank, by fraction-free (Bareiss) elimination.
size_t rank(const IntMatrix& A);

/// Basis of the rational kernel scaled to primitive integer vectors with
/// positive first nonzero entry; one vector per free column, in column order.
std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& A);

struct NormaliseResult {
    MultiPoly poly;  // f after optional coordinate swaps and the shears
                     // X2 -> X2 + u X1, Y2 -> Y2 + v Y1
    bool swap_x = false, swap_y = false;
    long u = 0, v = 0;
    mpz_class c;  // coefficient of X1^d1 Y1^d2 after the substitution
    // points of V(f) at heights (B1, B2) pull back to points of V(poly) at
    // heights ((1+u) B1, (1+v) B2)
};

/// Search an invertible integer substitution making the X1^d1 Y1^d2
/// coefficient large: |c| >= ||f~|| / C_d with
/// C_d = 3^(d1+d2) d1^d1 d2^d2 (d1+1)(d2+1). Swaps are tried before shears
/// so the height scaling stays as small as possible. Throws internal_error
/// when the search range is exhausted (this would contradict the guarantee).
NormaliseResult normalise_leading(const MultiPoly& f);

struct AuxResult {
    MultiPoly g;  // bihomogeneous, vanishes at every point of S, f does not divide g
    int M1 = 0, M2 = 0;
    size_t S_size = 0;
    size_t k = 0, m = 0;  // evaluation-matrix rank and column count
};

/// Sweep bidegrees (M1 increasing, M2 tied to the regime and clamped to
/// [d2, M1], widening when necessary) until a kernel vector not divisible by
/// f appears.
AuxResult find_auxiliary(const MultiPoly& f, int64_t B1, int64_t B2);

/// True iff the evaluation matrix on all curve points up to some height
/// cutoff reaches rank (M1+1)(M2+1) - (M1-d1+1)(M2-d2+1), i.e. the only
/// vanishing forms are the multiples of f. Cutoffs grow up to max_cutoff.
bool rank_identity_check(const MultiPoly& f, int M1, int M2, int64_t max_cutoff = 32);

struct BombieriVaalerResult {
    bool satisfied = false;
    bool delta_checked = false;  // false when k > 6 (minor enumeration capped)
    mpz_class delta;
    mpz_class gram_det;  // det(A A^T)
};

/// Exhaustively search a nonzero integer kernel vector with
/// max-norm <= (delta^-1 sqrt(det(A A^T)))^(1/(m-k)); the lemma asserts one
/// always exists. Requires full row rank and k < m.
BombieriVaalerResult bombieri_vaaler_check(const IntMatrix& A);

}  // namespace bhc
