#include "detmethod.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace bhc {

namespace {

mpz_class pow_mpz(const mpz_class& b, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// row echelon by Bareiss fraction-free elimination; returns pivot columns
std::vector<int> bareiss_echelon(IntMatrix& M) {
    std::vector<int> pivots;
    mpz_class denom = 1;
    size_t row = 0;
    for (size_t col = 0; col < M.cols && row < M.rows; ++col) {
        size_t piv = row;
        while (piv < M.rows && M.a[piv][col] == 0) ++piv;
        if (piv == M.rows) continue;
        std::swap(M.a[piv], M.a[row]);
        for (size_t i = row + 1; i < M.rows; ++i) {
            for (size_t j = col + 1; j < M.cols; ++j) {
                M.a[i][j] = (M.a[row][col] * M.a[i][j] - M.a[i][col] * M.a[row][j]) / denom;
            }
            M.a[i][col] = 0;
        }
        denom = M.a[row][col];
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

// determinant of a square matrix, fraction-free
mpz_class bareiss_det(IntMatrix M) {
    if (M.rows != M.cols) throw internal_error("determinant of a non-square matrix");
    size_t n = M.rows;
    if (n == 0) return 1;
    mpz_class denom = 1;
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M.a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(M.a[piv], M.a[col]);
            sign = -sign;
        }
        for (size_t i = col + 1; i < n; ++i) {
            for (size_t j = col + 1; j < n; ++j)
                M.a[i][j] = (M.a[col][col] * M.a[i][j] - M.a[i][col] * M.a[col][j]) / denom;
            M.a[i][col] = 0;
        }
        denom = M.a[col][col];
    }
    return sign * M.a[n - 1][n - 1];
}

// basis of the full integer kernel lattice {x in Z^m : A x = 0}, obtained by
// unimodular column reduction (a back-substituted rational basis would only
// span a finite-index sublattice and could miss the smallest vectors)
std::vector<std::vector<mpz_class>> integer_kernel_lattice(const IntMatrix& A) {
    size_t m = A.cols;
    std::vector<std::vector<mpz_class>> W = A.a;
    std::vector<std::vector<mpz_class>> U(m, std::vector<mpz_class>(m, mpz_class(0)));
    for (size_t i = 0; i < m; ++i) U[i][i] = 1;
    auto colsub = [&](size_t c, size_t b, const mpz_class& q) {
        for (auto& row : W) row[c] -= q * row[b];
        for (auto& row : U) row[c] -= q * row[b];
    };
    auto colswap = [&](size_t c, size_t b) {
        if (c == b) return;
        for (auto& row : W) std::swap(row[c], row[b]);
        for (auto& row : U) std::swap(row[c], row[b]);
    };
    size_t c0 = 0;
    for (size_t r = 0; r < A.rows && c0 < m; ++r) {
        for (;;) {
            int best = -1;
            for (size_t c = c0; c < m; ++c)
                if (W[r][c] != 0 && (best < 0 || abs(W[r][c]) < abs(W[r][best])))
                    best = static_cast<int>(c);
            if (best < 0) break;  // this row adds no pivot
            bool leftover = false;
            for (size_t c = c0; c < m; ++c) {
                if (static_cast<int>(c) == best || W[r][c] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), W[r][c].get_mpz_t(), W[r][best].get_mpz_t());
                if (q != 0) colsub(c, best, q);
                if (W[r][c] != 0) leftover = true;
            }
            if (!leftover) {
                colswap(c0, static_cast<size_t>(best));
                ++c0;
                break;
            }
        }
    }
    std::vector<std::vector<mpz_class>> basis;
    for (size_t c = c0; c < m; ++c) {
        std::vector<mpz_class> v(m);
        for (size_t i = 0; i < m; ++i) v[i] = U[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

MultiPoly poly_from_kernel_vector(const std::vector<mpz_class>& v, int M1, int M2,
                                  const std::vector<std::string>& vars) {
    MultiPoly g(vars);
    size_t idx = 0;
    for (int i = M1; i >= 0; --i) {
        for (int j = M2; j >= 0; --j) {
            if (v[idx] != 0)
                g.add_term({i, M1 - i, j, M2 - j}, mpq_class(v[idx]));
            ++idx;
        }
    }
    return g;
}

}  // namespace

std::vector<BiPoint> points_on_curve(const MultiPoly& f, int64_t B1, int64_t B2) {
    if (!bidegree_of(f)) throw input_error("points_on_curve requires a bihomogeneous polynomial");
    std::vector<BiPoint> out;
    auto xs = enumerate_projective_points(B1, 1);
    auto ys = enumerate_projective_points(B2, 1);
    std::vector<mpz_class> pt(4);
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            pt[0] = x[0];
            pt[1] = x[1];
            pt[2] = y[0];
            pt[3] = y[1];
            if (f.eval_int(pt) == 0) out.push_back({x[0], x[1], y[0], y[1]});
        }
    }
    return out;
}

IntMatrix evaluation_matrix(const std::vector<BiPoint>& points, int M1, int M2) {
    if (M1 < 0 || M2 < 0) throw input_error("negative bidegree");
    size_t m = static_cast<size_t>(M1 + 1) * static_cast<size_t>(M2 + 1);
    IntMatrix A = IntMatrix::zero(points.size(), m);
    for (size_t r = 0; r < points.size(); ++r) {
        const BiPoint& p = points[r];
        size_t idx = 0;
        for (int i = M1; i >= 0; --i) {
            mpz_class xpart = pow_mpz(p.x1, i) * pow_mpz(p.x2, M1 - i);
            for (int j = M2; j >= 0; --j) {
                A.a[r][idx++] = xpart * pow_mpz(p.y1, j) * pow_mpz(p.y2, M2 - j);
            }
        }
    }
    return A;
}

size_t rank(const IntMatrix& A) {
    IntMatrix M = A;
    return bareiss_echelon(M).size();
}

std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& A) {
    IntMatrix M = A;
    std::vector<int> pivots = bareiss_echelon(M);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<mpz_class>> basis;
    for (size_t free_col = 0; free_col < A.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<mpq_class> v(A.cols, mpq_class(0));
        v[free_col] = 1;
        for (size_t r = pivots.size(); r-- > 0;) {
            size_t pc = pivots[r];
            mpq_class s = 0;
            for (size_t j = pc + 1; j < A.cols; ++j) {
                if (M.a[r][j] != 0 && v[j] != 0) s += mpq_class(M.a[r][j]) * v[j];
            }
            v[pc] = -s / mpq_class(M.a[r][pc]);
        }
        // scale to a primitive integer vector, first nonzero entry positive
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& q : v) {
            den_lcm = lcm(den_lcm, q.get_den());
            num_gcd = gcd(num_gcd, q.get_num());
        }
        std::vector<mpz_class> w(A.cols);
        for (size_t j = 0; j < A.cols; ++j) {
            mpq_class q = v[j] * mpq_class(den_lcm) / mpq_class(num_gcd);
            if (q.get_den() != 1) throw internal_error("kernel scaling failed");
            w[j] = q.get_num();
        }
        mpz_class g = 0;
        for (const auto& x : w) g = gcd(g, x);
        for (auto& x : w) x /= g;
        for (const auto& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

NormaliseResult normalise_leading(const MultiPoly& f) {
    auto bd = bidegree_of(f);
    if (!bd) throw input_error("normalise_leading requires a bihomogeneous polynomial");
    int d1 = bd->d1, d2 = bd->d2;
    mpz_class Cd = pow_mpz(3, d1 + d2) * (d1 + 1) * (d2 + 1);
    if (d1 > 0) Cd *= pow_mpz(d1, d1);
    if (d2 > 0) Cd *= pow_mpz(d2, d2);

    // candidate unimodular maps: coordinate swaps (height preserving) first,
    // then shears X2 -> X2 + u X1, Y2 -> Y2 + v Y1 with 0 <= u <= d1,
    // 0 <= v <= d2, combined with swaps, in increasing u + v
    struct Cand {
        bool sx, sy;
        long u, v;
    };
    std::vector<Cand> cands;
    for (int s = 0; s < 4; ++s) cands.push_back({(s & 1) != 0, (s & 2) != 0, 0, 0});
    for (long w = 1; w <= static_cast<long>(d1 + d2); ++w)
        for (long u = 0; u <= d1; ++u) {
            long v = w - u;
            if (v < 0 || v > d2) continue;
            for (int s = 0; s < 4; ++s) cands.push_back({(s & 1) != 0, (s & 2) != 0, u, v});
        }

    mpz_class best_c = -1;
    for (const Cand& cd : cands) {
        MultiPoly ft = f;
        if (cd.sx) {
            MultiPoly sw(f.vars());
            for (const auto& [e, c] : ft.terms()) sw.add_term({e[1], e[0], e[2], e[3]}, c);
            ft = sw;
        }
        if (cd.sy) {
            MultiPoly sw(f.vars());
            for (const auto& [e, c] : ft.terms()) sw.add_term({e[0], e[1], e[3], e[2]}, c);
            ft = sw;
        }
        if (cd.u != 0) {
            MultiPoly x2(f.vars());
            x2.add_term({0, 1, 0, 0}, 1);
            x2.add_term({1, 0, 0, 0}, cd.u);
            ft = ft.substitute(1, x2);
        }
        if (cd.v != 0) {
            MultiPoly y2(f.vars());
            y2.add_term({0, 0, 0, 1}, 1);
            y2.add_term({0, 0, 1, 0}, cd.v);
            ft = ft.substitute(3, y2);
        }
        mpq_class c = ft.coeff(Exps{d1, 0, d2, 0});
        if (c == 0) continue;
        mpz_class cz = abs(c.get_num());
        if (cz * Cd >= poly_norm(ft)) {
            NormaliseResult out;
            out.poly = ft;
            out.swap_x = cd.sx;
            out.swap_y = cd.sy;
            out.u = cd.u;
            out.v = cd.v;
            out.c = c.get_num();
            return out;
        }
        if (cz > best_c) best_c = cz;
    }
    throw internal_error("normalise_leading: search exhausted, best |c| = " + best_c.get_str());
}

AuxResult find_auxiliary(const MultiPoly& f, int64_t B1, int64_t B2) {
    auto bd = bidegree_of(f);
    if (!bd) throw input_error("find_auxiliary requires a bihomogeneous polynomial");
    int d1 = bd->d1, d2 = bd->d2;
    if (d1 < 1 || d2 < 1) throw input_error("find_auxiliary requires bidegree >= (1,1)");
    if (!is_irreducible(f)) throw input_error("find_auxiliary requires an irreducible polynomial");

    std::vector<BiPoint> S = points_on_curve(f, B1, B2);

    double logB2 = std::log(static_cast<double>(B2));
    double formula = std::pow(static_cast<double>(d1), 4) * std::pow(static_cast<double>(d2), 3) *
                     std::pow(static_cast<double>(B1), 2.0 / d2) * logB2 * logB2;
    int M1_max = static_cast<int>(std::ceil(10.0 * std::max(formula, 1.0)));
    M1_max = std::max(M1_max, d1 + d2 + 6);

    for (int M1 = 0; M1 <= M1_max; ++M1) {
        // the paper's regime for M2, clamped into [d2, M1]; widen if needed
        std::vector<int> m2s;
        int m2_regime;
        if (B2 >= 3 && logB2 > 0)
            m2_regime = static_cast<int>(std::ceil(M1 / (d1 * logB2)));
        else
            m2_regime = d2;
        m2_regime = std::min(std::max(m2_regime, d2), M1);
        m2s.push_back(m2_regime);
        for (int M2 = 0; M2 <= M1; ++M2)
            if (M2 != m2_regime) m2s.push_back(M2);

        for (int M2 : m2s) {
            IntMatrix A = evaluation_matrix(S, M1, M2);
            auto kernel = kernel_basis(A);
            for (const auto& v : kernel) {
                MultiPoly g = poly_from_kernel_vector(v, M1, M2, f.vars());
                if (g.is_zero()) continue;
                if (!divides(f, g)) {
                    AuxResult out;
                    out.g = g;
                    out.M1 = M1;
                    out.M2 = M2;
                    out.S_size = S.size();
                    out.m = A.cols;
                    out.k = A.cols - kernel.size();
                    return out;
                }
            }
        }
    }
    throw internal_error("auxiliary polynomial sweep exhausted");
}

bool rank_identity_check(const MultiPoly& f, int M1, int M2, int64_t max_cutoff) {
    auto bd = bidegree_of(f);
    if (!bd) throw input_error("rank_identity_check requires a bihomogeneous polynomial");
    if (M1 < bd->d1 || M2 < bd->d2) throw input_error("requires M1 >= d1 and M2 >= d2");
    size_t m = static_cast<size_t>(M1 + 1) * (M2 + 1);
    size_t multiples = static_cast<size_t>(M1 - bd->d1 + 1) * (M2 - bd->d2 + 1);
    size_t target = m - multiples;
    size_t best = 0;
    for (int64_t cutoff : {2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64}) {
        if (cutoff > max_cutoff) break;
        auto S = points_on_curve(f, cutoff, cutoff);
        best = rank(evaluation_matrix(S, M1, M2));
        if (best > target) throw internal_error("rank exceeds the multiple-space bound");
        if (best == target) return true;
    }
    return best == target;
}

BombieriVaalerResult bombieri_vaaler_check(const IntMatrix& A) {
    size_t k = A.rows, m = A.cols;
    if (k >= m) throw input_error("requires k < m");
    if (rank(A) != k) throw input_error("requires full row rank");

    BombieriVaalerResult out;

    // Gram determinant
    IntMatrix G = IntMatrix::zero(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            mpz_class s = 0;
            for (size_t c = 0; c < m; ++c) s += A.a[i][c] * A.a[j][c];
            G.a[i][j] = s;
        }
    out.gram_det = abs(bareiss_det(G));

    // Delta = gcd of all k x k minors (enumeration capped at k <= 6)
    if (k <= 6) {
        out.delta_checked = true;
        mpz_class delta = 0;
        std::vector<int> cols(k);
        std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
            if (pos == k) {
                IntMatrix S = IntMatrix::zero(k, k);
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) S.a[i][j] = A.a[i][cols[j]];
                delta = gcd(delta, bareiss_det(S));
                return delta == 1;  // cannot get smaller
            }
            for (size_t c = start; c < m; ++c) {
                cols[pos] = static_cast<int>(c);
                if (rec(pos + 1, c + 1)) return true;
            }
            return false;
        };
        rec(0, 0);
        out.delta = delta;
    } else {
        out.delta = 1;  // conservative: weakens the bound, never falsifies it
    }

    // qualification: delta^2 |x|_inf^(2(m-k)) <= det(A A^T), exact in integers
    unsigned mk = static_cast<unsigned>(m - k);
    auto qualifies = [&](const mpz_class& norm) {
        mpz_class lhs = out.delta * out.delta * pow_mpz(norm, 2 * mk);
        return lhs <= out.gram_det;
    };

    auto kernel = integer_kernel_lattice(A);
    if (kernel.size() != m - k) throw internal_error("kernel dimension mismatch");

    // exhaustive cutoff via Cramer on an invertible row subset of the basis
    // matrix: coefficients of any qualifying vector are bounded.
    mpz_class Cup = 0;
    {
        // C <= det^(1/(2(m-k))) since delta >= 1
        mpz_class r;
        int exact = mpz_root(r.get_mpz_t(), out.gram_det.get_mpz_t(), 2 * mk);
        Cup = r + (exact ? 0 : 1);
    }
    // pick m-k independent rows of the (m x (m-k)) basis matrix
    IntMatrix Vt = IntMatrix::zero(m - k, m);
    for (size_t i = 0; i < kernel.size(); ++i)
        for (size_t j = 0; j < m; ++j) Vt.a[i][j] = kernel[i][j];
    IntMatrix VtE = Vt;
    std::vector<int> prows = bareiss_echelon(VtE);  // pivot columns = row indices in V
    IntMatrix Msub = IntMatrix::zero(m - k, m - k);
    for (size_t i = 0; i < prows.size(); ++i)
        for (size_t j = 0; j < m - k; ++j) Msub.a[i][j] = kernel[j][prows[i]];
    mpz_class detM = bareiss_det(Msub);
    if (detM == 0) throw internal_error("kernel basis rows not independent");
    // adjugate row sums via cofactor expansion (m - k <= 4 in practice)
    mpz_class Rmax = 0;
    size_t q = m - k;
    for (size_t i = 0; i < q; ++i) {
        mpz_class s = 0;
        for (size_t j = 0; j < q; ++j) {
            IntMatrix C = IntMatrix::zero(q - 1, q - 1);
            size_t ri = 0;
            for (size_t r2 = 0; r2 < q; ++r2) {
                if (r2 == j) continue;
                size_t ci = 0;
                for (size_t c2 = 0; c2 < q; ++c2) {
                    if (c2 == i) continue;
                    C.a[ri][ci++] = Msub.a[r2][c2];
                }
                ++ri;
            }
            s += abs(bareiss_det(C));
        }
        mpz_class bound = s * Cup;
        mpz_class r = bound / abs(detM) + 1;
        if (r > Rmax) Rmax = r;
    }

    // search shells of coefficient vectors by increasing max-norm
    std::vector<mpz_class> x(m);
    std::vector<long> coefs(q);
    long rmax_l = Rmax.fits_slong_p() ? Rmax.get_si() : 1000000;
    for (long shell = 1; shell <= rmax_l; ++shell) {
        bool found = false;
        std::function<void(size_t, bool)> rec = [&](size_t pos, bool sat) {
            if (found) return;
            if (pos == q) {
                if (!sat) return;
                for (size_t c = 0; c < m; ++c) {
                    x[c] = 0;
                    for (size_t i = 0; i < q; ++i) x[c] += coefs[i] * kernel[i][c];
                }
                mpz_class norm = 0;
                bool nonzero = false;
                for (const auto& xi : x) {
                    if (xi != 0) nonzero = true;
                    mpz_class a = abs(xi);
                    if (a > norm) norm = a;
                }
                if (nonzero && qualifies(norm)) found = true;
                return;
            }
            for (long v = -shell; v <= shell; ++v) {
                coefs[pos] = v;
                rec(pos + 1, sat || v == shell || v == -shell);
                if (found) return;
            }
        };
        rec(0, false);
        if (found) {
            out.satisfied = true;
            return out;
        }
    }
    out.satisfied = false;
    return out;
}

}  // namespace bhc
