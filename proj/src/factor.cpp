#include "factor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace bhc {

namespace {

// ---------------------------------------------------------------------------
// dense univariate polynomials over Z, little endian, normalized (empty = 0)

using ZP = std::vector<mpz_class>;

void zp_norm(ZP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZP& f) { return static_cast<int>(f.size()) - 1; }

ZP zp_mul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_norm(r);
    return r;
}

ZP zp_sub(const ZP& a, const ZP& b) {
    ZP r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_norm(r);
    return r;
}

ZP zp_scale(const ZP& a, const mpz_class& c) {
    if (c == 0) return {};
    ZP r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZP zp_derivative(const ZP& f) {
    if (f.size() <= 1) return {};
    ZP r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<long>(i);
    zp_norm(r);
    return r;
}

mpz_class zp_content(const ZP& f) {
    mpz_class g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZP zp_primitive(const ZP& f, bool positive_lc) {
    if (f.empty()) return f;
    mpz_class c = zp_content(f);
    if (positive_lc && f.back() < 0) c = -c;
    ZP r = f;
    for (auto& x : r) x /= c;
    return r;
}

// exact quotient a / b over Z; nullopt when b does not divide a in Z[x]
std::optional<ZP> zp_exact_div(const ZP& a, const ZP& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return ZP{};
    if (a.size() < b.size()) return std::nullopt;
    ZP r = a;
    ZP q(a.size() - b.size() + 1, mpz_class(0));
    const mpz_class& lb = b.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        mpz_class& lead = r[k + b.size() - 1];
        if (lead == 0) continue;
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
        if (rr != 0) return std::nullopt;
        q[k] = qq;
        for (size_t i = 0; i < b.size(); ++i) r[k + i] -= qq * b[i];
    }
    for (const auto& c : r)
        if (c != 0) return std::nullopt;
    zp_norm(q);
    return q;
}

ZP zp_exact_div_checked(const ZP& a, const ZP& b) {
    auto q = zp_exact_div(a, b);
    if (!q) throw internal_error("exact univariate division failed");
    return *q;
}

// pseudo-remainder: some lc(b)-power multiple of a reduced below deg b
ZP zp_prem(ZP a, const ZP& b) {
    int db = zp_deg(b);
    const mpz_class& lb = b.back();
    while (zp_deg(a) >= db && !a.empty()) {
        int k = zp_deg(a) - db;
        mpz_class la = a.back();
        ZP shifted(k + b.size(), mpz_class(0));
        for (size_t i = 0; i < b.size(); ++i) shifted[k + i] = la * b[i];
        a = zp_sub(zp_scale(a, lb), shifted);
    }
    return a;
}

// gcd via primitive PRS; result primitive with positive leading coefficient
ZP zp_gcd(ZP a, ZP b) {
    if (a.empty()) return zp_primitive(b, true);
    if (b.empty()) return zp_primitive(a, true);
    a = zp_primitive(a, true);
    b = zp_primitive(b, true);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZP r = zp_prem(a, b);
        a = std::move(b);
        b = zp_primitive(r, true);
    }
    return zp_primitive(a, true);
}

// Yun's squarefree decomposition of a primitive polynomial with lc > 0
std::vector<std::pair<ZP, int>> zp_squarefree(const ZP& f) {
    std::vector<std::pair<ZP, int>> out;
    if (zp_deg(f) < 1) return out;
    ZP fp = zp_derivative(f);
    ZP g = zp_gcd(f, fp);
    ZP c = zp_exact_div_checked(f, g);
    ZP d = zp_sub(zp_exact_div_checked(fp, g), zp_derivative(c));
    for (int i = 1; zp_deg(c) >= 1; ++i) {
        ZP a = zp_gcd(c, d);
        if (zp_deg(a) >= 1) out.emplace_back(a, i);
        c = zp_exact_div_checked(c, a);
        d = zp_sub(zp_exact_div_checked(d, a), zp_derivative(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over F_p (p odd prime < 2^31)

struct Fp {
    uint64_t p = 0;
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
};

using FP = std::vector<uint64_t>;

void fp_norm(FP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FP& f) { return static_cast<int>(f.size()) - 1; }

FP fp_mul(const Fp& F, const FP& a, const FP& b) {
    if (a.empty() || b.empty()) return {};
    FP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        unsigned __int128 ai = a[i];
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint64_t>((ai * b[j] + r[i + j]) % F.p);
    }
    fp_norm(r);
    return r;
}

FP fp_rem(const Fp& F, FP a, const FP& b) {
    int db = fp_deg(b);
    uint64_t ilb = F.inv(b.back());
    while (fp_deg(a) >= db) {
        uint64_t c = F.mul(a.back(), ilb);
        int k = fp_deg(a) - db;
        for (int i = 0; i <= db; ++i) a[k + i] = F.sub(a[k + i], F.mul(c, b[i]));
        fp_norm(a);
    }
    return a;
}

// a = q*b + r
void fp_divmod(const Fp& F, const FP& a, const FP& b, FP& q, FP& r) {
    r = a;
    int db = fp_deg(b);
    q.clear();
    if (fp_deg(r) < db) return;
    uint64_t ilb = F.inv(b.back());
    q.assign(fp_deg(r) - db + 1, 0);
    while (fp_deg(r) >= db) {
        uint64_t c = F.mul(r.back(), ilb);
        int k = fp_deg(r) - db;
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[k + i] = F.sub(r[k + i], F.mul(c, b[i]));
        fp_norm(r);
    }
    fp_norm(q);
}

FP fp_monic(const Fp& F, FP a) {
    if (a.empty()) return a;
    uint64_t il = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, il);
    return a;
}

FP fp_gcd(const Fp& F, FP a, FP b) {
    while (!b.empty()) {
        FP r = fp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

FP fp_derivative(const Fp& F, const FP& f) {
    if (f.size() <= 1) return {};
    FP r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(f[i], i % F.p);
    fp_norm(r);
    return r;
}

FP fp_from_zp(const Fp& F, const ZP& f) {
    FP r(f.size());
    mpz_class p(static_cast<unsigned long>(F.p));
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_class m = f[i] % p;
        if (m < 0) m += p;
        r[i] = m.get_ui();
    }
    fp_norm(r);
    return r;
}

FP fp_xpow_mod(const Fp& F, uint64_t e, const FP& u) {
    FP r = {1};
    FP x = fp_rem(F, FP{0, 1}, u);
    while (e) {
        if (e & 1) r = fp_rem(F, fp_mul(F, r, x), u);
        x = fp_rem(F, fp_mul(F, x, x), u);
        e >>= 1;
    }
    return r;
}

// null space basis (column vectors) of an n x n matrix over F_p
std::vector<std::vector<uint64_t>> fp_nullspace(const Fp& F, std::vector<std::vector<uint64_t>> m) {
    size_t n = m.size();
    std::vector<int> pivot_col_of_row(n, -1);
    std::vector<bool> col_is_pivot(n, false);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        uint64_t il = F.inv(m[row][col]);
        for (size_t j = 0; j < n; ++j) m[row][j] = F.mul(m[row][j], il);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            uint64_t c = m[i][col];
            for (size_t j = 0; j < n; ++j) m[i][j] = F.sub(m[i][j], F.mul(c, m[row][j]));
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        col_is_pivot[col] = true;
        ++row;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (col_is_pivot[free_col]) continue;
        std::vector<uint64_t> v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < row; ++r) {
            int pc = pivot_col_of_row[r];
            if (pc >= 0) v[pc] = F.sub(0, m[r][free_col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct BerlekampData {
    FP u;  // monic squarefree mod p
    std::vector<std::vector<uint64_t>> basis;
};

BerlekampData berlekamp_basis(const Fp& F, const FP& u) {
    int n = fp_deg(u);
    FP xp = fp_xpow_mod(F, F.p, u);
    std::vector<FP> rows(n);
    rows[0] = {1};
    for (int i = 1; i < n; ++i) rows[i] = fp_rem(F, fp_mul(F, rows[i - 1], xp), u);
    // N[k][j] = coeff_k(x^{jp} mod u) - delta_{kj};  null vectors v satisfy v(x)^p = v(x)
    std::vector<std::vector<uint64_t>> N(n, std::vector<uint64_t>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k <= fp_deg(rows[j]); ++k) N[k][j] = rows[j][k];
    for (int k = 0; k < n; ++k) N[k][k] = F.sub(N[k][k], 1);
    return {u, fp_nullspace(F, N)};
}

std::vector<FP> berlekamp_split(const Fp& F, const BerlekampData& bd) {
    size_t r = bd.basis.size();
    std::vector<FP> factors = {bd.u};
    if (r <= 1) return factors;
    for (const auto& vraw : bd.basis) {
        if (factors.size() >= r) break;
        FP v(vraw.begin(), vraw.end());
        fp_norm(v);
        if (fp_deg(v) < 1) continue;  // the constant vector of the subalgebra
        std::vector<FP> next;
        for (auto& w : factors) {
            if (fp_deg(w) <= 1 || factors.size() >= r) {
                next.push_back(w);
                continue;
            }
            FP cur = w;
            for (uint64_t s = 0; s < F.p && fp_deg(cur) >= 1; ++s) {
                FP vs = v;
                vs[0] = F.sub(vs[0], s);
                fp_norm(vs);
                if (vs.empty()) continue;
                FP g = fp_gcd(F, cur, vs);
                if (fp_deg(g) >= 1 && fp_deg(g) < fp_deg(cur)) {
                    next.push_back(g);
                    FP q, rem;
                    fp_divmod(F, cur, g, q, rem);
                    cur = q;
                }
            }
            if (fp_deg(cur) >= 1) next.push_back(cur);
        }
        factors = std::move(next);
    }
    for (auto& f : factors) f = fp_monic(F, f);
    return factors;
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over Z/m (m a power of p), coefficients [0, m)

using MP = std::vector<mpz_class>;

void mp_norm(MP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

MP mp_reduce(const ZP& f, const mpz_class& m) {
    MP r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    mp_norm(r);
    return r;
}

MP mp_mul(const MP& a, const MP& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    MP r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c %= m;
    mp_norm(r);
    return r;
}

MP mp_add(const MP& a, const MP& b, const mpz_class& m) {
    MP r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % m;
    mp_norm(r);
    return r;
}

MP mp_sub(const MP& a, const MP& b, const mpz_class& m) {
    MP r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] = (r[i] - b[i]) % m;
        if (r[i] < 0) r[i] += m;
    }
    mp_norm(r);
    return r;
}

MP mp_scale(const MP& a, const mpz_class& c, const mpz_class& m) {
    MP r = a;
    for (auto& x : r) {
        x = (x * c) % m;
        if (x < 0) x += m;
    }
    mp_norm(r);
    return r;
}

// division by a monic divisor over Z/m
void mp_divmod_monic(const MP& a, const MP& b, const mpz_class& m, MP& q, MP& r) {
    r = a;
    int db = static_cast<int>(b.size()) - 1;
    q.clear();
    if (static_cast<int>(r.size()) - 1 < db) return;
    q.assign(r.size() - db, mpz_class(0));
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        if (static_cast<int>(r.size()) - 1 != k + db) continue;
        mpz_class c = r.back();
        q[k] = c;
        for (int i = 0; i <= db; ++i) {
            r[k + i] = (r[k + i] - c * b[i]) % m;
            if (r[k + i] < 0) r[k + i] += m;
        }
        mp_norm(r);
    }
    mp_norm(q);
}

ZP mp_balanced(const MP& f, const mpz_class& m) {
    ZP r(f.size());
    mpz_class half = m / 2;
    for (size_t i = 0; i < f.size(); ++i) r[i] = (f[i] > half) ? mpz_class(f[i] - m) : f[i];
    zp_norm(r);
    return r;
}

// extended gcd in F_p[x] for coprime a, b: s*a + t*b = 1
void fp_ext_gcd(const Fp& F, const FP& a, const FP& b, FP& s, FP& t) {
    FP r0 = a, r1 = b;
    FP s0 = {1}, s1 = {};
    FP t0 = {}, t1 = {1};
    auto combine = [&](const FP& x0, const FP& x1, const FP& q) {
        FP qx = fp_mul(F, q, x1);
        FP r = x0;
        if (qx.size() > r.size()) r.resize(qx.size(), 0);
        for (size_t i = 0; i < qx.size(); ++i) r[i] = F.sub(r[i], qx[i]);
        fp_norm(r);
        return r;
    };
    while (!r1.empty()) {
        FP q, rem;
        fp_divmod(F, r0, r1, q, rem);
        FP s2 = combine(s0, s1, q);
        FP t2 = combine(t0, t1, q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (fp_deg(r0) != 0) throw internal_error("hensel: modular factors not coprime");
    uint64_t il = F.inv(r0[0]);
    s = s0;
    t = t0;
    for (auto& c : s) c = F.mul(c, il);
    for (auto& c : t) c = F.mul(c, il);
}

MP mp_from_fp(const FP& f) { return MP(f.begin(), f.end()); }

// Quadratic Hensel lift of the coprime monic pair (G0, H0), G0*H0 = F mod p,
// to F = G*H mod M where M = p^(2^j). F is given mod M and is monic.
void hensel_pair(const MP& F_modM, const MP& G0, const MP& H0, const Fp& Fld,
                 const mpz_class& M, MP& G, MP& H) {
    FP g0(G0.size()), h0(H0.size());
    for (size_t i = 0; i < G0.size(); ++i) g0[i] = mpz_class(G0[i] % static_cast<long>(Fld.p)).get_ui();
    for (size_t i = 0; i < H0.size(); ++i) h0[i] = mpz_class(H0[i] % static_cast<long>(Fld.p)).get_ui();
    fp_norm(g0);
    fp_norm(h0);
    FP s0, t0;
    fp_ext_gcd(Fld, g0, h0, s0, t0);

    mpz_class q(static_cast<unsigned long>(Fld.p));
    G = G0;
    H = H0;
    MP S = mp_from_fp(s0), T = mp_from_fp(t0);
    while (q < M) {
        mpz_class q2 = q * q;
        MP Fq = F_modM;
        for (auto& c : Fq) c %= q2;
        mp_norm(Fq);
        // E = (F - G*H)/q mod q
        MP D = mp_sub(Fq, mp_mul(G, H, q2), q2);
        MP E(D.size());
        for (size_t i = 0; i < D.size(); ++i) {
            if (D[i] % q != 0) throw internal_error("hensel drift");
            E[i] = (D[i] / q) % q;
        }
        mp_norm(E);
        MP TE = mp_mul(T, E, q);
        MP lam, dG;
        mp_divmod_monic(TE, G, q, lam, dG);
        MP dH = mp_add(mp_mul(S, E, q), mp_mul(lam, H, q), q);
        auto bump = [&](MP& X, const MP& dX) {
            if (dX.size() > X.size()) X.resize(dX.size(), mpz_class(0));
            for (size_t i = 0; i < dX.size(); ++i) X[i] = (X[i] + q * dX[i]) % q2;
            mp_norm(X);
        };
        bump(G, dG);
        bump(H, dH);
        // lift the Bezout pair
        MP one = {mpz_class(1)};
        MP B = mp_sub(one, mp_add(mp_mul(S, G, q2), mp_mul(T, H, q2), q2), q2);
        MP Bq(B.size());
        for (size_t i = 0; i < B.size(); ++i) {
            if (B[i] % q != 0) throw internal_error("hensel bezout drift");
            Bq[i] = (B[i] / q) % q;
        }
        mp_norm(Bq);
        MP SB = mp_mul(S, Bq, q);
        MP mu, ds;
        mp_divmod_monic(SB, H, q, mu, ds);
        MP dt = mp_add(mp_mul(T, Bq, q), mp_mul(mu, G, q), q);
        bump(S, ds);
        bump(T, dt);
        q = q2;
    }
}

void hensel_tree(const MP& F_modM, const std::vector<FP>& factors, size_t lo, size_t hi,
                 const Fp& Fld, const mpz_class& M, std::vector<MP>& out) {
    if (hi - lo == 1) {
        out.push_back(F_modM);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FP g0 = {1}, h0 = {1};
    for (size_t i = lo; i < mid; ++i) g0 = fp_mul(Fld, g0, factors[i]);
    for (size_t i = mid; i < hi; ++i) h0 = fp_mul(Fld, h0, factors[i]);
    MP G, H;
    hensel_pair(F_modM, mp_from_fp(g0), mp_from_fp(h0), Fld, M, G, H);
    hensel_tree(G, factors, lo, mid, Fld, M, out);
    hensel_tree(H, factors, mid, hi, Fld, M, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus

// enumerate s-subsets of `active`, skipping duplicate sub-multisets; `items`
// gives the comparison key. Returns true when `fn` accepted a subset.
bool for_each_submultiset(const std::vector<int>& active,
                          const std::function<bool(const std::vector<int>&)>& eq_prev,
                          size_t s, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(s);
    std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
        if (pos == s) {
            std::vector<int> subset(s);
            for (size_t i = 0; i < s; ++i) subset[i] = active[idx[i]];
            return fn(subset);
        }
        for (size_t i = start; i < active.size(); ++i) {
            if (i > start) {
                std::vector<int> pair = {active[i - 1], active[i]};
                if (eq_prev(pair)) continue;  // same value as the skipped previous element
            }
            idx[pos] = static_cast<int>(i);
            if (rec(pos + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

uint64_t next_prime_after(uint64_t p) {
    mpz_class z(static_cast<unsigned long>(p)), n;
    mpz_nextprime(n.get_mpz_t(), z.get_mpz_t());
    return n.get_ui();
}

// factor a primitive squarefree polynomial with positive leading coefficient
std::vector<ZP> zassenhaus_squarefree(const ZP& u) {
    int n = zp_deg(u);
    if (n <= 0) return {};
    if (n == 1) return {u};
    if (n == 2) {
        const mpz_class &a = u[2], &b = u[1], &c = u[0];
        mpz_class disc = b * b - 4 * a * c;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            auto linear_from_root = [](const mpz_class& num, const mpz_class& den) {
                Rat r = make_rat(num, den);
                return ZP{mpz_class(-r.get_num()), mpz_class(r.get_den())};
            };
            return {linear_from_root(-b + s, 2 * a), linear_from_root(-b - s, 2 * a)};
        }
        return {u};
    }

    // prime selection: fewest modular factors among a few usable primes
    const mpz_class& lc = u.back();
    Fp best{0};
    BerlekampData best_bd;
    int usable = 0;
    for (uint64_t p = 3; p < 100000; p = next_prime_after(p)) {
        if (mpz_class(lc % mpz_class(static_cast<unsigned long>(p))) == 0) continue;
        Fp F{p};
        FP up = fp_monic(F, fp_from_zp(F, u));
        if (fp_deg(up) != n) continue;
        if (fp_deg(fp_gcd(F, up, fp_derivative(F, up))) != 0) continue;
        BerlekampData bd = berlekamp_basis(F, up);
        if (best.p == 0 || bd.basis.size() < best_bd.basis.size()) {
            best = F;
            best_bd = std::move(bd);
        }
        if (++usable >= 3 || best_bd.basis.size() == 1) break;
    }
    if (best.p == 0) throw internal_error("no usable prime for factorization");
    if (best_bd.basis.size() == 1) return {u};

    std::vector<FP> modular = berlekamp_split(best, best_bd);
    std::sort(modular.begin(), modular.end());

    // lift past twice the Landau-Mignotte bound for lc-corrected factors
    mpz_class norm2sq = 0;
    for (const auto& c : u) norm2sq += c * c;
    mpz_class norm2;
    mpz_sqrt(norm2.get_mpz_t(), norm2sq.get_mpz_t());
    norm2 += 1;
    mpz_class target = 2 * (mpz_class(1) << n) * norm2 * abs(lc) + 1;
    mpz_class M(static_cast<unsigned long>(best.p));
    while (M < target) M = M * M;

    mpz_class lcinv;
    if (!mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t()))
        throw internal_error("leading coefficient not invertible");
    MP Fmod = mp_scale(mp_reduce(u, M), lcinv, M);

    std::vector<MP> lifted;
    hensel_tree(Fmod, modular, 0, modular.size(), best, M, lifted);

    std::vector<ZP> result;
    ZP rem = u;
    std::vector<int> active(lifted.size());
    std::iota(active.begin(), active.end(), 0);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        MP prod = mp_reduce({rem.back()}, M);
        for (int idx : subset) prod = mp_mul(prod, lifted[idx], M);
        ZP cand = zp_primitive(mp_balanced(prod, M), true);
        if (zp_deg(cand) < 1) return false;
        auto q = zp_exact_div(rem, cand);
        if (!q) return false;
        result.push_back(cand);
        rem = zp_primitive(*q, true);
        return true;
    };
    auto eq_prev = [&](const std::vector<int>& pair) {
        return lifted[pair[0]] == lifted[pair[1]];
    };

    while (!active.empty()) {
        bool found = false;
        for (size_t s = 1; s <= active.size() && !found; ++s) {
            found = for_each_submultiset(active, eq_prev, s, [&](const std::vector<int>& subset) {
                if (!try_subset(subset)) return false;
                std::vector<int> next;
                size_t k = 0;
                for (int idx : active) {
                    if (k < subset.size() && idx == subset[k]) {
                        ++k;
                        continue;
                    }
                    next.push_back(idx);
                }
                active = std::move(next);
                return true;
            });
        }
        if (!found) throw internal_error("recombination failed to cover all modular factors");
    }
    if (zp_deg(rem) > 0) result.push_back(rem);
    return result;
}

std::vector<std::pair<ZP, int>> factor_zp(const ZP& g) {
    std::vector<std::pair<ZP, int>> out;
    ZP w = zp_primitive(g, true);
    if (zp_deg(w) < 1) return out;
    for (const auto& [sq, mult] : zp_squarefree(w))
        for (const auto& f : zassenhaus_squarefree(sq)) out.emplace_back(f, mult);
    return out;
}

// ---------------------------------------------------------------------------
// MultiPoly facade

// index of the single variable with positive degree (0 when constant)
size_t active_var(const MultiPoly& g) {
    int found = -1;
    for (size_t i = 0; i < g.vars().size(); ++i) {
        if (g.degree_in(i) > 0) {
            if (found >= 0) throw input_error("polynomial is not univariate");
            found = static_cast<int>(i);
        }
    }
    return found < 0 ? 0 : static_cast<size_t>(found);
}

ZP to_dense(const MultiPoly& g, size_t var) {
    ZP r(std::max(g.degree_in(var), 0) + 1, mpz_class(0));
    for (const auto& [e, c] : g.terms()) {
        if (c.get_den() != 1) throw input_error("integer coefficients required");
        r[e[var]] = c.get_num();
    }
    zp_norm(r);
    return r;
}

MultiPoly from_dense(const ZP& f, const std::vector<std::string>& vars, size_t var) {
    MultiPoly r(vars);
    Exps e(vars.size(), 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        e[var] = static_cast<int32_t>(i);
        r.add_term(e, mpq_class(f[i]));
    }
    return r;
}

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.to_string() < b.to_string();
}

void merge_sorted_factors(Factorization& fac, std::vector<std::pair<MultiPoly, int>> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    for (auto& fm : parts) {
        if (!fac.factors.empty() && fac.factors.back().first == fm.first)
            fac.factors.back().second += fm.second;
        else
            fac.factors.push_back(std::move(fm));
    }
}

void finish_content(Factorization& fac, const MultiPoly& input) {
    MultiPoly prod = MultiPoly::constant(input.vars(), 1);
    for (const auto& [h, m] : fac.factors) prod = prod * h.pow(m);
    fac.content = input.terms().begin()->second / prod.terms().begin()->second;
    if (fac.reconstruct(input.vars()) != input)
        throw internal_error("factorization reconstruction mismatch");
}

}  // namespace

MultiPoly Factorization::reconstruct(const std::vector<std::string>& vars) const {
    MultiPoly p = MultiPoly::constant(vars, content);
    for (const auto& [f, m] : factors) p = p * f.pow(m);
    return p;
}

int Factorization::num_irreducible_with_multiplicity() const {
    int n = 0;
    for (const auto& [f, m] : factors) n += m;
    return n;
}

Factorization factor_univariate(const MultiPoly& g) {
    if (g.is_zero()) throw input_error("factor of the zero polynomial");
    if (!g.is_integer()) throw input_error("integer coefficients required");
    Factorization fac;
    if (g.is_constant()) {
        fac.content = g.terms().begin()->second;
        return fac;
    }
    size_t var = active_var(g);
    std::vector<std::pair<MultiPoly, int>> parts;
    for (const auto& [f, m] : factor_zp(to_dense(g, var)))
        parts.emplace_back(from_dense(f, g.vars(), var), m);
    merge_sorted_factors(fac, std::move(parts));
    finish_content(fac, g);
    return fac;
}

std::vector<Rat> rational_roots(const MultiPoly& g) {
    if (g.is_zero()) throw input_error("roots of the zero polynomial");
    Factorization fac = factor_univariate(g);
    std::vector<Rat> roots;
    for (const auto& [f, m] : fac.factors) {
        if (f.total_degree() != 1) continue;
        size_t var = active_var(f);
        ZP d = to_dense(f, var);
        roots.push_back(make_rat(-d[0], d[1]));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Factorization factor_multivariate(const MultiPoly& f) {
    if (f.is_zero()) throw input_error("factor of the zero polynomial");
    if (!f.is_integer()) throw input_error("integer coefficients required");

    int active_count = 0;
    for (size_t i = 0; i < f.vars().size(); ++i)
        if (f.degree_in(i) > 0) ++active_count;
    if (active_count <= 1) return factor_univariate(f);

    MultiPoly w = primitive_part_canonical(f);
    auto kr = kronecker(w, 0);

    std::vector<ZP> mods;
    for (const auto& [q, m] : factor_zp(to_dense(kr.poly, 0)))
        for (int i = 0; i < m; ++i) mods.push_back(q);
    std::sort(mods.begin(), mods.end(), [](const ZP& a, const ZP& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    MultiPoly remaining = w;
    std::vector<MultiPoly> irreducibles;
    std::vector<int> active(mods.size());
    std::iota(active.begin(), active.end(), 0);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZP prod = {mpz_class(1)};
        for (int idx : subset) prod = zp_mul(prod, mods[idx]);
        MultiPoly up = from_dense(prod, {f.vars()[0]}, 0);
        auto inv =
            inverse_kronecker(up, 0, kr.base, static_cast<int>(f.vars().size()), f.vars());
        if (!inv) return false;
        MultiPoly h = primitive_part_canonical(inv->with_vars(f.vars()));
        if (h.is_constant()) return false;
        if (!divides(h, remaining)) return false;
        remaining = primitive_part_canonical(exact_divide(h, remaining));
        irreducibles.push_back(h);
        return true;
    };
    auto eq_prev = [&](const std::vector<int>& pair) { return mods[pair[0]] == mods[pair[1]]; };

    while (!active.empty()) {
        bool found = false;
        for (size_t s = 1; s <= active.size() && !found; ++s) {
            found = for_each_submultiset(active, eq_prev, s, [&](const std::vector<int>& subset) {
                if (!try_subset(subset)) return false;
                std::vector<int> next;
                size_t k = 0;
                for (int idx : active) {
                    if (k < subset.size() && idx == subset[k]) {
                        ++k;
                        continue;
                    }
                    next.push_back(idx);
                }
                active = std::move(next);
                return true;
            });
        }
        if (!found) throw internal_error("multivariate recombination failed");
    }
    if (!remaining.is_constant()) irreducibles.push_back(primitive_part_canonical(remaining));

    Factorization fac;
    std::vector<std::pair<MultiPoly, int>> parts;
    for (auto& h : irreducibles) parts.emplace_back(std::move(h), 1);
    merge_sorted_factors(fac, std::move(parts));
    finish_content(fac, f);
    return fac;
}

bool is_irreducible(const MultiPoly& f) {
    if (f.is_zero()) throw input_error("irreducibility of the zero polynomial");
    if (f.is_constant()) return false;
    Factorization fac = factor_multivariate(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace bhc
