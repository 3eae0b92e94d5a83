#pragma once

// Test-only oracles, kept independent of the implementation paths they check:
// an exhaustive Mignotte-bounded divisor search for univariate factorization
// and a full-grid scan for affine point counts.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "count.hpp"
#include "factor.hpp"

namespace bhc_test {

using bhc::MultiPoly;
using ZV = std::vector<mpz_class>;  // dense univariate, little endian

inline void zv_norm(ZV& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int zv_deg(const ZV& f) { return static_cast<int>(f.size()) - 1; }

inline std::optional<ZV> zv_exact_div(const ZV& a, const ZV& b) {
    if (b.empty() || a.size() < b.size()) return std::nullopt;
    ZV r = a, q(a.size() - b.size() + 1, mpz_class(0));
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        mpz_class& lead = r[k + b.size() - 1];
        if (lead == 0) continue;
        if (lead % b.back() != 0) return std::nullopt;
        q[k] = lead / b.back();
        for (size_t i = 0; i < b.size(); ++i) r[k + i] -= q[k] * b[i];
    }
    for (auto& c : r)
        if (c != 0) return std::nullopt;
    zv_norm(q);
    return q;
}

inline std::vector<mpz_class> divisors_of(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d != a / d) out.push_back(a / d);
        }
    }
    return out;
}

inline ZV zv_primitive_pos(ZV f) {
    mpz_class g = 0;
    for (auto& c : f) g = gcd(g, c);
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

// smallest factor of degree 1 or 2 within the Mignotte box, or none
inline std::optional<ZV> oracle_find_factor(const ZV& g) {
    int n = zv_deg(g);
    if (n <= 1) return std::nullopt;
    if (g[0] == 0) return ZV{0, 1};
    mpz_class n2sq = 0;
    for (const auto& c : g) n2sq += c * c;
    mpz_class n2;
    mpz_sqrt(n2.get_mpz_t(), n2sq.get_mpz_t());
    n2 += 1;
    for (int m = 1; m <= n / 2; ++m) {
        mpz_class B = (mpz_class(1) << m) * n2;
        for (const auto& a : divisors_of(g.back())) {
            for (const auto& c0 : divisors_of(g[0])) {
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    mpz_class c = sgn * c0;
                    if (m == 1) {
                        ZV h = {c, a};
                        if (zv_exact_div(g, h)) return h;
                    } else {
                        for (mpz_class b = -B; b <= B; ++b) {
                            ZV h = {c, b, a};
                            if (zv_exact_div(g, h)) return h;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

inline std::string zv_key(const ZV& f) {
    std::string key;
    for (const auto& c : f) key += c.get_str() + ",";
    return key;
}

// complete factor multiset (degrees <= 4)
inline std::multiset<std::string> oracle_factor(const ZV& gin) {
    std::multiset<std::string> out;
    ZV g = zv_primitive_pos(gin);
    while (zv_deg(g) >= 1) {
        auto h = oracle_find_factor(g);
        if (!h) {
            out.insert(zv_key(g));
            break;
        }
        ZV hp = zv_primitive_pos(*h);
        out.insert(zv_key(hp));
        g = zv_primitive_pos(*zv_exact_div(g, hp));
    }
    return out;
}

inline std::multiset<std::string> factorization_keys(const bhc::Factorization& fac,
                                                     const MultiPoly& g) {
    std::multiset<std::string> out;
    size_t var = 0;
    for (size_t i = 0; i < g.vars().size(); ++i)
        if (g.degree_in(i) > 0) var = i;
    for (const auto& [f, m] : fac.factors) {
        ZV d(std::max(f.degree_in(var), 0) + 1, mpz_class(0));
        for (const auto& [e, c] : f.terms()) d[e[var]] = c.get_num();
        zv_norm(d);
        for (int i = 0; i < m; ++i) out.insert(zv_key(d));
    }
    return out;
}

// full-grid affine count, O(prod B_i^2)
inline mpz_class grid_count(const MultiPoly& f, const bhc::HeightBox& box) {
    size_t n = f.vars().size();
    std::vector<std::vector<bhc::Rat>> grids;
    for (size_t i = 0; i < n; ++i) grids.push_back(bhc::enumerate_rationals(box.bounds[i]));
    mpz_class count = 0;
    std::vector<bhc::Rat> point(n);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == n) {
            if (f.eval(point) == 0) count += 1;
            return;
        }
        for (const bhc::Rat& t : grids[i]) {
            point[i] = t;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace bhc_test
