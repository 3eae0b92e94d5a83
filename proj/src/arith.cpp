#include "arith.hpp"

#include <numeric>

namespace bhc {

Rat make_rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

mpz_class height(const Rat& t) {
    mpz_class n = abs(t.get_num());
    const mpz_class& d = t.get_den();
    return n > d ? n : d;
}

std::string rat_to_string(const Rat& t) {
    if (t.get_den() == 1) return t.get_num().get_str();
    return t.get_num().get_str() + "/" + t.get_den().get_str();
}

HeightBox::HeightBox(std::vector<int64_t> b) : bounds(std::move(b)) {
    if (bounds.empty()) throw input_error("empty height box");
    for (int64_t v : bounds)
        if (v < 1) throw input_error("height bound must be >= 1");
}

std::vector<int64_t> phi_table(int64_t n) {
    std::vector<int64_t> phi(n + 1);
    for (int64_t i = 0; i <= n; ++i) phi[i] = i;
    for (int64_t p = 2; p <= n; ++p) {
        if (phi[p] == p) {  // p prime
            for (int64_t k = p; k <= n; k += p) phi[k] -= phi[k] / p;
        }
    }
    return phi;
}

mpz_class count_rationals(int64_t B) {
    if (B < 1) throw input_error("height bound must be >= 1");
    auto phi = phi_table(B);
    mpz_class s = 0;
    for (int64_t b = 1; b <= B; ++b) s += phi[b];
    return 4 * s - 1;
}

void for_each_rational(int64_t B, const std::function<bool(const Rat&)>& fn) {
    if (B < 1) throw input_error("height bound must be >= 1");
    if (!fn(Rat(0))) return;
    for (int64_t h = 1; h <= B; ++h) {
        // |num| < h, den = h
        for (int64_t a = 1; a < h; ++a) {
            if (std::gcd(a, h) != 1) continue;
            if (!fn(make_rat(a, h))) return;
            if (!fn(make_rat(-a, h))) return;
        }
        // |num| = h, den ascending
        int64_t bmax = (h == 1) ? 1 : h - 1;
        for (int64_t b = 1; b <= bmax; ++b) {
            if (std::gcd(h, b) != 1) continue;
            if (!fn(make_rat(h, b))) return;
            if (!fn(make_rat(-h, b))) return;
        }
    }
}

std::vector<Rat> enumerate_rationals(int64_t B) {
    std::vector<Rat> out;
    for_each_rational(B, [&](const Rat& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

void for_each_projective_point(int64_t B, int dim,
                               const std::function<bool(const std::vector<mpz_class>&)>& fn) {
    if (B < 1) throw input_error("height bound must be >= 1");
    if (dim < 1) throw input_error("projective dimension must be >= 1");
    const int n = dim + 1;
    std::vector<int64_t> x(n);
    std::vector<mpz_class> pt(n);
    for (int64_t h = 1; h <= B; ++h) {
        // lexicographic scan of the cube [-h, h]^n, keeping max-norm == h
        std::function<bool(int, bool)> rec = [&](int i, bool sat) -> bool {
            if (i == n) {
                if (!sat) return true;
                int first = 0;
                while (first < n && x[first] == 0) ++first;
                if (first == n || x[first] < 0) return true;
                int64_t g = 0;
                for (int j = 0; j < n; ++j) g = std::gcd(g, x[j]);
                if (g != 1) return true;
                for (int j = 0; j < n; ++j) pt[j] = x[j];
                return fn(pt);
            }
            for (int64_t v = -h; v <= h; ++v) {
                x[i] = v;
                if (!rec(i + 1, sat || v == h || v == -h)) return false;
            }
            return true;
        };
        if (!rec(0, false)) return;
    }
}

std::vector<std::vector<mpz_class>> enumerate_projective_points(int64_t B, int dim) {
    std::vector<std::vector<mpz_class>> out;
    for_each_projective_point(B, dim, [&](const std::vector<mpz_class>& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace bhc
