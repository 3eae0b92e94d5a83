#pragma once

/*
 * Exact rational arithmetic, heights, and enumeration of all rationals
 * (or projective points) of bounded height.
 */

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bhc {

// Thrown on malformed user input (bad polynomial text, shape mismatch, ...).
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation contradicts an invariant that is supposed to be
// guaranteed (e.g. a reducible specialisation without a resolvent witness).
// The CLI maps this to exit code 3.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rat = mpq_class;

/// Rational in lowest terms with positive denominator.
Rat make_rat(const mpz_class& num, const mpz_class& den);

/// H(x/y) = max(|x|, y) for x/y in lowest terms; H(0) = 1.
mpz_class height(const Rat& t);

std::string rat_to_string(const Rat& t);

struct HeightBox {
    std::vector<int64_t> bounds;  // every entry >= 1

    explicit HeightBox(std::vector<int64_t> b);
    size_t size() const { return bounds.size(); }
};

/// Euler phi for 1..n via sieve.
std::vector<int64_t> phi_table(int64_t n);

/// Number of rationals t with H(t) <= B: 4 * sum_{b<=B} phi(b) - 1.
mpz_class count_rationals(int64_t B);

/// Visit every rational of height <= B exactly once, in the canonical order:
/// ascending height, then |numerator|, then denominator, positive first.
/// Visitor returning false stops the enumeration.
void for_each_rational(int64_t B, const std::function<bool(const Rat&)>& fn);

std::vector<Rat> enumerate_rationals(int64_t B);

/// Canonical representatives of P^dim of height <= B: coprime integer
/// coordinates, first nonzero coordinate positive. Order: ascending height,
/// then lexicographic.
std::vector<std::vector<mpz_class>> enumerate_projective_points(int64_t B, int dim);

void for_each_projective_point(int64_t B, int dim,
                               const std::function<bool(const std::vector<mpz_class>&)>& fn);

}  // namespace bhc
