#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poly.hpp"

using namespace bhc;

static MultiPoly P(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly(text, vars);
}

TEST_CASE("parse and print round trips") {
    std::vector<std::string> tv = {"T", "Y"};
    MultiPoly f = P("Y^2 - T", tv);
    CHECK(f.to_string() == "Y^2 - T");
    CHECK(parse_poly(f.to_string(), tv) == f);

    MultiPoly g = P("Y^4 + 2*Y^2 + 3*T^2", tv);
    CHECK(g.degree_in(0) == 2);
    CHECK(g.degree_in(1) == 4);
    CHECK(g.total_degree() == 4);
    CHECK(parse_poly(g.to_string(), tv) == g);

    // printed form is canonical regardless of input order
    CHECK(P("3*T^2 + Y^4 + 2*Y^2", tv) == g);
    CHECK(P("(Y^2+1)^2 + 3*T^2 - 1", tv).to_string() == g.to_string());
}

TEST_CASE("parser errors carry a position") {
    std::vector<std::string> xv = {"X1", "X2"};
    try {
        parse_poly("X1*(X2", xv);
        FAIL("expected a syntax error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("X1 + W", xv), input_error);
    CHECK_THROWS_AS(parse_poly("X1 X2", xv), input_error);  // juxtaposition
    CHECK_THROWS_AS(parse_poly("", xv), input_error);
    CHECK_THROWS_AS(parse_poly("X1^", xv), input_error);
}

TEST_CASE("norm") {
    std::vector<std::string> tv = {"T", "Y"};
    CHECK(poly_norm(P("Y^4 + 2*Y^2 + 3*T^2", tv)) == 3);
    CHECK(poly_norm(P("X1", {"X1"})) == 2);
    CHECK(poly_norm(P("5*X - 4", {"X"})) == 5);
    CHECK_THROWS_AS(poly_norm(P("0", tv)), input_error);
}

TEST_CASE("specialise_clear") {
    std::vector<std::string> tv = {"T", "Y"};
    MultiPoly f = P("Y^4 + 2*Y^2 + 3*T^2", tv);
    MultiPoly s = specialise_clear(f, {{"T", make_rat(1, 2)}});
    CHECK(s == P("4*Y^4 + 8*Y^2 + 3", {"Y"}));

    CHECK(specialise_clear(P("Y^2 - T", tv), {{"T", Rat(0)}}) == P("Y^2", {"Y"}));
    CHECK(specialise_clear(P("Y^2 - T", tv), {{"T", make_rat(4, 9)}}) ==
          P("9*Y^2 - 4", {"Y"}));

    // zero polynomial allowed
    MultiPoly z = specialise_clear(P("T*Y", tv), {{"T", Rat(0)}});
    CHECK(z.is_zero());
}

TEST_CASE("specialise_clear is primitive and positively proportional") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<std::string> tv = {"T", "Y"};
    for (int iter = 0; iter < 50; ++iter) {
        MultiPoly f(tv);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 3; ++j) f.add_term({i, j}, coef(rng));
        if (f.is_zero()) continue;
        Rat t = make_rat(coef(rng), 1 + std::uniform_int_distribution<int>(0, 8)(rng));
        MultiPoly raw = f.eval_partial({{0, t}}).with_vars({"Y"});
        MultiPoly out = specialise_clear(f, {{"T", t}});
        if (raw.is_zero()) {
            CHECK(out.is_zero());
            continue;
        }
        CHECK(out.is_integer());
        CHECK(int_content(out) == 1);
        // raw * lambda = out for a single positive rational lambda
        mpq_class lambda = 0;
        bool ok = true;
        for (const auto& [e, c] : out.terms()) {
            mpq_class r = raw.coeff(e);
            REQUIRE(r != 0);
            mpq_class l = c / r;
            if (lambda == 0)
                lambda = l;
            else if (l != lambda)
                ok = false;
        }
        CHECK(ok);
        CHECK(lambda > 0);
        CHECK(raw.num_terms() == out.num_terms());
    }
}

TEST_CASE("specialise_clear norm bound (single variable)") {
    // ||f_t|| <= (d+1) ||f|| H(t)^d
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<std::string> tv = {"T", "Y"};
    for (int iter = 0; iter < 40; ++iter) {
        MultiPoly f(tv);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 3; ++j) f.add_term({i, j}, coef(rng));
        if (f.is_zero()) continue;
        Rat t = make_rat(coef(rng), 1 + std::uniform_int_distribution<int>(0, 8)(rng));
        MultiPoly out = specialise_clear(f, {{"T", t}});
        if (out.is_zero()) continue;
        int d = f.total_degree();
        mpz_class H = height(t);
        mpz_class Hd;
        mpz_pow_ui(Hd.get_mpz_t(), H.get_mpz_t(), d);
        mpz_class bound = (d + 1) * poly_norm(f) * Hd;
        CHECK(poly_norm(out) <= bound);
    }
}

TEST_CASE("homogenise") {
    std::vector<std::string> tv = {"T", "Y"};
    MultiPoly f = P("Y^2 - T", tv);
    MultiPoly h = homogenise(f, "U");
    CHECK(h == P("Y^2 - T*U", {"T", "Y", "U"}));
    CHECK(is_homogeneous(h));

    MultiPoly g = P("X0 + X1", {"X0", "X1"});
    CHECK(homogenise(g, "U") == P("X0 + X1", {"X0", "X1", "U"}));

    MultiPoly q = P("Y^2 - 2*Y + 3*T^2", tv);
    CHECK(homogenise(q, "U") == P("Y^2 - 2*Y*U + 3*T^2", {"T", "Y", "U"}));

    // dehomogenising (U -> 1) recovers f
    MultiPoly back = specialise_clear(h, {{"U", Rat(1)}});
    CHECK(back == f);
}

TEST_CASE("bihomogenise") {
    std::vector<std::string> v4 = {"X1", "X2", "Y1", "Y2"};
    MultiPoly f = P("X*Y - 1", {"X", "Y"});
    auto r = bihomogenise(f);
    CHECK(r.poly == P("X1*Y1 - X2*Y2", v4));
    CHECK(r.bidegree.d1 == 1);
    CHECK(r.bidegree.d2 == 1);
    auto bd = bidegree_of(r.poly);
    REQUIRE(bd.has_value());
    CHECK(bd->d1 == 1);
    CHECK(bd->d2 == 1);

    auto r2 = bihomogenise(P("Y^2 - T", {"T", "Y"}));
    CHECK(r2.poly == P("Y1^2*X2 - X1*Y2^2", v4));
    CHECK(r2.bidegree.d1 == 1);
    CHECK(r2.bidegree.d2 == 2);

    auto r3 = bihomogenise(P("X", {"X", "Y"}));
    CHECK(r3.poly == P("X1", v4));
    CHECK(r3.bidegree.d1 == 1);
    CHECK(r3.bidegree.d2 == 0);

    // setting X2 = Y2 = 1 recovers f (up to variable names)
    MultiPoly back = specialise_clear(r2.poly, {{"X2", Rat(1)}, {"Y2", Rat(1)}});
    CHECK(back == P("Y1^2 - X1", {"X1", "Y1"}));
    CHECK(bidegree_of(P("X1*Y1 + X1", v4)) == std::nullopt);
}

TEST_CASE("kronecker substitution") {
    MultiPoly f = P("Y1*Y2 + Y1", {"Y1", "Y2"});
    auto k = kronecker(f, 0);
    CHECK(k.base == 2);
    CHECK(k.poly == P("Y1^3 + Y1", {"Y1"}));

    auto k2 = kronecker(P("Y1 + Y2 + Y3", {"Y1", "Y2", "Y3"}), 0);
    CHECK(k2.base == 2);
    CHECK(k2.poly == P("Y1^4 + Y1^2 + Y1", {"Y1"}));

    auto k3 = kronecker(P("Y1^2 + 3*Y2", {"Y1", "Y2"}), 0);
    CHECK(k3.base == 3);
    CHECK(k3.poly == P("3*Y1^3 + Y1^2", {"Y1"}));

    // norm preserved; round trip for per-variable degrees < a
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int iter = 0; iter < 30; ++iter) {
        MultiPoly g({"T", "Y1", "Y2"});
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c) g.add_term({a, b, c}, coef(rng));
        if (g.is_zero()) continue;
        auto kr = kronecker(g, 1);
        CHECK(poly_norm(kr.poly) == poly_norm(g));
        CHECK(kr.poly.num_terms() == g.num_terms());
        auto inv = inverse_kronecker(kr.poly, 1, kr.base, 2, {"Y1", "Y2"});
        REQUIRE(inv.has_value());
        CHECK(*inv == g);
    }
}

TEST_CASE("inverse_kronecker") {
    auto inv = inverse_kronecker(P("Y^3 + Y", {"Y"}), 0, 2, 2, {"Y1", "Y2"});
    REQUIRE(inv.has_value());
    CHECK(*inv == P("Y1*Y2 + Y1", {"Y1", "Y2"}));

    // 5 = 101 in base 2 has a digit at position 2, out of range for r = 2
    CHECK(inverse_kronecker(P("Y^5", {"Y"}), 0, 2, 2, {"Y1", "Y2"}) == std::nullopt);
    auto inv2 = inverse_kronecker(P("Y^5", {"Y"}), 0, 2, 3, {"Y1", "Y2", "Y3"});
    REQUIRE(inv2.has_value());
    CHECK(*inv2 == P("Y1*Y3", {"Y1", "Y2", "Y3"}));

    CHECK(inverse_kronecker(P("Y^4", {"Y"}), 0, 2, 1, {"Y1"}) == std::nullopt);
}

TEST_CASE("shift transform") {
    std::vector<std::string> tv = {"T", "Y"};
    MultiPoly f = P("Y^2 - T", tv);
    MultiPoly s = shift_transform(f, 2);
    CHECK(s == P("Y^2 + 2*T^2*Y + T^4 - T", tv));
    CHECK(shift_transform(P("Y", tv), 1) == P("Y + T", tv));

    // substituting Y -> Y - T^E recovers f
    MultiPoly minus(tv);
    minus.add_term({0, 1}, 1);
    minus.add_term({2, 0}, -1);
    CHECK(s.substitute(1, minus) == f);
}

TEST_CASE("divides") {
    std::vector<std::string> v4 = {"X1", "X2", "Y1", "Y2"};
    MultiPoly f = P("X1*Y2 - X2*Y1", v4);
    CHECK(divides(f, f * P("X1 + X2", v4)));
    CHECK_FALSE(divides(f, P("X1^2*Y2^2", v4)));
    CHECK(divides(f, MultiPoly(v4)));  // zero is a multiple
    CHECK(exact_divide(f, f * P("X1 + X2", v4)) == P("X1 + X2", v4));
}

TEST_CASE("ring axioms on random small polynomials") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<std::string> v = {"X", "Y"};
    auto rand_poly = [&]() {
        MultiPoly p(v);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) p.add_term({i, j}, coef(rng));
        return p;
    };
    for (int iter = 0; iter < 40; ++iter) {
        MultiPoly f = rand_poly(), g = rand_poly(), h = rand_poly();
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f - f).is_zero());
        CHECK(f * (g * h) == (f * g) * h);
    }
}

TEST_CASE("content and primitive part") {
    std::vector<std::string> v = {"X"};
    MultiPoly f = P("6*X^2 - 4*X + 2", v);
    CHECK(int_content(f) == 2);
    CHECK(primitive_part_canonical(f) == P("3*X^2 - 2*X + 1", v));
    MultiPoly g = P("4 - 6*X^2", v);
    CHECK(primitive_part_canonical(g) == P("3*X^2 - 2", v));
    CHECK(primitive_part_keep_sign(g) == P("2 - 3*X^2", v));
}
