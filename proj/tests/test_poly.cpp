#include <doctest.h>

#include "support.hpp"

using namespace planaut;
using planaut::testing::P;

TEST_SUITE("rational") {
    TEST_CASE("canonical form") {
        CHECK(Rational(6, -4).to_string() == "-3/2");
        CHECK(Rational(0, 7).to_string() == "0");
        CHECK(Rational(0, -7).denominator() == 1);
        CHECK(Rational(4, 2).is_integer());
        CHECK(Rational::parse("-10/4") == Rational(-5, 2));
        CHECK(Rational::parse("+3") == Rational(3));
        CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    }

    TEST_CASE("arithmetic") {
        CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
        CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
        CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
        CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
        CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
        CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    }

    TEST_CASE("big values stay exact") {
        Rational r(1);
        for (int i = 0; i < 200; ++i) r *= Rational(3, 2);
        for (int i = 0; i < 200; ++i) r /= Rational(3, 2);
        CHECK(r.is_one());
    }
}

TEST_SUITE("poly_core") {
    TEST_CASE("add examples") {
        CHECK(P("x+y") + P("x-y") == P("2*x"));
        const BivarPoly p = P("x^2*y - 7/3*y");
        CHECK(p + BivarPoly() == p);
        CHECK(P("3/2*x^2") + P("1/2*x^2") == P("2*x^2"));
        CHECK(add(P("x"), P("-x")).is_zero());
    }

    TEST_CASE("mul examples") {
        CHECK(P("x+y") * P("x-y") == P("x^2 - y^2"));
        CHECK((P("x+y") * BivarPoly()).is_zero());
        CHECK(pow(P("x+y"), 2) == P("x^2 + 2*x*y + y^2"));
        CHECK(mul(P("x"), P("y")) == BivarPoly::monomial(1, 1, 1));
        CHECK(pow(P("x+y"), 0) == BivarPoly(1));
    }

    TEST_CASE("partial examples") {
        CHECK(partial(P("x^2*y"), Var::X) == P("2*x*y"));
        CHECK(partial(P("x"), Var::Y).is_zero());
        CHECK(partial(P("3*x^2 + x*y"), Var::X) == P("6*x + y"));
        CHECK(partial(P("3*x^2 + x*y"), Var::Y) == P("x"));
    }

    TEST_CASE("compose examples") {
        const BivarPoly u = P("x^2 - 5*y"), v = P("1/3*x*y");
        CHECK(compose(P("x+y^2"), P("x"), P("y")) == P("x+y^2"));
        CHECK(compose(P("x"), u, v) == u);
        CHECK(compose(P("x*y"), P("x+y"), P("x-y")) == P("x^2-y^2"));
        CHECK(compose(P("7"), u, v) == P("7"));
        CHECK(compose(BivarPoly(), u, v).is_zero());
        CHECK(compose(P("1/2*x^2 + y"), P("1/3*x"), P("1/5*y^2")) == P("1/18*x^2 + 1/5*y^2"));
    }

    TEST_CASE("compose_truncated drops high degrees only") {
        const BivarPoly p = P("x + x^2*y + y^3"), u = P("x + y^2"), v = P("y - x^2");
        const BivarPoly full = compose(p, u, v);
        for (std::uint32_t cap = 0; cap <= 8; ++cap) CHECK(compose_truncated(p, u, v, cap) == full.truncated(cap));
    }

    TEST_CASE("homogeneous_components examples") {
        const auto a = homogeneous_components(P("x + 3*y^2"));
        REQUIRE(a.size() == 2);
        CHECK(a.at(1) == P("x"));
        CHECK(a.at(2) == P("3*y^2"));
        CHECK(homogeneous_components(BivarPoly()).empty());
        const auto c = homogeneous_components(P("x^2 + x*y"));
        REQUIRE(c.size() == 1);
        CHECK(c.at(2) == P("x^2 + x*y"));
    }

    TEST_CASE("canonical storage") {
        BivarPoly p = P("x");
        p.add_term(-1, 1, 0);
        CHECK(p.is_zero());
        CHECK(p.size() == 0);
        CHECK_FALSE(p.total_degree().has_value());
        CHECK(P("x*y + x^2 + y^3 + 4").total_degree() == 3u);
        CHECK(P("x + 3*y^2").coefficient(0, 2) == Rational(3));
        CHECK(P("x + 3*y^2").coefficient(5, 5).is_zero());
    }

    TEST_CASE("graded order puts higher x powers first") {
        std::vector<Monomial> seen;
        const BivarPoly p = P("y^2 + x*y + x^2 + y + x + 1");
        for (const auto& [m, c] : p.terms()) seen.push_back(m);
        const std::vector<Monomial> expect{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
        CHECK(seen == expect);
    }

    TEST_CASE("property: ring axioms") {
        Rng rng(101);
        for (int trial = 0; trial < 200; ++trial) {
            const BivarPoly a = testing::random_poly(rng, 4), b = testing::random_poly(rng, 4),
                            c = testing::random_poly(rng, 4);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK(a * BivarPoly(1) == a);
        }
    }

    TEST_CASE("property: Leibniz rule") {
        Rng rng(102);
        for (int trial = 0; trial < 200; ++trial) {
            const BivarPoly p = testing::random_poly(rng, 5), q = testing::random_poly(rng, 5);
            for (Var v : {Var::X, Var::Y}) CHECK(partial(p * q, v) == partial(p, v) * q + p * partial(q, v));
        }
    }

    TEST_CASE("property: compose is a ring homomorphism") {
        Rng rng(103);
        for (int trial = 0; trial < 100; ++trial) {
            const BivarPoly p = testing::random_poly(rng, 4), q = testing::random_poly(rng, 4);
            const BivarPoly u = testing::random_poly(rng, 3), v = testing::random_poly(rng, 3);
            CHECK(compose(p + q, u, v) == compose(p, u, v) + compose(q, u, v));
            CHECK(compose(p * q, u, v) == compose(p, u, v) * compose(q, u, v));
        }
    }

    TEST_CASE("property: compose matches naive term-by-term expansion") {
        Rng rng(104);
        for (int trial = 0; trial < 100; ++trial) {
            const BivarPoly p = testing::random_poly(rng, 5), u = testing::random_poly(rng, 3),
                            v = testing::random_poly(rng, 3);
            BivarPoly naive;
            for (const auto& [m, c] : p.terms()) naive += c * (pow(u, m.xexp) * pow(v, m.yexp));
            CHECK(compose(p, u, v) == naive);
        }
    }

    TEST_CASE("property: homogeneous components resum and scale") {
        Rng rng(105);
        for (int trial = 0; trial < 200; ++trial) {
            const BivarPoly p = testing::random_poly(rng, 6, 8);
            BivarPoly sum;
            for (const auto& [d, c] : homogeneous_components(p)) {
                CHECK_FALSE(c.is_zero());
                CHECK(c.is_homogeneous_of_degree(d));
                CHECK(compose(c, P("2*x"), P("2*y")) == Rational(2).pow(d) * c);
                sum += c;
            }
            CHECK(sum == p);
        }
    }
}
