#include <doctest.h>

#include "support.hpp"

using namespace planaut;
using planaut::testing::P;

TEST_SUITE("jacobian") {
    TEST_CASE("jacobian examples") {
        CHECK(jacobian(P("x"), P("y")) == P("1"));
        CHECK(jacobian(P("x + 3*(x+y)^2"), P("y - 3*(x+y)^2")) == P("1"));
        CHECK(jacobian(P("x + x^2"), P("y")) == P("1 + 2*x"));
        CHECK(jacobian(P("y"), P("x")) == P("-1"));
    }

    TEST_CASE("jacobian_coefficient examples") {
        CHECK(jacobian_coefficient(P("x + x^2"), P("y"), 1, 0) == Rational(2));
        CHECK(jacobian_coefficient(P("x"), P("y"), 0, 0) == Rational(1));
        CHECK(jacobian_coefficient(P("x + 3*y^2"), P("y"), 0, 1).is_zero());
    }

    TEST_CASE("classify_jacobian examples") {
        const JacobianReport unit = classify_jacobian(P("x"), P("y"));
        CHECK(unit.classification() == JacobianClass::Unit);
        CHECK(unit.constant_value == Rational(1));
        CHECK_FALSE(unit.nonconstant_witness);

        const JacobianReport bad = classify_jacobian(P("x + x^2"), P("y"));
        CHECK(bad.classification() == JacobianClass::Nonconstant);
        CHECK_FALSE(bad.constant_value);
        REQUIRE(bad.nonconstant_witness);
        CHECK(*bad.nonconstant_witness == JacobianTerm{1, 0, Rational(2)});

        const JacobianReport zero = classify_jacobian(P("x"), P("x"));
        CHECK(zero.classification() == JacobianClass::Zero);
        CHECK(zero.J.is_zero());
        CHECK_FALSE(zero.constant_value);
        CHECK_FALSE(zero.nonconstant_witness);
    }

    TEST_CASE("nonconstant J without constant term is not zero") {
        const JacobianReport r = classify_jacobian(P("x^2"), P("y"));
        CHECK(r.classification() == JacobianClass::Nonconstant);
        CHECK(r.nonconstant_witness->value == Rational(2));
    }

    TEST_CASE("property: antisymmetry and bilinearity") {
        Rng rng(301);
        for (int trial = 0; trial < 200; ++trial) {
            const BivarPoly f = testing::random_poly(rng, 5), g = testing::random_poly(rng, 5),
                            h = testing::random_poly(rng, 5);
            const Rational a = testing::small_rational(rng);
            CHECK(jacobian(f, g) == -jacobian(g, f));
            CHECK(jacobian(f, f).is_zero());
            CHECK(jacobian(f + a * h, g) == jacobian(f, g) + a * jacobian(h, g));
        }
    }

    TEST_CASE("property: per-bidegree bookkeeping on scattered maps") {
        Rng rng(302);
        const auto sets = scattered_degree_sets(9, 4);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& degrees = sets[rng.below(sets.size())];
            BivarPoly f = P("x"), g = P("y");
            for (std::uint32_t d : degrees) {
                if (d == 1) continue;
                f += testing::random_homogeneous(rng, d);
                g += testing::random_homogeneous(rng, d);
            }
            const BivarPoly J = jacobian(f, g);
            for (std::uint32_t d : degrees) {
                if (d == 1) continue;
                const BivarPoly fd = f.homogeneous_part(d), gd = g.homogeneous_part(d);
                for (std::uint32_t j = 1; j <= d; ++j) {
                    const Rational expect = Rational(d - j + 1) * fd.coefficient(d - j + 1, j - 1) +
                                            Rational(j) * gd.coefficient(d - j, j);
                    CHECK(J.coefficient(d - j, j - 1) == expect);
                }
            }
        }
    }
}
