#include <doctest.h>

#include "support.hpp"

using namespace planaut;
using planaut::testing::P;

TEST_SUITE("mapform") {
    TEST_CASE("decompose examples") {
        const DegreeDecomposition a = decompose(P("x + 3*y^2"), P("y"));
        CHECK(a.degrees() == std::vector<std::uint32_t>{1, 2});
        CHECK(a.component(1).fpart == P("x"));
        CHECK(a.component(1).gpart == P("y"));
        CHECK(a.component(2).fpart == P("3*y^2"));
        CHECK(a.component(2).gpart.is_zero());
        CHECK(a.nonlinear_degrees() == std::vector<std::uint32_t>{2});

        const DegreeDecomposition b = decompose(P("x"), P("y"));
        CHECK(b.degrees() == std::vector<std::uint32_t>{1});
        CHECK(b.n() == 1);

        try {
            decompose(P("x + 1"), P("y"));
            FAIL("expected ConstantTermPresent");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ConstantTermPresent);
        }
        CHECK_THROWS_AS(decompose(P("x"), P("y - 2/3")), ConstantTermError);
        CHECK_THROWS_AS(a.component(3), Error);
    }

    TEST_CASE("is_scattered examples") {
        const std::vector<std::uint32_t> one{1}, three{1, 2, 3}, four{1, 2, 5, 11};
        CHECK(is_scattered(one));
        const auto w = find_scatter_violation(three);
        REQUIRE(w);
        CHECK(*w == ScatterWitness{1, 3, 2, 2});
        CHECK(is_scattered(four));
        const std::vector<std::uint32_t> unsorted{11, 5, 1, 2};
        CHECK(is_scattered(unsorted));
        const std::vector<std::uint32_t> dup{1, 2, 2};
        CHECK_THROWS_AS(find_scatter_violation(dup), Error);
    }

    TEST_CASE("scatter witness is the lexicographically first violation") {
        // 1+4 = 2+3 and 1+3 = 2+2; (1,3,2,2) comes first.
        const std::vector<std::uint32_t> d{1, 2, 3, 4};
        CHECK(*find_scatter_violation(d) == ScatterWitness{1, 3, 2, 2});
        const std::vector<std::uint32_t> e{1, 4, 6, 9};  // 1+9 = 4+6
        CHECK(*find_scatter_violation(e) == ScatterWitness{1, 9, 4, 6});
        const std::vector<std::uint32_t> f{1, 3, 5};  // 1+5 = 3+3
        CHECK(*find_scatter_violation(f) == ScatterWitness{1, 5, 3, 3});
    }

    TEST_CASE("property: witness is a genuine violation") {
        for (std::uint32_t mask = 1; mask < (1u << 10); ++mask) {
            std::vector<std::uint32_t> d;
            for (std::uint32_t i = 0; i < 10; ++i)
                if (mask & (1u << i)) d.push_back(i + 1);
            const auto w = find_scatter_violation(d);
            CHECK(w.has_value() != testing::brute_scattered(d));
            if (w) {
                CHECK(w->a + w->b == w->p + w->q);
                CHECK(w->a <= w->b);
                CHECK(w->p <= w->q);
                CHECK(std::pair(w->a, w->b) < std::pair(w->p, w->q));
            }
        }
    }

    TEST_CASE("normalize_linear examples") {
        const NormalizedMap swap = normalize_linear(P("y"), P("x"));
        CHECK(swap.linear == LinearChange{0, 1, 1, 0});
        CHECK(swap.map == PlaneMap{P("x"), P("y")});

        const NormalizedMap same = normalize_linear(P("x + y^2"), P("y"));
        CHECK(same.linear.is_identity());
        CHECK(same.map == PlaneMap{P("x + y^2"), P("y")});

        const NormalizedMap scale = normalize_linear(P("2*x"), P("y"));
        CHECK(scale.linear == LinearChange{2, 0, 0, 1});
        CHECK(scale.map == PlaneMap{P("x"), P("y")});
    }

    TEST_CASE("normalize_linear errors") {
        try {
            normalize_linear(P("x^2"), P("y^3"));
            FAIL("expected NoLinearPart");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NoLinearPart);
        }
        try {
            normalize_linear(P("x + y^2"), P("2*x"));
            FAIL("expected SingularLinearPart");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SingularLinearPart);
        }
    }

    TEST_CASE("property: decompose resums; normalization round-trips") {
        Rng rng(201);
        for (int trial = 0; trial < 200; ++trial) {
            BivarPoly f = testing::random_poly(rng, 5, 6, false), g = testing::random_poly(rng, 5, 6, false);
            f += testing::small_rational(rng) * P("x") + testing::small_rational(rng) * P("y");
            g += testing::small_rational(rng) * P("x") + testing::small_rational(rng) * P("y");
            const DegreeDecomposition dec = decompose(f, g);
            CHECK(dec.resum() == PlaneMap{f, g});
            for (const auto& [d, piece] : dec.components()) {
                CHECK((!piece.fpart.is_zero() || !piece.gpart.is_zero()));
                CHECK((piece.fpart.is_zero() || piece.fpart.is_homogeneous_of_degree(d)));
                CHECK((piece.gpart.is_zero() || piece.gpart.is_homogeneous_of_degree(d)));
            }
            const LinearChange L = linear_part(f, g);
            CHECK(L.determinant() == jacobian(f, g).constant_term());
            if (L.determinant().is_zero()) continue;
            const NormalizedMap nm = normalize_linear(f, g);
            CHECK(nm.linear == L);
            CHECK(nm.map.f.homogeneous_part(1) == P("x"));
            CHECK(nm.map.g.homogeneous_part(1) == P("y"));
            CHECK(nm.linear.apply(nm.map) == PlaneMap{f, g});
            CHECK(decompose(nm.map.f, nm.map.g).degrees() == dec.degrees());
        }
    }

    TEST_CASE("linear change algebra") {
        const LinearChange L{2, 3, 1, -1};
        CHECK(L.determinant() == Rational(-5));
        const LinearChange I = L.inverse();
        CHECK(compose(L.as_map().f, I.as_map().f, I.as_map().g) == P("x"));
        CHECK(compose(L.as_map().g, I.as_map().f, I.as_map().g) == P("y"));
        CHECK_THROWS_AS(LinearChange({1, 2, 2, 4}).inverse(), Error);
    }
}
