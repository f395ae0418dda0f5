#include <doctest.h>

#include "support.hpp"

using namespace planaut;
using planaut::testing::P;

namespace {

CoefficientTable table_of(const char* f, const char* g) { return extract_c_table(decompose(P(f), P(g))); }

StructureMatrix matrix(std::uint32_t d, std::vector<long> top, std::vector<long> bottom) {
    StructureMatrix A;
    A.degree = d;
    for (long v : top) A.rows[0].emplace_back(v);
    for (long v : bottom) A.rows[1].emplace_back(v);
    return A;
}

std::vector<Rational> R(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_SUITE("structure") {
    TEST_CASE("extract_c_table examples") {
        const CoefficientTable a = table_of("x + 3*y^2", "y");
        CHECK(a.degrees() == std::vector<std::uint32_t>{2});
        CHECK(a.row(2) == R({0, 0, 0, 1}));
        CHECK(a.c(0, 3) == Rational(1));

        const CoefficientTable b = table_of("x + 3*(x+y)^2", "y - 3*(x+y)^2");
        CHECK(b.c(3, 0) == Rational(1));
        CHECK(b.c(2, 1) == Rational(3));
        CHECK(b.c(1, 2) == Rational(3));
        CHECK(b.c(0, 3) == Rational(1));

        try {
            table_of("x + x^2", "y");
            FAIL("expected InconsistentCoefficients");
        } catch (const InconsistentCoefficientsError& e) {
            CHECK(e.code() == ErrorCode::InconsistentCoefficients);
            CHECK(e.degree() == 2);
            CHECK(e.j() == 1);
            CHECK(e.residual() == Rational(2));
        }
    }

    TEST_CASE("extract_c_table preconditions") {
        CHECK_THROWS_AS(extract_c_table(decompose(P("2*x + y^2"), P("y"))), Error);
        CHECK_THROWS_AS(extract_c_table(decompose(P("x + x^2 + x^3"), P("y"))), NotScatteredError);
        CHECK(extract_c_table(decompose(P("x"), P("y"))).degrees().empty());
    }

    TEST_CASE("Case-2 table follows the display sign convention") {
        const CoefficientTable t = table_of("x", "y - 3*x^2");
        CHECK(t.c(3, 0) == Rational(1));
        CHECK(t.row(2) == R({1, 0, 0, 0}));
    }

    TEST_CASE("build_structure_matrix examples") {
        const StructureMatrix a = build_structure_matrix(2, table_of("x + 3*(x+y)^2", "y - 3*(x+y)^2"));
        CHECK(a.rows[0] == R({3, 6, 3}));
        CHECK(a.rows[1] == R({3, 6, 3}));
        CHECK(a.columns() == 3);

        CoefficientTable zero;
        zero.set_row(2, R({0, 0, 0, 0}));
        const StructureMatrix z = build_structure_matrix(2, zero);
        CHECK(z.rows[0] == R({0, 0, 0}));
        CHECK(z.rows[1] == R({0, 0, 0}));

        const StructureMatrix c = build_structure_matrix(2, table_of("x + 3*y^2", "y"));
        CHECK(c.rows[0] == R({0, 0, 3}));
        CHECK(c.rows[1] == R({0, 0, 0}));
        CHECK(c.entry(1, 3) == Rational(3));
    }

    TEST_CASE("minor_A examples") {
        CHECK(minor_A(matrix(2, {3, 6, 3}, {3, 6, 3}), 1, 2).is_zero());
        CHECK(minor_A(matrix(2, {0, 0, 3}, {0, 0, 0}), 1, 3).is_zero());
        CHECK(minor_A(matrix(2, {1, 2, 0}, {0, 2, 1}), 1, 2) == Rational(2));
        CHECK(minor_A(matrix(2, {1, 2, 0}, {0, 2, 1}), 2, 1) == Rational(-2));
    }

    TEST_CASE("minor_B examples") {
        const StructureMatrix A = matrix(2, {1, 2, 0}, {0, 2, 1});
        for (std::uint32_t i = 1; i <= 3; ++i)
            for (std::uint32_t j = 1; j <= 3; ++j) CHECK(minor_B(A, A, i, j) == minor_A(A, i, j));

        CoefficientTable t;
        t.set_row(3, R({0, 0, 0, 0, 1}));
        const StructureMatrix Aq = build_structure_matrix(3, t);
        CHECK(Aq.rows[0] == R({0, 0, 0, 4}));
        CHECK(minor_B(matrix(2, {3, 6, 3}, {3, 6, 3}), Aq, 1, 4) == Rational(-12));

        const StructureMatrix Z = matrix(3, {0, 0, 0, 0}, {0, 0, 0, 0});
        for (std::uint32_t i = 1; i <= 3; ++i)
            for (std::uint32_t j = 1; j <= 4; ++j) CHECK(minor_B(A, Z, i, j).is_zero());
    }

    TEST_CASE("verify_minors examples") {
        CHECK(verify_minors(table_of("x + 3*(x+y)^2", "y - 3*(x+y)^2")).all_vanish);
        CHECK(verify_minors(table_of("x + 3*y^2", "y")).all_vanish);

        CoefficientTable t;
        t.set_row(2, R({0, 1, 1, 0}));
        const MinorReport r = verify_minors(t);
        CHECK_FALSE(r.all_vanish);
        REQUIRE(r.a_minors.size() == 3);
        CHECK(r.a_minors[0].i == 1);
        CHECK(r.a_minors[0].j == 2);
        CHECK(r.a_minors[0].value == Rational(2));
    }

    TEST_CASE("minor enumeration order and counts") {
        Rng rng(401);
        const CoefficientTable t = testing::random_table(rng, {2, 5});
        const MinorReport r = verify_minors(t);
        CHECK(r.a_minors.size() == 3 + 15);
        CHECK(r.b_minors.size() == 3 * 6);
        for (std::size_t k = 1; k < r.a_minors.size(); ++k) {
            const auto& a = r.a_minors[k - 1];
            const auto& b = r.a_minors[k];
            CHECK(std::tuple(a.degree, a.i, a.j) < std::tuple(b.degree, b.i, b.j));
        }
        for (std::size_t k = 1; k < r.b_minors.size(); ++k) {
            const auto& a = r.b_minors[k - 1];
            const auto& b = r.b_minors[k];
            CHECK(std::tuple(a.d, a.e, a.i, a.j) < std::tuple(b.d, b.e, b.i, b.j));
        }
    }

    TEST_CASE("check_lemma_identity examples") {
        Rng rng(402);
        for (int trial = 0; trial < 20; ++trial) {
            const CoefficientTable t = testing::random_table(rng, {2});
            CHECK(check_lemma_identity(t, 2, 2).holds());
        }
        CoefficientTable zero;
        zero.set_row(4, R({0, 0, 0, 0, 0, 0}));
        for (std::uint32_t m = 2; m <= 5; ++m) {
            const IdentitySides s = check_lemma_identity(zero, 4, m);
            CHECK(s.lhs.is_zero());
            CHECK(s.rhs.is_zero());
        }
        const IdentitySides s = check_lemma_identity(table_of("x + 3*(x+y)^2", "y - 3*(x+y)^2"), 2, 2);
        CHECK(s.lhs.is_zero());
        CHECK(s.rhs.is_zero());
        CHECK_THROWS_AS(check_lemma_identity(zero, 4, 1), Error);
        CHECK_THROWS_AS(check_lemma_identity(zero, 4, 6), Error);
    }

    TEST_CASE("lemma identity for d=2 against hand expansion") {
        // f_2 = c21 x^2 + 2 c12 x y + 3 c03 y^2, g_2 = -(3 c30 x^2 + 2 c21 x y + c12 y^2).
        // m = 2 reads J_{2,0}, the x^2 coefficient of f_x g_y - f_y g_x:
        // (2 c21)(-2 c21) - (2 c12)(-6 c30) = -4 c21^2 + 12 c12 c30.
        Rng rng(403);
        for (int trial = 0; trial < 20; ++trial) {
            const CoefficientTable t = testing::random_table(rng, {2});
            const Rational c30 = t.c(3, 0), c21 = t.c(2, 1), c12 = t.c(1, 2);
            const IdentitySides s = check_lemma_identity(t, 2, 2);
            CHECK(s.lhs == Rational(-4) * c21 * c21 + Rational(12) * c12 * c30);
            CHECK(s.holds());
        }
    }

    TEST_CASE("check_bsquare_identity examples") {
        Rng rng(404);
        for (int trial = 0; trial < 20; ++trial) {
            const CoefficientTable t = testing::random_table(rng, {2, 3});
            CHECK(check_bsquare_identity(t, 2, 3).holds());
            CHECK(check_bsquare_identity(t, 3, 2).holds());
        }
        CoefficientTable zero;
        zero.set_row(2, R({0, 0, 0, 0}));
        zero.set_row(3, R({0, 0, 0, 0, 0}));
        const IdentitySides z = check_bsquare_identity(zero, 2, 3);
        CHECK(z.lhs.is_zero());
        CHECK(z.rhs.is_zero());

        GeneratorSpec spec;
        spec.degrees = {1, 2, 5};
        spec.kind = CaseKind::Case3;
        spec.seed = 9;
        const GeneratedMap m = generate_map(spec);
        const IdentitySides g = check_bsquare_identity(extract_c_table(decompose(m.f, m.g)), 2, 5);
        CHECK(g.lhs.is_zero());
        CHECK(g.rhs.is_zero());
    }

    TEST_CASE("check_bsquare_identity errors") {
        CoefficientTable t;
        t.set_row(1, R({0, 0, 0}));
        t.set_row(3, R({0, 0, 0, 0, 0}));
        try {
            check_bsquare_identity(t, 1, 3);
            FAIL("expected DegreeTooSmall");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegreeTooSmall);
        }
        CHECK_THROWS_AS(check_bsquare_identity(t, 3, 3), Error);
    }

    TEST_CASE("property: identities hold for unconstrained tables") {
        Rng rng(405);
        for (int trial = 0; trial < 60; ++trial) {
            const auto d = static_cast<std::uint32_t>(rng.between(2, 7));
            const auto e = static_cast<std::uint32_t>(rng.between(d + 1, 9));
            const CoefficientTable t = testing::random_table(rng, {d, e});
            for (std::uint32_t m = 2; m <= d + 1; ++m) CHECK(check_lemma_identity(t, d, m).holds());
            for (std::uint32_t m = 2; m <= e + 1; ++m) CHECK(check_lemma_identity(t, e, m).holds());
            CHECK(check_bsquare_identity(t, d, e).holds());
            CHECK(check_ladder_identity(t, d, e).holds());
        }
    }

    TEST_CASE("property: reconstruction round-trip on unit-Jacobian maps") {
        Rng rng(406);
        const auto sets = scattered_degree_sets(9, 4);
        for (int trial = 0; trial < 60; ++trial) {
            GeneratorSpec spec;
            spec.degrees = sets[rng.below(sets.size())];
            spec.kind = static_cast<CaseKind>(1 + trial % 3);
            spec.seed = rng.next();
            const GeneratedMap m = generate_map(spec);
            const DegreeDecomposition dec = decompose(m.f, m.g);
            const CoefficientTable t = extract_c_table(dec);
            for (std::uint32_t d : dec.nonlinear_degrees()) {
                const HomogeneousPair rebuilt = t.reconstruct(d);
                CHECK(rebuilt.fpart == dec.component(d).fpart);
                CHECK(rebuilt.gpart == dec.component(d).gpart);
            }
            CHECK(verify_minors(t).all_vanish);
            const auto nl = dec.nonlinear_degrees();
            for (std::size_t a = 0; a < nl.size(); ++a)
                for (std::size_t b = a + 1; b < nl.size(); ++b) {
                    const IdentitySides s = check_ladder_identity(t, nl[a], nl[b]);
                    CHECK(s.lhs.is_zero());
                    CHECK(s.rhs.is_zero());
                }
        }
    }

    TEST_CASE("property: table reconstruction inverts extraction for any consistent pieces") {
        // Any table defines pieces whose J_{d-j,j-1} residuals vanish, so it extracts back to itself.
        Rng rng(407);
        for (int trial = 0; trial < 60; ++trial) {
            const auto d = static_cast<std::uint32_t>(rng.between(2, 9));
            const CoefficientTable t = testing::random_table(rng, {d});
            const HomogeneousPair piece = t.reconstruct(d);
            if (piece.fpart.is_zero() && piece.gpart.is_zero()) continue;
            const CoefficientTable back =
                extract_c_table(decompose(P("x") + piece.fpart, P("y") + piece.gpart));
            CHECK(back == t);
        }
    }
}
