#include "lie2/algebra.hpp"
#include "lie2/derivation.hpp"

#include "doctest.h"

#include <random>

using namespace lie2;

TEST_CASE("fixtures pass all five axioms") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const AxiomReport rep = check_lie2_axioms(fixtures(name));
        CHECK(rep.ok());
        CHECK(rep.results().size() == 5);
    }
    CHECK(check_lie2_axioms(fixture_a_ab(4, 3)).ok());
    CHECK_THROWS_AS(fixtures("NOPE"), StructuralError);
    CHECK(fixtures("A_ab(3,2)").n0 == 3);
}

TEST_CASE("zero-dimensional components are handled throughout") {
    const Lie2Algebra z = fixture_a_ab(0, 0);
    CHECK(check_lie2_axioms(z).ok());
    CHECK(derivation_space(z).empty());
    CHECK(check_lie2_axioms(build_der2(z)).ok());
    CHECK(check_lie3_axioms(build_der3(z)).ok());
    const Lie2Algebra g1only = fixture_a_ab(0, 2); // d: 0 x 2
    CHECK(check_lie2_axioms(g1only).ok());
    CHECK(derivation_space(g1only).size() == 4); // X1 free
}

TEST_CASE("broken antisymmetry is rejected before evaluation") {
    Lie2Algebra L = fixture_sl2_skel();
    L.b00.at(0, 1, 1) = Rational(5); // mirror entry not updated
    CHECK_THROWS_AS(check_lie2_axioms(L), StructuralError);

    Lie2Algebra M = fixture_sl2_skel();
    M.l3.at(0, 1, 2, 0) = Rational(9); // breaks total antisymmetry
    CHECK_THROWS_AS(check_lie2_axioms(M), StructuralError);
}

TEST_CASE("structure-constant mutations of sl2 are caught with a named axiom") {
    // [h,e] += h breaks jacobi
    {
        Lie2Algebra L = fixture_sl2_skel();
        Vec v = L.b00.slice(0, 1);
        v[0] += Rational(1);
        L.b00.set_antisym01(0, 1, v);
        const AxiomReport rep = check_lie2_axioms(L);
        CHECK_FALSE(rep.ok());
        const AxiomResult* j = rep.find("jacobi");
        REQUIRE(j != nullptr);
        CHECK_FALSE(j->passed);
        CHECK(j->witness.has_value());
        CHECK_FALSE(j->witness->tuple.empty());
    }
    // d += e_h breaks the chain axioms
    {
        Lie2Algebra L = fixture_sl2_skel();
        L.d.at(0, 0) = Rational(1);
        const AxiomReport rep = check_lie2_axioms(L);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.find("chain_mixed")->passed);
    }
    // b01 += E breaks the mixed jacobi identity
    {
        Lie2Algebra L = fixture_sl2_skel();
        L.b01.at(0, 0, 0) = Rational(1);
        const AxiomReport rep = check_lie2_axioms(L);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.find("mixed_jacobi")->passed);
    }
}

TEST_CASE("bilinearity of the structure-constant evaluation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (const auto& name : fixture_names()) {
        const Lie2Algebra L = fixtures(name);
        if (L.n0 == 0)
            continue;
        for (int t = 0; t < 20; ++t) {
            const Rational alpha(coef(rng), 3);
            Vec x(static_cast<std::size_t>(L.n0)), xp(static_cast<std::size_t>(L.n0)),
                y(static_cast<std::size_t>(L.n0));
            for (auto& e : x)
                e = Rational(coef(rng));
            for (auto& e : xp)
                e = Rational(coef(rng));
            for (auto& e : y)
                e = Rational(coef(rng));
            const Vec lhs = L.l2_00(add(scale(alpha, x), xp), y);
            const Vec rhs = add(scale(alpha, L.l2_00(x, y)), L.l2_00(xp, y));
            CHECK(lhs == rhs);
            if (L.n1 > 0) {
                Vec a(static_cast<std::size_t>(L.n1));
                for (auto& e : a)
                    e = Rational(coef(rng));
                CHECK(L.l2_01(add(scale(alpha, x), xp), a) ==
                      add(scale(alpha, L.l2_01(x, a)), L.l2_01(xp, a)));
            }
        }
    }
}

TEST_CASE("end_complex_lie2 examples") {
    // d = 0 on a 1+1 complex: no membership constraint
    {
        const EndLie2 E = end_complex_lie2(1, 1, Matrix(1, 1));
        CHECK(E.algebra.n0 == 2);
        CHECK(E.algebra.n1 == 1);
        CHECK(E.algebra.d.is_zero());
        CHECK(check_lie2_axioms(E.algebra).ok());
    }
    // d = id on a 1+1 complex: End^0 = {(c, c)}; in the normalized kernel
    // basis (X0, X1) = (1, 1) the differential sends D = 1 to coordinate 1.
    {
        Matrix d(1, 1);
        d.at(0, 0) = Rational(1);
        const EndLie2 E = end_complex_lie2(1, 1, d);
        CHECK(E.algebra.n0 == 1);
        CHECK(E.algebra.n1 == 1);
        CHECK(E.basis0.column(0) == Vec{Rational(1), Rational(1)});
        CHECK(E.algebra.d.at(0, 0) == Rational(1));
        CHECK(check_lie2_axioms(E.algebra).ok());
    }
    // the 2+1 example from the contract
    {
        Matrix d(2, 1);
        d.at(0, 0) = Rational(1);
        const EndLie2 E = end_complex_lie2(2, 1, d);
        CHECK(check_lie2_axioms(E.algebra).ok());
    }
}

TEST_CASE("end_complex_lie2 is a strict Lie 2-algebra for random d") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> dim(0, 3);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int t = 0; t < 12; ++t) {
        const int n0 = dim(rng), n1 = dim(rng);
        Matrix d(n0, n1);
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n1; ++j)
                d.at(i, j) = Rational(coef(rng), 2);
        CAPTURE(t);
        const EndLie2 E = end_complex_lie2(n0, n1, d);
        CHECK(E.algebra.l3.is_zero());
        CHECK(check_lie2_axioms(E.algebra).ok());
    }
}

TEST_CASE("lie3 axioms: zero algebra and symmetry validation") {
    CHECK(check_lie3_axioms(Lie3Algebra::zero(2, 2, 1)).ok());

    // an antisymmetric c11 on a nonzero example is rejected at load
    Lie3Algebra T = Lie3Algebra::zero(1, 2, 1);
    T.c11.at(0, 1, 0) = Rational(1);
    T.c11.at(1, 0, 0) = Rational(-1);
    CHECK_THROWS_AS(check_lie3_axioms(T), StructuralError);

    // the symmetric closure passes the structural check
    T.c11.at(1, 0, 0) = Rational(1);
    CHECK(check_lie3_axioms(T).results().size() == 3);
}

TEST_CASE("lie3 axiom checker reports genuine violations") {
    const Lie3Algebra good = build_der3(fixture_d_id());
    REQUIRE(check_lie3_axioms(good).ok());

    // break l1^2 = 0 (perturb the Hom-part of the degree-2 differential)
    {
        Lie3Algebra T = good;
        T.l1_21.at(0, 0) += Rational(1);
        const AxiomReport rep = check_lie3_axioms(T);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.find("l1_squared")->passed);
    }
    // break the Leibniz rule
    {
        Lie3Algebra T = good;
        T.c02.at(0, 0, 0) += Rational(1);
        const AxiomReport rep = check_lie3_axioms(T);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.find("l1_leibniz")->passed);
        CHECK(rep.find("l1_leibniz")->witness.has_value());
    }
    // deform the (0,1) bracket: graded jacobi breaks on a (0,1,1) tuple
    {
        Lie3Algebra T = good;
        T.c01.at(0, 1, 1) += Rational(1);
        const AxiomReport rep = check_lie3_axioms(T);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.find("graded_jacobi")->passed);
    }
}

TEST_CASE("graded bracket sign normalization") {
    Lie3Algebra T = Lie3Algebra::zero(2, 2, 1);
    T.c01.at(0, 1, 0) = Rational(3);
    const Vec x = unit_vec(2, 0), p = unit_vec(2, 1);
    const auto xy = l2_graded(T, 0, x, 1, p);
    REQUIRE(xy.has_value());
    CHECK(xy->second == Vec{Rational(3), Rational(0)});
    const auto yx = l2_graded(T, 1, p, 0, x);
    REQUIRE(yx.has_value());
    CHECK(yx->second == Vec{Rational(-3), Rational(0)}); // odd-even flips sign
    CHECK_FALSE(l2_graded(T, 1, p, 2, unit_vec(1, 0)).has_value());

    // typed wrapper validates and matches
    const auto ge = l2_graded(T, GradedElement{0, x}, GradedElement{1, p});
    REQUIRE(ge.has_value());
    CHECK(ge->degree == 1);
    CHECK(ge->coords == xy->second);
    CHECK_THROWS_AS(l2_graded(T, GradedElement{2, x}, GradedElement{1, p}),
                    StructuralError); // wrong coordinate length
    CHECK_THROWS_AS(validate_element(T, GradedElement{3, x}), StructuralError);
}
