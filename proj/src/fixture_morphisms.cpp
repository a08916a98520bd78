#include "lie2/fixture_morphisms.hpp"

namespace lie2 {

namespace {

MorphismFixture direct_sl2_aff1() {
    MorphismFixture fx{fixture_sl2_skel(), fixture_aff1(), {}};
    fx.f = MorphismToDer3::zero(fx.g, fx.h);
    return fx;
}

// aff(1) acting on h = A_ab(1,0) through the character e1 -> 1, e2 -> 0
// (it must kill [aff1, aff1] = span(e2) to be a Lie algebra map).
MorphismFixture semidirect_aff1() {
    MorphismFixture fx{fixture_aff1(), fixture_a_ab(1, 0), {}};
    fx.f = MorphismToDer3::zero(fx.g, fx.h);
    fx.f.f0[0].x0.at(0, 0) = Rational(1);
    return fx;
}

// g abelian of dimension 3, h = D_ID. With f0(x_i) = (c_i, c_i) the only
// surviving equation is the jacobi one, linear in (omega, theta); the
// witness values are produced by solve_linear against planted omega pins.
MorphismFixture curated_omega_theta() {
    MorphismFixture fx{fixture_a_ab(3, 0), fixture_d_id(), {}};
    fx.f = MorphismToDer3::zero(fx.g, fx.h);
    const Rational c[3] = {Rational(1), Rational(2), Rational(3)};
    for (int i = 0; i < 3; ++i) {
        fx.f.f0[static_cast<std::size_t>(i)].x0.at(0, 0) = c[i];
        fx.f.f0[static_cast<std::size_t>(i)].x1.at(0, 0) = c[i];
    }

    // Unknowns (u01, u02, u12, t): the jacobi equation on the basis triple,
    //   c0 u12 - c1 u02 + c2 u01 - t = 0,
    // plus pins u01 = 1, u02 = 2, u12 = 3.
    Matrix A(4, 4);
    A.at(0, 0) = c[2];
    A.at(0, 1) = -c[1];
    A.at(0, 2) = c[0];
    A.at(0, 3) = Rational(-1);
    A.at(1, 0) = Rational(1);
    A.at(2, 1) = Rational(1);
    A.at(3, 2) = Rational(1);
    const Vec rhs{Rational(0), Rational(1), Rational(2), Rational(3)};
    const auto sol = solve_linear(A, rhs);
    if (!sol)
        throw StructuralError("curated_omega_theta: pinned system unexpectedly unsolvable");
    const Vec& u = sol->particular;

    auto set_f20 = [&](int i, int j, const Rational& v) {
        DerDegree1 e = DerDegree1::zero(fx.h.n0, fx.h.n1);
        e.x[0] = v;
        fx.f.f2_0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        fx.f.f2_0[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            Rational(-1) * e;
    };
    set_f20(0, 1, u[0]);
    set_f20(0, 2, u[1]);
    set_f20(1, 2, u[2]);
    fx.f.f3.set_antisym012(0, 1, 2, Vec{u[3]});
    return fx;
}

// g = D_ID over abelian h with phi = 1 planted: the transferred differential
// acquires a nonzero off-block entry.
MorphismFixture planted_phi() {
    MorphismFixture fx{fixture_d_id(), fixture_a_ab(1, 0), {}};
    fx.f = MorphismToDer3::zero(fx.g, fx.h);
    fx.f.f1[0].x = Vec{Rational(-1)}; // f1 = (mu1, -phi) with phi(a) = 1
    return fx;
}

// g = h = D_ID with the two-parameter morphism family (c; D = c, u; nu = c u):
// exercises mu1, phi and nu all nonzero.
MorphismFixture did_pair() {
    MorphismFixture fx{fixture_d_id(), fixture_d_id(), {}};
    fx.f = MorphismToDer3::zero(fx.g, fx.h);
    const Rational c(2), u(3);
    fx.f.f0[0].x0.at(0, 0) = c;
    fx.f.f0[0].x1.at(0, 0) = c;
    fx.f.f1[0].d.at(0, 0) = c;
    fx.f.f1[0].x = Vec{u};
    fx.f.f2_1.at(0, 0, 0) = c * u;
    return fx;
}

} // namespace

MorphismFixture morphism_fixture(const std::string& name) {
    if (name == "DIRECT_SL2_AFF1")
        return direct_sl2_aff1();
    if (name == "SEMIDIRECT_AFF1")
        return semidirect_aff1();
    if (name == "CURATED_OMEGA_THETA")
        return curated_omega_theta();
    if (name == "PLANTED_PHI")
        return planted_phi();
    if (name == "DID_PAIR")
        return did_pair();
    throw StructuralError("unknown morphism fixture '" + name + "'");
}

std::vector<std::string> morphism_fixture_names() {
    return {"DIRECT_SL2_AFF1", "SEMIDIRECT_AFF1", "CURATED_OMEGA_THETA", "PLANTED_PHI",
            "DID_PAIR"};
}

} // namespace lie2
