// Acceptance suite: one line per criterion, exact arithmetic throughout
// (tolerance zero everywhere). Exit code 0 iff every criterion passes.
#include "lie2/fixture_morphisms.hpp"
#include "lie2/io.hpp"

#include "oracles.hpp"

#include <iostream>
#include <random>

using namespace lie2;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << "\n";
    if (!ok)
        ++failures;
}

bool rejected_with_named_axiom(const Lie2Algebra& mutant) {
    const AxiomReport rep = check_lie2_axioms(mutant);
    if (rep.ok())
        return false;
    for (const auto& r : rep.results())
        if (!r.passed && r.witness && !r.witness->tuple.empty() &&
            !r.witness->residual.empty())
            return true;
    return false;
}

// ---- criterion 1 -----------------------------------------------------------

bool axiom_soundness() {
    bool ok = true;
    for (const auto& name : {"A_ab(2,1)", "AFF1", "SL2_SKEL", "D_ID"})
        ok = ok && check_lie2_axioms(fixtures(name)).ok();

    // 20 single-entry mutations of SL2_SKEL structure constants. A mutation
    // edits one independent entry (the antisymmetric closure is re-applied,
    // keeping the data well-formed so the verdict is about the axioms).
    // Entries whose mutation produces another valid Lie 2-algebra are
    // excluded: the three kappa-dual b00 directions and all l3 entries
    // (every top-degree cochain on a 3-dimensional g0 is a cocycle).
    struct Mut {
        char tensor; // 'b' = b00, 'm' = b01, 'd' = d
        int i, j, k;
    };
    const Mut entries[12] = {
        {'b', 0, 1, 0}, {'b', 0, 1, 1}, {'b', 0, 2, 0}, {'b', 0, 2, 2},
        {'b', 1, 2, 1}, {'b', 1, 2, 2}, {'m', 0, 0, 0}, {'m', 1, 0, 0},
        {'m', 2, 0, 0}, {'d', 0, 0, 0}, {'d', 1, 0, 0}, {'d', 2, 0, 0},
    };
    int count = 0;
    for (int pass = 0; pass < 2 && count < 20; ++pass) {
        const Rational delta = (pass == 0) ? Rational(1) : Rational(-1);
        for (const auto& m : entries) {
            if (count == 20)
                break;
            Lie2Algebra L = fixture_sl2_skel();
            if (m.tensor == 'b') {
                Vec v = L.b00.slice(m.i, m.j);
                v[static_cast<std::size_t>(m.k)] += delta;
                L.b00.set_antisym01(m.i, m.j, v);
            } else if (m.tensor == 'm') {
                L.b01.at(m.i, m.j, m.k) += delta;
            } else {
                L.d.at(m.i, m.j) += delta;
            }
            ++count;
            if (!rejected_with_named_axiom(L)) {
                std::cout << "  mutation " << count << " not rejected\n";
                ok = false;
            }
        }
    }
    ok = ok && (count == 20);
    return ok;
}

// ---- criterion 2 -----------------------------------------------------------

bool derivation_dimensions() {
    bool ok = true;
    const struct {
        const char* name;
        int dim;
    } table[] = {{"A_ab(2,1)", 6}, {"AFF1", 2}};
    for (const auto& row : table) {
        const Lie2Algebra L = fixtures(row.name);
        const auto basis = derivation_space(L);
        ok = ok && static_cast<int>(basis.size()) == row.dim;
        ok = ok && oracle::derivation_dim(L) == row.dim;
    }
    // every inner derivation of every fixture lies in the computed span
    for (const auto& name : fixture_names()) {
        const Lie2Algebra L = fixtures(name);
        const detail::DerSpace sp = detail::derivation_space_flat(L);
        for (int x = 0; x < L.n0; ++x) {
            const auto coords = coordinates_in_span(
                sp.flat, flatten_derivation(inner_derivation(L, L.unit0(x))));
            ok = ok && coords.has_value();
        }
    }
    return ok;
}

// ---- criterion 3 -----------------------------------------------------------

bool der2_strictness() {
    bool ok = true;
    for (const auto& name : fixture_names()) {
        const Lie2Algebra L = fixtures(name);
        ok = ok && check_lie2_axioms(build_der2(L)).ok();
        // equivariance: delta_bar([X, D]_C) = [X, delta_bar(D)]_Der on all
        // basis pairs
        const auto basis = derivation_space(L);
        for (const auto& X : basis)
            for (int hidx = 0; hidx < L.n0 * L.n1; ++hidx) {
                const Matrix D = unflatten_hom(L.n0, L.n1, unit_vec(L.n0 * L.n1, hidx));
                const Derivation0 lhs = delta_bar(L, X.x1 * D - D * X.x0);
                const Derivation0 rhs = detail::der_bracket_raw(L, X, delta_bar(L, D));
                ok = ok && (lhs == rhs);
            }
    }
    return ok;
}

// ---- criterion 4 -----------------------------------------------------------

bool der3_strictness() {
    bool ok = true;
    for (const auto& name : fixture_names()) {
        const Lie2Algebra L = fixtures(name);
        const Lie3Algebra T = build_der3(L);
        ok = ok && check_lie3_axioms(T).ok();
        ok = ok && T.c11.sym01();
        for (int c = 0; c < L.n1; ++c) {
            const Der3Element dd = der3_d(L, der3_d(L, Der3Element(L.unit1(c))));
            ok = ok && std::get<Derivation0>(dd).is_zero();
        }
    }
    return ok;
}

// ---- criterion 5 -----------------------------------------------------------

bool proposition_splittings() {
    bool ok = true;
    for (const auto& name : {"DIRECT_SL2_AFF1", "SEMIDIRECT_AFF1", "CURATED_OMEGA_THETA"}) {
        const MorphismFixture fx = morphism_fixture(name);
        const Extension E = extension_from_morphism(fx.g, fx.h, fx.f);
        if (!check_extension(E).ok()) {
            ok = false;
            continue;
        }
        Splitting s = canonical_splitting(E);
        Splitting sp = s;
        for (int u = 0; u < E.h.n0; ++u)
            for (int x = 0; x < E.g.n0; ++x)
                sp.s0.at(E.off0() + u, x) = Rational(u + x + 1, 2);
        for (int m = 0; m < E.h.n1; ++m)
            for (int a = 0; a < E.g.n1; ++a)
                sp.s1.at(E.off1() + m, a) = Rational(m + a + 1);

        const MorphismToDer3 f = morphism_from_splitting(E, s);
        const MorphismToDer3 fp = morphism_from_splitting(E, sp);
        ok = ok && check_morphism_to_der3(fx.g, fx.h, f).ok();
        ok = ok && check_morphism_to_der3(fx.g, fx.h, fp).ok();
        const EquivalenceWitness w = splitting_difference_witness(E, s, sp);
        ok = ok && check_equivalence_witness(fx.g, fx.h, f, fp, w).ok();
    }
    return ok;
}

// ---- criterion 6 -----------------------------------------------------------

bool classification_roundtrips() {
    bool ok = true;
    for (const auto& name : morphism_fixture_names()) {
        const MorphismFixture fx = morphism_fixture(name);

        // A: morphism -> extension -> morphism, exact component equality
        const Extension E = extension_from_morphism(fx.g, fx.h, fx.f);
        const MorphismToDer3 back = morphism_from_splitting(E, canonical_splitting(E));
        ok = ok && (back == fx.f);

        // C: witness -> iso -> witness
        Splitting sp = canonical_splitting(E);
        for (int u = 0; u < E.h.n0; ++u)
            for (int x = 0; x < E.g.n0; ++x)
                sp.s0.at(E.off0() + u, x) = Rational(2 * u + x + 1, 3);
        for (int m = 0; m < E.h.n1; ++m)
            for (int a = 0; a < E.g.n1; ++a)
                sp.s1.at(E.off1() + m, a) = Rational(m + 2 * a + 1);
        const MorphismToDer3 f = morphism_from_splitting(E, canonical_splitting(E));
        const MorphismToDer3 fp = morphism_from_splitting(E, sp);
        const EquivalenceWitness w =
            splitting_difference_witness(E, canonical_splitting(E), sp);

        const IsoTriple tri = witness_to_iso(fx.g, fx.h, f, fp, w);
        ok = ok && check_extension_iso(tri.e, tri.eprime, tri.iso).ok();
        const EquivalenceWitness back_w =
            iso_to_witness(tri.e, tri.eprime, tri.iso, canonical_splitting(tri.e),
                           canonical_splitting(tri.eprime));
        ok = ok && back_w.b0 == w.b0 && back_w.b1 == w.b1 && back_w.b2 == w.b2;
    }
    return ok;
}

// ---- criterion 7 -----------------------------------------------------------

bool remark_reduction() {
    bool ok = true;
    const Lie2Algebra g = fixture_a_ab(2, 0);
    const Lie2Algebra h = fixture_aff1(); // trivial Lie 2-algebra, h1 = 0
    MorphismToDer3 f = MorphismToDer3::zero(g, h);
    f.f0[0].x0.at(1, 0) = Rational(1);
    f.f0[1].x0.at(1, 0) = Rational(2);
    ok = ok && check_morphism_to_der3(g, h, f).ok();

    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 24; ++trial) {
        EquivalenceWitness w = EquivalenceWitness::zero(g, h);
        for (int u = 0; u < h.n0; ++u)
            for (int x = 0; x < g.n0; ++x)
                w.b0.at(u, x) = Rational(coef(rng));
        const MorphismToDer3 fp = oracle::apply_witness(g, h, f, w);
        ok = ok && check_morphism_to_der3(g, h, fp).ok();

        EquivalenceWitness cand = w;
        if (trial % 2 == 1)
            cand.b0.at(trial % 2, (trial / 2) % 2) += Rational(1);

        const AxiomReport rep = check_equivalence_witness(g, h, f, fp, cand);
        // b1 / b2 constraints degenerate with h1 = 0
        for (const auto& r : rep.results())
            if (r.name == "e4_f21" || r.name == "e5_f3")
                ok = ok && r.passed;
        const bool bc = oracle::bc_two_morphism_check(
            g, h, oracle::bc_project(g, h, f), oracle::bc_project(g, h, fp), cand.b0);
        ok = ok && (rep.ok() == bc);
        if (trial % 2 == 0)
            ok = ok && rep.ok();
    }
    return ok;
}

// ---- criterion 8 -----------------------------------------------------------

bool restricted_solver() {
    bool ok = true;

    // planted witness on abelian-h fixtures
    for (const auto& name : {"DID_PAIR", "SEMIDIRECT_AFF1", "PLANTED_PHI"}) {
        const MorphismFixture fx = morphism_fixture(name);
        EquivalenceWitness w = EquivalenceWitness::zero(fx.g, fx.h);
        for (int u = 0; u < fx.h.n0; ++u)
            for (int x = 0; x < fx.g.n0; ++x)
                w.b0.at(u, x) = Rational(u + 2 * x + 1);
        for (int m = 0; m < fx.h.n1; ++m)
            for (int a = 0; a < fx.g.n1; ++a)
                w.b1.at(m, a) = Rational(m + a + 2, 2);
        const MorphismToDer3 fp = oracle::apply_witness(fx.g, fx.h, fx.f, w);
        ok = ok && check_morphism_to_der3(fx.g, fx.h, fp).ok();
        const auto solved = solve_equivalence_restricted(fx.g, fx.h, fx.f, fp);
        ok = ok && solved.has_value();
        if (solved)
            ok = ok && check_equivalence_witness(fx.g, fx.h, fx.f, fp, *solved).ok();
    }

    // constructed non-equivalent pair: distinct characters of aff(1)
    const Lie2Algebra g = fixture_aff1();
    const Lie2Algebra h = fixture_a_ab(1, 0);
    MorphismToDer3 f = MorphismToDer3::zero(g, h);
    f.f0[0].x0.at(0, 0) = Rational(1);
    MorphismToDer3 fp = MorphismToDer3::zero(g, h);
    fp.f0[0].x0.at(0, 0) = Rational(2);
    const RestrictedSolveInfo info = solve_equivalence_restricted_info(g, h, f, fp);
    ok = ok && !info.witness.has_value();
    ok = ok && info.rank_augmented > info.rank_system;
    std::cout << "  rank certificate: system rank " << info.rank_system
              << ", augmented rank " << info.rank_augmented << " over " << info.unknowns
              << " unknowns\n";
    return ok;
}

} // namespace

int main() {
    criterion(1, "axiom verifier soundness (fixtures pass; 20 mutations rejected)",
              axiom_soundness());
    criterion(2, "derivation space dimensions match the independent oracle",
              derivation_dimensions());
    criterion(3, "Der(g) is a strict Lie 2-algebra; delta_bar is equivariant",
              der2_strictness());
    criterion(4, "DER(g) is a strict Lie 3-algebra; d^2 = 0; odd bracket symmetric",
              der3_strictness());
    criterion(5, "splittings induce verified morphisms; differences give witnesses",
              proposition_splittings());
    criterion(6, "round trips: morphism<->extension exact; witness<->iso exact",
              classification_roundtrips());
    criterion(7, "trivial-h reduction matches the Baez-Crans 2-morphism checker",
              remark_reduction());
    criterion(8, "restricted equivalence solver: planted witnesses and rank certificate",
              restricted_solver());
    std::cout << (failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: FAILURES PRESENT")
              << "\n";
    return failures == 0 ? 0 : 1;
}
