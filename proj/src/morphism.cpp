#include "lie2/morphism.hpp"

namespace lie2 {

using detail::der3_br_01;
using detail::der3_br_02;
using detail::der3_br_11;
using detail::der3_d1;
using detail::der3_d2;
using detail::der_bracket_raw;

Lie2Morphism Lie2Morphism::identity(const Lie2Algebra& L) {
    return Lie2Morphism{Matrix::identity(L.n0), Matrix::identity(L.n1),
                        Tensor3(L.n0, L.n0, L.n1)};
}

Lie2Morphism Lie2Morphism::zero(const Lie2Algebra& src, const Lie2Algebra& dst) {
    return Lie2Morphism{Matrix(dst.n0, src.n0), Matrix(dst.n1, src.n1),
                        Tensor3(src.n0, src.n0, dst.n1)};
}

AxiomReport check_lie2_morphism(const Lie2Algebra& src, const Lie2Algebra& dst,
                                const Lie2Morphism& f) {
    if (f.f0.rows() != dst.n0 || f.f0.cols() != src.n0 || f.f1.rows() != dst.n1 ||
        f.f1.cols() != src.n1 || f.f2.dim0() != src.n0 || f.f2.dim1() != src.n0 ||
        f.f2.dim2() != dst.n1)
        throw StructuralError("check_lie2_morphism: shape mismatch");
    if (!f.f2.antisym01())
        throw StructuralError("check_lie2_morphism: f2 is not antisymmetric");

    AxiomReport rep;
    for (const char* name : {"chain", "bracket0", "bracket1", "coherence"})
        rep.ensure(name);

    // d' f1 = f0 d
    const Matrix chain = dst.d * f.f1 - f.f0 * src.d;
    for (int p = 0; p < src.n1; ++p)
        rep.record("chain", {p}, chain.column(p));

    // f0 l2(x,y) - l2'(f0 x, f0 y) = d' f2(x,y)
    for (int i = 0; i < src.n0; ++i)
        for (int j = 0; j < src.n0; ++j) {
            Vec r = f.f0.apply(src.b00.slice(i, j));
            r = sub(r, dst.l2_00(f.f0.column(i), f.f0.column(j)));
            r = sub(r, dst.dmap(f.f2.slice(i, j)));
            rep.record("bracket0", {i, j}, r);
        }

    // f1 l2(x,a) - l2'(f0 x, f1 a) = f2(x, d a)
    for (int i = 0; i < src.n0; ++i)
        for (int p = 0; p < src.n1; ++p) {
            Vec r = f.f1.apply(src.b01.slice(i, p));
            r = sub(r, dst.l2_01(f.f0.column(i), f.f1.column(p)));
            r = sub(r, f.f2.contract(src.unit0(i), src.d.column(p)));
            rep.record("bracket1", {i, p}, r);
        }

    // l2'(f0 x, f2(y,z)) + c.p. + l3'(f0 x, f0 y, f0 z)
    //   = f2(l2(x,y), z) + c.p. + f1(l3(x,y,z))
    for (int i = 0; i < src.n0; ++i)
        for (int j = 0; j < src.n0; ++j)
            for (int k = 0; k < src.n0; ++k) {
                const int c[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                Vec r = dst.l3e(f.f0.column(i), f.f0.column(j), f.f0.column(k));
                for (const auto& t : c) {
                    r = add(r, dst.l2_01(f.f0.column(t[0]), f.f2.slice(t[1], t[2])));
                    r = sub(r, f.f2.contract(src.b00.slice(t[0], t[1]), src.unit0(t[2])));
                }
                r = sub(r, f.f1.apply(src.l3.slice(i, j, k)));
                rep.record("coherence", {i, j, k}, r);
            }

    return rep;
}

MorphismToDer3 MorphismToDer3::zero(const Lie2Algebra& g, const Lie2Algebra& h) {
    MorphismToDer3 f;
    f.hn0 = h.n0;
    f.hn1 = h.n1;
    f.f0.assign(static_cast<std::size_t>(g.n0), Derivation0::zero(h.n0, h.n1));
    f.f1.assign(static_cast<std::size_t>(g.n1), DerDegree1::zero(h.n0, h.n1));
    f.f2_0.assign(static_cast<std::size_t>(g.n0),
                  std::vector<DerDegree1>(static_cast<std::size_t>(g.n0),
                                          DerDegree1::zero(h.n0, h.n1)));
    f.f2_1 = Tensor3(g.n0, g.n1, h.n1);
    f.f3 = Tensor4(g.n0, g.n0, g.n0, h.n1);
    return f;
}

Derivation0 MorphismToDer3::f0_eval(const Vec& x) const {
    Derivation0 r = Derivation0::zero(hn0, hn1);
    for (std::size_t i = 0; i < f0.size(); ++i)
        if (!x[i].is_zero())
            r = r + x[i] * f0[i];
    return r;
}

DerDegree1 MorphismToDer3::f1_eval(const Vec& a) const {
    DerDegree1 r = DerDegree1::zero(hn0, hn1);
    for (std::size_t p = 0; p < f1.size(); ++p)
        if (!a[p].is_zero())
            r = r + a[p] * f1[p];
    return r;
}

DerDegree1 MorphismToDer3::f2_0_eval(const Vec& x, const Vec& y) const {
    DerDegree1 r = DerDegree1::zero(hn0, hn1);
    for (std::size_t i = 0; i < f2_0.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < f2_0.size(); ++j)
            if (!y[j].is_zero())
                r = r + (x[i] * y[j]) * f2_0[i][j];
    }
    return r;
}

bool operator==(const MorphismToDer3& a, const MorphismToDer3& b) {
    return a.hn0 == b.hn0 && a.hn1 == b.hn1 && a.f0 == b.f0 && a.f1 == b.f1 &&
           a.f2_0 == b.f2_0 && a.f2_1 == b.f2_1 && a.f3 == b.f3;
}

namespace {

void require_morphism_shapes(const Lie2Algebra& g, const Lie2Algebra& h,
                             const MorphismToDer3& f) {
    if (f.hn0 != h.n0 || f.hn1 != h.n1)
        throw StructuralError("morphism: target dimensions do not match h");
    auto der0_ok = [&](const Derivation0& c) {
        return c.x0.rows() == h.n0 && c.x0.cols() == h.n0 && c.x1.rows() == h.n1 &&
               c.x1.cols() == h.n1 && c.lx.dim0() == h.n0 && c.lx.dim1() == h.n0 &&
               c.lx.dim2() == h.n1 && c.lx.antisym01();
    };
    auto der1_ok = [&](const DerDegree1& e) {
        return e.d.rows() == h.n1 && e.d.cols() == h.n0 && static_cast<int>(e.x.size()) == h.n0;
    };
    if (static_cast<int>(f.f0.size()) != g.n0 || static_cast<int>(f.f1.size()) != g.n1)
        throw StructuralError("morphism: f0/f1 arity mismatch");
    for (const auto& c : f.f0)
        if (!der0_ok(c))
            throw StructuralError("morphism: f0 value shape mismatch");
    for (const auto& e : f.f1)
        if (!der1_ok(e))
            throw StructuralError("morphism: f1 value shape mismatch");
    if (static_cast<int>(f.f2_0.size()) != g.n0)
        throw StructuralError("morphism: f2_0 arity mismatch");
    for (int i = 0; i < g.n0; ++i) {
        if (static_cast<int>(f.f2_0[i].size()) != g.n0)
            throw StructuralError("morphism: f2_0 arity mismatch");
        for (int j = 0; j < g.n0; ++j) {
            if (!der1_ok(f.f2_0[i][j]))
                throw StructuralError("morphism: f2_0 value shape mismatch");
            const DerDegree1 s = f.f2_0[i][j] + f.f2_0[j][i];
            if (!s.is_zero())
                throw StructuralError("morphism: f2_0 is not antisymmetric");
        }
    }
    if (f.f2_1.dim0() != g.n0 || f.f2_1.dim1() != g.n1 || f.f2_1.dim2() != h.n1)
        throw StructuralError("morphism: f2_1 shape mismatch");
    if (f.f3.dim0() != g.n0 || f.f3.dim1() != g.n0 || f.f3.dim2() != g.n0 ||
        f.f3.dim3() != h.n1)
        throw StructuralError("morphism: f3 shape mismatch");
    if (!f.f3.antisym012())
        throw StructuralError("morphism: f3 is not totally antisymmetric");
}

Vec flatten_der1(const DerDegree1& e) { return concat(flatten_hom(e.d), e.x); }

} // namespace

AxiomReport check_morphism_to_der3(const Lie2Algebra& g, const Lie2Algebra& h,
                                   const MorphismToDer3& f) {
    require_morphism_shapes(g, h, f);
    AxiomReport rep;
    for (const char* name : {"f0_derivation", "m1_chain", "m2_bracket0", "m3_bracket1",
                             "m4_odd_pair", "m5_jacobi", "m6_mixed", "m7_jacobiator"})
        rep.ensure(name);
    const int n0 = g.n0, n1 = g.n1;

    // f0 must land in Der^0(h)
    for (int i = 0; i < n0; ++i) {
        const AxiomReport sub_rep = derivation_check(h, f.f0[i]);
        Vec resid;
        for (const auto& r : sub_rep.results())
            if (!r.passed && r.witness)
                resid = concat(resid, r.witness->residual);
        rep.record("f0_derivation", {i}, resid.empty() ? zero_vec(0) : resid);
    }

    // (1) d_D f1(a) = f0(d a)
    for (int p = 0; p < n1; ++p) {
        const Derivation0 r = der3_d1(h, f.f1[p]) - f.f0_eval(g.d.column(p));
        rep.record("m1_chain", {p}, flatten_derivation(r));
    }

    // (2) f0 l2(x,y) - [[f0 x, f0 y]] = d_D f2_0(x,y)
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) {
            Derivation0 r = f.f0_eval(g.b00.slice(i, j));
            r = r - der_bracket_raw(h, f.f0[i], f.f0[j]);
            r = r - der3_d1(h, f.f2_0[i][j]);
            rep.record("m2_bracket0", {i, j}, flatten_derivation(r));
        }

    // (3) f1 l2(x,a) - [[f0 x, f1 a]] = f2_0(x, d a) + d_D f2_1(x,a)
    for (int i = 0; i < n0; ++i)
        for (int p = 0; p < n1; ++p) {
            DerDegree1 r = f.f1_eval(g.b01.slice(i, p));
            r = r - der3_br_01(h, f.f0[i], f.f1[p]);
            r = r - f.f2_0_eval(g.unit0(i), g.d.column(p));
            r = r - der3_d2(h, f.f2_1.slice(i, p));
            rep.record("m3_bracket1", {i, p}, flatten_der1(r));
        }

    // (4) [[f1 a, f1 b]] = f2_1(a, d b) - f2_1(d a, b); with the stored
    // orientation both right-hand terms pick up a sign.
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n1; ++q) {
            Vec r = der3_br_11(f.f1[p], f.f1[q]);
            r = add(r, f.f2_1.contract(g.d.column(p), g.unit1(q)));
            r = add(r, f.f2_1.contract(g.d.column(q), g.unit1(p)));
            rep.record("m4_odd_pair", {p, q}, r);
        }

    // (5) f2_0(l2(x,y),z) + c.p. + f1(l3(x,y,z))
    //       = [[f0 x, f2_0(y,z)]] + c.p. + d_D f3(x,y,z)
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n0; ++k) {
                const int c[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                DerDegree1 r = f.f1_eval(g.l3.slice(i, j, k));
                for (const auto& t : c) {
                    r = r + f.f2_0_eval(g.b00.slice(t[0], t[1]), g.unit0(t[2]));
                    r = r - der3_br_01(h, f.f0[t[0]], f.f2_0[t[1]][t[2]]);
                }
                r = r - der3_d2(h, f.f3.slice(i, j, k));
                rep.record("m5_jacobi", {i, j, k}, flatten_der1(r));
            }

    // (6) f2_1(l2(x,y),a) + c.p. + f3(x,y,da)
    //       = [[f0 x, f2_1(y,a)]] + [[f0 y, f2_1(a,x)]] - [[f1 a, f2_0(x,y)]]
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int p = 0; p < n1; ++p) {
                Vec r = f.f2_1.contract(g.b00.slice(i, j), g.unit1(p));
                r = sub(r, f.f2_1.contract(g.unit0(i), g.b01.slice(j, p)));
                r = add(r, f.f2_1.contract(g.unit0(j), g.b01.slice(i, p)));
                r = add(r, f.f3.contract(g.unit0(i), g.unit0(j), g.dmap(g.unit1(p))));
                r = sub(r, der3_br_02(f.f0[i], f.f2_1.slice(j, p)));
                r = add(r, der3_br_02(f.f0[j], f.f2_1.slice(i, p)));
                r = add(r, der3_br_11(f.f1[p], f.f2_0[i][j]));
                rep.record("m6_mixed", {i, j, p}, r);
            }

    // (7) the n = 4 coherence with unshuffle signs:
    //   sum_{2,2} sgn f3(l2(xi,xj),xk,xl)
    //   + ([[f2_0(x1,x2),f2_0(x3,x4)]] - [[f2_0(x1,x3),f2_0(x2,x4)]]
    //      + [[f2_0(x1,x4),f2_0(x2,x3)]])
    //   + sum_{3,1} sgn ( f2_1(xl, l3(xi,xj,xk)) + [[f0 xl, f3(xi,xj,xk)]] ) = 0
    static const int unsh22[6][5] = {{0, 1, 2, 3, +1}, {0, 2, 1, 3, -1}, {0, 3, 1, 2, +1},
                                     {1, 2, 0, 3, +1}, {1, 3, 0, 2, -1}, {2, 3, 0, 1, +1}};
    static const int unsh31[4][5] = {{0, 1, 2, 3, +1}, {0, 1, 3, 2, -1}, {0, 2, 3, 1, +1},
                                     {1, 2, 3, 0, -1}};
    static const int pairings[3][5] = {{0, 1, 2, 3, +1}, {0, 2, 1, 3, -1}, {0, 3, 1, 2, +1}};
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n0; ++k)
                for (int l = 0; l < n0; ++l) {
                    const int idx[4] = {i, j, k, l};
                    Vec r = zero_vec(h.n1);
                    for (const auto& u : unsh22) {
                        const Vec t = f.f3.contract(g.b00.slice(idx[u[0]], idx[u[1]]),
                                                    g.unit0(idx[u[2]]), g.unit0(idx[u[3]]));
                        r = (u[4] > 0) ? add(r, t) : sub(r, t);
                    }
                    for (const auto& u : pairings) {
                        const Vec t = der3_br_11(f.f2_0[idx[u[0]]][idx[u[1]]],
                                                 f.f2_0[idx[u[2]]][idx[u[3]]]);
                        r = (u[4] > 0) ? add(r, t) : sub(r, t);
                    }
                    for (const auto& u : unsh31) {
                        Vec t = f.f2_1.contract(g.unit0(idx[u[3]]),
                                                g.l3.slice(idx[u[0]], idx[u[1]], idx[u[2]]));
                        t = add(t, der3_br_02(f.f0[idx[u[3]]],
                                              f.f3.slice(idx[u[0]], idx[u[1]], idx[u[2]])));
                        r = (u[4] > 0) ? add(r, t) : sub(r, t);
                    }
                    rep.record("m7_jacobiator", {i, j, k, l}, r);
                }

    return rep;
}

EquivalenceWitness EquivalenceWitness::zero(const Lie2Algebra& g, const Lie2Algebra& h) {
    return EquivalenceWitness{Matrix(h.n0, g.n0), Matrix(h.n1, g.n1),
                              Tensor3(g.n0, g.n0, h.n1)};
}

namespace {

void require_witness_shapes(const Lie2Algebra& g, const Lie2Algebra& h,
                            const EquivalenceWitness& w) {
    if (w.b0.rows() != h.n0 || w.b0.cols() != g.n0 || w.b1.rows() != h.n1 ||
        w.b1.cols() != g.n1 || w.b2.dim0() != g.n0 || w.b2.dim1() != g.n0 ||
        w.b2.dim2() != h.n1)
        throw StructuralError("equivalence witness: shape mismatch");
    if (!w.b2.antisym01())
        throw StructuralError("equivalence witness: b2 is not antisymmetric");
}

// h0 embeds into DER^1(h) as (0, u).
DerDegree1 emb_h0(const Lie2Algebra& h, const Vec& u) {
    return DerDegree1{Matrix(h.n1, h.n0), u};
}

struct WitnessEquations {
    const Lie2Algebra& g;
    const Lie2Algebra& h;
    const MorphismToDer3& f;
    const MorphismToDer3& fp;

    // (E1) f0 - f0' = d_D b0
    Derivation0 e1(const EquivalenceWitness& w, int i) const {
        return (f.f0[i] - fp.f0[i]) - inner_derivation(h, w.b0.column(i));
    }

    // (E2) f1 - f1' = b0 d_g + d_D b1
    DerDegree1 e2(const EquivalenceWitness& w, int p) const {
        DerDegree1 r = f.f1[p] - fp.f1[p];
        r = r - emb_h0(h, w.b0.apply(g.d.column(p)));
        r = r - der3_d2(h, w.b1.column(p));
        return r;
    }

    // (E3) (f2_0' - f2_0)(x,y) = [[f0' x, b0 y]] - [[f0' y, b0 x]] - b0([x,y])
    //       + [[d_D b0 x, b0 y]] - d_D b2(x,y)
    DerDegree1 e3(const EquivalenceWitness& w, int i, int j) const {
        DerDegree1 r = fp.f2_0[i][j] - f.f2_0[i][j];
        r = r - der3_br_01(h, fp.f0[i], emb_h0(h, w.b0.column(j)));
        r = r + der3_br_01(h, fp.f0[j], emb_h0(h, w.b0.column(i)));
        r = r + emb_h0(h, w.b0.apply(g.b00.slice(i, j)));
        r = r - der3_br_01(h, inner_derivation(h, w.b0.column(i)),
                           emb_h0(h, w.b0.column(j)));
        r = r + der3_d2(h, w.b2.slice(i, j));
        return r;
    }

    // (E4) (f2_1' - f2_1)(x,a) = [[f0' x, b1 a]] + [[f1' a, b0 x]] - b1([x,a])
    //       + [[d_D b0 x, b1 a]] + b2(x, d a)
    Vec e4(const EquivalenceWitness& w, int i, int p) const {
        Vec r = sub(fp.f2_1.slice(i, p), f.f2_1.slice(i, p));
        r = sub(r, der3_br_02(fp.f0[i], w.b1.column(p)));
        r = sub(r, der3_br_11(fp.f1[p], emb_h0(h, w.b0.column(i))));
        r = add(r, w.b1.apply(g.b01.slice(i, p)));
        r = sub(r, der3_br_02(inner_derivation(h, w.b0.column(i)), w.b1.column(p)));
        r = sub(r, w.b2.contract(g.unit0(i), g.d.column(p)));
        return r;
    }

    // (E5) (f3' - f3)(x,y,z) = { [[f0' x, b2(y,z)]] - b2([x,y],z)
    //       + [[f2_0'(x,y), b0 z]] + [[d_D b0 x, b2(y,z)]]
    //       + l_{f0' x}(b0 y, b0 z) } + c.p.
    //       - b1(l3(x,y,z)) + l3_h(b0 x, b0 y, b0 z)
    Vec e5(const EquivalenceWitness& w, int i, int j, int k) const {
        Vec r = sub(fp.f3.slice(i, j, k), f.f3.slice(i, j, k));
        const int c[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : c) {
            const Vec b0x = w.b0.column(t[0]);
            const Vec b0y = w.b0.column(t[1]);
            const Vec b0z = w.b0.column(t[2]);
            Vec acc = der3_br_02(fp.f0[t[0]], w.b2.slice(t[1], t[2]));
            acc = sub(acc, w.b2.contract(g.b00.slice(t[0], t[1]), g.unit0(t[2])));
            acc = add(acc, der3_br_11(fp.f2_0[t[0]][t[1]], emb_h0(h, b0z)));
            acc = add(acc, der3_br_02(inner_derivation(h, b0x), w.b2.slice(t[1], t[2])));
            acc = add(acc, fp.f0[t[0]].lx.contract(b0y, b0z));
            r = sub(r, acc);
        }
        r = add(r, w.b1.apply(g.l3.slice(i, j, k)));
        r = sub(r, h.l3.contract(w.b0.column(i), w.b0.column(j), w.b0.column(k)));
        return r;
    }
};

} // namespace

AxiomReport check_equivalence_witness(const Lie2Algebra& g, const Lie2Algebra& h,
                                      const MorphismToDer3& f, const MorphismToDer3& fprime,
                                      const EquivalenceWitness& w) {
    require_morphism_shapes(g, h, f);
    require_morphism_shapes(g, h, fprime);
    require_witness_shapes(g, h, w);

    AxiomReport rep;
    {
        AxiomResult pre{"pre:f_is_morphism", check_morphism_to_der3(g, h, f).ok(), true, 1,
                        std::nullopt};
        rep.add_result(pre);
        AxiomResult prep{"pre:fprime_is_morphism", check_morphism_to_der3(g, h, fprime).ok(),
                         true, 1, std::nullopt};
        rep.add_result(prep);
    }

    for (const char* name : {"e1_chain0", "e2_chain1", "e3_f20", "e4_f21", "e5_f3"})
        rep.ensure(name);
    const WitnessEquations eq{g, h, f, fprime};
    for (int i = 0; i < g.n0; ++i)
        rep.record("e1_chain0", {i}, flatten_derivation(eq.e1(w, i)));
    for (int p = 0; p < g.n1; ++p) {
        const DerDegree1 r = eq.e2(w, p);
        rep.record("e2_chain1", {p}, concat(flatten_hom(r.d), r.x));
    }
    for (int i = 0; i < g.n0; ++i)
        for (int j = 0; j < g.n0; ++j) {
            const DerDegree1 r = eq.e3(w, i, j);
            rep.record("e3_f20", {i, j}, concat(flatten_hom(r.d), r.x));
        }
    for (int i = 0; i < g.n0; ++i)
        for (int p = 0; p < g.n1; ++p)
            rep.record("e4_f21", {i, p}, eq.e4(w, i, p));
    for (int i = 0; i < g.n0; ++i)
        for (int j = 0; j < g.n0; ++j)
            for (int k = 0; k < g.n0; ++k)
                rep.record("e5_f3", {i, j, k}, eq.e5(w, i, j, k));
    return rep;
}

RestrictedSolveInfo solve_equivalence_restricted_info(const Lie2Algebra& g,
                                                      const Lie2Algebra& h,
                                                      const MorphismToDer3& f,
                                                      const MorphismToDer3& fprime) {
    require_morphism_shapes(g, h, f);
    require_morphism_shapes(g, h, fprime);
    if (!h.b00.is_zero() || !h.b01.is_zero() || !h.l3.is_zero())
        throw UnsupportedError(
            "solve_equivalence_restricted: h must have zero brackets and l3 "
            "(verification-only mode is available for general h)");
    for (const auto& c : fprime.f0)
        if (!c.lx.is_zero())
            throw UnsupportedError(
                "solve_equivalence_restricted: l-components of fprime.f0 must vanish "
                "(the e5 equation is quadratic in b0 otherwise)");

    // Unknown packing: b0 row-major, b1 row-major, b2 pairs i<j.
    const int nb0 = h.n0 * g.n0, nb1 = h.n1 * g.n1;
    const int npairs = g.n0 * (g.n0 - 1) / 2;
    const int nunk = nb0 + nb1 + npairs * h.n1;

    auto unpack = [&](const Vec& u) {
        EquivalenceWitness w = EquivalenceWitness::zero(g, h);
        std::size_t t = 0;
        for (int i = 0; i < h.n0; ++i)
            for (int j = 0; j < g.n0; ++j)
                w.b0.at(i, j) = u[t++];
        for (int i = 0; i < h.n1; ++i)
            for (int j = 0; j < g.n1; ++j)
                w.b1.at(i, j) = u[t++];
        for (int i = 0; i < g.n0; ++i)
            for (int j = i + 1; j < g.n0; ++j) {
                Vec val(static_cast<std::size_t>(h.n1));
                for (int k = 0; k < h.n1; ++k)
                    val[static_cast<std::size_t>(k)] = u[t++];
                w.b2.set_antisym01(i, j, val);
            }
        return w;
    };

    const WitnessEquations eq{g, h, f, fprime};
    auto stacked = [&](const EquivalenceWitness& w) {
        Vec r;
        for (int i = 0; i < g.n0; ++i)
            r = concat(r, flatten_derivation(eq.e1(w, i)));
        for (int p = 0; p < g.n1; ++p) {
            const DerDegree1 v = eq.e2(w, p);
            r = concat(r, concat(flatten_hom(v.d), v.x));
        }
        for (int i = 0; i < g.n0; ++i)
            for (int j = i + 1; j < g.n0; ++j) {
                const DerDegree1 v = eq.e3(w, i, j);
                r = concat(r, concat(flatten_hom(v.d), v.x));
            }
        for (int i = 0; i < g.n0; ++i)
            for (int p = 0; p < g.n1; ++p)
                r = concat(r, eq.e4(w, i, p));
        for (int i = 0; i < g.n0; ++i)
            for (int j = i + 1; j < g.n0; ++j)
                for (int k = j + 1; k < g.n0; ++k)
                    r = concat(r, eq.e5(w, i, j, k));
        return r;
    };

    const Vec r0 = stacked(unpack(zero_vec(nunk)));
    const int rows = static_cast<int>(r0.size());
    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(nunk));
    for (int t = 0; t < nunk; ++t)
        cols.push_back(sub(stacked(unpack(unit_vec(nunk, t))), r0));

    const Matrix A = Matrix::from_columns(rows, cols);
    Vec rhs(r0);
    for (auto& v : rhs)
        v = -v;

    RestrictedSolveInfo info;
    info.unknowns = nunk;
    info.rank_system = rank(A);
    auto sol = solve_linear(A, rhs);
    if (!sol) {
        Matrix aug(rows, nunk + 1);
        aug.set_block(0, 0, A);
        for (int i = 0; i < rows; ++i)
            aug.at(i, nunk) = rhs[static_cast<std::size_t>(i)];
        info.rank_augmented = rank(aug);
        return info;
    }
    info.rank_augmented = info.rank_system;
    info.witness = unpack(sol->particular);
    return info;
}

std::optional<EquivalenceWitness> solve_equivalence_restricted(const Lie2Algebra& g,
                                                               const Lie2Algebra& h,
                                                               const MorphismToDer3& f,
                                                               const MorphismToDer3& fprime) {
    return solve_equivalence_restricted_info(g, h, f, fprime).witness;
}

} // namespace lie2
