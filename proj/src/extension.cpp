#include "lie2/extension.hpp"

namespace lie2 {

namespace {

Matrix block_inclusion(int total, int offset, int dim) {
    Matrix m(total, dim);
    for (int i = 0; i < dim; ++i)
        m.at(offset + i, i) = Rational(1);
    return m;
}

Matrix block_projection(int total, int offset, int dim) {
    Matrix m(dim, total);
    for (int i = 0; i < dim; ++i)
        m.at(i, offset + i) = Rational(1);
    return m;
}

Vec g_part(const Vec& v, int gdim) { return Vec(v.begin(), v.begin() + gdim); }
Vec h_part(const Vec& v, int gdim) { return Vec(v.begin() + gdim, v.end()); }

Vec require_h_valued(const Vec& v, int gdim, const char* what) {
    if (!is_zero_vec(g_part(v, gdim)))
        throw StructuralError(std::string(what) +
                              ": value has a nonzero g-component (extension not exact?)");
    return h_part(v, gdim);
}

void require_extension_shapes(const Extension& E) {
    validate_structure(E.g);
    validate_structure(E.h);
    validate_structure(E.ghat);
    if (E.ghat.n0 != E.g.n0 + E.h.n0 || E.ghat.n1 != E.g.n1 + E.h.n1)
        throw StructuralError("extension: ghat dimensions must be the block sums");
}

} // namespace

Matrix Extension::incl0() const { return block_inclusion(ghat.n0, off0(), h.n0); }
Matrix Extension::incl1() const { return block_inclusion(ghat.n1, off1(), h.n1); }
Matrix Extension::proj0() const { return block_projection(ghat.n0, 0, g.n0); }
Matrix Extension::proj1() const { return block_projection(ghat.n1, 0, g.n1); }

Splitting canonical_splitting(const Extension& E) {
    return Splitting{block_inclusion(E.ghat.n0, 0, E.g.n0),
                     block_inclusion(E.ghat.n1, 0, E.g.n1)};
}

void validate_splitting(const Extension& E, const Splitting& s) {
    if (s.s0.rows() != E.ghat.n0 || s.s0.cols() != E.g.n0 || s.s1.rows() != E.ghat.n1 ||
        s.s1.cols() != E.g.n1)
        throw StructuralError("splitting: shape mismatch");
    if (!(E.proj0() * s.s0 == Matrix::identity(E.g.n0)) ||
        !(E.proj1() * s.s1 == Matrix::identity(E.g.n1)))
        throw StructuralError("splitting: p o s is not the identity");
}

AxiomReport check_extension(const Extension& E) {
    require_extension_shapes(E);
    AxiomReport rep;

    const AxiomReport ghat_rep = check_lie2_axioms(E.ghat);
    for (const auto& r : ghat_rep.results()) {
        AxiomResult c = r;
        c.name = "ghat:" + c.name;
        rep.add_result(std::move(c));
    }
    // i and p are strict morphisms; the i check carries h-ideal closure of
    // the brackets and l3 restricted to the h-block, the p check carries the
    // bracket-homomorphism property onto g.
    const Lie2Morphism i{E.incl0(), E.incl1(), Tensor3(E.h.n0, E.h.n0, E.ghat.n1)};
    const AxiomReport i_rep = check_lie2_morphism(E.h, E.ghat, i);
    for (const auto& r : i_rep.results()) {
        AxiomResult c = r;
        c.name = "i:" + c.name;
        rep.add_result(std::move(c));
    }
    const Lie2Morphism p{E.proj0(), E.proj1(), Tensor3(E.ghat.n0, E.ghat.n0, E.g.n1)};
    const AxiomReport p_rep = check_lie2_morphism(E.ghat, E.g, p);
    for (const auto& r : p_rep.results()) {
        AxiomResult c = r;
        c.name = "p:" + c.name;
        rep.add_result(std::move(c));
    }
    // Block form makes im(i) = ker(p), ker(i) = 0, im(p) = g automatic.
    rep.add_result(AxiomResult{"exactness_block_form", true, false, 1, std::nullopt});
    return rep;
}

InducedData induced_data(const Extension& E, const Splitting& s) {
    require_extension_shapes(E);
    validate_splitting(E, s);
    const Lie2Algebra& g = E.g;
    const Lie2Algebra& h = E.h;
    const Lie2Algebra& gh = E.ghat;
    const int o0 = E.off0(), o1 = E.off1();

    auto emb_h0 = [&](int u) { return unit_vec(gh.n0, o0 + u); };
    auto emb_h1 = [&](int m) { return unit_vec(gh.n1, o1 + m); };

    InducedData D;
    D.phi = Matrix(h.n0, g.n1);
    for (int p = 0; p < g.n1; ++p) {
        const Vec v = sub(gh.dmap(s.s1.column(p)), s.s0.apply(g.d.column(p)));
        const Vec hp = require_h_valued(v, g.n0, "phi");
        for (int u = 0; u < h.n0; ++u)
            D.phi.at(u, p) = hp[static_cast<std::size_t>(u)];
    }

    D.mu0.reserve(static_cast<std::size_t>(g.n0));
    for (int x = 0; x < g.n0; ++x) {
        Derivation0 c = Derivation0::zero(h.n0, h.n1);
        const Vec sx = s.s0.column(x);
        for (int u = 0; u < h.n0; ++u) {
            const Vec col = require_h_valued(gh.l2_00(sx, emb_h0(u)), g.n0, "mu0");
            for (int r = 0; r < h.n0; ++r)
                c.x0.at(r, u) = col[static_cast<std::size_t>(r)];
        }
        for (int m = 0; m < h.n1; ++m) {
            const Vec col = require_h_valued(gh.l2_01(sx, emb_h1(m)), g.n1, "mu0");
            for (int r = 0; r < h.n1; ++r)
                c.x1.at(r, m) = col[static_cast<std::size_t>(r)];
        }
        for (int u = 0; u < h.n0; ++u)
            for (int v = u + 1; v < h.n0; ++v)
                c.lx.set_antisym01(
                    u, v, require_h_valued(gh.l3e(sx, emb_h0(u), emb_h0(v)), g.n1, "mu0 lx"));
        D.mu0.push_back(std::move(c));
    }

    D.mu1.reserve(static_cast<std::size_t>(g.n1));
    for (int a = 0; a < g.n1; ++a) {
        Matrix m(h.n1, h.n0);
        for (int u = 0; u < h.n0; ++u) {
            // mu1(a)(u) = [sigma(a), u] = -l2(u, sigma(a))
            const Vec col =
                require_h_valued(scale(Rational(-1), gh.l2_01(emb_h0(u), s.s1.column(a))),
                                 g.n1, "mu1");
            for (int r = 0; r < h.n1; ++r)
                m.at(r, u) = col[static_cast<std::size_t>(r)];
        }
        D.mu1.push_back(std::move(m));
    }

    D.mu2.assign(static_cast<std::size_t>(g.n0),
                 std::vector<Matrix>(static_cast<std::size_t>(g.n0), Matrix(h.n1, h.n0)));
    for (int x = 0; x < g.n0; ++x)
        for (int y = 0; y < g.n0; ++y) {
            Matrix m(h.n1, h.n0);
            for (int u = 0; u < h.n0; ++u) {
                const Vec col = require_h_valued(
                    gh.l3e(s.s0.column(x), s.s0.column(y), emb_h0(u)), g.n1, "mu2");
                for (int r = 0; r < h.n1; ++r)
                    m.at(r, u) = col[static_cast<std::size_t>(r)];
            }
            D.mu2[x][y] = std::move(m);
        }

    D.omega = Tensor3(g.n0, g.n0, h.n0);
    for (int x = 0; x < g.n0; ++x)
        for (int y = x + 1; y < g.n0; ++y) {
            const Vec v = sub(s.s0.apply(g.b00.slice(x, y)),
                              gh.l2_00(s.s0.column(x), s.s0.column(y)));
            D.omega.set_antisym01(x, y, require_h_valued(v, g.n0, "omega"));
        }

    D.nu = Tensor3(g.n0, g.n1, h.n1);
    for (int x = 0; x < g.n0; ++x)
        for (int a = 0; a < g.n1; ++a) {
            const Vec v = sub(s.s1.apply(g.b01.slice(x, a)),
                              gh.l2_01(s.s0.column(x), s.s1.column(a)));
            const Vec hp = require_h_valued(v, g.n1, "nu");
            for (int r = 0; r < h.n1; ++r)
                D.nu.at(x, a, r) = hp[static_cast<std::size_t>(r)];
        }

    D.theta = Tensor4(g.n0, g.n0, g.n0, h.n1);
    for (int x = 0; x < g.n0; ++x)
        for (int y = x + 1; y < g.n0; ++y)
            for (int z = y + 1; z < g.n0; ++z) {
                const Vec v = sub(s.s1.apply(g.l3.slice(x, y, z)),
                                  gh.l3e(s.s0.column(x), s.s0.column(y), s.s0.column(z)));
                D.theta.set_antisym012(x, y, z, require_h_valued(v, g.n1, "theta"));
            }

    return D;
}

MorphismToDer3 morphism_from_splitting(const Extension& E, const Splitting& s) {
    const InducedData D = induced_data(E, s);
    MorphismToDer3 f = MorphismToDer3::zero(E.g, E.h);
    f.f0 = D.mu0;
    for (int a = 0; a < E.g.n1; ++a)
        f.f1[static_cast<std::size_t>(a)] =
            DerDegree1{D.mu1[static_cast<std::size_t>(a)],
                       scale(Rational(-1), D.phi.column(a))};
    for (int x = 0; x < E.g.n0; ++x)
        for (int y = 0; y < E.g.n0; ++y)
            f.f2_0[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                DerDegree1{Rational(-1) * D.mu2[static_cast<std::size_t>(x)]
                                                [static_cast<std::size_t>(y)],
                           D.omega.slice(x, y)};
    f.f2_1 = D.nu;
    f.f3 = D.theta;
    return f;
}

EquivalenceWitness splitting_difference_witness(const Extension& E, const Splitting& s,
                                                const Splitting& sprime) {
    validate_splitting(E, s);
    validate_splitting(E, sprime);
    EquivalenceWitness w = EquivalenceWitness::zero(E.g, E.h);
    const Matrix d0 = s.s0 - sprime.s0;
    const Matrix d1 = s.s1 - sprime.s1;
    for (int x = 0; x < E.g.n0; ++x) {
        const Vec hp = require_h_valued(d0.column(x), E.g.n0, "splitting difference");
        for (int u = 0; u < E.h.n0; ++u)
            w.b0.at(u, x) = hp[static_cast<std::size_t>(u)];
    }
    for (int a = 0; a < E.g.n1; ++a) {
        const Vec hp = require_h_valued(d1.column(a), E.g.n1, "splitting difference");
        for (int m = 0; m < E.h.n1; ++m)
            w.b1.at(m, a) = hp[static_cast<std::size_t>(m)];
    }
    return w;
}

Extension extension_from_morphism(const Lie2Algebra& g, const Lie2Algebra& h,
                                  const MorphismToDer3& f) {
    if (!check_morphism_to_der3(g, h, f).ok())
        throw PreconditionError("extension_from_morphism: f fails check_morphism_to_der3");

    const int n0 = g.n0 + h.n0, n1 = g.n1 + h.n1;
    Lie2Algebra gh = Lie2Algebra::zero(n0, n1);
    const int o0 = g.n0, o1 = g.n1;

    // Unpack (phi, mu0, mu1, mu2, omega, nu, theta) from f.
    auto mu0 = [&](int x) -> const Derivation0& { return f.f0[static_cast<std::size_t>(x)]; };
    auto mu1 = [&](int a) -> const Matrix& { return f.f1[static_cast<std::size_t>(a)].d; };
    auto phi = [&](int a) { return scale(Rational(-1), f.f1[static_cast<std::size_t>(a)].x); };
    auto mu2 = [&](int x, int y) {
        return Rational(-1) * f.f2_0[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].d;
    };
    auto omega = [&](int x, int y) {
        return f.f2_0[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].x;
    };

    auto put0 = [&](Vec& dst, const Vec& gval, int off) {
        for (std::size_t r = 0; r < gval.size(); ++r)
            dst[static_cast<std::size_t>(off) + r] += gval[r];
    };

    // d^(a + m) = d_g a + phi(a) + d_h m
    for (int a = 0; a < g.n1; ++a) {
        const Vec dg = g.d.column(a), ph = phi(a);
        for (int r = 0; r < g.n0; ++r)
            gh.d.at(r, a) = dg[static_cast<std::size_t>(r)];
        for (int r = 0; r < h.n0; ++r)
            gh.d.at(o0 + r, a) = ph[static_cast<std::size_t>(r)];
    }
    for (int m = 0; m < h.n1; ++m) {
        const Vec dh = h.d.column(m);
        for (int r = 0; r < h.n0; ++r)
            gh.d.at(o0 + r, o1 + m) = dh[static_cast<std::size_t>(r)];
    }

    // [x+u, y+v]^ = [x,y]_g - omega(x,y) + mu0(x)v - mu0(y)u + [u,v]_h
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j) {
            Vec val = zero_vec(n0);
            if (i < o0 && j < o0) {
                put0(val, g.b00.slice(i, j), 0);
                put0(val, scale(Rational(-1), omega(i, j)), o0);
            } else if (i < o0) {
                put0(val, mu0(i).x0.column(j - o0), o0);
            } else {
                put0(val, h.b00.slice(i - o0, j - o0), o0);
            }
            gh.b00.set_antisym01(i, j, val);
        }

    // [x+u, a+m]^ = [x,a]_g - nu(x,a) + mu0(x)m - mu1(a)u + [u,m]_h
    for (int i = 0; i < n0; ++i)
        for (int p = 0; p < n1; ++p) {
            Vec val = zero_vec(n1);
            if (i < o0 && p < o1) {
                put0(val, g.b01.slice(i, p), 0);
                put0(val, scale(Rational(-1), f.f2_1.slice(i, p)), o1);
            } else if (i < o0) {
                put0(val, mu0(i).x1.column(p - o1), o1);
            } else if (p < o1) {
                put0(val, scale(Rational(-1), mu1(p).column(i - o0)), o1);
            } else {
                put0(val, h.b01.slice(i - o0, p - o1), o1);
            }
            for (int r = 0; r < n1; ++r)
                gh.b01.at(i, p, r) = val[static_cast<std::size_t>(r)];
        }

    // l3^(x+u, y+v, z+w) = l3_g(x,y,z) - theta(x,y,z) + l3_h(u,v,w)
    //   + mu2(x,y)w + mu2(z,x)v + mu2(y,z)u
    //   + l_{mu0(x)}(v,w) + l_{mu0(y)}(w,u) + l_{mu0(z)}(u,v)
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j)
            for (int k = j + 1; k < n0; ++k) {
                Vec val = zero_vec(n1);
                if (k < o0) { // all g
                    put0(val, g.l3.slice(i, j, k), 0);
                    put0(val, scale(Rational(-1), f.f3.slice(i, j, k)), o1);
                } else if (j < o0) { // g, g, h
                    put0(val, mu2(i, j).column(k - o0), o1);
                } else if (i < o0) { // g, h, h
                    put0(val, mu0(i).lx.slice(j - o0, k - o0), o1);
                } else { // all h
                    put0(val, h.l3.slice(i - o0, j - o0, k - o0), o1);
                }
                gh.l3.set_antisym012(i, j, k, val);
            }

    return Extension{g, h, std::move(gh)};
}

AxiomReport check_extension_iso(const Extension& E, const Extension& Eprime,
                                const ExtensionIso& F) {
    require_extension_shapes(E);
    require_extension_shapes(Eprime);
    if (E.g.n0 != Eprime.g.n0 || E.g.n1 != Eprime.g.n1 || E.h.n0 != Eprime.h.n0 ||
        E.h.n1 != Eprime.h.n1)
        throw StructuralError("check_extension_iso: extensions must share g and h");
    if (F.f0.rows() != E.ghat.n0 || F.f0.cols() != E.ghat.n0 || F.f1.rows() != E.ghat.n1 ||
        F.f1.cols() != E.ghat.n1 || F.f2.dim0() != E.ghat.n0 || F.f2.dim1() != E.ghat.n0 ||
        F.f2.dim2() != E.h.n1)
        throw StructuralError("check_extension_iso: shape mismatch");
    if (!F.f2.antisym01())
        throw StructuralError("check_extension_iso: F2 is not antisymmetric");

    AxiomReport rep;

    // F o i = j and q o F = p (block compatibility)
    {
        const Matrix ri0 = F.f0 * E.incl0() - Eprime.incl0();
        const Matrix ri1 = F.f1 * E.incl1() - Eprime.incl1();
        Vec resid;
        for (int j = 0; j < ri0.cols(); ++j)
            resid = concat(resid, ri0.column(j));
        for (int j = 0; j < ri1.cols(); ++j)
            resid = concat(resid, ri1.column(j));
        rep.record("iso_fixes_h", {}, resid);
    }
    {
        const Matrix rp0 = Eprime.proj0() * F.f0 - E.proj0();
        const Matrix rp1 = Eprime.proj1() * F.f1 - E.proj1();
        Vec resid;
        for (int j = 0; j < rp0.cols(); ++j)
            resid = concat(resid, rp0.column(j));
        for (int j = 0; j < rp1.cols(); ++j)
            resid = concat(resid, rp1.column(j));
        rep.record("iso_covers_p", {}, resid);
    }

    // F2(i(u), alpha) = 0
    for (int u = 0; u < E.h.n0; ++u)
        for (int b = 0; b < E.ghat.n0; ++b)
            rep.record("f2_i_trivial", {u, b}, F.f2.slice(E.off0() + u, b));

    // Full Lie 2-morphism equations, with F2 embedded into ghat1'.
    Tensor3 f2emb(E.ghat.n0, E.ghat.n0, Eprime.ghat.n1);
    for (int a = 0; a < E.ghat.n0; ++a)
        for (int b = 0; b < E.ghat.n0; ++b)
            for (int m = 0; m < E.h.n1; ++m)
                f2emb.at(a, b, Eprime.off1() + m) = F.f2.at(a, b, m);
    const AxiomReport m_rep =
        check_lie2_morphism(E.ghat, Eprime.ghat, Lie2Morphism{F.f0, F.f1, f2emb});
    for (const auto& r : m_rep.results()) {
        AxiomResult c = r;
        c.name = "morphism:" + c.name;
        rep.add_result(std::move(c));
    }
    return rep;
}

EquivalenceWitness iso_to_witness(const Extension& E, const Extension& Eprime,
                                  const ExtensionIso& F, const Splitting& s,
                                  const Splitting& sprime) {
    validate_splitting(E, s);
    validate_splitting(Eprime, sprime);
    EquivalenceWitness w = EquivalenceWitness::zero(E.g, E.h);

    const Matrix d0 = F.f0 * s.s0 - sprime.s0;
    const Matrix d1 = F.f1 * s.s1 - sprime.s1;
    for (int x = 0; x < E.g.n0; ++x) {
        const Vec hp = require_h_valued(d0.column(x), E.g.n0, "iso_to_witness b0");
        for (int u = 0; u < E.h.n0; ++u)
            w.b0.at(u, x) = hp[static_cast<std::size_t>(u)];
    }
    for (int a = 0; a < E.g.n1; ++a) {
        const Vec hp = require_h_valued(d1.column(a), E.g.n1, "iso_to_witness b1");
        for (int m = 0; m < E.h.n1; ++m)
            w.b1.at(m, a) = hp[static_cast<std::size_t>(m)];
    }
    for (int x = 0; x < E.g.n0; ++x)
        for (int y = x + 1; y < E.g.n0; ++y)
            w.b2.set_antisym01(x, y, F.f2.contract(s.s0.column(x), s.s0.column(y)));
    return w;
}

IsoTriple witness_to_iso(const Lie2Algebra& g, const Lie2Algebra& h, const MorphismToDer3& f,
                         const MorphismToDer3& fprime, const EquivalenceWitness& w) {
    if (!check_equivalence_witness(g, h, f, fprime, w).ok())
        throw PreconditionError("witness_to_iso: witness fails check_equivalence_witness");

    IsoTriple out{extension_from_morphism(g, h, f), extension_from_morphism(g, h, fprime),
                  ExtensionIso{}};
    const int n0 = out.e.ghat.n0, n1 = out.e.ghat.n1;
    out.iso.f0 = Matrix::identity(n0);
    out.iso.f1 = Matrix::identity(n1);
    for (int u = 0; u < h.n0; ++u)
        for (int x = 0; x < g.n0; ++x)
            out.iso.f0.at(g.n0 + u, x) = w.b0.at(u, x);
    for (int m = 0; m < h.n1; ++m)
        for (int a = 0; a < g.n1; ++a)
            out.iso.f1.at(g.n1 + m, a) = w.b1.at(m, a);
    out.iso.f2 = Tensor3(n0, n0, h.n1);
    for (int x = 0; x < g.n0; ++x)
        for (int y = 0; y < g.n0; ++y)
            for (int m = 0; m < h.n1; ++m)
                out.iso.f2.at(x, y, m) = w.b2.at(x, y, m);
    return out;
}

} // namespace lie2
