#include "oracles.hpp"

namespace lie2::oracle {

int bareiss_rank(Matrix m) {
    const int rows = m.rows(), cols = m.cols();
    Rational prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // largest |entry| pivot, scanning bottom-up
        int piv = -1;
        Rational best(0);
        for (int i = rows - 1; i >= r; --i) {
            Rational a = m.at(i, c);
            if (a.sign() < 0)
                a = -a;
            if (a > best) {
                best = a;
                piv = i;
            }
        }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        const Rational p = m.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * p - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = Rational(0);
        }
        prev = p;
        ++r;
    }
    return r;
}

namespace {

// Literal transcriptions of Def 3.2, written against the tensor accessors
// only (no shared residual helpers).
Vec cond_a(const Lie2Algebra& L, const Derivation0& c, int i, int j) {
    Vec r = c.x0.apply(L.b00.slice(i, j));
    r = sub(r, L.b00.contract(c.x0.column(i), L.unit0(j)));
    r = sub(r, L.b00.contract(L.unit0(i), c.x0.column(j)));
    r = sub(r, L.d.apply(c.lx.slice(i, j)));
    return r;
}

Vec cond_b(const Lie2Algebra& L, const Derivation0& c, int i, int p) {
    Vec r = c.x1.apply(L.b01.slice(i, p));
    r = sub(r, L.b01.contract(c.x0.column(i), L.unit1(p)));
    r = sub(r, L.b01.contract(L.unit0(i), c.x1.column(p)));
    r = sub(r, c.lx.contract(L.unit0(i), L.d.column(p)));
    return r;
}

Vec cond_c(const Lie2Algebra& L, const Derivation0& c, int x, int y, int z) {
    Vec r = c.lx.contract(L.unit0(x), L.b00.slice(y, z));
    r = add(r, L.b01.contract(L.unit0(x), c.lx.slice(y, z)));
    r = add(r, L.l3.contract(c.x0.column(x), L.unit0(y), L.unit0(z)));
    r = add(r, L.l3.contract(L.unit0(x), c.x0.column(y), L.unit0(z)));
    r = add(r, L.l3.contract(L.unit0(x), L.unit0(y), c.x0.column(z)));
    r = sub(r, c.x1.apply(L.l3.slice(x, y, z)));
    r = sub(r, c.lx.contract(L.b00.slice(x, y), L.unit0(z)));
    r = sub(r, c.lx.contract(L.unit0(y), L.b00.slice(x, z)));
    r = add(r, L.b01.contract(L.unit0(z), c.lx.slice(x, y)));
    r = sub(r, L.b01.contract(L.unit0(y), c.lx.slice(x, z)));
    return r;
}

Vec stacked_reversed(const Lie2Algebra& L, const Derivation0& c) {
    Vec out;
    auto push = [&out](const Vec& v) { out.insert(out.end(), v.begin(), v.end()); };
    for (int x = L.n0 - 1; x >= 0; --x)
        for (int y = L.n0 - 1; y >= 0; --y)
            for (int z = L.n0 - 1; z >= 0; --z)
                push(cond_c(L, c, x, y, z));
    for (int i = L.n0 - 1; i >= 0; --i)
        for (int p = L.n1 - 1; p >= 0; --p)
            push(cond_b(L, c, i, p));
    for (int i = L.n0 - 1; i >= 0; --i)
        for (int j = L.n0 - 1; j >= 0; --j)
            push(cond_a(L, c, i, j));
    const Matrix memb = c.x0 * L.d - L.d * c.x1;
    for (int q = L.n1 - 1; q >= 0; --q)
        for (int i = L.n0 - 1; i >= 0; --i)
            out.push_back(memb.at(i, q));
    return out;
}

} // namespace

Matrix derivation_constraints_reversed(const Lie2Algebra& L) {
    const int nf = derivation_flat_dim(L.n0, L.n1);
    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(nf));
    int rows = static_cast<int>(stacked_reversed(L, Derivation0::zero(L.n0, L.n1)).size());
    for (int t = 0; t < nf; ++t)
        cols.push_back(stacked_reversed(L, unflatten_derivation(L.n0, L.n1, unit_vec(nf, t))));
    return Matrix::from_columns(rows, cols);
}

int derivation_dim(const Lie2Algebra& L) {
    return derivation_flat_dim(L.n0, L.n1) - bareiss_rank(derivation_constraints_reversed(L));
}

BcMorphism bc_project(const Lie2Algebra& g, const Lie2Algebra& h, const MorphismToDer3& f) {
    BcMorphism b;
    for (const auto& c : f.f0)
        b.f0.push_back(c.x0);
    b.f1 = Matrix(h.n0, g.n1);
    for (int p = 0; p < g.n1; ++p)
        for (int u = 0; u < h.n0; ++u)
            b.f1.at(u, p) = f.f1[static_cast<std::size_t>(p)].x[static_cast<std::size_t>(u)];
    b.f20.assign(static_cast<std::size_t>(g.n0),
                 std::vector<Vec>(static_cast<std::size_t>(g.n0), zero_vec(h.n0)));
    for (int i = 0; i < g.n0; ++i)
        for (int j = 0; j < g.n0; ++j)
            b.f20[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                f.f2_0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].x;
    return b;
}

bool bc_two_morphism_check(const Lie2Algebra& g, const Lie2Algebra& h, const BcMorphism& f,
                           const BcMorphism& fp, const Matrix& b0) {
    // f0 - f0' = ad o b0
    for (int x = 0; x < g.n0; ++x) {
        const Matrix lhs = f.f0[static_cast<std::size_t>(x)] -
                           fp.f0[static_cast<std::size_t>(x)];
        const Matrix ad = h.b00.map_of(b0.column(x));
        if (!(lhs == ad))
            return false;
    }
    // f1 - f1' = b0 o d_g
    if (!((f.f1 - fp.f1) == b0 * g.d))
        return false;
    // (f20' - f20)(x,y) = f0'(x) b0(y) - f0'(y) b0(x) - b0([x,y]) + [b0 x, b0 y]
    for (int x = 0; x < g.n0; ++x)
        for (int y = 0; y < g.n0; ++y) {
            Vec rhs = fp.f0[static_cast<std::size_t>(x)].apply(b0.column(y));
            rhs = sub(rhs, fp.f0[static_cast<std::size_t>(y)].apply(b0.column(x)));
            rhs = sub(rhs, b0.apply(g.b00.slice(x, y)));
            rhs = add(rhs, h.b00.contract(b0.column(x), b0.column(y)));
            const Vec lhs = sub(fp.f20[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)],
                                f.f20[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
            if (!is_zero_vec(sub(lhs, rhs)))
                return false;
        }
    return true;
}

MorphismToDer3 apply_witness(const Lie2Algebra& g, const Lie2Algebra& h,
                             const MorphismToDer3& f, const EquivalenceWitness& w) {
    using detail::der3_br_01;
    using detail::der3_br_02;
    using detail::der3_br_11;
    using detail::der3_d2;

    auto emb = [&](const Vec& u) { return DerDegree1{Matrix(h.n1, h.n0), u}; };

    MorphismToDer3 fp = MorphismToDer3::zero(g, h);
    for (int i = 0; i < g.n0; ++i)
        fp.f0[static_cast<std::size_t>(i)] =
            f.f0[static_cast<std::size_t>(i)] - inner_derivation(h, w.b0.column(i));
    for (int p = 0; p < g.n1; ++p)
        fp.f1[static_cast<std::size_t>(p)] = f.f1[static_cast<std::size_t>(p)] -
                                             emb(w.b0.apply(g.d.column(p))) -
                                             der3_d2(h, w.b1.column(p));
    for (int i = 0; i < g.n0; ++i)
        for (int j = 0; j < g.n0; ++j) {
            DerDegree1 v = f.f2_0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            v = v + der3_br_01(h, fp.f0[static_cast<std::size_t>(i)], emb(w.b0.column(j)));
            v = v - der3_br_01(h, fp.f0[static_cast<std::size_t>(j)], emb(w.b0.column(i)));
            v = v - emb(w.b0.apply(g.b00.slice(i, j)));
            v = v + der3_br_01(h, inner_derivation(h, w.b0.column(i)), emb(w.b0.column(j)));
            v = v - der3_d2(h, w.b2.slice(i, j));
            fp.f2_0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    for (int i = 0; i < g.n0; ++i)
        for (int p = 0; p < g.n1; ++p) {
            Vec v = f.f2_1.slice(i, p);
            v = add(v, der3_br_02(fp.f0[static_cast<std::size_t>(i)], w.b1.column(p)));
            v = add(v, der3_br_11(fp.f1[static_cast<std::size_t>(p)], emb(w.b0.column(i))));
            v = sub(v, w.b1.apply(g.b01.slice(i, p)));
            v = add(v, der3_br_02(inner_derivation(h, w.b0.column(i)), w.b1.column(p)));
            v = add(v, w.b2.contract(g.unit0(i), g.d.column(p)));
            for (int m = 0; m < h.n1; ++m)
                fp.f2_1.at(i, p, m) = v[static_cast<std::size_t>(m)];
        }
    for (int i = 0; i < g.n0; ++i)
        for (int j = i + 1; j < g.n0; ++j)
            for (int k = j + 1; k < g.n0; ++k) {
                Vec v = f.f3.slice(i, j, k);
                const int c[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                for (const auto& t : c) {
                    const Vec b0x = w.b0.column(t[0]);
                    Vec acc = der3_br_02(fp.f0[static_cast<std::size_t>(t[0])],
                                         w.b2.slice(t[1], t[2]));
                    acc = sub(acc, w.b2.contract(g.b00.slice(t[0], t[1]), g.unit0(t[2])));
                    acc = add(acc, der3_br_11(fp.f2_0[static_cast<std::size_t>(t[0])]
                                                      [static_cast<std::size_t>(t[1])],
                                              emb(w.b0.column(t[2]))));
                    acc = add(acc, der3_br_02(inner_derivation(h, b0x),
                                              w.b2.slice(t[1], t[2])));
                    acc = add(acc, fp.f0[static_cast<std::size_t>(t[0])].lx.contract(
                                       w.b0.column(t[1]), w.b0.column(t[2])));
                    v = add(v, acc);
                }
                v = sub(v, w.b1.apply(g.l3.slice(i, j, k)));
                v = add(v, h.l3.contract(w.b0.column(i), w.b0.column(j), w.b0.column(k)));
                fp.f3.set_antisym012(i, j, k, v);
            }
    return fp;
}

} // namespace lie2::oracle
