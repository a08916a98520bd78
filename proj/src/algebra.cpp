#include "lie2/algebra.hpp"

namespace lie2 {

Lie2Algebra Lie2Algebra::zero(int n0, int n1) {
    Lie2Algebra L;
    L.n0 = n0;
    L.n1 = n1;
    L.d = Matrix(n0, n1);
    L.b00 = Tensor3(n0, n0, n0);
    L.b01 = Tensor3(n0, n1, n1);
    L.l3 = Tensor4(n0, n0, n0, n1);
    return L;
}

void validate_structure(const Lie2Algebra& L) {
    if (L.n0 < 0 || L.n1 < 0)
        throw StructuralError("Lie2Algebra: negative dimension");
    if (L.d.rows() != L.n0 || L.d.cols() != L.n1)
        throw StructuralError("Lie2Algebra: d must be n0 x n1");
    if (L.b00.dim0() != L.n0 || L.b00.dim1() != L.n0 || L.b00.dim2() != L.n0)
        throw StructuralError("Lie2Algebra: b00 must be n0 x n0 x n0");
    if (L.b01.dim0() != L.n0 || L.b01.dim1() != L.n1 || L.b01.dim2() != L.n1)
        throw StructuralError("Lie2Algebra: b01 must be n0 x n1 x n1");
    if (L.l3.dim0() != L.n0 || L.l3.dim1() != L.n0 || L.l3.dim2() != L.n0 || L.l3.dim3() != L.n1)
        throw StructuralError("Lie2Algebra: l3 must be n0 x n0 x n0 x n1");
    if (!L.b00.antisym01())
        throw StructuralError("Lie2Algebra: b00 is not antisymmetric");
    if (!L.l3.antisym012())
        throw StructuralError("Lie2Algebra: l3 is not totally antisymmetric");
}

AxiomReport check_lie2_axioms(const Lie2Algebra& L) {
    validate_structure(L);
    AxiomReport rep;
    for (const char* name : {"chain_mixed", "chain_deg1", "jacobi", "mixed_jacobi", "jacobiator"})
        rep.ensure(name);
    const int n0 = L.n0, n1 = L.n1;

    // d l2(x,a) = l2(x, d a)
    for (int i = 0; i < n0; ++i)
        for (int p = 0; p < n1; ++p) {
            const Vec lhs = L.dmap(L.b01.slice(i, p));
            const Vec rhs = L.l2_00(L.unit0(i), L.d.column(p));
            rep.record("chain_mixed", {i, p}, sub(lhs, rhs));
        }

    // l2(d a, b) = l2(a, d b), both sides mixed brackets valued in g1
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n1; ++q) {
            // l2(a, d b) = -l2(d b, a), so the residual is l2(da, b) + l2(db, a)
            const Vec r = add(L.l2_01(L.d.column(p), L.unit1(q)),
                              L.l2_01(L.d.column(q), L.unit1(p)));
            rep.record("chain_deg1", {p, q}, r);
        }

    // l2(x,l2(y,z)) + c.p. = d l3(x,y,z)
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n0; ++k) {
                const Vec x = L.unit0(i), y = L.unit0(j), z = L.unit0(k);
                Vec r = L.l2_00(x, L.l2_00(y, z));
                r = add(r, L.l2_00(y, L.l2_00(z, x)));
                r = add(r, L.l2_00(z, L.l2_00(x, y)));
                r = sub(r, L.dmap(L.l3.slice(i, j, k)));
                rep.record("jacobi", {i, j, k}, r);
            }

    // l2(x,l2(y,a)) + l2(y,l2(a,x)) + l2(a,l2(x,y)) = l3(x,y,da)
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int p = 0; p < n1; ++p) {
                const Vec x = L.unit0(i), y = L.unit0(j), a = L.unit1(p);
                Vec r = L.l2_01(x, L.l2_01(y, a));
                r = sub(r, L.l2_01(y, L.l2_01(x, a)));
                r = sub(r, L.l2_01(L.l2_00(x, y), a));
                r = sub(r, L.l3e(x, y, L.dmap(a)));
                rep.record("mixed_jacobi", {i, j, p}, r);
            }

    // Jacobiator coherence, the n = 4 relation on degree-0 inputs:
    //   sum over (2,2)-unshuffles of sgn * l3(l2(xi,xj),xk,xl)
    // = sum over (3,1)-unshuffles of sgn * l2(l3(xi,xj,xk),xl).
    static const int unsh22[6][5] = {{0, 1, 2, 3, +1}, {0, 2, 1, 3, -1}, {0, 3, 1, 2, +1},
                                     {1, 2, 0, 3, +1}, {1, 3, 0, 2, -1}, {2, 3, 0, 1, +1}};
    static const int unsh31[4][5] = {{0, 1, 2, 3, +1}, {0, 1, 3, 2, -1}, {0, 2, 3, 1, +1},
                                     {1, 2, 3, 0, -1}};
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n0; ++k)
                for (int l = 0; l < n0; ++l) {
                    const int idx[4] = {i, j, k, l};
                    Vec r = zero_vec(n1);
                    for (const auto& u : unsh22) {
                        const Vec br = L.b00.slice(idx[u[0]], idx[u[1]]);
                        const Vec t =
                            L.l3e(br, L.unit0(idx[u[2]]), L.unit0(idx[u[3]]));
                        u[4] > 0 ? (void)(r = add(r, t)) : (void)(r = sub(r, t));
                    }
                    // l2(l3(...), x) = -l2(x, l3(...)) flips each (3,1) sign
                    for (const auto& u : unsh31) {
                        const Vec t = L.l2_01(L.unit0(idx[u[3]]),
                                              L.l3.slice(idx[u[0]], idx[u[1]], idx[u[2]]));
                        u[4] > 0 ? (void)(r = add(r, t)) : (void)(r = sub(r, t));
                    }
                    rep.record("jacobiator", {i, j, k, l}, r);
                }

    return rep;
}

Lie3Algebra Lie3Algebra::zero(int m0, int m1, int m2) {
    Lie3Algebra T;
    T.m0 = m0;
    T.m1 = m1;
    T.m2 = m2;
    T.l1_10 = Matrix(m0, m1);
    T.l1_21 = Matrix(m1, m2);
    T.c00 = Tensor3(m0, m0, m0);
    T.c01 = Tensor3(m0, m1, m1);
    T.c02 = Tensor3(m0, m2, m2);
    T.c11 = Tensor3(m1, m1, m2);
    return T;
}

int Lie3Algebra::dim(int degree) const {
    switch (degree) {
    case 0: return m0;
    case 1: return m1;
    case 2: return m2;
    default: throw StructuralError("Lie3Algebra: degree out of range");
    }
}

void validate_structure(const Lie3Algebra& T) {
    if (T.m0 < 0 || T.m1 < 0 || T.m2 < 0)
        throw StructuralError("Lie3Algebra: negative dimension");
    if (T.l1_10.rows() != T.m0 || T.l1_10.cols() != T.m1)
        throw StructuralError("Lie3Algebra: l1_10 must be m0 x m1");
    if (T.l1_21.rows() != T.m1 || T.l1_21.cols() != T.m2)
        throw StructuralError("Lie3Algebra: l1_21 must be m1 x m2");
    if (T.c00.dim0() != T.m0 || T.c00.dim1() != T.m0 || T.c00.dim2() != T.m0)
        throw StructuralError("Lie3Algebra: c00 shape");
    if (T.c01.dim0() != T.m0 || T.c01.dim1() != T.m1 || T.c01.dim2() != T.m1)
        throw StructuralError("Lie3Algebra: c01 shape");
    if (T.c02.dim0() != T.m0 || T.c02.dim1() != T.m2 || T.c02.dim2() != T.m2)
        throw StructuralError("Lie3Algebra: c02 shape");
    if (T.c11.dim0() != T.m1 || T.c11.dim1() != T.m1 || T.c11.dim2() != T.m2)
        throw StructuralError("Lie3Algebra: c11 shape");
    if (!T.c00.antisym01())
        throw StructuralError("Lie3Algebra: c00 is not antisymmetric");
    if (!T.c11.sym01())
        throw StructuralError("Lie3Algebra: c11 is not symmetric (odd-odd bracket)");
}

void validate_element(const Lie3Algebra& T, const GradedElement& e) {
    if (e.degree < 0 || e.degree > 2)
        throw StructuralError("GradedElement: degree must be 0, 1 or 2");
    if (static_cast<int>(e.coords.size()) != T.dim(e.degree))
        throw StructuralError("GradedElement: coordinate length does not match the component");
}

std::optional<GradedElement> l2_graded(const Lie3Algebra& T, const GradedElement& a,
                                       const GradedElement& b) {
    validate_element(T, a);
    validate_element(T, b);
    auto r = l2_graded(T, a.degree, a.coords, b.degree, b.coords);
    if (!r)
        return std::nullopt;
    return GradedElement{r->first, std::move(r->second)};
}

std::optional<std::pair<int, Vec>> l2_graded(const Lie3Algebra& T, int dega, const Vec& a,
                                             int degb, const Vec& b) {
    if (dega > degb) {
        auto swapped = l2_graded(T, degb, b, dega, a);
        if (!swapped)
            return std::nullopt;
        // l2(a,b) = -(-1)^{|a||b|} l2(b,a)
        const int sign = ((dega * degb) % 2 == 0) ? -1 : +1;
        if (sign < 0)
            for (auto& x : swapped->second)
                x = -x;
        return swapped;
    }
    if (dega == 0 && degb == 0)
        return std::make_pair(0, T.c00.contract(a, b));
    if (dega == 0 && degb == 1)
        return std::make_pair(1, T.c01.contract(a, b));
    if (dega == 0 && degb == 2)
        return std::make_pair(2, T.c02.contract(a, b));
    if (dega == 1 && degb == 1)
        return std::make_pair(2, T.c11.contract(a, b));
    return std::nullopt; // target degree above 2
}

AxiomReport check_lie3_axioms(const Lie3Algebra& T) {
    validate_structure(T);
    AxiomReport rep;
    for (const char* name : {"l1_squared", "l1_leibniz", "graded_jacobi"})
        rep.ensure(name);

    // (a) l1^2 = 0
    for (int c = 0; c < T.m2; ++c)
        rep.record("l1_squared", {c}, T.l1_10.apply(T.l1_21.column(c)));

    // (b) l1 l2(x,y) = l2(l1 x, y) + (-1)^{|x|} l2(x, l1 y), per degree pattern.
    for (int i = 0; i < T.m0; ++i)
        for (int p = 0; p < T.m1; ++p) {
            const Vec lhs = T.l1_10.apply(T.c01.slice(i, p));
            const Vec rhs = T.c00.contract(unit_vec(T.m0, i), T.l1_10.column(p));
            rep.record("l1_leibniz", {0, i, 1, p}, sub(lhs, rhs));
        }
    for (int i = 0; i < T.m0; ++i)
        for (int c = 0; c < T.m2; ++c) {
            const Vec lhs = T.l1_21.apply(T.c02.slice(i, c));
            const Vec rhs = T.c01.contract(unit_vec(T.m0, i), T.l1_21.column(c));
            rep.record("l1_leibniz", {0, i, 2, c}, sub(lhs, rhs));
        }
    for (int p = 0; p < T.m1; ++p)
        for (int q = 0; q < T.m1; ++q) {
            const Vec lhs = T.l1_21.apply(T.c11.slice(p, q));
            Vec rhs = T.c01.contract(T.l1_10.column(p), unit_vec(T.m1, q));
            rhs = add(rhs, T.c01.contract(T.l1_10.column(q), unit_vec(T.m1, p)));
            rep.record("l1_leibniz", {1, p, 1, q}, sub(lhs, rhs));
        }
    for (int p = 0; p < T.m1; ++p)
        for (int c = 0; c < T.m2; ++c) {
            // l2(x,y) lands in degree 3 and vanishes; the right side must too.
            Vec r = T.c02.contract(T.l1_10.column(p), unit_vec(T.m2, c));
            r = sub(r, T.c11.contract(unit_vec(T.m1, p), T.l1_21.column(c)));
            rep.record("l1_leibniz", {1, p, 2, c}, r);
        }

    // (c) graded Jacobi over degree combinations of total degree <= 2.
    static const int combos[4][3] = {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 1}};
    for (const auto& deg : combos) {
        const int target = deg[0] + deg[1] + deg[2];
        for (int i = 0; i < T.dim(deg[0]); ++i)
            for (int j = 0; j < T.dim(deg[1]); ++j)
                for (int k = 0; k < T.dim(deg[2]); ++k) {
                    const Vec x = unit_vec(T.dim(deg[0]), i);
                    const Vec y = unit_vec(T.dim(deg[1]), j);
                    const Vec z = unit_vec(T.dim(deg[2]), k);
                    Vec r = zero_vec(T.dim(target));
                    auto term = [&](int dm, const Vec& m, int dn1, const Vec& vn1, int dn2,
                                    const Vec& vn2, int koszul) {
                        auto inner = l2_graded(T, dn1, vn1, dn2, vn2);
                        if (!inner)
                            return;
                        auto outer = l2_graded(T, inner->first, inner->second, dm, m);
                        if (!outer)
                            return;
                        if (koszul % 2 == 0)
                            r = add(r, outer->second);
                        else
                            r = sub(r, outer->second);
                    };
                    // (-1)^{|x||z|} l2(l2(x,y),z) + (-1)^{|x||y|} l2(l2(y,z),x)
                    //   + (-1)^{|y||z|} l2(l2(z,x),y) = 0
                    term(deg[2], z, deg[0], x, deg[1], y, deg[0] * deg[2]);
                    term(deg[0], x, deg[1], y, deg[2], z, deg[0] * deg[1]);
                    term(deg[1], y, deg[2], z, deg[0], x, deg[1] * deg[2]);
                    rep.record("graded_jacobi", {deg[0], i, deg[1], j, deg[2], k}, r);
                }
    }

    return rep;
}

int hom_index(int n0, int p, int q) { return p * n0 + q; }

Vec flatten_hom(const Matrix& m) {
    Vec v(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int p = 0; p < m.rows(); ++p)
        for (int q = 0; q < m.cols(); ++q)
            v[static_cast<std::size_t>(hom_index(m.cols(), p, q))] = m.at(p, q);
    return v;
}

Matrix unflatten_hom(int n0, int n1, const Vec& v) {
    if (static_cast<int>(v.size()) != n0 * n1)
        throw StructuralError("unflatten_hom: length mismatch");
    Matrix m(n1, n0);
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n0; ++q)
            m.at(p, q) = v[static_cast<std::size_t>(hom_index(n0, p, q))];
    return m;
}

namespace {

Vec flatten_end_pair(const Matrix& x0, const Matrix& x1) {
    Vec v;
    v.reserve(static_cast<std::size_t>(x0.rows()) * x0.cols() +
              static_cast<std::size_t>(x1.rows()) * x1.cols());
    for (int i = 0; i < x0.rows(); ++i)
        for (int j = 0; j < x0.cols(); ++j)
            v.push_back(x0.at(i, j));
    for (int i = 0; i < x1.rows(); ++i)
        for (int j = 0; j < x1.cols(); ++j)
            v.push_back(x1.at(i, j));
    return v;
}

std::pair<Matrix, Matrix> unflatten_end_pair(int n0, int n1, const Vec& v) {
    Matrix x0(n0, n0), x1(n1, n1);
    std::size_t t = 0;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            x0.at(i, j) = v[t++];
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            x1.at(i, j) = v[t++];
    return {std::move(x0), std::move(x1)};
}

} // namespace

EndLie2 end_complex_lie2(int n0, int n1, const Matrix& d) {
    if (d.rows() != n0 || d.cols() != n1)
        throw StructuralError("end_complex_lie2: d must be n0 x n1");

    // Membership X0 d = d X1 as a linear system on flattened (X0, X1).
    const int nunk = n0 * n0 + n1 * n1;
    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(nunk));
    for (int t = 0; t < nunk; ++t) {
        auto [x0, x1] = unflatten_end_pair(n0, n1, unit_vec(nunk, t));
        const Matrix resid = x0 * d - d * x1;
        Vec col;
        col.reserve(static_cast<std::size_t>(n0) * n1);
        for (int i = 0; i < n0; ++i)
            for (int q = 0; q < n1; ++q)
                col.push_back(resid.at(i, q));
        cols.push_back(std::move(col));
    }
    const std::vector<Vec> basis = kernel_basis(Matrix::from_columns(n0 * n1, cols));
    const int k = static_cast<int>(basis.size());

    EndLie2 out;
    out.basis0 = Matrix::from_columns(nunk, basis);

    std::vector<std::pair<Matrix, Matrix>> b0;
    b0.reserve(static_cast<std::size_t>(k));
    for (const auto& v : basis)
        b0.push_back(unflatten_end_pair(n0, n1, v));

    auto coords = [&](const Matrix& x0, const Matrix& x1) {
        auto c = coordinates_in_span(basis, flatten_end_pair(x0, x1));
        if (!c)
            throw StructuralError("end_complex_lie2: value escapes End^0_d");
        return *c;
    };

    Lie2Algebra E = Lie2Algebra::zero(k, n0 * n1);

    // delta(D) = (d D, D d) in the End^0 basis
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n0; ++q) {
            Matrix Dm(n1, n0);
            Dm.at(p, q) = Rational(1);
            const Vec c = coords(d * Dm, Dm * d);
            for (int r = 0; r < k; ++r)
                E.d.at(r, hom_index(n0, p, q)) = c[static_cast<std::size_t>(r)];
        }

    // degree-0 bracket: commutators componentwise
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Matrix c0 = b0[i].first * b0[j].first - b0[j].first * b0[i].first;
            const Matrix c1 = b0[i].second * b0[j].second - b0[j].second * b0[i].second;
            E.b00.set_antisym01(i, j, coords(c0, c1));
        }

    // mixed bracket [X, D]_C = X1 D - D X0
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < n1; ++p)
            for (int q = 0; q < n0; ++q) {
                Matrix Dm(n1, n0);
                Dm.at(p, q) = Rational(1);
                const Vec img = flatten_hom(b0[i].second * Dm - Dm * b0[i].first);
                const int h = hom_index(n0, p, q);
                for (int r = 0; r < n0 * n1; ++r)
                    E.b01.at(i, h, r) = img[static_cast<std::size_t>(r)];
            }

    out.algebra = std::move(E);
    return out;
}

} // namespace lie2
