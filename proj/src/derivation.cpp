#include "lie2/derivation.hpp"

namespace lie2 {

Derivation0 Derivation0::zero(int n0, int n1) {
    return Derivation0{Matrix(n0, n0), Matrix(n1, n1), Tensor3(n0, n0, n1)};
}

Derivation0 operator+(const Derivation0& a, const Derivation0& b) {
    Derivation0 r{a.x0 + b.x0, a.x1 + b.x1, Tensor3(a.lx.dim0(), a.lx.dim1(), a.lx.dim2())};
    for (int i = 0; i < a.lx.dim0(); ++i)
        for (int j = 0; j < a.lx.dim1(); ++j)
            for (int k = 0; k < a.lx.dim2(); ++k)
                r.lx.at(i, j, k) = a.lx.at(i, j, k) + b.lx.at(i, j, k);
    return r;
}

Derivation0 operator-(const Derivation0& a, const Derivation0& b) {
    return a + (Rational(-1) * b);
}

Derivation0 operator*(const Rational& c, const Derivation0& a) {
    Derivation0 r{c * a.x0, c * a.x1, Tensor3(a.lx.dim0(), a.lx.dim1(), a.lx.dim2())};
    for (int i = 0; i < a.lx.dim0(); ++i)
        for (int j = 0; j < a.lx.dim1(); ++j)
            for (int k = 0; k < a.lx.dim2(); ++k)
                r.lx.at(i, j, k) = c * a.lx.at(i, j, k);
    return r;
}

DerDegree1 DerDegree1::zero(int n0, int n1) { return DerDegree1{Matrix(n1, n0), zero_vec(n0)}; }

DerDegree1 operator+(const DerDegree1& a, const DerDegree1& b) {
    return DerDegree1{a.d + b.d, add(a.x, b.x)};
}

DerDegree1 operator-(const DerDegree1& a, const DerDegree1& b) {
    return DerDegree1{a.d - b.d, sub(a.x, b.x)};
}

DerDegree1 operator*(const Rational& c, const DerDegree1& a) {
    return DerDegree1{c * a.d, scale(c, a.x)};
}

int derivation_flat_dim(int n0, int n1) { return n0 * n0 + n1 * n1 + (n0 * (n0 - 1) / 2) * n1; }

Vec flatten_derivation(const Derivation0& c) {
    const int n0 = c.x0.rows(), n1 = c.x1.rows();
    Vec v;
    v.reserve(static_cast<std::size_t>(derivation_flat_dim(n0, n1)));
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            v.push_back(c.x0.at(i, j));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            v.push_back(c.x1.at(i, j));
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j)
            for (int k = 0; k < n1; ++k)
                v.push_back(c.lx.at(i, j, k));
    return v;
}

Derivation0 unflatten_derivation(int n0, int n1, const Vec& v) {
    if (static_cast<int>(v.size()) != derivation_flat_dim(n0, n1))
        throw StructuralError("unflatten_derivation: length mismatch");
    Derivation0 c = Derivation0::zero(n0, n1);
    std::size_t t = 0;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            c.x0.at(i, j) = v[t++];
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            c.x1.at(i, j) = v[t++];
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j) {
            Vec val(static_cast<std::size_t>(n1));
            for (int k = 0; k < n1; ++k)
                val[static_cast<std::size_t>(k)] = v[t++];
            c.lx.set_antisym01(i, j, val);
        }
    return c;
}

namespace {

void require_shapes(const Lie2Algebra& L, const Derivation0& c) {
    if (c.x0.rows() != L.n0 || c.x0.cols() != L.n0 || c.x1.rows() != L.n1 ||
        c.x1.cols() != L.n1 || c.lx.dim0() != L.n0 || c.lx.dim1() != L.n0 ||
        c.lx.dim2() != L.n1)
        throw StructuralError("derivation: shape mismatch with algebra");
    if (!c.lx.antisym01())
        throw StructuralError("derivation: l_X is not antisymmetric");
}

// Residual of condition (a) on basis pair (i, j), valued in g0:
//   X[x,y] - [Xx,y] - [x,Xy] - d l_X(x,y)
Vec resid_a(const Lie2Algebra& L, const Derivation0& c, int i, int j) {
    const Vec x = L.unit0(i), y = L.unit0(j);
    Vec r = c.x0.apply(L.b00.slice(i, j));
    r = sub(r, L.l2_00(c.x0.column(i), y));
    r = sub(r, L.l2_00(x, c.x0.column(j)));
    r = sub(r, L.dmap(c.lx.slice(i, j)));
    return r;
}

// Residual of condition (b) on (x_i, a_p), valued in g1:
//   X[x,a] - [Xx,a] - [x,Xa] - l_X(x, d a)
Vec resid_b(const Lie2Algebra& L, const Derivation0& c, int i, int p) {
    const Vec x = L.unit0(i), a = L.unit1(p);
    Vec r = c.x1.apply(L.b01.slice(i, p));
    r = sub(r, L.l2_01(c.x0.column(i), a));
    r = sub(r, L.l2_01(x, c.x1.column(p)));
    r = sub(r, c.lx.contract(x, L.d.column(p)));
    return r;
}

// Residual of condition (c) on (i, j, k), valued in g1:
//   l_X(x,[y,z]) + [x,l_X(y,z)] + l3(Xx,y,z) + l3(x,Xy,z) + l3(x,y,Xz)
//   - X l3(x,y,z) - l_X([x,y],z) - l_X(y,[x,z]) - [l_X(x,y),z] - [y,l_X(x,z)]
Vec resid_c(const Lie2Algebra& L, const Derivation0& c, int i, int j, int k) {
    const Vec x = L.unit0(i), y = L.unit0(j), z = L.unit0(k);
    Vec r = c.lx.contract(x, L.b00.slice(j, k));
    r = add(r, L.l2_01(x, c.lx.slice(j, k)));
    r = add(r, L.l3e(c.x0.column(i), y, z));
    r = add(r, L.l3e(x, c.x0.column(j), z));
    r = add(r, L.l3e(x, y, c.x0.column(k)));
    r = sub(r, c.x1.apply(L.l3.slice(i, j, k)));
    r = sub(r, c.lx.contract(L.b00.slice(i, j), z));
    r = sub(r, c.lx.contract(y, L.b00.slice(i, k)));
    // [l_X(x,y), z] = -[z, l_X(x,y)]; moving it to the left flips the sign
    r = add(r, L.l2_01(z, c.lx.slice(i, j)));
    r = sub(r, L.l2_01(y, c.lx.slice(i, k)));
    return r;
}

} // namespace

AxiomReport derivation_check(const Lie2Algebra& L, const Derivation0& cand) {
    require_shapes(L, cand);
    AxiomReport rep;
    for (const char* name : {"end0_membership", "deriv_a", "deriv_b", "deriv_c"})
        rep.ensure(name);

    const Matrix memb = cand.x0 * L.d - L.d * cand.x1;
    Vec memb_flat;
    for (int i = 0; i < memb.rows(); ++i)
        for (int j = 0; j < memb.cols(); ++j)
            memb_flat.push_back(memb.at(i, j));
    rep.record("end0_membership", {}, memb_flat);

    for (int i = 0; i < L.n0; ++i)
        for (int j = 0; j < L.n0; ++j)
            rep.record("deriv_a", {i, j}, resid_a(L, cand, i, j));
    for (int i = 0; i < L.n0; ++i)
        for (int p = 0; p < L.n1; ++p)
            rep.record("deriv_b", {i, p}, resid_b(L, cand, i, p));
    for (int i = 0; i < L.n0; ++i)
        for (int j = 0; j < L.n0; ++j)
            for (int k = 0; k < L.n0; ++k)
                rep.record("deriv_c", {i, j, k}, resid_c(L, cand, i, j, k));
    return rep;
}

namespace detail {

DerSpace derivation_space_flat(const Lie2Algebra& L) {
    const int n0 = L.n0, n1 = L.n1;
    const int nf = derivation_flat_dim(n0, n1);

    // Stacked residual of the full linear system at a candidate.
    auto stacked = [&](const Derivation0& c) {
        Vec r;
        const Matrix memb = c.x0 * L.d - L.d * c.x1;
        for (int i = 0; i < n0; ++i)
            for (int q = 0; q < n1; ++q)
                r.push_back(memb.at(i, q));
        for (int i = 0; i < n0; ++i)
            for (int j = i + 1; j < n0; ++j)
                for (const auto& v : resid_a(L, c, i, j))
                    r.push_back(v);
        for (int i = 0; i < n0; ++i)
            for (int p = 0; p < n1; ++p)
                for (const auto& v : resid_b(L, c, i, p))
                    r.push_back(v);
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j)
                for (int k = j + 1; k < n0; ++k)
                    for (const auto& v : resid_c(L, c, i, j, k))
                        r.push_back(v);
        return r;
    };

    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(nf));
    int rows = -1;
    for (int t = 0; t < nf; ++t) {
        Vec col = stacked(unflatten_derivation(n0, n1, unit_vec(nf, t)));
        rows = static_cast<int>(col.size());
        cols.push_back(std::move(col));
    }
    if (rows < 0)
        rows = static_cast<int>(stacked(Derivation0::zero(n0, n1)).size());

    DerSpace sp;
    sp.flat = kernel_basis(Matrix::from_columns(rows, cols));
    sp.basis.reserve(sp.flat.size());
    for (const auto& v : sp.flat)
        sp.basis.push_back(unflatten_derivation(n0, n1, v));
    return sp;
}

Vec derivation_coords(const DerSpace& sp, const Derivation0& c) {
    auto coords = coordinates_in_span(sp.flat, flatten_derivation(c));
    if (!coords)
        throw PreconditionError(
            "derivation_coords: value is not in Der^0 (is the algebra verified?)");
    return *coords;
}

Derivation0 der_bracket_raw(const Lie2Algebra& L, const Derivation0& a, const Derivation0& b) {
    const int n0 = L.n0, n1 = L.n1;
    Derivation0 r = Derivation0::zero(n0, n1);
    r.x0 = a.x0 * b.x0 - b.x0 * a.x0;
    r.x1 = a.x1 * b.x1 - b.x1 * a.x1;
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j) {
            const Vec x = L.unit0(i), y = L.unit0(j);
            Vec v = a.lx.contract(b.x0.column(i), y);
            v = add(v, a.lx.contract(x, b.x0.column(j)));
            v = sub(v, b.lx.contract(a.x0.column(i), y));
            v = sub(v, b.lx.contract(x, a.x0.column(j)));
            v = add(v, a.x1.apply(b.lx.slice(i, j)));
            v = sub(v, b.x1.apply(a.lx.slice(i, j)));
            r.lx.set_antisym01(i, j, v);
        }
    return r;
}

Derivation0 der3_d1(const Lie2Algebra& L, const DerDegree1& e) {
    return delta_bar(L, e.d) + inner_derivation(L, e.x);
}

DerDegree1 der3_d2(const Lie2Algebra& L, const Vec& a) {
    // ad_a : g0 -> g1, y |-> [a, y] = -l2(y, a)
    Matrix ada(L.n1, L.n0);
    for (int y = 0; y < L.n0; ++y) {
        const Vec col = L.l2_01(L.unit0(y), a);
        for (int p = 0; p < L.n1; ++p)
            ada.at(p, y) = -col[static_cast<std::size_t>(p)];
    }
    return DerDegree1{std::move(ada), scale(Rational(-1), L.dmap(a))};
}

DerDegree1 der3_br_01(const Lie2Algebra& L, const Derivation0& X, const DerDegree1& e) {
    // ([X, D]_C + l_X(x, .), X0 x)
    Matrix m = X.x1 * e.d - e.d * X.x0;
    for (int y = 0; y < L.n0; ++y) {
        const Vec col = X.lx.contract(e.x, L.unit0(y));
        for (int p = 0; p < L.n1; ++p)
            m.at(p, y) += col[static_cast<std::size_t>(p)];
    }
    return DerDegree1{std::move(m), X.x0.apply(e.x)};
}

Vec der3_br_02(const Derivation0& X, const Vec& a) { return X.x1.apply(a); }

Vec der3_br_11(const DerDegree1& a, const DerDegree1& b) {
    return sub(scale(Rational(-1), a.d.apply(b.x)), b.d.apply(a.x));
}

} // namespace detail

std::vector<Derivation0> derivation_space(const Lie2Algebra& L) {
    return detail::derivation_space_flat(L).basis;
}

Derivation0 inner_derivation(const Lie2Algebra& L, const Vec& x) {
    if (static_cast<int>(x.size()) != L.n0)
        throw StructuralError("inner_derivation: vector must live in g0");
    return Derivation0{L.ad0(x), L.ad1(x), L.l3.contract0(x)};
}

Derivation0 der_bracket(const Lie2Algebra& L, const Derivation0& a, const Derivation0& b) {
    if (!derivation_check(L, a).ok() || !derivation_check(L, b).ok())
        throw PreconditionError("der_bracket: input fails derivation_check");
    return detail::der_bracket_raw(L, a, b);
}

Derivation0 delta_bar(const Lie2Algebra& L, const Matrix& D) {
    if (D.rows() != L.n1 || D.cols() != L.n0)
        throw StructuralError("delta_bar: D must be n1 x n0 (a map g0 -> g1)");
    Derivation0 r = Derivation0::zero(L.n0, L.n1);
    r.x0 = L.d * D;
    r.x1 = D * L.d;
    for (int i = 0; i < L.n0; ++i)
        for (int j = i + 1; j < L.n0; ++j) {
            // l_{delta(D)}(x,y) = D[x,y] - [x, Dy] - [Dx, y]
            Vec v = D.apply(L.b00.slice(i, j));
            v = sub(v, L.l2_01(L.unit0(i), D.column(j)));
            v = add(v, L.l2_01(L.unit0(j), D.column(i))); // -[Dx,y] = +[y,Dx]
            r.lx.set_antisym01(i, j, v);
        }
    return r;
}

Lie2Algebra build_der2(const Lie2Algebra& L) {
    const detail::DerSpace sp = detail::derivation_space_flat(L);
    const int k = static_cast<int>(sp.basis.size());
    const int nh = L.n0 * L.n1;

    Lie2Algebra D2 = Lie2Algebra::zero(k, nh);

    for (int h = 0; h < nh; ++h) {
        const Matrix Dm = unflatten_hom(L.n0, L.n1, unit_vec(nh, h));
        const Vec c = detail::derivation_coords(sp, delta_bar(L, Dm));
        for (int r = 0; r < k; ++r)
            D2.d.at(r, h) = c[static_cast<std::size_t>(r)];
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            D2.b00.set_antisym01(
                i, j, detail::derivation_coords(sp, detail::der_bracket_raw(L, sp.basis[i],
                                                                            sp.basis[j])));

    // [(X, l_X), D]_Der = [X, D]_C = X1 D - D X0
    for (int i = 0; i < k; ++i)
        for (int h = 0; h < nh; ++h) {
            const Matrix Dm = unflatten_hom(L.n0, L.n1, unit_vec(nh, h));
            const Vec img = flatten_hom(sp.basis[static_cast<std::size_t>(i)].x1 * Dm -
                                        Dm * sp.basis[static_cast<std::size_t>(i)].x0);
            for (int r = 0; r < nh; ++r)
                D2.b01.at(i, h, r) = img[static_cast<std::size_t>(r)];
        }

    return D2;
}

Der3Element der3_d(const Lie2Algebra& L, const Der3Element& e) {
    switch (der3_degree(e)) {
    case 2:
        return detail::der3_d2(L, std::get<Vec>(e));
    case 1:
        return detail::der3_d1(L, std::get<DerDegree1>(e));
    default:
        throw std::domain_error("der3_d: no differential below degree 0");
    }
}

Der3Element der3_bracket(const Lie2Algebra& L, const Der3Element& a, const Der3Element& b) {
    const int da = der3_degree(a), db = der3_degree(b);
    if (da + db > 2)
        return zero_vec(L.n1); // target space absent
    if (da > db) {
        // l2(a,b) = -(-1)^{|a||b|} l2(b,a); all order swaps here carry sign -1
        Der3Element r = der3_bracket(L, b, a);
        if (std::holds_alternative<Derivation0>(r))
            return Rational(-1) * std::get<Derivation0>(r);
        if (std::holds_alternative<DerDegree1>(r))
            return Rational(-1) * std::get<DerDegree1>(r);
        return scale(Rational(-1), std::get<Vec>(r));
    }
    if (da == 0 && db == 0)
        return detail::der_bracket_raw(L, std::get<Derivation0>(a), std::get<Derivation0>(b));
    if (da == 0 && db == 1)
        return detail::der3_br_01(L, std::get<Derivation0>(a), std::get<DerDegree1>(b));
    if (da == 0 && db == 2)
        return detail::der3_br_02(std::get<Derivation0>(a), std::get<Vec>(b));
    return detail::der3_br_11(std::get<DerDegree1>(a), std::get<DerDegree1>(b)); // (1,1)
}

namespace {

Vec flatten_der1(const DerDegree1& e) { return concat(flatten_hom(e.d), e.x); }

} // namespace

Lie3Algebra build_der3(const Lie2Algebra& L) {
    const detail::DerSpace sp = detail::derivation_space_flat(L);
    const int k = static_cast<int>(sp.basis.size());
    const int nh = L.n0 * L.n1;
    const int m1 = nh + L.n0;

    Lie3Algebra T = Lie3Algebra::zero(k, m1, L.n1);

    // Degree-1 basis: (E_h, 0) for h < nh, then (0, x_q).
    auto basis1 = [&](int b) {
        DerDegree1 e = DerDegree1::zero(L.n0, L.n1);
        if (b < nh)
            e.d = unflatten_hom(L.n0, L.n1, unit_vec(nh, b));
        else
            e.x = L.unit0(b - nh);
        return e;
    };

    for (int c = 0; c < L.n1; ++c) {
        const Vec col = flatten_der1(detail::der3_d2(L, L.unit1(c)));
        for (int r = 0; r < m1; ++r)
            T.l1_21.at(r, c) = col[static_cast<std::size_t>(r)];
    }

    for (int b = 0; b < m1; ++b) {
        const Vec c = detail::derivation_coords(sp, detail::der3_d1(L, basis1(b)));
        for (int r = 0; r < k; ++r)
            T.l1_10.at(r, b) = c[static_cast<std::size_t>(r)];
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            T.c00.set_antisym01(
                i, j, detail::derivation_coords(sp, detail::der_bracket_raw(L, sp.basis[i],
                                                                            sp.basis[j])));

    for (int i = 0; i < k; ++i)
        for (int b = 0; b < m1; ++b) {
            const Vec img = flatten_der1(detail::der3_br_01(L, sp.basis[i], basis1(b)));
            for (int r = 0; r < m1; ++r)
                T.c01.at(i, b, r) = img[static_cast<std::size_t>(r)];
        }

    for (int i = 0; i < k; ++i)
        for (int c = 0; c < L.n1; ++c) {
            const Vec img = detail::der3_br_02(sp.basis[i], L.unit1(c));
            for (int r = 0; r < L.n1; ++r)
                T.c02.at(i, c, r) = img[static_cast<std::size_t>(r)];
        }

    for (int b = 0; b < m1; ++b)
        for (int bp = 0; bp < m1; ++bp) {
            const Vec img = detail::der3_br_11(basis1(b), basis1(bp));
            for (int r = 0; r < L.n1; ++r)
                T.c11.at(b, bp, r) = img[static_cast<std::size_t>(r)];
        }

    return T;
}

} // namespace lie2
