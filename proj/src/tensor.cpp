#include "lie2/tensor.hpp"

namespace lie2 {

bool Tensor3::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Tensor3::antisym01() const {
    if (d0_ != d1_)
        return false;
    for (int i = 0; i < d0_; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < d2_; ++k)
                if (at(i, j, k) != -at(j, i, k))
                    return false;
    return true;
}

bool Tensor3::sym01() const {
    if (d0_ != d1_)
        return false;
    for (int i = 0; i < d0_; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < d2_; ++k)
                if (at(i, j, k) != at(j, i, k))
                    return false;
    return true;
}

void Tensor3::set_antisym01(int i, int j, const Vec& v) {
    if (d0_ != d1_)
        throw StructuralError("set_antisym01 on non-square tensor");
    if (static_cast<int>(v.size()) != d2_)
        throw StructuralError("set_antisym01: value length mismatch");
    if (i == j) {
        if (!is_zero_vec(v))
            throw StructuralError("set_antisym01: nonzero diagonal entry");
        return;
    }
    for (int k = 0; k < d2_; ++k) {
        at(i, j, k) = v[static_cast<std::size_t>(k)];
        at(j, i, k) = -v[static_cast<std::size_t>(k)];
    }
}

Vec Tensor3::slice(int i, int j) const {
    Vec v(static_cast<std::size_t>(d2_));
    for (int k = 0; k < d2_; ++k)
        v[static_cast<std::size_t>(k)] = at(i, j, k);
    return v;
}

Vec Tensor3::contract(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != d0_ || static_cast<int>(y.size()) != d1_)
        throw StructuralError("Tensor3::contract: dimension mismatch");
    Vec r(static_cast<std::size_t>(d2_));
    for (int i = 0; i < d0_; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; j < d1_; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero())
                continue;
            const Rational c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < d2_; ++k)
                r[static_cast<std::size_t>(k)] += c * at(i, j, k);
        }
    }
    return r;
}

Matrix Tensor3::map_of(const Vec& x) const {
    if (static_cast<int>(x.size()) != d0_)
        throw StructuralError("Tensor3::map_of: dimension mismatch");
    Matrix m(d2_, d1_);
    for (int i = 0; i < d0_; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; j < d1_; ++j)
            for (int k = 0; k < d2_; ++k)
                m.at(k, j) += x[static_cast<std::size_t>(i)] * at(i, j, k);
    }
    return m;
}

bool Tensor4::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Tensor4::antisym012() const {
    if (d0_ != d1_ || d1_ != d2_)
        return false;
    const int n = d0_;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < d3_; ++l) {
                    const Rational& v = at(i, j, k, l);
                    if (at(j, i, k, l) != -v || at(i, k, j, l) != -v)
                        return false;
                }
    return true;
}

void Tensor4::set_antisym012(int i, int j, int k, const Vec& v) {
    if (d0_ != d1_ || d1_ != d2_)
        throw StructuralError("set_antisym012 on non-cubic tensor");
    if (static_cast<int>(v.size()) != d3_)
        throw StructuralError("set_antisym012: value length mismatch");
    if (i == j || j == k || i == k) {
        if (!is_zero_vec(v))
            throw StructuralError("set_antisym012: nonzero entry with repeated index");
        return;
    }
    const int perm[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
    const int sgn[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p)
        for (int l = 0; l < d3_; ++l)
            at(perm[p][0], perm[p][1], perm[p][2], l) =
                (sgn[p] > 0) ? v[static_cast<std::size_t>(l)] : -v[static_cast<std::size_t>(l)];
}

Vec Tensor4::slice(int i, int j, int k) const {
    Vec v(static_cast<std::size_t>(d3_));
    for (int l = 0; l < d3_; ++l)
        v[static_cast<std::size_t>(l)] = at(i, j, k, l);
    return v;
}

Vec Tensor4::contract(const Vec& x, const Vec& y, const Vec& z) const {
    if (static_cast<int>(x.size()) != d0_ || static_cast<int>(y.size()) != d1_ ||
        static_cast<int>(z.size()) != d2_)
        throw StructuralError("Tensor4::contract: dimension mismatch");
    Vec r(static_cast<std::size_t>(d3_));
    for (int i = 0; i < d0_; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; j < d1_; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero())
                continue;
            const Rational cij = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < d2_; ++k) {
                if (z[static_cast<std::size_t>(k)].is_zero())
                    continue;
                const Rational c = cij * z[static_cast<std::size_t>(k)];
                for (int l = 0; l < d3_; ++l)
                    r[static_cast<std::size_t>(l)] += c * at(i, j, k, l);
            }
        }
    }
    return r;
}

Tensor3 Tensor4::contract0(const Vec& x) const {
    if (static_cast<int>(x.size()) != d0_)
        throw StructuralError("Tensor4::contract0: dimension mismatch");
    Tensor3 t(d1_, d2_, d3_);
    for (int i = 0; i < d0_; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; j < d1_; ++j)
            for (int k = 0; k < d2_; ++k)
                for (int l = 0; l < d3_; ++l)
                    t.at(j, k, l) += x[static_cast<std::size_t>(i)] * at(i, j, k, l);
    }
    return t;
}

} // namespace lie2
