#include "lie2/matrix.hpp"

namespace lie2 {

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

Vec unit_vec(int n, int i) {
    Vec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = Rational(1);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw StructuralError("vector add: size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw StructuralError("vector sub: size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scale(const Rational& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r)
        x *= c;
    return r;
}

void add_scaled(Vec& acc, const Rational& c, const Vec& v) {
    if (acc.size() != v.size())
        throw StructuralError("add_scaled: size mismatch");
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] += c * v[i];
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r(a);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        const Vec& c = cols[static_cast<std::size_t>(j)];
        if (static_cast<int>(c.size()) != rows)
            throw StructuralError("from_columns: column length mismatch");
        for (int i = 0; i < rows; ++i)
            m.at(i, j) = c[static_cast<std::size_t>(i)];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Vec Matrix::column(int j) const {
    Vec v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

Vec Matrix::row(int i) const {
    Vec v(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j)
        v[static_cast<std::size_t>(j)] = at(i, j);
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw StructuralError("Matrix::apply: dimension mismatch");
    Vec r(static_cast<std::size_t>(rows_));
    for (int j = 0; j < cols_; ++j) {
        const Rational& c = v[static_cast<std::size_t>(j)];
        if (c.is_zero())
            continue;
        for (int i = 0; i < rows_; ++i)
            r[static_cast<std::size_t>(i)] += c * at(i, j);
    }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw StructuralError("matrix add: shape mismatch");
    Matrix r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] += b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw StructuralError("matrix sub: shape mismatch");
    Matrix r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] -= b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw StructuralError("matrix mul: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r(m);
    for (auto& x : r.e_)
        x *= c;
    return r;
}

void Matrix::set_block(int i0, int j0, const Matrix& m) {
    if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
        throw StructuralError("set_block: out of range");
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j)
            at(i0 + i, j0 + j) = m.at(i, j);
}

Matrix Matrix::block(int i0, int j0, int rows, int cols) const {
    if (i0 + rows > rows_ || j0 + cols > cols_)
        throw StructuralError("block: out of range");
    Matrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

} // namespace lie2
