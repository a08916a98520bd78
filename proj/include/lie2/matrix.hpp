#ifndef LIE2_MATRIX_HPP
#define LIE2_MATRIX_HPP

#include "lie2/errors.hpp"
#include "lie2/rational.hpp"

#include <vector>

namespace lie2 {

using Vec = std::vector<Rational>;

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
void add_scaled(Vec& acc, const Rational& c, const Vec& v); // acc += c*v
Vec concat(const Vec& a, const Vec& b);

/// Dense row-major matrix of exact rationals. Zero-sized dimensions are legal
/// (empty complexes such as 0 -> g0 show up routinely).
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_columns(int rows, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    Matrix transpose() const;
    Vec column(int j) const;
    Vec row(int i) const;

    /// Matrix-vector product; v.size() must equal cols().
    Vec apply(const Vec& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& m);
    Matrix operator-() const { return Rational(-1) * *this; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// Copies `m` into this matrix with upper-left corner at (i0, j0).
    void set_block(int i0, int j0, const Matrix& m);
    Matrix block(int i0, int j0, int rows, int cols) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

} // namespace lie2

#endif
