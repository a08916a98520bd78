#ifndef LIE2_TENSOR_HPP
#define LIE2_TENSOR_HPP

#include "lie2/matrix.hpp"

namespace lie2 {

/// Dense order-3 tensor T[i][j][k]. Structure-constant orientation: the last
/// index runs over the target space, so T(x, y) = sum_{i,j} x_i y_j T[i][j][.].
class Tensor3 {
  public:
    Tensor3() = default;
    Tensor3(int d0, int d1, int d2)
        : d0_(d0), d1_(d1), d2_(d2), e_(static_cast<std::size_t>(d0) * d1 * d2) {}

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }

    Rational& at(int i, int j, int k) { return e_[idx(i, j, k)]; }
    const Rational& at(int i, int j, int k) const { return e_[idx(i, j, k)]; }

    bool is_zero() const;
    bool antisym01() const;  // T[i][j][.] == -T[j][i][.]
    bool sym01() const;      // T[i][j][.] == T[j][i][.]

    /// Stores v at [i][j][.] and -v at [j][i][.] (requires d0 == d1).
    void set_antisym01(int i, int j, const Vec& v);

    Vec slice(int i, int j) const; // T[i][j][.]
    Vec contract(const Vec& x, const Vec& y) const;

    /// Partial contraction in the first slot: matrix M with M[k][j] = sum_i x_i T[i][j][k],
    /// i.e. the linear map y -> T(x, y) written as a (d2 x d1) matrix.
    Matrix map_of(const Vec& x) const;

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.e_ == b.e_;
    }

  private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * d1_ + j) * d2_ + k;
    }
    int d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Rational> e_;
};

/// Dense order-4 tensor, last index over the target space. Used for l3-type
/// maps (antisymmetric in the first three slots) and trilinear data.
class Tensor4 {
  public:
    Tensor4() = default;
    Tensor4(int d0, int d1, int d2, int d3)
        : d0_(d0), d1_(d1), d2_(d2), d3_(d3),
          e_(static_cast<std::size_t>(d0) * d1 * d2 * d3) {}

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    int dim3() const { return d3_; }

    Rational& at(int i, int j, int k, int l) { return e_[idx(i, j, k, l)]; }
    const Rational& at(int i, int j, int k, int l) const { return e_[idx(i, j, k, l)]; }

    bool is_zero() const;
    bool antisym012() const;

    /// Writes v to [i][j][k][.] and all signed permutations (requires d0 == d1 == d2).
    void set_antisym012(int i, int j, int k, const Vec& v);

    Vec slice(int i, int j, int k) const;
    Vec contract(const Vec& x, const Vec& y, const Vec& z) const;

    /// sum_i x_i T[i][j][k][.] as a Tensor3 over (j, k).
    Tensor3 contract0(const Vec& x) const;

    friend bool operator==(const Tensor4& a, const Tensor4& b) {
        return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ && a.e_ == b.e_;
    }

  private:
    std::size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<std::size_t>(i) * d1_ + j) * d2_ + k) * d3_ + l;
    }
    int d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<Rational> e_;
};

} // namespace lie2

#endif
