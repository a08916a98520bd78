#include "lie2/linsolve.hpp"

namespace lie2 {

Rref rref(Matrix m) {
    Rref out;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < cols; ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            const Rational f = m.at(i, c);
            for (int j = c; j < cols; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(m);
    return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    const Rref R = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : R.pivot_cols)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        Vec v = zero_vec(cols);
        v[static_cast<std::size_t>(f)] = Rational(1);
        for (int i = 0; i < R.rank; ++i)
            v[static_cast<std::size_t>(R.pivot_cols[static_cast<std::size_t>(i)])] = -R.mat.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw StructuralError("solve_linear: rhs length mismatch");
    const int rows = m.rows(), cols = m.cols();
    Matrix aug(rows, cols + 1);
    aug.set_block(0, 0, m);
    for (int i = 0; i < rows; ++i)
        aug.at(i, cols) = rhs[static_cast<std::size_t>(i)];

    const Rref R = rref(std::move(aug));
    for (int p : R.pivot_cols)
        if (p == cols)
            return std::nullopt; // rhs not in the column space

    LinearSolution sol;
    sol.particular = zero_vec(cols);
    for (int i = 0; i < R.rank; ++i)
        sol.particular[static_cast<std::size_t>(R.pivot_cols[static_cast<std::size_t>(i)])] = R.mat.at(i, cols);
    sol.kernel = kernel_basis(m);
    return sol;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& target) {
    const int rows = static_cast<int>(target.size());
    const Matrix m = Matrix::from_columns(rows, basis);
    auto sol = solve_linear(m, target);
    if (!sol)
        return std::nullopt;
    return std::move(sol->particular);
}

} // namespace lie2
