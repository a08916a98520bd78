#ifndef LIE2_LINSOLVE_HPP
#define LIE2_LINSOLVE_HPP

#include "lie2/matrix.hpp"

#include <optional>
#include <vector>

namespace lie2 {

/// Reduced row echelon form together with its pivot bookkeeping.
struct Rref {
    Matrix mat;
    std::vector<int> pivot_cols; // ascending
    int rank = 0;
};

Rref rref(Matrix m);

int rank(const Matrix& m);

/// Basis of { v : m v = 0 }, normalized from the RREF of m: one vector per
/// free column (ascending), with entry 1 at its free column. Deterministic
/// for a given matrix.
std::vector<Vec> kernel_basis(const Matrix& m);

struct LinearSolution {
    Vec particular;
    std::vector<Vec> kernel;
};

/// Exact solve of m x = rhs; empty iff rhs is outside the column space.
std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& rhs);

/// Coordinates of `target` in the span of `basis` (given as vectors), or
/// nothing if it lies outside. When the basis is independent the result is
/// the unique coordinate vector.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& target);

} // namespace lie2

#endif
