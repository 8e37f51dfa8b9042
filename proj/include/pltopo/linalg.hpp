#pragma once

#include "pltopo/rational.hpp"

#include <cstddef>
#include <vector>

namespace pltopo {

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
    Matrix rows;
    std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);
inline std::size_t rank(const Matrix& m) { return rank(m, m.empty() ? 0 : m.front().size()); }

/// Basis of {x : m x = 0}, one vector per free column.
Matrix nullspace(const Matrix& m, std::size_t cols);

/// Basis of the row space (rows of the reduced echelon form).
Matrix row_space(const Matrix& m, std::size_t cols);

struct LinearSolution {
    enum class Kind { Unique, Parametric, Inconsistent };
    Kind kind = Kind::Inconsistent;
    /// Some solution; meaningful unless inconsistent.
    Vec particular;
    /// Basis of the homogeneous solution space (empty for Unique).
    Matrix directions;
};

/// Exact classification of a x = rhs with `cols` unknowns.
LinearSolution solve_linear(const Matrix& a, const Vec& rhs, std::size_t cols);
inline LinearSolution solve_linear(const Matrix& a, const Vec& rhs)
{
    return solve_linear(a, rhs, a.empty() ? 0 : a.front().size());
}

} // namespace pltopo
