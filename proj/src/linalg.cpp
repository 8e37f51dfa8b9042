#include "pltopo/linalg.hpp"

#include <utility>

namespace pltopo {

RowEchelon rref(Matrix m, std::size_t cols)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        if (m[row][col] != 1) {
            const Rational inv = 1 / m[row][col];
            for (std::size_t c = col; c < m[row].size(); ++c)
                if (sgn(m[row][c]) != 0)
                    m[row][c] *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0)
                continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c)
                if (sgn(m[row][c]) != 0)
                    m[r][c] -= factor * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m, std::size_t cols)
{
    return rref(m, cols).pivots.size();
}

Matrix nullspace(const Matrix& m, std::size_t cols)
{
    const RowEchelon e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v = zeros(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix row_space(const Matrix& m, std::size_t cols)
{
    return rref(m, cols).rows;
}

LinearSolution solve_linear(const Matrix& a, const Vec& rhs, std::size_t cols)
{
    Matrix aug;
    aug.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        Vec row = a[r];
        row.push_back(rhs[r]);
        aug.push_back(std::move(row));
    }
    const RowEchelon e = rref(std::move(aug), cols + 1);
    LinearSolution out;
    if (!e.pivots.empty() && e.pivots.back() == cols) {
        out.kind = LinearSolution::Kind::Inconsistent;
        return out;
    }
    out.particular = zeros(cols);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        out.particular[e.pivots[r]] = e.rows[r][cols];
    Matrix coeffs;
    for (const auto& row : e.rows)
        coeffs.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(cols));
    out.directions = nullspace(coeffs, cols);
    out.kind = out.directions.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Parametric;
    return out;
}

} // namespace pltopo
