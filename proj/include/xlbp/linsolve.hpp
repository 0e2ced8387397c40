#pragma once

#include "xlbp/rational.hpp"

#include <cstddef>
#include <vector>

namespace xlbp {

using Matrix = std::vector<std::vector<Rational>>;

struct LinearSystem {
    Matrix matrix;              // rows x cols
    std::vector<Rational> rhs;  // one entry per row

    static LinearSystem zeros(std::size_t rows, std::size_t cols);
    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }
};

enum class SolveKind { unique, family, inconsistent };

struct SolveResult {
    SolveKind kind = SolveKind::inconsistent;
    std::size_t rank = 0;
    // Particular solution with all free variables set to zero (empty when inconsistent).
    std::vector<Rational> solution;
    // Basis of the homogeneous solution space, one vector per free column.
    // Each vector is scaled so its first nonzero entry is 1.
    std::vector<std::vector<Rational>> nullspace;
    std::vector<std::size_t> free_columns;
};

// Exact Gauss-Jordan elimination. Pivots on the nonzero entry with the
// smallest bit size in the current column.
SolveResult solve_exact(const LinearSystem& sys);

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& x);

}  // namespace xlbp
