#include "xlbp/linsolve.hpp"

#include <stdexcept>

namespace xlbp {

LinearSystem LinearSystem::zeros(std::size_t rows, std::size_t cols) {
    LinearSystem s;
    s.matrix.assign(rows, std::vector<Rational>(cols));
    s.rhs.assign(rows, Rational(0));
    return s;
}

SolveResult solve_exact(const LinearSystem& sys) {
    const std::size_t rows = sys.rows();
    const std::size_t cols = sys.cols();
    if (sys.rhs.size() != rows) throw std::invalid_argument("solve_exact: rhs size mismatch");
    for (const auto& r : sys.matrix)
        if (r.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

    // augmented copy
    Matrix a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = sys.matrix[i][j];
        a[i][cols] = sys.rhs[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            std::size_t bits = a[i][c].bit_size();
            if (best == rows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j <= cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j <= cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    SolveResult out;
    out.rank = pivot_cols.size();
    for (std::size_t i = out.rank; i < rows; ++i) {
        if (!a[i][cols].is_zero()) {
            out.kind = SolveKind::inconsistent;
            return out;
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) out.free_columns.push_back(c);

    out.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) out.solution[pivot_cols[i]] = a[i][cols];

    for (auto f : out.free_columns) {
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            Rational s = Rational(1) / x;
            for (auto& y : v) y *= s;
            break;
        }
        out.nullspace.push_back(std::move(v));
    }
    out.kind = out.free_columns.empty() ? SolveKind::unique : SolveKind::family;
    return out;
}

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& x) {
    std::vector<Rational> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != x.size()) throw std::invalid_argument("mat_vec: size mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!m[i][j].is_zero()) out[i] += m[i][j] * x[j];
    }
    return out;
}

}  // namespace xlbp
