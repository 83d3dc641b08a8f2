#pragma once

#include <cstddef>
#include <vector>

#include "dt/rational.hpp"

namespace dt {

/// Dense matrix over exact rationals, row major. Only what the Hom
/// computations need: rank and kernel dimension.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination. Rows are scaled to integers
/// first, so no rational arithmetic happens during the sweep and every
/// intermediate division is exact. No numerical rank decisions anywhere.
inline int matrix_rank(const RationalMatrix& input) {
    const std::size_t rows = input.size();
    if (rows == 0) return 0;
    const std::size_t cols = input[0].size();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (input[i].size() != cols) throw Error("ragged matrix");
        Integer scale = 1;
        for (const Rational& x : input[i]) scale = lcm(scale, x.get_den());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = input[i][j] * Rational(scale);
            m[i][j] = scaled.get_num();
        }
    }

    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// Dimension of the solution space of M x = 0.
inline int kernel_dimension(const RationalMatrix& m, int ncols) {
    return ncols - matrix_rank(m);
}

} // namespace dt
