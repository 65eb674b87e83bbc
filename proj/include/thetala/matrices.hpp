#ifndef THETALA_MATRICES_HPP
#define THETALA_MATRICES_HPP

#include <thetala/errors.hpp>

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace thetala {

enum class MatrixKind {
    PsiOdd4r,    // width s + 1 = 4r
    PsiOdd4r2,   // width s + 1 = 4r + 2
    LambdaEven4r, // width s = 4r
    LambdaEven4r2 // width s = 4r + 2
};

// 2 x n matrix of edge labels for theta(2^[s-1], 4).
struct LabelMatrix {
    MatrixKind kind {};
    std::array<std::vector<std::int64_t>, 2> rows;

    int width() const { return static_cast<int>(rows[0].size()); }
    std::int64_t at(int i, int j) const { return rows[i][j]; }
    std::int64_t row_sum(int i) const { return std::accumulate(rows[i].begin(), rows[i].end(), std::int64_t { 0 }); }
    std::int64_t column_sum(int j) const { return rows[0][j] + rows[1][j]; }

    bool operator==(const LabelMatrix&) const = default;
};

namespace detail {

    inline void shift(std::array<std::vector<std::int64_t>, 2>& m, std::int64_t by)
    {
        for (auto& row : m)
            for (auto& x : row)
                x += by;
    }

    // [block | m]
    inline void prepend(std::array<std::vector<std::int64_t>, 2>& m, const std::array<std::vector<std::int64_t>, 2>& block)
    {
        for (int i = 0; i < 2; ++i)
            m[i].insert(m[i].begin(), block[i].begin(), block[i].end());
    }

    inline void append(std::array<std::vector<std::int64_t>, 2>& m, const std::array<std::vector<std::int64_t>, 2>& block)
    {
        for (int i = 0; i < 2; ++i)
            m[i].insert(m[i].end(), block[i].begin(), block[i].end());
    }

} // namespace detail

// Psi_{s+1} for odd s >= 3: entries [1, 2s+2], columns 1..s-1 sum to 2s+3,
// row sums differ by 2.
inline LabelMatrix build_psi(int s)
{
    if (s < 3 || s % 2 == 0)
        throw InvalidSpec("Psi matrix needs odd s >= 3, got " + std::to_string(s));
    LabelMatrix m;
    const int width = s + 1;
    if (width % 4 == 0) {
        m.kind = MatrixKind::PsiOdd4r;
        m.rows = { { { 1, 7, 6, 3 }, { 8, 2, 4, 5 } } };
        for (std::int64_t r = 1; 4 * r < width; ++r) {
            detail::shift(m.rows, 4);
            detail::prepend(m.rows, { { { 1, 8 * r + 7, 8 * r + 6, 4 }, { 8 * r + 8, 2, 3, 8 * r + 5 } } });
        }
    } else {
        m.kind = MatrixKind::PsiOdd4r2;
        m.rows = { { { 1, 11, 9, 6, 8, 5 }, { 12, 2, 4, 7, 10, 3 } } };
        for (std::int64_t r = 1; 4 * r + 2 < width; ++r) {
            detail::shift(m.rows, 4);
            detail::prepend(m.rows, { { { 1, 8 * r + 11, 8 * r + 10, 4 }, { 8 * r + 12, 2, 3, 8 * r + 9 } } });
        }
    }
    return m;
}

// Lambda_s for even s >= 4: entries [1, 2s], both row sums s(2s+1)/2,
// columns 1..s-1 sum to 2s+3, last column (2, 1).
inline LabelMatrix build_lambda(int s)
{
    if (s < 4 || s % 2 != 0)
        throw InvalidSpec("Lambda matrix needs even s >= 4, got " + std::to_string(s));
    LabelMatrix m;
    if (s % 4 == 0) {
        m.kind = MatrixKind::LambdaEven4r;
        m.rows = { { { 3, 7, 6 }, { 8, 4, 5 } } };
        for (std::int64_t r = 1; 4 * r < s; ++r) {
            detail::shift(m.rows, 4);
            detail::append(m.rows, { { { 3, 8 * r + 7, 8 * r + 6, 6 }, { 8 * r + 8, 4, 5, 8 * r + 5 } } });
        }
    } else {
        m.kind = MatrixKind::LambdaEven4r2;
        m.rows = { { { 12, 4, 5, 9, 7 }, { 3, 11, 10, 6, 8 } } };
        for (std::int64_t r = 1; 4 * r + 2 < s; ++r) {
            detail::shift(m.rows, 4);
            detail::append(m.rows, { { { 3, 8 * r + 11, 8 * r + 10, 6 }, { 8 * r + 12, 4, 5, 8 * r + 9 } } });
        }
    }
    detail::append(m.rows, { { { 2 }, { 1 } } });
    return m;
}

} // namespace thetala

#endif
