#include "vkm/rational.hpp"

#include <stdexcept>

namespace vkm {

RationalSolve rational_solve_full(std::vector<std::vector<Rational>> A,
                                  std::vector<Rational> b) {
    const size_t m = A.size();
    const size_t n = m ? A[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("rational system shape mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("ragged rational matrix");

    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t pivot = m;
        for (size_t r = rank; r < m; ++r)
            if (A[r][col] != 0) { pivot = r; break; }
        if (pivot == m) continue;
        std::swap(A[pivot], A[rank]);
        std::swap(b[pivot], b[rank]);
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rational f = A[r][col] / A[rank][col];
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[rank][c];
            b[r] -= f * b[rank];
        }
        pivots.emplace_back(rank, col);
        ++rank;
    }
    for (size_t r = rank; r < m; ++r)
        if (b[r] != 0) return {LinSolveStatus::Inconsistent, {}};
    if (rank < n) return {LinSolveStatus::Underdetermined, {}};

    std::vector<Rational> x(n);
    for (auto [r, c] : pivots) x[c] = b[r] / A[r][c];
    return {LinSolveStatus::Unique, std::move(x)};
}

std::optional<std::vector<Rational>> rational_linear_solve(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    if (A.size() != (A.empty() ? 0 : A[0].size()))
        throw std::invalid_argument("rational_linear_solve expects a square matrix");
    RationalSolve s = rational_solve_full(std::move(A), std::move(b));
    if (s.status != LinSolveStatus::Unique) return std::nullopt;
    return std::move(s.x);
}

int rational_det_sign(std::vector<std::vector<Rational>> A) {
    const size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("det of non-square matrix");
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = n;
        for (size_t r = col; r < n; ++r)
            if (A[r][col] != 0) { pivot = r; break; }
        if (pivot == n) return 0;
        if (pivot != col) { std::swap(A[pivot], A[col]); sign = -sign; }
        if (A[col][col] < 0) sign = -sign;
        for (size_t r = col + 1; r < n; ++r) {
            if (A[r][col] == 0) continue;
            Rational f = A[r][col] / A[col][col];
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
        }
    }
    return sign;
}

} // namespace vkm
