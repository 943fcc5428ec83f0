#include "vkm/int_lattice.hpp"

#include <stdexcept>

namespace vkm {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix I(n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

std::vector<Int> IntMatrix::multiply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("int matrix shape mismatch");
    std::vector<Int> out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        Int acc = 0;
        for (size_t c = 0; c < cols_; ++c)
            if (a_[r * cols_ + c] != 0 && x[c] != 0) acc += a_[r * cols_ + c] * x[c];
        out[r] = std::move(acc);
    }
    return out;
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(size_t j) {
    for (size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::submul_col(size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t r = 0; r < rows_; ++r) at(r, dst) -= q * at(r, src);
}

IntLattice::IntLattice(IntMatrix G) : h_(std::move(G)), u_(IntMatrix::identity(h_.cols())) {
    const size_t m = h_.rows(), n = h_.cols();
    size_t col = 0;
    for (size_t row = 0; row < m && col < n; ++row) {
        // gcd-reduce the active columns until at most one has a nonzero entry
        // in this row; column operations are mirrored on u_.
        while (true) {
            size_t best = n;
            int nonzero = 0;
            for (size_t j = col; j < n; ++j) {
                if (h_.at(row, j) == 0) continue;
                ++nonzero;
                if (best == n || abs(h_.at(row, j)) < abs(h_.at(row, best)))
                    best = j;
            }
            if (nonzero == 0) break;
            if (best != col) { h_.swap_cols(col, best); u_.swap_cols(col, best); }
            if (nonzero == 1) {
                if (h_.at(row, col) < 0) { h_.negate_col(col); u_.negate_col(col); }
                pivots_.emplace_back(row, col);
                ++col;
                break;
            }
            for (size_t j = col + 1; j < n; ++j) {
                if (h_.at(row, j) == 0) continue;
                Int q = h_.at(row, j) / h_.at(row, col);
                h_.submul_col(j, col, q);
                u_.submul_col(j, col, q);
            }
        }
    }
}

std::optional<std::vector<Int>> IntLattice::solve(const std::vector<Int>& c) const {
    const size_t m = h_.rows(), n = h_.cols();
    if (c.size() != m) throw std::invalid_argument("lattice vector size mismatch");
    std::vector<Int> residual = c;
    std::vector<Int> z(n);
    size_t next = 0;
    for (size_t row = 0; row < m; ++row) {
        if (next < pivots_.size() && pivots_[next].first == row) {
            size_t pcol = pivots_[next].second;
            const Int& p = h_.at(row, pcol);
            if (residual[row] % p != 0) return std::nullopt;
            Int zi = residual[row] / p;
            if (zi != 0)
                for (size_t r = row; r < m; ++r)
                    residual[r] -= zi * h_.at(r, pcol);
            z[pcol] = std::move(zi);
            ++next;
        } else if (residual[row] != 0) {
            return std::nullopt;
        }
    }
    return u_.multiply(z);
}

std::optional<std::vector<Int>> int_lattice_member(const IntMatrix& G,
                                                   const std::vector<Int>& c) {
    return IntLattice(G).solve(c);
}

} // namespace vkm
