#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace vkm {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(size_t rows = 0, size_t cols = 0)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    static IntMatrix identity(size_t n);
    std::vector<Int> multiply(const std::vector<Int>& x) const;

    void swap_cols(size_t i, size_t j);
    void negate_col(size_t j);
    /// col_dst -= q * col_src
    void submul_col(size_t dst, size_t src, const Int& q);

private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Column echelon form H = G * U with U unimodular, reusable for deciding
/// membership of vectors in the integer column span of G.
class IntLattice {
public:
    explicit IntLattice(IntMatrix G);

    /// Coefficients x with G x = c, or nullopt when c is outside the lattice.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& c) const;

private:
    IntMatrix h_, u_;
    std::vector<std::pair<size_t, size_t>> pivots_;  // (row, col), rows increasing
};

/// One-shot lattice membership with witness.
std::optional<std::vector<Int>> int_lattice_member(const IntMatrix& G,
                                                   const std::vector<Int>& c);

} // namespace vkm
