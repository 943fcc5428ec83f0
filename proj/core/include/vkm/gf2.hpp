#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace vkm {

/// Dense bit vector over GF(2), packed 64 bits per word.
class Gf2Vector {
public:
    explicit Gf2Vector(size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= mask; else w_[i >> 6] &= ~mask;
    }
    void flip(size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    Gf2Vector& operator^=(const Gf2Vector& other);
    /// Parity of the bitwise AND with another vector (the GF(2) dot product).
    bool dot(const Gf2Vector& other) const;
    bool any() const;
    size_t popcount() const;

    bool operator==(const Gf2Vector&) const = default;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    size_t n_;
    std::vector<std::uint64_t> w_;
};

/// Dense matrix over GF(2), rows packed as bit vectors.
class Gf2Matrix {
public:
    Gf2Matrix(size_t rows = 0, size_t cols = 0)
        : rows_(rows), cols_(cols), rv_(rows, Gf2Vector(cols)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool get(size_t r, size_t c) const { return rv_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rv_[r].set(c, v); }
    const Gf2Vector& row(size_t r) const { return rv_[r]; }
    Gf2Vector& row(size_t r) { return rv_[r]; }

    Gf2Vector multiply(const Gf2Vector& x) const;  // A*x
    Gf2Matrix transposed() const;

private:
    size_t rows_, cols_;
    std::vector<Gf2Vector> rv_;
};

/// Row reduction of A with the transform recorded, reusable for many
/// right-hand sides. Solutions fix all free variables to zero, so the
/// returned solution is deterministic.
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(const Gf2Matrix& A);

    size_t rank() const { return rank_; }
    bool in_span(const Gf2Vector& b) const;
    std::optional<Gf2Vector> solve(const Gf2Vector& b) const;
    /// Rows spanning the left kernel {u : u^T A = 0}; b lies in the column
    /// span of A iff every cokernel row is orthogonal to b.
    const Gf2Matrix& cokernel() const { return coker_; }

private:
    size_t m_, n_, rank_;
    std::vector<size_t> pivot_col_;   // per pivot row
    Gf2Matrix reduced_;               // RREF of A, pivot rows first
    Gf2Matrix transform_;             // T with T*A = reduced
    Gf2Matrix coker_;                 // rows rank..m-1 of T
};

/// One-shot solve of A x = b; free variables are set to zero.
std::optional<Gf2Vector> gf2_solve(const Gf2Matrix& A, const Gf2Vector& b);

/// Basis of the right kernel {x : A x = 0}.
std::vector<Gf2Vector> gf2_kernel_basis(const Gf2Matrix& A);

} // namespace vkm
