#include "vkm/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace vkm {

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    if (other.n_ != n_) throw std::invalid_argument("gf2 size mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
    return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
    if (other.n_ != n_) throw std::invalid_argument("gf2 size mismatch");
    std::uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & other.w_[i];
    return std::popcount(acc) & 1;
}

bool Gf2Vector::any() const {
    for (std::uint64_t w : w_)
        if (w) return true;
    return false;
}

size_t Gf2Vector::popcount() const {
    size_t total = 0;
    for (std::uint64_t w : w_) total += static_cast<size_t>(std::popcount(w));
    return total;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("gf2 shape mismatch");
    Gf2Vector out(rows_);
    for (size_t r = 0; r < rows_; ++r)
        if (rv_[r].dot(x)) out.set(r, true);
    return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t w = 0; w < rv_[r].words().size(); ++w) {
            std::uint64_t word = rv_[r].words()[w];
            while (word) {
                int bit = std::countr_zero(word);
                word &= word - 1;
                out.set(w * 64 + static_cast<size_t>(bit), r, true);
            }
        }
    return out;
}

Gf2Eliminator::Gf2Eliminator(const Gf2Matrix& A)
    : m_(A.rows()), n_(A.cols()), rank_(0), reduced_(A), transform_(m_, m_) {
    for (size_t r = 0; r < m_; ++r) transform_.set(r, r, true);

    for (size_t col = 0; col < n_ && rank_ < m_; ++col) {
        size_t pivot = m_;
        for (size_t r = rank_; r < m_; ++r)
            if (reduced_.get(r, col)) { pivot = r; break; }
        if (pivot == m_) continue;
        if (pivot != rank_) {
            std::swap(reduced_.row(pivot), reduced_.row(rank_));
            std::swap(transform_.row(pivot), transform_.row(rank_));
        }
        for (size_t r = 0; r < m_; ++r) {
            if (r != rank_ && reduced_.get(r, col)) {
                reduced_.row(r) ^= reduced_.row(rank_);
                transform_.row(r) ^= transform_.row(rank_);
            }
        }
        pivot_col_.push_back(col);
        ++rank_;
    }
    coker_ = Gf2Matrix(m_ - rank_, m_);
    for (size_t r = rank_; r < m_; ++r)
        coker_.row(r - rank_) = transform_.row(r);
}

bool Gf2Eliminator::in_span(const Gf2Vector& b) const {
    if (b.size() != m_) throw std::invalid_argument("gf2 size mismatch");
    for (size_t r = 0; r < coker_.rows(); ++r)
        if (coker_.row(r).dot(b)) return false;
    return true;
}

std::optional<Gf2Vector> Gf2Eliminator::solve(const Gf2Vector& b) const {
    if (!in_span(b)) return std::nullopt;
    Gf2Vector x(n_);
    for (size_t r = 0; r < rank_; ++r)
        if (transform_.row(r).dot(b)) x.set(pivot_col_[r], true);
    return x;
}

std::optional<Gf2Vector> gf2_solve(const Gf2Matrix& A, const Gf2Vector& b) {
    return Gf2Eliminator(A).solve(b);
}

std::vector<Gf2Vector> gf2_kernel_basis(const Gf2Matrix& A) {
    size_t m = A.rows(), n = A.cols();
    Gf2Matrix R = A;
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t pivot = m;
        for (size_t r = rank; r < m; ++r)
            if (R.get(r, col)) { pivot = r; break; }
        if (pivot == m) continue;
        if (pivot != rank) std::swap(R.row(pivot), R.row(rank));
        for (size_t r = 0; r < m; ++r)
            if (r != rank && R.get(r, col)) R.row(r) ^= R.row(rank);
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<Gf2Vector> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Gf2Vector v(n);
        v.set(free, true);
        for (size_t r = 0; r < rank; ++r)
            if (R.get(r, free)) v.set(pivot_col[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace vkm
