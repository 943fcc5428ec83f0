#include "vkm/finger_moves.hpp"

#include <limits>
#include <stdexcept>

namespace vkm {

SkewCochain finger_move_cochain(const Simplex& eta, const Simplex& mu,
                                const SimplicialComplex& K, Ring ring) {
    if (eta.dim() + 1 != mu.dim())
        throw std::invalid_argument("finger move needs dim(eta) + 1 = dim(mu)");
    if (!eta.disjoint(mu))
        throw std::invalid_argument("finger move needs eta and mu disjoint");
    int k = mu.dim();
    SkewCochain out(ring, k);
    // sigma runs over k-simplices of K with eta as a facet and sigma disjoint
    // from mu; the extra vertex of sigma therefore avoids both eta and mu.
    for (int v = 0; v < K.n_vertices(); ++v) {
        if (eta.contains(v) || mu.contains(v)) continue;
        Simplex sigma = eta.with_vertex(v);
        if (!K.contains(sigma)) continue;
        // the cell is stored canonically; value at (sigma, mu) is [eta:sigma]
        CellPair cell(sigma, mu);
        std::int64_t val = incidence_sign(eta, sigma);
        if (!(cell.first == sigma) && k % 2 == 1) val = -val;
        out.add(cell, val);
    }
    return out;
}

FingerMoveBasis::FingerMoveBasis(const SimplicialComplex& K, int k, Ring ring)
    : ring_(ring), k_(k), pairs_(K, k) {
    for (const Simplex& eta : K.simplices(k - 1))
        for (const Simplex& mu : K.simplices(k))
            if (eta.disjoint(mu)) gens_.push_back({eta, mu});

    const size_t m = pairs_.size(), g = gens_.size();
    if (ring_ == Ring::Z2) g2_ = Gf2Matrix(m, g);
    else gz_ = IntMatrix(m, g);

    for (size_t j = 0; j < g; ++j) {
        SkewCochain phi = finger_move_cochain(gens_[j].eta, gens_[j].mu, K, ring_);
        for (const auto& [cell, v] : phi.entries()) {
            auto idx = pairs_.index_of(cell);
            if (!idx)
                throw std::logic_error("finger move cell missing from pair index");
            if (ring_ == Ring::Z2) g2_.set(*idx, j, v & 1);
            else gz_.at(*idx, j) = v;
        }
    }
}

const Gf2Matrix& FingerMoveBasis::matrix_z2() const {
    if (ring_ != Ring::Z2) throw std::logic_error("basis is not over Z2");
    return g2_;
}

const IntMatrix& FingerMoveBasis::matrix_z() const {
    if (ring_ != Ring::Z) throw std::logic_error("basis is not over Z");
    return gz_;
}

Gf2Vector FingerMoveBasis::cochain_bits(const SkewCochain& xi) const {
    Gf2Vector b(pairs_.size());
    for (const auto& [cell, v] : xi.entries()) {
        auto idx = pairs_.index_of(cell);
        if (!idx) throw std::invalid_argument("cochain cell outside the pair index");
        if (v & 1) b.set(*idx, true);
    }
    return b;
}

std::vector<Int> FingerMoveBasis::cochain_ints(const SkewCochain& xi) const {
    std::vector<Int> b(pairs_.size());
    for (const auto& [cell, v] : xi.entries()) {
        auto idx = pairs_.index_of(cell);
        if (!idx) throw std::invalid_argument("cochain cell outside the pair index");
        b[*idx] = v;
    }
    return b;
}

SkewCochain FingerMoveBasis::expand(const std::vector<Int>& coeffs) const {
    if (coeffs.size() != gens_.size())
        throw std::invalid_argument("coefficient count mismatch");
    SkewCochain acc(ring_, k_);
    for (size_t i = 0; i < pairs_.size(); ++i) {
        Int total = 0;
        for (size_t j = 0; j < gens_.size(); ++j) {
            if (coeffs[j] == 0) continue;
            Int e = ring_ == Ring::Z2 ? Int(g2_.get(i, j) ? 1 : 0) : gz_.at(i, j);
            total += coeffs[j] * e;
        }
        if (ring_ == Ring::Z2) total &= 1;
        if (total != 0) {
            if (total < std::numeric_limits<std::int64_t>::min() ||
                total > std::numeric_limits<std::int64_t>::max())
                throw std::overflow_error("expanded coefficient out of range");
            acc.set(pairs_.pair(i), static_cast<std::int64_t>(total));
        }
    }
    return acc;
}

SpanTester::SpanTester(const SimplicialComplex& K, int k, Ring ring)
    : basis_(K, k, ring) {
    if (ring == Ring::Z2) elim_.emplace(basis_.matrix_z2());
    else lattice_.emplace(basis_.matrix_z());
}

std::optional<SpanWitness> SpanTester::test(const SkewCochain& xi) const {
    if (xi.ring() != basis_.ring() || xi.k() != basis_.k())
        throw std::invalid_argument("cochain does not match the basis");
    if (basis_.ring() == Ring::Z2) {
        auto x = elim_->solve(basis_.cochain_bits(xi));
        if (!x) return std::nullopt;
        SpanWitness w;
        w.coefficients.resize(basis_.generators().size());
        for (size_t j = 0; j < w.coefficients.size(); ++j)
            w.coefficients[j] = x->get(j) ? 1 : 0;
        return w;
    }
    auto x = lattice_->solve(basis_.cochain_ints(xi));
    if (!x) return std::nullopt;
    return SpanWitness{std::move(*x)};
}

std::optional<SpanWitness> in_finger_move_span(const SkewCochain& xi,
                                               const SimplicialComplex& K) {
    return SpanTester(K, xi.k(), xi.ring()).test(xi);
}

} // namespace vkm
