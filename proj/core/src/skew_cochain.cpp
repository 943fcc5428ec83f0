#include "vkm/skew_cochain.hpp"

#include <stdexcept>

namespace vkm {

std::int64_t SkewCochain::value(const CellPair& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t SkewCochain::value(const Simplex& sigma, const Simplex& tau) const {
    CellPair canonical(sigma, tau);
    std::int64_t v = value(canonical);
    if (sigma == canonical.first) return v;
    // queried in the swapped orientation
    return (k_ % 2 == 0 || ring_ == Ring::Z2) ? v : -v;
}

void SkewCochain::set(const CellPair& p, std::int64_t v) {
    if (p.first.dim() != k_)
        throw std::invalid_argument("cochain cell of wrong dimension");
    if (ring_ == Ring::Z2) v = ((v % 2) + 2) % 2;
    if (v == 0) entries_.erase(p);
    else entries_[p] = v;
}

void SkewCochain::add(const CellPair& p, std::int64_t v) {
    set(p, value(p) + v);
}

SkewCochain& SkewCochain::operator+=(const SkewCochain& other) {
    if (other.ring_ != ring_ || other.k_ != k_)
        throw std::invalid_argument("cochain mismatch");
    for (const auto& [p, v] : other.entries_) add(p, v);
    return *this;
}

SkewCochain& SkewCochain::operator-=(const SkewCochain& other) {
    if (other.ring_ != ring_ || other.k_ != k_)
        throw std::invalid_argument("cochain mismatch");
    for (const auto& [p, v] : other.entries_) add(p, -v);
    return *this;
}

SkewCochain reduce_ring(const SkewCochain& xi) {
    if (xi.ring() == Ring::Z2) return xi;
    SkewCochain out(Ring::Z2, xi.k());
    for (const auto& [p, v] : xi.entries())
        out.set(p, v);
    return out;
}

void PairCycle::toggle(const CellPair& p) {
    if (p.first.dim() != k_)
        throw std::invalid_argument("cycle cell of wrong dimension");
    auto it = cells_.find(p);
    if (it == cells_.end()) cells_.insert(p);
    else cells_.erase(it);
}

int evaluate_on_cycle(const SkewCochain& xi, const PairCycle& z) {
    if (xi.ring() != Ring::Z2)
        throw std::invalid_argument("cycle evaluation is defined over Z2");
    if (xi.k() != z.k())
        throw std::invalid_argument("cycle dimension mismatch");
    int acc = 0;
    for (const CellPair& p : z.cells())
        acc ^= static_cast<int>(xi.value(p) & 1);
    return acc;
}

PairCycle complete_pair_cycle(const SimplicialComplex& J) {
    int k = J.dim();
    std::vector<int> all;
    for (int v = 0; v < J.n_vertices(); ++v) all.push_back(v);
    return complete_pair_cycle_within(J, all, k);
}

PairCycle complete_pair_cycle_within(const SimplicialComplex& K,
                                     const std::vector<int>& S, int k) {
    if (static_cast<int>(S.size()) != 2 * k + 3)
        throw std::invalid_argument("cycle needs exactly 2k+3 vertices");
    auto [J, labels] = induced_subcomplex(K, S);
    // the span of S must be the complete k-skeleton on these vertices
    size_t expect = 1;
    for (int i = 0; i < k + 1; ++i)
        expect = expect * static_cast<size_t>(2 * k + 3 - i) / static_cast<size_t>(i + 1);
    if (J.simplices(k).size() != expect)
        throw std::invalid_argument("vertex set does not span a complete k-skeleton");

    PairCycle z(k);
    for (const CellPair& p : deleted_product_pairs(J, k)) {
        std::vector<int> a, b;
        for (int v : p.first.vertices()) a.push_back(labels[static_cast<size_t>(v)]);
        for (int v : p.second.vertices()) b.push_back(labels[static_cast<size_t>(v)]);
        z.toggle(CellPair(Simplex(std::move(a)), Simplex(std::move(b))));
    }
    return z;
}

} // namespace vkm
