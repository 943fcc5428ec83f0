#pragma once

#include "vkm/complex.hpp"
#include "vkm/simplex.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace vkm {

/// Unordered cell of the deleted product: two disjoint simplices of equal
/// dimension, stored with first < second.
struct CellPair {
    Simplex first, second;

    CellPair(Simplex a, Simplex b);

    auto operator<=>(const CellPair&) const = default;
    std::string str() const;
};

/// All unordered pairs of disjoint k-simplices of K in lexicographic order.
/// This order is the global equation/row index shared by every matrix built
/// on the same complex.
class PairIndex {
public:
    PairIndex(const SimplicialComplex& K, int k);

    int k() const { return k_; }
    size_t size() const { return pairs_.size(); }
    const CellPair& pair(size_t i) const { return pairs_[i]; }
    const std::vector<CellPair>& pairs() const { return pairs_; }
    std::optional<size_t> index_of(const CellPair& p) const;

private:
    int k_;
    std::vector<CellPair> pairs_;
};

std::vector<CellPair> deleted_product_pairs(const SimplicialComplex& K, int k);

} // namespace vkm
