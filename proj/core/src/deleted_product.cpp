#include "vkm/deleted_product.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkm {

CellPair::CellPair(Simplex a, Simplex b) : first(std::move(a)), second(std::move(b)) {
    if (first.dim() != second.dim())
        throw std::invalid_argument("cell pair of unequal dimensions");
    if (!first.disjoint(second))
        throw std::invalid_argument("cell pair not disjoint: " + first.str() + " " + second.str());
    if (second < first) std::swap(first, second);
}

std::string CellPair::str() const {
    return first.str() + "x" + second.str();
}

PairIndex::PairIndex(const SimplicialComplex& K, int k) : k_(k) {
    const auto& cells = K.simplices(k);
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i].disjoint(cells[j]))
                pairs_.emplace_back(cells[i], cells[j]);
    // cells are lex sorted, so pairs_ is already in lexicographic order
}

std::optional<size_t> PairIndex::index_of(const CellPair& p) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
    if (it == pairs_.end() || !(*it == p)) return std::nullopt;
    return static_cast<size_t>(it - pairs_.begin());
}

std::vector<CellPair> deleted_product_pairs(const SimplicialComplex& K, int k) {
    return PairIndex(K, k).pairs();
}

} // namespace vkm
