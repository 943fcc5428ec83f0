#include "vkm/representative.hpp"

#include "vkm/deleted_product.hpp"

namespace vkm {

SkewCochain vk_representative(const SimplicialComplex& K, int k, const Placement& P) {
    if (P.n_vertices() < K.n_vertices())
        throw std::invalid_argument("placement has too few vertices");
    SkewCochain theta(Ring::Z, k);
    for (const CellPair& cell : deleted_product_pairs(K, k)) {
        auto s = simplex_pair_intersection(P, cell.first, cell.second);
        if (s) theta.set(cell, *s);
    }
    return theta;
}

Representative compute_representative(const SimplicialComplex& K, int k,
                                      std::uint64_t seed) {
    const int max_attempts = 64;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Placement P = attempt == 0 ? default_placement(K.n_vertices(), k)
                                   : randomized_placement(K.n_vertices(), k, seed, attempt);
        try {
            return {vk_representative(K, k, P), std::move(P), attempt};
        } catch (const DegeneratePlacement&) {
            // resample with a widened range
        }
    }
    throw DegeneratePlacement("no general position placement found");
}

} // namespace vkm
