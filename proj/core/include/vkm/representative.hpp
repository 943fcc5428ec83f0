#pragma once

#include "vkm/complex.hpp"
#include "vkm/intersect.hpp"
#include "vkm/placement.hpp"
#include "vkm/skew_cochain.hpp"

#include <cstdint>

namespace vkm {

/// Signed crossing count cochain of the general position map induced by the
/// placement: entry at sigma x tau is the intersection sign, or zero for
/// non-crossing pairs. Integer valued; reduce_ring drops it to Z2.
SkewCochain vk_representative(const SimplicialComplex& K, int k, const Placement& P);

struct Representative {
    SkewCochain theta;
    Placement placement;
    int attempts = 0;  // degenerate placements discarded before success
};

/// Tries the default placement first, then deterministic randomized ones
/// derived from the seed until a general position placement is found.
Representative compute_representative(const SimplicialComplex& K, int k,
                                      std::uint64_t seed = 0);

} // namespace vkm
