#pragma once

#include "vkm/placement.hpp"
#include "vkm/simplex.hpp"

#include <optional>

namespace vkm {

/// Exact intersection test for the images of two disjoint k-simplices under
/// a moment curve placement. Returns nullopt when the open simplices do not
/// meet, otherwise the intersection sign: the orientation of the frame
/// (edge vectors of sigma, edge vectors of tau) at the crossing point.
/// Throws DegeneratePlacement when the crossing is not transversal or hits
/// a face.
std::optional<int> simplex_pair_intersection(const Placement& P,
                                             const Simplex& sigma,
                                             const Simplex& tau);

} // namespace vkm
