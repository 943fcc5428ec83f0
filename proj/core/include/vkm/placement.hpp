#pragma once

#include "vkm/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vkm {

/// Raised when a placement fails to put a pair of simplices in general
/// position; the caller is expected to retry with fresh parameters.
struct DegeneratePlacement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vertex placement on the moment curve in R^{2k}: vertex v sits at
/// (t_v, t_v^2, ..., t_v^{2k}) for pairwise distinct parameters t_v.
struct Placement {
    int k = 0;
    std::vector<Rational> parameters;

    std::vector<Rational> coords(int vertex) const;
    int n_vertices() const { return static_cast<int>(parameters.size()); }
};

/// Parameters 1, 2, ..., n.
Placement default_placement(int n_vertices, int k);

/// Distinct integer parameters drawn deterministically from (seed, attempt);
/// the sampling range widens with the attempt number.
Placement randomized_placement(int n_vertices, int k, std::uint64_t seed, int attempt);

} // namespace vkm
