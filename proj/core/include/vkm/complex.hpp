#pragma once

#include "vkm/simplex.hpp"

#include <vector>

namespace vkm {

/// A finite abstract simplicial complex on vertices 0..n_vertices-1.
/// Closed under taking faces; simplices of each dimension are kept sorted,
/// so their positions double as stable indices.
class SimplicialComplex {
public:
    SimplicialComplex(int n_vertices, std::vector<Simplex> simplices);

    int n_vertices() const { return n_vertices_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    /// Simplices of dimension d in lexicographic order (empty when out of range).
    const std::vector<Simplex>& simplices(int d) const;
    bool contains(const Simplex& s) const;
    size_t size() const;

private:
    int n_vertices_;
    std::vector<std::vector<Simplex>> by_dim_;
    static const std::vector<Simplex> empty_;
};

/// Builds the downward closure of the given facets.
SimplicialComplex build_complex(int n_vertices,
                                const std::vector<std::vector<int>>& facets);

/// The k-skeleton of the n-simplex: all faces on n+1 vertices of dimension <= k.
SimplicialComplex simplex_skeleton(int n, int k);

struct InducedSubcomplex {
    SimplicialComplex complex;    // relabeled to 0..|S|-1
    std::vector<int> vertex_map;  // new label -> original vertex
};

/// Full subcomplex spanned by the vertex subset S, relabeled along sorted S.
InducedSubcomplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::vector<int>& S);

} // namespace vkm
