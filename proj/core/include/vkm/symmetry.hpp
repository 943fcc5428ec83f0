#pragma once

#include "vkm/complex.hpp"
#include "vkm/sat_instance.hpp"

#include <vector>

namespace vkm {

/// Appends clauses forcing v <=_lex pv, where pv is the image of the variable
/// vector v under an instance automorphism. Some model of every satisfiable
/// instance survives (the one whose v-vector is least in its orbit), so
/// satisfiability is preserved while symmetric branches are cut off.
/// Positions with v[i] == pv[i] are skipped. Returns the number of comparison
/// positions actually encoded; 0 means the permutation fixes v.
size_t add_lex_leader(SatInstance& inst, std::vector<VarNote>& notes,
                      const std::vector<int>& v, const std::vector<int>& pv);

/// Vertex transpositions (i j) that map every simplex of K to a simplex of K.
/// For full skeleta this is all of them; for irregular complexes typically none.
std::vector<std::pair<int, int>> automorphic_transpositions(const SimplicialComplex& K);

/// Image of s under the transposition (i j), as a sorted simplex.
Simplex transpose_simplex(const Simplex& s, int i, int j);

} // namespace vkm
