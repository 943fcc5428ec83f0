#pragma once

#include "vkm/quad_system.hpp"
#include "vkm/sat_instance.hpp"

#include <map>
#include <utility>
#include <vector>

namespace vkm {

/// Propositional encoding of a Z2 quadratic system. Variable layout:
/// deformation coefficients x first, then the class bits y, then one product
/// variable per distinct y-pair that occurs in some bilinear term, defined by
/// an and-gate. Every equation becomes a single xor constraint.
struct SystemEncoding {
    SatInstance inst;
    size_t n_x = 0, n_y = 0;
    std::vector<std::pair<std::pair<int, int>, int>> products;  // ((a, b), out), creation order

    int x_var(size_t g) const { return static_cast<int>(g) + 1; }
    int y_var(size_t cell_idx, int component, int rank) const {
        return static_cast<int>(n_x + cell_idx * static_cast<size_t>(rank) +
                                static_cast<size_t>(component)) + 1;
    }

    std::vector<VarNote> notes;  // sidecar descriptions, one per variable
};

/// break_symmetry adds lex-leader constraints over the class bits for every
/// vertex transposition that is an automorphism of the complex; sound for
/// both answers because such transpositions act on the solution set.
SystemEncoding encode_system(const QuadraticSystem& sys, bool break_symmetry = true);

/// Shared and-gate helper: emits the three clauses of out <-> a and b.
void emit_and_gate(SatInstance& inst, int a, int b, int out);

/// Get-or-create product variable for the unordered input pair.
int product_var(SatInstance& inst, std::map<std::pair<int, int>, int>& pool,
                std::vector<std::pair<std::pair<int, int>, int>>& order, int a, int b);

} // namespace vkm
