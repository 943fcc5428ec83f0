#pragma once

#include <string>
#include <vector>

namespace vkm {

/// Parity constraint: xor of the variables equals rhs.
struct XorClause {
    std::vector<int> vars;  // 1-based, distinct
    bool rhs = false;
};

/// CNF clauses plus xor constraints over shared variables.
struct SatInstance {
    int n_vars = 0;
    std::vector<std::vector<int>> clauses;  // nonzero literals, DIMACS sign convention
    std::vector<XorClause> xors;
    /// Branching hint: variables that determine the rest through propagation.
    /// Empty means all variables are decision candidates.
    std::vector<int> decision_vars;

    int new_var() { return ++n_vars; }
};

/// Describes one variable of an encoding for the sidecar map.
struct VarNote {
    int var = 0;
    std::string kind;    // "deformation", "class_bit", "boundary_bit", "product"
    std::string detail;  // human readable description
};

} // namespace vkm
