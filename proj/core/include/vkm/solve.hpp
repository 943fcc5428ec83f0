#pragma once

#include "vkm/quad_system.hpp"
#include "vkm/sat_solver.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace vkm {

enum class SolveStatus { Sat, Unsat, Unknown };

const char* solve_status_name(SolveStatus s);

struct SolveBudget {
    double time_s = 0;            // 0 = unlimited
    std::uint64_t branches = 0;   // decisions or enumerated points; 0 = unlimited
    bool use_vsids = true;        // false = branch on the lowest unassigned hint
    bool break_symmetry = true;   // lex-leader constraints in the encoding
};

enum class SolveStrategy { Auto, Enumerate, Sat };

struct SolveStats {
    std::string strategy;
    std::uint64_t decisions = 0, conflicts = 0, propagations = 0, enumerated = 0;
    double elapsed_s = 0;
    std::string exhausted;  // "", "time", "branches"
};

struct SolveWitness {
    std::vector<Int> x;                 // per generator
    std::vector<std::vector<Int>> y;    // per k-simplex, length rank
};

struct SolveReport {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<SolveWitness> witness;
    SolveStats stats;
};

/// Decides solvability of a Z2 system. Small class spaces are enumerated in
/// lexicographic order against the cokernel of the deformation span, so the
/// first witness found is the least one; larger spaces go through the
/// propositional encoding and the internal solver. A sat answer always
/// carries a witness that has been re-checked against every equation.
SolveReport solve_z2(const QuadraticSystem& sys, const SolveBudget& budget = {},
                     SolveStrategy strategy = SolveStrategy::Auto);

/// Independent oracle: enumerates every class assignment, builds its form
/// cochain and tests the residual for span membership.
SolveReport brute_force_psi_search(const SimplicialComplex& K, int k,
                                   const IntersectionForm& form,
                                   const SkewCochain& theta);

/// Partial decision over Z: searches class vectors in the box [-bound, bound]
/// and tests each residual for exact lattice membership. Exhausting the box
/// without a hit is unknown, not unsat, except for the rank zero form where
/// the system is linear and the answer is exact.
SolveReport solve_z_box(const QuadraticSystem& sys, int box_bound,
                        const SolveBudget& budget = {});

} // namespace vkm
