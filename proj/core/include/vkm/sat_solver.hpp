#pragma once

#include "vkm/sat_instance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vkm {

enum class SatStatus { Sat, Unsat, Unknown };

struct SatOptions {
    std::uint64_t conflict_budget = 0;  // 0 = unlimited
    std::uint64_t decision_budget = 0;  // 0 = unlimited
    double time_budget_s = 0;           // 0 = unlimited
    bool use_vsids = false;             // false = lowest-index decisions
};

struct SatStats {
    std::uint64_t decisions = 0, conflicts = 0, propagations = 0, restarts = 0;
    double elapsed_s = 0;
    std::string exhausted;  // "", "time", "conflicts", "decisions"
};

struct SatResult {
    SatStatus status = SatStatus::Unknown;
    std::vector<bool> model;  // indexed 1..n_vars when status == Sat
    SatStats stats;
};

/// Conflict driven clause learning over mixed clause/parity instances.
///
/// Parity rows are Gauss reduced up front with variables that never occur in
/// a clause eliminated first; rows pivoting on such variables are deferred
/// and only back substituted into the final model, so the search runs on the
/// clause-visible projection of the parity space. Remaining rows keep
/// unassigned counts that are updated as the trail advances and rewound on
/// backtracking, and enter conflict analysis as lazily materialized reason
/// clauses. A returned model is verified against the original instance
/// before it leaves the solver.
class SatSolver {
public:
    explicit SatSolver(const SatInstance& inst);
    SatResult solve(const SatOptions& opts = {});

private:
    struct Impl;
    const SatInstance& inst_;
};

} // namespace vkm
