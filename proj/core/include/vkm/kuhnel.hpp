#pragma once

#include "vkm/forms.hpp"
#include "vkm/sat_instance.hpp"
#include "vkm/solve.hpp"

#include <map>
#include <vector>

namespace vkm {

/// Propositional encoding of the admissibility of the k-skeleton of the
/// n-simplex against a Z2 form: class bits per k-simplex, parity-defined
/// boundary bits per (k+1)-simplex, and two constraint families:
/// every disjoint (k+1)-simplex pair pairs to zero, and for every
/// (2k+3)-vertex subset J the partition sum at the minimal vertex of J
/// pairs to one. The choice of vertex does not matter because the sum is
/// a cycle evaluation of the class cochain.
struct KuhnelEncoding {
    int n = 0, k = 0;
    SatInstance inst;
    std::vector<Simplex> cells;                   // k-simplices, lex
    std::map<std::pair<Simplex, int>, int> h_var; // boundary bits, creation lazy
    std::vector<VarNote> notes;
    size_t disjoint_pair_constraints = 0;
    size_t subset_constraints = 0;

    int y_var(size_t cell_idx, int component) const;
    int rank = 0;
};

/// break_symmetry adds lex-leader constraints over the boundary bits for
/// every vertex transposition; sound for both answers since vertex
/// relabelings act on the set of admissible assignments.
KuhnelEncoding encode_conditions(int k, int n, const IntersectionForm& form,
                                 bool break_symmetry = true);

/// Class assignment read back from a model of the encoding.
Psi decode_assignment(const KuhnelEncoding& enc, const std::vector<bool>& model);

/// Direct check of both admissibility conditions, all pairs and all (J, v).
bool psi_admissible(int n, int k, const IntersectionForm& form, const Psi& psi);

struct ProbeResult {
    int n = 0;
    SolveStatus status = SolveStatus::Unknown;
    SatStats stats;
};

struct MaxNResult {
    int lo = 0;        // largest n proven admissible
    int hi = 0;        // smallest upper bound established
    bool exact = false;
    std::vector<ProbeResult> probes;
};

/// Scans n upward from 2k+2 (2k+1 is always admissible) deciding each probe
/// with the internal solver, capped by min(n_cap, closed_form_bound).
/// Admissibility is monotone decreasing in n, so the first unsat settles the
/// answer; unknown probes widen the returned interval instead.
MaxNResult max_admissible_n(int k, const IntersectionForm& form, int n_cap,
                            const SolveBudget& per_probe = {});

/// Upper bound for admissible n: 2k+1 + (k+1) beta, improved to
/// 2k+1 + (k+2) beta / 2 when the form is alternating.
int closed_form_bound(int k, int beta, bool alternating);

/// Threshold r from which every r-point set in the manifold has a Radon
/// partition: 2k+3 + (k+1) beta, alternating 2k+3 + (k+2) beta / 2.
int radon_threshold(int k, int beta, bool alternating);

/// Right hand side (-1)^k C(2k+1, k+1) (chi - 2) of the triangulation
/// inequality C(n-k-1, k+1) <= rhs.
long long kuhnel_conjecture_rhs(int k, long long chi);

/// Largest n satisfying the inequality, or -1 when none does.
int kuhnel_conjecture_max_n(int k, long long chi);

struct PartitionIdentity {
    int cycle_value = 0;  // class cochain evaluated on the full pair cycle
    int join_value = 0;   // partition sum of boundary pairings at v
};

/// Both sides of the vertex independence identity on a (2k+3)-vertex full
/// skeleton J, for one apex vertex v.
PartitionIdentity partition_identity(const SimplicialComplex& J, int v,
                                     const Psi& psi, const IntersectionForm& form);

} // namespace vkm
