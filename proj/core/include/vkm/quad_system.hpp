#pragma once

#include "vkm/finger_moves.hpp"
#include "vkm/forms.hpp"
#include "vkm/skew_cochain.hpp"

#include <vector>

namespace vkm {

/// The deformation system of a complex against a form: one equation per
/// unordered disjoint k-simplex pair,
///
///   sum_g x_g phi_g(sigma x tau) + y_sigma^T A y_tau = theta(sigma x tau),
///
/// with x indexed by the finger move generators and one rank-vector y per
/// k-simplex. Solvable over the ring iff some class assignment makes the
/// obstruction class vanish.
struct QuadraticSystem {
    Ring ring;
    int k;
    SimplicialComplex complex;
    FingerMoveBasis basis;           // generators and their matrix, pair order rows
    IntersectionForm form;
    std::vector<Simplex> cells;      // y registry: the k-simplices, lex order
    std::vector<std::int64_t> rhs;   // theta per pair, ring-normalized

    size_t equations() const { return basis.pairs().size(); }
    size_t x_count() const { return basis.generators().size(); }
    size_t y_count() const { return cells.size() * static_cast<size_t>(form.rank()); }
};

QuadraticSystem build_system(const SimplicialComplex& K, int k,
                             const IntersectionForm& form, const SkewCochain& theta);

struct WitnessCheck {
    bool ok = false;
    std::vector<size_t> violated;  // equation indices, pair order
};

/// Exact evaluation of every equation at the candidate witness.
WitnessCheck check_witness(const QuadraticSystem& sys, const std::vector<Int>& x,
                           const std::vector<std::vector<Int>>& y);

} // namespace vkm
