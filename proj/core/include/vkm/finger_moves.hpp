#pragma once

#include "vkm/complex.hpp"
#include "vkm/gf2.hpp"
#include "vkm/int_lattice.hpp"
#include "vkm/skew_cochain.hpp"

#include <optional>
#include <vector>

namespace vkm {

/// The elementary deformation cochain attached to a (k-1)-simplex eta and a
/// disjoint k-simplex mu. Nonzero exactly on cells sigma x mu with eta a
/// facet of sigma, where it takes the incidence sign of eta in sigma; the
/// value in the swapped orientation follows the skew symmetry.
SkewCochain finger_move_cochain(const Simplex& eta, const Simplex& mu,
                                const SimplicialComplex& K, Ring ring);

struct GeneratorPair {
    Simplex eta, mu;
};

/// All admissible generators (eta, mu) in lexicographic order together with
/// the matrix whose columns are their cochains in the pair index order.
class FingerMoveBasis {
public:
    FingerMoveBasis(const SimplicialComplex& K, int k, Ring ring);

    Ring ring() const { return ring_; }
    int k() const { return k_; }
    const std::vector<GeneratorPair>& generators() const { return gens_; }
    const PairIndex& pairs() const { return pairs_; }

    const Gf2Matrix& matrix_z2() const;  // ring Z2 only
    const IntMatrix& matrix_z() const;   // ring Z only

    Gf2Vector cochain_bits(const SkewCochain& xi) const;
    std::vector<Int> cochain_ints(const SkewCochain& xi) const;

    /// The combination sum_g coeffs[g] * cochain(g), for witness checks.
    SkewCochain expand(const std::vector<Int>& coeffs) const;

private:
    Ring ring_;
    int k_;
    PairIndex pairs_;
    std::vector<GeneratorPair> gens_;
    Gf2Matrix g2_;
    IntMatrix gz_;
};

struct SpanWitness {
    std::vector<Int> coefficients;  // one per generator; bits over Z2
};

/// Membership of a cochain in the span of all finger move cochains, with a
/// reusable elimination. Over Z2 this is linear algebra; over Z it is exact
/// lattice membership.
class SpanTester {
public:
    SpanTester(const SimplicialComplex& K, int k, Ring ring);

    const FingerMoveBasis& basis() const { return basis_; }
    std::optional<SpanWitness> test(const SkewCochain& xi) const;

private:
    FingerMoveBasis basis_;
    std::optional<Gf2Eliminator> elim_;
    std::optional<IntLattice> lattice_;
};

/// One-shot membership test; the witness re-expands to xi exactly.
std::optional<SpanWitness> in_finger_move_span(const SkewCochain& xi,
                                               const SimplicialComplex& K);

} // namespace vkm
