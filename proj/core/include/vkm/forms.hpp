#pragma once

#include "vkm/chain.hpp"
#include "vkm/complex.hpp"
#include "vkm/skew_cochain.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vkm {

/// Middle dimensional intersection form of a closed 2k-manifold, given as a
/// rank x rank matrix over the coefficient ring. Over Z the matrix must be
/// (-1)^k-symmetric; over Z2 it must be symmetric with entries 0/1.
class IntersectionForm {
public:
    IntersectionForm(Ring ring, int k, std::vector<std::vector<std::int64_t>> matrix,
                     std::string label = "");

    Ring ring() const { return ring_; }
    int k() const { return k_; }
    int rank() const { return rank_; }
    std::int64_t entry(int i, int j) const;
    const std::string& label() const { return label_; }

    /// All diagonal entries even, so the mod 2 reduction is alternating.
    bool alternating() const;

    /// a^T A b, normalized into the ring.
    std::int64_t pair(const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>& b) const;

private:
    Ring ring_;
    int k_;
    int rank_;
    std::vector<std::vector<std::int64_t>> m_;
    std::string label_;
};

IntersectionForm trivial_form(Ring ring, int k);
/// Diagonal form of the given rank; over Z it exists only for even k.
IntersectionForm identity_form(int b, Ring ring, int k);
/// Hyperbolic form [[0, I], [(-1)^k I, 0]] of rank 2c.
IntersectionForm symplectic_form(int c, Ring ring, int k);

/// Assignment of a homology class (a coefficient vector of length rank) to
/// every k-simplex of a complex.
struct Psi {
    std::map<Simplex, std::vector<std::int64_t>> values;

    const std::vector<std::int64_t>& at(const Simplex& s) const;
};

/// The skew cochain sigma x tau -> psi(sigma)^T A psi(tau).
SkewCochain form_cochain(const Psi& psi, const IntersectionForm& form,
                         const SimplicialComplex& K, int k);

/// psi applied to the boundary of a (k+1)-simplex, with incidence signs.
std::vector<std::int64_t> boundary_image(const Psi& psi, const IntersectionForm& form,
                                         const Simplex& kappa);

} // namespace vkm
