#include "vkm/intersect.hpp"

#include <stdexcept>

namespace vkm {

std::optional<int> simplex_pair_intersection(const Placement& P,
                                             const Simplex& sigma,
                                             const Simplex& tau) {
    const int k = P.k;
    if (sigma.dim() != k || tau.dim() != k)
        throw std::invalid_argument("intersection test needs two k-simplices");
    if (!sigma.disjoint(tau))
        throw std::invalid_argument("intersection test needs disjoint simplices");

    const size_t d = static_cast<size_t>(2 * k);
    std::vector<std::vector<Rational>> p, q;
    for (int v : sigma.vertices()) p.push_back(P.coords(v));
    for (int v : tau.vertices()) q.push_back(P.coords(v));

    // barycentric coordinates with lambda_0, mu_0 eliminated:
    //   p0 + sum_i lam_i (p_i - p0) = q0 + sum_j mu_j (q_j - q0)
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
    std::vector<Rational> rhs(d);
    for (size_t r = 0; r < d; ++r) {
        for (size_t i = 1; i <= static_cast<size_t>(k); ++i) {
            A[r][i - 1] = p[i][r] - p[0][r];
            A[r][static_cast<size_t>(k) + i - 1] = q[0][r] - q[i][r];
        }
        rhs[r] = q[0][r] - p[0][r];
    }

    RationalSolve sol = rational_solve_full(A, rhs);
    if (sol.status == LinSolveStatus::Inconsistent)
        return std::nullopt;  // parallel affine hulls that never meet
    if (sol.status == LinSolveStatus::Underdetermined)
        throw DegeneratePlacement("affine hulls meet in a positive-dimensional set: " +
                                  sigma.str() + " " + tau.str());

    // full barycentric vectors; any zero means the crossing hits a face
    std::vector<Rational> lam(static_cast<size_t>(k) + 1), mu(static_cast<size_t>(k) + 1);
    lam[0] = 1;
    mu[0] = 1;
    for (size_t i = 1; i <= static_cast<size_t>(k); ++i) {
        lam[i] = sol.x[i - 1];
        mu[i] = sol.x[static_cast<size_t>(k) + i - 1];
        lam[0] -= lam[i];
        mu[0] -= mu[i];
    }
    bool inside = true;
    for (size_t i = 0; i <= static_cast<size_t>(k); ++i) {
        if (lam[i] == 0 || mu[i] == 0)
            throw DegeneratePlacement("crossing point on a simplex face: " +
                                      sigma.str() + " " + tau.str());
        if (lam[i] < 0 || mu[i] < 0) inside = false;
    }
    if (!inside) return std::nullopt;

    // orientation of the combined edge frame at the transversal crossing
    std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
    for (size_t r = 0; r < d; ++r)
        for (size_t i = 1; i <= static_cast<size_t>(k); ++i) {
            M[r][i - 1] = p[i][r] - p[0][r];
            M[r][static_cast<size_t>(k) + i - 1] = q[i][r] - q[0][r];
        }
    int s = rational_det_sign(std::move(M));
    if (s == 0)
        throw DegeneratePlacement("degenerate frame at crossing");  // unreachable after Unique
    return s;
}

} // namespace vkm
