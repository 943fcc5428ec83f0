#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace vkm {

/// Exact rational scalar, always in canonical form (coprime, positive
/// denominator).
using Rational = boost::multiprecision::cpp_rational;

enum class LinSolveStatus { Unique, Inconsistent, Underdetermined };

struct RationalSolve {
    LinSolveStatus status;
    std::vector<Rational> x;  // populated only for Unique
};

/// Exact Gaussian elimination on a (possibly non-square) system.
RationalSolve rational_solve_full(std::vector<std::vector<Rational>> A,
                                  std::vector<Rational> b);

/// Square system; nullopt when the matrix is singular.
std::optional<std::vector<Rational>> rational_linear_solve(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b);

/// Sign of the determinant of a square matrix: -1, 0 or +1.
int rational_det_sign(std::vector<std::vector<Rational>> A);

} // namespace vkm
