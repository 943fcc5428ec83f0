#pragma once

#include "vkm/sat_instance.hpp"

#include <string>
#include <vector>

namespace vkm {

/// Serializes clauses plus parity rows. Parity rows use `x` prefixed lines
/// with the unsatisfied-literal convention: a line `x l1 l2 ... 0` requires
/// the xor of its literals to be true, and a negated literal flips the
/// parity, so rhs = 0 is written by negating the first literal. The header
/// clause count includes the x lines; the comment block documents the
/// variable layout notes.
std::string emit_dimacs_xor(const SatInstance& inst, const std::vector<VarNote>& notes);

/// Inverse of emit_dimacs_xor for files of the same shape.
SatInstance parse_dimacs_xor(const std::string& text);

} // namespace vkm
