#pragma once

#include "vkm/complex.hpp"
#include "vkm/forms.hpp"
#include "vkm/sat_instance.hpp"
#include "vkm/solve.hpp"

#include <string>
#include <vector>

namespace vkm {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Parses {"n_vertices": int, "simplices": [[...], ...]}; the simplex list
/// gives facets, downward closure is implied.
SimplicialComplex complex_from_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& K);

/// Either the builtin family "delta:n:k" (the k-skeleton of the n-simplex)
/// or a path to a complex JSON file.
SimplicialComplex parse_complex_spec(const std::string& spec);

/// Parses {"ring": "Z"|"Z2", "rank": b, "matrix": [[...], ...]}. The
/// symmetry parameter k comes from the surrounding context. When the
/// requested ring is Z2 but the file says Z, entries reduce mod 2; the
/// opposite direction has no canonical lift and is an error.
IntersectionForm form_from_json(const std::string& text, Ring ring, int k);
std::string form_to_json(const IntersectionForm& form);

/// CLI shorthand: trivial | identity:b | symplectic:c | @path.json.
IntersectionForm parse_form_spec(const std::string& spec, Ring ring, int k);

/// Round-tripping report serialization. Witness coordinates are written as
/// JSON numbers when they fit in 64 bits and as decimal strings otherwise.
std::string report_to_json(const SolveReport& r);
SolveReport report_from_json(const std::string& text);

/// Witness files: {"x": [...], "y": [[...], ...]}; "x" may be omitted when
/// only the class assignment is known.
std::string witness_to_json(const SolveWitness& w);
SolveWitness witness_from_json(const std::string& text);

/// Variable map emitted next to DIMACS output so external models can be
/// decoded: layout counts plus one entry per annotated variable.
std::string sidecar_to_json(int n_vars, size_t n_x, size_t n_y, int rank,
                            const std::vector<VarNote>& notes);
std::vector<VarNote> sidecar_from_json(const std::string& text);

} // namespace vkm
