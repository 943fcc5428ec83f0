#pragma once

#include "vkm/cli.hpp"
#include "vkm/complex.hpp"
#include "vkm/forms.hpp"

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace vkm::testing {

/// Random graph on n vertices as a 1-complex, capped so downstream
/// exhaustive oracles stay feasible. Always has at least one edge.
inline SimplicialComplex random_graph(std::mt19937_64& rng, int n_vertices,
                                      int max_edges) {
    std::bernoulli_distribution coin(0.5);
    while (true) {
        std::vector<std::vector<int>> facets;
        for (int u = 0; u < n_vertices; ++u)
            for (int v = u + 1; v < n_vertices; ++v)
                if (coin(rng)) facets.push_back({u, v});
        if (!facets.empty() && static_cast<int>(facets.size()) <= max_edges)
            return build_complex(n_vertices, facets);
    }
}

/// Uniform class assignment on the k-simplices of K, entries in [0, mod).
inline Psi random_psi(std::mt19937_64& rng, const SimplicialComplex& K, int k,
                      int rank, int mod = 2) {
    std::uniform_int_distribution<int> entry(0, mod - 1);
    Psi psi;
    for (const Simplex& s : K.simplices(k)) {
        std::vector<std::int64_t> v(static_cast<size_t>(rank));
        for (auto& e : v) e = entry(rng);
        psi.values[s] = std::move(v);
    }
    return psi;
}

struct CliRun {
    int exit_code = 0;
    std::string out;
};

/// Runs the command line entry point in-process with stdout captured.
inline CliRun run(const std::vector<std::string>& args) {
    std::ostringstream sink;
    std::streambuf* old = std::cout.rdbuf(sink.rdbuf());
    CliRun r;
    try {
        r.exit_code = run_cli(args);
    } catch (...) {
        std::cout.rdbuf(old);
        throw;
    }
    std::cout.rdbuf(old);
    r.out = sink.str();
    return r;
}

} // namespace vkm::testing
