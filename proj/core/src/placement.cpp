#include "vkm/placement.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace vkm {

std::vector<Rational> Placement::coords(int vertex) const {
    const Rational& t = parameters[static_cast<size_t>(vertex)];
    std::vector<Rational> c(static_cast<size_t>(2 * k));
    Rational p = 1;
    for (size_t i = 0; i < c.size(); ++i) {
        p *= t;
        c[i] = p;
    }
    return c;
}

Placement default_placement(int n_vertices, int k) {
    Placement P;
    P.k = k;
    P.parameters.reserve(static_cast<size_t>(n_vertices));
    for (int v = 1; v <= n_vertices; ++v) P.parameters.emplace_back(v);
    return P;
}

Placement randomized_placement(int n_vertices, int k, std::uint64_t seed, int attempt) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(attempt) + 1);
    long long range = 8LL * n_vertices << std::min(attempt, 20);
    std::uniform_int_distribution<long long> dist(1, range);
    std::set<long long> chosen;
    while (static_cast<int>(chosen.size()) < n_vertices) chosen.insert(dist(rng));
    // assign parameters to vertices in shuffled order, otherwise every
    // placement would order the vertices along the curve the same way
    std::vector<long long> ts(chosen.begin(), chosen.end());
    std::shuffle(ts.begin(), ts.end(), rng);
    Placement P;
    P.k = k;
    for (long long t : ts) P.parameters.emplace_back(t);
    return P;
}

} // namespace vkm
