#include "vkm/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vkm {

const std::vector<Simplex> SimplicialComplex::empty_{};

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<Simplex> simplices)
    : n_vertices_(n_vertices) {
    if (n_vertices < 0)
        throw std::invalid_argument("negative vertex count");
    std::set<Simplex> closure;
    // close downward
    std::vector<Simplex> work = std::move(simplices);
    while (!work.empty()) {
        Simplex s = std::move(work.back());
        work.pop_back();
        if (s.vertices().front() < 0 || s.vertices().back() >= n_vertices)
            throw std::invalid_argument("simplex vertex out of range: " + s.str());
        if (!closure.insert(s).second) continue;
        for (Simplex& f : s.facets())
            if (!closure.count(f)) work.push_back(std::move(f));
    }
    for (const Simplex& s : closure) {
        size_t d = static_cast<size_t>(s.dim());
        if (by_dim_.size() <= d) by_dim_.resize(d + 1);
        by_dim_[d].push_back(s);
    }
    for (auto& level : by_dim_)
        std::sort(level.begin(), level.end());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return empty_;
    return by_dim_[static_cast<size_t>(d)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const auto& level = simplices(s.dim());
    return std::binary_search(level.begin(), level.end(), s);
}

size_t SimplicialComplex::size() const {
    size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

SimplicialComplex build_complex(int n_vertices,
                                const std::vector<std::vector<int>>& facets) {
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets)
        simplices.emplace_back(f);
    return SimplicialComplex(n_vertices, std::move(simplices));
}

SimplicialComplex simplex_skeleton(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("simplex_skeleton needs 0 <= k <= n");
    std::vector<Simplex> tops;
    std::vector<int> pick(static_cast<size_t>(k) + 1);
    // enumerate all (k+1)-subsets of {0..n}
    for (int i = 0; i <= k; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
        tops.emplace_back(pick);
        int i = k;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j <= k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return SimplicialComplex(n + 1, std::move(tops));
}

InducedSubcomplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::vector<int>& S) {
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("vertex subset has repeats");
    if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= K.n_vertices()))
        throw std::invalid_argument("vertex subset out of range");
    std::map<int, int> relabel;
    for (size_t i = 0; i < sorted.size(); ++i)
        relabel[sorted[i]] = static_cast<int>(i);

    std::vector<Simplex> kept;
    for (int d = 0; d <= K.dim(); ++d) {
        for (const Simplex& s : K.simplices(d)) {
            bool inside = true;
            for (int v : s.vertices())
                if (!relabel.count(v)) { inside = false; break; }
            if (!inside) continue;
            std::vector<int> verts;
            verts.reserve(s.vertices().size());
            for (int v : s.vertices()) verts.push_back(relabel[v]);
            kept.emplace_back(std::move(verts));
        }
    }
    return {SimplicialComplex(static_cast<int>(sorted.size()), std::move(kept)),
            std::move(sorted)};
}

} // namespace vkm
