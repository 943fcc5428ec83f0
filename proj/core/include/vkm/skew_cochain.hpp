#pragma once

#include "vkm/chain.hpp"
#include "vkm/complex.hpp"
#include "vkm/deleted_product.hpp"

#include <cstdint>
#include <map>
#include <set>

namespace vkm {

/// Cochain on unordered disjoint pair cells with the symmetry
/// value(tau, sigma) = (-1)^k value(sigma, tau). Only the canonical
/// orientation (first < second) is stored; the accessor applies the sign.
class SkewCochain {
public:
    SkewCochain(Ring ring, int k) : ring_(ring), k_(k) {}

    Ring ring() const { return ring_; }
    int k() const { return k_; }

    std::int64_t value(const CellPair& p) const;
    std::int64_t value(const Simplex& sigma, const Simplex& tau) const;
    void set(const CellPair& p, std::int64_t v);
    void add(const CellPair& p, std::int64_t v);

    const std::map<CellPair, std::int64_t>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    SkewCochain& operator+=(const SkewCochain& other);
    SkewCochain& operator-=(const SkewCochain& other);
    friend SkewCochain operator-(SkewCochain a, const SkewCochain& b) { return a -= b; }

    bool operator==(const SkewCochain&) const = default;

private:
    Ring ring_;
    int k_;
    std::map<CellPair, std::int64_t> entries_;  // canonical cells, no zeros
};

/// Mod-2 reduction of an integer cochain (identity on Z2 cochains).
SkewCochain reduce_ring(const SkewCochain& xi);

/// Formal Z2 sum of unordered disjoint pair cells of one dimension.
class PairCycle {
public:
    explicit PairCycle(int k) : k_(k) {}

    int k() const { return k_; }
    void toggle(const CellPair& p);
    const std::set<CellPair>& cells() const { return cells_; }

private:
    int k_;
    std::set<CellPair> cells_;
};

/// Z2 pairing of a Z2 cochain with a cycle.
int evaluate_on_cycle(const SkewCochain& xi, const PairCycle& z);

/// The sum of all unordered disjoint k-simplex pairs of J, where J must be
/// the full k-skeleton on 2k+3 vertices. On such a cycle every finger move
/// cochain evaluates to zero, so the pairing is an invariant of the class.
PairCycle complete_pair_cycle(const SimplicialComplex& J);

/// Same cycle for the full subcomplex of K spanned by the 2k+3 vertices in S,
/// expressed in K's own labels.
PairCycle complete_pair_cycle_within(const SimplicialComplex& K,
                                     const std::vector<int>& S, int k);

} // namespace vkm
