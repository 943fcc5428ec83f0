#pragma once

#include "vkm/simplex.hpp"

#include <cstdint>
#include <map>

namespace vkm {

enum class Ring { Z2, Z };

const char* ring_name(Ring r);

/// Formal sum of simplices of a fixed dimension. Coefficients are kept
/// normalized: mod 2 over Z2, and zero terms are dropped.
class Chain {
public:
    Chain(Ring ring, int dim) : ring_(ring), dim_(dim) {}

    Ring ring() const { return ring_; }
    int dim() const { return dim_; }
    const std::map<Simplex, std::int64_t>& terms() const { return terms_; }
    std::int64_t coeff(const Simplex& s) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const Simplex& s, std::int64_t c);
    Chain& operator+=(const Chain& other);

private:
    Ring ring_;
    int dim_;
    std::map<Simplex, std::int64_t> terms_;
};

/// Alternating sum of the codimension-one faces.
Chain boundary_chain(const Simplex& s, Ring ring);

/// Linear extension of the boundary to chains.
Chain boundary(const Chain& c);

} // namespace vkm
