#include "vkm/chain.hpp"

#include <stdexcept>

namespace vkm {

const char* ring_name(Ring r) {
    return r == Ring::Z2 ? "Z2" : "Z";
}

std::int64_t Chain::coeff(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
}

void Chain::add(const Simplex& s, std::int64_t c) {
    if (s.dim() != dim_)
        throw std::invalid_argument("chain term of wrong dimension");
    auto [it, inserted] = terms_.try_emplace(s, 0);
    it->second += c;
    if (ring_ == Ring::Z2) it->second = ((it->second % 2) + 2) % 2;
    if (it->second == 0) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.ring_ != ring_ || other.dim_ != dim_)
        throw std::invalid_argument("chain mismatch");
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
}

Chain boundary_chain(const Simplex& s, Ring ring) {
    Chain out(ring, s.dim() - 1);
    const auto faces = s.facets();
    for (const Simplex& f : faces)
        out.add(f, incidence_sign(f, s));
    return out;
}

Chain boundary(const Chain& c) {
    Chain out(c.ring(), c.dim() - 1);
    for (const auto& [s, coeff] : c.terms()) {
        for (const Simplex& f : s.facets())
            out.add(f, coeff * incidence_sign(f, s));
    }
    return out;
}

} // namespace vkm
