#include "vkm/forms.hpp"

#include <stdexcept>

namespace vkm {

IntersectionForm::IntersectionForm(Ring ring, int k,
                                   std::vector<std::vector<std::int64_t>> matrix,
                                   std::string label)
    : ring_(ring), k_(k), rank_(static_cast<int>(matrix.size())),
      m_(std::move(matrix)), label_(std::move(label)) {
    if (k_ < 1) throw std::invalid_argument("form needs k >= 1");
    for (auto& row : m_) {
        if (row.size() != m_.size())
            throw std::invalid_argument("form matrix must be square");
        if (ring_ == Ring::Z2)
            for (auto& e : row) e = ((e % 2) + 2) % 2;
    }
    const int sym = (ring_ == Ring::Z2 || k_ % 2 == 0) ? 1 : -1;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (m_[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                sym * m_[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw std::invalid_argument("form matrix has the wrong symmetry");
    if (label_.empty()) label_ = "custom:" + std::to_string(rank_);
}

std::int64_t IntersectionForm::entry(int i, int j) const {
    return m_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

bool IntersectionForm::alternating() const {
    for (int i = 0; i < rank_; ++i)
        if (entry(i, i) % 2 != 0) return false;
    return true;
}

std::int64_t IntersectionForm::pair(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b) const {
    if (a.size() != static_cast<size_t>(rank_) || b.size() != static_cast<size_t>(rank_))
        throw std::invalid_argument("form argument of wrong rank");
    std::int64_t acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            acc += a[static_cast<size_t>(i)] * entry(i, j) * b[static_cast<size_t>(j)];
    }
    if (ring_ == Ring::Z2) acc = ((acc % 2) + 2) % 2;
    return acc;
}

IntersectionForm trivial_form(Ring ring, int k) {
    return IntersectionForm(ring, k, {}, "trivial");
}

IntersectionForm identity_form(int b, Ring ring, int k) {
    if (b < 1) throw std::invalid_argument("identity form needs rank >= 1");
    if (ring == Ring::Z && k % 2 == 1)
        throw std::invalid_argument("identity form is not skew-symmetric over Z for odd k");
    std::vector<std::vector<std::int64_t>> m(static_cast<size_t>(b),
                                             std::vector<std::int64_t>(static_cast<size_t>(b)));
    for (int i = 0; i < b; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return IntersectionForm(ring, k, std::move(m), "identity:" + std::to_string(b));
}

IntersectionForm symplectic_form(int c, Ring ring, int k) {
    if (c < 1) throw std::invalid_argument("symplectic form needs c >= 1");
    const int b = 2 * c;
    std::vector<std::vector<std::int64_t>> m(static_cast<size_t>(b),
                                             std::vector<std::int64_t>(static_cast<size_t>(b)));
    const std::int64_t low = (k % 2 == 1 && ring == Ring::Z) ? -1 : 1;
    for (int i = 0; i < c; ++i) {
        m[static_cast<size_t>(i)][static_cast<size_t>(c + i)] = 1;
        m[static_cast<size_t>(c + i)][static_cast<size_t>(i)] = low;
    }
    return IntersectionForm(ring, k, std::move(m), "symplectic:" + std::to_string(c));
}

const std::vector<std::int64_t>& Psi::at(const Simplex& s) const {
    auto it = values.find(s);
    if (it == values.end())
        throw std::invalid_argument("psi undefined on " + s.str());
    return it->second;
}

SkewCochain form_cochain(const Psi& psi, const IntersectionForm& form,
                         const SimplicialComplex& K, int k) {
    SkewCochain out(form.ring(), k);
    for (const CellPair& cell : deleted_product_pairs(K, k)) {
        std::int64_t v = form.rank() == 0 ? 0 : form.pair(psi.at(cell.first), psi.at(cell.second));
        if (v != 0) out.set(cell, v);
    }
    return out;
}

std::vector<std::int64_t> boundary_image(const Psi& psi, const IntersectionForm& form,
                                         const Simplex& kappa) {
    std::vector<std::int64_t> acc(static_cast<size_t>(form.rank()), 0);
    for (const Simplex& f : kappa.facets()) {
        int sign = incidence_sign(f, kappa);
        const auto& v = psi.at(f);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += sign * v[i];
    }
    if (form.ring() == Ring::Z2)
        for (auto& e : acc) e = ((e % 2) + 2) % 2;
    return acc;
}

} // namespace vkm
