#include "vkm/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkm {

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty())
        throw std::invalid_argument("simplex needs at least one vertex");
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw std::invalid_argument("simplex has a repeated vertex");
}

Simplex::Simplex(std::initializer_list<int> vertices)
    : Simplex(std::vector<int>(vertices)) {}

bool Simplex::contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains(const Simplex& face) const {
    return std::includes(verts_.begin(), verts_.end(),
                         face.verts_.begin(), face.verts_.end());
}

bool Simplex::disjoint(const Simplex& other) const {
    auto a = verts_.begin();
    auto b = other.verts_.begin();
    while (a != verts_.end() && b != other.verts_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (dim() == 0) return out;
    out.reserve(verts_.size());
    for (size_t i = 0; i < verts_.size(); ++i) {
        std::vector<int> v;
        v.reserve(verts_.size() - 1);
        for (size_t j = 0; j < verts_.size(); ++j)
            if (j != i) v.push_back(verts_[j]);
        out.emplace_back(std::move(v));
    }
    return out;
}

Simplex Simplex::with_vertex(int v) const {
    std::vector<int> verts = verts_;
    verts.push_back(v);
    return Simplex(std::move(verts));
}

Simplex Simplex::without_vertex(int v) const {
    std::vector<int> verts;
    verts.reserve(verts_.size());
    for (int w : verts_)
        if (w != v) verts.push_back(w);
    if (verts.size() == verts_.size())
        throw std::invalid_argument("vertex not present in simplex");
    return Simplex(std::move(verts));
}

std::string Simplex::str() const {
    std::string s = "{";
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(verts_[i]);
    }
    return s + "}";
}

int incidence_sign(const Simplex& inner, const Simplex& outer) {
    if (inner.dim() + 1 != outer.dim() || !outer.contains(inner))
        throw std::invalid_argument("incidence_sign: not a codimension-one face");
    int removed = -1;
    const auto& ov = outer.vertices();
    const auto& iv = inner.vertices();
    for (size_t i = 0, j = 0; i < ov.size(); ++i) {
        if (j < iv.size() && ov[i] == iv[j]) { ++j; continue; }
        removed = static_cast<int>(i);
    }
    return removed % 2 == 0 ? 1 : -1;
}

} // namespace vkm
