#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace vkm {

/// An abstract simplex: a nonempty, strictly increasing list of vertex ids.
/// Ascending vertex order is the positive orientation; every sign convention
/// in the library derives from this single choice.
class Simplex {
public:
    explicit Simplex(std::vector<int> vertices);
    Simplex(std::initializer_list<int> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<int>& vertices() const { return verts_; }
    int operator[](int i) const { return verts_[static_cast<size_t>(i)]; }

    bool contains(int v) const;
    bool contains(const Simplex& face) const;
    bool disjoint(const Simplex& other) const;

    /// Codimension-one faces, ordered by the index of the removed vertex.
    std::vector<Simplex> facets() const;

    Simplex with_vertex(int v) const;
    Simplex without_vertex(int v) const;

    auto operator<=>(const Simplex&) const = default;

    std::string str() const;

private:
    std::vector<int> verts_;
};

/// Incidence number [inner : outer] for a codimension-one face: +1 when the
/// removed vertex sits at an even position of outer, -1 when odd.
int incidence_sign(const Simplex& inner, const Simplex& outer);

} // namespace vkm
