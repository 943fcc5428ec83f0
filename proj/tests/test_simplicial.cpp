#include "vkm/chain.hpp"
#include "vkm/complex.hpp"
#include "vkm/simplex.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace vkm;

TEST_CASE("simplex normalizes and validates vertices") {
    Simplex s({3, 0, 2});
    CHECK(s.vertices() == std::vector<int>{0, 2, 3});
    CHECK(s.dim() == 2);
    CHECK(s.str() == "{0,2,3}");
    CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("simplex containment and disjointness") {
    Simplex t({0, 1, 2});
    CHECK(t.contains(1));
    CHECK_FALSE(t.contains(3));
    CHECK(t.contains(Simplex({0, 2})));
    CHECK_FALSE(t.contains(Simplex({0, 3})));
    CHECK(t.disjoint(Simplex({3, 4})));
    CHECK_FALSE(t.disjoint(Simplex({2, 3})));
}

TEST_CASE("facets drop one vertex each, in removal order") {
    Simplex t({0, 1, 2});
    auto fs = t.facets();
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == Simplex({1, 2}));
    CHECK(fs[1] == Simplex({0, 2}));
    CHECK(fs[2] == Simplex({0, 1}));
    CHECK(Simplex({5}).facets().empty());
}

TEST_CASE("vertex insertion and removal round trip") {
    Simplex e({1, 4});
    CHECK(e.with_vertex(2) == Simplex({1, 2, 4}));
    CHECK(e.with_vertex(2).without_vertex(2) == e);
    CHECK_THROWS_AS(e.without_vertex(3), std::invalid_argument);
    CHECK_THROWS_AS(e.with_vertex(4), std::invalid_argument);
}

TEST_CASE("incidence signs alternate with the removed position") {
    Simplex t({0, 1, 2});
    CHECK(incidence_sign(Simplex({1, 2}), t) == 1);
    CHECK(incidence_sign(Simplex({0, 2}), t) == -1);
    CHECK(incidence_sign(Simplex({0, 1}), t) == 1);
    CHECK_THROWS_AS(incidence_sign(Simplex({0}), t), std::invalid_argument);
    CHECK_THROWS_AS(incidence_sign(Simplex({0, 3}), t), std::invalid_argument);
}

TEST_CASE("boundary of a boundary vanishes") {
    for (Ring ring : {Ring::Z, Ring::Z2}) {
        for (const Simplex& s : {Simplex({0, 1, 2}), Simplex({1, 3, 4, 6}),
                                 Simplex({0, 2, 3, 5, 7})}) {
            Chain b = boundary_chain(s, ring);
            CHECK_FALSE(b.is_zero());
            CHECK(boundary(b).is_zero());
        }
    }
}

TEST_CASE("complex closes downward") {
    auto K = build_complex(4, {{0, 1, 2}, {2, 3}});
    CHECK(K.dim() == 2);
    CHECK(K.simplices(2).size() == 1);
    CHECK(K.simplices(1).size() == 4);  // three triangle edges plus {2,3}
    CHECK(K.simplices(0).size() == 4);
    CHECK(K.contains(Simplex({0, 2})));
    CHECK_FALSE(K.contains(Simplex({1, 3})));
    CHECK(K.size() == 9);
}

TEST_CASE("complex rejects out of range vertices") {
    CHECK_THROWS_AS(build_complex(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_complex(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("skeletons of the n-simplex have binomial sizes") {
    auto K5 = simplex_skeleton(4, 1);
    CHECK(K5.n_vertices() == 5);
    CHECK(K5.dim() == 1);
    CHECK(K5.simplices(1).size() == 10);

    auto D62 = simplex_skeleton(6, 2);
    CHECK(D62.n_vertices() == 7);
    CHECK(D62.simplices(2).size() == 35);
    CHECK(D62.simplices(1).size() == 21);

    CHECK_THROWS_AS(simplex_skeleton(2, 3), std::invalid_argument);
}

TEST_CASE("simplex lists are lexicographically sorted") {
    auto K = simplex_skeleton(4, 2);
    const auto& tris = K.simplices(2);
    CHECK(std::is_sorted(tris.begin(), tris.end()));
    CHECK(tris.front() == Simplex({0, 1, 2}));
    CHECK(tris.back() == Simplex({2, 3, 4}));
}

TEST_CASE("induced subcomplex relabels along the sorted subset") {
    auto K = build_complex(5, {{0, 1, 2}, {1, 2, 4}, {3, 4}});
    auto sub = induced_subcomplex(K, {4, 1, 2});
    CHECK(sub.vertex_map == std::vector<int>{1, 2, 4});
    CHECK(sub.complex.n_vertices() == 3);
    // {1,2,4} relabels to {0,1,2}
    CHECK(sub.complex.contains(Simplex({0, 1, 2})));
    CHECK(sub.complex.simplices(1).size() == 3);
    CHECK_THROWS_AS(induced_subcomplex(K, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subcomplex(K, {0, 5}), std::invalid_argument);
}

TEST_CASE("induced subcomplex keeps only fully inside simplices") {
    auto K = build_complex(4, {{0, 1, 2}, {0, 3}});
    auto sub = induced_subcomplex(K, {0, 1, 3});
    CHECK(sub.complex.contains(Simplex({0, 1})));  // relabeled {0,1}
    CHECK(sub.complex.contains(Simplex({0, 2})));  // relabeled {0,3}
    CHECK(sub.complex.simplices(2).empty());
}
