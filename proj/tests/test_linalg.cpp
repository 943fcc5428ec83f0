#include "vkm/gf2.hpp"
#include "vkm/int_lattice.hpp"
#include "vkm/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace vkm;

namespace {

Gf2Matrix random_gf2(std::mt19937_64& rng, size_t rows, size_t cols) {
    Gf2Matrix A(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            A.set(r, c, coin(rng));
    return A;
}

} // namespace

TEST_CASE("bit vector basics") {
    Gf2Vector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 3);
    v.flip(64);
    CHECK_FALSE(v.get(64));
    CHECK(v.any());

    Gf2Vector w(130);
    w.set(0, true);
    w.set(129, true);
    CHECK(v == w);
    CHECK(v.dot(w) == false);  // two shared bits, even parity
    w.set(5, true);
    CHECK(v.dot(w) == false);
    v.set(5, true);
    CHECK(v.dot(w) == true);
}

TEST_CASE("matrix vector product and transpose") {
    Gf2Matrix A(2, 3);
    A.set(0, 0, true);
    A.set(0, 2, true);
    A.set(1, 1, true);
    Gf2Vector x(3);
    x.set(0, true);
    x.set(2, true);
    Gf2Vector y = A.multiply(x);
    CHECK(y.get(0) == false);  // 1 + 1
    CHECK(y.get(1) == false);

    Gf2Matrix T = A.transposed();
    REQUIRE(T.rows() == 3);
    REQUIRE(T.cols() == 2);
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 3; ++c)
            CHECK(A.get(r, c) == T.get(c, r));
}

TEST_CASE("elimination solves consistent systems and rejects the rest") {
    // rows: x0+x1, x1+x2, x0+x2 (rank 2, third row dependent)
    Gf2Matrix A(3, 3);
    A.set(0, 0, true); A.set(0, 1, true);
    A.set(1, 1, true); A.set(1, 2, true);
    A.set(2, 0, true); A.set(2, 2, true);
    Gf2Eliminator elim(A);
    CHECK(elim.rank() == 2);

    Gf2Vector b(3);
    b.set(0, true);
    b.set(2, true);  // consistent: dependent row must carry the xor of the others
    REQUIRE(elim.in_span(b));
    auto x = elim.solve(b);
    REQUIRE(x);
    CHECK(A.multiply(*x) == b);

    b.set(2, false);
    CHECK_FALSE(elim.in_span(b));
    CHECK_FALSE(elim.solve(b).has_value());
}

TEST_CASE("cokernel rows cut out exactly the column span") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        size_t rows = 1 + static_cast<size_t>(rng() % 12);
        size_t cols = 1 + static_cast<size_t>(rng() % 12);
        Gf2Matrix A = random_gf2(rng, rows, cols);
        Gf2Eliminator elim(A);
        const Gf2Matrix& coker = elim.cokernel();
        CHECK(coker.rows() == rows - elim.rank());

        // every column of A is annihilated
        for (size_t c = 0; c < cols; ++c) {
            Gf2Vector col(rows);
            for (size_t r = 0; r < rows; ++r) col.set(r, A.get(r, c));
            for (size_t u = 0; u < coker.rows(); ++u)
                CHECK(coker.row(u).dot(col) == false);
        }

        // membership agrees with the orthogonality test on random vectors
        for (int probe = 0; probe < 5; ++probe) {
            Gf2Vector b(rows);
            for (size_t r = 0; r < rows; ++r) b.set(r, rng() & 1);
            bool ortho = true;
            for (size_t u = 0; u < coker.rows(); ++u)
                if (coker.row(u).dot(b)) { ortho = false; break; }
            CHECK(elim.in_span(b) == ortho);
        }
    }
}

TEST_CASE("kernel basis spans the right kernel") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        size_t rows = 1 + static_cast<size_t>(rng() % 10);
        size_t cols = 1 + static_cast<size_t>(rng() % 10);
        Gf2Matrix A = random_gf2(rng, rows, cols);
        auto basis = gf2_kernel_basis(A);
        CHECK(basis.size() == cols - Gf2Eliminator(A).rank());
        Gf2Vector zero(rows);
        for (const auto& v : basis)
            CHECK(A.multiply(v) == zero);
    }
}

TEST_CASE("one shot solve fixes free variables to zero") {
    Gf2Matrix A(1, 3);
    A.set(0, 1, true);
    Gf2Vector b(1);
    b.set(0, true);
    auto x = gf2_solve(A, b);
    REQUIRE(x);
    CHECK(x->get(0) == false);
    CHECK(x->get(1) == true);
    CHECK(x->get(2) == false);
}

TEST_CASE("integer matrix building blocks") {
    IntMatrix I = IntMatrix::identity(3);
    std::vector<Int> v{Int(2), Int(-5), Int(7)};
    CHECK(I.multiply(v) == v);

    IntMatrix A(2, 2);
    A.at(0, 0) = 1; A.at(0, 1) = 2;
    A.at(1, 0) = 3; A.at(1, 1) = 4;
    A.swap_cols(0, 1);
    CHECK(A.at(0, 0) == 2);
    A.negate_col(1);
    CHECK(A.at(1, 1) == -3);
    A.submul_col(0, 1, Int(2));
    CHECK(A.at(0, 0) == 4);   // 2 - 2 * (-1)
    CHECK(A.at(1, 0) == 10);  // 4 - 2 * (-3)
}

TEST_CASE("lattice membership with witness") {
    // columns (2,0) and (0,2): the even sublattice of Z^2
    IntMatrix G(2, 2);
    G.at(0, 0) = 2;
    G.at(1, 1) = 2;
    IntLattice L(G);

    auto x = L.solve({Int(4), Int(-6)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == -3);
    CHECK_FALSE(L.solve({Int(1), Int(0)}).has_value());

    // gcd reachability: 3x + 5y = 1 has integer solutions
    IntMatrix R(1, 2);
    R.at(0, 0) = 3;
    R.at(0, 1) = 5;
    auto w = int_lattice_member(R, {Int(1)});
    REQUIRE(w);
    CHECK(3 * (*w)[0] + 5 * (*w)[1] == 1);
}

TEST_CASE("lattice membership distinguishes span from rational span") {
    // (1,1) is in the rational span of (2,2) but not the integer one
    IntMatrix G(2, 1);
    G.at(0, 0) = 2;
    G.at(1, 0) = 2;
    IntLattice L(G);
    CHECK_FALSE(L.solve({Int(1), Int(1)}).has_value());
    auto x = L.solve({Int(-4), Int(-4)});
    REQUIRE(x);
    CHECK((*x)[0] == -2);
}

TEST_CASE("empty lattice contains only zero") {
    IntMatrix G(2, 0);
    IntLattice L(G);
    CHECK(L.solve({Int(0), Int(0)}).has_value());
    CHECK_FALSE(L.solve({Int(1), Int(0)}).has_value());
}

TEST_CASE("rational elimination statuses") {
    using R = Rational;
    auto unique = rational_solve_full({{R(2), R(0)}, {R(0), R(4)}}, {R(1), R(2)});
    REQUIRE(unique.status == LinSolveStatus::Unique);
    CHECK(unique.x[0] == R(1) / 2);
    CHECK(unique.x[1] == R(1) / 2);

    auto inconsistent = rational_solve_full({{R(1), R(1)}, {R(2), R(2)}}, {R(1), R(3)});
    CHECK(inconsistent.status == LinSolveStatus::Inconsistent);

    auto under = rational_solve_full({{R(1), R(1)}}, {R(1)});
    CHECK(under.status == LinSolveStatus::Underdetermined);

    CHECK_FALSE(rational_linear_solve({{R(1), R(2)}, {R(2), R(4)}}, {R(0), R(0)}).has_value());
}

TEST_CASE("determinant sign") {
    using R = Rational;
    CHECK(rational_det_sign({{R(1), R(0)}, {R(0), R(1)}}) == 1);
    CHECK(rational_det_sign({{R(0), R(1)}, {R(1), R(0)}}) == -1);
    CHECK(rational_det_sign({{R(1), R(2)}, {R(2), R(4)}}) == 0);
}
