#include "vkm/kuhnel.hpp"
#include "vkm/sat_solver.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace vkm;

TEST_CASE("constraint families have the predicted sizes") {
    IntersectionForm id1 = identity_form(1, Ring::Z2, 1);
    KuhnelEncoding a = encode_conditions(1, 5, id1, false);
    CHECK(a.disjoint_pair_constraints == 10);
    CHECK(a.subset_constraints == 6);
    CHECK(a.cells.size() == 15);

    KuhnelEncoding b = encode_conditions(1, 6, id1, false);
    CHECK(b.disjoint_pair_constraints == 70);
    CHECK(b.subset_constraints == 21);

    KuhnelEncoding c = encode_conditions(2, 8, identity_form(1, Ring::Z2, 2), false);
    CHECK(c.disjoint_pair_constraints == 315);
    CHECK(c.subset_constraints == 36);

    // the counts are combinatorial, not form dependent
    KuhnelEncoding d = encode_conditions(1, 5, symplectic_form(1, Ring::Z2, 1), false);
    CHECK(d.disjoint_pair_constraints == 10);
    CHECK(d.subset_constraints == 6);
}

TEST_CASE("encoding validates its inputs") {
    CHECK_THROWS_AS(encode_conditions(1, 5, symplectic_form(1, Ring::Z, 1), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(encode_conditions(0, 5, identity_form(1, Ring::Z2, 1), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(encode_conditions(1, 2, identity_form(1, Ring::Z2, 1), false),
                    std::invalid_argument);
}

TEST_CASE("branching hints cover exactly the boundary bits") {
    KuhnelEncoding enc = encode_conditions(1, 5, identity_form(1, Ring::Z2, 1), false);
    CHECK(enc.inst.decision_vars.size() == enc.h_var.size());
    CHECK(std::is_sorted(enc.inst.decision_vars.begin(), enc.inst.decision_vars.end()));
    CHECK(enc.h_var.size() == 20);  // one per 3-subset of six vertices, rank 1
}

TEST_CASE("decoded models pass the direct admissibility check") {
    IntersectionForm id1 = identity_form(1, Ring::Z2, 1);
    KuhnelEncoding enc = encode_conditions(1, 5, id1, true);
    SatResult sat = SatSolver(enc.inst).solve();
    REQUIRE(sat.status == SatStatus::Sat);
    Psi psi = decode_assignment(enc, sat.model);
    CHECK(psi.values.size() == 15);
    CHECK(psi_admissible(5, 1, id1, psi));
}

TEST_CASE("the zero assignment is admissible only below the constraint floor") {
    IntersectionForm id1 = identity_form(1, Ring::Z2, 1);
    auto zero_psi = [&](int n) {
        Psi psi;
        for (const Simplex& s : simplex_skeleton(n, 1).simplices(1))
            psi.values[s] = {0};
        return psi;
    };
    CHECK(psi_admissible(3, 1, id1, zero_psi(3)));       // no (2k+3)-subsets yet
    CHECK_FALSE(psi_admissible(4, 1, id1, zero_psi(4)));  // partition sums need 1
}

TEST_CASE("symmetry breaking preserves the answer on both sides") {
    IntersectionForm id1 = identity_form(1, Ring::Z2, 1);
    for (int n : {5, 6}) {
        KuhnelEncoding plain = encode_conditions(1, n, id1, false);
        KuhnelEncoding broken = encode_conditions(1, n, id1, true);
        SatStatus a = SatSolver(plain.inst).solve().status;
        SatStatus b = SatSolver(broken.inst).solve().status;
        CHECK(a == b);
        CHECK(a == (n == 5 ? SatStatus::Sat : SatStatus::Unsat));
    }
}

TEST_CASE("projective plane row: the identity form tops out at five") {
    // the closed form bound caps the scan at 5, so no unsat probe is needed
    MaxNResult res = max_admissible_n(1, identity_form(1, Ring::Z2, 1), 100);
    CHECK(res.exact);
    CHECK(res.lo == 5);
    CHECK(res.hi == 5);
    REQUIRE(res.probes.size() == 2);
    CHECK(res.probes[0].status == SolveStatus::Sat);  // n = 4
    CHECK(res.probes[1].status == SolveStatus::Sat);  // n = 5
    CHECK(res.probes[0].n == 4);
    CHECK(res.probes[1].n == 5);
}

TEST_CASE("torus row: the closed form bound itself settles the scan") {
    // alternating rank 2 caps the scan at 6, and 6 is admissible
    MaxNResult res = max_admissible_n(1, symplectic_form(1, Ring::Z2, 1), 100);
    CHECK(res.exact);
    CHECK(res.lo == 6);
    CHECK(res.hi == 6);
    for (const ProbeResult& p : res.probes)
        CHECK(p.status == SolveStatus::Sat);
}

TEST_CASE("trivial form admits nothing beyond the base skeleton") {
    MaxNResult res = max_admissible_n(1, trivial_form(Ring::Z2, 1), 100);
    CHECK(res.exact);
    CHECK(res.lo == 3);
    CHECK(res.hi == 3);
    CHECK(res.probes.empty());  // the bound equals the floor, nothing to probe
}

TEST_CASE("scan caps and budget exhaustion widen the interval honestly") {
    IntersectionForm id1 = identity_form(1, Ring::Z2, 1);
    MaxNResult capped = max_admissible_n(1, id1, 4);
    CHECK_FALSE(capped.exact);
    CHECK(capped.lo == 4);
    CHECK(capped.hi == 5);

    SolveBudget starved;
    starved.branches = 1;
    MaxNResult unknown = max_admissible_n(1, id1, 100, starved);
    CHECK_FALSE(unknown.exact);
    CHECK(unknown.lo == 3);
    CHECK(unknown.hi == 5);
    for (const ProbeResult& p : unknown.probes)
        CHECK(p.status == SolveStatus::Unknown);
}

TEST_CASE("probe statuses are monotone: sat below, unsat above") {
    for (const IntersectionForm& form :
         {identity_form(2, Ring::Z2, 1), symplectic_form(1, Ring::Z2, 1)}) {
        MaxNResult res = max_admissible_n(1, form, 100);
        bool seen_unsat = false;
        for (const ProbeResult& p : res.probes) {
            if (p.status == SolveStatus::Unsat) seen_unsat = true;
            else CHECK_FALSE(seen_unsat);  // nothing after the first unsat
        }
        CHECK(res.exact);
    }
}

TEST_CASE("closed form bounds and thresholds") {
    CHECK(closed_form_bound(1, 1, false) == 5);
    CHECK(closed_form_bound(2, 1, false) == 8);
    CHECK(closed_form_bound(1, 2, true) == 6);
    CHECK(closed_form_bound(1, 0, false) == 3);
    CHECK(closed_form_bound(2, 2, true) == 9);
    CHECK(closed_form_bound(2, 2, false) == 11);
    CHECK(radon_threshold(1, 1, false) == 7);
    CHECK(radon_threshold(1, 2, true) == 8);
    CHECK_THROWS_AS(closed_form_bound(0, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_bound(1, -1, false), std::invalid_argument);
}

TEST_CASE("triangulation inequality arithmetic") {
    CHECK(kuhnel_conjecture_rhs(1, 0) == 6);
    CHECK(kuhnel_conjecture_max_n(1, 0) == 6);
    CHECK(kuhnel_conjecture_rhs(1, 2) == 0);
    CHECK(kuhnel_conjecture_max_n(1, 2) == 3);
    CHECK(kuhnel_conjecture_rhs(1, 4) == -6);
    CHECK(kuhnel_conjecture_max_n(1, 4) == -1);
    CHECK(kuhnel_conjecture_rhs(2, 4) == 20);
    CHECK(kuhnel_conjecture_max_n(2, 4) == 9);
}

TEST_CASE("both sides of the vertex independence identity agree") {
    std::mt19937_64 rng(23);
    for (int k : {1, 2}) {
        auto J = simplex_skeleton(2 * k + 2, k);
        std::vector<IntersectionForm> forms{
            identity_form(1, Ring::Z2, k), identity_form(2, Ring::Z2, k),
            symplectic_form(1, Ring::Z2, k)};
        for (const IntersectionForm& form : forms) {
            for (int trial = 0; trial < 25; ++trial) {
                Psi psi = testing::random_psi(rng, J, k, form.rank());
                int expected = partition_identity(J, 0, psi, form).cycle_value;
                for (int v = 0; v < J.n_vertices(); ++v) {
                    PartitionIdentity id = partition_identity(J, v, psi, form);
                    CHECK(id.cycle_value == id.join_value);
                    CHECK(id.cycle_value == expected);
                }
            }
        }
    }
    CHECK_THROWS_AS(partition_identity(simplex_skeleton(3, 1), 0, Psi{},
                                       identity_form(1, Ring::Z2, 1)),
                    std::invalid_argument);
}
