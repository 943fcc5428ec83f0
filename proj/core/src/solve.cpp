#include "vkm/solve.hpp"

#include "vkm/encode.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace vkm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

size_t cell_index(const std::vector<Simplex>& cells, const Simplex& s) {
    auto it = std::lower_bound(cells.begin(), cells.end(), s);
    return static_cast<size_t>(it - cells.begin());
}

void assert_witness(const QuadraticSystem& sys, const SolveWitness& w, const char* who) {
    if (!check_witness(sys, w.x, w.y).ok)
        throw std::logic_error(std::string(who) + " produced an invalid witness");
}

SolveReport enumerate_z2(const QuadraticSystem& sys, const SolveBudget& budget) {
    const auto t0 = Clock::now();
    SolveReport rep;
    rep.stats.strategy = "enumeration";

    const int rank = sys.form.rank();
    const size_t S = sys.cells.size();
    const size_t B = sys.y_count();
    const size_t m = sys.equations();
    if (B > 62) throw std::invalid_argument("class space too large to enumerate");

    const Gf2Eliminator elim(sys.basis.matrix_z2());
    const Gf2Matrix& coker = elim.cokernel();
    const size_t m0 = coker.rows();

    // residual functionals: s = coker * (theta xor Q(y)); y solves the system
    // iff s vanishes, because the cokernel rows cut out the span exactly
    Gf2Vector s(m0);
    std::vector<Gf2Vector> ucol(m, Gf2Vector(m0));
    for (size_t r = 0; r < m0; ++r)
        for (size_t p = 0; p < m; ++p)
            if (coker.get(r, p)) ucol[p].set(r, true);
    Gf2Vector theta_bits(m);
    for (size_t p = 0; p < m; ++p)
        if (sys.rhs[p] & 1) theta_bits.set(p, true);
    for (size_t p = 0; p < m; ++p)
        if (theta_bits.get(p)) s ^= ucol[p];

    // per cell: the pairs it participates in, with the partner cell
    std::vector<std::vector<std::pair<size_t, size_t>>> adj(S);  // (partner, pair)
    const PairIndex& pairs = sys.basis.pairs();
    for (size_t p = 0; p < m; ++p) {
        size_t a = cell_index(sys.cells, pairs.pair(p).first);
        size_t b = cell_index(sys.cells, pairs.pair(p).second);
        adj[a].push_back({b, p});
        adj[b].push_back({a, p});
    }

    // form columns as bit masks over the rank
    std::vector<std::uint64_t> acol(static_cast<size_t>(rank), 0);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i)
            if (sys.form.entry(i, j) & 1) acol[static_cast<size_t>(j)] |= std::uint64_t(1) << i;

    std::vector<char> ybit(B, 0);
    std::vector<std::uint64_t> ay(S, 0);  // A * y_c per cell

    auto flip = [&](size_t yidx) {
        size_t c = rank ? yidx / static_cast<size_t>(rank) : 0;
        int comp = rank ? static_cast<int>(yidx % static_cast<size_t>(rank)) : 0;
        for (auto [partner, p] : adj[c])
            if ((ay[partner] >> comp) & 1) s ^= ucol[p];
        ay[c] ^= acol[static_cast<size_t>(comp)];
        ybit[yidx] ^= 1;
    };

    auto emit_sat = [&](std::uint64_t counter) {
        // exact residual and deformation coefficients for this y
        Gf2Vector residual = theta_bits;
        for (size_t p = 0; p < m; ++p) {
            size_t a = cell_index(sys.cells, pairs.pair(p).first);
            size_t b = cell_index(sys.cells, pairs.pair(p).second);
            std::uint64_t mask = 0;
            for (int i = 0; i < rank; ++i)
                if (ybit[a * static_cast<size_t>(rank) + static_cast<size_t>(i)])
                    mask |= std::uint64_t(1) << i;
            int q = static_cast<int>(std::popcount(mask & ay[b]) & 1u);
            if (q) residual.flip(p);
        }
        auto x = elim.solve(residual);
        if (!x) throw std::logic_error("vanishing residual outside the span");
        SolveWitness w;
        w.x.resize(sys.x_count());
        for (size_t g = 0; g < w.x.size(); ++g) w.x[g] = x->get(g) ? 1 : 0;
        w.y.assign(S, std::vector<Int>(static_cast<size_t>(rank)));
        for (size_t c = 0; c < S; ++c)
            for (int i = 0; i < rank; ++i)
                w.y[c][static_cast<size_t>(i)] =
                    ybit[c * static_cast<size_t>(rank) + static_cast<size_t>(i)] ? 1 : 0;
        assert_witness(sys, w, "enumeration");
        rep.status = SolveStatus::Sat;
        rep.witness = std::move(w);
        rep.stats.enumerated = counter + 1;
    };

    const std::uint64_t total = std::uint64_t(1) << B;
    for (std::uint64_t counter = 0;; ++counter) {
        if (!s.any()) {
            emit_sat(counter);
            rep.stats.elapsed_s = seconds_since(t0);
            return rep;
        }
        if (counter + 1 == total) break;
        // advance the lexicographic counter: bit 0 of the integer counter is
        // the least significant and maps to the last y component, so the
        // first witness found is the lexicographically least
        std::uint64_t next = counter + 1;
        std::uint64_t changed = counter ^ next;
        while (changed) {
            int bit = std::countr_zero(changed);
            changed &= changed - 1;
            flip(B - 1 - static_cast<size_t>(bit));
        }
        if (budget.branches && counter + 1 >= budget.branches) {
            rep.status = SolveStatus::Unknown;
            rep.stats.enumerated = counter + 1;
            rep.stats.exhausted = "branches";
            rep.stats.elapsed_s = seconds_since(t0);
            return rep;
        }
        if ((counter & 16383) == 0 && budget.time_s > 0 && seconds_since(t0) > budget.time_s) {
            rep.status = SolveStatus::Unknown;
            rep.stats.enumerated = counter + 1;
            rep.stats.exhausted = "time";
            rep.stats.elapsed_s = seconds_since(t0);
            return rep;
        }
    }
    rep.status = SolveStatus::Unsat;
    rep.stats.enumerated = total;
    rep.stats.elapsed_s = seconds_since(t0);
    return rep;
}

SolveReport sat_solve_z2(const QuadraticSystem& sys, const SolveBudget& budget) {
    const auto t0 = Clock::now();
    SolveReport rep;
    rep.stats.strategy = "sat";

    SystemEncoding enc = encode_system(sys, budget.break_symmetry);
    SatSolver solver(enc.inst);
    SatOptions opts;
    opts.time_budget_s = budget.time_s;
    opts.decision_budget = budget.branches;
    opts.use_vsids = budget.use_vsids;
    SatResult res = solver.solve(opts);

    rep.stats.decisions = res.stats.decisions;
    rep.stats.conflicts = res.stats.conflicts;
    rep.stats.propagations = res.stats.propagations;
    rep.stats.elapsed_s = seconds_since(t0);

    const int rank = sys.form.rank();
    switch (res.status) {
        case SatStatus::Sat: {
            SolveWitness w;
            w.x.resize(sys.x_count());
            for (size_t g = 0; g < w.x.size(); ++g)
                w.x[g] = res.model[static_cast<size_t>(enc.x_var(g))] ? 1 : 0;
            w.y.assign(sys.cells.size(), std::vector<Int>(static_cast<size_t>(rank)));
            for (size_t c = 0; c < sys.cells.size(); ++c)
                for (int i = 0; i < rank; ++i)
                    w.y[c][static_cast<size_t>(i)] =
                        res.model[static_cast<size_t>(enc.y_var(c, i, rank))] ? 1 : 0;
            assert_witness(sys, w, "sat solver");
            rep.status = SolveStatus::Sat;
            rep.witness = std::move(w);
            break;
        }
        case SatStatus::Unsat:
            rep.status = SolveStatus::Unsat;
            break;
        case SatStatus::Unknown:
            rep.status = SolveStatus::Unknown;
            rep.stats.exhausted = res.stats.exhausted == "time" ? "time" : "branches";
            break;
    }
    return rep;
}

} // namespace

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        default: return "unknown";
    }
}

SolveReport solve_z2(const QuadraticSystem& sys, const SolveBudget& budget,
                     SolveStrategy strategy) {
    if (sys.ring != Ring::Z2)
        throw std::invalid_argument("solve_z2 needs a Z2 system");
    if (strategy == SolveStrategy::Auto)
        strategy = sys.y_count() <= 24 ? SolveStrategy::Enumerate : SolveStrategy::Sat;
    return strategy == SolveStrategy::Enumerate ? enumerate_z2(sys, budget)
                                                : sat_solve_z2(sys, budget);
}

SolveReport brute_force_psi_search(const SimplicialComplex& K, int k,
                                   const IntersectionForm& form,
                                   const SkewCochain& theta) {
    if (form.ring() != Ring::Z2 || theta.ring() != Ring::Z2)
        throw std::invalid_argument("oracle search is defined over Z2");
    const auto t0 = Clock::now();
    SolveReport rep;
    rep.stats.strategy = "oracle";

    const std::vector<Simplex> cells = K.simplices(k);
    const int rank = form.rank();
    const size_t B = cells.size() * static_cast<size_t>(rank);
    if (B > 24) throw std::invalid_argument("oracle search space too large");

    SpanTester tester(K, k, Ring::Z2);
    const std::uint64_t total = std::uint64_t(1) << B;
    for (std::uint64_t counter = 0; counter < total; ++counter) {
        Psi psi;
        for (size_t c = 0; c < cells.size(); ++c) {
            std::vector<std::int64_t> v(static_cast<size_t>(rank));
            for (int i = 0; i < rank; ++i) {
                size_t yidx = c * static_cast<size_t>(rank) + static_cast<size_t>(i);
                v[static_cast<size_t>(i)] = (counter >> (B - 1 - yidx)) & 1;
            }
            psi.values[cells[c]] = std::move(v);
        }
        SkewCochain residual = theta - form_cochain(psi, form, K, k);
        auto witness = tester.test(residual);
        rep.stats.enumerated = counter + 1;
        if (witness) {
            SolveWitness w;
            w.x = std::move(witness->coefficients);
            for (size_t c = 0; c < cells.size(); ++c) {
                std::vector<Int> v;
                for (std::int64_t e : psi.values[cells[c]]) v.emplace_back(e);
                w.y.push_back(std::move(v));
            }
            rep.status = SolveStatus::Sat;
            rep.witness = std::move(w);
            rep.stats.elapsed_s = seconds_since(t0);
            return rep;
        }
    }
    rep.status = SolveStatus::Unsat;
    rep.stats.elapsed_s = seconds_since(t0);
    return rep;
}

SolveReport solve_z_box(const QuadraticSystem& sys, int box_bound,
                        const SolveBudget& budget) {
    if (sys.ring != Ring::Z)
        throw std::invalid_argument("box search needs a Z system");
    if (box_bound < 0) throw std::invalid_argument("negative box bound");
    const auto t0 = Clock::now();
    SolveReport rep;
    rep.stats.strategy = "box";

    const int rank = sys.form.rank();
    const size_t S = sys.cells.size();
    const size_t B = sys.y_count();
    const size_t m = sys.equations();
    const PairIndex& pairs = sys.basis.pairs();
    IntLattice lattice(sys.basis.matrix_z());

    std::vector<Int> residual(m);
    auto try_point = [&](const std::vector<std::vector<Int>>& y) -> bool {
        for (size_t p = 0; p < m; ++p) {
            size_t a = cell_index(sys.cells, pairs.pair(p).first);
            size_t b = cell_index(sys.cells, pairs.pair(p).second);
            Int q = 0;
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) {
                    std::int64_t e = sys.form.entry(i, j);
                    if (e) q += y[a][static_cast<size_t>(i)] * e * y[b][static_cast<size_t>(j)];
                }
            residual[p] = Int(sys.rhs[p]) - q;
        }
        auto x = lattice.solve(residual);
        if (!x) return false;
        SolveWitness w{std::move(*x), y};
        assert_witness(sys, w, "box search");
        rep.status = SolveStatus::Sat;
        rep.witness = std::move(w);
        return true;
    };

    std::vector<std::vector<Int>> y(S, std::vector<Int>(static_cast<size_t>(rank), 0));
    if (B == 0) {
        rep.stats.enumerated = 1;
        if (!try_point(y)) rep.status = SolveStatus::Unsat;  // linear case is exact
        rep.stats.elapsed_s = seconds_since(t0);
        return rep;
    }

    // odometer over [-bound, bound]^B in lexicographic order
    std::vector<int> digits(B, -box_bound);
    std::uint64_t counter = 0;
    while (true) {
        for (size_t idx = 0; idx < B; ++idx)
            y[idx / static_cast<size_t>(rank)][idx % static_cast<size_t>(rank)] = digits[idx];
        ++counter;
        if (try_point(y)) {
            rep.stats.enumerated = counter;
            rep.stats.elapsed_s = seconds_since(t0);
            return rep;
        }
        if (budget.branches && counter >= budget.branches) {
            rep.status = SolveStatus::Unknown;
            rep.stats.exhausted = "branches";
            break;
        }
        if ((counter & 255) == 0 && budget.time_s > 0 && seconds_since(t0) > budget.time_s) {
            rep.status = SolveStatus::Unknown;
            rep.stats.exhausted = "time";
            break;
        }
        size_t pos = B;
        while (pos > 0 && digits[pos - 1] == box_bound) --pos;
        if (pos == 0) {
            // box exhausted; a larger box might still contain a solution
            rep.status = SolveStatus::Unknown;
            rep.stats.exhausted = "box";
            break;
        }
        ++digits[pos - 1];
        for (size_t i = pos; i < B; ++i) digits[i] = -box_bound;
    }
    rep.stats.enumerated = counter;
    rep.stats.elapsed_s = seconds_since(t0);
    return rep;
}

} // namespace vkm
