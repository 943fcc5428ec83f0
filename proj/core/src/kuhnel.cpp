#include "vkm/kuhnel.hpp"

#include "vkm/encode.hpp"
#include "vkm/sat_solver.hpp"
#include "vkm/skew_cochain.hpp"
#include "vkm/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkm {

namespace {

// all r-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> pick(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(pick);
        int i = r - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long acc = 1;
    for (int i = 0; i < r; ++i)
        acc = acc * (n - i) / (i + 1);
    return acc;
}

// Unordered partitions of rest (size 2k+2) into two (k+1)-sets, enumerated
// once each: the side holding rest[0] is completed from the remainder.
template <typename Fn>
void for_each_halving(const std::vector<int>& rest, int k, Fn&& fn) {
    const int m = static_cast<int>(rest.size()) - 1;  // 2k+1
    for (const auto& side : subsets(m, k)) {
        std::vector<int> sv{rest[0]}, tv;
        std::vector<char> used(rest.size(), 0);
        for (int i : side) used[static_cast<size_t>(i) + 1] = 1;
        for (size_t i = 1; i < rest.size(); ++i)
            (used[i] ? sv : tv).push_back(rest[i]);
        fn(sv, tv);
    }
}

int get_h(KuhnelEncoding& enc, const Simplex& kappa, int comp) {
    auto it = enc.h_var.find({kappa, comp});
    if (it != enc.h_var.end()) return it->second;
    int var = enc.inst.new_var();
    enc.h_var.emplace(std::pair{kappa, comp}, var);
    enc.notes.push_back({var, "boundary_bit",
                         kappa.str() + "[" + std::to_string(comp) + "]"});
    // parity definition: h equals the xor of the class bits of the k-faces
    XorClause def;
    def.vars.push_back(var);
    def.rhs = false;
    for (const Simplex& f : kappa.facets()) {
        auto pos = std::lower_bound(enc.cells.begin(), enc.cells.end(), f);
        def.vars.push_back(enc.y_var(static_cast<size_t>(pos - enc.cells.begin()), comp));
    }
    enc.inst.xors.push_back(std::move(def));
    return var;
}

// xor of products h_a^i h_b^j over the odd entries of the form
void add_pairing_terms(KuhnelEncoding& enc, const IntersectionForm& form,
                       std::map<std::pair<int, int>, int>& pool,
                       std::vector<std::pair<std::pair<int, int>, int>>& order,
                       const Simplex& a, const Simplex& b, std::vector<int>& vars) {
    for (int i = 0; i < form.rank(); ++i)
        for (int j = 0; j < form.rank(); ++j) {
            if ((form.entry(i, j) & 1) == 0) continue;
            int ha = get_h(enc, a, i);
            int hb = get_h(enc, b, j);
            vars.push_back(product_var(enc.inst, pool, order, ha, hb));
        }
}

void push_xor(SatInstance& inst, std::vector<int> vars, bool rhs) {
    std::sort(vars.begin(), vars.end());
    XorClause xc;
    xc.rhs = rhs;
    for (size_t i = 0; i < vars.size();) {
        size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        if ((j - i) % 2) xc.vars.push_back(vars[i]);
        i = j;
    }
    inst.xors.push_back(std::move(xc));
}

} // namespace

int KuhnelEncoding::y_var(size_t cell_idx, int component) const {
    return static_cast<int>(cell_idx * static_cast<size_t>(rank) +
                            static_cast<size_t>(component)) + 1;
}

KuhnelEncoding encode_conditions(int k, int n, const IntersectionForm& form,
                                 bool break_symmetry) {
    if (form.ring() != Ring::Z2)
        throw std::invalid_argument("admissibility encoding is defined over Z2");
    if (k < 1 || n < 2 * k + 1)
        throw std::invalid_argument("admissibility encoding needs k >= 1, n >= 2k+1");

    KuhnelEncoding enc;
    enc.n = n;
    enc.k = k;
    enc.rank = form.rank();
    enc.cells = simplex_skeleton(n, k).simplices(k);
    enc.inst.n_vars = static_cast<int>(enc.cells.size()) * form.rank();
    for (size_t c = 0; c < enc.cells.size(); ++c)
        for (int i = 0; i < form.rank(); ++i)
            enc.notes.push_back({enc.y_var(c, i), "class_bit",
                                 enc.cells[c].str() + "[" + std::to_string(i) + "]"});

    std::map<std::pair<int, int>, int> pool;
    std::vector<std::pair<std::pair<int, int>, int>> order;

    // disjoint (k+1)-simplices pair to zero
    const auto tops = subsets(n + 1, k + 2);
    for (size_t a = 0; a < tops.size(); ++a)
        for (size_t b = a + 1; b < tops.size(); ++b) {
            Simplex ka(tops[a]), kb(tops[b]);
            if (!ka.disjoint(kb)) continue;
            std::vector<int> vars;
            add_pairing_terms(enc, form, pool, order, ka, kb, vars);
            push_xor(enc.inst, std::move(vars), false);
            ++enc.disjoint_pair_constraints;
        }

    // for each (2k+3)-subset J, the partition sum at min(J) is one
    for (const auto& J : subsets(n + 1, 2 * k + 3)) {
        const int v = J[0];
        std::vector<int> rest(J.begin() + 1, J.end());
        std::vector<int> vars;
        for_each_halving(rest, k, [&](const std::vector<int>& sv, const std::vector<int>& tv) {
            add_pairing_terms(enc, form, pool, order,
                              Simplex(sv).with_vertex(v), Simplex(tv).with_vertex(v), vars);
        });
        push_xor(enc.inst, std::move(vars), true);
        ++enc.subset_constraints;
    }

    if (break_symmetry) {
        // vertex relabelings permute admissible assignments, so the orbit
        // representative with the least boundary vector can be forced; the
        // whole vector must exist first, even bits no condition touches
        for (const auto& sv : subsets(n + 1, k + 2))
            for (int i = 0; i < form.rank(); ++i)
                get_h(enc, Simplex(sv), i);
        std::vector<int> v, pv;
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                v.clear();
                pv.clear();
                for (const auto& [key, var] : enc.h_var) {
                    v.push_back(var);
                    pv.push_back(enc.h_var.at(
                        {transpose_simplex(key.first, i, j), key.second}));
                }
                add_lex_leader(enc.inst, enc.notes, v, pv);
            }
    }

    // class bits only ever occur in parity rows, so branching on the
    // boundary bits (products follow by propagation) covers the search
    for (const auto& [key, var] : enc.h_var)
        enc.inst.decision_vars.push_back(var);
    std::sort(enc.inst.decision_vars.begin(), enc.inst.decision_vars.end());
    return enc;
}

Psi decode_assignment(const KuhnelEncoding& enc, const std::vector<bool>& model) {
    Psi psi;
    for (size_t c = 0; c < enc.cells.size(); ++c) {
        std::vector<std::int64_t> v(static_cast<size_t>(enc.rank));
        for (int i = 0; i < enc.rank; ++i)
            v[static_cast<size_t>(i)] =
                model[static_cast<size_t>(enc.y_var(c, i))] ? 1 : 0;
        psi.values[enc.cells[c]] = std::move(v);
    }
    return psi;
}

bool psi_admissible(int n, int k, const IntersectionForm& form, const Psi& psi) {
    const auto tops = subsets(n + 1, k + 2);
    for (size_t a = 0; a < tops.size(); ++a)
        for (size_t b = a + 1; b < tops.size(); ++b) {
            Simplex ka(tops[a]), kb(tops[b]);
            if (!ka.disjoint(kb)) continue;
            if (form.pair(boundary_image(psi, form, ka),
                          boundary_image(psi, form, kb)) % 2 != 0)
                return false;
        }
    SimplicialComplex skel = simplex_skeleton(n, k);
    for (const auto& J : subsets(n + 1, 2 * k + 3)) {
        auto sub = induced_subcomplex(skel, J);
        Psi local;
        for (const Simplex& s : sub.complex.simplices(k)) {
            std::vector<int> orig;
            for (int w : s.vertices())
                orig.push_back(sub.vertex_map[static_cast<size_t>(w)]);
            local.values[s] = psi.at(Simplex(orig));
        }
        for (int v = 0; v < 2 * k + 3; ++v)
            if (partition_identity(sub.complex, v, local, form).join_value != 1)
                return false;
    }
    return true;
}

MaxNResult max_admissible_n(int k, const IntersectionForm& form, int n_cap,
                            const SolveBudget& per_probe) {
    MaxNResult res;
    res.lo = 2 * k + 1;  // too few vertices for either constraint family
    res.hi = closed_form_bound(k, form.rank(), form.alternating());
    const int cap = std::min(n_cap, res.hi);

    for (int n = 2 * k + 2; n <= cap; ++n) {
        KuhnelEncoding enc = encode_conditions(k, n, form, per_probe.break_symmetry);
        SatSolver solver(enc.inst);
        SatOptions opts;
        opts.time_budget_s = per_probe.time_s;
        opts.decision_budget = per_probe.branches;
        opts.use_vsids = per_probe.use_vsids;
        SatResult sat = solver.solve(opts);

        ProbeResult probe;
        probe.n = n;
        probe.stats = sat.stats;
        if (sat.status == SatStatus::Sat) {
            if (!psi_admissible(n, k, form, decode_assignment(enc, sat.model)))
                throw std::logic_error("solver model fails the direct admissibility check");
            probe.status = SolveStatus::Sat;
            // a witness for n restricts to a witness for every smaller n
            res.lo = n;
        } else if (sat.status == SatStatus::Unsat) {
            probe.status = SolveStatus::Unsat;
            res.hi = n - 1;
        } else {
            probe.status = SolveStatus::Unknown;
        }
        res.probes.push_back(probe);
        if (probe.status == SolveStatus::Unsat) break;
    }
    res.exact = res.lo == res.hi;
    return res;
}

int closed_form_bound(int k, int beta, bool alternating) {
    if (k < 1 || beta < 0) throw std::invalid_argument("bad bound arguments");
    return alternating ? 2 * k + 1 + ((k + 2) * beta) / 2
                       : 2 * k + 1 + (k + 1) * beta;
}

int radon_threshold(int k, int beta, bool alternating) {
    return closed_form_bound(k, beta, alternating) + 2;
}

long long kuhnel_conjecture_rhs(int k, long long chi) {
    long long c = binomial(2 * k + 1, k + 1);
    long long v = c * (chi - 2);
    return k % 2 == 0 ? v : -v;
}

int kuhnel_conjecture_max_n(int k, long long chi) {
    long long rhs = kuhnel_conjecture_rhs(k, chi);
    if (rhs < 0) return -1;
    int n = 2 * k + 1;
    while (binomial(n + 1 - k - 1, k + 1) <= rhs) ++n;
    return n;
}

PartitionIdentity partition_identity(const SimplicialComplex& J, int v,
                                     const Psi& psi, const IntersectionForm& form) {
    const int k = J.dim();
    if (J.n_vertices() != 2 * k + 3)
        throw std::invalid_argument("identity needs a (2k+3)-vertex skeleton");
    if (v < 0 || v >= J.n_vertices())
        throw std::invalid_argument("apex vertex out of range");

    PartitionIdentity out;
    out.cycle_value = evaluate_on_cycle(
        reduce_ring(form_cochain(psi, form, J, k)), complete_pair_cycle(J));

    std::vector<int> rest;
    for (int w = 0; w < J.n_vertices(); ++w)
        if (w != v) rest.push_back(w);
    int acc = 0;
    for_each_halving(rest, k, [&](const std::vector<int>& sv, const std::vector<int>& tv) {
        acc ^= static_cast<int>(form.pair(boundary_image(psi, form, Simplex(sv).with_vertex(v)),
                                          boundary_image(psi, form, Simplex(tv).with_vertex(v))) & 1);
    });
    out.join_value = acc;
    return out;
}

} // namespace vkm
