#include "vkm/encode.hpp"

#include "vkm/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkm {

void emit_and_gate(SatInstance& inst, int a, int b, int out) {
    inst.clauses.push_back({-a, -b, out});
    inst.clauses.push_back({a, -out});
    inst.clauses.push_back({b, -out});
}

int product_var(SatInstance& inst, std::map<std::pair<int, int>, int>& pool,
                std::vector<std::pair<std::pair<int, int>, int>>& order, int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = pool.find({a, b});
    if (it != pool.end()) return it->second;
    int out = inst.new_var();
    pool.emplace(std::pair{a, b}, out);
    order.push_back({{a, b}, out});
    emit_and_gate(inst, a, b, out);
    return out;
}

SystemEncoding encode_system(const QuadraticSystem& sys, bool break_symmetry) {
    if (sys.ring != Ring::Z2)
        throw std::invalid_argument("propositional encoding is defined over Z2");

    SystemEncoding enc;
    enc.n_x = sys.x_count();
    enc.n_y = sys.y_count();
    enc.inst.n_vars = static_cast<int>(enc.n_x + enc.n_y);

    const int rank = sys.form.rank();
    for (size_t g = 0; g < enc.n_x; ++g) {
        const auto& gen = sys.basis.generators()[g];
        enc.notes.push_back({enc.x_var(g), "deformation", gen.eta.str() + "->" + gen.mu.str()});
    }
    for (size_t c = 0; c < sys.cells.size(); ++c)
        for (int i = 0; i < rank; ++i)
            enc.notes.push_back({enc.y_var(c, i, rank), "class_bit",
                                 sys.cells[c].str() + "[" + std::to_string(i) + "]"});

    std::map<std::pair<int, int>, int> pool;
    const PairIndex& pairs = sys.basis.pairs();
    const Gf2Matrix& G = sys.basis.matrix_z2();

    auto cell_index = [&](const Simplex& s) {
        auto it = std::lower_bound(sys.cells.begin(), sys.cells.end(), s);
        return static_cast<size_t>(it - sys.cells.begin());
    };

    for (size_t e = 0; e < pairs.size(); ++e) {
        XorClause xc;
        xc.rhs = sys.rhs[e] & 1;
        for (size_t g = 0; g < enc.n_x; ++g)
            if (G.get(e, g)) xc.vars.push_back(enc.x_var(g));
        size_t si = cell_index(pairs.pair(e).first);
        size_t ti = cell_index(pairs.pair(e).second);
        std::vector<int> prods;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if ((sys.form.entry(i, j) & 1) == 0) continue;
                prods.push_back(product_var(enc.inst, pool, enc.products,
                                            enc.y_var(si, i, rank), enc.y_var(ti, j, rank)));
            }
        // xor semantics: repeated variables cancel in pairs
        std::sort(prods.begin(), prods.end());
        for (size_t i = 0; i < prods.size();) {
            size_t j = i;
            while (j < prods.size() && prods[j] == prods[i]) ++j;
            if ((j - i) % 2) xc.vars.push_back(prods[i]);
            i = j;
        }
        enc.inst.xors.push_back(std::move(xc));
    }
    for (const auto& [ab, out] : enc.products)
        enc.notes.push_back({out, "product",
                             std::to_string(ab.first) + "*" + std::to_string(ab.second)});

    if (break_symmetry && rank > 0) {
        // a vertex transposition fixing the complex maps solutions to
        // solutions: the class part permutes and the deformation part is
        // repaired inside the span, so the class vector can be forced to be
        // the least one in its orbit
        for (auto [i, j] : automorphic_transpositions(sys.complex)) {
            std::vector<int> v, pv;
            for (size_t c = 0; c < sys.cells.size(); ++c) {
                size_t pc = cell_index(transpose_simplex(sys.cells[c], i, j));
                for (int comp = 0; comp < rank; ++comp) {
                    v.push_back(enc.y_var(c, comp, rank));
                    pv.push_back(enc.y_var(pc, comp, rank));
                }
            }
            add_lex_leader(enc.inst, enc.notes, v, pv);
        }
    }

    // the class bits determine the products by propagation and the
    // deformation variables are free once the parity constraints hold
    for (size_t c = 0; c < sys.cells.size(); ++c)
        for (int i = 0; i < rank; ++i)
            enc.inst.decision_vars.push_back(enc.y_var(c, i, rank));
    return enc;
}

} // namespace vkm
