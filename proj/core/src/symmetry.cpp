#include "vkm/symmetry.hpp"

#include "vkm/encode.hpp"

#include <algorithm>

namespace vkm {

size_t add_lex_leader(SatInstance& inst, std::vector<VarNote>& notes,
                      const std::vector<int>& v, const std::vector<int>& pv) {
    std::vector<std::pair<int, int>> pos;
    for (size_t t = 0; t < v.size(); ++t)
        if (v[t] != pv[t]) pos.push_back({v[t], pv[t]});
    if (pos.empty()) return 0;

    // prefix = conjunction of equalities strictly before the current position;
    // 0 stands for the empty (true) prefix
    int prefix = 0;
    for (size_t t = 0; t < pos.size(); ++t) {
        auto [a, b] = pos[t];
        if (prefix == 0)
            inst.clauses.push_back({-a, b});
        else
            inst.clauses.push_back({-prefix, -a, b});
        if (t + 1 == pos.size()) break;

        int eq = inst.new_var();
        notes.push_back({eq, "symmetry", "eq"});
        inst.clauses.push_back({-eq, -a, b});
        inst.clauses.push_back({-eq, a, -b});
        inst.clauses.push_back({eq, a, b});
        inst.clauses.push_back({eq, -a, -b});
        if (prefix == 0) {
            prefix = eq;
        } else {
            int next = inst.new_var();
            notes.push_back({next, "symmetry", "prefix"});
            emit_and_gate(inst, prefix, eq, next);
            prefix = next;
        }
    }
    return pos.size();
}

Simplex transpose_simplex(const Simplex& s, int i, int j) {
    std::vector<int> verts = s.vertices();
    for (int& v : verts) {
        if (v == i) v = j;
        else if (v == j) v = i;
    }
    std::sort(verts.begin(), verts.end());
    return Simplex(verts);
}

std::vector<std::pair<int, int>> automorphic_transpositions(const SimplicialComplex& K) {
    std::vector<std::pair<int, int>> out;
    const int n = K.n_vertices();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ok = true;
            for (int d = 0; ok && d <= K.dim(); ++d)
                for (const Simplex& s : K.simplices(d))
                    if (!K.contains(transpose_simplex(s, i, j))) {
                        ok = false;
                        break;
                    }
            if (ok) out.push_back({i, j});
        }
    return out;
}

} // namespace vkm
