#include "vkm/quad_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace vkm {

QuadraticSystem build_system(const SimplicialComplex& K, int k,
                             const IntersectionForm& form, const SkewCochain& theta) {
    if (form.ring() != theta.ring())
        throw std::invalid_argument("form and cochain ring mismatch");
    if (form.k() != k || theta.k() != k)
        throw std::invalid_argument("dimension mismatch in system");

    QuadraticSystem sys{theta.ring(), k, K, FingerMoveBasis(K, k, theta.ring()),
                        form, K.simplices(k), {}};
    sys.rhs.resize(sys.basis.pairs().size());
    for (size_t i = 0; i < sys.rhs.size(); ++i) {
        std::int64_t v = theta.value(sys.basis.pairs().pair(i));
        if (sys.ring == Ring::Z2) v = ((v % 2) + 2) % 2;
        sys.rhs[i] = v;
    }
    return sys;
}

WitnessCheck check_witness(const QuadraticSystem& sys, const std::vector<Int>& x,
                           const std::vector<std::vector<Int>>& y) {
    if (x.size() != sys.x_count())
        throw std::invalid_argument("witness x has wrong length");
    if (y.size() != sys.cells.size())
        throw std::invalid_argument("witness y has wrong length");
    for (const auto& v : y)
        if (v.size() != static_cast<size_t>(sys.form.rank()))
            throw std::invalid_argument("witness y entry of wrong rank");

    const PairIndex& pairs = sys.basis.pairs();
    WitnessCheck out;
    for (size_t i = 0; i < pairs.size(); ++i) {
        const CellPair& cell = pairs.pair(i);
        Int lhs = 0;
        for (size_t g = 0; g < sys.x_count(); ++g) {
            if (x[g] == 0) continue;
            Int e = sys.ring == Ring::Z2 ? Int(sys.basis.matrix_z2().get(i, g) ? 1 : 0)
                                         : sys.basis.matrix_z().at(i, g);
            lhs += x[g] * e;
        }
        auto lower = std::lower_bound(sys.cells.begin(), sys.cells.end(), cell.first);
        size_t si = static_cast<size_t>(lower - sys.cells.begin());
        lower = std::lower_bound(sys.cells.begin(), sys.cells.end(), cell.second);
        size_t ti = static_cast<size_t>(lower - sys.cells.begin());
        for (int a = 0; a < sys.form.rank(); ++a)
            for (int b = 0; b < sys.form.rank(); ++b) {
                std::int64_t e = sys.form.entry(a, b);
                if (e != 0)
                    lhs += y[si][static_cast<size_t>(a)] * e * y[ti][static_cast<size_t>(b)];
            }
        Int diff = lhs - sys.rhs[i];
        bool bad = sys.ring == Ring::Z2 ? (diff % 2 != 0) : (diff != 0);
        if (bad) out.violated.push_back(i);
    }
    out.ok = out.violated.empty();
    return out;
}

} // namespace vkm
