#include "vkm/dimacs.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace vkm {

std::string emit_dimacs_xor(const SatInstance& inst, const std::vector<VarNote>& notes) {
    std::ostringstream out;
    out << "c clause lines are plain cnf; x lines are parity constraints\n";
    out << "c   (an x line asserts the xor of its literals is true)\n";
    if (!notes.empty()) {
        out << "c variables:\n";
        for (const auto& n : notes)
            out << "c   " << n.var << " " << n.kind << " " << n.detail << "\n";
    }
    out << "p cnf " << inst.n_vars << " " << inst.clauses.size() + inst.xors.size() << "\n";
    for (const auto& c : inst.clauses) {
        for (int l : c) out << l << " ";
        out << "0\n";
    }
    for (const auto& x : inst.xors) {
        if (x.vars.empty()) {
            if (x.rhs)
                throw std::invalid_argument("empty parity constraint with odd parity");
            continue;
        }
        out << "x ";
        for (size_t i = 0; i < x.vars.size(); ++i) {
            int lit = x.vars[i];
            if (i == 0 && !x.rhs) lit = -lit;
            out << lit << " ";
        }
        out << "0\n";
    }
    return out.str();
}

SatInstance parse_dimacs_xor(const std::string& text) {
    SatInstance inst;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            size_t nclauses;
            if (!(ls >> p >> fmt >> inst.n_vars >> nclauses) || fmt != "cnf")
                throw std::invalid_argument("bad dimacs header");
            have_header = true;
            continue;
        }
        if (!have_header) throw std::invalid_argument("clause before dimacs header");
        bool is_xor = line[0] == 'x';
        if (is_xor) ls.ignore(1);
        std::vector<int> lits;
        int lit;
        bool terminated = false;
        while (ls >> lit) {
            if (lit == 0) { terminated = true; break; }
            if (std::abs(lit) > inst.n_vars)
                throw std::invalid_argument("literal out of range");
            lits.push_back(lit);
        }
        if (!terminated) throw std::invalid_argument("unterminated clause line");
        if (is_xor) {
            XorClause x;
            x.rhs = true;
            for (int l : lits) {
                if (l < 0) x.rhs = !x.rhs;
                x.vars.push_back(std::abs(l));
            }
            // duplicate variables cancel mod 2
            std::sort(x.vars.begin(), x.vars.end());
            std::vector<int> vars;
            for (size_t i = 0; i < x.vars.size();) {
                size_t j = i;
                while (j < x.vars.size() && x.vars[j] == x.vars[i]) ++j;
                if ((j - i) % 2) vars.push_back(x.vars[i]);
                i = j;
            }
            x.vars = std::move(vars);
            inst.xors.push_back(std::move(x));
        } else {
            inst.clauses.push_back(std::move(lits));
        }
    }
    if (!have_header) throw std::invalid_argument("missing dimacs header");
    return inst;
}

} // namespace vkm
