#include "vkm/sat_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace vkm {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kReasonNone = -1;
constexpr int kReasonFlag = 1 << 30;  // set when the reason is a parity row

// clauses live in one flat arena: [size, flags, lit...]; a reference is the
// offset of the size word. flags bit 0 marks learned clauses, the rest is lbd
constexpr int kLearnedBit = 1;

struct Watch {
    int ref;
    int blocker;  // a literal of the clause; true means skip without touching
};

// parity row under counter propagation: parity tracks the xor of the
// processed true variables, n_unassigned the processed-unassigned count
struct XorRow {
    std::vector<int> vars;
    bool rhs = false;
    bool parity = false;
    int n_unassigned = 0;
};

inline size_t lit_index(int lit) {
    return 2 * static_cast<size_t>(std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
}

std::uint64_t luby(std::uint64_t i) {
    std::uint64_t k = 1;
    while ((std::uint64_t(1) << k) - 1 < i + 1) ++k;
    while ((std::uint64_t(1) << k) - 1 != i + 1) {
        --k;
        i -= (std::uint64_t(1) << k) - 1;
    }
    return std::uint64_t(1) << (k - 1);
}

struct Engine {
    int n = 0;
    std::vector<int> mem;                  // clause arena
    size_t learned_count = 0;
    std::vector<std::vector<Watch>> watches;
    std::vector<XorRow> rows;
    std::vector<std::vector<int>> xocc;    // per var: rows containing it
    std::vector<XorRow> deferred;          // pivot = vars[0], back substituted
    std::vector<signed char> val;          // 1-based: 0 unset, +1 true, -1 false
    std::vector<int> level, reason;
    std::vector<int> trail_pos;            // position on the trail when assigned
    std::vector<signed char> saved_phase;
    std::vector<int> trail, trail_lim;
    size_t chead = 0;  // clause watch watermark
    size_t xhead = 0;  // parity counter watermark; counters reflect trail[0..xhead)
    std::vector<int> candidates;
    std::vector<char> is_candidate;
    std::vector<double> activity;
    double act_inc = 1.0;
    std::vector<int> heap, heap_pos;

    // analyze scratch, reused across conflicts
    std::vector<char> seen;
    std::vector<int> to_clear;
    std::vector<int> reason_buf;
    std::vector<int> learned_buf;
    std::vector<char> visited;
    std::vector<int> visit_clear;
    std::vector<int> dfs_stack;
    std::vector<unsigned> level_stamp;
    unsigned stamp = 0;

    SatStats stats;

    int clause_size(int ref) const { return mem[static_cast<size_t>(ref)]; }
    int* clause_lits(int ref) { return mem.data() + ref + 2; }
    const int* clause_lits(int ref) const { return mem.data() + ref + 2; }
    bool clause_learned(int ref) const { return mem[static_cast<size_t>(ref) + 1] & kLearnedBit; }
    unsigned clause_lbd(int ref) const { return static_cast<unsigned>(mem[static_cast<size_t>(ref) + 1]) >> 1; }

    int push_clause(const std::vector<int>& lits, bool learned, unsigned lbd) {
        int ref = static_cast<int>(mem.size());
        mem.push_back(static_cast<int>(lits.size()));
        mem.push_back(static_cast<int>(lbd << 1) | (learned ? kLearnedBit : 0));
        mem.insert(mem.end(), lits.begin(), lits.end());
        if (learned) ++learned_count;
        return ref;
    }

    bool value_true(int lit) const { return val[static_cast<size_t>(std::abs(lit))] == (lit > 0 ? 1 : -1); }
    bool value_false(int lit) const { return val[static_cast<size_t>(std::abs(lit))] == (lit > 0 ? -1 : 1); }
    bool assigned(int v) const { return val[static_cast<size_t>(v)] != 0; }
    int current_level() const { return static_cast<int>(trail_lim.size()); }

    // --- vsids heap ------------------------------------------------------
    bool heap_less(int a, int b) const {
        if (activity[static_cast<size_t>(a)] != activity[static_cast<size_t>(b)])
            return activity[static_cast<size_t>(a)] > activity[static_cast<size_t>(b)];
        return a < b;
    }
    void heap_up(size_t i) {
        int v = heap[i];
        while (i > 0) {
            size_t p = (i - 1) / 2;
            if (!heap_less(v, heap[p])) break;
            heap[i] = heap[p];
            heap_pos[static_cast<size_t>(heap[i])] = static_cast<int>(i);
            i = p;
        }
        heap[i] = v;
        heap_pos[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    void heap_down(size_t i) {
        int v = heap[i];
        while (true) {
            size_t c = 2 * i + 1;
            if (c >= heap.size()) break;
            if (c + 1 < heap.size() && heap_less(heap[c + 1], heap[c])) ++c;
            if (!heap_less(heap[c], v)) break;
            heap[i] = heap[c];
            heap_pos[static_cast<size_t>(heap[i])] = static_cast<int>(i);
            i = c;
        }
        heap[i] = v;
        heap_pos[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    void heap_insert(int v) {
        if (heap_pos[static_cast<size_t>(v)] >= 0) return;
        heap.push_back(v);
        heap_pos[static_cast<size_t>(v)] = static_cast<int>(heap.size()) - 1;
        heap_up(heap.size() - 1);
    }
    int heap_top_unassigned() {
        while (!heap.empty()) {
            int v = heap[0];
            if (!assigned(v)) return v;
            heap_pos[static_cast<size_t>(v)] = -1;
            if (heap.size() > 1) {
                heap[0] = heap.back();
                heap_pos[static_cast<size_t>(heap[0])] = 0;
                heap.pop_back();
                heap_down(0);
            } else {
                heap.pop_back();
            }
        }
        return 0;
    }
    void bump(int v) {
        activity[static_cast<size_t>(v)] += act_inc;
        if (activity[static_cast<size_t>(v)] > 1e100) {
            for (auto& a : activity) a *= 1e-100;
            act_inc *= 1e-100;
        }
        int p = heap_pos[static_cast<size_t>(v)];
        if (p >= 0) heap_up(static_cast<size_t>(p));
    }

    // --- assignment ------------------------------------------------------
    void enqueue(int lit, int r) {
        int v = std::abs(lit);
        val[static_cast<size_t>(v)] = lit > 0 ? 1 : -1;
        level[static_cast<size_t>(v)] = current_level();
        reason[static_cast<size_t>(v)] = r;
        trail_pos[static_cast<size_t>(v)] = static_cast<int>(trail.size());
        trail.push_back(lit);
    }

    void backtrack(int to_level) {
        if (current_level() <= to_level) return;
        size_t limit = static_cast<size_t>(trail_lim[static_cast<size_t>(to_level)]);
        while (trail.size() > limit) {
            size_t idx = trail.size() - 1;
            int lit = trail.back();
            int v = std::abs(lit);
            if (idx < xhead) {
                // this assignment went through the counters; take it back out
                for (int ri : xocc[static_cast<size_t>(v)]) {
                    XorRow& row = rows[static_cast<size_t>(ri)];
                    ++row.n_unassigned;
                    if (lit > 0) row.parity = !row.parity;
                }
            }
            saved_phase[static_cast<size_t>(v)] = val[static_cast<size_t>(v)];
            val[static_cast<size_t>(v)] = 0;
            reason[static_cast<size_t>(v)] = kReasonNone;
            if (heap_pos[static_cast<size_t>(v)] < 0 && is_candidate[static_cast<size_t>(v)])
                heap_insert(v);
            trail.pop_back();
        }
        trail_lim.resize(static_cast<size_t>(to_level));
        chead = trail.size();
        xhead = trail.size();
    }

    // --- propagation -----------------------------------------------------
    // returns conflict reason id or kReasonNone
    int propagate() {
        while (true) {
            if (chead < trail.size()) {
                int lit = trail[chead++];
                ++stats.propagations;
                std::vector<Watch>& wl = watches[lit_index(-lit)];
                size_t i = 0, j = 0;
                const size_t wn = wl.size();
                while (i < wn) {
                    Watch w = wl[i];
                    if (value_true(w.blocker)) {
                        wl[j++] = wl[i++];
                        continue;
                    }
                    int* lits = clause_lits(w.ref);
                    const int sz = clause_size(w.ref);
                    if (lits[0] == -lit) std::swap(lits[0], lits[1]);
                    // lits[1] == -lit now
                    if (value_true(lits[0])) {
                        wl[j++] = {w.ref, lits[0]};
                        ++i;
                        continue;
                    }
                    bool moved = false;
                    for (int t = 2; t < sz; ++t) {
                        if (!value_false(lits[t])) {
                            std::swap(lits[1], lits[t]);
                            watches[lit_index(lits[1])].push_back({w.ref, lits[0]});
                            moved = true;
                            break;
                        }
                    }
                    if (moved) {
                        ++i;
                        continue;
                    }
                    wl[j++] = {w.ref, lits[0]};
                    ++i;
                    if (value_false(lits[0])) {
                        while (i < wn) wl[j++] = wl[i++];
                        wl.resize(j);
                        return w.ref;
                    }
                    enqueue(lits[0], w.ref);
                }
                wl.resize(j);
                continue;
            }
            if (xhead < trail.size()) {
                const int lit = trail[xhead++];
                const int v = std::abs(lit);
                const auto& occ = xocc[static_cast<size_t>(v)];
                // counters first, checks second: a conflict return must leave
                // every row of v updated or the backtrack rewind desyncs them
                for (int ri : occ) {
                    XorRow& row = rows[static_cast<size_t>(ri)];
                    --row.n_unassigned;
                    if (lit > 0) row.parity = !row.parity;
                }
                for (int ri : occ) {
                    XorRow& row = rows[static_cast<size_t>(ri)];
                    if (row.n_unassigned == 0) {
                        if (row.parity != row.rhs) return ri | kReasonFlag;
                    } else if (row.n_unassigned == 1) {
                        // the counters only reflect trail entries below xhead,
                        // so the missing variable may be assigned but pending
                        int u = 0;
                        const bool rest = row.rhs ^ row.parity;
                        for (int cand : row.vars) {
                            if (!assigned(cand) ||
                                trail_pos[static_cast<size_t>(cand)] >=
                                    static_cast<int>(xhead)) {
                                u = cand;
                                break;
                            }
                        }
                        if (u == 0) throw std::logic_error("parity counter desync");
                        if (!assigned(u)) {
                            enqueue(rest ? u : -u, ri | kReasonFlag);
                        } else if ((val[static_cast<size_t>(u)] == 1) != rest) {
                            return ri | kReasonFlag;
                        }
                    }
                }
                continue;
            }
            return kReasonNone;
        }
    }

    // reason literals of an assignment (or conflict lits when lit == 0)
    void reason_lits(int r, int lit, std::vector<int>& out) const {
        out.clear();
        if (r & kReasonFlag) {
            const XorRow& row = rows[static_cast<size_t>(r & ~kReasonFlag)];
            for (int u : row.vars) {
                if (lit != 0 && u == std::abs(lit)) continue;
                out.push_back(val[static_cast<size_t>(u)] == 1 ? -u : u);
            }
        } else {
            const int* lits = clause_lits(r);
            const int sz = clause_size(r);
            for (int t = 0; t < sz; ++t) {
                if (lit != 0 && lits[t] == lit) continue;
                out.push_back(lits[t]);
            }
        }
    }

    // a learned literal is redundant when its reason closes over the other
    // learned literals and level zero; bounded depth-first check, no memo
    bool lit_redundant(int l, size_t budget) {
        dfs_stack.clear();
        dfs_stack.push_back(-l);  // the assignment that falsified l
        size_t steps = 0;
        bool ok = true;
        size_t visited_from = visit_clear.size();
        while (!dfs_stack.empty() && ok) {
            int a = dfs_stack.back();
            dfs_stack.pop_back();
            int r = reason[static_cast<size_t>(std::abs(a))];
            if (r == kReasonNone) { ok = false; break; }
            reason_lits(r, a, reason_buf);
            for (int l2 : reason_buf) {
                if (++steps > budget) { ok = false; break; }
                int v2 = std::abs(l2);
                if (level[static_cast<size_t>(v2)] == 0 || seen[static_cast<size_t>(v2)])
                    continue;
                if (visited[static_cast<size_t>(v2)]) continue;
                if (reason[static_cast<size_t>(v2)] == kReasonNone) { ok = false; break; }
                visited[static_cast<size_t>(v2)] = 1;
                visit_clear.push_back(v2);
                dfs_stack.push_back(-l2);
            }
        }
        for (size_t t = visited_from; t < visit_clear.size(); ++t)
            visited[static_cast<size_t>(visit_clear[t])] = 0;
        visit_clear.resize(visited_from);
        return ok;
    }

    // first uip learning; fills learned_buf, returns backjump level
    int analyze(int confl) {
        learned_buf.clear();
        learned_buf.push_back(0);  // slot for the asserting literal
        to_clear.clear();
        int counter = 0;
        int uip = 0;
        size_t idx = trail.size();
        int r = confl;
        int pending = 0;

        while (true) {
            reason_lits(r, pending, reason_buf);
            for (int l : reason_buf) {
                int v = std::abs(l);
                if (seen[static_cast<size_t>(v)] || level[static_cast<size_t>(v)] == 0)
                    continue;
                seen[static_cast<size_t>(v)] = 1;
                to_clear.push_back(v);
                bump(v);
                if (level[static_cast<size_t>(v)] == current_level()) ++counter;
                else learned_buf.push_back(l);
            }
            while (!seen[static_cast<size_t>(std::abs(trail[idx - 1]))]) --idx;
            --idx;
            uip = trail[idx];
            seen[static_cast<size_t>(std::abs(uip))] = 0;
            if (--counter == 0) break;
            r = reason[static_cast<size_t>(std::abs(uip))];
            pending = uip;
        }
        learned_buf[0] = -uip;

        // drop tail literals whose reasons stay inside the clause
        size_t w = 1;
        for (size_t i = 1; i < learned_buf.size(); ++i) {
            int l = learned_buf[i];
            if (reason[static_cast<size_t>(std::abs(l))] == kReasonNone ||
                !lit_redundant(l, 600))
                learned_buf[w++] = l;
        }
        learned_buf.resize(w);

        for (int v : to_clear) seen[static_cast<size_t>(v)] = 0;

        int bj = 0;
        size_t swap_pos = 1;
        for (size_t i = 1; i < learned_buf.size(); ++i) {
            int lv = level[static_cast<size_t>(std::abs(learned_buf[i]))];
            if (lv > bj) {
                bj = lv;
                swap_pos = i;
            }
        }
        if (learned_buf.size() > 1) std::swap(learned_buf[1], learned_buf[swap_pos]);
        return bj;
    }

    unsigned compute_lbd(const std::vector<int>& lits) {
        ++stamp;
        unsigned out = 0;
        for (int l : lits) {
            unsigned lv = static_cast<unsigned>(level[static_cast<size_t>(std::abs(l))]);
            if (level_stamp[lv] != stamp) {
                level_stamp[lv] = stamp;
                ++out;
            }
        }
        return out;
    }

    void attach_clause(int ref) {
        const int* lits = clause_lits(ref);
        watches[lit_index(lits[0])].push_back({ref, lits[1]});
        watches[lit_index(lits[1])].push_back({ref, lits[0]});
    }

    // rewrite the arena keeping problem clauses and the best learned ones;
    // must run at decision level 0 so the rebuilt watches are valid
    void reduce_learned() {
        std::vector<int> refs, learned_refs;
        for (int ref = 0; ref < static_cast<int>(mem.size());
             ref += 2 + clause_size(ref))
            (clause_learned(ref) ? learned_refs : refs).push_back(ref);
        std::sort(learned_refs.begin(), learned_refs.end(), [&](int a, int b) {
            if (clause_lbd(a) != clause_lbd(b)) return clause_lbd(a) < clause_lbd(b);
            if (clause_size(a) != clause_size(b)) return clause_size(a) < clause_size(b);
            return a < b;
        });
        const size_t keep_limit = learned_refs.size() / 2;
        for (size_t i = 0; i < learned_refs.size(); ++i) {
            int ref = learned_refs[i];
            if (clause_lbd(ref) <= 2 || clause_size(ref) <= 2 || i < keep_limit)
                refs.push_back(ref);
        }
        std::sort(refs.begin(), refs.end());

        std::vector<int> next;
        next.reserve(mem.size());
        std::vector<int> lits;
        learned_count = 0;
        for (int ref : refs) {
            const int* src = clause_lits(ref);
            const int sz = clause_size(ref);
            lits.clear();
            bool satisfied = false;
            for (int t = 0; t < sz; ++t) {
                if (value_true(src[t])) { satisfied = true; break; }
                if (!value_false(src[t])) lits.push_back(src[t]);
            }
            if (satisfied) continue;
            if (lits.size() < 2)
                throw std::logic_error("unpropagated short clause at reduction");
            next.push_back(static_cast<int>(lits.size()));
            next.push_back(mem[static_cast<size_t>(ref) + 1]);
            next.insert(next.end(), lits.begin(), lits.end());
            if (clause_learned(ref)) ++learned_count;
        }
        mem = std::move(next);
        for (auto& wl : watches) wl.clear();
        for (int ref = 0; ref < static_cast<int>(mem.size());
             ref += 2 + clause_size(ref))
            attach_clause(ref);
        // stale clause references can only be read through reasons, and the
        // level zero trail never feeds conflict analysis
        for (int lit : trail) reason[static_cast<size_t>(std::abs(lit))] = kReasonNone;
    }
};

} // namespace

SatSolver::SatSolver(const SatInstance& inst) : inst_(inst) {
    for (const auto& c : inst.clauses)
        for (int l : c)
            if (l == 0 || std::abs(l) > inst.n_vars)
                throw std::invalid_argument("clause literal out of range");
    for (const auto& x : inst.xors)
        for (int v : x.vars)
            if (v <= 0 || v > inst.n_vars)
                throw std::invalid_argument("parity variable out of range");
}

SatResult SatSolver::solve(const SatOptions& opts) {
    const auto t0 = Clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    };

    const int n = inst_.n_vars;
    Engine e;
    e.n = n;
    e.val.assign(static_cast<size_t>(n) + 1, 0);
    e.level.assign(static_cast<size_t>(n) + 1, 0);
    e.reason.assign(static_cast<size_t>(n) + 1, kReasonNone);
    e.trail_pos.assign(static_cast<size_t>(n) + 1, 0);
    e.saved_phase.assign(static_cast<size_t>(n) + 1, -1);
    e.watches.assign(2 * static_cast<size_t>(n), {});
    e.xocc.assign(static_cast<size_t>(n) + 1, {});
    e.heap_pos.assign(static_cast<size_t>(n) + 1, -1);
    e.activity.assign(static_cast<size_t>(n) + 1, 0.0);
    e.is_candidate.assign(static_cast<size_t>(n) + 1, 0);
    e.seen.assign(static_cast<size_t>(n) + 1, 0);
    e.visited.assign(static_cast<size_t>(n) + 1, 0);
    e.level_stamp.assign(static_cast<size_t>(n) + 2, 0);

    std::vector<char> in_cnf(static_cast<size_t>(n) + 1, 0);

    // load clauses
    std::vector<int> units;
    for (const auto& raw : inst_.clauses) {
        std::vector<int> lits = raw;
        std::sort(lits.begin(), lits.end(), [](int a, int b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
        });
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        bool taut = false;
        for (size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == -lits[i + 1]) { taut = true; break; }
        for (int l : raw) in_cnf[static_cast<size_t>(std::abs(l))] = 1;
        if (taut) continue;
        if (lits.empty()) return {SatStatus::Unsat, {}, e.stats};
        if (lits.size() == 1) {
            units.push_back(lits[0]);
            continue;
        }
        e.attach_clause(e.push_clause(lits, false, 0));
    }

    // gauss reduce the parity rows; variables with no clause occurrence are
    // eliminated first so the rows that pivot on them can be deferred
    {
        std::vector<int> order;
        for (int v = 1; v <= n; ++v)
            if (!in_cnf[static_cast<size_t>(v)]) order.push_back(v);
        for (int v = 1; v <= n; ++v)
            if (in_cnf[static_cast<size_t>(v)]) order.push_back(v);
        std::vector<int> col_of(static_cast<size_t>(n) + 1, 0);
        for (size_t i = 0; i < order.size(); ++i) col_of[static_cast<size_t>(order[i])] = static_cast<int>(i);

        const size_t words = (static_cast<size_t>(n) + 63) / 64 + 1;  // last bit = rhs
        const size_t rhs_bit = static_cast<size_t>(n);
        std::vector<std::vector<std::uint64_t>> mat;
        for (const auto& x : inst_.xors) {
            std::vector<std::uint64_t> row(words, 0);
            for (int v : x.vars) {
                size_t c = static_cast<size_t>(col_of[static_cast<size_t>(v)]);
                row[c >> 6] ^= std::uint64_t(1) << (c & 63);
            }
            if (x.rhs) row[rhs_bit >> 6] ^= std::uint64_t(1) << (rhs_bit & 63);
            mat.push_back(std::move(row));
        }
        auto get_bit = [&](const std::vector<std::uint64_t>& row, size_t c) {
            return (row[c >> 6] >> (c & 63)) & 1u;
        };
        size_t rank = 0;
        std::vector<size_t> pivot_col;
        for (size_t col = 0; col < static_cast<size_t>(n) && rank < mat.size(); ++col) {
            size_t pivot = mat.size();
            for (size_t r = rank; r < mat.size(); ++r)
                if (get_bit(mat[r], col)) { pivot = r; break; }
            if (pivot == mat.size()) continue;
            std::swap(mat[pivot], mat[rank]);
            for (size_t r = 0; r < mat.size(); ++r) {
                if (r == rank || !get_bit(mat[r], col)) continue;
                for (size_t w = 0; w < words; ++w) mat[r][w] ^= mat[rank][w];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        for (size_t r = 0; r < mat.size(); ++r) {
            XorRow row;
            for (size_t c = 0; c < static_cast<size_t>(n); ++c)
                if (get_bit(mat[r], c)) row.vars.push_back(order[c]);
            row.rhs = get_bit(mat[r], rhs_bit);
            if (row.vars.empty()) {
                if (row.rhs) return {SatStatus::Unsat, {}, e.stats};
                continue;
            }
            bool pivot_free = r < rank && !in_cnf[static_cast<size_t>(order[pivot_col[r]])];
            if (pivot_free) {
                // pivot variable is invisible to the clauses: solve for it later
                e.deferred.push_back(std::move(row));
            } else if (row.vars.size() == 1) {
                units.push_back(row.rhs ? row.vars[0] : -row.vars[0]);
            } else {
                row.n_unassigned = static_cast<int>(row.vars.size());
                int ri = static_cast<int>(e.rows.size());
                e.rows.push_back(std::move(row));
                for (int v : e.rows.back().vars)
                    e.xocc[static_cast<size_t>(v)].push_back(ri);
            }
        }
    }

    // branch candidates: the instance hint restricted to the visible vars,
    // extended by every other visible var as a completeness fallback
    {
        std::vector<char> visible(static_cast<size_t>(n) + 1, 0);
        for (int ref = 0; ref < static_cast<int>(e.mem.size());
             ref += 2 + e.clause_size(ref)) {
            const int* lits = e.clause_lits(ref);
            for (int t = 0; t < e.clause_size(ref); ++t)
                visible[static_cast<size_t>(std::abs(lits[t]))] = 1;
        }
        for (const auto& row : e.rows)
            for (int v : row.vars) visible[static_cast<size_t>(v)] = 1;
        std::vector<char> listed(static_cast<size_t>(n) + 1, 0);
        for (int v : inst_.decision_vars)
            if (v >= 1 && v <= n && visible[static_cast<size_t>(v)] && !listed[static_cast<size_t>(v)]) {
                e.candidates.push_back(v);
                listed[static_cast<size_t>(v)] = 1;
            }
        for (int v = 1; v <= n; ++v)
            if (visible[static_cast<size_t>(v)] && !listed[static_cast<size_t>(v)])
                e.candidates.push_back(v);
        for (int v : e.candidates) e.is_candidate[static_cast<size_t>(v)] = 1;
        for (int v : e.candidates) e.heap_insert(v);
    }

    for (int l : units) {
        int v = std::abs(l);
        if (e.assigned(v)) {
            if (!e.value_true(l)) return {SatStatus::Unsat, {}, e.stats};
            continue;
        }
        e.enqueue(l, kReasonNone);
    }
    if (e.propagate() != kReasonNone) return {SatStatus::Unsat, {}, e.stats};

    const SatInstance& inst = inst_;
    auto extract_model = [&]() {
        std::vector<bool> model(static_cast<size_t>(n) + 1, false);
        for (int v = 1; v <= n; ++v)
            if (e.val[static_cast<size_t>(v)] != 0) model[static_cast<size_t>(v)] = e.val[static_cast<size_t>(v)] > 0;
        // deferred rows are in reduced form: each pivot occurs in one row only
        for (const auto& row : e.deferred) {
            bool parity = row.rhs;
            for (size_t i = 1; i < row.vars.size(); ++i)
                if (model[static_cast<size_t>(row.vars[i])]) parity = !parity;
            model[static_cast<size_t>(row.vars[0])] = parity;
        }
        // verify against the original instance; a failure is a solver bug
        for (const auto& c : inst.clauses) {
            bool sat = false;
            for (int l : c)
                if ((l > 0) == model[static_cast<size_t>(std::abs(l))]) { sat = true; break; }
            if (!sat) throw std::logic_error("solver returned a bad model (clause)");
        }
        for (const auto& x : inst.xors) {
            bool parity = false;
            for (int v : x.vars)
                if (model[static_cast<size_t>(v)]) parity = !parity;
            if (parity != x.rhs) throw std::logic_error("solver returned a bad model (parity)");
        }
        return model;
    };

    std::uint64_t next_restart = luby(0) * 100;
    std::uint64_t restart_index = 0;
    std::uint64_t conflicts_at_restart = 0;
    size_t max_learned = 4000;

    // lowest-index scan position for the deterministic heuristic
    size_t scan_from = 0;

    while (true) {
        int confl = e.propagate();
        if (confl != kReasonNone) {
            ++e.stats.conflicts;
            if (e.current_level() == 0) {
                e.stats.elapsed_s = elapsed();
                return {SatStatus::Unsat, {}, e.stats};
            }
            int bj = e.analyze(confl);
            e.backtrack(bj);
            scan_from = 0;
            if (e.learned_buf.size() == 1) {
                e.enqueue(e.learned_buf[0], kReasonNone);
            } else {
                unsigned lbd = e.compute_lbd(e.learned_buf);
                int ref = e.push_clause(e.learned_buf, true, lbd);
                e.attach_clause(ref);
                e.enqueue(e.learned_buf[0], ref);
            }
            e.act_inc /= 0.95;

            if (opts.conflict_budget && e.stats.conflicts >= opts.conflict_budget) {
                e.stats.elapsed_s = elapsed();
                e.stats.exhausted = "conflicts";
                return {SatStatus::Unknown, {}, e.stats};
            }
            if ((e.stats.conflicts & 255) == 0 && opts.time_budget_s > 0 &&
                elapsed() > opts.time_budget_s) {
                e.stats.elapsed_s = elapsed();
                e.stats.exhausted = "time";
                return {SatStatus::Unknown, {}, e.stats};
            }
            if (e.stats.conflicts - conflicts_at_restart >= next_restart) {
                conflicts_at_restart = e.stats.conflicts;
                next_restart = luby(++restart_index) * 100;
                ++e.stats.restarts;
                e.backtrack(0);
                scan_from = 0;
                if (e.propagate() != kReasonNone) {
                    e.stats.elapsed_s = elapsed();
                    return {SatStatus::Unsat, {}, e.stats};
                }
                if (e.learned_count >= max_learned) {
                    e.reduce_learned();
                    max_learned = max_learned + max_learned / 3;
                }
            }
            continue;
        }

        // pick a branch variable
        int decision = 0;
        if (opts.use_vsids) {
            decision = e.heap_top_unassigned();
        } else {
            while (scan_from < e.candidates.size() &&
                   e.assigned(e.candidates[scan_from]))
                ++scan_from;
            if (scan_from < e.candidates.size()) decision = e.candidates[scan_from];
        }

        if (decision == 0) {
            e.stats.elapsed_s = elapsed();
            return {SatStatus::Sat, extract_model(), e.stats};
        }

        ++e.stats.decisions;
        if (opts.decision_budget && e.stats.decisions >= opts.decision_budget) {
            e.stats.elapsed_s = elapsed();
            e.stats.exhausted = "decisions";
            return {SatStatus::Unknown, {}, e.stats};
        }
        if ((e.stats.decisions & 1023) == 0 && opts.time_budget_s > 0 &&
            elapsed() > opts.time_budget_s) {
            e.stats.elapsed_s = elapsed();
            e.stats.exhausted = "time";
            return {SatStatus::Unknown, {}, e.stats};
        }

        e.trail_lim.push_back(static_cast<int>(e.trail.size()));
        int lit = e.saved_phase[static_cast<size_t>(decision)] == 1 ? decision : -decision;
        e.enqueue(lit, kReasonNone);
    }
}

} // namespace vkm
