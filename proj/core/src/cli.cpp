#include "vkm/cli.hpp"

#include "vkm/dimacs.hpp"
#include "vkm/encode.hpp"
#include "vkm/io.hpp"
#include "vkm/kuhnel.hpp"
#include "vkm/quad_system.hpp"
#include "vkm/representative.hpp"
#include "vkm/sat_solver.hpp"
#include "vkm/solve.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <limits>
#include <string>

namespace vkm {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Ring parse_ring(const std::string& name) {
    if (name == "Z") return Ring::Z;
    if (name == "Z2") return Ring::Z2;
    throw CLI::ValidationError("--ring", "must be Z or Z2");
}

// all lexicographic (2k+3)-subsets of the vertex set that span a full
// k-skeleton inside K; each carries a class invariant cycle
std::vector<std::vector<int>> cycle_supports(const SimplicialComplex& K, int k) {
    std::vector<std::vector<int>> out;
    const int need = 2 * k + 3;
    if (K.n_vertices() < need) return out;
    std::vector<int> pick(static_cast<size_t>(need));
    for (int i = 0; i < need; ++i) pick[static_cast<size_t>(i)] = i;
    const int n = K.n_vertices();
    long long expect = 1;
    for (int i = 0; i < k + 1; ++i) expect = expect * (need - i) / (i + 1);
    while (true) {
        auto sub = induced_subcomplex(K, pick);
        if (sub.complex.dim() >= k &&
            static_cast<long long>(sub.complex.simplices(k).size()) == expect)
            out.push_back(pick);
        int i = need - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - need + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::string vertices_str(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

void print_stats_line(const SolveStats& st) {
    std::cout << "strategy: " << st.strategy << "  decisions: " << st.decisions
              << "  conflicts: " << st.conflicts << "  propagations: " << st.propagations
              << "  enumerated: " << st.enumerated << "  elapsed_s: " << st.elapsed_s;
    if (!st.exhausted.empty()) std::cout << "  exhausted: " << st.exhausted;
    std::cout << "\n";
}

void print_report_text(const SolveReport& rep, const QuadraticSystem& sys) {
    std::cout << "status: " << solve_status_name(rep.status) << "\n";
    print_stats_line(rep.stats);
    if (rep.witness) {
        std::cout << "witness x:";
        for (const Int& v : rep.witness->x) std::cout << " " << v.str();
        std::cout << "\nwitness y:";
        for (size_t c = 0; c < rep.witness->y.size(); ++c) {
            std::cout << " " << sys.cells[c].str() << "=(";
            const auto& row = rep.witness->y[c];
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << row[i].str();
            std::cout << ")";
        }
        std::cout << "\n";
    }
}

struct ObstructArgs {
    std::string complex_spec;
    std::string ring_name = "Z2";
    std::uint64_t seed = 0;
    bool json_out = false;
};

int cmd_obstruct(const ObstructArgs& a) {
    const Ring ring = parse_ring(a.ring_name);
    SimplicialComplex K = parse_complex_spec(a.complex_spec);
    const int k = K.dim();
    if (k < 1) throw std::invalid_argument("complex must have dimension at least 1");

    Representative rep = compute_representative(K, k, a.seed);
    SkewCochain xi = ring == Ring::Z2 ? reduce_ring(rep.theta) : rep.theta;

    SpanTester tester(K, k, ring);
    auto witness = tester.test(xi);
    if (witness && !(tester.basis().expand(witness->coefficients) == xi))
        throw std::logic_error("span witness fails to re-expand");

    SkewCochain theta2 = reduce_ring(rep.theta);
    json cycles = json::array();
    std::vector<std::pair<std::vector<int>, int>> cycle_rows;
    for (const auto& S : cycle_supports(K, k)) {
        int val = evaluate_on_cycle(theta2, complete_pair_cycle_within(K, S, k));
        cycle_rows.push_back({S, val});
        cycles.push_back({{"vertices", S}, {"value", val}});
    }

    if (a.json_out) {
        json j{{"complex", a.complex_spec},
               {"ring", ring_name(ring)},
               {"k", k},
               {"placement_attempts", rep.attempts},
               {"class", witness ? "trivial" : "nontrivial"},
               {"cycles", std::move(cycles)}};
        if (witness) {
            json coeffs = json::array();
            for (const Int& c : witness->coefficients) coeffs.push_back(int_to_json(c));
            j["witness"] = {{"x", std::move(coeffs)}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "complex: " << a.complex_spec << " (" << K.n_vertices()
                  << " vertices, dim " << k << ")\n"
                  << "ring: " << ring_name(ring) << "\n"
                  << "placement attempts: " << rep.attempts << "\n"
                  << "class: " << (witness ? "trivial" : "nontrivial") << "\n";
        if (witness) {
            std::cout << "witness (verified):";
            const auto& gens = tester.basis().generators();
            for (size_t g = 0; g < witness->coefficients.size(); ++g)
                if (witness->coefficients[g] != 0)
                    std::cout << " (" << gens[g].eta.str() << ";" << gens[g].mu.str()
                              << ")=" << witness->coefficients[g].str();
            std::cout << "\n";
        }
        if (cycle_rows.empty()) {
            std::cout << "cycles: none (no spanning " << 2 * k + 3
                      << "-vertex full skeleton)\n";
        } else {
            for (const auto& [S, val] : cycle_rows)
                std::cout << "cycle " << vertices_str(S) << ": " << val << "\n";
        }
    }
    return 0;
}

struct SolveArgs {
    std::string complex_spec;
    std::string form_spec;
    std::string ring_name = "Z2";
    std::uint64_t seed = 0;
    double time_budget = 0;
    std::uint64_t branch_budget = 0;
    std::string branching = "vsids";
    bool no_symmetry = false;
    bool json_out = false;
    std::string witness_path;
    int box_bound = -1;
};

int cmd_solve(const SolveArgs& a) {
    const Ring ring = parse_ring(a.ring_name);
    SimplicialComplex K = parse_complex_spec(a.complex_spec);
    const int k = K.dim();
    if (k < 1) throw std::invalid_argument("complex must have dimension at least 1");

    IntersectionForm form = parse_form_spec(a.form_spec, ring, k);
    Representative rep = compute_representative(K, k, a.seed);
    SkewCochain theta = ring == Ring::Z2 ? reduce_ring(rep.theta) : rep.theta;
    QuadraticSystem sys = build_system(K, k, form, theta);
    SolveBudget budget{a.time_budget, a.branch_budget, a.branching != "index",
                       !a.no_symmetry};

    if (ring == Ring::Z2) {
        SolveReport report = solve_z2(sys, budget);
        if (a.json_out)
            std::cout << report_to_json(report);
        else
            print_report_text(report, sys);
        return 0;
    }

    if (!a.witness_path.empty()) {
        SolveWitness w = witness_from_json(read_text_file(a.witness_path));
        if (w.y.size() != sys.cells.size())
            throw std::invalid_argument("witness has wrong number of class vectors");
        bool ok;
        if (w.x.empty()) {
            // only the class part given: the deformation part exists exactly
            // when the residual lands in the generator lattice
            Psi psi;
            for (size_t c = 0; c < sys.cells.size(); ++c) {
                std::vector<std::int64_t> row;
                for (const Int& v : w.y[c]) row.push_back(static_cast<std::int64_t>(v));
                psi.values[sys.cells[c]] = std::move(row);
            }
            SkewCochain residual = theta - form_cochain(psi, form, K, k);
            SpanTester tester(K, k, ring);
            auto span = tester.test(residual);
            ok = span.has_value();
            if (ok) w.x = span->coefficients;
        } else {
            ok = check_witness(sys, w.x, w.y).ok;
        }
        SolveReport report;
        report.status = ok ? SolveStatus::Sat : SolveStatus::Unknown;
        report.stats.strategy = "witness-check";
        if (ok) report.witness = std::move(w);
        if (a.json_out) {
            json j = json::parse(report_to_json(report));
            j["witness_ok"] = ok;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "witness " << (ok ? "verified" : "rejected") << "\n";
            print_report_text(report, sys);
        }
        return 0;
    }

    if (a.box_bound >= 0) {
        SolveReport report = solve_z_box(sys, a.box_bound, budget);
        if (a.json_out)
            std::cout << report_to_json(report);
        else
            print_report_text(report, sys);
        return 0;
    }

    throw CLI::ValidationError(
        "--ring Z", "deciding solvability over Z is out of scope; pass "
                    "--check-witness PATH or --box-bound N for the partial modes");
}

struct KuhnelArgs {
    int k = 0;
    std::string form_spec;
    std::string beta_range;
    int n = -1;
    bool max_n = false;
    std::string emit_path;
    bool extended = false;
    double time_budget = 0;
    std::uint64_t branch_budget = 0;
    std::string branching = "vsids";
    bool no_symmetry = false;
    bool json_out = false;
};

struct KuhnelRow {
    int beta;
    std::string form_label;
    MaxNResult result;
};

json probe_rows(const std::vector<ProbeResult>& probes) {
    json out = json::array();
    for (const ProbeResult& p : probes)
        out.push_back({{"n", p.n},
                       {"status", solve_status_name(p.status)},
                       {"decisions", p.stats.decisions},
                       {"conflicts", p.stats.conflicts},
                       {"elapsed_s", p.stats.elapsed_s}});
    return out;
}

int cmd_kuhnel(const KuhnelArgs& a) {
    if (a.k < 1) throw CLI::ValidationError("--k", "must be at least 1");
    if (a.k >= 3 && !a.extended)
        throw CLI::ValidationError(
            "--k", "blocks with k >= 3 are long running; pass --extended to confirm");
    SolveBudget budget{a.time_budget, a.branch_budget, a.branching != "index",
                       !a.no_symmetry};

    // single probe at a fixed n, or an emitted instance for external solvers
    if (a.n >= 0) {
        IntersectionForm form = parse_form_spec(
            a.form_spec.empty() ? "trivial" : a.form_spec, Ring::Z2, a.k);
        KuhnelEncoding enc = encode_conditions(a.k, a.n, form, !a.no_symmetry);
        if (!a.emit_path.empty()) {
            write_text_file(a.emit_path, emit_dimacs_xor(enc.inst, enc.notes));
            std::string sidecar = sidecar_to_json(
                enc.inst.n_vars, 0, enc.cells.size() * static_cast<size_t>(enc.rank),
                enc.rank, enc.notes);
            write_text_file(a.emit_path + ".vars.json", sidecar);
            std::cout << sidecar;
            return 0;
        }
        SatSolver solver(enc.inst);
        SatOptions opts;
        opts.time_budget_s = budget.time_s;
        opts.decision_budget = budget.branches;
        opts.use_vsids = budget.use_vsids;
        SatResult sat = solver.solve(opts);
        SolveStatus status = SolveStatus::Unknown;
        if (sat.status == SatStatus::Sat) {
            if (!psi_admissible(a.n, a.k, form, decode_assignment(enc, sat.model)))
                throw std::logic_error("solver model fails the direct admissibility check");
            status = SolveStatus::Sat;
        } else if (sat.status == SatStatus::Unsat) {
            status = SolveStatus::Unsat;
        }
        if (a.json_out) {
            json j{{"k", a.k},
                   {"n", a.n},
                   {"form", form.label()},
                   {"status", solve_status_name(status)},
                   {"decisions", sat.stats.decisions},
                   {"conflicts", sat.stats.conflicts},
                   {"elapsed_s", sat.stats.elapsed_s}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "k " << a.k << "  n " << a.n << "  form " << form.label()
                      << "  " << solve_status_name(status) << "\n";
        }
        return 0;
    }

    // table rows: an explicit form, or the identity/symplectic pair per beta
    std::vector<std::pair<int, IntersectionForm>> forms;
    if (!a.form_spec.empty()) {
        IntersectionForm f = parse_form_spec(a.form_spec, Ring::Z2, a.k);
        forms.push_back({f.rank(), std::move(f)});
    } else if (!a.beta_range.empty()) {
        int lo, hi;
        auto dots = a.beta_range.find("..");
        if (dots == std::string::npos) {
            lo = hi = std::stoi(a.beta_range);
        } else {
            lo = std::stoi(a.beta_range.substr(0, dots));
            hi = std::stoi(a.beta_range.substr(dots + 2));
        }
        if (lo < 1 || hi < lo) throw CLI::ValidationError("--beta", "bad range");
        for (int b = lo; b <= hi; ++b) {
            forms.push_back({b, identity_form(b, Ring::Z2, a.k)});
            if (b % 2 == 0) forms.push_back({b, symplectic_form(b / 2, Ring::Z2, a.k)});
        }
    } else {
        throw CLI::ValidationError("kuhnel", "pass --form or --beta");
    }

    std::vector<KuhnelRow> rows;
    for (auto& [beta, form] : forms)
        rows.push_back({beta, form.label(),
                        max_admissible_n(a.k, form, std::numeric_limits<int>::max(), budget)});

    if (a.json_out) {
        json jrows = json::array();
        for (const KuhnelRow& r : rows)
            jrows.push_back({{"k", a.k},
                             {"beta", r.beta},
                             {"form", r.form_label},
                             {"lo", r.result.lo},
                             {"hi", r.result.hi},
                             {"exact", r.result.exact},
                             {"probes", probe_rows(r.result.probes)}});
        std::cout << json{{"rows", std::move(jrows)}}.dump(2) << "\n";
    } else {
        std::cout << "k  beta  form            max n\n";
        for (const KuhnelRow& r : rows) {
            std::cout << a.k << "  " << r.beta << "     " << r.form_label;
            for (size_t pad = r.form_label.size(); pad < 16; ++pad) std::cout << " ";
            if (r.result.exact)
                std::cout << r.result.lo << "\n";
            else
                std::cout << r.result.lo << ".." << r.result.hi << " (interval)\n";
        }
    }
    return 0;
}

struct BoundsArgs {
    int k = 0;
    int beta = 0;
    bool alternating = false;
    long long chi = 0;
    bool chi_set = false;
    bool json_out = false;
};

int cmd_bounds(const BoundsArgs& a) {
    if (a.k < 1) throw CLI::ValidationError("--k", "must be at least 1");
    if (a.beta < 0) throw CLI::ValidationError("--beta", "must be nonnegative");
    // default Euler characteristic of a (k-1)-connected 2k-manifold with
    // middle betti number beta
    const long long chi = a.chi_set ? a.chi
                                    : 2 + (a.k % 2 == 0 ? a.beta : -a.beta);
    const int bound = closed_form_bound(a.k, a.beta, a.alternating);
    const int radon = radon_threshold(a.k, a.beta, a.alternating);
    const long long rhs = kuhnel_conjecture_rhs(a.k, chi);
    const int conj_n = kuhnel_conjecture_max_n(a.k, chi);

    if (a.json_out) {
        json j{{"k", a.k},
               {"beta", a.beta},
               {"alternating", a.alternating},
               {"closed_form_bound", bound},
               {"radon_threshold", radon},
               {"chi", chi},
               {"conjecture_rhs", rhs},
               {"conjecture_max_n", conj_n}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k: " << a.k << "  beta: " << a.beta << "  alternating: "
                  << (a.alternating ? "yes" : "no") << "\n"
                  << "closed-form bound: " << bound << "\n"
                  << "radon threshold: " << radon << "\n"
                  << "conjecture (chi=" << chi << ") rhs: " << rhs
                  << "  max n: " << conj_n << "\n";
    }
    return 0;
}

struct EmitArgs {
    std::string complex_spec;
    std::string form_spec = "trivial";
    std::string ring_name = "Z2";
    std::uint64_t seed = 0;
    bool no_symmetry = false;
    std::string out_path;
};

int cmd_emit_cnf(const EmitArgs& a) {
    if (parse_ring(a.ring_name) != Ring::Z2)
        throw CLI::ValidationError("--ring", "propositional output needs Z2");
    SimplicialComplex K = parse_complex_spec(a.complex_spec);
    const int k = K.dim();
    if (k < 1) throw std::invalid_argument("complex must have dimension at least 1");

    IntersectionForm form = parse_form_spec(a.form_spec, Ring::Z2, k);
    Representative rep = compute_representative(K, k, a.seed);
    QuadraticSystem sys = build_system(K, k, form, reduce_ring(rep.theta));
    SystemEncoding enc = encode_system(sys, !a.no_symmetry);

    write_text_file(a.out_path, emit_dimacs_xor(enc.inst, enc.notes));
    std::string sidecar = sidecar_to_json(enc.inst.n_vars, enc.n_x, enc.n_y,
                                          form.rank(), enc.notes);
    write_text_file(a.out_path + ".vars.json", sidecar);
    std::cout << sidecar;
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"van Kampen obstructions relative to an intersection form"};
    app.require_subcommand(1);

    ObstructArgs oa;
    auto* obstruct = app.add_subcommand(
        "obstruct", "compute the obstruction class of a complex and test triviality");
    obstruct->add_option("--complex", oa.complex_spec, "path or delta:n:k")->required();
    obstruct->add_option("--ring", oa.ring_name, "Z or Z2");
    obstruct->add_option("--seed", oa.seed, "placement seed");
    obstruct->add_flag("--json", oa.json_out, "JSON output");

    SolveArgs sa;
    auto* solve = app.add_subcommand(
        "solve", "decide whether the class vanishes relative to a form");
    solve->add_option("--complex", sa.complex_spec, "path or delta:n:k")->required();
    solve->add_option("--form", sa.form_spec,
                      "trivial | identity:b | symplectic:c | @file.json")->required();
    solve->add_option("--ring", sa.ring_name, "Z or Z2");
    solve->add_option("--seed", sa.seed, "placement seed");
    solve->add_option("--time-budget", sa.time_budget, "seconds, 0 = unlimited");
    solve->add_option("--branch-budget", sa.branch_budget, "decisions, 0 = unlimited");
    solve->add_option("--branching", sa.branching, "vsids | index")
        ->check(CLI::IsMember({"vsids", "index"}));
    solve->add_flag("--no-symmetry", sa.no_symmetry, "drop lex-leader constraints");
    solve->add_flag("--json", sa.json_out, "JSON output");
    solve->add_option("--check-witness", sa.witness_path,
                      "verify a witness file instead of searching");
    solve->add_option("--box-bound", sa.box_bound,
                      "search class vectors in [-B, B] over Z");

    KuhnelArgs ka;
    auto* kuhnel = app.add_subcommand(
        "kuhnel", "largest n with an admissible class assignment on delta:n:k");
    kuhnel->add_option("--k", ka.k, "skeleton dimension")->required();
    kuhnel->add_option("--form", ka.form_spec,
                       "trivial | identity:b | symplectic:c | @file.json");
    kuhnel->add_option("--beta", ka.beta_range, "rank or range lo..hi of ranks");
    kuhnel->add_option("--n", ka.n, "probe one n instead of scanning");
    kuhnel->add_flag("--max-n", ka.max_n, "scan for the maximum (default)");
    kuhnel->add_option("--emit-cnf", ka.emit_path, "write the probe instance, skip solving");
    kuhnel->add_flag("--extended", ka.extended, "allow long running k >= 3 blocks");
    kuhnel->add_option("--time-budget", ka.time_budget, "seconds per probe, 0 = unlimited");
    kuhnel->add_option("--branch-budget", ka.branch_budget, "decisions per probe");
    kuhnel->add_option("--branching", ka.branching, "vsids | index")
        ->check(CLI::IsMember({"vsids", "index"}));
    kuhnel->add_flag("--no-symmetry", ka.no_symmetry, "drop lex-leader constraints");
    kuhnel->add_flag("--json", ka.json_out, "JSON output");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "closed form bounds and thresholds");
    bounds->add_option("--k", ba.k, "half the manifold dimension")->required();
    bounds->add_option("--beta", ba.beta, "middle betti number over Z2")->required();
    bounds->add_flag("--alternating", ba.alternating, "use the alternating bound");
    auto* chi_opt = bounds->add_option("--chi", ba.chi, "Euler characteristic");
    bounds->add_flag("--json", ba.json_out, "JSON output");

    EmitArgs ea;
    auto* emit = app.add_subcommand(
        "emit-cnf", "write the deformation system for external solvers");
    emit->add_option("--complex", ea.complex_spec, "path or delta:n:k")->required();
    emit->add_option("--form", ea.form_spec,
                     "trivial | identity:b | symplectic:c | @file.json");
    emit->add_option("--ring", ea.ring_name, "must be Z2");
    emit->add_option("--seed", ea.seed, "placement seed");
    emit->add_flag("--no-symmetry", ea.no_symmetry, "drop lex-leader constraints");
    emit->add_option("-o,--out", ea.out_path, "DIMACS output path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        ba.chi_set = chi_opt->count() > 0;
        if (obstruct->parsed()) return cmd_obstruct(oa);
        if (solve->parsed()) return cmd_solve(sa);
        if (kuhnel->parsed()) return cmd_kuhnel(ka);
        if (bounds->parsed()) return cmd_bounds(ba);
        if (emit->parsed()) return cmd_emit_cnf(ea);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace vkm
