#include "vkm/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vkm {

using nlohmann::json;

namespace {

// cpp_int as number when it fits, decimal string otherwise
json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Ring ring_from_name(const std::string& name) {
    if (name == "Z") return Ring::Z;
    if (name == "Z2") return Ring::Z2;
    throw std::invalid_argument("unknown ring: " + name);
}

SolveStatus status_from_name(const std::string& name) {
    if (name == "sat") return SolveStatus::Sat;
    if (name == "unsat") return SolveStatus::Unsat;
    if (name == "unknown") return SolveStatus::Unknown;
    throw std::invalid_argument("unknown status: " + name);
}

json witness_to_obj(const SolveWitness& w) {
    json jx = json::array(), jy = json::array();
    for (const Int& v : w.x) jx.push_back(int_to_json(v));
    for (const auto& row : w.y) {
        json jr = json::array();
        for (const Int& v : row) jr.push_back(int_to_json(v));
        jy.push_back(std::move(jr));
    }
    return json{{"x", std::move(jx)}, {"y", std::move(jy)}};
}

SolveWitness witness_from_obj(const json& j) {
    SolveWitness w;
    if (j.contains("x"))
        for (const auto& v : j.at("x")) w.x.push_back(int_from_json(v));
    for (const auto& row : j.at("y")) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(int_from_json(v));
        w.y.push_back(std::move(r));
    }
    return w;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("short write to " + path);
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    const int n = j.at("n_vertices").get<int>();
    std::vector<std::vector<int>> facets;
    for (const auto& s : j.at("simplices"))
        facets.push_back(s.get<std::vector<int>>());
    return build_complex(n, facets);
}

std::string complex_to_json(const SimplicialComplex& K) {
    json simplices = json::array();
    // facets suffice: simplices of top dimension plus lower ones not covered
    for (int d = K.dim(); d >= 0; --d)
        for (const Simplex& s : K.simplices(d)) {
            bool covered = false;
            for (int e = d + 1; e <= K.dim() && !covered; ++e)
                for (const Simplex& t : K.simplices(e))
                    if (t.contains(s)) { covered = true; break; }
            if (!covered) simplices.push_back(s.vertices());
        }
    json j{{"n_vertices", K.n_vertices()}, {"simplices", std::move(simplices)}};
    return j.dump(2) + "\n";
}

SimplicialComplex parse_complex_spec(const std::string& spec) {
    if (spec.rfind("delta:", 0) == 0) {
        const auto rest = spec.substr(6);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("builtin complex spec is delta:n:k");
        const int n = std::stoi(rest.substr(0, colon));
        const int k = std::stoi(rest.substr(colon + 1));
        if (n < 0 || k < 0)
            throw std::invalid_argument("delta:n:k needs n, k >= 0");
        return simplex_skeleton(n, k);
    }
    return complex_from_json(read_text_file(spec));
}

IntersectionForm form_from_json(const std::string& text, Ring ring, int k) {
    json j = json::parse(text);
    const Ring file_ring = ring_from_name(j.at("ring").get<std::string>());
    const int rank = j.at("rank").get<int>();
    auto matrix = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
    if (static_cast<int>(matrix.size()) != rank)
        throw std::invalid_argument("matrix size disagrees with rank");
    if (file_ring == Ring::Z && ring == Ring::Z2)
        return IntersectionForm(Ring::Z2, k, std::move(matrix));
    if (file_ring != ring)
        throw std::invalid_argument("a Z2 form cannot be used over Z");
    return IntersectionForm(ring, k, std::move(matrix));
}

std::string form_to_json(const IntersectionForm& form) {
    json matrix = json::array();
    for (int i = 0; i < form.rank(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < form.rank(); ++j2) row.push_back(form.entry(i, j2));
        matrix.push_back(std::move(row));
    }
    json j{{"ring", ring_name(form.ring())},
           {"rank", form.rank()},
           {"matrix", std::move(matrix)}};
    return j.dump(2) + "\n";
}

IntersectionForm parse_form_spec(const std::string& spec, Ring ring, int k) {
    if (spec == "trivial") return trivial_form(ring, k);
    if (spec.rfind("identity:", 0) == 0)
        return identity_form(std::stoi(spec.substr(9)), ring, k);
    if (spec.rfind("symplectic:", 0) == 0)
        return symplectic_form(std::stoi(spec.substr(11)), ring, k);
    if (spec.rfind("@", 0) == 0)
        return form_from_json(read_text_file(spec.substr(1)), ring, k);
    throw std::invalid_argument(
        "form spec must be trivial, identity:b, symplectic:c or @path.json");
}

std::string report_to_json(const SolveReport& r) {
    json j;
    j["status"] = solve_status_name(r.status);
    if (r.witness) j["witness"] = witness_to_obj(*r.witness);
    j["stats"] = {{"strategy", r.stats.strategy},
                  {"decisions", r.stats.decisions},
                  {"conflicts", r.stats.conflicts},
                  {"propagations", r.stats.propagations},
                  {"enumerated", r.stats.enumerated},
                  {"elapsed_s", r.stats.elapsed_s},
                  {"exhausted", r.stats.exhausted}};
    return j.dump(2) + "\n";
}

SolveReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    SolveReport r;
    r.status = status_from_name(j.at("status").get<std::string>());
    if (j.contains("witness")) r.witness = witness_from_obj(j.at("witness"));
    const json& s = j.at("stats");
    r.stats.strategy = s.at("strategy").get<std::string>();
    r.stats.decisions = s.at("decisions").get<std::uint64_t>();
    r.stats.conflicts = s.at("conflicts").get<std::uint64_t>();
    r.stats.propagations = s.at("propagations").get<std::uint64_t>();
    r.stats.enumerated = s.at("enumerated").get<std::uint64_t>();
    r.stats.elapsed_s = s.at("elapsed_s").get<double>();
    r.stats.exhausted = s.at("exhausted").get<std::string>();
    return r;
}

std::string witness_to_json(const SolveWitness& w) {
    return witness_to_obj(w).dump(2) + "\n";
}

SolveWitness witness_from_json(const std::string& text) {
    return witness_from_obj(json::parse(text));
}

std::string sidecar_to_json(int n_vars, size_t n_x, size_t n_y, int rank,
                            const std::vector<VarNote>& notes) {
    json vars = json::array();
    for (const VarNote& n : notes)
        vars.push_back({{"var", n.var}, {"kind", n.kind}, {"detail", n.detail}});
    json j{{"n_vars", n_vars},
           {"n_x", n_x},
           {"n_y", n_y},
           {"rank", rank},
           {"vars", std::move(vars)}};
    return j.dump(2) + "\n";
}

std::vector<VarNote> sidecar_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<VarNote> notes;
    for (const auto& v : j.at("vars"))
        notes.push_back({v.at("var").get<int>(), v.at("kind").get<std::string>(),
                         v.at("detail").get<std::string>()});
    return notes;
}

} // namespace vkm
