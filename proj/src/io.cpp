#include "qgw/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qgw {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

bool has_object(const Json& j) {
    if (j.is_object()) return true;
    if (j.is_array())
        for (const auto& e : j)
            if (has_object(e)) return true;
    return false;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += inner + Json(it.key()).dump() + ": ";
                write(it.value(), out, indent + 2);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            if (!has_object(j)) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    write(j[i], out, indent);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += inner;
                write(j[i], out, indent + 2);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

std::size_t get_count(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_number_unsigned()) throw InputError(std::string(what) + ": '" + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

double get_double(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_number()) throw InputError(std::string(what) + ": '" + key + "' must be a number");
    return v.get<double>();
}

CMatrix sized_matrix(const Json& j, const char* key, std::size_t rows, std::size_t cols, const char* what) {
    CMatrix m = matrix_from_json(field(j, key, what), key);
    if (m.rows() != ei(rows) || m.cols() != ei(cols))
        throw InputError(std::string(what) + ": '" + key + "' must be " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    return m;
}

Json projector_list(const std::vector<CMatrix>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(matrix_to_json(p));
    return a;
}

std::vector<CMatrix> projector_list_from(const Json& j, std::size_t n) {
    const Json& arr = field(j, "projectors", "witness");
    if (!arr.is_array()) throw InputError("witness: 'projectors' must be an array");
    std::vector<CMatrix> ps;
    for (const auto& e : arr) {
        CMatrix m = matrix_from_json(e, "projector");
        if (m.rows() != ei(n) || m.cols() != ei(n))
            throw InputError("witness: projector " + std::to_string(ps.size()) + " is not " + std::to_string(n) + "x" +
                             std::to_string(n));
        ps.push_back(std::move(m));
    }
    return ps;
}

Json opt_count(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json bound_to_json(const Bound& b) {
    Json j;
    j["lower"] = opt_count(b.lower);
    j["upper"] = opt_count(b.upper);
    j["exact"] = b.exact();
    j["value"] = opt_count(b.value());
    j["not_colourable"] = b.not_colourable;
    j["provenance"] = b.provenance;
    return j;
}

}  // namespace

std::string dump_canonical(const Json& j) {
    std::string out;
    write(j, out, 0);
    out += "\n";
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed for " + path);
}

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw InputError("complex entries must be numbers or [re, im] pairs");
}

Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw InputError(std::string(what) + ": matrix must be a nonempty array of rows");
    const std::size_t cols = j[0].size();
    CMatrix m(ei(j.size()), ei(cols));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError(std::string(what) + ": row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < cols; ++k) m(ei(i), ei(k)) = complex_from_json(j[i][k]);
    }
    if (!is_finite(m)) throw InputError(std::string(what) + ": entries must be finite");
    return m;
}

std::string to_string(InstanceKind k) {
    switch (k) {
        case InstanceKind::Abc: return "abc";
        case InstanceKind::Hyp: return "hyp";
        case InstanceKind::Classical: return "classical";
        case InstanceKind::Projector: return "projector";
    }
    return "?";
}

Instance Instance::from_abc(const AbcParams& p) {
    Instance i;
    i.kind = InstanceKind::Abc;
    i.n = p.n;
    i.abc = p;
    return i;
}

Instance Instance::from_hyp(const HypParams& h) {
    Instance i;
    i.kind = InstanceKind::Hyp;
    i.n = h.n;
    i.hyp = h;
    i.abc = hyp_build(h);
    return i;
}

Instance Instance::from_classical(const ClassicalGraph& g) {
    Instance i;
    i.kind = InstanceKind::Classical;
    i.n = g.n();
    i.graph = g;
    i.abc = classical_embedding(g);
    return i;
}

Instance Instance::from_projector(std::size_t n, const CMatrix& pi) {
    if (pi.rows() != ei(n * n) || pi.cols() != ei(n * n))
        throw InputError("projector instance: matrix must be n^2 x n^2");
    Instance i;
    i.kind = InstanceKind::Projector;
    i.n = n;
    i.projector = pi;
    return i;
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["kind"] = to_string(inst.kind);
    j["n"] = inst.n;
    switch (inst.kind) {
        case InstanceKind::Abc:
            j["A"] = matrix_to_json(inst.abc.A);
            j["B"] = matrix_to_json(inst.abc.B);
            j["C"] = matrix_to_json(inst.abc.C);
            break;
        case InstanceKind::Hyp:
            j["a"] = inst.hyp.a;
            j["a_prime"] = inst.hyp.a_prime;
            j["b"] = inst.hyp.b;
            j["c"] = inst.hyp.c;
            break;
        case InstanceKind::Classical: {
            Json edges = Json::array();
            for (const auto& [a, b] : inst.graph.edges()) edges.push_back(Json::array({a, b}));
            j["edges"] = edges;
            break;
        }
        case InstanceKind::Projector:
            j["projector"] = matrix_to_json(inst.projector);
            break;
    }
    return j;
}

Instance instance_from_json(const Json& j) {
    const char* what = "instance";
    const Json& kind = field(j, "kind", what);
    if (!kind.is_string()) throw InputError("instance: 'kind' must be a string");
    const std::string k = kind.get<std::string>();
    const std::size_t n = get_count(j, "n", what);
    if (n == 0) throw InputError("instance: n must be positive");
    if (k == "abc") {
        AbcParams p;
        p.n = n;
        p.A = sized_matrix(j, "A", n, n, what);
        p.B = sized_matrix(j, "B", n, n, what);
        p.C = sized_matrix(j, "C", n, n, what);
        return Instance::from_abc(p);
    }
    if (k == "hyp") {
        HypParams h;
        h.n = n;
        h.a = get_double(j, "a", what);
        h.a_prime = get_double(j, "a_prime", what);
        h.b = get_double(j, "b", what);
        h.c = get_double(j, "c", what);
        return Instance::from_hyp(h);
    }
    if (k == "classical") {
        const Json& edges = field(j, "edges", what);
        if (!edges.is_array()) throw InputError("instance: 'edges' must be an array");
        ClassicalGraph g(n);
        for (const auto& e : edges) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw InputError("instance: edges must be pairs of vertex indices");
            const auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
            if (a >= n || b >= n || a == b) throw InputError("instance: invalid edge [" + e[0].dump() + ", " + e[1].dump() + "]");
            g.add_edge(a, b);
        }
        return Instance::from_classical(g);
    }
    if (k == "projector") return Instance::from_projector(n, sized_matrix(j, "projector", n * n, n * n, what));
    throw InputError("instance: unknown kind '" + k + "'");
}

Json hyp_enumeration_to_json(std::size_t n, const std::vector<HypEntry>& entries) {
    Json list = Json::array();
    for (const auto& e : entries) {
        Json j;
        j["a"] = e.h.a;
        j["a_prime"] = e.h.a_prime;
        j["b"] = e.h.b;
        j["c"] = e.h.c;
        j["loopless"] = e.loopless;
        list.push_back(std::move(j));
    }
    Json out;
    out["kind"] = "hyp-enumeration";
    out["n"] = n;
    out["count"] = entries.size();
    out["entries"] = list;
    return out;
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Components: return "components";
        case WitnessKind::Colouring: return "colouring";
        case WitnessKind::Independent: return "independent";
        case WitnessKind::Clique: return "clique";
    }
    return "?";
}

Json witness_to_json(const AnyWitness& w, std::size_t n) {
    Json j;
    j["type"] = to_string(w.kind());
    j["n"] = n;
    std::visit(
        [&j](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ComponentWitness> || std::is_same_v<T, ColouringWitness>) {
                j["projectors"] = projector_list(x.projectors);
            } else if constexpr (std::is_same_v<T, IndependenceWitness>) {
                j["projector"] = matrix_to_json(x.P);
            } else {
                j["k"] = x.k();
                j["isometry"] = matrix_to_json(x.V);
            }
        },
        w.w);
    return j;
}

AnyWitness witness_from_json(const Json& j) {
    const Json& type = field(j, "type", "witness");
    if (!type.is_string()) throw InputError("witness: 'type' must be a string");
    const std::string t = type.get<std::string>();
    const std::size_t n = get_count(j, "n", "witness");
    if (n == 0) throw InputError("witness: n must be positive");
    if (t == "components") return {ComponentWitness{projector_list_from(j, n)}};
    if (t == "colouring") return {ColouringWitness{projector_list_from(j, n)}};
    if (t == "independent") return {IndependenceWitness{sized_matrix(j, "projector", n, n, "witness")}};
    if (t == "clique") {
        CMatrix v = matrix_from_json(field(j, "isometry", "witness"), "isometry");
        if (v.rows() != ei(n)) throw InputError("witness: isometry must have n rows");
        if (j.contains("k") && (!j["k"].is_number_unsigned() || j["k"].get<std::size_t>() != std::size_t(v.cols())))
            throw InputError("witness: 'k' does not match the isometry");
        return {CliqueWitness{v}};
    }
    throw InputError("witness: unknown type '" + t + "'");
}

bool check_witness(const QuantumGraph& g, const AnyWitness& w, Tolerance tol) {
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ComponentWitness>)
                return check_components(g, x, tol);
            else if constexpr (std::is_same_v<T, ColouringWitness>)
                return check_colouring(g, x, tol);
            else if constexpr (std::is_same_v<T, IndependenceWitness>)
                return check_independent_set(g, x, tol);
            else
                return check_clique(g, x, tol);
        },
        w.w);
}

Json report_to_json(const ParameterReport& r, bool with_witnesses) {
    Json j;
    j["n"] = r.n;
    j["family"] = r.family;
    j["canonical"] = r.canonical ? Json(*r.canonical) : Json(nullptr);
    j["dim_s"] = r.dim_s;
    j["edge_count"] = r.edge_count;
    j["loopless"] = r.loopless;
    j["parameters"] = {{"components", bound_to_json(r.components)},
                       {"chromatic_number", bound_to_json(r.chromatic)},
                       {"independence_number", bound_to_json(r.independence)},
                       {"clique_number", bound_to_json(r.clique)}};
    j["notes"] = r.notes;
    if (with_witnesses) {
        Json w = Json::object();
        if (r.components_witness) w["components"] = witness_to_json({*r.components_witness}, r.n);
        if (r.colouring_witness) w["colouring"] = witness_to_json({*r.colouring_witness}, r.n);
        if (r.independence_witness) w["independent"] = witness_to_json({*r.independence_witness}, r.n);
        if (r.clique_witness) w["clique"] = witness_to_json({*r.clique_witness}, r.n);
        j["witnesses"] = w;
    }
    return j;
}

Json strange_to_json(const StrangeGraph& sg) {
    Json j;
    j["n"] = sg.n();
    Json classical = Json::array();
    for (const auto& [a, b] : sg.classical_edges()) classical.push_back(Json::array({a, b}));
    Json strange = Json::array();
    for (const auto& [e, theta] : sg.strange_edges()) strange.push_back({{"i", e.first}, {"j", e.second}, {"theta", theta}});
    j["classical_edges"] = classical;
    j["strange_edges"] = strange;
    return j;
}

std::string strange_to_dot(const StrangeGraph& sg) {
    std::ostringstream out;
    out << "graph strange {\n";
    for (std::size_t v = 0; v < sg.n(); ++v) out << "  " << v << ";\n";
    for (const auto& [a, b] : sg.classical_edges()) out << "  " << a << " -- " << b << ";\n";
    for (const auto& [e, theta] : sg.strange_edges()) {
        char label[64];
        std::snprintf(label, sizeof label, "\xCE\xB8=%.4f", theta);
        out << "  " << e.first << " -- " << e.second << " [style=dashed, label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace qgw
