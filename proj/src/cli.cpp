#include "qgw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgw/bounds.hpp"
#include "qgw/constructions.hpp"
#include "qgw/io.hpp"

namespace qgw::cli {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

struct Global {
    std::optional<double> tol;
    std::uint64_t seed = 0;

    Tolerance tolerance() const {
        if (tol) return Tolerance(*tol);
        if (const char* env = std::getenv("QGW_TOL"); env && *env) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end == env || *end != '\0') throw InputError(std::string("QGW_TOL is not a number: ") + env);
            return Tolerance(v);
        }
        return Tolerance{};
    }
};

int report_error(std::ostream& err, int code, const std::string& kind, const std::string& reason,
                 const Json& extra = Json::object()) {
    Json j = extra;
    j["error"] = kind;
    j["reason"] = reason;
    err << dump_canonical(j);
    return code;
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
    if (path)
        write_text_file(*path, text);
    else
        out << text;
}

Json abc_report_json(const AbcReport& r) {
    Json j;
    j["quantum_graph"] = r.quantum_graph;
    j["undirected"] = r.undirected;
    j["loopless"] = r.loopless;
    j["reasons"] = r.reasons;
    Json blocks = Json::array();
    for (const auto& [a, b] : r.bad_blocks) blocks.push_back(Json::array({a, b}));
    j["bad_blocks"] = blocks;
    return j;
}

QuantumGraph graph_of(const Instance& inst, Tolerance tol) {
    if (inst.has_abc()) return build(inst.abc, tol);
    return QuantumGraph::from_projector(SuperOp(inst.n, inst.projector), tol);
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

std::vector<std::size_t> parse_index_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("invalid vertex list '" + s + "'");
        out.push_back(std::stoul(tok));
    }
    return out;
}

ClassicalGraph parse_edges(std::size_t n, const std::string& s) {
    ClassicalGraph g(n);
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto dash = tok.find('-');
        if (dash == std::string::npos) throw InputError("edges must look like 0-1,1-2");
        const auto a = parse_index_list(tok.substr(0, dash)), b = parse_index_list(tok.substr(dash + 1));
        if (a.size() != 1 || b.size() != 1 || a[0] >= n || b[0] >= n || a[0] == b[0])
            throw InputError("invalid edge '" + tok + "'");
        g.add_edge(a[0], b[0]);
    }
    return g;
}

ParameterReport analyze_instance(const Instance& inst, const BoundsOptions& opt, Tolerance tol) {
    if (inst.has_abc()) {
        const AbcReport rep = validate(inst.abc, tol);
        if (!rep.quantum_graph) throw AbcValidationError(rep);
        if (rep.undirected) return bounds_table(inst.abc, opt);
        ParameterReport r = analyze_graph(build(inst.abc, tol), opt);
        r.family = to_string(family_of(inst.abc, tol));
        r.notes.push_back("directed instance; only witness-based bounds are reported");
        return r;
    }
    return analyze_graph(graph_of(inst, tol), opt);
}

// -- table --------------------------------------------------------------

struct TableRow {
    std::string label;
    AbcParams params;
};

std::vector<TableRow> table_rows(std::size_t n) {
    const CMatrix b = CMatrix::Identity(ei(n), ei(n)) - all_ones(n) / static_cast<double>(n);
    StrangeGraph path(n);
    for (std::size_t i = 0; i + 1 < n; ++i) path.add_classical(i, i + 1);
    StrangeGraph matching(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) matching.add_strange(i, i + 1, kPi);
    std::vector<TableRow> rows;
    rows.push_back({"K̄_n", canonical(CanonicalKind::Empty, n)});
    rows.push_back({"K_n", canonical(CanonicalKind::Complete, n)});
    rows.push_back({"G^sym", canonical(CanonicalKind::Sym, n)});
    rows.push_back({"G^asym", canonical(CanonicalKind::Asym, n)});
    rows.push_back({"X_{A,.} (A = path)", from_strange_graph(path)});
    AbcParams bonly = AbcParams::zeros(n);
    bonly.B = b;
    for (std::size_t i = 0; i < n; ++i) bonly.A(ei(i), ei(i)) = bonly.C(ei(i), ei(i)) = b(ei(i), ei(i));
    rows.push_back({"X_{.,B} (B = I - J/n)", bonly});
    rows.push_back({"X_{A,B} (A = path, B = I - J/n)", from_strange_graph(path, b)});
    rows.push_back({"X_{A,.,C} (phase-pi matching)", from_strange_graph(matching)});
    rows.push_back({"X_{A,B,C} (phase-pi matching, B = I - J/n)", from_strange_graph(matching, b)});
    return rows;
}

std::string cell(const Bound& b) {
    if (b.not_colourable) return "not colourable";
    if (auto v = b.value()) return std::to_string(*v);
    const std::string lo = b.lower ? std::to_string(*b.lower) : "?";
    const std::string hi = b.upper ? std::to_string(*b.upper) : "?";
    return "[" + lo + ", " + hi + "]";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum graphs on M_n: construction, validation and parameter bounds", "qgw"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--tol", g.tol, "Numerical tolerance (default 1e-8, env QGW_TOL)");
    app.add_option("--seed", g.seed, "Seed for all randomized searches")->capture_default_str();

    // build
    auto* build_cmd = app.add_subcommand("build", "Write an instance file");
    std::string build_kind;
    std::size_t build_n = 0;
    std::optional<std::string> build_out, build_file, build_edges, build_graph;
    double hyp_a = 0, hyp_ap = 0, hyp_b = 0, hyp_c = 0, p_classical = 0.5, p_strange = 0.0;
    std::size_t b_rank = 0;
    bool enumerate = false, with_loops = false;
    build_cmd->add_option("kind", build_kind,
                          "empty|complete|sym|asym|hyp|abc|classical|random|strange-pi|projector")
        ->required();
    build_cmd->add_option("--n", build_n, "Dimension");
    build_cmd->add_option("--out", build_out, "Output file (stdout if omitted)");
    build_cmd->add_option("--file", build_file, "Input instance to canonicalize (abc, projector)");
    build_cmd->add_option("--a", hyp_a);
    build_cmd->add_option("--a-prime", hyp_ap);
    build_cmd->add_option("--b", hyp_b);
    build_cmd->add_option("--c", hyp_c);
    build_cmd->add_flag("--enumerate", enumerate, "List all hyperoctahedral quantum graphs");
    build_cmd->add_option("--graph", build_graph, "classical: cycle|path|complete|bipartite|random");
    build_cmd->add_option("--edges", build_edges, "classical: edge list like 0-1,1-2");
    build_cmd->add_option("--p", p_classical, "Classical edge probability");
    build_cmd->add_option("--p-strange", p_strange, "Strange edge probability (random)");
    build_cmd->add_option("--b-rank", b_rank, "Rank of B (random)");
    build_cmd->add_flag("--loops", with_loops, "random: B need not annihilate the ones vector");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Check the quantum graph axioms");
    std::string validate_file;
    validate_cmd->add_option("file", validate_file)->required();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Bounds and witnesses for components, chi, alpha, omega");
    std::string analyze_file;
    std::size_t trials = 0, exact_max_n = kExactMaxN;
    std::optional<std::string> analyze_out, witness_dir;
    analyze_cmd->add_option("file", analyze_file)->required();
    analyze_cmd->add_option("--trials", trials, "Random isometries per clique size")->capture_default_str();
    analyze_cmd->add_option("--exact-max-n", exact_max_n, "Largest n for exact classical solvers")
        ->capture_default_str();
    analyze_cmd->add_option("--out", analyze_out, "Report file (stdout if omitted)");
    analyze_cmd->add_option("--witness-dir", witness_dir, "Write one witness file per parameter");

    // strange
    auto* strange_cmd = app.add_subcommand("strange", "Render the strange graph");
    std::string strange_file, strange_format = "dot";
    strange_cmd->add_option("file", strange_file)->required();
    strange_cmd->add_option("--format", strange_format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "Check or construct witnesses");
    witness_cmd->require_subcommand(1);
    auto* check_cmd = witness_cmd->add_subcommand("check", "Exit 0 if the witness is accepted, 2 otherwise");
    std::string check_instance, check_witness_file;
    check_cmd->add_option("instance", check_instance)->required();
    check_cmd->add_option("witness", check_witness_file)->required();
    auto* construct_cmd = witness_cmd->add_subcommand("construct", "Build a witness for an instance");
    std::string construct_kind, construct_instance;
    std::optional<std::string> construct_out, construct_clique;
    construct_cmd
        ->add_option("kind", construct_kind,
                     "icpovm|bipartite|symasym|complete-minus-one|classical-clique|reflexive|fourier|"
                     "components|colouring|independent|clique")
        ->required();
    construct_cmd->add_option("instance", construct_instance)->required();
    construct_cmd->add_option("--out", construct_out, "Witness file (stdout if omitted)");
    construct_cmd->add_option("--clique", construct_clique, "Classical clique, e.g. 0,1,2");

    // table
    auto* table_cmd = app.add_subcommand("table", "Summary table of quantum graph parameters");
    std::size_t table_n = 0;
    std::string table_format = "json";
    table_cmd->add_option("--n", table_n)->required();
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return report_error(err, kInputError, "usage", e.what());
    }

    try {
        const Tolerance tol = g.tolerance();

        if (*build_cmd) {
            auto need_n = [&] {
                if (build_n == 0) throw InputError("build " + build_kind + " needs --n >= 1");
            };
            Instance inst;
            if (build_kind == "empty" || build_kind == "complete" || build_kind == "sym" || build_kind == "asym") {
                need_n();
                if (build_n < 2) throw InputError("canonical graphs need n >= 2");
                inst = Instance::from_abc(canonical(parse_canonical_kind(build_kind), build_n));
            } else if (build_kind == "hyp") {
                need_n();
                if (enumerate) {
                    emit(out, build_out, dump_canonical(hyp_enumeration_to_json(build_n, hyp_enumerate(build_n))));
                    return kOk;
                }
                inst = Instance::from_hyp(HypParams{build_n, hyp_a, hyp_ap, hyp_b, hyp_c});
            } else if (build_kind == "abc" || build_kind == "projector") {
                if (!build_file) throw InputError("build " + build_kind + " needs --file");
                inst = load_instance(*build_file);
            } else if (build_kind == "classical") {
                need_n();
                ClassicalGraph cg(build_n);
                if (build_edges) {
                    cg = parse_edges(build_n, *build_edges);
                } else {
                    const std::string shape = build_graph.value_or("path");
                    if (shape == "cycle")
                        cg = ClassicalGraph::cycle(build_n);
                    else if (shape == "path")
                        cg = ClassicalGraph::path(build_n);
                    else if (shape == "complete")
                        cg = ClassicalGraph::complete(build_n);
                    else if (shape == "bipartite") {
                        if (build_n % 2) throw InputError("bipartite needs even n");
                        cg = ClassicalGraph::complete_bipartite(build_n / 2, build_n / 2);
                    } else if (shape == "random")
                        cg = ClassicalGraph::random(build_n, p_classical, g.seed);
                    else
                        throw InputError("unknown classical graph '" + shape + "'");
                }
                inst = Instance::from_classical(cg);
            } else if (build_kind == "random") {
                need_n();
                inst = Instance::from_abc(
                    random_abc(build_n, g.seed, RandomProfile{p_classical, p_strange, b_rank, !with_loops}));
            } else if (build_kind == "strange-pi") {
                need_n();
                inst = Instance::from_abc(strange_pi_matching(build_n));
            } else {
                throw InputError("unknown build kind '" + build_kind + "'");
            }
            if (inst.has_abc()) {
                const AbcReport rep = validate(inst.abc, tol);
                if (!rep.quantum_graph)
                    return report_error(err, kInputError, "input", "parameters do not define a quantum graph",
                                        abc_report_json(rep));
            } else {
                graph_of(inst, tol);
            }
            emit(out, build_out, dump_canonical(instance_to_json(inst)));
            return kOk;
        }

        if (*validate_cmd) {
            const Instance inst = load_instance(validate_file);
            if (inst.has_abc()) {
                const AbcReport rep = validate(inst.abc, tol);
                out << dump_canonical(abc_report_json(rep));
                return rep.quantum_graph ? kOk : kSemanticFailure;
            }
            Json j;
            try {
                const QuantumGraph qg = graph_of(inst, tol);
                j["quantum_graph"] = true;
                j["undirected"] = qg.is_undirected(tol);
                j["loopless"] = qg.is_loopless(tol);
                j["reasons"] = Json::array();
            } catch (const ValidationError& e) {
                j["quantum_graph"] = false;
                j["undirected"] = false;
                j["loopless"] = false;
                j["reasons"] = Json::array({e.what()});
            }
            out << dump_canonical(j);
            return j["quantum_graph"].get<bool>() ? kOk : kSemanticFailure;
        }

        if (*analyze_cmd) {
            const Instance inst = load_instance(analyze_file);
            BoundsOptions opt;
            opt.tol = tol;
            opt.seed = g.seed;
            opt.trials = trials;
            opt.exact_max_n = exact_max_n;
            const ParameterReport r = analyze_instance(inst, opt, tol);
            if (witness_dir) {
                std::filesystem::create_directories(*witness_dir);
                const auto put = [&](const char* name, const AnyWitness& w) {
                    write_text_file((std::filesystem::path(*witness_dir) / name).string(),
                                    dump_canonical(witness_to_json(w, r.n)));
                };
                if (r.components_witness) put("components.json", {*r.components_witness});
                if (r.colouring_witness) put("colouring.json", {*r.colouring_witness});
                if (r.independence_witness) put("independent.json", {*r.independence_witness});
                if (r.clique_witness) put("clique.json", {*r.clique_witness});
            }
            emit(out, analyze_out, dump_canonical(report_to_json(r)));
            return kOk;
        }

        if (*strange_cmd) {
            const Instance inst = load_instance(strange_file);
            if (!inst.has_abc()) throw InputError("strange graphs need an abc, hyp or classical instance");
            const StrangeGraph sg = to_strange_graph(inst.abc, tol);
            out << (strange_format == "dot" ? strange_to_dot(sg) : dump_canonical(strange_to_json(sg)));
            return kOk;
        }

        if (*check_cmd) {
            const Instance inst = load_instance(check_instance);
            const AnyWitness w = witness_from_json(read_json_file(check_witness_file));
            const QuantumGraph qg = graph_of(inst, tol);
            const bool ok = check_witness(qg, w, tol);
            out << dump_canonical({{"type", to_string(w.kind())}, {"accepted", ok}});
            return ok ? kOk : kSemanticFailure;
        }

        if (*construct_cmd) {
            const Instance inst = load_instance(construct_instance);
            const QuantumGraph qg = graph_of(inst, tol);
            const std::size_t n = inst.n;
            auto underlying_graph = [&]() -> ClassicalGraph {
                if (inst.kind == InstanceKind::Classical) return inst.graph;
                if (!inst.has_abc()) throw InputError(construct_kind + " needs an abc, hyp or classical instance");
                return underlying(to_strange_graph(inst.abc, tol));
            };
            auto chosen_clique = [&](const ClassicalGraph& cg) {
                if (construct_clique) return parse_index_list(*construct_clique);
                return clique_number(cg).vertices;
            };
            AnyWitness w;
            const std::string& k = construct_kind;
            if (k == "icpovm")
                w.w = clique_icpovm(n);
            else if (k == "bipartite")
                w.w = clique_bipartite(n);
            else if (k == "symasym")
                w.w = clique_symasym(n);
            else if (k == "complete-minus-one")
                w.w = clique_complete_minus_one(n);
            else if (k == "classical-clique") {
                const ClassicalGraph cg = underlying_graph();
                w.w = clique_from_classical(cg, chosen_clique(cg));
            } else if (k == "reflexive") {
                const ClassicalGraph cg = underlying_graph();
                w.w = clique_reflexive_variant(cg, chosen_clique(cg));
            } else if (k == "fourier")
                w.w = fourier_colouring(n);
            else if (k == "components" || k == "colouring" || k == "independent" || k == "clique") {
                BoundsOptions opt;
                opt.tol = tol;
                opt.seed = g.seed;
                const ParameterReport r = analyze_instance(inst, opt, tol);
                if (k == "components" && r.components_witness)
                    w.w = *r.components_witness;
                else if (k == "colouring" && r.colouring_witness)
                    w.w = *r.colouring_witness;
                else if (k == "independent" && r.independence_witness)
                    w.w = *r.independence_witness;
                else if (k == "clique" && r.clique_witness)
                    w.w = *r.clique_witness;
                else
                    return report_error(err, kSemanticFailure, "semantic", "no " + k + " witness found");
            } else {
                throw InputError("unknown witness construction '" + k + "'");
            }
            const bool ok = check_witness(qg, w, tol);
            const std::string text = dump_canonical(witness_to_json(w, n));
            if (construct_out) {
                write_text_file(*construct_out, text);
                out << dump_canonical({{"type", to_string(w.kind())}, {"accepted", ok}, {"out", *construct_out}});
            } else {
                out << text;
            }
            if (!ok) err << dump_canonical({{"type", to_string(w.kind())}, {"accepted", false}});
            return ok ? kOk : kSemanticFailure;
        }

        if (*table_cmd) {
            if (table_n < 2 || table_n > 8) throw InputError("table needs 2 <= n <= 8");
            BoundsOptions opt;
            opt.tol = tol;
            opt.seed = g.seed;
            Json rows = Json::array();
            std::ostringstream md;
            md << "| Graph | family | edges | components | chi | alpha | omega |\n";
            md << "|---|---|---|---|---|---|---|\n";
            for (const auto& row : table_rows(table_n)) {
                const ParameterReport r = bounds_table(row.params, opt);
                Json j = report_to_json(r, false);
                j["graph"] = row.label;
                rows.push_back(std::move(j));
                md << "| " << row.label << " | " << r.family << " | " << r.edge_count << " | " << cell(r.components)
                   << " | " << cell(r.chromatic) << " | " << cell(r.independence) << " | " << cell(r.clique)
                   << " |\n";
            }
            if (table_format == "markdown")
                out << md.str();
            else
                out << dump_canonical({{"n", table_n}, {"rows", rows}});
            return kOk;
        }
    } catch (const AbcValidationError& e) {
        return report_error(err, kSemanticFailure, "validation", e.what(), abc_report_json(e.report()));
    } catch (const InputError& e) {
        return report_error(err, kInputError, "input", e.what());
    } catch (const BudgetError& e) {
        return report_error(err, kInputError, "budget", e.what());
    } catch (const InternalError& e) {
        return report_error(err, kInternalError, "internal", e.what());
    } catch (const ValidationError& e) {
        return report_error(err, kSemanticFailure, "validation", e.what());
    } catch (const ClassificationError& e) {
        return report_error(err, kSemanticFailure, "classification", e.what());
    } catch (const StateError& e) {
        return report_error(err, kSemanticFailure, "state", e.what());
    } catch (const SingularityError& e) {
        return report_error(err, kInternalError, "singular", e.what());
    } catch (const std::exception& e) {
        return report_error(err, kInternalError, "internal", e.what());
    }
    return kOk;
}

}  // namespace qgw::cli
