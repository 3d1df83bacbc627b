#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "qgw/cli.hpp"
#include "qgw/constructions.hpp"
#include "qgw/io.hpp"

using namespace qgw;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("qgw_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string write_instance(const TempDir& d, const std::string& name, const AbcParams& p) {
    const std::string f = d.file(name);
    write_text_file(f, dump_canonical(instance_to_json(Instance::from_abc(p))));
    return f;
}

}  // namespace

TEST_CASE("build writes canonical instances") {
    TempDir d;
    const Result r = run({"build", "asym", "--n", "3", "--out", d.file("asym.json")});
    CHECK(r.code == 0);
    const Instance inst = instance_from_json(read_json_file(d.file("asym.json")));
    CHECK(to_strange_graph(inst.abc) == strange_complete(3, kPi));

    const Result e = run({"build", "empty", "--n", "5"});
    CHECK(e.code == 0);
    const Instance ie = instance_from_json(parse_json(e.out));
    CHECK(ie.n == 5);
    CHECK(max_abs(ie.abc.A) + max_abs(ie.abc.B) + max_abs(ie.abc.C) == 0.0);

    const Result h = run({"build", "hyp", "--enumerate", "--n", "4"});
    CHECK(h.code == 0);
    CHECK(parse_json(h.out)["entries"].size() == 16);

    const Result c = run({"build", "classical", "--n", "4", "--edges", "0-1,1-2"});
    CHECK(c.code == 0);
    CHECK(instance_from_json(parse_json(c.out)).graph.edge_count() == 2);
}

TEST_CASE("build round trips through a file") {
    TempDir d;
    REQUIRE(run({"build", "sym", "--n", "4", "--out", d.file("a.json")}).code == 0);
    REQUIRE(run({"build", "abc", "--file", d.file("a.json"), "--out", d.file("b.json")}).code == 0);
    std::ifstream a(d.file("a.json")), b(d.file("b.json"));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
}

TEST_CASE("build input errors") {
    const Result bad = run({"build", "complete", "--n", "0"});
    CHECK(bad.code == 1);
    CHECK(parse_json(bad.err).contains("reason"));
    CHECK(run({"build", "nonsense", "--n", "3"}).code == 1);
    CHECK(run({"build", "hyp", "--n", "3", "--a", "0.5", "--a-prime", "0", "--b", "0.5", "--c", "0"}).code == 1);
    CHECK(run({"build", "classical", "--n", "3", "--edges", "0-7"}).code == 1);
    CHECK(run({"build", "classical", "--n", "2", "--graph", "cycle"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("validate exit codes") {
    TempDir d;
    const Result ok = run({"validate", write_instance(d, "k.json", canonical(CanonicalKind::Complete, 4))});
    CHECK(ok.code == 0);
    const Json j = parse_json(ok.out);
    CHECK(j["quantum_graph"] == true);
    CHECK(j["undirected"] == true);
    CHECK(j["loopless"] == true);

    AbcParams bad = canonical(CanonicalKind::Empty, 3);
    bad.A(0, 1) = bad.A(1, 0) = 0.3;
    const Result b = run({"validate", write_instance(d, "bad.json", bad)});
    CHECK(b.code == 2);
    const Json jb = parse_json(b.out);
    CHECK(jb["quantum_graph"] == false);
    CHECK(jb["bad_blocks"] == Json::array({Json::array({0, 1})}));

    AbcParams diag = AbcParams::zeros(3);
    diag.B(1, 1) = 1.0;
    CHECK(run({"validate", write_instance(d, "diag.json", diag)}).code == 1);
    write_text_file(d.file("junk.json"), "{ nope");
    CHECK(run({"validate", d.file("junk.json")}).code == 1);
    CHECK(run({"validate", d.file("missing.json")}).code == 1);
}

TEST_CASE("tolerance: flag wins over environment") {
    TempDir d;
    AbcParams p = canonical(CanonicalKind::Complete, 3);
    p.A(0, 1) += 1e-5;
    p.A(1, 0) += 1e-5;
    const std::string f = write_instance(d, "near.json", p);
    CHECK(run({"validate", f}).code == 2);
    ::setenv("QGW_TOL", "1e-3", 1);
    CHECK(run({"validate", f}).code == 0);
    CHECK(run({"--tol", "1e-9", "validate", f}).code == 2);
    ::setenv("QGW_TOL", "abc", 1);
    CHECK(run({"validate", f}).code == 1);
    ::unsetenv("QGW_TOL");
    CHECK(run({"--tol", "1e-3", "validate", f}).code == 0);
    CHECK(run({"--tol", "-1", "validate", f}).code == 1);
}

TEST_CASE("analyze reports and witness files") {
    TempDir d;
    const Result r = run({"analyze", write_instance(d, "e.json", canonical(CanonicalKind::Empty, 4))});
    CHECK(r.code == 0);
    const Json j = parse_json(r.out);
    for (const char* key : {"components", "chromatic_number", "independence_number", "clique_number"})
        CHECK(j["parameters"][key]["exact"] == true);
    CHECK(j["parameters"]["components"]["value"] == 4);
    CHECK(j["parameters"]["chromatic_number"]["value"] == 1);
    CHECK(j["parameters"]["independence_number"]["value"] == 4);
    CHECK(j["parameters"]["clique_number"]["value"] == 1);

    const std::string asym = write_instance(d, "asym2.json", canonical(CanonicalKind::Asym, 2));
    fs::create_directories(d.file("w"));
    const Result a = run({"analyze", asym, "--witness-dir", d.file("w")});
    CHECK(a.code == 0);
    CHECK(parse_json(a.out)["parameters"]["components"]["value"] == 2);
    for (const char* w : {"components.json", "colouring.json", "independent.json", "clique.json"}) {
        REQUIRE(fs::exists(d.file("w/" + std::string(w))));
        const Result c = run({"witness", "check", asym, d.file("w/" + std::string(w))});
        CHECK(c.code == 0);
        CHECK(parse_json(c.out)["accepted"] == true);
    }

    AbcParams b = AbcParams::zeros(9);
    b.B = CMatrix::Identity(9, 9) - all_ones(9) / 9.0;
    b.A = b.C = CMatrix(b.B.diagonal().asDiagonal());
    const Result w = run({"analyze", write_instance(d, "b9.json", b)});
    CHECK(w.code == 0);
    CHECK(parse_json(w.out)["parameters"]["clique_number"]["value"] == 3);

    AbcParams bad = canonical(CanonicalKind::Empty, 3);
    bad.A(0, 1) = bad.A(1, 0) = 0.3;
    CHECK(run({"analyze", write_instance(d, "bad.json", bad)}).code == 2);
}

TEST_CASE("every exact claim ships a witness that checks") {
    TempDir d;
    for (const char* kind : {"empty", "complete", "sym", "asym"}) {
        for (const char* n : {"2", "3", "4"}) {
            const std::string f = d.file(std::string(kind) + n + ".json");
            REQUIRE(run({"build", kind, "--n", n, "--out", f}).code == 0);
            const std::string dir = d.file(std::string(kind) + n);
            fs::create_directories(dir);
            const Result a = run({"analyze", f, "--witness-dir", dir});
            REQUIRE(a.code == 0);
            for (const auto& entry : fs::directory_iterator(dir))
                CHECK(run({"witness", "check", f, entry.path().string()}).code == 0);
        }
    }
}

TEST_CASE("strange rendering") {
    TempDir d;
    const Result s = run({"strange", write_instance(d, "sym.json", canonical(CanonicalKind::Sym, 3))});
    CHECK(s.code == 0);
    CHECK(s.out.find("0 -- 1 [style=dashed, label=\"\xCE\xB8=0.0000\"];") != std::string::npos);
    CHECK(s.out.find("1 -- 2 [style=dashed") != std::string::npos);
    const Result c = run({"strange", write_instance(d, "c.json", classical_embedding(ClassicalGraph::path(3)))});
    CHECK(c.out.find("dashed") == std::string::npos);
    CHECK(c.out.find("0 -- 1;") != std::string::npos);
    const Result e = run({"strange", write_instance(d, "e.json", AbcParams::zeros(3)), "--format", "json"});
    CHECK(e.code == 0);
    const Json je = parse_json(e.out);
    CHECK(je["n"] == 3);
    CHECK(je["classical_edges"].empty());
    CHECK(je["strange_edges"].empty());

    AbcParams dir = AbcParams::zeros(2);
    dir.A(0, 1) = 1.0;
    CHECK(run({"strange", write_instance(d, "dir.json", dir)}).code == 2);
}

TEST_CASE("witness construct and check") {
    TempDir d;
    AbcParams b = AbcParams::zeros(4);
    b.B = CMatrix::Identity(4, 4) - all_ones(4) / 4.0;
    b.A = b.C = CMatrix(b.B.diagonal().asDiagonal());
    const std::string f = write_instance(d, "b4.json", b);
    REQUIRE(run({"witness", "construct", "icpovm", f, "--out", d.file("ic.json")}).code == 0);
    CHECK(run({"witness", "check", f, d.file("ic.json")}).code == 0);

    StrangeGraph sg(5);
    sg.add_classical(0, 1);
    sg.add_classical(2, 3);
    const AbcParams xab = from_strange_graph(sg, random_abc(5, 3, RandomProfile{0.0, 0.0, 2, true}).B);
    const std::string fx = write_instance(d, "xab.json", xab);
    REQUIRE(run({"witness", "construct", "components", fx, "--out", d.file("comp.json")}).code == 0);
    CHECK(run({"witness", "check", fx, d.file("comp.json")}).code == 0);
    CHECK(witness_from_json(read_json_file(d.file("comp.json"))).kind() == WitnessKind::Components);

    const std::string kf = write_instance(d, "k3.json", canonical(CanonicalKind::Complete, 3));
    write_text_file(d.file("split.json"),
                    dump_canonical(witness_to_json(AnyWitness{components_from_classical({{0}, {1, 2}}, 3)}, 3)));
    const Result rej = run({"witness", "check", kf, d.file("split.json")});
    CHECK(rej.code == 2);
    CHECK(parse_json(rej.out)["accepted"] == false);

    write_text_file(d.file("wrong.json"),
                    dump_canonical(witness_to_json(AnyWitness{components_from_classical({{0}, {1}}, 2)}, 2)));
    CHECK(run({"witness", "check", kf, d.file("wrong.json")}).code == 1);

    const std::string sym4 = write_instance(d, "sym4.json", canonical(CanonicalKind::Sym, 4));
    REQUIRE(run({"witness", "construct", "symasym", sym4, "--out", d.file("sa.json")}).code == 0);
    CHECK(run({"witness", "check", sym4, d.file("sa.json")}).code == 0);
    CHECK(run({"witness", "construct", "icpovm", kf}).code != 0);
    CHECK(run({"witness", "construct", "teleport", kf}).code == 1);
}

TEST_CASE("table") {
    const Result r = run({"table", "--n", "4"});
    CHECK(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(j["rows"].size() == 9);
    const Json& kn = j["rows"][1];
    CHECK(kn["canonical"] == "complete");
    CHECK(kn["parameters"]["components"]["value"] == 1);
    CHECK(kn["parameters"]["chromatic_number"]["not_colourable"] == true);
    CHECK(kn["parameters"]["independence_number"]["value"] == 1);
    CHECK(kn["parameters"]["clique_number"]["value"] == 4);

    const Json t2 = parse_json(run({"table", "--n", "2"}).out);
    std::vector<std::size_t> edges;
    for (std::size_t i = 0; i < 4; ++i) edges.push_back(t2["rows"][i]["edge_count"].get<std::size_t>());
    CHECK(edges == std::vector<std::size_t>{0, 12, 8, 4});

    const Json a3 = parse_json(run({"table", "--n", "3"}).out)["rows"][3];
    CHECK(a3["parameters"]["components"]["value"] == 1);
    CHECK(a3["parameters"]["chromatic_number"]["value"] == 3);
    CHECK(a3["parameters"]["independence_number"]["value"] == 1);
    CHECK(a3["parameters"]["clique_number"]["value"] == 2);

    const Result md = run({"table", "--n", "3", "--format", "markdown"});
    CHECK(md.code == 0);
    CHECK(md.out.find("| K_n |") != std::string::npos);
    CHECK(run({"table", "--n", "9"}).code == 1);
    CHECK(run({"table", "--n", "1"}).code == 1);
}
