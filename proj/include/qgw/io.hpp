#pragma once

// JSON files for instances, witnesses and reports.
//
// Output is canonical: keys sorted, complex numbers as [re, im], matrices as
// row-major nested arrays, doubles printed with 17 significant digits.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qgw/abcgraphs.hpp"
#include "qgw/bounds.hpp"
#include "qgw/classical.hpp"
#include "qgw/witness.hpp"

namespace qgw {

using Json = nlohmann::json;

std::string dump_canonical(const Json& j);
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);
/// Entries may be [re, im] or plain numbers.
CMatrix matrix_from_json(const Json& j, const char* what);

enum class InstanceKind { Abc, Hyp, Classical, Projector };
std::string to_string(InstanceKind k);

struct Instance {
    InstanceKind kind = InstanceKind::Abc;
    std::size_t n = 0;
    AbcParams abc;        // Abc, and derived for Hyp and Classical
    HypParams hyp;        // Hyp
    ClassicalGraph graph; // Classical
    CMatrix projector;    // Projector

    bool has_abc() const { return kind != InstanceKind::Projector; }
    static Instance from_abc(const AbcParams& p);
    static Instance from_hyp(const HypParams& h);
    static Instance from_classical(const ClassicalGraph& g);
    static Instance from_projector(std::size_t n, const CMatrix& pi);
};

Json instance_to_json(const Instance& inst);
/// InputError on malformed documents.
Instance instance_from_json(const Json& j);

Json hyp_enumeration_to_json(std::size_t n, const std::vector<HypEntry>& entries);

enum class WitnessKind { Components, Colouring, Independent, Clique };
std::string to_string(WitnessKind k);

struct AnyWitness {
    std::variant<ComponentWitness, ColouringWitness, IndependenceWitness, CliqueWitness> w;
    WitnessKind kind() const { return static_cast<WitnessKind>(w.index()); }
};

Json witness_to_json(const AnyWitness& w, std::size_t n);
AnyWitness witness_from_json(const Json& j);

/// Checker dispatch on the witness kind.
bool check_witness(const QuantumGraph& g, const AnyWitness& w, Tolerance tol);

Json report_to_json(const ParameterReport& r, bool with_witnesses = true);
Json strange_to_json(const StrangeGraph& sg);
std::string strange_to_dot(const StrangeGraph& sg);

}  // namespace qgw
