#pragma once

// Bounds and exact values for components, χ, α and ω with provenance and witnesses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgw/abcgraphs.hpp"
#include "qgw/classical.hpp"
#include "qgw/witness.hpp"

namespace qgw {

struct Bound {
    std::optional<std::size_t> lower;
    std::optional<std::size_t> upper;
    bool not_colourable = false;  // chromatic number only; theorem-backed
    std::vector<std::string> provenance;

    bool exact() const { return not_colourable || (lower && upper && *lower == *upper); }
    std::optional<std::size_t> value() const {
        if (!not_colourable && lower && upper && *lower == *upper) return lower;
        return std::nullopt;
    }
};

struct ParameterReport {
    std::size_t n = 0;
    std::string family;
    std::optional<std::string> canonical;
    std::size_t dim_s = 0;
    std::size_t edge_count = 0;
    bool loopless = true;

    Bound components, chromatic, independence, clique;

    std::optional<ComponentWitness> components_witness;
    std::optional<ColouringWitness> colouring_witness;
    std::optional<IndependenceWitness> independence_witness;
    std::optional<CliqueWitness> clique_witness;

    std::vector<std::string> notes;
};

struct BoundsOptions {
    Tolerance tol{};
    std::uint64_t seed = 0;
    std::size_t trials = 0;  // random isometries per clique size
    std::size_t exact_max_n = kExactMaxN;
};

/// Witness-only analysis of an arbitrary quantum graph.
ParameterReport analyze_graph(const QuantumGraph& g, const BoundsOptions& opt = {});

/// Family dispatch for undirected ABC instances; InputError for directed ones.
ParameterReport bounds_table(const AbcParams& p, const BoundsOptions& opt = {});

/// Throws InternalError if any lower bound exceeds its upper bound or a witness contradicts a bound.
void check_consistency(const ParameterReport& r);

}  // namespace qgw
