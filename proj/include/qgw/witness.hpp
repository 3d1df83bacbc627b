#pragma once

// Witnesses for components, colourings, independent sets and cliques, with their checkers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgw/classical.hpp"
#include "qgw/numlin.hpp"
#include "qgw/qgraph.hpp"

namespace qgw {

struct ComponentWitness {
    std::vector<CMatrix> projectors;
};

struct ColouringWitness {
    std::vector<CMatrix> projectors;
};

struct IndependenceWitness {
    CMatrix P;
};

struct CliqueWitness {
    CMatrix V;
    std::size_t k() const { return static_cast<std::size_t>(V.cols()); }
};

/// Throws InputError unless the list is nonzero projectors of size n summing to I.
void require_projector_partition(const std::vector<CMatrix>& ps, std::size_t n, Tolerance tol, const char* what);

bool check_components(const QuantumGraph& g, const ComponentWitness& w, Tolerance tol = {});
bool check_colouring(const QuantumGraph& g, const ColouringWitness& w, Tolerance tol = {});
bool check_independent_set(const QuantumGraph& g, const IndependenceWitness& w, Tolerance tol = {});

struct CliqueCriteria {
    bool span_criterion = false;       // span{V^† b V} + C I = M_k
    bool injectivity_criterion = false;  // y -> Π vec(V y V^†) injective on traceless y
};

/// Both criteria, without the agreement check.
CliqueCriteria clique_criteria(const QuantumGraph& g, const CliqueWitness& w, Tolerance tol = {});
/// Throws InternalError if the two criteria disagree.
bool check_clique(const QuantumGraph& g, const CliqueWitness& w, Tolerance tol = {});

/// Coordinate projector onto span{e_i : i in s}.
CMatrix coordinate_projector(std::size_t n, const std::vector<std::size_t>& s);

inline constexpr std::size_t kCoordinateSearchMaxN = 12;

/// Finest coordinate partition passing check_components, merged down to at most max_parts parts.
ComponentWitness search_coordinate_components(const QuantumGraph& g, std::size_t max_parts, Tolerance tol = {});
/// Coordinate colouring with at most k classes using the fewest classes, if one exists.
std::optional<ColouringWitness> search_coordinate_colouring(const QuantumGraph& g, std::size_t k, Tolerance tol = {});
/// Largest coordinate independent set, first in lexicographic order; none only if no vertex qualifies.
std::optional<IndependenceWitness> search_coordinate_independent(const QuantumGraph& g, Tolerance tol = {});

/// Trial 0 is the first k standard basis vectors; later trials are seeded random isometries.
std::optional<CliqueWitness> random_clique_search(const QuantumGraph& g, std::size_t k, std::size_t trials,
                                                  std::uint64_t seed, Tolerance tol = {});

/// Partition of the coordinates of a coordinate-projector witness, if every projector is one.
std::optional<Partition> coordinate_parts(const std::vector<CMatrix>& ps, Tolerance tol = {});

}  // namespace qgw
