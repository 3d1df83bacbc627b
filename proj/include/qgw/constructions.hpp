#pragma once

// Explicit witnesses for the ABC families and the connectedness decision for ABC graphs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgw/abcgraphs.hpp"
#include "qgw/classical.hpp"
#include "qgw/witness.hpp"

namespace qgw {

ComponentWitness components_from_classical(const Partition& parts, std::size_t n);

/// Rank-1 projectors onto (1, ±i)/√2.
ComponentWitness gasym_n2_components();
/// Two-part witness for a single strange edge of phase theta on M_2:
/// ψ = (1, -e^{-iθ/2})/√2 and its orthogonal complement.
ComponentWitness strange_edge_n2_components(double theta);

/// Block-diagonal lift of witnesses on summands of dimensions dims.
ComponentWitness lift_union_components(const std::vector<ComponentWitness>& witnesses,
                                       const std::vector<std::size_t>& dims);

/// Perfect matching {0,1}, {2,3}, ... of phase-π strange edges.
AbcParams strange_pi_matching(std::size_t n);

ColouringWitness colouring_from_classical(const Partition& classes, std::size_t n);
IndependenceWitness independent_from_classical(const std::vector<std::size_t>& subset, std::size_t n);

/// Rank-1 projectors onto the discrete Fourier basis; colours any loopless X_{·,B}.
ColouringWitness fourier_colouring(std::size_t n);
/// Rank-1 projectors onto (1, ±i)/√2; colours G^sym on M_2.
ColouringWitness gsym_n2_colouring();

/// k = ⌊√n⌋ clique of X_{·, I - J/n}; n >= 4.
CliqueWitness clique_icpovm(std::size_t n);
/// Rows v_i of the IC-POVM isometry before stacking (exposed for the frame checks).
std::vector<CVector> icpovm_frame(std::size_t k);

/// (1/√2)[I; I] on the complete bipartite embedding K_{n/2,n/2}.
CliqueWitness clique_bipartite(std::size_t n);
/// Orthonormal basis of 1^⊥ (k = n - 1).
CliqueWitness clique_complete_minus_one(std::size_t n);
/// k = |clique| - 1 clique of X_{A,·} from a classical clique of A.
CliqueWitness clique_from_classical(const ClassicalGraph& g, const std::vector<std::size_t>& clique);
/// k = |clique| coordinate isometry on reflexive_variant(g).
CliqueWitness clique_reflexive_variant(const ClassicalGraph& g, const std::vector<std::size_t>& clique);
/// k = ⌈n/2⌉ clique of G^sym and G^asym.
CliqueWitness clique_symasym(std::size_t n);

enum class Connectivity { Connected, Disconnected, Unknown };
std::string to_string(Connectivity c);

struct ConnectivityResult {
    Connectivity status = Connectivity::Unknown;
    std::optional<ComponentWitness> witness;
    std::string provenance;
};

/// Undirected instances only (InputError otherwise).
ConnectivityResult is_connected_abc(const AbcParams& p, std::uint64_t seed = 0, std::size_t trials = 200,
                                    Tolerance tol = {});

}  // namespace qgw
