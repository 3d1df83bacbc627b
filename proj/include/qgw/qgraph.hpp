#pragma once

// Quantum graphs on M_n, stored as the orthogonal projector onto the operator space.

#include <cstddef>
#include <vector>

#include "qgw/numlin.hpp"
#include "qgw/superop.hpp"

namespace qgw {

class QuantumGraph {
public:
    /// Throws ValidationError (with both residuals) unless pi is a projector.
    static QuantumGraph from_projector(const SuperOp& pi, Tolerance tol = {});
    /// Operator space spanned by the given matrices (need not be orthonormal).
    static QuantumGraph from_span(std::size_t n, const std::vector<CMatrix>& generators, Tolerance tol = {});

    std::size_t n() const { return pi_.n(); }
    const SuperOp& projector() const { return pi_; }
    /// Orthonormal (Hilbert-Schmidt) basis of the operator space.
    const std::vector<CMatrix>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    SuperOp adjacency() const { return realign(pi_); }
    SuperOp normalized_adjacency() const { return realign(pi_).scaled(static_cast<double>(n())); }

    bool is_undirected(Tolerance tol = {}) const;
    bool is_loopless(Tolerance tol = {}) const;
    bool has_all_loops(Tolerance tol = {}) const;

    /// n^2 * dim S.
    std::size_t edge_count() const { return n() * n() * dim(); }

private:
    QuantumGraph(SuperOp pi, std::vector<CMatrix> basis) : pi_(std::move(pi)), basis_(std::move(basis)) {}

    SuperOp pi_;
    std::vector<CMatrix> basis_;
};

/// S -> S ⊕ C I. Throws StateError unless the graph is loopless.
QuantumGraph add_loops(const QuantumGraph& g, Tolerance tol = {});
/// S ⊕ C I -> S. Throws StateError unless the graph has all loops.
QuantumGraph remove_loops(const QuantumGraph& g, Tolerance tol = {});

/// Block-diagonal union on M_{k+l}.
QuantumGraph disjoint_union(const QuantumGraph& g1, const QuantumGraph& g2);

/// Operator-space distance max|Π1 - Π2|; throws on mismatched n.
double projector_distance(const QuantumGraph& g1, const QuantumGraph& g2);

/// max|(u ⊗ ū) G - G (u ⊗ ū)| for the adjacency G.
double invariance_defect(const QuantumGraph& g, const CMatrix& u);

/// True iff every u leaves the adjacency invariant. Throws InputError for non-unitary u.
bool check_group_invariance(const QuantumGraph& g, const std::vector<CMatrix>& unitaries, Tolerance tol = {});

enum class SymmetryGroup { U, O };

/// x -> beta x + alpha Tr(x) I + gamma x^T; gamma must vanish for U(n).
SuperOp invariant_family(SymmetryGroup group, std::size_t n, double alpha, double beta, double gamma);

/// Signed permutation matrix from a permutation and sign pattern.
CMatrix signed_permutation(const std::vector<std::size_t>& perm, const std::vector<int>& signs);
CMatrix random_signed_permutation(std::size_t n, std::uint64_t seed);
CMatrix random_diagonal_unitary(std::size_t n, std::uint64_t seed);
CMatrix random_diagonal_signs(std::size_t n, std::uint64_t seed);

}  // namespace qgw
