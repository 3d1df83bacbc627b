#pragma once

// DU(n)/DO(n)/Hyp(n)-invariant quantum graphs X_{A,B,C}.
//
// The operator-space projector of X_{A,B,C} acts as
//
//     x_{ij} -> Å_{ij} x_{ij} + δ_{ij} (B diag x)_i + C̊_{ij} x_{ji}
//
// which is B on the diagonal and [[A_ij, C_ij], [C_ji, A_ji]] on each
// off-diagonal pair; the adjacency is its realignment.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgw/classical.hpp"
#include "qgw/numlin.hpp"
#include "qgw/qgraph.hpp"
#include "qgw/superop.hpp"

namespace qgw {

struct AbcParams {
    std::size_t n = 0;
    CMatrix A, B, C;

    static AbcParams zeros(std::size_t n);
};

struct AbcReport {
    bool quantum_graph = false;
    bool undirected = false;
    bool loopless = false;
    std::vector<std::string> reasons;
    std::vector<VertexPair> bad_blocks;
};

class AbcValidationError : public ValidationError {
public:
    explicit AbcValidationError(AbcReport r);
    const AbcReport& report() const { return report_; }

private:
    AbcReport report_;
};

/// Checks shapes, finiteness and the shared diagonal; InputError names the first offending index.
void check_shape(const AbcParams& p, Tolerance tol = {});

AbcReport validate(const AbcParams& p, Tolerance tol = {});

/// The map x_{ij} -> P̊_{ij} x_{ij} + δ_{ij} (Q diag x)_i + R̊_{ij} x_{ji} (no validation).
SuperOp ldoi_map(const CMatrix& p, const CMatrix& q, const CMatrix& r);
inline SuperOp ldoi_map(const AbcParams& p) { return ldoi_map(p.A, p.B, p.C); }

/// Throws AbcValidationError unless validate(p).quantum_graph.
QuantumGraph build(const AbcParams& p, Tolerance tol = {});

struct BlockDecomposition {
    CMatrix B;
    std::map<VertexPair, Eigen::Matrix2cd> blocks;  // i < j
};

BlockDecomposition decompose(const AbcParams& p, Tolerance tol = {});
/// Inverse of decompose as a superoperator.
SuperOp reassemble(const BlockDecomposition& d);

/// Throws ValidationError for directed or invalid instances, ClassificationError for unclassifiable blocks.
StrangeGraph to_strange_graph(const AbcParams& p, Tolerance tol = {});
/// Throws InputError unless b is a real symmetric projector.
AbcParams from_strange_graph(const StrangeGraph& sg, const std::optional<CMatrix>& b = std::nullopt,
                             Tolerance tol = {});

enum class CanonicalKind { Empty, Complete, Sym, Asym };
CanonicalKind parse_canonical_kind(const std::string& s);
std::string to_string(CanonicalKind k);
AbcParams canonical(CanonicalKind kind, std::size_t n);

struct HypParams {
    std::size_t n = 0;
    double a = 0, a_prime = 0, b = 0, c = 0;
};

struct HypEntry {
    HypParams h;
    bool loopless = false;
};

/// A = aI + a'J̊, B = aI + bJ̊, C = aI + cJ̊.
AbcParams hyp_build(const HypParams& h);
/// The 16 valid quadruples, ordered by (a,b) then (a',c).
std::vector<HypEntry> hyp_enumerate(std::size_t n);
HypParams hyp_canonical(CanonicalKind kind, std::size_t n);

AbcParams classical_embedding(const ClassicalGraph& g);

struct RandomProfile {
    double classical_edge_prob = 0.0;
    double strange_edge_prob = 0.0;
    std::size_t b_rank = 0;
    bool loopless = true;
};

AbcParams random_abc(std::size_t n, std::uint64_t seed, const RandomProfile& profile);

/// X_{A,·,C}: diagonals and the B-term dropped.
AbcParams ac_part(const AbcParams& p);
/// X_{·,B}: Å = C̊ = 0.
AbcParams b_part(const AbcParams& p);

/// X_{A + (1 - 1/n) I, I - J/n} for a classical graph A.
AbcParams reflexive_variant(const ClassicalGraph& g);

bool offdiag_zero(const CMatrix& m, Tolerance tol = {});

enum class AbcFamily { Empty, AOnly, BOnly, AB, AC, ABC };
/// Which of Å, B, C̊ vanish (B counts as present when nonzero).
AbcFamily family_of(const AbcParams& p, Tolerance tol = {});
std::string to_string(AbcFamily f);

/// Canonical kind whose hyp quadruple matches p exactly (within tol), if any.
std::optional<CanonicalKind> match_canonical(const AbcParams& p, Tolerance tol = {});

}  // namespace qgw
