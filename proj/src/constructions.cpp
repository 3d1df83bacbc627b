#include "qgw/constructions.hpp"

#include <cmath>
#include <random>

namespace qgw {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

CMatrix rank_one(const CVector& v) { return v * v.adjoint(); }

std::size_t isqrt(std::size_t n) {
    std::size_t k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (k * k > n) --k;
    while ((k + 1) * (k + 1) <= n) ++k;
    return k;
}

}  // namespace

ComponentWitness components_from_classical(const Partition& parts, std::size_t n) {
    if (!is_partition(parts, n)) throw InputError("components_from_classical: not a partition of [n]");
    ComponentWitness w;
    for (const auto& p : parts) w.projectors.push_back(coordinate_projector(n, p));
    return w;
}

ComponentWitness strange_edge_n2_components(double theta) {
    const cplx z = std::polar(1.0, -theta / 2.0);
    CVector psi(2), perp(2);
    psi << 1.0, -z;
    perp << 1.0, z;
    psi /= std::sqrt(2.0);
    perp /= std::sqrt(2.0);
    return ComponentWitness{{rank_one(psi), rank_one(perp)}};
}

ComponentWitness gasym_n2_components() {
    CVector plus(2), minus(2);
    plus << 1.0, cplx(0.0, 1.0);
    minus << 1.0, cplx(0.0, -1.0);
    plus /= std::sqrt(2.0);
    minus /= std::sqrt(2.0);
    return ComponentWitness{{rank_one(plus), rank_one(minus)}};
}

ComponentWitness lift_union_components(const std::vector<ComponentWitness>& witnesses,
                                       const std::vector<std::size_t>& dims) {
    if (witnesses.size() != dims.size()) throw InputError("lift_union_components: one dimension per witness");
    std::size_t total = 0;
    for (auto d : dims) total += d;
    ComponentWitness out;
    std::size_t offset = 0;
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
        for (const auto& p : witnesses[w].projectors) {
            if (p.rows() != ei(dims[w]) || p.cols() != ei(dims[w]))
                throw InputError("lift_union_components: witness " + std::to_string(w) +
                                 " does not match its summand dimension");
            CMatrix big = CMatrix::Zero(ei(total), ei(total));
            big.block(ei(offset), ei(offset), ei(dims[w]), ei(dims[w])) = p;
            out.projectors.push_back(std::move(big));
        }
        offset += dims[w];
    }
    return out;
}

AbcParams strange_pi_matching(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw InputError("strange_pi_matching: n must be even and positive");
    StrangeGraph sg(n);
    for (std::size_t i = 0; i < n; i += 2) sg.add_strange(i, i + 1, kPi);
    return from_strange_graph(sg);
}

ColouringWitness colouring_from_classical(const Partition& classes, std::size_t n) {
    if (!is_partition(classes, n)) throw InputError("colouring_from_classical: not a partition of [n]");
    ColouringWitness w;
    for (const auto& c : classes) w.projectors.push_back(coordinate_projector(n, c));
    return w;
}

IndependenceWitness independent_from_classical(const std::vector<std::size_t>& subset, std::size_t n) {
    if (subset.empty()) throw InputError("independent_from_classical: subset is empty");
    std::vector<char> seen(n, 0);
    for (auto v : subset) {
        if (v >= n || seen[v]) throw InputError("independent_from_classical: invalid subset");
        seen[v] = 1;
    }
    return IndependenceWitness{coordinate_projector(n, subset)};
}

ColouringWitness fourier_colouring(std::size_t n) {
    if (n == 0) throw InputError("fourier_colouring: n must be positive");
    ColouringWitness w;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t s = 0; s < n; ++s) {
        CVector f(ei(n));
        for (std::size_t j = 0; j < n; ++j)
            f(ei(j)) = std::polar(scale, 2.0 * kPi * static_cast<double>(s * j) / static_cast<double>(n));
        w.projectors.push_back(rank_one(f));
    }
    return w;
}

ColouringWitness gsym_n2_colouring() { return ColouringWitness{gasym_n2_components().projectors}; }

std::vector<CVector> icpovm_frame(std::size_t k) {
    if (k == 0) throw InputError("icpovm_frame: k must be positive");
    std::vector<CVector> w;
    const auto e = [k](std::size_t i) {
        CVector v = CVector::Zero(ei(k));
        v(ei(i)) = 1.0;
        return v;
    };
    for (std::size_t s = 0; s < k; ++s) w.push_back(e(s));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t) w.push_back((e(s) + e(t)) / std::sqrt(2.0));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t) w.push_back((e(s) + cplx(0.0, 1.0) * e(t)) / std::sqrt(2.0));
    CMatrix f = CMatrix::Zero(ei(k), ei(k));
    for (const auto& v : w) f += rank_one(v);
    const CMatrix g = inv_sqrt_psd(f);
    for (auto& v : w) v = g * v;
    return w;
}

CliqueWitness clique_icpovm(std::size_t n) {
    if (n < 4) throw InputError("clique_icpovm: needs n >= 4");
    const std::size_t k = isqrt(n);
    const std::size_t m = k * k;
    const std::vector<CVector> u = icpovm_frame(k);
    std::vector<CVector> v;
    const std::size_t copies = n - m + 1;
    for (std::size_t c = 0; c < copies; ++c) v.push_back(u[0] / std::sqrt(static_cast<double>(copies)));
    for (std::size_t l = 1; l < m; ++l) v.push_back(u[l]);
    CMatrix big(ei(n), ei(k));
    for (std::size_t i = 0; i < n; ++i) big.row(ei(i)) = v[i].adjoint();
    return CliqueWitness{big};
}

CliqueWitness clique_bipartite(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw InputError("clique_bipartite: n must be even and positive");
    const auto h = ei(n / 2);
    CMatrix v(ei(n), h);
    v << CMatrix::Identity(h, h), CMatrix::Identity(h, h);
    return CliqueWitness{v / std::sqrt(2.0)};
}

CliqueWitness clique_complete_minus_one(std::size_t n) {
    if (n < 2) throw InputError("clique_complete_minus_one: needs n >= 2");
    CMatrix v = CMatrix::Zero(ei(n), ei(n - 1));
    for (std::size_t j = 1; j < n; ++j) {
        const double norm = std::sqrt(static_cast<double>(j * (j + 1)));
        for (std::size_t i = 0; i < j; ++i) v(ei(i), ei(j - 1)) = 1.0 / norm;
        v(ei(j), ei(j - 1)) = -static_cast<double>(j) / norm;
    }
    return CliqueWitness{v};
}

CliqueWitness clique_from_classical(const ClassicalGraph& g, const std::vector<std::size_t>& clique) {
    if (clique.size() < 2) throw InputError("clique_from_classical: needs a clique of size >= 2");
    for (auto c : clique)
        if (c >= g.n()) throw InputError("clique_from_classical: vertex out of range");
    if (!is_clique(g, clique)) throw InputError("clique_from_classical: vertices do not form a clique");
    const std::size_t k = clique.size();
    CMatrix w = CMatrix::Zero(ei(g.n()), ei(k));
    for (std::size_t i = 0; i < k; ++i) w(ei(clique[i]), ei(i)) = 1.0;
    return CliqueWitness{w * clique_complete_minus_one(k).V};
}

CliqueWitness clique_reflexive_variant(const ClassicalGraph& g, const std::vector<std::size_t>& clique) {
    if (clique.empty()) throw InputError("clique_reflexive_variant: clique is empty");
    for (auto c : clique)
        if (c >= g.n()) throw InputError("clique_reflexive_variant: vertex out of range");
    if (!is_clique(g, clique)) throw InputError("clique_reflexive_variant: vertices do not form a clique");
    CMatrix v = CMatrix::Zero(ei(g.n()), ei(clique.size()));
    for (std::size_t s = 0; s < clique.size(); ++s) v(ei(clique[s]), ei(s)) = 1.0;
    return CliqueWitness{v};
}

CliqueWitness clique_symasym(std::size_t n) {
    if (n < 2) throw InputError("clique_symasym: needs n >= 2");
    const std::size_t k = (n + 1) / 2;
    const cplx i1(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    CMatrix v = CMatrix::Zero(ei(n), ei(k));
    if (n % 2 == 0) {
        for (std::size_t j = 0; j < k; ++j) {
            v(ei(j), ei(j)) = r;
            v(ei(j + k), ei(j)) = i1 * r;
        }
    } else {
        v(ei(n - 1), 0) = 1.0;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            v(ei(j), ei(j + 1)) = r;
            v(ei(j + k - 1), ei(j + 1)) = i1 * r;
        }
    }
    return CliqueWitness{v};
}

std::string to_string(Connectivity c) {
    switch (c) {
        case Connectivity::Connected: return "connected";
        case Connectivity::Disconnected: return "disconnected";
        case Connectivity::Unknown: return "unknown";
    }
    return "?";
}

ConnectivityResult is_connected_abc(const AbcParams& p, std::uint64_t seed, std::size_t trials, Tolerance tol) {
    if (!validate(p, tol).undirected) throw InputError("is_connected_abc: instance is not an undirected quantum graph");
    ConnectivityResult out;
    if (p.n == 1) {
        out.status = Connectivity::Connected;
        out.provenance = "theorem: M_1 has a single vertex";
        return out;
    }
    const QuantumGraph g = build(p, tol);
    const StrangeGraph sg = to_strange_graph(p, tol);
    const Partition parts = components(sg);
    if (parts.size() > 1) {
        ComponentWitness w = components_from_classical(parts, p.n);
        if (!check_components(g, w, tol))
            throw InternalError("is_connected_abc: strange-graph components rejected by the checker");
        out.status = Connectivity::Disconnected;
        out.witness = std::move(w);
        out.provenance = "witness: coordinate projectors on strange-graph components";
        return out;
    }
    if (!sg.classical_edges().empty()) {
        out.status = Connectivity::Connected;
        out.provenance = "theorem: connected strange graph with a classical edge";
        return out;
    }
    if (p.n >= 3) {
        out.status = Connectivity::Connected;
        out.provenance = "theorem: n >= 3 and the strange graph is connected";
        return out;
    }
    const double theta = sg.strange_edges().begin()->second;
    ComponentWitness w = strange_edge_n2_components(theta);
    if (check_components(g, w, tol)) {
        out.status = Connectivity::Disconnected;
        out.witness = std::move(w);
        out.provenance = "witness: two-part solution for a single strange edge";
        return out;
    }
    if (max_abs(p.B) <= tol.eps())
        throw InternalError("is_connected_abc: single strange edge witness rejected with trivial B");
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const CMatrix u = random_unitary(2, rng());
        ComponentWitness cand{{rank_one(u.col(0)), rank_one(u.col(1))}};
        if (check_components(g, cand, tol)) {
            out.status = Connectivity::Disconnected;
            out.witness = std::move(cand);
            out.provenance = "witness: randomized search";
            return out;
        }
    }
    out.status = Connectivity::Unknown;
    out.provenance = "randomized search found no splitting";
    return out;
}

}  // namespace qgw
