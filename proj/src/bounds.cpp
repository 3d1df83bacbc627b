#include "qgw/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qgw/constructions.hpp"

namespace qgw {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

std::size_t isqrt(std::size_t n) {
    std::size_t k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (k * k > n) --k;
    while ((k + 1) * (k + 1) <= n) ++k;
    return k;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t rank_of(const CMatrix& p) { return static_cast<std::size_t>(std::lround(p.trace().real())); }

class Builder {
public:
    Builder(const QuantumGraph& g, const BoundsOptions& opt) : g_(g), opt_(opt) {
        r.n = g.n();
        r.dim_s = g.dim();
        r.edge_count = g.edge_count();
        r.loopless = g.is_loopless(opt.tol);
        r.family = "generic";
    }

    ParameterReport r;

    void lower(Bound& b, std::size_t v, const std::string& why) {
        if (b.lower && *b.lower >= v) return;
        b.lower = v;
        b.provenance.push_back(">= " + std::to_string(v) + ": " + why);
    }

    void upper(Bound& b, std::size_t v, const std::string& why) {
        if (b.upper && *b.upper <= v) return;
        b.upper = v;
        b.provenance.push_back("<= " + std::to_string(v) + ": " + why);
    }

    void not_colourable(const std::string& why) {
        if (r.colouring_witness) throw InternalError("not-colourable claim contradicts a colouring witness");
        r.chromatic.not_colourable = true;
        r.chromatic.lower.reset();
        r.chromatic.upper.reset();
        r.chromatic.provenance.push_back("not colourable: " + why);
    }

    void offer(const ComponentWitness& w, const std::string& why, bool must) {
        if (!check_components(g_, w, opt_.tol)) {
            if (must) throw InternalError("component witness rejected: " + why);
            return;
        }
        const std::size_t k = w.projectors.size();
        if (!r.components_witness || k > r.components_witness->projectors.size()) r.components_witness = w;
        lower(r.components, k, "witness: " + why);
    }

    void offer(const ColouringWitness& w, const std::string& why, bool must) {
        if (!check_colouring(g_, w, opt_.tol)) {
            if (must) throw InternalError("colouring witness rejected: " + why);
            return;
        }
        if (r.chromatic.not_colourable) throw InternalError("colouring witness contradicts a not-colourable claim");
        const std::size_t k = w.projectors.size();
        if (!r.colouring_witness || k < r.colouring_witness->projectors.size()) r.colouring_witness = w;
        upper(r.chromatic, k, "witness: " + why);
    }

    void offer(const IndependenceWitness& w, const std::string& why, bool must) {
        if (!check_independent_set(g_, w, opt_.tol)) {
            if (must) throw InternalError("independence witness rejected: " + why);
            return;
        }
        const std::size_t k = rank_of(w.P);
        if (!r.independence_witness || k > rank_of(r.independence_witness->P)) r.independence_witness = w;
        lower(r.independence, k, "witness: " + why);
    }

    void offer(const CliqueWitness& w, const std::string& why, bool must) {
        if (!check_clique(g_, w, opt_.tol)) {
            if (must) throw InternalError("clique witness rejected: " + why);
            return;
        }
        const std::size_t k = w.k();
        if (!r.clique_witness || k > r.clique_witness->k()) r.clique_witness = w;
        lower(r.clique, k, "witness: " + why);
    }

    void generic() {
        const std::size_t n = g_.n();
        const CMatrix id = CMatrix::Identity(ei(n), ei(n));
        offer(ComponentWitness{{id}}, "single projector I", true);
        upper(r.components, n, "theorem: at most n nonzero projectors sum to I");

        if (g_.dim() == 0) {
            lower(r.chromatic, 1, "theorem: at least one class");
            offer(ColouringWitness{{id}}, "single class I", true);
        } else {
            lower(r.chromatic, 2, "theorem: a single class forces S = 0");
            if (g_.has_all_loops(opt_.tol)) not_colourable("theorem: I lies in S");
        }

        CMatrix e0 = CMatrix::Zero(ei(n), ei(n));
        e0(0, 0) = 1.0;
        offer(IndependenceWitness{e0}, "rank-1 projector", false);
        upper(r.independence, n, "theorem: rank at most n");

        offer(CliqueWitness{CMatrix::Identity(ei(n), 1)}, "unit vector", true);
        const std::size_t span_dim = g_.dim() + (g_.has_all_loops(opt_.tol) ? 0 : 1);
        upper(r.clique, std::min(n, isqrt(span_dim)), "theorem: k^2 <= dim(S + CI)");

        if (n <= kCoordinateSearchMaxN) {
            offer(search_coordinate_components(g_, n, opt_.tol), "coordinate search", true);
            if (!r.chromatic.not_colourable)
                if (auto w = search_coordinate_colouring(g_, n, opt_.tol)) offer(*w, "coordinate search", true);
            if (auto w = search_coordinate_independent(g_, opt_.tol)) offer(*w, "coordinate search", true);
        }
    }

    void clique_search() {
        if (opt_.trials == 0 || !r.clique.lower || !r.clique.upper) return;
        for (std::size_t k = *r.clique.lower + 1; k <= *r.clique.upper; ++k) {
            const auto w = random_clique_search(g_, k, opt_.trials, opt_.seed + k, opt_.tol);
            if (!w) break;
            offer(*w, "random isometry search", true);
        }
    }

    const QuantumGraph& graph() const { return g_; }
    const BoundsOptions& options() const { return opt_; }

private:
    const QuantumGraph& g_;
    BoundsOptions opt_;
};

// One projector per strange-graph component; isolated strange edges split in two.
ComponentWitness strange_split_witness(const StrangeGraph& sg, const Partition& parts) {
    const std::size_t n = sg.n();
    ComponentWitness w;
    for (const auto& part : parts) {
        if (part.size() == 2 && sg.is_strange(part[0], part[1])) {
            const ComponentWitness two = strange_edge_n2_components(sg.phase(part[0], part[1]));
            for (const auto& p : two.projectors) {
                CMatrix big = CMatrix::Zero(ei(n), ei(n));
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b) big(ei(part[a]), ei(part[b])) = p(ei(a), ei(b));
                w.projectors.push_back(std::move(big));
            }
            continue;
        }
        w.projectors.push_back(coordinate_projector(n, part));
    }
    return w;
}

bool is_balanced_complete_bipartite(const ClassicalGraph& a) {
    const std::size_t n = a.n();
    return n >= 2 && n % 2 == 0 && a == ClassicalGraph::complete_bipartite(n / 2, n / 2);
}

void canonical_rows(Builder& b, CanonicalKind kind) {
    ParameterReport& r = b.r;
    const std::size_t n = r.n;
    const CMatrix id = CMatrix::Identity(ei(n), ei(n));
    const std::size_t half = (n + 1) / 2;
    switch (kind) {
        case CanonicalKind::Empty: {
            Partition singles;
            for (std::size_t i = 0; i < n; ++i) singles.push_back({i});
            b.offer(components_from_classical(singles, n), "coordinate singletons", true);
            b.offer(IndependenceWitness{id}, "projector I", true);
            b.upper(r.clique, 1, "theorem: the empty graph has clique number 1");
            break;
        }
        case CanonicalKind::Complete:
            b.upper(r.components, 1, "theorem: K_n is connected");
            b.not_colourable("theorem: K_n is not colourable");
            b.upper(r.independence, 1, "theorem: K_n has independence number 1");
            b.offer(CliqueWitness{id}, "identity isometry", true);
            break;
        case CanonicalKind::Sym:
            b.upper(r.components, 1, "theorem: G^sym is connected");
            if (n == 2)
                b.offer(gsym_n2_colouring(), "rank-1 projectors onto (1, +-i)/sqrt2", true);
            else
                b.not_colourable("theorem: G^sym is not colourable for n >= 3");
            b.upper(r.independence, 1, "theorem: G^sym has independence number 1");
            b.offer(clique_symasym(n), "symasym isometry", true);
            b.upper(r.clique, half, "theorem: clique number of G^sym is ceil(n/2)");
            break;
        case CanonicalKind::Asym:
            if (n == 2)
                b.offer(gasym_n2_components(), "rank-1 projectors onto (1, +-i)/sqrt2", true);
            else
                b.upper(r.components, 1, "theorem: G^asym is connected for n >= 3");
            {
                Partition singles;
                for (std::size_t i = 0; i < n; ++i) singles.push_back({i});
                b.offer(colouring_from_classical(singles, n), "coordinate singletons", true);
            }
            b.lower(r.chromatic, n, "theorem: chromatic number of G^asym is n");
            b.upper(r.independence, 1, "theorem: G^asym has independence number 1");
            b.offer(clique_symasym(n), "symasym isometry", true);
            b.upper(r.clique, half, "theorem: clique number of G^asym is ceil(n/2)");
            break;
    }
}

void a_only_rows(Builder& b, const ClassicalGraph& a) {
    ParameterReport& r = b.r;
    const std::size_t n = r.n;
    const Partition comps = components(a);
    b.offer(components_from_classical(comps, n), "coordinate projectors on components of A", true);
    b.upper(r.components, comps.size(), "theorem: X_{A,.} has the components of A");

    const ColouringResult chi = chromatic_number(a);
    b.offer(colouring_from_classical(chi.classes, n), "coordinate colouring from A", true);
    b.lower(r.chromatic, chi.chi, "theorem: chi(X_{A,.}) = chi(A)");

    const VertexSetResult alpha = independence_number(a);
    b.offer(independent_from_classical(alpha.vertices, n), "coordinate independent set of A", true);
    b.upper(r.independence, alpha.size, "theorem: alpha(X_{A,.}) = alpha(A)");

    if (n >= 2) b.upper(r.clique, n - 1, "theorem: clique number of X_{A,.} is at most n - 1");
    const VertexSetResult omega = clique_number(a);
    if (omega.size >= 2) b.offer(clique_from_classical(a, omega.vertices), "classical clique of A", true);
    if (n >= 2 && a.edge_count() == n * (n - 1) / 2)
        b.offer(clique_complete_minus_one(n), "orthonormal basis of 1-perp", true);
    if (is_balanced_complete_bipartite(a)) b.offer(clique_bipartite(n), "(1/sqrt2)[I; I]", true);
}

void b_only_rows(Builder& b, const AbcParams& p) {
    ParameterReport& r = b.r;
    const Tolerance tol = b.options().tol;
    const std::size_t n = r.n;
    const std::size_t rk = rank(p.B, tol);
    const std::size_t ker = n - rk;
    Partition singles;
    for (std::size_t i = 0; i < n; ++i) singles.push_back({i});
    b.offer(components_from_classical(singles, n), "coordinate singletons", true);

    b.lower(r.chromatic, ceil_div(n, ker), "theorem: chi(X_{.,B}) >= n / dim ker B");
    b.offer(fourier_colouring(n), "Fourier basis projectors", true);

    b.lower(r.independence, 1 + (n - 1) / (rk + 1), "theorem: alpha(X_{.,B}) >= 1 + floor((n-1)/(rk B + 1))");
    b.upper(r.independence, n - rk, "theorem: alpha(X_{.,B}) <= n - rk B");

    b.upper(r.clique, isqrt(rk + 1), "theorem: clique number of X_{.,B} is at most sqrt(rk B + 1)");
    const CMatrix target = CMatrix::Identity(ei(n), ei(n)) - all_ones(n) / static_cast<double>(n);
    if (n >= 4 && max_abs(p.B - target) <= tol.eps()) b.offer(clique_icpovm(n), "IC-POVM isometry", true);
    r.notes.push_back("the EqRows(B) term of the independence lower bound is not implemented");
}

void ac_rows(Builder& b, const AbcParams& p, const StrangeGraph& sg, bool b_trivial) {
    ParameterReport& r = b.r;
    const std::size_t n = r.n;
    const Tolerance tol = b.options().tol;
    const ClassicalGraph u = underlying(sg);
    const Partition comps = components(sg);
    b.offer(components_from_classical(comps, n), "coordinate projectors on strange-graph components", true);
    b.offer(strange_split_witness(sg, comps), "strange-graph components with isolated strange edges split",
            b_trivial);
    const ConnectivityResult conn = is_connected_abc(p, b.options().seed, 200, tol);
    if (conn.status == Connectivity::Connected) b.upper(r.components, 1, conn.provenance);
    if (conn.witness) b.offer(*conn.witness, conn.provenance, true);

    if (b_trivial) {
        const ColouringResult chi = chromatic_number(u);
        b.offer(colouring_from_classical(chi.classes, n), "coordinate colouring of the strange graph", true);
        const VertexSetResult alpha = independence_number(u);
        b.offer(independent_from_classical(alpha.vertices, n), "coordinate independent set of the strange graph",
                true);
        b.upper(r.independence, alpha.size, "theorem: alpha(X_{A,.,C}) = alpha of the strange graph");
        r.notes.push_back("clique number of X_{A,.,C} is only bounded generically");
    }
    if (!sg.strange_edges().empty())
        r.notes.push_back("strange-edge phases are not used for classical parameters of the strange graph");
}

void split_rows(Builder& b, const ParameterReport& ac, const ParameterReport& bp) {
    ParameterReport& r = b.r;
    const std::string why = "theorem: splitting into X_{A,.,C} and X_{.,B}";
    if (ac.components.upper && bp.components.upper)
        b.upper(r.components, std::min(*ac.components.upper, *bp.components.upper), why);
    if (ac.components_witness)
        b.offer(*ac.components_witness, "components of X_{A,.,C}",
                coordinate_parts(ac.components_witness->projectors, b.options().tol).has_value());

    if (ac.chromatic.not_colourable || bp.chromatic.not_colourable) {
        b.not_colourable(why);
    } else {
        const std::size_t lo = std::max(ac.chromatic.lower.value_or(1), bp.chromatic.lower.value_or(1));
        b.lower(r.chromatic, lo, why);
    }
    if (ac.independence.upper && bp.independence.upper)
        b.upper(r.independence, std::min(*ac.independence.upper, *bp.independence.upper), why);

    if (ac.clique_witness) b.offer(*ac.clique_witness, "clique of X_{A,.,C} (splitting)", true);
    if (bp.clique_witness) b.offer(*bp.clique_witness, "clique of X_{.,B} (splitting)", true);
}

}  // namespace

ParameterReport analyze_graph(const QuantumGraph& g, const BoundsOptions& opt) {
    Builder b(g, opt);
    b.generic();
    b.clique_search();
    check_consistency(b.r);
    return b.r;
}

ParameterReport bounds_table(const AbcParams& p, const BoundsOptions& opt) {
    const AbcReport rep = validate(p, opt.tol);
    if (!rep.undirected) throw InputError("bounds_table: instance is not an undirected quantum graph");
    const QuantumGraph g = build(p, opt.tol);
    Builder b(g, opt);
    ParameterReport& r = b.r;
    const AbcFamily fam = family_of(p, opt.tol);
    r.family = to_string(fam);
    b.generic();

    if (!rep.loopless) {
        r.notes.push_back("instance has loops; only witness-based bounds are reported");
    } else if (p.n > std::min(opt.exact_max_n, kExactMaxN)) {
        r.notes.push_back("family bounds need exact classical parameters, limited to n <= " +
                          std::to_string(std::min(opt.exact_max_n, kExactMaxN)));
    } else if (const auto kind = match_canonical(p, opt.tol)) {
        r.canonical = to_string(*kind);
        canonical_rows(b, *kind);
    } else {
        const StrangeGraph sg = to_strange_graph(p, opt.tol);
        switch (fam) {
            case AbcFamily::Empty:
                break;
            case AbcFamily::AOnly:
                a_only_rows(b, underlying(sg));
                break;
            case AbcFamily::BOnly:
                b_only_rows(b, p);
                break;
            case AbcFamily::AC:
                ac_rows(b, p, sg, true);
                break;
            case AbcFamily::AB:
            case AbcFamily::ABC: {
                BoundsOptions sub = opt;
                sub.trials = 0;
                const ParameterReport ac = bounds_table(ac_part(p), sub);
                const ParameterReport bp = bounds_table(b_part(p), sub);
                split_rows(b, ac, bp);
                if (fam == AbcFamily::ABC) ac_rows(b, p, sg, false);
                r.notes.insert(r.notes.end(), bp.notes.begin(), bp.notes.end());
                if (fam == AbcFamily::AB) r.notes.push_back("X_{A,B} is not colourable in general");
                break;
            }
        }
    }
    b.clique_search();
    check_consistency(r);
    return r;
}

void check_consistency(const ParameterReport& r) {
    auto ordered = [](const Bound& b, const char* name) {
        if (b.lower && b.upper && *b.lower > *b.upper)
            throw InternalError(std::string("bounds contradict each other for ") + name);
    };
    ordered(r.components, "components");
    ordered(r.chromatic, "chromatic number");
    ordered(r.independence, "independence number");
    ordered(r.clique, "clique number");
    if (r.chromatic.not_colourable && r.colouring_witness)
        throw InternalError("colouring witness for a graph claimed not colourable");
    if (r.components_witness && r.components.upper && r.components_witness->projectors.size() > *r.components.upper)
        throw InternalError("component witness exceeds the upper bound");
    if (r.colouring_witness && r.chromatic.lower && r.colouring_witness->projectors.size() < *r.chromatic.lower)
        throw InternalError("colouring witness beats the lower bound");
    if (r.independence_witness && r.independence.upper && rank_of(r.independence_witness->P) > *r.independence.upper)
        throw InternalError("independent set exceeds the upper bound");
    if (r.clique_witness && r.clique.upper && r.clique_witness->k() > *r.clique.upper)
        throw InternalError("clique exceeds the upper bound");
}

}  // namespace qgw
