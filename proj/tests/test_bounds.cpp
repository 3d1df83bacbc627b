#include <doctest.h>

#include "oracles.hpp"
#include "qgw/bounds.hpp"
#include "qgw/constructions.hpp"

using namespace qgw;
using oracle::ei;

namespace {

std::size_t witness_rank(const CMatrix& p) { return static_cast<std::size_t>(std::lround(p.trace().real())); }

void check_exact(const Bound& b, std::size_t v) {
    REQUIRE(b.value().has_value());
    CHECK(*b.value() == v);
}

/// Every witness in the report passes its checker and sits inside the bounds.
void check_witnesses(const QuantumGraph& g, const ParameterReport& r) {
    if (r.components_witness) {
        CHECK(check_components(g, *r.components_witness));
        const std::size_t c = r.components_witness->projectors.size();
        if (r.components.lower) CHECK(*r.components.lower <= c);
        if (r.components.upper) CHECK(c <= *r.components.upper);
    }
    if (r.colouring_witness) {
        CHECK(check_colouring(g, *r.colouring_witness));
        CHECK_FALSE(r.chromatic.not_colourable);
        if (r.chromatic.lower) CHECK(*r.chromatic.lower <= r.colouring_witness->projectors.size());
    }
    if (r.independence_witness) {
        CHECK(check_independent_set(g, *r.independence_witness));
        if (r.independence.upper) CHECK(witness_rank(r.independence_witness->P) <= *r.independence.upper);
    }
    if (r.clique_witness) {
        CHECK(check_clique(g, *r.clique_witness));
        if (r.clique.upper) CHECK(r.clique_witness->k() <= *r.clique.upper);
    }
    for (const Bound* b : {&r.components, &r.chromatic, &r.independence, &r.clique})
        if (b->lower && b->upper) CHECK(*b->lower <= *b->upper);
}

}  // namespace

TEST_CASE("canonical rows") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const std::size_t half = (n + 1) / 2;
        const ParameterReport e = bounds_table(canonical(CanonicalKind::Empty, n));
        check_exact(e.components, n);
        check_exact(e.chromatic, 1);
        check_exact(e.independence, n);
        check_exact(e.clique, 1);
        CHECK(e.canonical == std::optional<std::string>("empty"));

        const ParameterReport k = bounds_table(canonical(CanonicalKind::Complete, n));
        check_exact(k.components, 1);
        CHECK(k.chromatic.not_colourable);
        CHECK(k.chromatic.exact());
        check_exact(k.independence, 1);
        check_exact(k.clique, n);

        const ParameterReport s = bounds_table(canonical(CanonicalKind::Sym, n));
        check_exact(s.components, 1);
        if (n == 2)
            check_exact(s.chromatic, 2);
        else
            CHECK(s.chromatic.not_colourable);
        check_exact(s.independence, 1);
        check_exact(s.clique, half);

        const ParameterReport a = bounds_table(canonical(CanonicalKind::Asym, n));
        check_exact(a.components, n == 2 ? 2 : 1);
        check_exact(a.chromatic, n);
        check_exact(a.independence, 1);
        check_exact(a.clique, half);

        for (auto kind : {CanonicalKind::Empty, CanonicalKind::Complete, CanonicalKind::Sym, CanonicalKind::Asym}) {
            const AbcParams p = canonical(kind, n);
            check_witnesses(build(p), bounds_table(p));
        }
    }
}

TEST_CASE("report metadata") {
    const ParameterReport r = bounds_table(canonical(CanonicalKind::Complete, 3));
    CHECK(r.n == 3);
    CHECK(r.dim_s == 8);
    CHECK(r.edge_count == 72);
    CHECK(r.loopless);
    CHECK_FALSE(r.components.provenance.empty());
}

TEST_CASE("classical embeddings are exact except for the clique number") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
        const oracle::Adj a = oracle::random_adjacency(n, 0.4, rng);
        const AbcParams p = classical_embedding(oracle::to_graph(a));
        if (match_canonical(p)) continue;
        const ParameterReport r = bounds_table(p);
        if (family_of(p) == AbcFamily::Empty) continue;
        check_exact(r.components, oracle::component_count(a));
        check_exact(r.chromatic, oracle::chromatic(a));
        check_exact(r.independence, oracle::independence(a));
        REQUIRE(r.clique.lower.has_value());
        REQUIRE(r.clique.upper.has_value());
        CHECK(*r.clique.lower + 1 >= oracle::clique(a));
        CHECK(*r.clique.upper <= n - 1);
        check_witnesses(build(p), r);
    }
}

TEST_CASE("complete bipartite embedding reaches n/2") {
    const ParameterReport r = bounds_table(classical_embedding(ClassicalGraph::complete_bipartite(3, 3)));
    REQUIRE(r.clique.lower.has_value());
    CHECK(*r.clique.lower >= 3);
}

TEST_CASE("X_{.,B} rows") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const std::size_t n = 3 + s % 5, rk = 1 + s % (n - 1);
        const AbcParams p = b_part(random_abc(n, s, RandomProfile{0.0, 0.0, rk, true}));
        const ParameterReport r = bounds_table(p);
        check_exact(r.components, n);
        REQUIRE(r.chromatic.lower.has_value());
        CHECK(*r.chromatic.lower == (n + (n - rk) - 1) / (n - rk));
        REQUIRE(r.chromatic.upper.has_value());
        CHECK(*r.chromatic.upper <= n);
        CHECK(*r.independence.lower == 1 + (n - 1) / (rk + 1));
        CHECK(*r.independence.upper == n - rk);
        const std::size_t root = static_cast<std::size_t>(std::sqrt(static_cast<double>(rk + 1) + 1e-9));
        CHECK(*r.clique.upper == root);
        CHECK(r.family == to_string(AbcFamily::BOnly));
        check_witnesses(build(p), r);
    }
}

TEST_CASE("IC-POVM closes the clique number of X_{., I - J/n}") {
    for (std::size_t n = 4; n <= 10; ++n) {
        AbcParams p = AbcParams::zeros(n);
        p.B = CMatrix::Identity(ei(n), ei(n)) - all_ones(n) / static_cast<double>(n);
        p.A = p.C = CMatrix(p.B.diagonal().asDiagonal());
        const ParameterReport r = bounds_table(p);
        check_exact(r.clique, static_cast<std::size_t>(std::sqrt(static_cast<double>(n) + 1e-9)));
        if (n == 9) check_exact(r.clique, 3);
    }
}

TEST_CASE("X_{A,B} components equal the classical components of A") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 6);
        const oracle::Adj a = oracle::random_adjacency(n, 0.3, rng);
        const AbcParams p = oracle::random_xab(a, 1 + static_cast<std::size_t>(t) % (n - 1), static_cast<std::uint64_t>(t));
        const ParameterReport r = bounds_table(p);
        check_exact(r.components, oracle::component_count(a));
        check_witnesses(build(p), r);
    }
}

TEST_CASE("G^asym connectivity") {
    check_exact(bounds_table(canonical(CanonicalKind::Asym, 2)).components, 2);
    check_exact(bounds_table(canonical(CanonicalKind::Asym, 3)).components, 1);
}

TEST_CASE("strange pi matching reports n components") {
    for (std::size_t n : {2, 4, 6, 8}) {
        const ParameterReport r = bounds_table(strange_pi_matching(n));
        REQUIRE(r.components.lower.has_value());
        CHECK(*r.components.lower == n);
    }
}

TEST_CASE("directed and loopy inputs") {
    AbcParams d = AbcParams::zeros(2);
    d.A(0, 1) = 1.0;
    CHECK_THROWS_AS(bounds_table(d), InputError);
    const ParameterReport loopy = bounds_table(reflexive_variant(ClassicalGraph::path(3)));
    CHECK_FALSE(loopy.notes.empty());
    AbcParams withloops = AbcParams::zeros(3);
    withloops.B = CMatrix::Identity(3, 3);
    withloops.A = withloops.C = withloops.B;
    const ParameterReport all = bounds_table(withloops);
    CHECK_FALSE(all.loopless);
    CHECK(all.chromatic.not_colourable);
}

TEST_CASE("reports stay consistent on random instances") {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const std::size_t n = 2 + s % 6;
        const bool loopless = s % 5 != 0;
        const std::size_t rk = s % (n - (loopless ? 1 : 0) + 1);
        const AbcParams p = random_abc(n, s, RandomProfile{0.25, 0.35, rk, loopless});
        BoundsOptions opt;
        opt.seed = s;
        opt.trials = s % 3 == 0 ? 5 : 0;
        const ParameterReport r = bounds_table(p, opt);
        CHECK_NOTHROW(check_consistency(r));
        check_witnesses(build(p), r);
    }
}

TEST_CASE("analyze_graph on arbitrary projectors") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const std::size_t n = 2 + s % 3;
        const CMatrix v = random_isometry(n * n, 1 + s % (n * n), s);
        const QuantumGraph g = QuantumGraph::from_projector(SuperOp(n, v * v.adjoint()));
        BoundsOptions opt;
        opt.trials = 3;
        const ParameterReport r = analyze_graph(g, opt);
        check_witnesses(g, r);
    }
}

TEST_CASE("check_consistency rejects contradictions") {
    ParameterReport r;
    r.clique.lower = 3;
    r.clique.upper = 2;
    CHECK_THROWS_AS(check_consistency(r), InternalError);
    ParameterReport c;
    c.chromatic.not_colourable = true;
    c.colouring_witness = ColouringWitness{{CMatrix::Identity(2, 2)}};
    CHECK_THROWS_AS(check_consistency(c), InternalError);
}
