#pragma once

// Classical graphs and strange graphs with exact small-n solvers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace qgw {

using Partition = std::vector<std::vector<std::size_t>>;
using VertexPair = std::pair<std::size_t, std::size_t>;

class ClassicalGraph {
public:
    ClassicalGraph() = default;
    explicit ClassicalGraph(std::size_t n);
    /// From a 0/1 symmetric matrix with zero diagonal (row-major rows).
    static ClassicalGraph from_adjacency(const std::vector<std::vector<int>>& adj);

    static ClassicalGraph complete(std::size_t n);
    static ClassicalGraph cycle(std::size_t n);
    static ClassicalGraph path(std::size_t n);
    static ClassicalGraph complete_bipartite(std::size_t m, std::size_t k);
    static ClassicalGraph random(std::size_t n, double p, std::uint64_t seed);

    std::size_t n() const { return n_; }
    void add_edge(std::size_t i, std::size_t j);
    bool has_edge(std::size_t i, std::size_t j) const;
    std::size_t edge_count() const;
    std::vector<VertexPair> edges() const;
    std::size_t degree(std::size_t v) const;
    ClassicalGraph complement() const;

    bool operator==(const ClassicalGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<char>> adj_;
};

class StrangeGraph {
public:
    StrangeGraph() = default;
    explicit StrangeGraph(std::size_t n) : n_(n) {}

    std::size_t n() const { return n_; }
    void add_classical(std::size_t i, std::size_t j);
    /// Phase is stored in [0, 2pi); values within 1e-12 of 2pi wrap to 0.
    void add_strange(std::size_t i, std::size_t j, double theta);

    const std::set<VertexPair>& classical_edges() const { return classical_; }
    const std::map<VertexPair, double>& strange_edges() const { return strange_; }

    bool is_classical(std::size_t i, std::size_t j) const;
    bool is_strange(std::size_t i, std::size_t j) const;
    /// Phase of the strange edge {i,j} oriented i -> j (theta for i<j, -theta otherwise).
    double phase(std::size_t i, std::size_t j) const;

    bool operator==(const StrangeGraph& o) const;

private:
    static VertexPair key(std::size_t i, std::size_t j);
    void check_pair(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::set<VertexPair> classical_;
    std::map<VertexPair, double> strange_;
};

double normalize_phase(double theta);

Partition components(const ClassicalGraph& g);
Partition components(const StrangeGraph& sg);
ClassicalGraph underlying(const StrangeGraph& sg);

StrangeGraph sg_disjoint_union(const StrangeGraph& a, const StrangeGraph& b);
StrangeGraph strange_complete(std::size_t n, double theta);

inline constexpr std::size_t kExactMaxN = 20;

struct ColouringResult {
    std::size_t chi = 0;
    Partition classes;
};
struct VertexSetResult {
    std::size_t size = 0;
    std::vector<std::size_t> vertices;
};

/// Exact solvers; BudgetError for n > kExactMaxN.
ColouringResult chromatic_number(const ClassicalGraph& g);
VertexSetResult independence_number(const ClassicalGraph& g);
VertexSetResult clique_number(const ClassicalGraph& g);

bool is_proper_colouring(const ClassicalGraph& g, const Partition& classes);
bool is_independent_set(const ClassicalGraph& g, const std::vector<std::size_t>& s);
bool is_clique(const ClassicalGraph& g, const std::vector<std::size_t>& s);
/// Nonempty disjoint parts covering [n].
bool is_partition(const Partition& parts, std::size_t n);

}  // namespace qgw
