#include "qgw/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "qgw/errors.hpp"
#include "qgw/numlin.hpp"

namespace qgw {

ClassicalGraph::ClassicalGraph(std::size_t n) : n_(n), adj_(n, std::vector<char>(n, 0)) {}

ClassicalGraph ClassicalGraph::from_adjacency(const std::vector<std::vector<int>>& adj) {
    ClassicalGraph g(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (adj[i].size() != adj.size()) throw InputError("adjacency matrix is not square");
        for (std::size_t j = 0; j < adj.size(); ++j) {
            const int v = adj[i][j];
            if (v != 0 && v != 1) throw InputError("adjacency entries must be 0 or 1");
            if (v != adj[j][i]) throw InputError("adjacency matrix is not symmetric");
            if (i == j && v) throw InputError("classical graph has a loop at vertex " + std::to_string(i));
            if (v && i < j) g.add_edge(i, j);
        }
    }
    return g;
}

ClassicalGraph ClassicalGraph::complete(std::size_t n) {
    ClassicalGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

ClassicalGraph ClassicalGraph::cycle(std::size_t n) {
    ClassicalGraph g(n);
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

ClassicalGraph ClassicalGraph::path(std::size_t n) {
    ClassicalGraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

ClassicalGraph ClassicalGraph::complete_bipartite(std::size_t m, std::size_t k) {
    ClassicalGraph g(m + k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) g.add_edge(i, m + j);
    return g;
}

ClassicalGraph ClassicalGraph::random(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
    ClassicalGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

void ClassicalGraph::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw InputError("add_edge: vertex out of range");
    if (i == j) throw InputError("add_edge: loops are not allowed");
    adj_[i][j] = adj_[j][i] = 1;
}

bool ClassicalGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw InputError("has_edge: vertex out of range");
    return adj_[i][j] != 0;
}

std::size_t ClassicalGraph::edge_count() const { return edges().size(); }

std::vector<VertexPair> ClassicalGraph::edges() const {
    std::vector<VertexPair> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adj_[i][j]) out.emplace_back(i, j);
    return out;
}

std::size_t ClassicalGraph::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count(adj_[v].begin(), adj_[v].end(), 1));
}

ClassicalGraph ClassicalGraph::complement() const {
    ClassicalGraph g(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!adj_[i][j]) g.add_edge(i, j);
    return g;
}

double normalize_phase(double theta) {
    if (!std::isfinite(theta)) throw InputError("phase must be finite");
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0) t += 2.0 * kPi;
    if (2.0 * kPi - t < 1e-12) t = 0.0;
    return t;
}

VertexPair StrangeGraph::key(std::size_t i, std::size_t j) { return i < j ? VertexPair{i, j} : VertexPair{j, i}; }

void StrangeGraph::check_pair(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw InputError("strange graph: vertex out of range");
    if (i == j) throw InputError("strange graph: loops are not allowed");
}

void StrangeGraph::add_classical(std::size_t i, std::size_t j) {
    check_pair(i, j);
    if (strange_.count(key(i, j))) throw InputError("strange graph: pair is already a strange edge");
    classical_.insert(key(i, j));
}

void StrangeGraph::add_strange(std::size_t i, std::size_t j, double theta) {
    check_pair(i, j);
    if (classical_.count(key(i, j))) throw InputError("strange graph: pair is already a classical edge");
    strange_[key(i, j)] = normalize_phase(i < j ? theta : -theta);
}

bool StrangeGraph::is_classical(std::size_t i, std::size_t j) const { return classical_.count(key(i, j)) > 0; }

bool StrangeGraph::is_strange(std::size_t i, std::size_t j) const { return strange_.count(key(i, j)) > 0; }

double StrangeGraph::phase(std::size_t i, std::size_t j) const {
    const auto it = strange_.find(key(i, j));
    if (it == strange_.end()) throw InputError("strange graph: no strange edge between the given vertices");
    return i < j ? it->second : normalize_phase(-it->second);
}

bool StrangeGraph::operator==(const StrangeGraph& o) const {
    if (n_ != o.n_ || classical_ != o.classical_ || strange_.size() != o.strange_.size()) return false;
    for (const auto& [k, t] : strange_) {
        const auto it = o.strange_.find(k);
        if (it == o.strange_.end()) return false;
        const double d = std::abs(t - it->second);
        if (std::min(d, 2.0 * kPi - d) > 1e-9) return false;
    }
    return true;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

Partition union_find(std::size_t n, const std::vector<VertexPair>& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& [a, b] : edges) {
        const auto ra = find_root(parent, a);
        const auto rb = find_root(parent, b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<std::size_t> slot(n, n);
    Partition parts;
    for (std::size_t v = 0; v < n; ++v) {
        const auto r = find_root(parent, v);
        if (slot[r] == n) {
            slot[r] = parts.size();
            parts.emplace_back();
        }
        parts[slot[r]].push_back(v);
    }
    return parts;
}

using Mask = std::uint32_t;

void require_budget(const ClassicalGraph& g, const char* what) {
    if (g.n() > kExactMaxN)
        throw BudgetError(std::string(what) + ": exact search limited to n <= " + std::to_string(kExactMaxN));
}

// Smallest-last ordering; ties broken by lowest index.
std::vector<std::size_t> degeneracy_order(const ClassicalGraph& g) {
    const std::size_t n = g.n();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
        removed[pick] = 1;
        order.push_back(pick);
        for (std::size_t u = 0; u < n; ++u)
            if (!removed[u] && g.has_edge(pick, u)) --deg[u];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

struct Relabelled {
    std::vector<std::size_t> order;  // new index -> original vertex
    std::vector<Mask> nbr;           // in new indices
};

Relabelled relabel(const ClassicalGraph& g) {
    Relabelled r;
    r.order = degeneracy_order(g);
    const std::size_t n = g.n();
    r.nbr.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && g.has_edge(r.order[a], r.order[b])) r.nbr[a] |= Mask{1} << b;
    return r;
}

void clique_search(const std::vector<Mask>& nbr, Mask chosen, Mask candidates, Mask& best) {
    if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best)) return;
    if (candidates == 0) {
        best = chosen;
        return;
    }
    const int v = std::countr_zero(candidates);
    const Mask bit = Mask{1} << v;
    clique_search(nbr, chosen | bit, candidates & nbr[static_cast<std::size_t>(v)], best);
    clique_search(nbr, chosen, candidates & ~bit, best);
}

VertexSetResult max_clique(const ClassicalGraph& g) {
    const Relabelled r = relabel(g);
    const std::size_t n = g.n();
    Mask best = 0;
    const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    clique_search(r.nbr, 0, all, best);
    VertexSetResult out;
    for (std::size_t a = 0; a < n; ++a)
        if (best & (Mask{1} << a)) out.vertices.push_back(r.order[a]);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.size = out.vertices.size();
    return out;
}

bool colour_search(const std::vector<Mask>& nbr, std::size_t v, std::size_t k, std::size_t used,
                   std::vector<Mask>& classes, std::vector<std::size_t>& colour) {
    if (v == nbr.size()) return true;
    const std::size_t limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
        if (classes[c] & nbr[v]) continue;
        classes[c] |= Mask{1} << v;
        colour[v] = c;
        if (colour_search(nbr, v + 1, k, std::max(used, c + 1), classes, colour)) return true;
        classes[c] &= ~(Mask{1} << v);
    }
    return false;
}

}  // namespace

Partition components(const ClassicalGraph& g) { return union_find(g.n(), g.edges()); }

Partition components(const StrangeGraph& sg) { return components(underlying(sg)); }

ClassicalGraph underlying(const StrangeGraph& sg) {
    ClassicalGraph g(sg.n());
    for (const auto& [i, j] : sg.classical_edges()) g.add_edge(i, j);
    for (const auto& [e, theta] : sg.strange_edges()) g.add_edge(e.first, e.second);
    return g;
}

StrangeGraph sg_disjoint_union(const StrangeGraph& a, const StrangeGraph& b) {
    StrangeGraph out(a.n() + b.n());
    for (const auto& [i, j] : a.classical_edges()) out.add_classical(i, j);
    for (const auto& [e, t] : a.strange_edges()) out.add_strange(e.first, e.second, t);
    const std::size_t s = a.n();
    for (const auto& [i, j] : b.classical_edges()) out.add_classical(i + s, j + s);
    for (const auto& [e, t] : b.strange_edges()) out.add_strange(e.first + s, e.second + s, t);
    return out;
}

StrangeGraph strange_complete(std::size_t n, double theta) {
    StrangeGraph sg(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sg.add_strange(i, j, theta);
    return sg;
}

VertexSetResult clique_number(const ClassicalGraph& g) {
    require_budget(g, "clique_number");
    return max_clique(g);
}

VertexSetResult independence_number(const ClassicalGraph& g) {
    require_budget(g, "independence_number");
    return max_clique(g.complement());
}

ColouringResult chromatic_number(const ClassicalGraph& g) {
    require_budget(g, "chromatic_number");
    ColouringResult out;
    const std::size_t n = g.n();
    if (n == 0) return out;
    const Relabelled r = relabel(g);
    for (std::size_t k = std::max<std::size_t>(1, max_clique(g).size); k <= n; ++k) {
        std::vector<Mask> classes(k, 0);
        std::vector<std::size_t> colour(n, 0);
        if (!colour_search(r.nbr, 0, k, 0, classes, colour)) continue;
        out.chi = k;
        out.classes.assign(k, {});
        for (std::size_t a = 0; a < n; ++a) out.classes[colour[a]].push_back(r.order[a]);
        for (auto& c : out.classes) std::sort(c.begin(), c.end());
        std::sort(out.classes.begin(), out.classes.end());
        return out;
    }
    throw InternalError("chromatic_number: no colouring with n colours");
}

bool is_partition(const Partition& parts, std::size_t n) {
    std::vector<char> seen(n, 0);
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (p.empty()) return false;
        for (auto v : p) {
            if (v >= n || seen[v]) return false;
            seen[v] = 1;
            ++total;
        }
    }
    return total == n;
}

bool is_proper_colouring(const ClassicalGraph& g, const Partition& classes) {
    if (!is_partition(classes, g.n())) return false;
    return std::all_of(classes.begin(), classes.end(), [&](const auto& c) { return is_independent_set(g, c); });
}

bool is_independent_set(const ClassicalGraph& g, const std::vector<std::size_t>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b] || g.has_edge(s[a], s[b])) return false;
    return true;
}

bool is_clique(const ClassicalGraph& g, const std::vector<std::size_t>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b] || !g.has_edge(s[a], s[b])) return false;
    return true;
}

}  // namespace qgw
