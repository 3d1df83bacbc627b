#include "qgw/abcgraphs.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qgw {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

CMatrix identity(std::size_t n) { return CMatrix::Identity(ei(n), ei(n)); }

CMatrix offdiag(const CMatrix& m) {
    CMatrix o = m;
    o.diagonal().setZero();
    return o;
}

CMatrix diag_part(const CMatrix& m) {
    CMatrix d = CMatrix::Zero(m.rows(), m.cols());
    d.diagonal() = m.diagonal();
    return d;
}

std::string pair_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Eigen::Matrix2cd block_of(const AbcParams& p, std::size_t i, std::size_t j) {
    Eigen::Matrix2cd b;
    b << p.A(ei(i), ei(j)), p.C(ei(i), ei(j)), p.C(ei(j), ei(i)), p.A(ei(j), ei(i));
    return b;
}

}  // namespace

AbcParams AbcParams::zeros(std::size_t n) {
    const CMatrix z = CMatrix::Zero(ei(n), ei(n));
    return AbcParams{n, z, z, z};
}

AbcValidationError::AbcValidationError(AbcReport r)
    : ValidationError([&] {
          std::string msg = "not a quantum graph";
          for (const auto& s : r.reasons) msg += "; " + s;
          return msg;
      }()),
      report_(std::move(r)) {}

void check_shape(const AbcParams& p, Tolerance tol) {
    if (p.n == 0) throw InputError("ABC parameters: n must be positive");
    const auto n = ei(p.n);
    using Named = std::pair<const CMatrix*, const char*>;
    for (const auto& [m, name] : {Named{&p.A, "A"}, Named{&p.B, "B"}, Named{&p.C, "C"}}) {
        if (m->rows() != n || m->cols() != n)
            throw InputError(std::string("ABC parameters: ") + name + " must be " + std::to_string(p.n) + "x" +
                             std::to_string(p.n));
        require_finite(*m, name);
    }
    std::vector<std::size_t> bad;
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(p.A(i, i) - p.B(i, i)) > tol.eps() || std::abs(p.A(i, i) - p.C(i, i)) > tol.eps())
            bad.push_back(static_cast<std::size_t>(i));
    if (!bad.empty()) {
        std::string idx;
        for (auto i : bad) idx += (idx.empty() ? "" : ",") + std::to_string(i);
        throw InputError("ABC parameters: diagonals of A, B, C differ at indices [" + idx + "]");
    }
}

AbcReport validate(const AbcParams& p, Tolerance tol) {
    check_shape(p, tol);
    AbcReport r;
    const std::size_t n = p.n;
    bool ok = true;
    if (!is_projector(p.B, tol)) {
        ok = false;
        r.reasons.push_back("B is not a projector");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const CMatrix b = block_of(p, i, j);
            if (!is_projector(b, tol)) {
                ok = false;
                r.bad_blocks.emplace_back(i, j);
                r.reasons.push_back("block " + pair_name(i, j) + " is not a projector");
            }
        }
    r.quantum_graph = ok;
    const CMatrix a0 = offdiag(p.A);
    const bool a_herm = max_abs(a0 - a0.adjoint()) <= tol.eps();
    const bool b_sym = max_abs(p.B - p.B.transpose()) <= tol.eps();
    r.undirected = ok && a_herm && b_sym;
    if (ok && !a_herm) r.reasons.push_back("off-diagonal part of A is not self-adjoint");
    if (ok && !b_sym) r.reasons.push_back("B is not symmetric");
    r.loopless = max_abs(p.B * ones_vector(n)) <= tol.eps();
    return r;
}

SuperOp ldoi_map(const CMatrix& p, const CMatrix& q, const CMatrix& r) {
    require_square(p, "ldoi_map");
    const auto n = static_cast<std::size_t>(p.rows());
    if (q.rows() != p.rows() || q.cols() != p.cols() || r.rows() != p.rows() || r.cols() != p.cols())
        throw InputError("ldoi_map: matrices must share one size");
    CMatrix t = CMatrix::Zero(ei(n * n), ei(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                for (std::size_t k = 0; k < n; ++k) t(ei(i * n + i), ei(k * n + k)) = q(ei(i), ei(k));
                continue;
            }
            t(ei(i * n + j), ei(i * n + j)) += p(ei(i), ei(j));
            t(ei(i * n + j), ei(j * n + i)) += r(ei(i), ei(j));
        }
    return SuperOp(n, std::move(t));
}

QuantumGraph build(const AbcParams& p, Tolerance tol) {
    AbcReport r = validate(p, tol);
    if (!r.quantum_graph) throw AbcValidationError(std::move(r));
    return QuantumGraph::from_projector(ldoi_map(p), tol);
}

BlockDecomposition decompose(const AbcParams& p, Tolerance tol) {
    check_shape(p, tol);
    BlockDecomposition d;
    d.B = p.B;
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = i + 1; j < p.n; ++j) d.blocks[{i, j}] = block_of(p, i, j);
    return d;
}

SuperOp reassemble(const BlockDecomposition& d) {
    const auto n = static_cast<std::size_t>(d.B.rows());
    CMatrix t = CMatrix::Zero(ei(n * n), ei(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) t(ei(i * n + i), ei(k * n + k)) = d.B(ei(i), ei(k));
    for (const auto& [ij, b] : d.blocks) {
        const auto [i, j] = ij;
        const auto u = ei(i * n + j);
        const auto v = ei(j * n + i);
        t(u, u) = b(0, 0);
        t(u, v) = b(0, 1);
        t(v, u) = b(1, 0);
        t(v, v) = b(1, 1);
    }
    return SuperOp(n, std::move(t));
}

StrangeGraph to_strange_graph(const AbcParams& p, Tolerance tol) {
    const AbcReport r = validate(p, tol);
    if (!r.undirected) throw ValidationError("strange graph needs an undirected quantum graph");
    StrangeGraph sg(p.n);
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = i + 1; j < p.n; ++j) {
            const Eigen::Matrix2cd b = block_of(p, i, j);
            if (b.cwiseAbs().maxCoeff() <= tol.eps()) continue;
            if ((b - id).cwiseAbs().maxCoeff() <= tol.eps()) {
                sg.add_classical(i, j);
                continue;
            }
            const bool half_diag = std::abs(b(0, 0) - 0.5) <= tol.eps() && std::abs(b(1, 1) - 0.5) <= tol.eps();
            const bool half_mod = std::abs(std::abs(b(0, 1)) - 0.5) <= tol.eps();
            const bool herm = std::abs(b(1, 0) - std::conj(b(0, 1))) <= tol.eps();
            if (half_diag && half_mod && herm) {
                sg.add_strange(i, j, std::arg(b(0, 1)));
                continue;
            }
            throw ClassificationError("block " + pair_name(i, j) + " is neither empty, classical nor strange");
        }
    return sg;
}

AbcParams from_strange_graph(const StrangeGraph& sg, const std::optional<CMatrix>& b, Tolerance tol) {
    const std::size_t n = sg.n();
    AbcParams p = AbcParams::zeros(n);
    if (b) {
        if (b->rows() != ei(n) || b->cols() != ei(n)) throw InputError("from_strange_graph: B has the wrong size");
        if (!is_projector(*b, tol) || max_abs(*b - b->transpose()) > tol.eps())
            throw InputError("from_strange_graph: B must be a real symmetric projector");
        p.B = *b;
        p.A.diagonal() = b->diagonal();
        p.C.diagonal() = b->diagonal();
    }
    for (const auto& [i, j] : sg.classical_edges()) p.A(ei(i), ei(j)) = p.A(ei(j), ei(i)) = 1.0;
    for (const auto& [e, theta] : sg.strange_edges()) {
        const auto [i, j] = e;
        p.A(ei(i), ei(j)) = p.A(ei(j), ei(i)) = 0.5;
        p.C(ei(i), ei(j)) = std::polar(0.5, theta);
        p.C(ei(j), ei(i)) = std::polar(0.5, -theta);
    }
    return p;
}

CanonicalKind parse_canonical_kind(const std::string& s) {
    if (s == "empty") return CanonicalKind::Empty;
    if (s == "complete") return CanonicalKind::Complete;
    if (s == "sym") return CanonicalKind::Sym;
    if (s == "asym") return CanonicalKind::Asym;
    throw InputError("unknown canonical graph '" + s + "' (expected empty, complete, sym or asym)");
}

std::string to_string(CanonicalKind k) {
    switch (k) {
        case CanonicalKind::Empty: return "empty";
        case CanonicalKind::Complete: return "complete";
        case CanonicalKind::Sym: return "sym";
        case CanonicalKind::Asym: return "asym";
    }
    return "?";
}

AbcParams canonical(CanonicalKind kind, std::size_t n) {
    if (n < 2) throw InputError("canonical graphs need n >= 2");
    const double dn = static_cast<double>(n);
    const CMatrix id = identity(n);
    const CMatrix j = all_ones(n);
    AbcParams p = AbcParams::zeros(n);
    switch (kind) {
        case CanonicalKind::Empty:
            break;
        case CanonicalKind::Complete:
            p.A = j - id / dn;
            p.B = id - j / dn;
            p.C = diag_part(p.A);
            break;
        case CanonicalKind::Sym:
            p.A = (j + id) / 2.0 - id / dn;
            p.B = id - j / dn;
            p.C = p.A;
            break;
        case CanonicalKind::Asym:
            p.A = (j - id) / 2.0;
            p.C = -(j - id) / 2.0;
            break;
    }
    return p;
}

AbcParams hyp_build(const HypParams& h) {
    if (h.n == 0) throw InputError("hyp parameters: n must be positive");
    for (double v : {h.a, h.a_prime, h.b, h.c})
        if (!std::isfinite(v)) throw InputError("hyp parameters must be finite");
    const CMatrix id = identity(h.n);
    const CMatrix jo = all_ones(h.n) - id;
    return AbcParams{h.n, h.a * id + h.a_prime * jo, h.a * id + h.b * jo, h.a * id + h.c * jo};
}

std::vector<HypEntry> hyp_enumerate(std::size_t n) {
    if (n < 2) throw InputError("hyp_enumerate needs n >= 2");
    const double dn = static_cast<double>(n);
    const std::pair<double, double> ab[] = {{0.0, 0.0}, {1.0 / dn, 1.0 / dn}, {1.0, 0.0}, {1.0 - 1.0 / dn, -1.0 / dn}};
    const std::pair<double, double> ac[] = {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.5}, {0.5, -0.5}};
    std::vector<HypEntry> out;
    for (const auto& [a, b] : ab)
        for (const auto& [ap, c] : ac) {
            HypEntry e{HypParams{n, a, ap, b, c}, false};
            const AbcReport r = validate(hyp_build(e.h));
            if (!r.quantum_graph) throw InternalError("hyp_enumerate: listed quadruple fails validation");
            e.loopless = r.loopless;
            out.push_back(e);
        }
    return out;
}

HypParams hyp_canonical(CanonicalKind kind, std::size_t n) {
    const double dn = static_cast<double>(n);
    switch (kind) {
        case CanonicalKind::Empty: return {n, 0.0, 0.0, 0.0, 0.0};
        case CanonicalKind::Complete: return {n, 1.0 - 1.0 / dn, 1.0, -1.0 / dn, 0.0};
        case CanonicalKind::Sym: return {n, 1.0 - 1.0 / dn, 0.5, -1.0 / dn, 0.5};
        case CanonicalKind::Asym: return {n, 0.0, 0.5, 0.0, -0.5};
    }
    return {};
}

AbcParams classical_embedding(const ClassicalGraph& g) {
    AbcParams p = AbcParams::zeros(g.n());
    for (const auto& [i, j] : g.edges()) p.A(ei(i), ei(j)) = p.A(ei(j), ei(i)) = 1.0;
    return p;
}

AbcParams random_abc(std::size_t n, std::uint64_t seed, const RandomProfile& profile) {
    if (n == 0) throw InputError("random_abc: n must be positive");
    const double pc = profile.classical_edge_prob;
    const double ps = profile.strange_edge_prob;
    if (!(pc >= 0 && ps >= 0 && pc + ps <= 1.0 + 1e-12))
        throw InputError("random_abc: edge probabilities must be nonnegative with sum at most 1");
    if (profile.b_rank + (profile.loopless ? 1 : 0) > n)
        throw InputError("random_abc: b_rank " + std::to_string(profile.b_rank) + " is infeasible for n=" +
                         std::to_string(n) + (profile.loopless ? " with loopless B" : ""));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    StrangeGraph sg(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double u = unit(rng);
            if (u < pc)
                sg.add_classical(i, j);
            else if (u < pc + ps)
                sg.add_strange(i, j, phase(rng));
        }
    CMatrix b = CMatrix::Zero(ei(n), ei(n));
    const std::size_t r = profile.b_rank;
    if (r > 0) {
        std::normal_distribution<double> normal(0.0, 1.0);
        const RMatrix ones = RMatrix::Ones(ei(n), 1) / std::sqrt(static_cast<double>(n));
        for (int attempt = 0;; ++attempt) {
            RMatrix g(ei(n), ei(r));
            for (Eigen::Index c = 0; c < g.cols(); ++c)
                for (Eigen::Index k = 0; k < g.rows(); ++k) g(k, c) = normal(rng);
            if (profile.loopless) g -= ones * (ones.transpose() * g);
            Eigen::HouseholderQR<RMatrix> qr(g);
            const RMatrix q = qr.householderQ() * RMatrix::Identity(ei(n), ei(r));
            const RMatrix proj = q * q.transpose();
            if (profile.loopless || (proj * RMatrix::Ones(ei(n), 1)).cwiseAbs().maxCoeff() > 1e-3) {
                b = proj.cast<cplx>();
                break;
            }
            if (attempt > 100) throw InternalError("random_abc: could not sample a B with loops");
        }
    }
    return from_strange_graph(sg, b, Tolerance(1e-9));
}

AbcParams ac_part(const AbcParams& p) {
    return AbcParams{p.n, offdiag(p.A), CMatrix::Zero(ei(p.n), ei(p.n)), offdiag(p.C)};
}

AbcParams b_part(const AbcParams& p) {
    const CMatrix d = diag_part(p.B);
    return AbcParams{p.n, d, p.B, d};
}

AbcParams reflexive_variant(const ClassicalGraph& g) {
    const std::size_t n = g.n();
    if (n < 2) throw InputError("reflexive_variant needs n >= 2");
    AbcParams p = classical_embedding(g);
    const double d = 1.0 - 1.0 / static_cast<double>(n);
    p.A.diagonal().setConstant(d);
    p.B = identity(n) - all_ones(n) / static_cast<double>(n);
    p.C.diagonal().setConstant(d);
    return p;
}

bool offdiag_zero(const CMatrix& m, Tolerance tol) { return max_abs(offdiag(m)) <= tol.eps(); }

AbcFamily family_of(const AbcParams& p, Tolerance tol) {
    const bool a = !offdiag_zero(p.A, tol);
    const bool b = max_abs(p.B) > tol.eps();
    const bool c = !offdiag_zero(p.C, tol);
    if (!a && !b && !c) return AbcFamily::Empty;
    if (!b) return c ? AbcFamily::AC : AbcFamily::AOnly;
    if (!a && !c) return AbcFamily::BOnly;
    if (!c) return AbcFamily::AB;
    return AbcFamily::ABC;
}

std::string to_string(AbcFamily f) {
    switch (f) {
        case AbcFamily::Empty: return "X_{.,.}";
        case AbcFamily::AOnly: return "X_{A,.}";
        case AbcFamily::BOnly: return "X_{.,B}";
        case AbcFamily::AB: return "X_{A,B}";
        case AbcFamily::AC: return "X_{A,.,C}";
        case AbcFamily::ABC: return "X_{A,B,C}";
    }
    return "?";
}

std::optional<CanonicalKind> match_canonical(const AbcParams& p, Tolerance tol) {
    if (p.n < 2) return std::nullopt;
    for (auto k : {CanonicalKind::Empty, CanonicalKind::Complete, CanonicalKind::Sym, CanonicalKind::Asym}) {
        const AbcParams q = canonical(k, p.n);
        if (max_abs(p.A - q.A) <= tol.eps() && max_abs(p.B - q.B) <= tol.eps() && max_abs(p.C - q.C) <= tol.eps())
            return k;
    }
    return std::nullopt;
}

}  // namespace qgw
