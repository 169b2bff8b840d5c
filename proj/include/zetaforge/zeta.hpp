#ifndef ZETAFORGE_ZETA_HPP
#define ZETAFORGE_ZETA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "darts.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "polynomial.hpp"
#include "roots.hpp"

namespace zetaforge {

/// zeta^{-1}(z) = (1 - z^2)^{n - |E|} det(I - A z + Q z^2 + P z^3).
///
/// The graph is normalized first. When there are fewer edges than nodes the
/// prefactor is a division, which must be exact.
inline PolyZ zeta_inverse(const PartiallyDirectedGraph& graph)
{
    const auto g = normalize(graph);
    const auto b = matrices(g);
    const std::size_t n = g.node_count();
    PolyMatrix m(n, n, PolyZ{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            PolyZ e{(i == j) ? 1 : 0, -b.A(i, j), b.Q(i, j), b.P(i, j)};
            m(i, j) = std::move(e);
        }
    }
    const PolyZ det = det_poly(std::move(m));
    if (b.exponent <= 0) return det * one_minus_z2_pow(static_cast<unsigned>(-b.exponent));
    return exact_div(det, one_minus_z2_pow(static_cast<unsigned>(b.exponent)));
}

/// det(I - z A) for a graph with arrows only.
inline PolyZ directed_shortcut(const PartiallyDirectedGraph& graph)
{
    const auto g = normalize(graph);
    if (!g.is_fully_directed()) throw precondition_error("directed_shortcut: graph has undirected edges");
    const auto b = matrices(g);
    const std::size_t n = g.node_count();
    PolyMatrix m(n, n, PolyZ{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = PolyZ{(i == j) ? 1 : 0, -b.A(i, j)};
    return det_poly(std::move(m));
}

/// Eigenvalues of the full adjacency matrix A.
inline ComplexRootSet spectrum(const PartiallyDirectedGraph& graph, const RootOptions& opt = {})
{
    return roots(char_poly(matrices(normalize(graph)).A), opt);
}

namespace detail {
inline std::int64_t regular_q(const PartiallyDirectedGraph& g, const char* who)
{
    if (!g.is_undirected()) throw precondition_error(std::string(who) + ": graph must be undirected");
    const auto prof = degree_profile(g);
    if (!prof.regular) throw precondition_error(std::string(who) + ": graph must be regular");
    return prof.max_degree - 1;
}
} // namespace detail

/// Every adjacency eigenvalue with |lambda| != q + 1 satisfies
/// |lambda| <= 2 sqrt(q). Graphs with q < 1 are never Ramanujan here.
inline bool ramanujan(const PartiallyDirectedGraph& graph, const RootOptions& opt = {})
{
    const auto g = normalize(graph);
    const auto q = detail::regular_q(g, "ramanujan");
    if (q < 1) return false;
    const double trivial = static_cast<double>(q + 1);
    const double bound = 2.0 * std::sqrt(static_cast<double>(q)) + 1e-8;
    for (const auto& r : spectrum(g, opt).roots) {
        const double mod = std::abs(r.value);
        if (std::abs(mod - trivial) <= 1e-8) continue;
        if (mod > bound) return false;
    }
    return true;
}

/// Exact check of xi(z) = xi(1/(q z)) for a (q+1)-regular undirected graph,
/// where xi = (1+z)^{m-n} (1-z)^m (1-qz)^n zeta.
///
/// With xi = N/D and F~(z) = sum a_k q^{d-k} z^{d-k}, the identity is
/// N D~ q^{dN} z^{dN} = N~ D q^{dD} z^{dD} in Z[z].
inline bool xi_functional_check(const PartiallyDirectedGraph& graph)
{
    const auto g = normalize(graph);
    const auto q = detail::regular_q(g, "xi_functional_check");
    if (q < 1) throw precondition_error("xi_functional_check: need q >= 1");
    const auto n = static_cast<unsigned>(g.node_count());
    const auto m = static_cast<unsigned>(g.edge_count());

    const PolyZ num = PolyZ{1, 1}.pow(m - n) * PolyZ{1, -1}.pow(m) * PolyZ{1, -q}.pow(n);
    const PolyZ den = zeta_inverse(g);

    auto reflect = [&](const PolyZ& f) {
        const int d = f.degree();
        std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) c[static_cast<std::size_t>(d - k)] = f.coeff(k) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d - k));
        return PolyZ(std::move(c));
    };
    auto scaled_shift = [&](const PolyZ& f, int d) { return f * PolyZ::monomial(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d)), static_cast<std::size_t>(d)); };

    const PolyZ lhs = scaled_shift(num * reflect(den), num.degree());
    const PolyZ rhs = scaled_shift(reflect(num) * den, den.degree());
    return lhs == rhs;
}

enum class RhClass { Strong, Weak, Violated, Trivial };

inline char rh_letter(RhClass c)
{
    switch (c) {
    case RhClass::Strong: return 'S';
    case RhClass::Weak: return 'W';
    case RhClass::Violated: return 'N';
    case RhClass::Trivial: return 'T';
    }
    return '?';
}

inline constexpr double rh_epsilon = 1e-9;

struct ZetaReport {
    PolyZ zeta_inverse;
    ComplexRootSet poles;
    double radius = std::numeric_limits<double>::infinity();  // R_G, smallest pole modulus
    std::int64_t q = 0;  // max row sum of A minus one
    std::int64_t p = 0;  // min row sum of A minus one
    BranchingBounds branching;
    RhClass classification = RhClass::Trivial;
    bool kotani_sunada_ok = true;
    std::optional<bool> ramanujan;
    std::optional<bool> xi_functional_ok;
};

namespace detail {
// True when some pole modulus lies strictly inside (lo, hi).
inline bool pole_in(const ComplexRootSet& poles, double lo, double hi)
{
    for (const auto& r : poles.roots) {
        const double mod = std::abs(r.value);
        if (mod > lo && mod < hi) return true;
    }
    return false;
}
} // namespace detail

/// Full analysis: zeta inverse, poles, R_G, the Riemann Hypothesis class,
/// and the regular-graph checks where they apply.
///
/// Strong: no pole with R_G < |z| < sqrt(R_G). Weak: no pole with
/// R_G < |z| < 1/sqrt(q). Both intervals are shrunk by 1e-9 at each end.
inline ZetaReport analyze(const PartiallyDirectedGraph& graph, const RootOptions& opt = {})
{
    const auto g = normalize(graph);
    ZetaReport rep;
    rep.zeta_inverse = zeta_inverse(g);
    const auto out = out_degree_profile(g);
    rep.q = out.max_degree - 1;
    rep.p = out.min_degree - 1;
    rep.branching = dart_branching(g);

    const bool regular_undirected = g.is_undirected() && degree_profile(g).regular;
    if (regular_undirected) {
        rep.ramanujan = ramanujan(g, opt);
        if (rep.q >= 1) rep.xi_functional_ok = xi_functional_check(g);
    }

    if (rep.zeta_inverse.is_constant()) {
        rep.classification = RhClass::Trivial;
        rep.kotani_sunada_ok = rep.branching.min_successors == 0;
        return rep;
    }

    rep.poles = roots(rep.zeta_inverse, opt);
    for (const auto& r : rep.poles.roots) rep.radius = std::min(rep.radius, std::abs(r.value));

    const double eps = rh_epsilon;
    const double R = rep.radius;
    const double weak_hi =
        rep.q >= 1 ? 1.0 / std::sqrt(static_cast<double>(rep.q)) : std::numeric_limits<double>::infinity();
    if (!detail::pole_in(rep.poles, R + eps, std::sqrt(R) - eps)) {
        rep.classification = RhClass::Strong;
    } else if (!detail::pole_in(rep.poles, R + eps, weak_hi - eps)) {
        rep.classification = RhClass::Weak;
    } else {
        rep.classification = RhClass::Violated;
    }

    // Spectral radius of the dart transition matrix is 1/R_G and lies
    // between its minimum and maximum row sums.
    const double rho = 1.0 / R;
    const double slack = 1e-9 * std::max(1.0, rho);
    rep.kotani_sunada_ok = static_cast<double>(rep.branching.min_successors) - slack <= rho &&
                           rho <= static_cast<double>(rep.branching.max_successors) + slack;
    return rep;
}

} // namespace zetaforge

#endif // ZETAFORGE_ZETA_HPP
