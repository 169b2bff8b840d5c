#ifndef ZETAFORGE_CENSUS_HPP
#define ZETAFORGE_CENSUS_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "darts.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "series.hpp"

namespace zetaforge {

inline constexpr std::size_t max_census_horizon = 12;

struct PrimeCensus {
    std::size_t horizon = 0;
    GeodesicSeries closed;      // N_m
    std::vector<BigInt> pi;     // prime classes of length m at pi[m-1]
    std::size_t delta = 0;      // gcd of lengths with pi > 0; 0 when none
};

namespace detail {
inline void check_horizon(std::size_t horizon)
{
    if (horizon < 1 || horizon > max_census_horizon) {
        throw precondition_error("census: horizon must be in [1, " + std::to_string(max_census_horizon) +
                                 "], got " + std::to_string(horizon));
    }
}
} // namespace detail

/// N_m for m = 1..L as traces of powers of the dart transition matrix.
inline GeodesicSeries count_closed_paths(const PartiallyDirectedGraph& g, std::size_t horizon)
{
    detail::check_horizon(horizon);
    if (!g.is_normalized()) throw precondition_error("count_closed_paths: graph is not normalized");
    const auto next = dart_successors(darts(g));
    const std::size_t d = next.size();

    GeodesicSeries out;
    out.counts.assign(horizon, 0);
    // walks[s][t]: non-backtracking dart sequences of the current length
    // starting at s and ending at t.
    std::vector<std::vector<BigInt>> walks(d, std::vector<BigInt>(d));
    for (std::size_t s = 0; s < d; ++s) walks[s][s] = 1;
    for (std::size_t m = 1; m <= horizon; ++m) {
        BigInt trace = 0;
        for (std::size_t s = 0; s < d; ++s) {
            // close the walk: last dart may be followed by the first one
            for (std::size_t t = 0; t < d; ++t) {
                if (walks[s][t] == 0) continue;
                for (auto u : next[t])
                    if (u == s) trace += walks[s][t];
            }
        }
        out.counts[m - 1] = trace;
        if (m == horizon) break;
        std::vector<std::vector<BigInt>> grown(d, std::vector<BigInt>(d));
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t t = 0; t < d; ++t) {
                if (walks[s][t] == 0) continue;
                for (auto u : next[t]) grown[s][u] += walks[s][t];
            }
        walks = std::move(grown);
    }
    return out;
}

namespace detail {

struct PrimeWalker {
    const std::vector<std::vector<std::size_t>>& next;
    std::size_t horizon;
    std::vector<std::size_t> path;
    std::vector<BigInt> closed;     // all closed sequences per length
    std::vector<BigInt> primitive;  // primitive closed sequences per length
    std::vector<BigInt> classes;    // one per rotation class

    bool closes() const
    {
        for (auto u : next[path.back()])
            if (u == path.front()) return true;
        return false;
    }

    // Smallest p dividing m with path equal to its rotation by p.
    std::size_t period() const
    {
        const std::size_t m = path.size();
        for (std::size_t p = 1; p <= m; ++p) {
            if (m % p != 0) continue;
            bool same = true;
            for (std::size_t k = 0; k < m && same; ++k) same = path[k] == path[(k + p) % m];
            if (same) return p;
        }
        return m;
    }

    bool is_min_rotation() const
    {
        const std::size_t m = path.size();
        for (std::size_t r = 1; r < m; ++r) {
            for (std::size_t k = 0; k < m; ++k) {
                const auto a = path[(k + r) % m];
                const auto b = path[k];
                if (a < b) return false;
                if (a > b) break;
            }
        }
        return true;
    }

    void walk()
    {
        const std::size_t m = path.size();
        if (closes()) {
            closed[m - 1] += 1;
            if (period() == m) {
                primitive[m - 1] += 1;
                if (is_min_rotation()) classes[m - 1] += 1;
            }
        }
        if (m == horizon) return;
        for (auto u : next[path.back()]) {
            path.push_back(u);
            walk();
            path.pop_back();
        }
    }
};

} // namespace detail

/// Primes of length <= L by exhaustive search: primitive closed
/// backtrackless tailless dart sequences up to cyclic rotation. P and its
/// reverse are different primes.
inline PrimeCensus enumerate_primes(const PartiallyDirectedGraph& g, std::size_t horizon)
{
    detail::check_horizon(horizon);
    if (!g.is_normalized()) throw precondition_error("enumerate_primes: graph is not normalized");
    const auto next = dart_successors(darts(g));

    detail::PrimeWalker w{next, horizon, {}, std::vector<BigInt>(horizon), std::vector<BigInt>(horizon),
                          std::vector<BigInt>(horizon)};
    for (std::size_t s = 0; s < next.size(); ++s) {
        w.path = {s};
        w.walk();
    }

    PrimeCensus census;
    census.horizon = horizon;
    census.pi = w.classes;
    for (std::size_t m = 1; m <= horizon; ++m) {
        if (w.primitive[m - 1] != w.classes[m - 1] * m) {
            throw inconsistency_error("enumerate_primes: a class of length " + std::to_string(m) +
                                      " does not have exactly m rotations");
        }
        if (census.pi[m - 1] > 0) census.delta = std::gcd(census.delta, m);
    }
    // N_m = sum_{d|m} d pi(d), checked against the raw closed-sequence count.
    census.closed.counts.assign(horizon, 0);
    for (std::size_t m = 1; m <= horizon; ++m) {
        for (std::size_t d = 1; d <= m; ++d)
            if (m % d == 0) census.closed.counts[m - 1] += census.pi[d - 1] * d;
        if (census.closed.counts[m - 1] != w.closed[m - 1]) {
            throw inconsistency_error("enumerate_primes: N_" + std::to_string(m) +
                                      " disagrees with the prime decomposition");
        }
    }
    return census;
}

/// (m, pi(m) m R^m / delta) for every m <= L divisible by delta.
inline std::vector<std::pair<std::size_t, double>> pnt_ratios(const PrimeCensus& census, double radius)
{
    if (census.delta == 0) throw precondition_error("pnt_ratios: no primes found up to the horizon");
    std::vector<std::pair<std::size_t, double>> out;
    for (std::size_t m = census.delta; m <= census.horizon; m += census.delta) {
        const double pi = static_cast<double>(census.pi[m - 1]);
        out.emplace_back(m, pi * static_cast<double>(m) * std::pow(radius, static_cast<double>(m)) /
                                static_cast<double>(census.delta));
    }
    return out;
}

} // namespace zetaforge

#endif // ZETAFORGE_CENSUS_HPP
