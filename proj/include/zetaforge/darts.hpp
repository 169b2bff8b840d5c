#ifndef ZETAFORGE_DARTS_HPP
#define ZETAFORGE_DARTS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace zetaforge {

/// Oriented half of an edge, or an arrow. A dart runs from tail to head.
struct Dart {
    std::size_t id = 0;
    std::size_t tail = 0;
    std::size_t head = 0;
    std::optional<std::size_t> inverse;
};

/// Darts in a fixed order: for each edge copy the pair (i->j, j->i), then
/// one dart per arrow copy. A loop gives two mutually inverse darts at the
/// same node.
inline std::vector<Dart> darts(const PartiallyDirectedGraph& g)
{
    std::vector<Dart> out;
    for (const auto& [key, count] : g.edges()) {
        for (unsigned c = 0; c < count; ++c) {
            const std::size_t a = out.size();
            out.push_back({a, key.first, key.second, a + 1});
            out.push_back({a + 1, key.second, key.first, a});
        }
    }
    for (const auto& [key, count] : g.arrows()) {
        for (unsigned c = 0; c < count; ++c) out.push_back({out.size(), key.first, key.second, std::nullopt});
    }
    return out;
}

/// successors[d] lists the darts that may follow d without backtracking.
inline std::vector<std::vector<std::size_t>> dart_successors(const std::vector<Dart>& ds)
{
    std::vector<std::vector<std::size_t>> by_tail;
    for (const auto& d : ds) {
        if (d.tail >= by_tail.size()) by_tail.resize(d.tail + 1);
        by_tail[d.tail].push_back(d.id);
    }
    std::vector<std::vector<std::size_t>> next(ds.size());
    for (const auto& d : ds) {
        if (d.head >= by_tail.size()) continue;
        for (auto e : by_tail[d.head]) {
            if (!d.inverse || *d.inverse != e) next[d.id].push_back(e);
        }
    }
    return next;
}

struct BranchingBounds {
    std::size_t min_successors = 0;
    std::size_t max_successors = 0;
};

/// Min and max row sums of the dart transition matrix. Its spectral radius,
/// the reciprocal of the zeta radius of convergence, lies between them.
inline BranchingBounds dart_branching(const PartiallyDirectedGraph& g)
{
    const auto next = dart_successors(darts(g));
    if (next.empty()) return {};
    BranchingBounds b{next.front().size(), next.front().size()};
    for (const auto& s : next) {
        b.min_successors = std::min(b.min_successors, s.size());
        b.max_successors = std::max(b.max_successors, s.size());
    }
    return b;
}

} // namespace zetaforge

#endif // ZETAFORGE_DARTS_HPP
