#ifndef ZETAFORGE_GRAPH_HPP
#define ZETAFORGE_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace zetaforge {

using NodePair = std::pair<std::size_t, std::size_t>;

/// Finite multigraph mixing undirected edges (loops allowed) and directed
/// arrows. Multiplicities are stored as counts on node pairs; edge keys are
/// ordered so that first <= second.
class PartiallyDirectedGraph {
public:
    explicit PartiallyDirectedGraph(std::size_t node_count) : n_(node_count)
    {
        if (node_count == 0) throw precondition_error("graph: node_count must be positive");
    }

    PartiallyDirectedGraph(std::size_t node_count, const std::vector<NodePair>& edges,
                           const std::vector<NodePair>& arrows)
        : PartiallyDirectedGraph(node_count)
    {
        for (auto [i, j] : edges) add_edge(i, j);
        for (auto [i, j] : arrows) add_arrow(i, j);
    }

    PartiallyDirectedGraph& add_edge(std::size_t i, std::size_t j, unsigned count = 1)
    {
        check(i, j);
        if (count) edges_[{std::min(i, j), std::max(i, j)}] += count;
        return *this;
    }

    PartiallyDirectedGraph& add_arrow(std::size_t i, std::size_t j, unsigned count = 1)
    {
        check(i, j);
        if (count) arrows_[{i, j}] += count;
        return *this;
    }

    std::size_t node_count() const { return n_; }
    const std::map<NodePair, unsigned>& edges() const { return edges_; }
    const std::map<NodePair, unsigned>& arrows() const { return arrows_; }

    unsigned edge_multiplicity(std::size_t i, std::size_t j) const
    {
        auto it = edges_.find({std::min(i, j), std::max(i, j)});
        return it == edges_.end() ? 0 : it->second;
    }
    unsigned arrow_multiplicity(std::size_t i, std::size_t j) const
    {
        auto it = arrows_.find({i, j});
        return it == arrows_.end() ? 0 : it->second;
    }

    std::size_t edge_count() const { return total(edges_); }
    std::size_t arrow_count() const { return total(arrows_); }
    bool is_undirected() const { return arrows_.empty(); }
    bool is_fully_directed() const { return edges_.empty(); }

    /// No arrow loops and no reciprocal arrow pairs.
    bool is_normalized() const
    {
        for (const auto& [key, count] : arrows_) {
            if (key.first == key.second) return false;
            if (arrows_.count({key.second, key.first})) return false;
        }
        return true;
    }

    friend bool operator==(const PartiallyDirectedGraph&, const PartiallyDirectedGraph&) = default;

private:
    void check(std::size_t i, std::size_t j) const
    {
        if (i >= n_ || j >= n_) {
            throw precondition_error("graph: node index out of range (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ") with " + std::to_string(n_) + " nodes");
        }
    }
    static std::size_t total(const std::map<NodePair, unsigned>& m)
    {
        std::size_t s = 0;
        for (const auto& kv : m) s += kv.second;
        return s;
    }

    std::size_t n_;
    std::map<NodePair, unsigned> edges_;
    std::map<NodePair, unsigned> arrows_;
};

/// Arrow loops become loop edges; each reciprocal arrow pair i->j, j->i
/// becomes one edge {i,j}. Existing edges are kept.
inline PartiallyDirectedGraph normalize(const PartiallyDirectedGraph& g)
{
    PartiallyDirectedGraph out(g.node_count());
    for (const auto& [key, count] : g.edges()) out.add_edge(key.first, key.second, count);
    for (const auto& [key, count] : g.arrows()) {
        const auto [i, j] = key;
        if (i == j) {
            out.add_edge(i, i, count);
            continue;
        }
        const unsigned back = g.arrow_multiplicity(j, i);
        const unsigned paired = std::min(count, back);
        if (i < j) out.add_edge(i, j, paired);
        out.add_arrow(i, j, count - paired);
    }
    return out;
}

/// A, P, Q and the numerator exponent of the three-matrix determinant formula.
struct MatrixBundle {
    IntMatrix A;  // walks of length one along edges or arrows; loops count twice on the diagonal
    IntMatrix P;  // arrows only
    IntMatrix Q;  // diag(undirected degree) - I
    std::int64_t exponent = 0;  // node count minus edge count, equals -Tr(Q - I)/2
};

inline std::vector<std::int64_t> undirected_degrees(const PartiallyDirectedGraph& g)
{
    std::vector<std::int64_t> deg(g.node_count(), 0);
    for (const auto& [key, count] : g.edges()) {
        deg[key.first] += count;
        deg[key.second] += count;
    }
    return deg;
}

inline MatrixBundle matrices(const PartiallyDirectedGraph& g)
{
    if (!g.is_normalized()) throw precondition_error("matrices: graph is not normalized");
    const std::size_t n = g.node_count();
    MatrixBundle b{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n), 0};
    for (const auto& [key, count] : g.edges()) {
        const auto [i, j] = key;
        if (i == j) {
            b.A(i, i) += 2 * static_cast<std::int64_t>(count);
        } else {
            b.A(i, j) += count;
            b.A(j, i) += count;
        }
    }
    for (const auto& [key, count] : g.arrows()) {
        b.A(key.first, key.second) += count;
        b.P(key.first, key.second) += count;
    }
    const auto deg = undirected_degrees(g);
    for (std::size_t i = 0; i < n; ++i) b.Q(i, i) = deg[i] - 1;
    b.exponent = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(g.edge_count());
    return b;
}

struct DegreeProfile {
    std::int64_t min_degree = 0;  // p + 1
    std::int64_t max_degree = 0;  // q + 1
    bool regular = false;
};

namespace detail {
inline DegreeProfile profile_of(const std::vector<std::int64_t>& deg)
{
    const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
    return {*lo, *hi, *lo == *hi};
}
} // namespace detail

/// Total degree per node: undirected degree (loops count 2) plus arrow in-
/// and out-degree.
inline DegreeProfile degree_profile(const PartiallyDirectedGraph& g)
{
    auto deg = undirected_degrees(g);
    for (const auto& [key, count] : g.arrows()) {
        deg[key.first] += count;
        deg[key.second] += count;
    }
    return detail::profile_of(deg);
}

/// Row sums of A: undirected degree plus outgoing arrows. This is the degree
/// that fixes q in the weak Riemann Hypothesis annulus.
inline DegreeProfile out_degree_profile(const PartiallyDirectedGraph& g)
{
    auto deg = undirected_degrees(g);
    for (const auto& [key, count] : g.arrows()) deg[key.first] += count;
    return detail::profile_of(deg);
}

namespace detail {
inline std::vector<std::vector<std::size_t>> support(const PartiallyDirectedGraph& g)
{
    std::vector<std::vector<std::size_t>> adj(g.node_count());
    auto link = [&](std::size_t i, std::size_t j) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    };
    for (const auto& kv : g.edges()) link(kv.first.first, kv.first.second);
    for (const auto& kv : g.arrows()) link(kv.first.first, kv.first.second);
    return adj;
}
} // namespace detail

inline bool is_connected(const PartiallyDirectedGraph& g)
{
    const auto adj = detail::support(g);
    std::vector<bool> seen(g.node_count(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        const auto v = todo.front();
        todo.pop();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                todo.push(w);
            }
        }
    }
    return reached == g.node_count();
}

/// Two-colouring (0/1 per node) of the undirected support, or nullopt when
/// an odd cycle or a loop exists. Each component is coloured from its
/// lowest-numbered node.
inline std::optional<std::vector<int>> bipartition(const PartiallyDirectedGraph& g)
{
    const auto adj = detail::support(g);
    std::vector<int> colour(g.node_count(), -1);
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<std::size_t> todo;
        todo.push(s);
        while (!todo.empty()) {
            const auto v = todo.front();
            todo.pop();
            for (auto w : adj[v]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    todo.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

/// Graph from a printed full adjacency matrix: diagonal 2k means k loops,
/// the symmetric part of each off-diagonal pair becomes edges and the excess
/// becomes arrows.
inline PartiallyDirectedGraph from_adjacency(const IntMatrix& m)
{
    if (!m.is_square() || m.rows() == 0) throw precondition_error("from_adjacency: need a non-empty square matrix");
    const std::size_t n = m.rows();
    PartiallyDirectedGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) < 0) throw precondition_error("from_adjacency: negative entry");
        }
        if (m(i, i) % 2 != 0) throw precondition_error("from_adjacency: odd diagonal entry");
        g.add_edge(i, i, static_cast<unsigned>(m(i, i) / 2));
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto both = std::min(m(i, j), m(j, i));
            g.add_edge(i, j, static_cast<unsigned>(both));
            g.add_arrow(i, j, static_cast<unsigned>(m(i, j) - both));
            g.add_arrow(j, i, static_cast<unsigned>(m(j, i) - both));
        }
    }
    return g;
}

} // namespace zetaforge

#endif // ZETAFORGE_GRAPH_HPP
