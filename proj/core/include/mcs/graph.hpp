#ifndef MCS_GRAPH_HPP
#define MCS_GRAPH_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mcs/vertex_subset.hpp"

namespace mcs {

/// Hop distance returned for vertices in a different component.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Simple undirected graph with a vertex coloring. Colors are 1..alpha and every
/// color in that range is used. Vertices are 0-based internally; the text formats
/// use 1-based ids.
///
/// The graph is immutable after construction. All-pairs hop distances are computed
/// once in the constructor, so every metric query below is a table lookup.
class ColoredGraph {
public:
    ColoredGraph() = default;

    /// Throws InputError on self-loops, out-of-range endpoints, colors < 1 or a
    /// color range with gaps. Duplicate edges are merged.
    ColoredGraph(std::vector<Color> colors, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t vertex_count() const { return colors_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    int alpha() const { return alpha_; }
    bool connected() const { return connected_; }

    Color color(Vertex v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    int distance(Vertex u, Vertex v) const { return distances_[u * colors_.size() + v]; }

    VertexSubset all_vertices() const { return VertexSubset::full(vertex_count()); }
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Throws InputError when v is not a vertex.
    void check_vertex(Vertex v) const;

private:
    std::vector<Color> colors_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<int> distances_;
    std::size_t edge_count_ = 0;
    int alpha_ = 0;
    bool connected_ = true;
};

/// Breadth-first hop distances from `source`; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const ColoredGraph& g, Vertex source);

/// One shortest u-v path (u first, v last), or nullopt when u and v are in different
/// components. Ties are broken toward smaller vertex ids.
std::optional<std::vector<Vertex>> shortest_path(const ColoredGraph& g, Vertex u, Vertex v);

/// d(v, U): minimum hop distance from v to a member of U.
int distance_to_set(const ColoredGraph& g, Vertex v, const VertexSubset& U);

/// NN(v, U): the members of U at minimum distance from v. Throws InputError if U is empty.
VertexSubset nearest_neighbors(const ColoredGraph& g, Vertex v, const VertexSubset& U);

/// NN(X, U): union of NN(v, U) over v in X.
VertexSubset nearest_neighbors(const ColoredGraph& g, const VertexSubset& X, const VertexSubset& U);

/// COV(v, U): nearest neighbors of v in U that share v's color.
VertexSubset covering_set(const ColoredGraph& g, Vertex v, const VertexSubset& U);

/// True iff COV(v, U) is nonempty. An empty U covers nothing.
bool is_covered(const ColoredGraph& g, Vertex v, const VertexSubset& U);

/// True iff every vertex of X is covered by U.
bool covers(const ColoredGraph& g, const VertexSubset& U, const VertexSubset& X);

/// Vertices of g not covered by S, ascending.
std::vector<Vertex> uncovered_vertices(const ColoredGraph& g, const VertexSubset& S);

/// Consistency test: every vertex has a same-colored vertex among its nearest
/// neighbors in S. Throws InputError for empty S and DisconnectedError for a
/// disconnected graph.
bool is_consistent_subset(const ColoredGraph& g, const VertexSubset& S);

/// Distinct colors of the members of U, ascending.
std::vector<Color> colors_of(const ColoredGraph& g, const VertexSubset& U);

}  // namespace mcs

#endif
