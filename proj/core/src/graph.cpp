#include "mcs/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mcs/errors.hpp"

namespace mcs {

ColoredGraph::ColoredGraph(std::vector<Color> colors,
                           const std::vector<std::pair<Vertex, Vertex>>& edges)
    : colors_(std::move(colors)), adjacency_(colors_.size()) {
    const auto n = colors_.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (colors_[v] < 1)
            throw InputError("vertex " + std::to_string(v + 1) + " has color < 1");
        alpha_ = std::max(alpha_, colors_[v]);
    }
    std::vector<bool> used(static_cast<std::size_t>(alpha_) + 1, false);
    for (auto c : colors_) used[static_cast<std::size_t>(c)] = true;
    for (int c = 1; c <= alpha_; ++c)
        if (!used[static_cast<std::size_t>(c)])
            throw InputError("color " + std::to_string(c) + " is unused; colors must be 1..alpha");

    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop on vertex " + std::to_string(u + 1));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        edge_count_ += adj.size();
    }
    edge_count_ /= 2;

    distances_.resize(n * n);
    for (Vertex s = 0; s < n; ++s) {
        auto row = bfs_distances(*this, s);
        std::copy(row.begin(), row.end(), distances_.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
    connected_ = std::none_of(distances_.begin(), distances_.end(),
                              [](int d) { return d == kUnreachable; });
}

bool ColoredGraph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> ColoredGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void ColoredGraph::check_vertex(Vertex v) const {
    if (v >= vertex_count())
        throw InputError("vertex id " + std::to_string(v + 1) + " out of range 1.." +
                         std::to_string(vertex_count()));
}

std::vector<int> bfs_distances(const ColoredGraph& g, Vertex source) {
    g.check_vertex(source);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<std::vector<Vertex>> shortest_path(const ColoredGraph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (g.distance(u, v) == kUnreachable) return std::nullopt;
    // Walk from u, always stepping to the smallest neighbor one hop closer to v.
    std::vector<Vertex> path{u};
    while (path.back() != v) {
        auto cur = path.back();
        for (Vertex w : g.neighbors(cur)) {
            if (g.distance(w, v) == g.distance(cur, v) - 1) {
                path.push_back(w);
                break;
            }
        }
    }
    return path;
}

int distance_to_set(const ColoredGraph& g, Vertex v, const VertexSubset& U) {
    int best = kUnreachable;
    U.for_each([&](Vertex u) { best = std::min(best, g.distance(v, u)); });
    return best;
}

VertexSubset nearest_neighbors(const ColoredGraph& g, Vertex v, const VertexSubset& U) {
    g.check_vertex(v);
    if (U.empty()) throw InputError("nearest_neighbors: candidate set is empty");
    const int best = distance_to_set(g, v, U);
    VertexSubset out(g.vertex_count());
    U.for_each([&](Vertex u) {
        if (g.distance(v, u) == best) out.insert(u);
    });
    return out;
}

VertexSubset nearest_neighbors(const ColoredGraph& g, const VertexSubset& X,
                               const VertexSubset& U) {
    VertexSubset out(g.vertex_count());
    X.for_each([&](Vertex v) { out |= nearest_neighbors(g, v, U); });
    return out;
}

VertexSubset covering_set(const ColoredGraph& g, Vertex v, const VertexSubset& U) {
    auto nn = nearest_neighbors(g, v, U);
    VertexSubset out(g.vertex_count());
    nn.for_each([&](Vertex u) {
        if (g.color(u) == g.color(v)) out.insert(u);
    });
    return out;
}

bool is_covered(const ColoredGraph& g, Vertex v, const VertexSubset& U) {
    int best = kUnreachable;
    bool hit = false;
    U.for_each([&](Vertex u) {
        const int d = g.distance(v, u);
        if (d < best) {
            best = d;
            hit = g.color(u) == g.color(v);
        } else if (d == best && g.color(u) == g.color(v)) {
            hit = true;
        }
    });
    return hit && best != kUnreachable;
}

bool covers(const ColoredGraph& g, const VertexSubset& U, const VertexSubset& X) {
    bool ok = true;
    X.for_each([&](Vertex v) { ok = ok && is_covered(g, v, U); });
    return ok;
}

std::vector<Vertex> uncovered_vertices(const ColoredGraph& g, const VertexSubset& S) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!is_covered(g, v, S)) out.push_back(v);
    return out;
}

bool is_consistent_subset(const ColoredGraph& g, const VertexSubset& S) {
    if (S.empty()) throw InputError("a consistent subset is never empty");
    if (!g.connected()) throw DisconnectedError("consistency is undefined on a disconnected graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!is_covered(g, v, S)) return false;
    return true;
}

std::vector<Color> colors_of(const ColoredGraph& g, const VertexSubset& U) {
    std::vector<Color> out;
    U.for_each([&](Vertex v) { out.push_back(g.color(v)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace mcs
