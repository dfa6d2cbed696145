#include "mcs/exact.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mcs/errors.hpp"

namespace mcs {
namespace {

void enforce_guard(const ColoredGraph& g, const ExactOptions& options) {
    if (g.vertex_count() > options.guard)
        throw SizeError("exhaustive search refused: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds guard " + std::to_string(options.guard));
    if (g.vertex_count() > 63)
        throw SizeError("exhaustive search supports at most 63 vertices");
}

// Visits k-subsets of 0..n-1 in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return false;
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool consistent(const ColoredGraph& g, const std::vector<Vertex>& members) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int best = kUnreachable;
        bool hit = false;
        for (Vertex u : members) {
            const int d = g.distance(v, u);
            if (d < best) {
                best = d;
                hit = g.color(u) == g.color(v);
            } else if (d == best && !hit) {
                hit = g.color(u) == g.color(v);
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

std::optional<VertexSubset> exact_mcs(const ColoredGraph& g, const ExactOptions& options) {
    enforce_guard(g, options);
    if (!g.connected()) throw DisconnectedError("exact_mcs requires a connected graph");
    const auto n = g.vertex_count();
    if (n == 0) return std::nullopt;
    const auto limit = std::min(n, options.budget.value_or(n));
    // A consistent subset needs every color, so nothing smaller than alpha can work.
    for (std::size_t k = static_cast<std::size_t>(g.alpha()); k <= limit; ++k) {
        std::optional<VertexSubset> found;
        for_each_combination(n, k, [&](const std::vector<Vertex>& members) {
            if (!consistent(g, members)) return false;
            found = VertexSubset::from_ids(n, members);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool is_dominating_set(const ColoredGraph& g, const VertexSubset& S) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (S.contains(v)) continue;
        bool hit = false;
        for (Vertex w : g.neighbors(v)) hit = hit || S.contains(w);
        if (!hit) return false;
    }
    return true;
}

VertexSubset exact_min_dominating_set(const ColoredGraph& g, const ExactOptions& options) {
    enforce_guard(g, options);
    const auto n = g.vertex_count();
    std::vector<std::uint64_t> closed(n);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = std::uint64_t{1} << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
    }
    const std::uint64_t everything = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t k = 0; k <= n; ++k) {
        std::optional<VertexSubset> found;
        for_each_combination(n, k, [&](const std::vector<Vertex>& members) {
            std::uint64_t dominated = 0;
            for (Vertex u : members) dominated |= closed[u];
            if (dominated != everything) return false;
            found = VertexSubset::from_ids(n, members);
            return true;
        });
        if (found) return *found;
    }
    return VertexSubset(n);
}

}  // namespace mcs
