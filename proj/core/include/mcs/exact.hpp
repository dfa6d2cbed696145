#ifndef MCS_EXACT_HPP
#define MCS_EXACT_HPP

#include <cstddef>
#include <optional>

#include "mcs/graph.hpp"

namespace mcs {

/// Default vertex-count limit for the exhaustive solvers.
inline constexpr std::size_t kDefaultExactGuard = 20;

struct ExactOptions {
    /// Largest cardinality to try; nullopt means "up to |V|".
    std::optional<std::size_t> budget;
    /// Refuse graphs with more vertices than this (SizeError).
    std::size_t guard = kDefaultExactGuard;
};

/// Minimum consistent subset by exhaustive search. Subsets are enumerated by
/// cardinality, then lexicographically, so the answer is the lexicographically
/// smallest among all minimum ones. Returns nullopt only when `budget` is set and
/// no consistent subset of at most that size exists.
///
/// Throws DisconnectedError for disconnected graphs and SizeError past the guard.
std::optional<VertexSubset> exact_mcs(const ColoredGraph& g, const ExactOptions& options = {});

/// Minimum dominating set by the same enumeration order and tie-break.
/// Throws SizeError past the guard.
VertexSubset exact_min_dominating_set(const ColoredGraph& g, const ExactOptions& options = {});

/// True iff every vertex is in S or adjacent to a member of S.
bool is_dominating_set(const ColoredGraph& g, const VertexSubset& S);

}  // namespace mcs

#endif
