#ifndef MCS_INTERVAL_HPP
#define MCS_INTERVAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mcs/graph.hpp"

namespace mcs {

/// Position on the endpoint line. Real endpoints are 1..2n; 0 and 2n+1 are sentinels.
using Point = int;

/// An interval before rank compression.
struct RawInterval {
    int id = 0;
    Color color = 1;
    double left = 0;
    double right = 0;
};

struct Interval {
    int id = 0;  ///< 1-based id, equal to vertex index + 1
    Color color = 1;
    Point left = 0;
    Point right = 0;
};

/// Open range of points strictly between `left` and `right`.
struct Bar {
    Point left = 0;
    Point right = 0;

    bool contains(Point p) const { return left < p && p < right; }
    friend bool operator==(const Bar&, const Bar&) = default;
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

std::string to_string(const Bar& bar);

/// n colored intervals whose 2n endpoints are exactly 1..2n. Vertex v is the
/// interval with id v+1. Immutable after construction; the overlap graph is built
/// once and shared by every query.
class IntervalInstance {
public:
    IntervalInstance() = default;

    /// Validates the endpoint layout (distinct, covering 1..2n, left < right) and ids
    /// 1..n. Throws InputError otherwise. Connectivity is not required here.
    explicit IntervalInstance(std::vector<Interval> intervals);

    std::size_t size() const { return intervals_.size(); }
    int alpha() const { return graph_.alpha(); }
    Point last_point() const { return static_cast<Point>(2 * size() + 1); }

    const Interval& interval(Vertex v) const { return intervals_[v]; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const ColoredGraph& graph() const { return graph_; }
    Color color(Vertex v) const { return intervals_[v].color; }

    /// I[j]: the interval owning endpoint j, for j in 1..2n.
    Vertex owner(Point p) const { return owner_[static_cast<std::size_t>(p)]; }
    bool is_left_endpoint(Point p) const { return intervals_[owner(p)].left == p; }

    /// Throws InputError unless 0 <= left < right <= 2n+1.
    void check_bar(const Bar& bar) const;

private:
    std::vector<Interval> intervals_;
    std::vector<Vertex> owner_;
    ColoredGraph graph_;
};

/// Rank-compresses real endpoints onto 1..2n, keeping the relative order. Ids must
/// be a permutation of 1..n. Throws InputError on duplicate endpoint values or
/// left >= right.
IntervalInstance normalize(const std::vector<RawInterval>& raw);

/// Interval overlap graph: adjacent iff the closed ranges intersect.
ColoredGraph overlap_graph(const IntervalInstance& inst);

/// I_s (intervals with at least one endpoint inside the bar) and O_s (the rest).
struct BarSets {
    VertexSubset inside;
    VertexSubset outside;
};

BarSets bar_sets(const IntervalInstance& inst, const Bar& bar);

/// A bar is a leaf bar when O_s covers I_s under the overlap-graph metric. Bars
/// with empty I_s are leaf bars; a nonempty I_s with empty O_s is not.
bool is_leaf_bar(const IntervalInstance& inst, const Bar& bar);

/// Leaf-bar table over all point pairs 0..2n+1.
class LeafBarMatrix {
public:
    LeafBarMatrix() = default;
    explicit LeafBarMatrix(std::size_t points) : points_(points), cells_(points * points, 0) {}

    std::size_t points() const { return points_; }
    bool operator()(Point i, Point j) const {
        return cells_[static_cast<std::size_t>(i) * points_ + static_cast<std::size_t>(j)] != 0;
    }
    void set(Point i, Point j, bool value) {
        cells_[static_cast<std::size_t>(i) * points_ + static_cast<std::size_t>(j)] = value ? 1 : 0;
    }

private:
    std::size_t points_ = 0;
    std::vector<unsigned char> cells_;
};

/// M[i][j] = 1 iff i < j and (i..j) is a leaf bar.
LeafBarMatrix leaf_bar_matrix(const IntervalInstance& inst);

}  // namespace mcs

#endif
