#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sortdel/geometry.hpp"

namespace sortdel {

/// Points in lexicographic (x, then y) order with exact duplicates removed.
struct PointSet {
    std::vector<Point2> points;
    std::vector<std::size_t> original_index;  // sorted position -> first input position
    std::vector<Index> input_to_sorted;       // input position -> sorted position

    std::size_t size() const { return points.size(); }
    const Point2& operator[](Index i) const { return points[i]; }
};

/// Throws EmptyInput or NonFiniteCoordinate (line = 1-based input position).
PointSet sort_points(std::span<const Point2> raw);

/// Wraps already-sorted, duplicate-free points without copying through the sort.
PointSet presorted(std::vector<Point2> points);

/// Counterclockwise cycle of PointSet indices. Collinear boundary vertices are kept.
struct HullChain {
    std::vector<Index> indices;
    std::size_t i_xmax = 0;   // position of the lexicographically largest vertex
    bool degenerate = false;  // set for all-collinear input (two extremes only)

    std::size_t size() const { return indices.size(); }
};

/// Hull positions of the two tangent points seen from an outside point.
struct TangentPair {
    std::size_t a1 = 0;  // lower tangent, reached walking clockwise from i_xmax
    std::size_t a2 = 0;  // upper tangent, reached walking counterclockwise
    bool xmax_not_lower = false;
};

struct InitialTriangle {
    HullChain hull;
    std::size_t k1 = 0;
};

/// Consumes the collinear prefix P[0..k1-2] plus the first off-line point.
/// Uses exactly k1 - 2 ToLeft calls. Throws AllCollinear.
InitialTriangle build_initial_triangle(const PointSet& ps, OpCounters* counters = nullptr);

/// Requires p lexicographically greater than every hull vertex.
TangentPair find_tangents(const PointSet& ps, const HullChain& hull, const Point2& p,
                          OpCounters* counters = nullptr);

/// Inserts ps[p] and drops the vertices strictly between the tangents on the
/// side facing it. Updates h, delta_l and insertions when counters are given.
HullChain add_point_to_hull(const PointSet& ps, HullChain hull, Index p,
                            OpCounters* counters = nullptr);

struct HullResult {
    PointSet points;
    HullChain hull;
    OpCounters counters;
};

HullResult convex_hull(std::span<const Point2> raw);
HullResult convex_hull(PointSet ps);

}  // namespace sortdel
