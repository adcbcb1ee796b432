#pragma once

#include <cstddef>
#include <vector>

#include "sortdel/errors.hpp"
#include "sortdel/geometry.hpp"

namespace sortdel::detail {

template <class Handle>
struct WalkResult {
    Handle lower;
    Handle upper;
    bool xmax_not_lower = false;
};

/// Tangent search from the xmax vertex. An edge counts as visible only when p
/// is strictly to its right, so collinear vertices stop the walk and survive.
///
/// One call decides whether the xmax vertex is the lower tangent. If it is,
/// the edge leaving it must be visible and the upper walk starts one vertex
/// further on. Every further call either moves a tangent (and removes one
/// vertex) or ends a walk, which is what makes the ToLeft tally exact.
template <class Cycle>
WalkResult<typename Cycle::Handle> walk_tangents(const Cycle& cyc, typename Cycle::Handle xmax,
                                                 const Point2& p, OpCounters* counters)
{
    using H = typename Cycle::Handle;
    const std::size_t limit = cyc.size();
    auto visible = [&](H from, H to) {
        return to_left(p, cyc.point(from), cyc.point(to), counters) == Orientation::Right;
    };

    WalkResult<H> r{xmax, xmax, false};
    if (!visible(cyc.prev(xmax), xmax)) {
        r.upper = cyc.next(xmax);
    } else {
        r.xmax_not_lower = true;
        r.lower = cyc.prev(xmax);
        std::size_t steps = 0;
        while (visible(cyc.prev(r.lower), r.lower)) {
            r.lower = cyc.prev(r.lower);
            if (++steps > limit) throw MapInconsistency("lower tangent walk did not terminate");
        }
    }
    std::size_t steps = 0;
    while (visible(r.upper, cyc.next(r.upper))) {
        r.upper = cyc.next(r.upper);
        if (++steps > limit) throw MapInconsistency("upper tangent walk did not terminate");
    }
    return r;
}

/// Hull as a doubly linked cycle over point indices; O(1) splice per insertion.
class LinkedHull {
public:
    using Handle = Index;

    LinkedHull(const std::vector<Point2>& pts, const std::vector<Index>& ccw, Index xmax)
        : pts_(&pts), next_(pts.size()), prev_(pts.size()), xmax_(xmax), size_(ccw.size())
    {
        head_ = ccw.front();
        for (std::size_t i = 0; i < ccw.size(); ++i) {
            const Index a = ccw[i];
            const Index b = ccw[(i + 1) % ccw.size()];
            next_[a] = b;
            prev_[b] = a;
        }
    }

    Handle next(Handle v) const { return next_[v]; }
    Handle prev(Handle v) const { return prev_[v]; }
    const Point2& point(Handle v) const { return (*pts_)[v]; }
    std::size_t size() const { return size_; }
    Handle xmax() const { return xmax_; }

    /// Splices p between lower and upper; returns the number of removed vertices.
    std::size_t insert(Index p, Handle lower, Handle upper)
    {
        std::size_t removed = 0;
        for (Handle v = next_[lower]; v != upper; v = next_[v]) {
            if (v == head_) head_ = lower;
            ++removed;
        }
        next_[lower] = p;
        prev_[p] = lower;
        next_[p] = upper;
        prev_[upper] = p;
        xmax_ = p;
        size_ = size_ + 1 - removed;
        return removed;
    }

    /// Materializes the cycle starting at the head vertex.
    std::vector<Index> to_vector(std::size_t* xmax_pos) const
    {
        std::vector<Index> out;
        out.reserve(size_);
        Handle v = head_;
        do {
            if (v == xmax_ && xmax_pos) *xmax_pos = out.size();
            out.push_back(v);
            v = next_[v];
        } while (v != head_);
        return out;
    }

private:
    const std::vector<Point2>* pts_;
    std::vector<Index> next_;
    std::vector<Index> prev_;
    Handle head_ = 0;
    Handle xmax_;
    std::size_t size_;
};

/// Positional view over a HullChain vector.
class VectorCycle {
public:
    using Handle = std::size_t;

    VectorCycle(const std::vector<Point2>& pts, const std::vector<Index>& ids) : pts_(pts), ids_(ids) {}

    Handle next(Handle i) const { return i + 1 == ids_.size() ? 0 : i + 1; }
    Handle prev(Handle i) const { return i == 0 ? ids_.size() - 1 : i - 1; }
    const Point2& point(Handle i) const { return pts_[ids_[i]]; }
    std::size_t size() const { return ids_.size(); }

private:
    const std::vector<Point2>& pts_;
    const std::vector<Index>& ids_;
};

}  // namespace sortdel::detail
