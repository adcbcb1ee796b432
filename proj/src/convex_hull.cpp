#include "sortdel/convex_hull.hpp"

#include <algorithm>
#include <numeric>

#include "sortdel/detail/hull_walk.hpp"
#include "sortdel/errors.hpp"

namespace sortdel {

PointSet sort_points(std::span<const Point2> raw)
{
    if (raw.empty()) throw EmptyInput();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!is_finite(raw[i])) throw NonFiniteCoordinate(i + 1);
    }

    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lex_less(raw[a], raw[b])) return true;
        if (lex_less(raw[b], raw[a])) return false;
        return a < b;
    });

    PointSet ps;
    ps.points.reserve(raw.size());
    ps.original_index.reserve(raw.size());
    ps.input_to_sorted.resize(raw.size());
    for (const std::size_t i : order) {
        if (ps.points.empty() || !(ps.points.back() == raw[i])) {
            ps.points.push_back(raw[i]);
            ps.original_index.push_back(i);
        }
        ps.input_to_sorted[i] = static_cast<Index>(ps.points.size() - 1);
    }
    return ps;
}

PointSet presorted(std::vector<Point2> points)
{
    PointSet ps;
    ps.points = std::move(points);
    ps.original_index.resize(ps.points.size());
    std::iota(ps.original_index.begin(), ps.original_index.end(), std::size_t{0});
    ps.input_to_sorted.resize(ps.points.size());
    std::iota(ps.input_to_sorted.begin(), ps.input_to_sorted.end(), Index{0});
    return ps;
}

InitialTriangle build_initial_triangle(const PointSet& ps, OpCounters* counters)
{
    const std::size_t n = ps.size();
    if (n < 3) throw AllCollinear();

    for (std::size_t i = 2; i < n; ++i) {
        const Orientation side = to_left(ps.points[i], ps.points[0], ps.points[i - 1], counters);
        if (side == Orientation::Collinear) continue;

        InitialTriangle out;
        out.k1 = i + 1;
        auto& ids = out.hull.indices;
        ids.reserve(i + 1);
        if (side == Orientation::Left) {
            for (Index j = 0; j <= i; ++j) ids.push_back(j);
            out.hull.i_xmax = i;
        } else {
            ids.push_back(0);
            for (Index j = static_cast<Index>(i); j >= 1; --j) ids.push_back(j);
            out.hull.i_xmax = 1;
        }
        if (counters) counters->k1 = out.k1;
        return out;
    }
    throw AllCollinear();
}

TangentPair find_tangents(const PointSet& ps, const HullChain& hull, const Point2& p,
                          OpCounters* counters)
{
    const detail::VectorCycle cyc(ps.points, hull.indices);
    const auto w = detail::walk_tangents(cyc, hull.i_xmax, p, counters);
    return {w.lower, w.upper, w.xmax_not_lower};
}

HullChain add_point_to_hull(const PointSet& ps, HullChain hull, Index p, OpCounters* counters)
{
    const TangentPair t = find_tangents(ps, hull, ps.points[p], counters);
    auto& ids = hull.indices;
    const std::size_t before = ids.size();

    if (t.a1 < t.a2) {
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(t.a1 + 1),
                  ids.begin() + static_cast<std::ptrdiff_t>(t.a2));
        ids.insert(ids.begin() + static_cast<std::ptrdiff_t>(t.a1 + 1), p);
        hull.i_xmax = t.a1 + 1;
    } else {
        // The facing arc wraps past position 0: keep a2..a1 and append p.
        std::vector<Index> kept(ids.begin() + static_cast<std::ptrdiff_t>(t.a2),
                                ids.begin() + static_cast<std::ptrdiff_t>(t.a1 + 1));
        kept.push_back(p);
        ids = std::move(kept);
        hull.i_xmax = ids.size() - 1;
    }

    if (counters) {
        if (t.xmax_not_lower) ++counters->h;
        counters->delta_l += static_cast<std::int64_t>(ids.size()) - static_cast<std::int64_t>(before);
        ++counters->insertions;
    }
    return hull;
}

HullResult convex_hull(std::span<const Point2> raw) { return convex_hull(sort_points(raw)); }

HullResult convex_hull(PointSet ps)
{
    HullResult out;
    out.points = std::move(ps);
    const auto& pts = out.points.points;
    OpCounters& c = out.counters;

    InitialTriangle init;
    try {
        init = build_initial_triangle(out.points, &c);
    } catch (const AllCollinear&) {
        out.hull.degenerate = true;
        out.hull.indices.push_back(0);
        if (pts.size() > 1) out.hull.indices.push_back(static_cast<Index>(pts.size() - 1));
        out.hull.i_xmax = out.hull.indices.size() - 1;
        c.l = out.hull.size();
        return out;
    }

    detail::LinkedHull hull(pts, init.hull.indices, init.hull.indices[init.hull.i_xmax]);
    for (std::size_t i = init.k1; i < pts.size(); ++i) {
        const auto w = detail::walk_tangents(hull, hull.xmax(), pts[i], &c);
        const std::size_t removed = hull.insert(static_cast<Index>(i), w.lower, w.upper);
        if (w.xmax_not_lower) ++c.h;
        c.delta_l += 1 - static_cast<std::int64_t>(removed);
        ++c.insertions;
    }
    out.hull.indices = hull.to_vector(&out.hull.i_xmax);
    c.l = out.hull.size();
    return out;
}

}  // namespace sortdel
