#include "sortdel/delaunay.hpp"

#include <algorithm>
#include <utility>

#include "sortdel/detail/hull_walk.hpp"
#include "sortdel/errors.hpp"

namespace sortdel {

namespace {

std::string edge_name(Index u, Index v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

bool lo_less(const TriangulationMap::Entry& en, Index lo) { return en.lo < lo; }

}  // namespace

const TriangulationMap::Entry* TriangulationMap::slot(EdgeKey e) const
{
    if (e.hi >= buckets_.size()) return nullptr;
    const auto& b = buckets_[e.hi];
    auto it = std::lower_bound(b.begin(), b.end(), e.lo, lo_less);
    return it != b.end() && it->lo == e.lo ? &*it : nullptr;
}

TriangulationMap::Entry* TriangulationMap::slot(EdgeKey e)
{
    return const_cast<Entry*>(std::as_const(*this).slot(e));
}

const Opposites* TriangulationMap::find(EdgeKey e) const
{
    const Entry* en = slot(e);
    return en && !en->opp.empty() ? &en->opp : nullptr;
}

Opposites& TriangulationMap::acquire(EdgeKey e)
{
    if (e.hi >= buckets_.size()) buckets_.resize(std::size_t{e.hi} + 1);
    auto& b = buckets_[e.hi];
    auto it = std::lower_bound(b.begin(), b.end(), e.lo, lo_less);
    if (it == b.end() || it->lo != e.lo) it = b.insert(it, Entry{e.lo, {}});
    if (it->opp.empty()) ++edges_;
    return it->opp;
}

void TriangulationMap::put(Index u, Index v, Index w)
{
    Opposites& o = acquire(EdgeKey::of(u, v));
    if (o.contains(w) || !o.add(w)) {
        throw MapInconsistency("edge " + edge_name(u, v) + " cannot take opposite " + std::to_string(w));
    }
    ++entries_;
}

void TriangulationMap::drop(Index u, Index v, Index w)
{
    const EdgeKey e = EdgeKey::of(u, v);
    Entry* en = slot(e);
    if (!en || en->opp.empty()) throw MissingEdge("edge " + edge_name(u, v) + " not in map");
    if (!en->opp.remove(w)) {
        throw MissingOpposite("edge " + edge_name(u, v) + " has no opposite " + std::to_string(w));
    }
    --entries_;
    if (!en->opp.empty()) return;
    --edges_;
    auto& b = buckets_[e.hi];
    if (b.size() <= kCompactLimit) b.erase(b.begin() + (en - b.data()));
}

void TriangulationMap::add_triangle(Index a, Index b, Index c)
{
    put(a, b, c);
    put(b, c, a);
    put(c, a, b);
}

void TriangulationMap::add_fan(Index apex, std::span<const Index> chain)
{
    if (chain.size() < 2) return;
    const bool fresh = std::all_of(chain.begin(), chain.end(), [&](Index v) { return v < apex; }) &&
                       (apex >= buckets_.size() || buckets_[apex].empty());
    if (!fresh) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) add_triangle(apex, chain[i], chain[i + 1]);
        return;
    }

    // Every spoke lands in the apex bucket: fill it once, then sort.
    if (apex >= buckets_.size()) buckets_.resize(std::size_t{apex} + 1);
    auto& b = buckets_[apex];
    b.reserve(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Entry en{chain[i], {}};
        if (i > 0) en.opp.add(chain[i - 1]);
        if (i + 1 < chain.size()) en.opp.add(chain[i + 1]);
        b.push_back(en);
    }
    std::sort(b.begin(), b.end(), [](const Entry& x, const Entry& y) { return x.lo < y.lo; });
    if (std::adjacent_find(b.begin(), b.end(), [](const Entry& x, const Entry& y) { return x.lo == y.lo; }) !=
        b.end()) {
        throw MapInconsistency("fan chain repeats a vertex");
    }
    edges_ += chain.size();
    entries_ += 2 * (chain.size() - 1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) put(chain[i], chain[i + 1], apex);
}

void TriangulationMap::remove_triangle(Index a, Index b, Index c)
{
    drop(a, b, c);
    drop(b, c, a);
    drop(c, a, b);
}

std::vector<Triangle> TriangulationMap::triangles() const
{
    std::vector<Triangle> out;
    out.reserve(triangle_count());
    for (const auto& [e, opp] : *this) {
        for (std::size_t i = 0; i < opp.size(); ++i) {
            // Report from the triangle's lowest edge only.
            if (opp[i] > e.hi) out.push_back({e.lo, e.hi, opp[i]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeKey> TriangulationMap::edges() const
{
    std::vector<EdgeKey> out;
    out.reserve(edges_);
    for (const auto& kv : *this) out.push_back(kv.first);
    std::sort(out.begin(), out.end());
    return out;
}

void delete_edge(TriangulationMap& tri, EdgeKey e, Index far)
{
    const Opposites* opp = tri.find(e);
    if (!opp) {
        throw MissingEdge("edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ") not in map");
    }
    if (!opp->contains(far)) {
        throw MissingOpposite("edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) +
                              ") has no opposite " + std::to_string(far));
    }
    const bool has_near = opp->size() == 2;
    const Index near = has_near ? ((*opp)[0] == far ? (*opp)[1] : (*opp)[0]) : far;
    tri.remove_triangle(e.lo, e.hi, far);
    if (has_near) tri.remove_triangle(e.lo, e.hi, near);
}

TriangulationMap initial_fan(const PointSet& ps, std::size_t k1)
{
    TriangulationMap tri;
    tri.reserve(ps.size());
    const auto apex = static_cast<Index>(k1 - 1);
    for (Index j = 0; j + 2 < k1; ++j) tri.add_triangle(j, j + 1, apex);
    return tri;
}

ErosionState ErosionState::from_chain(std::span<const Index> chain)
{
    ErosionState s;
    s.anchor = chain.front();
    s.exposed.push_back(chain.front());
    s.stack.assign(chain.rbegin(), chain.rend() - 1);
    return s;
}

void erode_boundary(const PointSet& ps, TriangulationMap& tri, ErosionState& state, Index p,
                    ErosionContext* ctx)
{
    const Point2& a = ps[p];
    OpCounters* counters = ctx ? ctx->counters : nullptr;
    const bool checked = ctx && ctx->check_opposite_side;

    std::vector<std::uint8_t> local_marks;
    std::vector<std::uint8_t>& on_chain = ctx ? ctx->on_chain : local_marks;
    if (on_chain.size() < ps.size()) on_chain.resize(ps.size(), 0);
    for (const Index v : state.exposed) on_chain[v] = 1;
    for (const Index v : state.stack) on_chain[v] = 1;

    while (!state.stack.empty()) {
        const Index top = state.stack.back();
        const EdgeKey e = EdgeKey::of(state.anchor, top);
        const Opposites* opp = tri.find(e);
        // Gone when an earlier deletion took its only triangle: that side faces away from p.
        if (!opp) {
            state.anchor = top;
            state.stack.pop_back();
            state.exposed.push_back(top);
            continue;
        }
        if (opp->size() != 1) {
            throw MapInconsistency("boundary edge " + edge_name(e.lo, e.hi) + " has " +
                                   std::to_string(opp->size()) + " opposite vertices");
        }
        const Index far = (*opp)[0];
        const bool inside = checked ? in_circle_opposite_checked(a, ps[state.anchor], ps[top], ps[far], counters)
                                    : in_circle_opposite(a, ps[state.anchor], ps[top], ps[far], counters);
        // A far vertex already on the chain would pinch the boundary and orphan a vertex.
        if (inside && on_chain[far]) {
            if (ctx) ++ctx->ear_skips;
        } else if (inside) {
            delete_edge(tri, e, far);
            if (ctx) {
                ++ctx->edge_deletions;
                if (ctx->deleted) ctx->deleted->push_back(e);
            }
            on_chain[far] = 1;
            state.stack.push_back(far);
            continue;
        }
        state.anchor = top;
        state.stack.pop_back();
        state.exposed.push_back(top);
    }
    for (const Index v : state.exposed) on_chain[v] = 0;
}

namespace {

/// Connects p to every vertex of the eroded chain.
void connect_exposed(TriangulationMap& tri, std::span<const Index> exposed, Index p,
                     std::vector<EdgeKey>* created)
{
    tri.add_fan(p, exposed);
    if (created) {
        for (const Index v : exposed) created->push_back(EdgeKey::of(p, v));
    }
}

}  // namespace

HullChain add_point_delaunay(const PointSet& ps, HullChain hull, TriangulationMap& tri, Index p,
                             ErosionContext* ctx)
{
    OpCounters* counters = ctx ? ctx->counters : nullptr;
    const TangentPair t = find_tangents(ps, hull, ps[p], counters);

    std::vector<Index> chain;
    const std::size_t n = hull.size();
    for (std::size_t i = t.a2;; i = (i + n - 1) % n) {
        chain.push_back(hull.indices[i]);
        if (i == t.a1) break;
    }

    ErosionState state = ErosionState::from_chain(chain);
    erode_boundary(ps, tri, state, p, ctx);
    connect_exposed(tri, state.exposed, p, nullptr);

    // Tangent search already ran; splice directly instead of searching again.
    auto& ids = hull.indices;
    const std::size_t before = ids.size();
    if (t.a1 < t.a2) {
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(t.a1 + 1),
                  ids.begin() + static_cast<std::ptrdiff_t>(t.a2));
        ids.insert(ids.begin() + static_cast<std::ptrdiff_t>(t.a1 + 1), p);
        hull.i_xmax = t.a1 + 1;
    } else {
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

Triangulation triangulate(std::span<const Point2> raw, const TriangulateOptions& opts)
{
    return triangulate(sort_points(raw), opts);
}

Triangulation triangulate(PointSet ps, const TriangulateOptions& opts)
{
    Triangulation out;
    out.points = std::move(ps);
    const PointSet& P = out.points;
    const std::size_t n = P.size();
    if (n < 3) throw DegenerateInput("need at least 3 distinct points, got " + std::to_string(n));

    OpCounters& c = out.counters;
    InitialTriangle init;
    try {
        init = build_initial_triangle(P, &c);
    } catch (const AllCollinear&) {
        throw DegenerateInput("all points are collinear");
    }
    out.map = initial_fan(P, init.k1);

    detail::LinkedHull hull(P.points, init.hull.indices, init.hull.indices[init.hull.i_xmax]);
    ErosionContext ctx;
    ctx.counters = &c;
    ctx.check_opposite_side = opts.check_opposite_side;

    std::vector<EdgeKey> created;
    std::vector<EdgeKey> deleted;
    const bool observe = static_cast<bool>(opts.on_insert);
    if (observe) ctx.deleted = &deleted;

    ErosionState state;
    for (std::size_t i = init.k1; i < n; ++i) {
        const auto p = static_cast<Index>(i);
        const auto w = detail::walk_tangents(hull, hull.xmax(), P[p], &c);

        state.stack.clear();
        state.exposed.clear();
        state.anchor = w.upper;
        state.exposed.push_back(w.upper);
        for (Index v = w.lower; v != w.upper; v = hull.next(v)) state.stack.push_back(v);

        created.clear();
        deleted.clear();
        erode_boundary(P, out.map, state, p, &ctx);
        connect_exposed(out.map, state.exposed, p, observe ? &created : nullptr);

        const std::size_t removed = hull.insert(p, w.lower, w.upper);
        if (w.xmax_not_lower) ++c.h;
        c.delta_l += 1 - static_cast<std::int64_t>(removed);
        ++c.insertions;

        if (observe) {
            InsertionEvent ev;
            ev.point = p;
            ev.processed = i + 1;
            ev.hull_size = hull.size();
            ev.triangles = out.map.triangle_count();
            ev.edges = out.map.edge_count();
            ev.created = created;
            ev.deleted = deleted;
            opts.on_insert(ev);
        }
    }

    out.hull.indices = hull.to_vector(&out.hull.i_xmax);
    c.l = out.hull.size();
    out.edge_deletions = ctx.edge_deletions;
    out.ear_skips = ctx.ear_skips;
    return out;
}

}  // namespace sortdel
