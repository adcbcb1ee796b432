#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "sortdel/convex_hull.hpp"
#include "sortdel/geometry.hpp"

namespace sortdel {

/// Unordered vertex pair, stored with lo < hi.
struct EdgeKey {
    Index lo = 0;
    Index hi = 0;

    static EdgeKey of(Index a, Index b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// The one or two vertices opposite an edge.
class Opposites {
public:
    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }
    Index operator[](std::size_t i) const { return v_[i]; }
    bool contains(Index x) const { return (n_ > 0 && v_[0] == x) || (n_ > 1 && v_[1] == x); }

    bool add(Index x)
    {
        if (n_ == 2) return false;
        v_[n_++] = x;
        return true;
    }

    bool remove(Index x)
    {
        if (n_ > 1 && v_[1] == x) {
            n_ = 1;
            return true;
        }
        if (n_ > 0 && v_[0] == x) {
            v_[0] = v_[1];
            --n_;
            return true;
        }
        return false;
    }

private:
    std::array<Index, 2> v_{};
    std::uint8_t n_ = 0;
};

using Triangle = std::array<Index, 3>;

/// Edge -> opposite-vertex dictionary describing a triangulation.
///
/// Entries are bucketed under the larger endpoint and kept sorted by the
/// smaller one. With sorted insertion every edge is created while its larger
/// endpoint is being inserted, so the working set stays on recent vertices.
class TriangulationMap {
public:
    struct Entry {
        Index lo;
        Opposites opp;  // empty marks a tombstone
    };

    class const_iterator {
    public:
        using value_type = std::pair<EdgeKey, Opposites>;
        using difference_type = std::ptrdiff_t;

        const_iterator() = default;
        const_iterator(const TriangulationMap* m, std::size_t hi, std::size_t pos) : m_(m), hi_(hi), pos_(pos)
        {
            settle();
        }
        value_type operator*() const
        {
            const Entry& en = m_->buckets_[hi_][pos_];
            return {EdgeKey{en.lo, static_cast<Index>(hi_)}, en.opp};
        }
        const_iterator& operator++()
        {
            ++pos_;
            settle();
            return *this;
        }
        const_iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b)
        {
            return a.hi_ == b.hi_ && a.pos_ == b.pos_;
        }

    private:
        void settle()
        {
            while (hi_ < m_->buckets_.size()) {
                const auto& b = m_->buckets_[hi_];
                while (pos_ < b.size() && b[pos_].opp.empty()) ++pos_;
                if (pos_ < b.size()) return;
                ++hi_;
                pos_ = 0;
            }
            pos_ = 0;
        }

        const TriangulationMap* m_ = nullptr;
        std::size_t hi_ = 0;
        std::size_t pos_ = 0;
    };

    /// Pre-sizes the bucket table for vertex indices below `vertices`.
    void reserve(std::size_t vertices)
    {
        if (buckets_.size() < vertices) buckets_.resize(vertices);
    }

    const Opposites* find(EdgeKey e) const;
    bool contains(EdgeKey e) const { return find(e) != nullptr; }

    /// Registers triangle (a, b, c) on its three edges. Throws MapInconsistency
    /// if an edge already carries two triangles or already lists the vertex.
    void add_triangle(Index a, Index b, Index c);

    /// Triangles (apex, chain[i], chain[i+1]) for consecutive chain vertices.
    /// Faster than add_triangle when apex exceeds every chain index.
    void add_fan(Index apex, std::span<const Index> chain);

    /// Removes triangle (a, b, c); edges left without triangles are erased.
    /// Throws MissingEdge / MissingOpposite when the triangle is not present.
    void remove_triangle(Index a, Index b, Index c);

    std::size_t edge_count() const { return edges_; }
    std::size_t triangle_count() const { return entries_ / 3; }
    bool empty() const { return edges_ == 0; }

    const_iterator begin() const { return {this, 0, 0}; }
    const_iterator end() const { return {this, buckets_.size(), 0}; }

    /// Each triangle once, vertices ascending, list sorted.
    std::vector<Triangle> triangles() const;
    /// All edges, sorted.
    std::vector<EdgeKey> edges() const;

private:
    // Buckets at most this long are compacted on erase; longer ones keep tombstones.
    static constexpr std::size_t kCompactLimit = 64;

    Entry* slot(EdgeKey e);
    const Entry* slot(EdgeKey e) const;
    Opposites& acquire(EdgeKey e);
    void put(Index u, Index v, Index w);
    void drop(Index u, Index v, Index w);

    std::vector<std::vector<Entry>> buckets_;
    std::size_t edges_ = 0;
    std::size_t entries_ = 0;
};

/// Erases e and every triangle incident to it. `far` must be one of e's
/// opposite vertices; on a boundary edge it is the only one. Afterwards each
/// edge exposed by the removal lists exactly its remaining triangles.
void delete_edge(TriangulationMap& tri, EdgeKey e, Index far);

/// Fan of k1 - 2 triangles (P[j], P[j+1], P[k1-1]) over the initial prefix.
TriangulationMap initial_fan(const PointSet& ps, std::size_t k1);

/// Working set of one erosion pass.
struct ErosionState {
    std::vector<Index> stack;    // candidate boundary vertices, top = back()
    std::vector<Index> exposed;  // chain already settled, anchor last
    Index anchor = 0;

    /// `chain` runs along the facing boundary from the upper tangent to the
    /// lower tangent. The first vertex seeds `exposed`; the rest are stacked
    /// so that its neighbour is on top.
    static ErosionState from_chain(std::span<const Index> chain);
};

struct ErosionContext {
    OpCounters* counters = nullptr;
    bool check_opposite_side = false;
    std::vector<EdgeKey>* deleted = nullptr;
    std::uint64_t edge_deletions = 0;
    std::uint64_t ear_skips = 0;  // deletions refused because the far vertex was on the chain
    std::vector<std::uint8_t> on_chain;  // scratch, indexed by point
};

/// Deletes boundary edges whose far triangle's circumcircle holds ps[p],
/// stacking the revealed vertex each time. Ends with `exposed` holding the
/// final chain from the upper to the lower tangent. Throws MapInconsistency
/// when a boundary edge has two opposite vertices.
void erode_boundary(const PointSet& ps, TriangulationMap& tri, ErosionState& state, Index p,
                    ErosionContext* ctx = nullptr);

/// One sorted insertion on a HullChain; `tri` is updated in place.
HullChain add_point_delaunay(const PointSet& ps, HullChain hull, TriangulationMap& tri, Index p,
                             ErosionContext* ctx = nullptr);

/// Snapshot after one insertion, for instrumentation.
struct InsertionEvent {
    Index point = 0;
    std::size_t processed = 0;  // points in the triangulation, p included
    std::size_t hull_size = 0;
    std::size_t triangles = 0;
    std::size_t edges = 0;
    std::span<const EdgeKey> created;
    std::span<const EdgeKey> deleted;
};

struct TriangulateOptions {
    /// Always validate the opposite-side precondition of every in-circle call.
    bool check_opposite_side = false;
    /// Called after every insertion past the initial fan.
    std::function<void(const InsertionEvent&)> on_insert;
};

struct Triangulation {
    PointSet points;
    TriangulationMap map;
    HullChain hull;
    OpCounters counters;
    std::uint64_t edge_deletions = 0;
    std::uint64_t ear_skips = 0;
};

/// Throws DegenerateInput (fewer than 3 distinct points or all collinear),
/// EmptyInput or NonFiniteCoordinate.
Triangulation triangulate(std::span<const Point2> raw, const TriangulateOptions& opts = {});

/// Same, on points already sorted and deduplicated.
Triangulation triangulate(PointSet ps, const TriangulateOptions& opts = {});

}  // namespace sortdel
