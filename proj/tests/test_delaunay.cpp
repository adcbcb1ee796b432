#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sortdel/delaunay.hpp"
#include "sortdel/errors.hpp"
#include "sortdel/verification.hpp"
#include "test_support.hpp"

using namespace sortdel;

namespace {

std::vector<Index> opp(const TriangulationMap& m, Index a, Index b)
{
    const Opposites* o = m.find(EdgeKey::of(a, b));
    if (!o) return {};
    std::vector<Index> v;
    for (std::size_t i = 0; i < o->size(); ++i) v.push_back((*o)[i]);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Triangulate, ThreePoints)
{
    const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}});
    EXPECT_EQ(t.map.triangle_count(), 1u);
    EXPECT_EQ(t.map.edge_count(), 3u);
    for (auto [e, o] : t.map) EXPECT_EQ(o.size(), 1u);
}

TEST(Triangulate, SquareDiagonal)
{
    // Sorted: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3. Both diagonals are Delaunay;
    // the fourth point only sees edge (1,2), whose circle it lies on, so (1,2) stays.
    const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    EXPECT_EQ(t.map.triangles(), (std::vector<Triangle>{{0, 1, 2}, {1, 2, 3}}));
    const auto oracle = verify::brute_force_delaunay(t.points);
    EXPECT_FALSE(oracle.unique());
    EXPECT_TRUE(verify::equivalent(oracle, t.map.triangles()));
    EXPECT_EQ(t.counters.to_left_calls, 3u);
    EXPECT_EQ(t.counters.in_circle_calls, 1u);
}

TEST(Triangulate, Errors)
{
    EXPECT_THROW(triangulate(std::vector<Point2>{}), EmptyInput);
    EXPECT_THROW(triangulate(std::vector<Point2>{{0, 0}, {1, 1}}), DegenerateInput);
    EXPECT_THROW(triangulate(std::vector<Point2>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}), DegenerateInput);
    EXPECT_THROW(triangulate(std::vector<Point2>{{0, 0}, {0, 0}, {1, 1}}), DegenerateInput);
}

TEST(InitialFan, SingleTriangle)
{
    const auto ps = presorted({{0, 0}, {1, 0}, {0.5, 1}});
    const auto m = initial_fan(ps, 3);
    EXPECT_EQ(m.triangles(), (std::vector<Triangle>{{0, 1, 2}}));
}

TEST(InitialFan, CollinearPrefix)
{
    const auto ps = presorted({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
    const auto m = initial_fan(ps, 4);
    EXPECT_EQ(m.triangles(), (std::vector<Triangle>{{0, 1, 3}, {1, 2, 3}}));
    EXPECT_EQ(opp(m, 1, 3), (std::vector<Index>{0, 2}));
    EXPECT_TRUE(verify::check_map_consistency(ps, m).pass);
}

TEST(AddPointDelaunay, OutsideCircumcircleNoErosion)
{
    // Circle through (0,0),(2,0),(1,1) has centre (1,0), radius 1.
    const auto ps = sort_points(std::vector<Point2>{{0, 0}, {2, 0}, {1, 1}, {3, 1}});
    EXPECT_EQ(verify::incircle_det_oracle(ps[3], ps[0], ps[1], ps[2]), -1);
    auto it = build_initial_triangle(ps);
    auto m = initial_fan(ps, it.k1);
    ErosionContext ctx;
    const auto hull = add_point_delaunay(ps, it.hull, m, 3, &ctx);
    EXPECT_EQ(ctx.edge_deletions, 0u);
    EXPECT_EQ(m.triangle_count(), 2u);
    EXPECT_EQ(hull.size(), 4u);
    EXPECT_TRUE(verify::check_map_consistency(ps, m).pass);
}

TEST(AddPointDelaunay, InsideCircumcircleDeletesNearEdge)
{
    // Sorted: (0,0)=0, (1,3)=1, (2,0)=2, p=(2.2,0.8)=3.
    const auto ps = sort_points(std::vector<Point2>{{0, 0}, {2, 0}, {1, 3}, {2.2, 0.8}});
    EXPECT_EQ(verify::incircle_det_oracle(ps[3], ps[0], ps[1], ps[2]), 1);
    auto it = build_initial_triangle(ps);
    auto m = initial_fan(ps, it.k1);
    std::vector<EdgeKey> deleted;
    ErosionContext ctx;
    ctx.deleted = &deleted;
    add_point_delaunay(ps, it.hull, m, 3, &ctx);
    EXPECT_EQ(ctx.edge_deletions, 1u);
    EXPECT_EQ(deleted, (std::vector<EdgeKey>{EdgeKey::of(1, 2)}));
    EXPECT_EQ(m.triangles(), (std::vector<Triangle>{{0, 1, 3}, {0, 2, 3}}));
    EXPECT_TRUE(verify::check_map_consistency(ps, m).pass);
    EXPECT_TRUE(verify::check_empty_circumcircle(ps, m).pass);
}

TEST(ErodeBoundary, NoDeletionKeepsChain)
{
    const auto ps = sort_points(std::vector<Point2>{{0, 0}, {2, 0}, {1, 1}, {3, 1}});
    auto m = initial_fan(ps, 3);
    // Upper tangent (1,1)=1, lower tangent (2,0)=2.
    const std::vector<Index> chain{1, 2};
    auto st = ErosionState::from_chain(chain);
    erode_boundary(ps, m, st, 3);
    EXPECT_EQ(st.exposed, chain);
}

TEST(ErodeBoundary, RevealedVertexJoinsChain)
{
    const auto ps = sort_points(std::vector<Point2>{{0, 0}, {2, 0}, {1, 3}, {2.2, 0.8}});
    auto m = initial_fan(ps, 3);
    const std::vector<Index> chain{1, 2};
    auto st = ErosionState::from_chain(chain);
    erode_boundary(ps, m, st, 3);
    EXPECT_EQ(st.exposed, (std::vector<Index>{1, 0, 2}));
}

TEST(ErodeBoundary, InteriorEdgeOnChainIsInconsistent)
{
    // (1,2) is the square's diagonal, shared by two triangles.
    const auto ps = presorted({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0.5}});
    TriangulationMap m;
    m.reserve(ps.size());
    m.add_triangle(0, 1, 2);
    m.add_triangle(1, 2, 3);
    const std::vector<Index> chain{1, 2};
    auto st = ErosionState::from_chain(chain);
    EXPECT_THROW(erode_boundary(ps, m, st, 4), MapInconsistency);
}

TEST(ErodeBoundary, SingleTriangleSwallowed)
{
    // p inside the circumcircle of the only triangle: the whole triangle goes.
    const auto ps = presorted({{0, 0.3}, {0.01, 0}, {0.02, 1}, {0.03, 0.5}});
    ASSERT_EQ(verify::incircle_det_oracle(ps[3], ps[1], ps[2], ps[0]), 1);
    auto m = initial_fan(ps, 3);
    const std::vector<Index> chain{2, 1};
    auto st = ErosionState::from_chain(chain);
    erode_boundary(ps, m, st, 3);
    EXPECT_EQ(st.exposed, (std::vector<Index>{2, 0, 1}));
    EXPECT_TRUE(m.empty());
}

TEST(DeleteEdge, SquareDiagonal)
{
    TriangulationMap m;
    m.reserve(4);
    m.add_triangle(0, 1, 2);
    m.add_triangle(1, 2, 3);
    delete_edge(m, EdgeKey::of(1, 2), 0);
    EXPECT_FALSE(m.contains(EdgeKey::of(1, 2)));
    EXPECT_EQ(m.triangle_count(), 0u);
    EXPECT_EQ(m.edge_count(), 0u);
}

TEST(DeleteEdge, DiagonalOfTwoTrianglesLeavesOthers)
{
    // Two triangles around the square's diagonal plus a neighbour on each side.
    TriangulationMap m;
    m.reserve(6);
    m.add_triangle(0, 1, 2);
    m.add_triangle(1, 2, 3);
    m.add_triangle(0, 2, 4);
    m.add_triangle(1, 3, 5);
    delete_edge(m, EdgeKey::of(1, 2), 3);
    EXPECT_EQ(opp(m, 0, 2), (std::vector<Index>{4}));
    EXPECT_EQ(opp(m, 1, 3), (std::vector<Index>{5}));
    EXPECT_TRUE(opp(m, 0, 1).empty());
    EXPECT_TRUE(opp(m, 2, 3).empty());
}

TEST(DeleteEdge, BoundaryEdgeOfFan)
{
    // Square a=0,b=1,c=2,e=3 around centre m=4.
    TriangulationMap m;
    m.reserve(5);
    m.add_triangle(0, 1, 4);
    m.add_triangle(1, 2, 4);
    m.add_triangle(2, 3, 4);
    m.add_triangle(3, 0, 4);
    delete_edge(m, EdgeKey::of(0, 1), 4);
    EXPECT_FALSE(m.contains(EdgeKey::of(0, 1)));
    EXPECT_EQ(opp(m, 0, 4), (std::vector<Index>{3}));
    EXPECT_EQ(opp(m, 1, 4), (std::vector<Index>{2}));
    EXPECT_EQ(m.triangle_count(), 3u);
}

TEST(DeleteEdge, MissingEdgeThrows)
{
    TriangulationMap m;
    m.reserve(3);
    m.add_triangle(0, 1, 2);
    EXPECT_THROW(delete_edge(m, EdgeKey::of(0, 3), 2), Error);
    EXPECT_THROW(m.remove_triangle(0, 1, 3), Error);
}

TEST(TriangulationMap, AddTriangleRejectsThirdTriangle)
{
    TriangulationMap m;
    m.reserve(5);
    m.add_triangle(0, 1, 2);
    m.add_triangle(0, 1, 3);
    EXPECT_THROW(m.add_triangle(0, 1, 4), MapInconsistency);
}

TEST(TriangulationMap, RemoveAndReAddRoundTrip)
{
    std::mt19937_64 rng(12);
    auto t = triangulate(testkit::random_points(rng, 300));
    const auto original = t.map.triangles();
    const auto edges = t.map.edges();
    std::uniform_int_distribution<std::size_t> pick(0, original.size() - 1);
    for (int k = 0; k < 500; ++k) {
        const auto tr = original[pick(rng)];
        t.map.remove_triangle(tr[0], tr[1], tr[2]);
        ASSERT_EQ(t.map.triangle_count(), original.size() - 1);
        t.map.add_triangle(tr[2], tr[0], tr[1]);
    }
    EXPECT_EQ(t.map.triangles(), original);
    EXPECT_EQ(t.map.edges(), edges);
    EXPECT_TRUE(verify::check_map_consistency(t.points, t.map).pass);
}

TEST(TriangulationMap, IterationMatchesEdges)
{
    std::mt19937_64 rng(13);
    const auto t = triangulate(testkit::random_points(rng, 200));
    std::vector<EdgeKey> seen;
    for (auto [e, o] : t.map) seen.push_back(e);
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, t.map.edges());
    EXPECT_EQ(seen.size(), t.map.edge_count());
}

TEST(Triangulate, StressStructureAndLocality)
{
    std::mt19937_64 rng(14);
    const auto raw = testkit::random_points(rng, 500);
    const auto ps = sort_points(raw);
    const auto k1 = build_initial_triangle(ps).k1;
    // Edge set replayed from the per-insertion change lists.
    std::set<EdgeKey> mirror;
    for (const auto& e : initial_fan(ps, k1).edges()) mirror.insert(e);
    std::size_t events = 0;
    TriangulateOptions opts;
    opts.check_opposite_side = true;
    opts.on_insert = [&](const InsertionEvent& ev) {
        ++events;
        for (const auto& e : ev.deleted) EXPECT_EQ(mirror.erase(e), 1u);
        for (const auto& e : ev.created) {
            EXPECT_TRUE(e.lo == ev.point || e.hi == ev.point);
            EXPECT_TRUE(mirror.insert(e).second);
        }
        EXPECT_EQ(mirror.size(), ev.edges);
        EXPECT_EQ(ev.triangles, 2 * ev.processed - ev.hull_size - 2);
        EXPECT_EQ(ev.edges, 3 * ev.processed - ev.hull_size - 3);
    };
    const auto t = triangulate(raw, opts);
    EXPECT_EQ(events, ps.size() - k1);
    EXPECT_EQ(std::vector<EdgeKey>(mirror.begin(), mirror.end()), t.map.edges());
    EXPECT_EQ(t.ear_skips, 0u);
    EXPECT_TRUE(verify::check_map_consistency(t.points, t.map).pass);
    EXPECT_TRUE(verify::check_empty_circumcircle(t.points, t.map).pass);
    EXPECT_TRUE(verify::check_hull_baseline(t.points, t.hull).pass);
}

TEST(Triangulate, RandomMatchesBruteForce)
{
    std::mt19937_64 rng(15);
    for (int run = 0; run < 100; ++run) {
        const auto t = triangulate(testkit::random_points(rng, 20));
        const auto oracle = verify::brute_force_delaunay(t.points);
        ASSERT_TRUE(verify::equivalent(oracle, t.map.triangles())) << "run " << run;
    }
}

TEST(Triangulate, GridWithCocircularQuads)
{
    std::vector<Point2> pts;
    for (int x = 0; x < 12; ++x)
        for (int y = 0; y < 12; ++y) pts.push_back({double(x), double(y)});
    const auto t = triangulate(pts);
    EXPECT_EQ(t.hull.size(), 44u);
    EXPECT_EQ(t.map.triangle_count(), 2 * 144 - 44 - 2u);
    EXPECT_TRUE(verify::check_map_consistency(t.points, t.map).pass);
    EXPECT_TRUE(verify::check_empty_circumcircle(t.points, t.map).pass);
}

TEST(Triangulate, Deterministic)
{
    std::mt19937_64 rng(16);
    const auto raw = testkit::random_points(rng, 1000);
    EXPECT_EQ(triangulate(raw).map.triangles(), triangulate(raw).map.triangles());
}
