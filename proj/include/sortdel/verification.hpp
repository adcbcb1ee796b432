#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sortdel/convex_hull.hpp"
#include "sortdel/delaunay.hpp"
#include "sortdel/geometry.hpp"

namespace sortdel::verify {

/// Outcome of one property check. A failure carries the points and indices
/// needed to reproduce it.
struct VerificationReport {
    std::string property;
    bool pass = true;
    std::uint64_t seed = 0;
    std::string detail;
    std::vector<Point2> counterexample;
    std::vector<Index> offending;
    std::optional<std::int64_t> measured;
    std::optional<std::int64_t> expected;

    /// `PROP <name> PASS|FAIL seed=<u64> [detail...]`
    std::string to_line() const;
};

/// Lifted 3x3 in-circle determinant, orientation-normalized, divided by the
/// sum of absolute values of its expansion terms. Throws CollinearTriangle.
double incircle_det_relative(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// +1 if a is strictly inside the circle through b, c, d; -1 if outside; 0 when
/// the relative determinant is within rel_tol. Throws CollinearTriangle.
int incircle_det_oracle(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                        double rel_tol = 1e-12);

/// Empty-circle triangles of a small point set. When four or more points share
/// an empty circle the triangulation is not unique; those circles are reported
/// as groups instead of picking triangles.
struct BruteForceDelaunay {
    std::vector<Triangle> strict;                  // no other point inside or on the circle
    std::vector<std::vector<Index>> cocircular;    // vertex sets of empty circles with >= 4 points

    bool unique() const { return cocircular.empty(); }
};

inline constexpr std::size_t kBruteForceMax = 24;

/// O(n^4). Throws TooLarge above kBruteForceMax points.
BruteForceDelaunay brute_force_delaunay(const PointSet& ps, double rel_tol = 1e-12);

/// True when `tris` is one of the triangulations described by `oracle`.
bool equivalent(const BruteForceDelaunay& oracle, const std::vector<Triangle>& tris);

/// Andrew's monotone chain on sorted points; CCW from index 0, collinear
/// vertices dropped. Throws AllCollinear.
std::vector<Index> monotone_chain_hull(const PointSet& ps);

/// CCW cycle starting at the smallest index with edge-interior vertices removed.
std::vector<Index> canonical_hull(const PointSet& ps, const std::vector<Index>& ccw);

VerificationReport audit_counts(const OpCounters& run, std::uint64_t n, std::uint64_t seed = 0);

/// Global check: no point strictly inside any triangle's circumcircle. O(n t).
VerificationReport check_empty_circumcircle(const PointSet& ps, const TriangulationMap& tri,
                                            double rel_tol = 1e-9, std::uint64_t seed = 0);

/// Local check over interior edges; equivalent to the global one for a valid
/// triangulation, and linear in its size.
VerificationReport check_locally_delaunay(const PointSet& ps, const TriangulationMap& tri,
                                          double rel_tol = 1e-9, std::uint64_t seed = 0);

/// Map invariants: 1-2 opposites per edge, distinct non-collinear triples,
/// triangle consistency across the three edges.
VerificationReport check_map_consistency(const PointSet& ps, const TriangulationMap& tri,
                                         std::uint64_t seed = 0);

/// t == 2n - l - 2 and e == 3n - l - 3.
VerificationReport check_structure(std::size_t n, std::size_t hull_size, std::size_t triangles,
                                   std::size_t edges, std::uint64_t seed = 0);

/// Every point on the closed left side of every hull edge; hull vertices distinct.
VerificationReport check_hull_encloses(const PointSet& ps, const HullChain& hull,
                                       std::uint64_t seed = 0);

VerificationReport check_hull_baseline(const PointSet& ps, const HullChain& hull,
                                       std::uint64_t seed = 0);

VerificationReport check_brute_force(const PointSet& ps, const TriangulationMap& tri,
                                     std::uint64_t seed = 0);

}  // namespace sortdel::verify
