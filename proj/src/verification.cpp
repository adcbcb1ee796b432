#include "sortdel/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "sortdel/errors.hpp"

namespace sortdel::verify {

namespace {

using Real = long double;

VerificationReport make(const char* name, std::uint64_t seed)
{
    VerificationReport r;
    r.property = name;
    r.seed = seed;
    return r;
}

bool contains_all(const std::vector<Index>& group, const Triangle& t)
{
    return std::binary_search(group.begin(), group.end(), t[0]) &&
           std::binary_search(group.begin(), group.end(), t[1]) &&
           std::binary_search(group.begin(), group.end(), t[2]);
}

}  // namespace

std::string VerificationReport::to_line() const
{
    std::ostringstream os;
    os << "PROP " << property << (pass ? " PASS" : " FAIL") << " seed=" << seed;
    if (measured) os << " measured=" << *measured;
    if (expected) os << " expected=" << *expected;
    if (!detail.empty()) os << ' ' << detail;
    if (!offending.empty()) {
        os << " indices=";
        for (std::size_t i = 0; i < offending.size(); ++i) os << (i ? "," : "") << offending[i];
    }
    if (!counterexample.empty()) {
        os.precision(17);
        os << " points=";
        for (std::size_t i = 0; i < counterexample.size(); ++i) {
            os << (i ? ";" : "") << counterexample[i].x << ',' << counterexample[i].y;
        }
    }
    return os.str();
}

double incircle_det_relative(const Point2& a, const Point2& b, const Point2& c, const Point2& d)
{
    const Real orient = (Real(c.x) - b.x) * (Real(d.y) - b.y) - (Real(c.y) - b.y) * (Real(d.x) - b.x);
    if (orient == 0) throw CollinearTriangle();

    const Real bx = Real(b.x) - a.x, by = Real(b.y) - a.y;
    const Real cx = Real(c.x) - a.x, cy = Real(c.y) - a.y;
    const Real dx = Real(d.x) - a.x, dy = Real(d.y) - a.y;
    const Real bl = bx * bx + by * by;
    const Real cl = cx * cx + cy * cy;
    const Real dl = dx * dx + dy * dy;

    const Real t1 = bl * (cx * dy - cy * dx);
    const Real t2 = cl * (dx * by - dy * bx);
    const Real t3 = dl * (bx * cy - by * cx);
    const Real det = t1 + t2 + t3;
    const Real perm = bl * (std::fabs(cx * dy) + std::fabs(cy * dx)) +
                      cl * (std::fabs(dx * by) + std::fabs(dy * bx)) +
                      dl * (std::fabs(bx * cy) + std::fabs(by * cx));
    if (perm == 0) return 0.0;
    const Real rel = det / perm;
    return static_cast<double>(orient > 0 ? rel : -rel);
}

int incircle_det_oracle(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                        double rel_tol)
{
    const double rel = incircle_det_relative(a, b, c, d);
    if (std::fabs(rel) <= rel_tol) return 0;
    return rel > 0 ? 1 : -1;
}

BruteForceDelaunay brute_force_delaunay(const PointSet& ps, double rel_tol)
{
    const std::size_t n = ps.size();
    if (n > kBruteForceMax) {
        throw TooLarge("brute-force Delaunay limited to " + std::to_string(kBruteForceMax) +
                       " points, got " + std::to_string(n));
    }
    BruteForceDelaunay out;
    std::set<std::vector<Index>> groups;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            for (Index k = j + 1; k < n; ++k) {
                if (cross(ps[i], ps[j], ps[k]) == 0) continue;
                bool empty = true;
                std::vector<Index> on_circle;
                for (Index q = 0; q < n && empty; ++q) {
                    if (q == i || q == j || q == k) continue;
                    const int s = incircle_det_oracle(ps[q], ps[i], ps[j], ps[k], rel_tol);
                    if (s > 0) empty = false;
                    if (s == 0) on_circle.push_back(q);
                }
                if (!empty) continue;
                if (on_circle.empty()) {
                    out.strict.push_back({i, j, k});
                } else {
                    on_circle.insert(on_circle.end(), {i, j, k});
                    std::sort(on_circle.begin(), on_circle.end());
                    groups.insert(std::move(on_circle));
                }
            }
        }
    }
    out.cocircular.assign(groups.begin(), groups.end());
    return out;
}

bool equivalent(const BruteForceDelaunay& oracle, const std::vector<Triangle>& tris)
{
    std::vector<Triangle> sorted = tris;
    for (auto& t : sorted) std::sort(t.begin(), t.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    for (const Triangle& t : oracle.strict) {
        if (!std::binary_search(sorted.begin(), sorted.end(), t)) return false;
    }
    std::vector<std::size_t> per_group(oracle.cocircular.size(), 0);
    for (const Triangle& t : sorted) {
        if (std::binary_search(oracle.strict.begin(), oracle.strict.end(), t)) continue;
        bool placed = false;
        for (std::size_t g = 0; g < oracle.cocircular.size() && !placed; ++g) {
            if (contains_all(oracle.cocircular[g], t)) {
                ++per_group[g];
                placed = true;
            }
        }
        if (!placed) return false;
    }
    for (std::size_t g = 0; g < oracle.cocircular.size(); ++g) {
        if (per_group[g] != oracle.cocircular[g].size() - 2) return false;
    }
    return true;
}

std::vector<Index> monotone_chain_hull(const PointSet& ps)
{
    const std::size_t n = ps.size();
    if (n < 3) throw AllCollinear();
    std::vector<Index> h(2 * n + 1);
    std::size_t k = 0;
    for (Index i = 0; i < n; ++i) {
        while (k >= 2 && cross(ps[h[k - 2]], ps[h[k - 1]], ps[i]) <= 0) --k;
        h[k++] = i;
    }
    for (std::size_t i = n - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(ps[h[k - 2]], ps[h[k - 1]], ps[i - 1]) <= 0) --k;
        h[k++] = static_cast<Index>(i - 1);
    }
    h.resize(k > 0 ? k - 1 : 0);
    if (h.size() < 3) throw AllCollinear();
    return h;
}

std::vector<Index> canonical_hull(const PointSet& ps, const std::vector<Index>& ccw)
{
    std::vector<Index> out;
    const std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& prev = ps[ccw[(i + n - 1) % n]];
        const Point2& next = ps[ccw[(i + 1) % n]];
        if (cross(prev, ps[ccw[i]], next) != 0) out.push_back(ccw[i]);
    }
    auto lowest = std::min_element(out.begin(), out.end());
    std::rotate(out.begin(), lowest, out.end());
    return out;
}

VerificationReport audit_counts(const OpCounters& run, std::uint64_t n, std::uint64_t seed)
{
    auto r = make("count_identity", seed);
    const auto N = static_cast<std::int64_t>(n);
    const auto k1 = static_cast<std::int64_t>(run.k1);
    const auto l = static_cast<std::int64_t>(run.l);
    const auto h = static_cast<std::int64_t>(run.h);
    const auto measured = static_cast<std::int64_t>(run.to_left_calls);

    // With a triangular first hull this is 3n - 2k1 - l + h + 1. A longer
    // collinear prefix stays on the chain and shifts the start size by k1 - 3.
    const std::int64_t expected = 3 * N - 2 * k1 - l + h + 1 + (k1 - 3);
    r.measured = measured;
    r.expected = expected;
    std::ostringstream os;
    os << "n=" << n << " k1=" << k1 << " l=" << l << " h=" << h;
    if (measured != expected) r.pass = false;
    if (k1 == 3 && measured != 3 * N - l + h - 5) {
        r.pass = false;
        os << " short_form_mismatch";
    }
    if (run.h > n - run.k1) {
        r.pass = false;
        os << " h_bound_violated";
    }
    r.detail = os.str();
    return r;
}

VerificationReport check_empty_circumcircle(const PointSet& ps, const TriangulationMap& tri,
                                            double rel_tol, std::uint64_t seed)
{
    auto r = make("empty_circumcircle", seed);
    std::size_t violations = 0;
    for (const Triangle& t : tri.triangles()) {
        for (Index q = 0; q < ps.size(); ++q) {
            if (q == t[0] || q == t[1] || q == t[2]) continue;
            if (incircle_det_oracle(ps[q], ps[t[0]], ps[t[1]], ps[t[2]], rel_tol) > 0) {
                if (violations++ == 0) {
                    r.offending = {t[0], t[1], t[2], q};
                    r.counterexample = {ps[t[0]], ps[t[1]], ps[t[2]], ps[q]};
                }
            }
        }
    }
    r.pass = violations == 0;
    r.measured = static_cast<std::int64_t>(violations);
    r.expected = 0;
    return r;
}

VerificationReport check_locally_delaunay(const PointSet& ps, const TriangulationMap& tri,
                                          double rel_tol, std::uint64_t seed)
{
    auto r = make("locally_delaunay", seed);
    std::size_t violations = 0;
    for (const auto& [e, opp] : tri) {
        if (opp.size() != 2) continue;
        if (incircle_det_oracle(ps[opp[1]], ps[e.lo], ps[e.hi], ps[opp[0]], rel_tol) > 0) {
            if (violations++ == 0) {
                r.offending = {e.lo, e.hi, opp[0], opp[1]};
                r.counterexample = {ps[e.lo], ps[e.hi], ps[opp[0]], ps[opp[1]]};
            }
        }
    }
    r.pass = violations == 0;
    r.measured = static_cast<std::int64_t>(violations);
    r.expected = 0;
    return r;
}

VerificationReport check_map_consistency(const PointSet& ps, const TriangulationMap& tri,
                                         std::uint64_t seed)
{
    auto r = make("map_consistency", seed);
    const auto fail = [&](EdgeKey e, Index w, const char* why) {
        if (!r.pass) return;
        r.pass = false;
        r.detail = why;
        r.offending = {e.lo, e.hi, w};
    };
    for (const auto& [e, opp] : tri) {
        if (!(e.lo < e.hi)) fail(e, e.lo, "unnormalized_key");
        if (opp.size() < 1 || opp.size() > 2) fail(e, e.lo, "bad_opposite_count");
        for (std::size_t i = 0; i < opp.size(); ++i) {
            const Index w = opp[i];
            if (w == e.lo || w == e.hi || w >= ps.size()) {
                fail(e, w, "repeated_vertex");
                continue;
            }
            if (cross(ps[e.lo], ps[e.hi], ps[w]) == 0) fail(e, w, "collinear_triangle");
            const Opposites* a = tri.find(EdgeKey::of(e.lo, w));
            const Opposites* b = tri.find(EdgeKey::of(e.hi, w));
            if (!a || !a->contains(e.hi) || !b || !b->contains(e.lo)) fail(e, w, "triangle_inconsistent");
        }
    }
    return r;
}

VerificationReport check_structure(std::size_t n, std::size_t hull_size, std::size_t triangles,
                                   std::size_t edges, std::uint64_t seed)
{
    auto r = make("structure", seed);
    const auto N = static_cast<std::int64_t>(n);
    const auto L = static_cast<std::int64_t>(hull_size);
    const std::int64_t want_t = 2 * N - L - 2;
    const std::int64_t want_e = 3 * N - L - 3;
    r.measured = static_cast<std::int64_t>(triangles);
    r.expected = want_t;
    std::ostringstream os;
    os << "n=" << n << " l=" << hull_size << " edges=" << edges << " expected_edges=" << want_e;
    r.detail = os.str();
    r.pass = static_cast<std::int64_t>(triangles) == want_t && static_cast<std::int64_t>(edges) == want_e;
    return r;
}

VerificationReport check_hull_encloses(const PointSet& ps, const HullChain& hull, std::uint64_t seed)
{
    auto r = make("hull_encloses", seed);
    const auto& ids = hull.indices;
    std::vector<Index> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        r.pass = false;
        r.detail = "repeated_vertex";
        return r;
    }
    for (std::size_t i = 0; i < ids.size() && r.pass; ++i) {
        const Index u = ids[i];
        const Index v = ids[(i + 1) % ids.size()];
        for (Index q = 0; q < ps.size(); ++q) {
            if (to_left(ps[q], ps[u], ps[v]) == Orientation::Right) {
                r.pass = false;
                r.offending = {u, v, q};
                r.counterexample = {ps[u], ps[v], ps[q]};
                break;
            }
        }
    }
    return r;
}

VerificationReport check_hull_baseline(const PointSet& ps, const HullChain& hull, std::uint64_t seed)
{
    auto r = make("hull_baseline", seed);
    const auto ours = canonical_hull(ps, hull.indices);
    const auto base = monotone_chain_hull(ps);
    r.pass = ours == base;
    r.measured = static_cast<std::int64_t>(ours.size());
    r.expected = static_cast<std::int64_t>(base.size());
    if (!r.pass) r.counterexample = ps.points;
    return r;
}

VerificationReport check_brute_force(const PointSet& ps, const TriangulationMap& tri, std::uint64_t seed)
{
    auto r = make("brute_force_equivalence", seed);
    const auto oracle = brute_force_delaunay(ps);
    r.pass = equivalent(oracle, tri.triangles());
    r.measured = static_cast<std::int64_t>(tri.triangle_count());
    std::size_t want = oracle.strict.size();
    for (const auto& g : oracle.cocircular) want += g.size() - 2;
    r.expected = static_cast<std::int64_t>(want);
    r.detail = "cocircular_groups=" + std::to_string(oracle.cocircular.size());
    if (!r.pass) r.counterexample = ps.points;
    return r;
}

}  // namespace sortdel::verify
