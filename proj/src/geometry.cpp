#include "sortdel/geometry.hpp"

#include "sortdel/errors.hpp"

namespace sortdel {

namespace {

inline double dot(double ux, double uy, double vx, double vy) { return ux * vx + uy * vy; }

bool opposite_sides(const Point2& a, const Point2& b, const Point2& c, const Point2& d)
{
    const double sa = cross(b, c, a);
    const double sd = cross(b, c, d);
    return (sa > 0 && sd < 0) || (sa < 0 && sd > 0);
}

bool in_circle_unchecked(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                         OpCounters* counters)
{
    if (b == c) throw DegenerateEdge();
    if (counters) ++counters->in_circle_calls;

    const double abx = b.x - a.x, aby = b.y - a.y;
    const double acx = c.x - a.x, acy = c.y - a.y;
    const double bdx = d.x - b.x, bdy = d.y - b.y;
    const double cdx = d.x - c.x, cdy = d.y - c.y;

    const double s1 = dot(abx, aby, acx, acy);
    const double s2 = dot(bdx, bdy, cdx, cdy);

    if (s1 >= 0 && s2 >= 0) {
        if (counters) ++counters->in_circle_fast_path;
        return false;
    }
    if (s1 < 0 && s2 < 0) {
        if (counters) ++counters->in_circle_fast_path;
        return true;
    }

    // Mixed signs: |BD||CD| s1 + |AB||AC| s2 < 0, squared.
    const double lhs = dot(bdx, bdy, bdx, bdy) * dot(cdx, cdy, cdx, cdy) * s1 * s1;
    const double rhs = dot(abx, aby, abx, aby) * dot(acx, acy, acx, acy) * s2 * s2;
    if (s1 >= 0) return lhs < rhs;  // positive term from A, negative from D
    return lhs > rhs;
}

}  // namespace

bool in_circle_opposite(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                        OpCounters* counters)
{
#ifndef NDEBUG
    if (b != c && !opposite_sides(a, b, c, d)) throw OppositeSideViolation();
#endif
    return in_circle_unchecked(a, b, c, d, counters);
}

bool in_circle_opposite_checked(const Point2& a, const Point2& b, const Point2& c,
                                const Point2& d, OpCounters* counters)
{
    if (b == c) throw DegenerateEdge();
    if (!opposite_sides(a, b, c, d)) throw OppositeSideViolation();
    return in_circle_unchecked(a, b, c, d, counters);
}

double angle_sum_cosine_form(const Point2& a, const Point2& b, const Point2& c, const Point2& d)
{
    const double ab = std::hypot(b.x - a.x, b.y - a.y);
    const double ac = std::hypot(c.x - a.x, c.y - a.y);
    const double bd = std::hypot(d.x - b.x, d.y - b.y);
    const double cd = std::hypot(d.x - c.x, d.y - c.y);
    const double s1 = dot(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
    const double s2 = dot(d.x - b.x, d.y - b.y, d.x - c.x, d.y - c.y);
    return bd * cd * s1 + ab * ac * s2;
}

bool in_circle_sign_decides(const Point2& a, const Point2& b, const Point2& c, const Point2& d)
{
    const double s1 = dot(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
    const double s2 = dot(d.x - b.x, d.y - b.y, d.x - c.x, d.y - c.y);
    return (s1 >= 0 && s2 >= 0) || (s1 < 0 && s2 < 0);
}

}  // namespace sortdel
