#pragma once

#include <cmath>
#include <cstdint>

namespace sortdel {

/// Index into a PointSet (sorted position, not input position).
using Index = std::uint32_t;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Lexicographic order: x first, then y.
inline bool lex_less(const Point2& a, const Point2& b)
{
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

enum class Orientation : int { Right = -1, Collinear = 0, Left = 1 };

/// Exact tallies of predicate evaluations plus the hull bookkeeping that the
/// ToLeft count identities are expressed in.
struct OpCounters {
    std::uint64_t to_left_calls = 0;
    std::uint64_t in_circle_calls = 0;
    std::uint64_t in_circle_fast_path = 0;
    std::uint64_t k1 = 0;       // points consumed by the initial triangle
    std::uint64_t h = 0;        // insertions where the xmax vertex was not the lower tangent
    std::int64_t delta_l = 0;   // hull size change after the initial triangle
    std::uint64_t l = 0;        // final hull size, collinear boundary vertices included
    std::uint64_t insertions = 0;

    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

inline double cross(const Point2& o, const Point2& a, const Point2& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Side of p relative to the directed line u->v; Left iff cross(v-u, p-u) > 0.
inline Orientation to_left(const Point2& p, const Point2& u, const Point2& v,
                           OpCounters* counters = nullptr)
{
    if (counters) ++counters->to_left_calls;
    const double c = cross(u, v, p);
    if (c > 0) return Orientation::Left;
    if (c < 0) return Orientation::Right;
    return Orientation::Collinear;
}

/// Is `a` strictly inside the circumcircle of triangle (b, c, d)?
///
/// Requires a and d on opposite sides of bc. Decides cos(A) + cos(D) < 0 where
/// A is the angle at a subtended by bc and D the angle at d; with a and d
/// separated by bc this is equivalent to A + D > pi. The dot products' signs
/// settle most queries; otherwise both sides are squared so no square roots
/// are needed. Cocircular inputs (A + D == pi) return false.
///
/// Throws DegenerateEdge if b == c. Debug builds also throw
/// OppositeSideViolation when the precondition does not hold.
bool in_circle_opposite(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                        OpCounters* counters = nullptr);

/// in_circle_opposite with the opposite-side precondition always checked.
bool in_circle_opposite_checked(const Point2& a, const Point2& b, const Point2& c,
                                const Point2& d, OpCounters* counters = nullptr);

/// Left-hand side of |BD||CD| AB.AC + |AB||AC| BD.CD < 0, evaluated with square
/// roots. Test hook for the squared fast path.
double angle_sum_cosine_form(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// True when the signs of AB.AC and BD.CD alone decide in_circle_opposite.
bool in_circle_sign_decides(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

}  // namespace sortdel
