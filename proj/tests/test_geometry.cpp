#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sortdel/errors.hpp"
#include "sortdel/geometry.hpp"
#include "sortdel/verification.hpp"
#include "test_support.hpp"

using namespace sortdel;

TEST(ToLeft, Examples)
{
    EXPECT_EQ(to_left({0, 1}, {0, 0}, {1, 0}), Orientation::Left);
    EXPECT_EQ(to_left({0, -1}, {0, 0}, {1, 0}), Orientation::Right);
    EXPECT_EQ(to_left({2, 0}, {0, 0}, {1, 0}), Orientation::Collinear);
}

TEST(ToLeft, CountsEveryCall)
{
    OpCounters c;
    to_left({0, 1}, {0, 0}, {1, 0}, &c);
    to_left({0, 1}, {0, 0}, {1, 0}, &c);
    EXPECT_EQ(c.to_left_calls, 2u);
}

TEST(ToLeft, AntisymmetricAndCyclic)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100000; ++i) {
        auto pts = testkit::random_points(rng, 3, -1e3, 1e3);
        const auto o = to_left(pts[0], pts[1], pts[2]);
        EXPECT_EQ(static_cast<int>(to_left(pts[0], pts[2], pts[1])), -static_cast<int>(o));
        EXPECT_EQ(to_left(pts[1], pts[2], pts[0]), o);
    }
}

// Unit circle through b, c, d; a and d lie on opposite sides of the x axis.
TEST(InCircle, UnitCircleExamples)
{
    const Point2 b{-1, 0}, c{1, 0}, d{0, -1};
    EXPECT_TRUE(in_circle_opposite({0, 0.5}, b, c, d));
    EXPECT_FALSE(in_circle_opposite({0, 2}, b, c, d));
    EXPECT_FALSE(in_circle_opposite({0, 1}, b, c, d));
    EXPECT_EQ(verify::incircle_det_oracle({0, 0.5}, b, c, d), 1);
    EXPECT_EQ(verify::incircle_det_oracle({0, 2}, b, c, d), -1);
    EXPECT_EQ(verify::incircle_det_oracle({0, 1}, b, c, d), 0);
}

TEST(InCircle, CountsCalls)
{
    OpCounters c;
    in_circle_opposite({0, 0.5}, {-1, 0}, {1, 0}, {0, -1}, &c);
    EXPECT_EQ(c.in_circle_calls, 1u);
}

TEST(InCircle, DegenerateEdgeThrows)
{
    EXPECT_THROW(in_circle_opposite({0, 1}, {1, 1}, {1, 1}, {0, -1}), DegenerateEdge);
}

TEST(InCircle, CheckedRejectsSameSide)
{
    EXPECT_THROW(in_circle_opposite_checked({0, 1}, {-1, 0}, {1, 0}, {0, 2}), OppositeSideViolation);
    EXPECT_THROW(in_circle_opposite_checked({0, 0}, {-1, 0}, {1, 0}, {0, -1}), OppositeSideViolation);
    EXPECT_NO_THROW(in_circle_opposite_checked({0, 1}, {-1, 0}, {1, 0}, {0, -1}));
}

namespace {

// Random b, c and a, d strictly on opposite sides of bc.
struct Config {
    Point2 a, b, c, d;
};

Config opposite_config(std::mt19937_64& rng, double scale)
{
    for (;;) {
        auto p = testkit::random_points(rng, 4, -scale, scale);
        const double sa = cross(p[1], p[2], p[0]);
        const double sd = cross(p[1], p[2], p[3]);
        if ((sa > 0 && sd < 0) || (sa < 0 && sd > 0)) return {p[0], p[1], p[2], p[3]};
    }
}

}  // namespace

TEST(InCircle, AgreesWithDeterminantOutsideBand)
{
    std::mt19937_64 rng(2024);
    int compared = 0;
    for (int i = 0; i < 100000; ++i) {
        const auto k = opposite_config(rng, i % 2 ? 1.0 : 1e4);
        const int o = verify::incircle_det_oracle(k.a, k.b, k.c, k.d, 1e-12);
        if (o == 0) continue;
        ++compared;
        ASSERT_EQ(in_circle_opposite(k.a, k.b, k.c, k.d), o > 0) << "case " << i;
    }
    EXPECT_GT(compared, 99000);
}

TEST(InCircle, SymmetricInBandC)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100000; ++i) {
        const auto k = opposite_config(rng, 1.0);
        ASSERT_EQ(in_circle_opposite(k.a, k.b, k.c, k.d), in_circle_opposite(k.a, k.c, k.b, k.d));
    }
}

TEST(InCircle, InvariantUnderRigidMotion)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI), off(-10, 10);
    for (int i = 0; i < 100000; ++i) {
        const auto k = opposite_config(rng, 1.0);
        if (verify::incircle_det_oracle(k.a, k.b, k.c, k.d, 1e-9) == 0) continue;
        const double t = ang(rng), s = std::sin(t), co = std::cos(t);
        const double tx = off(rng), ty = off(rng);
        auto m = [&](Point2 p) { return Point2{co * p.x - s * p.y + tx, s * p.x + co * p.y + ty}; };
        ASSERT_EQ(in_circle_opposite(k.a, k.b, k.c, k.d), in_circle_opposite(m(k.a), m(k.b), m(k.c), m(k.d)));
    }
}

TEST(InCircle, SignFastPathMatchesCosineForm)
{
    std::mt19937_64 rng(9);
    int fast = 0;
    for (int i = 0; i < 100000; ++i) {
        const auto k = opposite_config(rng, 1.0);
        const double lhs = angle_sum_cosine_form(k.a, k.b, k.c, k.d);
        if (std::abs(lhs) < 1e-9) continue;
        if (in_circle_sign_decides(k.a, k.b, k.c, k.d)) ++fast;
        ASSERT_EQ(in_circle_opposite(k.a, k.b, k.c, k.d), lhs < 0) << "case " << i;
    }
    EXPECT_GT(fast, 0);
}

TEST(InCircle, FastPathCounterBoundedByCalls)
{
    std::mt19937_64 rng(10);
    OpCounters c;
    for (int i = 0; i < 1000; ++i) {
        const auto k = opposite_config(rng, 1.0);
        in_circle_opposite(k.a, k.b, k.c, k.d, &c);
    }
    EXPECT_EQ(c.in_circle_calls, 1000u);
    EXPECT_LE(c.in_circle_fast_path, c.in_circle_calls);
    EXPECT_GT(c.in_circle_fast_path, 0u);
}

// Circle through b, c, d has centre (1,0) and radius 1.
TEST(InCircle, DocumentedExamples)
{
    const Point2 b{0, 0}, c{2, 0}, d{1, 1};
    EXPECT_TRUE(in_circle_opposite({1, -0.5}, b, c, d));
    EXPECT_FALSE(in_circle_opposite({1, -2}, b, c, d));
    EXPECT_FALSE(in_circle_opposite({1, -1}, b, c, d));
    EXPECT_EQ(verify::incircle_det_oracle({1, -0.5}, b, c, d), 1);
    EXPECT_EQ(verify::incircle_det_oracle({1, -2}, b, c, d), -1);
    EXPECT_EQ(verify::incircle_det_oracle({1, -1}, b, c, d), 0);
}
