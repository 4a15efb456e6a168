#include <gtest/gtest.h>

#include <random>

#include "bl3/baselocus.hpp"
#include "bl3/oracle/oracle.hpp"
#include "random_classes.hpp"

using namespace bl3;
using namespace bl3::oracle;

namespace {

const PointConfiguration& config() {
    static const auto cfg = make_configuration();
    return cfg;
}

}  // namespace

TEST(Field, PrimalityAndArithmetic) {
    EXPECT_TRUE(is_prime(2147483647));
    EXPECT_TRUE(is_prime(1000003));
    EXPECT_FALSE(is_prime(1000001));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime((u64{1} << 61) - 1));
    const PrimeField F{101};
    EXPECT_EQ(F.mul(F.inv(7), 7), 1u);
    EXPECT_EQ(F.from_int(-1), 100u);
    EXPECT_EQ(F.from_int(INT64_MIN), F.neg(F.reduce(u64{1} << 63)));
    EXPECT_THROW(PrimeField{100}, oracle_error);
    EXPECT_THROW(F.inv(0), oracle_error);
}

TEST(Field, LargePrimeUsesWideMultiply) {
    const PrimeField F{(u64{1} << 61) - 1};
    EXPECT_FALSE(F.small());
    const u64 a = (u64{1} << 60) + 12345;
    EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
}

TEST(LinearAlgebra, RankAndKernel) {
    const PrimeField F{101};
    Matrix m;
    m.append_row({1, 2, 3});
    m.append_row({2, 4, 6});
    m.append_row({0, 1, 1});
    EXPECT_EQ(rank(m, F), 2u);
    const auto k = kernel(m, F);
    ASSERT_EQ(k.size(), 1u);
    for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(dot(Vector(m.row(r), m.row(r) + 3), k[0], F), 0u);
    EXPECT_THROW(m.append_row({1, 2}), oracle_error);
}

TEST(Polynomial, MonomialCounts) {
    for (int d = 0; d <= 8; ++d) EXPECT_EQ(monomials(d).size(), monomial_count(d));
    EXPECT_EQ(monomials(2).front(), (Exponent{2, 0, 0, 0}));
    EXPECT_EQ(monomials(2).back(), (Exponent{0, 0, 0, 2}));
}

TEST(Polynomial, HasseDerivativeOfMonomial) {
    const PrimeField F{1000003};
    MonomialEvaluator ev{3, F};
    // f = x0^2 x1; D^(1,0,0,0) f = 2 x0 x1
    Vector f(monomial_count(3), 0);
    const auto mons = monomials(3);
    f[static_cast<std::size_t>(std::find(mons.begin(), mons.end(), Exponent{2, 1, 0, 0}) - mons.begin())] = 1;
    EXPECT_EQ(ev.derivative(f, {1, 0, 0, 0}, {3, 5, 7, 11}), 30u);
    EXPECT_EQ(ev.evaluate(f, {3, 5, 7, 11}), 45u);
    EXPECT_EQ(ev.derivative(f, {0, 0, 1, 0}, {3, 5, 7, 11}), 0u);
}

TEST(Configuration, DeterministicAndGeneral) {
    const auto a = make_configuration(kDefaultPrime, 42);
    const auto b = make_configuration(kDefaultPrime, 42);
    EXPECT_EQ(a.points(), b.points());
    EXPECT_NE(a.points(), make_configuration(kDefaultPrime, 43).points());
    EXPECT_TRUE(PointConfiguration::in_general_position(a.points(), a.field()));
    EXPECT_THROW(make_configuration(101, 1), oracle_error);
    EXPECT_THROW(make_configuration(2147483646, 1), oracle_error);
}

TEST(Interpolation, SpecExamples) {
    const auto& cfg = config();
    EXPECT_EQ(h0_interpolation(2, std::vector<std::int64_t>(8, 1), cfg), 2);
    EXPECT_EQ(h0_interpolation(1, std::vector<std::int64_t>{1, 1, 1}, cfg), 1);
    EXPECT_EQ(h0_interpolation(5, std::vector<std::int64_t>{}, cfg), 56);
    EXPECT_EQ(h0_interpolation(make_divisor(15, {13, 10, 9, 7, 6, 3, 3, 2}), cfg), 2);
}

TEST(Interpolation, MultiplicityAboveDegreeCapsConditions) {
    EXPECT_EQ(h0_interpolation(make_divisor(2, {3}), config()), 0);
    EXPECT_EQ(h0_interpolation(make_divisor(2, {5, 1}), config()), 0);
}

TEST(Interpolation, PrimeMustExceedDegree) {
    const PrimeField F{7};
    const std::vector<Point> pts{{1, 2, 3, 4}};
    const std::vector<std::int64_t> m{1};
    EXPECT_THROW(conditions_matrix(7, pts, m, F), oracle_error);
    EXPECT_NO_THROW(conditions_matrix(6, pts, m, F));
}

TEST(Interpolation, AgreesWithFormulaOnRandomClasses) {
    std::mt19937_64 rng{77};
    for (int n = 0; n < 60; ++n) {
        const auto L = gen::random_user_class(rng, 8, 5);
        EXPECT_EQ(h0_interpolation(L, config()), dimension(L)) << L.degree();
    }
}

TEST(LineOrder, SpecExamples) {
    const auto& cfg = config();
    EXPECT_EQ(line_vanishing_order(kernel_basis(make_divisor(3, {3, 3}), cfg), cfg, 1, 2), 3);
    const auto kb = kernel_basis(make_divisor(4, {2, 2, 2, 2, 2, 2, 2, 2}), cfg);
    for (int j = 2; j <= 8; ++j) EXPECT_EQ(line_vanishing_order(kb, cfg, 1, j), 0);
    EXPECT_EQ(line_vanishing_order(kernel_basis(make_divisor(2, {2, 2, 2}), cfg), cfg, 1, 2), 2);
    EXPECT_THROW(line_vanishing_order(KernelBasis{}, cfg, 1, 2), oracle_error);
}

TEST(EighthPoint, OnTheNetAndStable) {
    const auto& cfg = config();
    const std::array<int, 7> seven{1, 2, 3, 4, 5, 6, 7};
    const auto P = eighth_point(cfg, seven);
    const auto net = kernel_basis(make_divisor(2, {1, 1, 1, 1, 1, 1, 1}), cfg);
    ASSERT_EQ(net.dimension(), 3u);
    EXPECT_TRUE(vanishes_at(net, P, cfg.field()));
    for (int i = 1; i <= 8; ++i) EXPECT_FALSE(same_point(P, cfg.point(i), cfg.field()));
    for (u64 salt = 1; salt <= 3; ++salt) EXPECT_TRUE(same_point(P, eighth_point(cfg, seven, salt), cfg.field()));
}

TEST(EighthPoint, PointCaseForOneMultiplicity) {
    const auto& cfg = config();
    const auto P = eighth_point(cfg, {1, 2, 3, 4, 5, 6, 7});
    EXPECT_TRUE(vanishes_at(kernel_basis(make_divisor(2, {1, 1, 1, 1, 1, 1, 1}), cfg), P, cfg.field()));
    // for m = 2 the base point of L3(4; 2^7, 1) on D_Q8 is a different point
    EXPECT_FALSE(vanishes_at(kernel_basis(make_divisor(4, {2, 2, 2, 2, 2, 2, 2, 1}), cfg), P, cfg.field()));
}

TEST(EighthPoint, TransportedForNonStandardClass) {
    const auto& cfg = config();
    const auto L = make_divisor(3, {2, 2, 2, 1, 1, 1, 1, 1});
    EXPECT_TRUE(vanishes_at(kernel_basis(L, cfg), associated_point(L, cfg), cfg.field()));
    EXPECT_THROW(associated_point(make_divisor(4, {2, 2, 2, 2}), cfg), oracle_error);
}

TEST(CremonaMap, InvolutionOnPoints) {
    const auto& cfg = config();
    const FourPoints B{1, 2, 3, 4};
    const std::vector<Point> pts{cfg.point(5), cfg.point(6), {1, 2, 3, 4}, {7, 11, 13, 17}};
    const auto moved = cremona_configuration(cfg, B);
    const auto back = cremona_point_map(cremona_point_map(pts, B, cfg), B, moved);
    for (std::size_t k = 0; k < pts.size(); ++k) EXPECT_TRUE(same_point(back[k], pts[k], cfg.field()));
}

TEST(CremonaMap, RejectsIndeterminacy) {
    const auto& cfg = config();
    EXPECT_THROW(cremona_point_map({cfg.point(1)}, {1, 2, 3, 4}, cfg), oracle_error);
    const auto mid = oracle::detail::combine(cfg.field(), 1, cfg.point(1), 5, cfg.point(2));
    EXPECT_THROW(cremona_point_map({mid}, {1, 2, 3, 4}, cfg), oracle_error);
}

TEST(CremonaMap, LineGoesToTwistedCubic) {
    // transported points of l_{1,2} lie on the twisted cubic through the
    // six points B u {1,2}: check with the quadrics through that cubic,
    // i.e. quadrics through the six points and one transported point
    const auto& cfg = config();
    const FourPoints B{3, 4, 5, 6};
    std::vector<Point> line;
    for (u64 lam : {3u, 5u, 8u, 13u, 21u, 34u, 55u})
        line.push_back(oracle::detail::combine(cfg.field(), 1, cfg.point(1), lam, cfg.point(2)));
    const auto image = cremona_point_map(line, B, cfg);
    const auto moved = cremona_configuration(cfg, B);
    std::vector<Point> through{moved.point(1), moved.point(2), moved.point(3),
                               moved.point(4), moved.point(5), moved.point(6), image[0]};
    const auto quadrics = kernel_basis_at(2, through, std::vector<std::int64_t>(7, 1), cfg.field());
    EXPECT_EQ(quadrics.dimension(), 3u);
    for (std::size_t k = 1; k < image.size(); ++k) EXPECT_TRUE(vanishes_at(quadrics, image[k], cfg.field()));
}

TEST(CurveMembership, SpecExamples) {
    const auto& cfg = config();
    EXPECT_TRUE(curve_membership_check(make_divisor(5, {4, 3, 3, 3, 2, 1, 1, 1}), {1, 6, 7}, cfg));
    EXPECT_FALSE(curve_membership_check(make_divisor(4, {2, 2, 2, 2, 2, 2, 2, 2}), {0, 1, 2}, cfg));
    EXPECT_TRUE(curve_membership_check(make_divisor(2, {2, 2, 2}), {0, 1, 2}, cfg));
    EXPECT_THROW(curve_membership_check(make_divisor(9, {}), {3, 1, 2}, cfg), oracle_error);
}

TEST(CurveMembership, LevelTwoCurve) {
    // t_2^{1,2} = m_1 + m_2 - d - K for even level 2
    const auto& cfg = config();
    const auto L = make_divisor(5, {4, 3, 2, 2, 2, 2, 2, 2});
    ASSERT_GT(-intersect(L, minus_one_curve({2, 1, 2})), 0);
    EXPECT_TRUE(curve_membership_check(L, {2, 1, 2}, cfg));
    EXPECT_FALSE(curve_membership_check(make_divisor(3, {1, 1, 1, 1, 1, 1, 1, 1}), {2, 1, 2}, cfg));
}

TEST(CurveMembership, ExactlyThePositiveCurves) {
    // containment of C_a^{b,c} (a <= 1) in a fixed-free class iff t > 0
    const auto& cfg = config();
    std::mt19937_64 rng{808};
    for (int n = 0; n < 8; ++n) {
        const auto L = gen::random_fixed_free_nonstandard(rng, 8);
        for (int a = 0; a <= 1; ++a)
            for (int b = 1; b <= 8; ++b)
                for (int c = b + 1; c <= 8; ++c) {
                    const MinusOneCurveId id{a, b, c};
                    const bool positive = -intersect(L, minus_one_curve(id)) > 0;
                    EXPECT_EQ(curve_membership_check(L, id, cfg), positive)
                        << a << " " << b << " " << c << " d=" << L.degree();
                }
    }
}

TEST(QuarticCurve, SamplesLieOnThePencil) {
    const auto& cfg = config();
    const auto pts = dq8_sample_points(cfg, 8);
    ASSERT_EQ(pts.size(), 8u);
    const auto pencil = kernel_basis(make_divisor(2, {1, 1, 1, 1, 1, 1, 1, 1}), cfg);
    const auto quartics = kernel_basis(make_divisor(4, {2, 2, 2, 2, 2, 2, 2, 2}), cfg);
    const auto cubics = kernel_basis(make_divisor(3, {1, 1, 1, 1, 1, 1, 1, 1}), cfg);
    for (const auto& p : pts) {
        EXPECT_TRUE(vanishes_at(pencil, p, cfg.field()));
        EXPECT_TRUE(vanishes_at(quartics, p, cfg.field()));
        for (int i = 1; i <= 8; ++i) EXPECT_FALSE(same_point(p, cfg.point(i), cfg.field()));
    }
    EXPECT_FALSE(std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return vanishes_at(cubics, p, cfg.field()); }));
}
