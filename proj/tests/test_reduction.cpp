#include <gtest/gtest.h>

#include <random>

#include "bl3/reduction.hpp"
#include "random_classes.hpp"

using namespace bl3;

namespace {

const DivisorClass kExample = make_divisor(15, {13, 10, 9, 7, 6, 3, 3, 2});

}  // namespace

TEST(Reduction, WorkedExampleTrace) {
    const auto r = reduce_to_standard(kExample);
    ASSERT_EQ(r.trace.size(), 3u);
    EXPECT_EQ(r.trace.steps[0].used(), (FourPoints{1, 2, 3, 4}));
    EXPECT_EQ(r.trace.steps[1].used(), (FourPoints{5, 1, 6, 7}));
    EXPECT_EQ(r.trace.steps[2].used(), (FourPoints{5, 8, 2, 1}));
    EXPECT_EQ(r.end, make_divisor(1, {-1, 0, 0, -2, 1, -1, -1, 1}));
    EXPECT_EQ(r.standard, make_divisor(1, {1, 1, 0, 0, -1, -1, -1, -2}));
    EXPECT_FALSE(r.degree_negative);
    ASSERT_EQ(r.stripped.size(), 4u);
}

TEST(Reduction, DegreeSequence) {
    auto cur = kExample;
    std::vector<std::int64_t> degrees{cur.degree()};
    for (const auto& s : reduce_to_standard(kExample).trace.steps) {
        cur = s.apply(cur);
        degrees.push_back(cur.degree());
    }
    EXPECT_EQ(degrees, (std::vector<std::int64_t>{15, 6, 2, 1}));
}

TEST(Reduction, StandardInputNeedsNoSteps) {
    const auto r = reduce_to_standard(make_divisor(4, {2, 2, 2, 2, 2, 2, 2, 2}));
    EXPECT_TRUE(r.trace.empty());
    EXPECT_TRUE(r.stripped.empty());
}

TEST(Reduction, RejectsInternalClasses) {
    EXPECT_THROW(reduce_to_standard(make_divisor(1, {-1})), invalid_class);
    EXPECT_THROW(dimension(make_divisor(-2, {})), invalid_class);
}

TEST(Reduction, BackTransportOfExceptionalDivisor) {
    const auto r = reduce_to_standard(kExample);
    EXPECT_EQ(transport_divisor_back(exceptional_class(1), r.trace), make_divisor(4, {3, 3, 2, 2, 2, 1, 1, 1}));
    EXPECT_EQ(transport_divisor_back(exceptional_class(4), r.trace), make_divisor(1, {1, 1, 1}));
}

TEST(Reduction, FixedComponentsOfWorkedExample) {
    const auto fc = fixed_components(kExample);
    ASSERT_EQ(fc.fixed.items.size(), 4u);
    EXPECT_EQ(fc.fixed.items[0], (FixedItem{make_divisor(4, {3, 3, 2, 2, 2, 1, 1, 1}), 1}));
    EXPECT_EQ(fc.fixed.items[1], (FixedItem{make_divisor(1, {1, 1, 1}), 2}));
    EXPECT_EQ(fc.fixed.items[2], (FixedItem{make_divisor(2, {2, 1, 1, 1, 1, 0, 1, 0}), 1}));
    EXPECT_EQ(fc.fixed.items[3], (FixedItem{make_divisor(2, {2, 1, 1, 1, 1, 1, 0, 0}), 1}));
    EXPECT_EQ(fc.residual, make_divisor(5, {4, 3, 3, 3, 2, 1, 1, 1}));
    EXPECT_EQ(fc.fixed.total() + fc.residual, kExample);
}

TEST(Reduction, DoublePlane) {
    const auto fc = fixed_components(make_divisor(2, {2, 2, 2}));
    ASSERT_EQ(fc.fixed.items.size(), 1u);
    EXPECT_EQ(fc.fixed.items[0], (FixedItem{make_divisor(1, {1, 1, 1}), 2}));
    EXPECT_EQ(fc.residual, make_divisor(0, {}));
}

TEST(Reduction, EmptySystems) {
    EXPECT_THROW(fixed_components(make_divisor(2, {3})), empty_system);
    EXPECT_EQ(dimension(make_divisor(2, {3})), 0);
    EXPECT_EQ(dimension(make_divisor(3, {2, 2, 2, 2, 2})), 0);
}

TEST(Reduction, KnownDimensions) {
    EXPECT_EQ(dimension(make_divisor(2, {1, 1, 1, 1, 1, 1, 1, 1})), 2);
    EXPECT_EQ(dimension(make_divisor(1, {1, 1, 1})), 1);
    EXPECT_EQ(dimension(make_divisor(3, {3, 3})), 4);
    EXPECT_EQ(dimension(make_divisor(4, {})), 35);
    EXPECT_EQ(dimension(make_divisor(0, {})), 1);
    EXPECT_EQ(dimension(kExample), 2);
    EXPECT_EQ(dimension(make_divisor(4, {2, 2, 2, 2, 2, 2, 2, 2})), 3);
}

TEST(Reduction, H1Correction) {
    // two triple lines: t_{1,2} = 3 contributes C(4,3) = 4
    const auto L = make_divisor(3, {3, 3});
    EXPECT_EQ(euler_characteristic(L), 0);
    EXPECT_EQ(h1_standard(L), 4);
    EXPECT_EQ(h1_standard(make_divisor(4, {2, 2, 2, 2})), 0);
}

TEST(Reduction, FixedPartPlusResidualIsInput) {
    std::mt19937_64 rng{5};
    for (int n = 0; n < 300; ++n) {
        const auto L = gen::random_user_class(rng, 15, 12);
        if (dimension(L) == 0) continue;
        const auto fc = fixed_components(L);
        EXPECT_EQ(fc.fixed.total() + fc.residual, L);
        EXPECT_EQ(dimension(fc.residual), dimension(L));
        EXPECT_TRUE(fixed_components(fc.residual).fixed.empty());
    }
}

TEST(Reduction, DimensionIsCremonaInvariantOnEffectiveImages) {
    std::mt19937_64 rng{11};
    for (int n = 0; n < 300; ++n) {
        const auto L = gen::random_standard_class(rng, 10);
        const auto M = cremona_divisor(L, gen::random_four(rng));
        if (M.internal()) continue;
        EXPECT_EQ(dimension(M), dimension(L)) << M.degree();
    }
}
