#include <gtest/gtest.h>

#include <random>

#include "bl3/cremona.hpp"
#include "random_classes.hpp"

using namespace bl3;

TEST(Cremona, DivisorOnFirstFour) {
    EXPECT_EQ(cremona_divisor(make_divisor(15, {13, 10, 9, 7, 6, 3, 3, 2})),
              make_divisor(6, {4, 1, 0, -2, 6, 3, 3, 2}));
    EXPECT_EQ(cremona_divisor(make_divisor(3, {2, 2, 2, 2})), make_divisor(1, {}));
}

TEST(Cremona, DivisorOnArbitraryBase) {
    const auto L = make_divisor(6, {4, 1, 0, -2, 6, 3, 3, 2});
    EXPECT_EQ(cremona_divisor(L, {5, 1, 6, 7}), make_divisor(2, {0, 1, 0, -2, 2, -1, -1, 2}));
    EXPECT_THROW(cremona_divisor(L, {1, 1, 2, 3}), invalid_class);
}

TEST(Cremona, CurveMapsLineToTwistedCubic) {
    EXPECT_EQ(cremona_curve(line_class(5, 6)), make_curve(3, {1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(cremona_curve(line_class(1, 5)), line_class(1, 5));
}

TEST(Cremona, MinusOneCanonicalTable) {
    const FourPoints B{1, 2, 3, 4};
    EXPECT_EQ(cremona_minus_one({0, 1, 2}, B), (MinusOneCurveId{0, 3, 4}));
    EXPECT_EQ(cremona_minus_one({1, 1, 2}, B), (MinusOneCurveId{2, 3, 4}));
    EXPECT_EQ(cremona_minus_one({2, 1, 2}, B), (MinusOneCurveId{1, 3, 4}));
    EXPECT_EQ(cremona_minus_one({0, 1, 5}, B), (MinusOneCurveId{0, 1, 5}));
    EXPECT_EQ(cremona_minus_one({3, 2, 7}, B), (MinusOneCurveId{3, 2, 7}));
    EXPECT_EQ(cremona_minus_one({0, 5, 6}, B), (MinusOneCurveId{1, 7, 8}));
    EXPECT_EQ(cremona_minus_one({1, 5, 6}, B), (MinusOneCurveId{0, 7, 8}));
    EXPECT_EQ(cremona_minus_one({2, 5, 6}, B), (MinusOneCurveId{3, 7, 8}));
}

TEST(Cremona, MinusOneAgreesWithCurveFormulaOffTheEdges) {
    for (int a = 0; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            for (int c = b + 1; c <= 8; ++c) {
                const MinusOneCurveId id{a, b, c};
                for (const FourPoints B : {FourPoints{1, 2, 3, 4}, FourPoints{2, 5, 7, 8}, FourPoints{3, 4, 6, 8}}) {
                    if (is_edge_of(id, B)) continue;
                    EXPECT_EQ(minus_one_curve(cremona_minus_one(id, B)), cremona_curve(minus_one_curve(id), B))
                        << a << " " << b << " " << c;
                }
            }
}

TEST(Cremona, EdgeLinePairingFlipsSign) {
    const auto L = make_divisor(5, {4, 3, 3, 3, 2, 1, 1, 1});
    const FourPoints B{1, 2, 3, 4};
    const auto image = cremona_minus_one({0, 1, 2}, B);
    EXPECT_EQ(intersect(cremona_divisor(L, B), minus_one_curve(image)), -intersect(L, line_class(1, 2)));
}

TEST(Cremona, InvolutionAndInvariants) {
    std::mt19937_64 rng{2024};
    for (int n = 0; n < 1000; ++n) {
        const auto L = gen::random_lattice_class(rng, 40);
        const auto C = gen::random_curve_class(rng, 40);
        const auto B = gen::random_four(rng);
        EXPECT_EQ(cremona_divisor(cremona_divisor(L, B), B), L);
        EXPECT_EQ(cremona_curve(cremona_curve(C, B), B), C);
        EXPECT_EQ(intersect(cremona_divisor(L, B), cremona_curve(C, B)), intersect(L, C));
        EXPECT_EQ(anticanonical_degree(cremona_divisor(L, B)), anticanonical_degree(L));
    }
}

TEST(Cremona, MinusOneInvolution) {
    std::mt19937_64 rng{99};
    for (int n = 0; n < 500; ++n) {
        const auto B = gen::random_four(rng);
        const int a = static_cast<int>(gen::uniform(rng, 0, 10));
        const int b = static_cast<int>(gen::uniform(rng, 1, 8));
        int c = static_cast<int>(gen::uniform(rng, 1, 7));
        if (c >= b) ++c;
        const MinusOneCurveId id{a, b, c};
        EXPECT_EQ(cremona_minus_one(cremona_minus_one(id, B), B), id);
    }
}

TEST(Cremona, RelabelingRoundTrip) {
    const Relabeling r{{3, 1, 2, 8, 7, 6, 5, 4}};
    const auto L = make_divisor(9, {1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ(r.permute(L).mult(1), 3);
    EXPECT_EQ(r.unpermute(r.permute(L)), L);
    EXPECT_EQ(r.slot_of(8), 4);
    EXPECT_FALSE(r.is_identity());
    EXPECT_TRUE(Relabeling{}.is_identity());
    EXPECT_THROW((Relabeling{{1, 1, 2, 3, 4, 5, 6, 7}}), invalid_class);
}

TEST(Cremona, SortIsStableOnOriginalLabels) {
    const auto s = sort_descending(make_divisor(4, {1, 3, 1, 3}));
    EXPECT_EQ(s.sorted, make_divisor(4, {3, 3, 1, 1}));
    EXPECT_EQ(s.order.source(1), 2);
    EXPECT_EQ(s.order.source(2), 4);
    EXPECT_EQ(s.order.source(3), 1);
    EXPECT_EQ(s.order.source(4), 3);
}

TEST(Cremona, StepKeepsOriginalLabels) {
    const auto L = make_divisor(6, {4, 1, 0, -2, 6, 3, 3, 2});
    const CremonaStep step{sort_descending(L).order};
    EXPECT_EQ(step.used(), (FourPoints{5, 1, 6, 7}));
    EXPECT_EQ(step.apply(L), make_divisor(2, {0, 1, 0, -2, 2, -1, -1, 2}));
    EXPECT_EQ(step.apply(step.apply(L)), L);
}
