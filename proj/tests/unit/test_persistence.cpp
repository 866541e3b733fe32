#include <gtest/gtest.h>

#include "pokertopo/equity.hpp"
#include "pokertopo/homology.hpp"
#include "pokertopo/landmarks.hpp"
#include "pokertopo/persistence.hpp"

using namespace pokertopo;

namespace {

HolePair P(const char* s) { return pair_from_text(s); }

SimplicialComplex circle() { return SimplicialComplex({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}); }

const OnDemandCounts& counts() {
    static OnDemandCounts c;
    return c;
}

}  // namespace

TEST(Persistence, ConstantFiltrationMatchesBetti) {
    const Filtration f = {{Rational(1), circle()}, {Rational(3, 4), circle()}};
    const auto d = persistence(f);
    ASSERT_EQ(d.points.size(), 2u);
    for (const auto& p : d.points) {
        EXPECT_TRUE(p.essential);
        EXPECT_EQ(p.death, persistence_sentinel());
        EXPECT_EQ(p.birth, Rational(1));
    }
    EXPECT_EQ(d.alive(0, Rational(3, 4)), 1u);
    EXPECT_EQ(d.alive(1, Rational(3, 4)), 1u);
}

TEST(Persistence, RejectsNonNestedStages) {
    const SimplicialComplex smaller({"a", "b", "c"}, {{0, 1}, {2}});
    const Filtration f = {{Rational(1), circle()}, {Rational(3, 4), smaller}};
    EXPECT_THROW(persistence(f), FiltrationError);
    const Filtration unordered = {{Rational(3, 4), smaller}, {Rational(1), circle()}};
    EXPECT_THROW(persistence(unordered), FiltrationError);
}

TEST(Persistence, FillingKillsTheLoop) {
    const SimplicialComplex disk({"a", "b", "c"}, {{0, 1, 2}});
    const auto d = persistence({{Rational(9, 10), circle()}, {Rational(6, 10), disk}});
    ASSERT_EQ(d.points.size(), 2u);
    const auto loop = d.points[1].dimension == 1 ? d.points[1] : d.points[0];
    EXPECT_EQ(loop.dimension, 1);
    EXPECT_EQ(loop.birth, Rational(9, 10));
    EXPECT_EQ(loop.death, Rational(6, 10));
    EXPECT_FALSE(loop.essential);
}

TEST(FiltrationFromMatrix, TwoIncomparableHands) {
    const auto f = filtration_from_matrix(counts(), {P("AcAd"), P("AhAs")}, TieConvention::SplitTie);
    ASSERT_FALSE(f.empty());
    for (const auto& stage : f) EXPECT_EQ(stage.complex.f_vector(), (std::vector<std::size_t>{2}));
}

TEST(FiltrationFromMatrix, TriangleStagesAndLoopBirth) {
    const auto f = filtration_from_matrix(counts(), landmarks::triangle_hands(), TieConvention::SplitTie);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[0].threshold, Rational(1));
    EXPECT_EQ(f[1].threshold, Rational(1062241, 1712304));  // 2d2h over Ac2c, ~0.620
    EXPECT_EQ(f[2].threshold, Rational(1011552, 1712304));  // Ac2c over 3c5c, ~0.591
    EXPECT_EQ(f[3].threshold, Rational(862222, 1712304));   // 3c5c over 2d2h, ~0.504
    for (std::size_t i = 1; i < f.size(); ++i) {
        EXPECT_LT(f[i].threshold, f[i - 1].threshold);
        for (const auto& face : f[i - 1].complex.labelled_faces()) EXPECT_TRUE(f[i].complex.contains_labels(face));
    }
    const auto d = persistence(f);
    std::size_t loops = 0;
    for (const auto& p : d.points) {
        if (p.dimension != 1) continue;
        ++loops;
        EXPECT_EQ(p.birth, f[3].threshold);
        EXPECT_TRUE(p.essential);
    }
    EXPECT_EQ(loops, 1u);
}

TEST(FiltrationFromMatrix, SphereDiagramGolden) {
    const auto hands = landmarks::sphere_hands();
    const auto f = filtration_from_matrix(counts(), hands, TieConvention::SplitTie);
    EXPECT_EQ(f.size(), 27u);
    EXPECT_EQ(f.back().complex.f_vector(), (std::vector<std::size_t>{8, 27, 48, 45, 18}));
    const auto d = persistence(f);
    // Alive counts agree with field Betti numbers stage by stage.
    for (const auto& stage : f) {
        const auto b = betti_mod2(stage.complex, false);
        for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(d.alive(static_cast<int>(k), stage.threshold), b[k]);
    }
    const std::vector<PersistencePoint> expected_high = {
        {1, Rational(720875, 856152), Rational(2359051, 3424608), false},
        {1, Rational(87272, 107019), Rational(723805, 1141536), false},
        {1, Rational(2680895, 3424608), Rational(853397, 1141536), false},
        {2, Rational(919463, 1712304), Rational(223435, 428076), false},
        {4, Rational(573019, 1141536), persistence_sentinel(), true},
    };
    std::vector<PersistencePoint> high;
    for (const auto& p : d.points)
        if (p.dimension > 0) high.push_back(p);
    EXPECT_EQ(high, expected_high);
}
