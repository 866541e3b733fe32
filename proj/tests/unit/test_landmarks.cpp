#include <gtest/gtest.h>

#include <set>

#include "pokertopo/complex.hpp"
#include "pokertopo/equity.hpp"
#include "pokertopo/homology.hpp"
#include "pokertopo/landmarks.hpp"

using namespace pokertopo;

TEST(EightHands, RelationMatchesTheExpectedDigraph) {
    OnDemandCounts src;
    const auto t = relation_at(src, landmarks::sphere_hands(), TieConvention::SplitTie, Rational(1, 2));
    const auto edges = landmarks::sphere_edges();
    std::set<std::pair<std::string, std::string>> got, want(edges.begin(), edges.end());
    for (auto [u, v] : t.edges()) got.emplace(t.label(u), t.label(v));
    EXPECT_EQ(got, want);
    EXPECT_EQ(got.size(), 27u);
    EXPECT_FALSE(t.comparable(t.id("AcAd"), t.id("AhAs")));

    const std::vector<std::uint32_t> chain{static_cast<std::uint32_t>(t.id("AcAd")), static_cast<std::uint32_t>(t.id("6d6s")),
                                           static_cast<std::uint32_t>(t.id("2h2s"))};
    EXPECT_TRUE(is_simplex(t, chain));

    const auto k = order_complex(t);
    EXPECT_EQ(k.f_vector(), (std::vector<std::size_t>{8, 27, 48, 45, 18}));
    EXPECT_EQ(k.maximal_faces().size(), 18u);
    const auto h = homology(k, true);
    EXPECT_TRUE(h.torsion_free());
    EXPECT_EQ(h.betti(), (std::vector<std::size_t>{0, 0, 0, 0, 1}));

    SimplicialComplex joined;
    for (const auto& row : landmarks::sphere_rows()) {
        std::vector<std::size_t> ids;
        for (const auto& p : row) ids.push_back(t.id(pair_label(p)));
        joined = join(joined, order_complex(t.induced(ids)));
    }
    EXPECT_TRUE(joined.same_faces(k));
}

TEST(EightHands, AreDisjoint) { EXPECT_NO_THROW(require_disjoint(landmarks::sphere_hands())); }
