#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pokertopo/complex.hpp"
#include "pokertopo/homology.hpp"

using namespace pokertopo;

namespace {

Tournament rps() {
    Tournament t({"R", "P", "S"});
    t.add_edge(t.id("R"), t.id("S"));
    t.add_edge(t.id("S"), t.id("P"));
    t.add_edge(t.id("P"), t.id("R"));
    return t;
}

Tournament transitive(int k) {
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("v" + std::to_string(i));
    Tournament t(labels);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) t.add_edge(i, j);
    return t;
}

/// Random partial tournament: each pair gets an edge in a random direction
/// with probability `density`.
Tournament random_tournament(int n, double density, std::mt19937_64& rng) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    Tournament t(labels);
    std::bernoulli_distribution keep(density), flip(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (keep(rng)) flip(rng) ? t.add_edge(i, j) : t.add_edge(j, i);
    return t;
}

SimplicialComplex two_points(const std::string& a, const std::string& b) { return SimplicialComplex({a, b}, {{0}, {1}}); }

}  // namespace

TEST(Tournament, RejectsSelfLoopsAndReverseEdges) {
    Tournament t({"a", "b"});
    t.add_edge(0, 1);
    EXPECT_THROW(t.add_edge(1, 0), std::invalid_argument);
    EXPECT_THROW(t.add_edge(0, 0), std::invalid_argument);
    EXPECT_THROW(t.id("c"), std::invalid_argument);
    EXPECT_TRUE(t.comparable(1, 0));
}

TEST(Tournament, RelationFileRoundTrip) {
    std::istringstream in("# comment\na b 3/5\nb c\nlonely\n");
    const auto t = read_relation(in);
    EXPECT_EQ(t.size(), 4u);
    EXPECT_EQ(t.edge_count(), 2u);
    EXPECT_EQ(*t.probability(t.id("a"), t.id("b")), Rational(3, 5));
    std::ostringstream out;
    write_relation(out, t);
    std::istringstream back(out.str());
    const auto u = read_relation(back);
    EXPECT_EQ(u.labels(), t.labels());
    EXPECT_EQ(u.edges(), t.edges());
    std::istringstream bad("a a\n");
    EXPECT_THROW(read_relation(bad), std::invalid_argument);
}

TEST(IsSimplex, Examples) {
    const auto t = rps();
    const std::vector<std::uint32_t> empty, one{0}, pair{0, 2}, all{0, 1, 2};
    EXPECT_TRUE(is_simplex(t, empty));
    EXPECT_TRUE(is_simplex(t, one));
    EXPECT_TRUE(is_simplex(t, pair));
    EXPECT_FALSE(is_simplex(t, all));
    const std::vector<std::uint32_t> out_of_range{0, 7};
    EXPECT_THROW(is_simplex(t, out_of_range), std::invalid_argument);
}

TEST(OrderComplex, RockPaperScissorsIsACircle) {
    const auto k = order_complex(rps());
    EXPECT_EQ(k.f_vector(), (std::vector<std::size_t>{3, 3}));
    EXPECT_EQ(k.dimension(), 1);
    const auto h = homology(k, true);
    EXPECT_EQ(h.betti(), (std::vector<std::size_t>{0, 1}));
}

TEST(OrderComplex, TransitiveTournamentIsAFullSimplex) {
    for (int k = 1; k <= 10; ++k) {
        const auto c = order_complex(transitive(k));
        ASSERT_EQ(c.maximal_faces().size(), 1u);
        EXPECT_EQ(c.dimension(), k - 1);
        std::size_t faces = 0;
        for (auto f : c.f_vector()) faces += f;
        EXPECT_EQ(faces, (std::size_t{1} << k) - 1);
    }
    EXPECT_EQ(f_vector(order_complex(transitive(4))), (std::vector<std::size_t>{4, 6, 4, 1}));
}

TEST(OrderComplex, EdgelessRelationGivesIsolatedPoints) {
    const auto k = order_complex(Tournament({"x", "y", "z"}));
    EXPECT_EQ(k.f_vector(), (std::vector<std::size_t>{3}));
}

// A set is a face iff all of its 3-subsets are; checked exhaustively.
TEST(OrderComplex, ThreeDeterminedByBruteForce) {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + trial % 9;  // up to 12 vertices
        const auto t = random_tournament(n, trial % 2 ? 1.0 : 0.7, rng);
        const auto k = order_complex(t);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::uint32_t> s;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) s.push_back(static_cast<std::uint32_t>(v));
            bool triples = true;
            for (std::size_t a = 0; a < s.size() && triples; ++a) {
                for (std::size_t b = a + 1; b < s.size() && triples; ++b) {
                    if (!t.comparable(s[a], s[b])) triples = false;
                    for (std::size_t c = b + 1; c < s.size() && triples; ++c) {
                        const std::vector<std::uint32_t> tri{s[a], s[b], s[c]};
                        triples = is_simplex(t, tri);
                    }
                }
            }
            ASSERT_EQ(is_simplex(t, s), triples) << "n=" << n << " mask=" << mask;
            ASSERT_EQ(k.contains(s), triples) << "n=" << n << " mask=" << mask;
        }
    }
}

TEST(OrderComplex, EulerCharacteristicMatchesHomology) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const auto k = order_complex(random_tournament(7 + trial % 5, 0.85, rng));
        const auto h = homology(k, false);
        EXPECT_EQ(k.euler_characteristic(), h.euler_characteristic());
        if (h.torsion_free()) EXPECT_EQ(betti_mod2(k, false), h.betti());
    }
}

TEST(Join, TwoZeroSpheresMakeASquare) {
    const auto k = join(two_points("a", "b"), two_points("c", "d"));
    EXPECT_EQ(k.f_vector(), (std::vector<std::size_t>{4, 4}));
    EXPECT_EQ(homology(k, true).betti(), (std::vector<std::size_t>{0, 1}));
}

TEST(Join, SuspendedCircleIsATwoSphere) {
    const auto k = join(two_points("n", "s"), order_complex(rps()));
    EXPECT_EQ(homology(k, true).betti(), (std::vector<std::size_t>{0, 0, 1}));
}

TEST(Join, ConeIsAcyclic) {
    const auto cone = join(order_complex(rps()), SimplicialComplex({"apex"}, {{0}}));
    for (auto b : homology(cone, true).betti()) EXPECT_EQ(b, 0u);
}

TEST(Join, VoidIsTheIdentityAndSharedLabelsThrow) {
    const auto c = order_complex(rps());
    EXPECT_TRUE(join(SimplicialComplex(), c).same_faces(c));
    EXPECT_THROW(join(c, two_points("R", "x")), std::invalid_argument);
}

// Reduced Betti numbers of a join are the shifted convolution of the factors'.
TEST(Join, ReducedBettiConvolution) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        auto t1 = random_tournament(5, 1.0, rng), t2 = random_tournament(4, 1.0, rng);
        std::vector<std::string> l2;
        for (const auto& l : t2.labels()) l2.push_back("y" + l);
        Tournament u2(l2);
        for (auto [a, b] : t2.edges()) u2.add_edge(a, b);
        const auto a = order_complex(t1), b = order_complex(u2);
        const auto ha = homology(a, true).betti(), hb = homology(b, true).betti();
        std::vector<std::size_t> expected(ha.size() + hb.size(), 0);
        for (std::size_t i = 0; i < ha.size(); ++i)
            for (std::size_t j = 0; j < hb.size(); ++j) expected[i + j + 1] += ha[i] * hb[j];
        auto got = homology(join(a, b), true).betti();
        got.resize(expected.size(), 0);
        EXPECT_EQ(got, expected);
    }
}

TEST(ComplexFile, RoundTrip) {
    const auto k = join(two_points("a", "b"), order_complex(rps()));
    std::ostringstream out;
    write_complex(out, k);
    std::istringstream in(out.str());
    EXPECT_TRUE(read_complex(in).same_faces(k));
}

TEST(SimplicialComplex, DropsNonMaximalFacesAndInduces) {
    SimplicialComplex k({"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1}, {2, 3}});
    EXPECT_EQ(k.maximal_faces().size(), 2u);
    EXPECT_TRUE(k.contains_labels({"a", "c"}));
    EXPECT_FALSE(k.contains_labels({"a", "d"}));
    const auto sub = k.induced({"a", "c", "d"});
    EXPECT_EQ(sub.f_vector(), (std::vector<std::size_t>{3, 2}));
}
