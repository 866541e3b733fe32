#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "pokertopo/equity.hpp"
#include "pokertopo/landmarks.hpp"

using namespace pokertopo;

namespace {

HolePair P(const char* s) { return pair_from_text(s); }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("pokertopo_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

// Frozen after exhaustive enumeration, and cross-checked against
// matchup_counts_reference in ReferenceEnumerationAgrees.
TEST(MatchupCounts, FrozenTriangleAndClosestCall) {
    EXPECT_EQ(matchup_counts(P("Ac2c"), P("3c5c")), (MatchupCount{1005468, 12168, 694668}));
    EXPECT_EQ(matchup_counts(P("3c5c"), P("2d2h")), (MatchupCount{832236, 59972, 820096}));
    EXPECT_EQ(matchup_counts(P("2d2h"), P("Ac2c")), (MatchupCount{1048744, 26994, 636566}));
    EXPECT_EQ(matchup_counts(P("3c3d"), P("AcTc")), (MatchupCount{851290, 9966, 851048}));
    EXPECT_EQ(matchup_counts(P("AcAd"), P("AhAs")), (MatchupCount{37210, 1637884, 37210}));
}

TEST(MatchupCounts, PublishedProbabilitiesUnderSplitTie) {
    const auto p = [](const char* a, const char* b) { return to_double(win_probability(matchup_counts(P(a), P(b)), TieConvention::SplitTie)); };
    EXPECT_NEAR(p("Ac2c", "3c5c"), 0.591, 0.0005);
    EXPECT_NEAR(p("3c5c", "2d2h"), 0.504, 0.0005);
    EXPECT_NEAR(p("2d2h", "Ac2c"), 0.620, 0.0005);
    EXPECT_NEAR(p("3c3d", "AcTc"), 0.50007, 0.000005);
}

TEST(MatchupCounts, ReferenceEnumerationAgrees) {
    for (auto [a, b] : {std::pair{"Ac2c", "3c5c"}, std::pair{"7h7s", "KdQd"}, std::pair{"2c3d", "4h5s"}}) {
        EXPECT_EQ(matchup_counts(P(a), P(b)), matchup_counts_reference(P(a), P(b))) << a << " vs " << b;
    }
}

TEST(MatchupCounts, AntisymmetryTotalsAndJobs) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(0, kNumPairs - 1);
    for (int k = 0; k < 8;) {
        const auto a = HolePair::from_index(pick(rng)), b = HolePair::from_index(pick(rng));
        if (a.overlaps(b)) continue;
        ++k;
        const auto ab = matchup_counts(a, b);
        EXPECT_EQ(ab.total(), kBoardsPerMatchup);
        EXPECT_EQ(matchup_counts(b, a), ab.swapped());
        EXPECT_EQ(matchup_counts(a, b, 3), ab);
        const auto& s = SuitPermutation::all()[static_cast<std::size_t>(k * 5 % 24)];
        EXPECT_EQ(matchup_counts(apply_suit_permutation(a, s), apply_suit_permutation(b, s)), ab);
    }
}

TEST(MatchupCounts, OverlapIsRejected) { EXPECT_THROW(matchup_counts(P("AcKd"), P("AcQh")), std::invalid_argument); }

TEST(WinProbability, Conventions) {
    const MatchupCount even{3, 3, 3};
    EXPECT_EQ(win_probability(even, TieConvention::SplitTie), Rational(1, 2));
    EXPECT_EQ(win_probability(even, TieConvention::StrictWin), Rational(1, 3));
    const MatchupCount sweep{kBoardsPerMatchup, 0, 0};
    EXPECT_EQ(win_probability(sweep, TieConvention::SplitTie), Rational(1));
    EXPECT_EQ(win_probability(sweep, TieConvention::StrictWin), Rational(1));
    EXPECT_EQ(parse_tie_convention("split-tie"), TieConvention::SplitTie);
    EXPECT_EQ(parse_tie_convention("strict-win"), TieConvention::StrictWin);
    EXPECT_THROW(parse_tie_convention("coin-flip"), std::invalid_argument);
}

TEST(WinProbability, AcePairsAreTieDominated) {
    const auto c = matchup_counts(P("AcAd"), P("AhAs"));
    EXPECT_LT(win_probability(c, TieConvention::StrictWin), Rational(1, 2));
    EXPECT_LT(win_probability(c.swapped(), TieConvention::StrictWin), Rational(1, 2));
    EXPECT_FALSE(beats(c, TieConvention::SplitTie, Rational(1, 2)));
    EXPECT_FALSE(beats(c.swapped(), TieConvention::SplitTie, Rational(1, 2)));
}

TEST(Beats, ThresholdSemantics) {
    OnDemandCounts src;
    const auto c = src.counts(P("Ac2c"), P("3c5c"));
    for (auto tc : {TieConvention::StrictWin, TieConvention::SplitTie}) {
        EXPECT_TRUE(beats(c, tc, Rational(1, 2)));
        EXPECT_FALSE(beats(c.swapped(), tc, Rational(1, 2)));
    }
    const auto close = src.counts(P("3c3d"), P("AcTc"));
    EXPECT_TRUE(beats(close, TieConvention::SplitTie, Rational(1, 2)));
    EXPECT_FALSE(beats(close, TieConvention::SplitTie, Rational(51, 100)));
    // Above one half the comparison is inclusive.
    const auto p = win_probability(c, TieConvention::SplitTie);
    EXPECT_TRUE(beats(c, TieConvention::SplitTie, p));
    // Exactly one half never counts as a win.
    EXPECT_FALSE(beats(MatchupCount{1, 0, 1}, TieConvention::SplitTie, Rational(1, 2)));
}

TEST(RelationAt, TriangleIsADirectedThreeCycle) {
    OnDemandCounts src;
    const auto t = relation_at(src, landmarks::triangle_hands(), TieConvention::SplitTie, Rational(1, 2));
    EXPECT_EQ(t.edge_count(), 3u);
    EXPECT_TRUE(t.beats(t.id("Ac2c"), t.id("5c3c")));
    EXPECT_TRUE(t.beats(t.id("5c3c"), t.id("2d2h")));
    EXPECT_TRUE(t.beats(t.id("2d2h"), t.id("Ac2c")));
    EXPECT_EQ(*t.probability(t.id("Ac2c"), t.id("5c3c")), Rational(1011552, 1712304));
    EXPECT_EQ(relation_at(src, landmarks::triangle_hands(), TieConvention::SplitTie, Rational(1)).edge_count(), 0u);
}

TEST(RelationAt, OverlapsAreReportedTogether) {
    OnDemandCounts src;
    try {
        relation_at(src, {P("AcKd"), P("AcQh"), P("KdJs")}, TieConvention::SplitTie, Rational(1, 2));
        FAIL() << "expected OverlapError";
    } catch (const OverlapError& e) {
        EXPECT_EQ(e.overlaps().size(), 2u);
    }
}

TEST(FullMatrix, SubsetWithAndWithoutSymmetryIsIdentical) {
    MatrixOptions opts;
    opts.subset = {P("Ac2c"), P("Ah2h"), P("3c5c"), P("2d2h"), P("Ks9s")};
    opts.use_symmetry = true;
    const auto sym = full_matrix(opts);
    opts.use_symmetry = false;
    opts.jobs = 2;
    const auto plain = full_matrix(opts);
    EXPECT_TRUE(sym == plain);
    for (const auto& a : opts.subset)
        for (const auto& b : opts.subset) {
            if (a.overlaps(b)) {
                EXPECT_EQ(sym.at(a.index(), b.index()).total(), 0u);
                continue;
            }
            EXPECT_EQ(sym.at(a.index(), b.index()), matchup_counts(a, b));
        }
}

TEST(FullMatrix, CheckpointResumeReusesWork) {
    const auto ckpt = temp_path("resume.ckpt");
    std::filesystem::remove(ckpt);
    MatrixOptions opts;
    opts.subset = {P("Ac2c"), P("3c5c"), P("2d2h")};
    opts.checkpoint = ckpt;
    const auto first = full_matrix(opts);
    const auto size = std::filesystem::file_size(ckpt);
    EXPECT_EQ(size % 16, 0u);
    EXPECT_GT(size, 0u);

    // A torn trailing record is dropped and the work it held is redone.
    std::filesystem::resize_file(ckpt, size - 5);
    std::size_t redone = 0;
    opts.resume = true;
    opts.progress = [&](std::size_t, std::size_t) { ++redone; };
    const auto second = full_matrix(opts);
    EXPECT_TRUE(first == second);
    EXPECT_EQ(redone, 1u);
    std::filesystem::remove(ckpt);
}

TEST(MatrixFile, RoundTripAndCorruption) {
    MatrixOptions opts;
    opts.subset = {P("Ac2c"), P("3c5c")};
    const auto m = full_matrix(opts);
    const auto path = temp_path("m.pktp");
    write_matrix(path, m);
    EXPECT_TRUE(read_matrix(path) == m);

    const auto size = std::filesystem::file_size(path);
    std::filesystem::resize_file(path, size - 7);
    EXPECT_THROW(read_matrix(path), DataError);
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOPE";
    }
    EXPECT_THROW(read_matrix(path), DataError);
    std::filesystem::remove(path);

    CountsMatrix partial;
    EXPECT_THROW(partial.counts(P("Ac2c"), P("3c5c")), DataError);
}

TEST(ClosestCall, PicksSmallestAboveHalf) {
    MatrixOptions opts;
    opts.subset = {P("3c3d"), P("AcTc"), P("Ac2c"), P("3h5h")};
    const auto m = full_matrix(opts);
    const auto c = closest_call(m, TieConvention::SplitTie);
    ASSERT_EQ(c.matchups.size(), 1u);
    EXPECT_EQ(c.matchups[0].first, P("3c3d"));
    EXPECT_EQ(c.matchups[0].second, P("AcTc"));
    EXPECT_EQ(c.probability, Rational(851290 * 2 + 9966, 2 * 1712304));
}

TEST(PairLabel, HigherRankFirst) {
    EXPECT_EQ(pair_label(P("Ac2c")), "Ac2c");
    EXPECT_EQ(pair_label(P("3c5c")), "5c3c");
    EXPECT_EQ(pair_label(P("AhAs")), "AhAs");
    EXPECT_EQ(pair_label(P("JsQd")), "QdJs");
}
