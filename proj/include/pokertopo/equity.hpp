#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "pokertopo/cards.hpp"
#include "pokertopo/rational.hpp"
#include "pokertopo/tournament.hpp"

namespace pokertopo {

/// C(48, 5): boards available once both hole pairs are fixed.
inline constexpr std::uint32_t kBoardsPerMatchup = 1712304;

struct MatchupCount {
    std::uint32_t wins = 0;
    std::uint32_t ties = 0;
    std::uint32_t losses = 0;

    std::uint64_t total() const { return std::uint64_t{wins} + ties + losses; }
    /// True for a fully enumerated disjoint matchup.
    bool complete() const { return total() == kBoardsPerMatchup; }
    /// The same matchup seen from the other side.
    MatchupCount swapped() const { return {losses, ties, wins}; }

    MatchupCount& operator+=(const MatchupCount& o) {
        wins += o.wins;
        ties += o.ties;
        losses += o.losses;
        return *this;
    }
    bool operator==(const MatchupCount&) const = default;
};

enum class TieConvention {
    StrictWin,  // w / (w + t + l)
    SplitTie,   // (w + t/2) / (w + t + l)
};

const char* tie_convention_name(TieConvention tc);
TieConvention parse_tie_convention(const std::string& s);

Rational win_probability(const MatchupCount& c, TieConvention tc);

/// Relation r_p. At p = 1/2 the comparison is strict ("more than half");
/// above 1/2 it is "at least p".
bool beats(const MatchupCount& c, TieConvention tc, const Rational& p);

/// Exact counts over every board drawn from the 48 remaining cards, in colex
/// order of 5-subsets. Work is split by the highest board card over `jobs`
/// threads. Throws std::invalid_argument on overlapping pairs.
MatchupCount matchup_counts(const HolePair& a, const HolePair& b, int jobs = 1);

/// Slow reference: walks all 52-bit board masks in descending lexicographic
/// order and evaluates through the generic mask path.
MatchupCount matchup_counts_reference(const HolePair& a, const HolePair& b);

/// Anything that can answer matchup counts for disjoint pairs.
class CountsSource {
public:
    virtual ~CountsSource() = default;
    virtual MatchupCount counts(const HolePair& a, const HolePair& b) const = 0;
};

/// Enumerates on demand and memoizes by suit class. Thread-safe.
class OnDemandCounts final : public CountsSource {
public:
    MatchupCount counts(const HolePair& a, const HolePair& b) const override;
    std::size_t cached() const;

private:
    mutable std::mutex mutex_;
    mutable std::map<std::uint32_t, MatchupCount> cache_;
};

/// Full 1326 x 1326 table in pair_index order. Diagonal and overlapping
/// entries hold (0,0,0).
class CountsMatrix final : public CountsSource {
public:
    static constexpr int n = kNumPairs;

    CountsMatrix() : entries_(static_cast<std::size_t>(n) * n) {}

    const MatchupCount& at(int a, int b) const { return entries_[static_cast<std::size_t>(a) * n + b]; }
    MatchupCount& at(int a, int b) { return entries_[static_cast<std::size_t>(a) * n + b]; }
    MatchupCount counts(const HolePair& a, const HolePair& b) const override;

    const std::vector<MatchupCount>& entries() const { return entries_; }
    std::vector<MatchupCount>& entries() { return entries_; }

    bool operator==(const CountsMatrix& o) const { return entries_ == o.entries_; }

private:
    std::vector<MatchupCount> entries_;
};

struct MatrixOptions {
    bool use_symmetry = true;
    int jobs = 1;
    /// Completed suit classes are appended here and skipped on resume.
    std::filesystem::path checkpoint;
    bool resume = false;
    /// Restrict to matchups among these pairs (empty = all 1326).
    std::vector<HolePair> subset;
    std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Number of suit classes of ordered disjoint matchups.
std::size_t count_matchup_classes();

CountsMatrix full_matrix(const MatrixOptions& options);

/// Binary format: "PKTP", u16 version, u32 n, then n*n little-endian u32
/// triples (wins, ties, losses) in row-major pair_index order.
inline constexpr std::uint16_t kMatrixFormatVersion = 1;
void write_matrix(const std::filesystem::path& path, const CountsMatrix& m);
/// Throws DataError on malformed or truncated files.
CountsMatrix read_matrix(const std::filesystem::path& path);
void write_matrix_csv(std::ostream& out, const CountsMatrix& m);

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ClosestCall {
    Rational probability;
    /// Every ordered matchup attaining the minimum, as (winner, loser).
    std::vector<std::pair<HolePair, HolePair>> matchups;
};

/// Smallest win probability strictly above 1/2 over all complete entries.
ClosestCall closest_call(const CountsMatrix& m, TieConvention tc);

/// Label used for a hole pair inside tournaments and relation files,
/// higher rank first: "Ac2c", "3c5c" becomes "5c3c", "2d2h".
std::string pair_label(const HolePair& p);

class OverlapError : public std::invalid_argument {
public:
    struct Overlap {
        HolePair a;
        HolePair b;
        std::vector<Card> shared;
    };
    explicit OverlapError(std::vector<Overlap> overlaps);
    const std::vector<Overlap>& overlaps() const { return overlaps_; }

private:
    std::vector<Overlap> overlaps_;
};

/// Throws OverlapError listing every pair of vertices sharing a card.
void require_disjoint(const std::vector<HolePair>& vertices);

/// Tournament on `vertices` with u -> v iff u beats v at threshold p; edges
/// carry their exact win probability.
Tournament relation_at(const CountsSource& source, const std::vector<HolePair>& vertices, TieConvention tc, const Rational& p);

}  // namespace pokertopo
