#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace pokertopo {

/// Raised on malformed textual input (cards, pairs, words, files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kNumCards = 52;
inline constexpr int kNumPairs = 1326;

enum class Suit : std::uint8_t { Clubs = 0, Diamonds = 1, Hearts = 2, Spades = 3 };

/// A playing card. Ranks run 2..14 (14 = Ace); the dense index is
/// 4 * (rank - 2) + suit, so 2c = 0 and As = 51.
class Card {
public:
    constexpr Card() = default;
    constexpr Card(int rank, int suit) : index_(static_cast<std::uint8_t>(4 * (rank - 2) + suit)) {
        if (rank < 2 || rank > 14 || suit < 0 || suit > 3) throw std::invalid_argument("card out of range");
    }
    static constexpr Card from_index(int index) {
        if (index < 0 || index >= kNumCards) throw std::invalid_argument("card index out of range");
        Card c;
        c.index_ = static_cast<std::uint8_t>(index);
        return c;
    }

    constexpr int index() const { return index_; }
    constexpr int rank() const { return index_ / 4 + 2; }
    constexpr int suit() const { return index_ % 4; }

    std::string text() const;

    constexpr auto operator<=>(const Card&) const = default;

private:
    std::uint8_t index_ = 0;
};

/// Parse "As", "Tc", ... Throws ParseError naming the bad character.
Card card_from_text(std::string_view s);

/// Parse a whitespace-free run of cards such as "AsKhQd".
std::vector<Card> cards_from_text(std::string_view s);

/// Unordered pair of distinct cards with lo.index() < hi.index().
class HolePair {
public:
    HolePair(Card a, Card b);
    static HolePair from_index(int pair_index);

    Card lo() const { return lo_; }
    Card hi() const { return hi_; }

    /// Colex position among the 2-subsets of 0..51: hi*(hi-1)/2 + lo.
    int index() const { return hi_.index() * (hi_.index() - 1) / 2 + lo_.index(); }

    /// Bit i set for card index i.
    std::uint64_t mask() const { return (std::uint64_t{1} << lo_.index()) | (std::uint64_t{1} << hi_.index()); }
    bool overlaps(const HolePair& o) const { return (mask() & o.mask()) != 0; }

    /// Rendered high card first, e.g. "As Kh".
    std::string text() const;
    /// Compact form without the space, e.g. "AsKh".
    std::string compact_text() const;

    auto operator<=>(const HolePair&) const = default;

private:
    Card lo_;
    Card hi_;
};

inline int pair_index(const HolePair& p) { return p.index(); }

/// Accepts "AsKh", "As Kh", or a decimal pair index "1325".
HolePair pair_from_text(std::string_view s);

/// Comma or whitespace separated list of pairs.
std::vector<HolePair> pairs_from_list(std::string_view s);

class SuitPermutation {
public:
    constexpr SuitPermutation() : perm_{0, 1, 2, 3} {}
    explicit SuitPermutation(std::array<int, 4> perm);

    static SuitPermutation swap(int a, int b);
    /// All 24 permutations in lexicographic order of their images; [0] is the identity.
    static const std::array<SuitPermutation, 24>& all();

    int operator()(int suit) const { return perm_[static_cast<std::size_t>(suit)]; }
    Card operator()(Card c) const { return Card(c.rank(), (*this)(c.suit())); }

    /// (this ∘ other)(s) = this(other(s)).
    SuitPermutation compose(const SuitPermutation& other) const;
    SuitPermutation inverse() const;

    const std::array<int, 4>& images() const { return perm_; }
    bool operator==(const SuitPermutation&) const = default;

private:
    std::array<int, 4> perm_;
};

HolePair apply_suit_permutation(const HolePair& p, const SuitPermutation& sigma);

struct CanonicalMatchup {
    HolePair a;
    HolePair b;
    /// sigma(original) == (a, b).
    SuitPermutation witness;
};

/// Lexicographic minimum of (a.lo, a.hi, b.lo, b.hi) over the 24 suit
/// permutations applied to both pairs at once. Throws on overlapping pairs.
CanonicalMatchup canonical_matchup(const HolePair& a, const HolePair& b);

}  // namespace pokertopo
