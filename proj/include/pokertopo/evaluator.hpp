#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pokertopo/cards.hpp"

namespace pokertopo {

enum class Category : std::uint8_t {
    HighCard = 0,
    Pair = 1,
    TwoPair = 2,
    Trips = 3,
    Straight = 4,
    Flush = 5,
    FullHouse = 6,
    Quads = 7,
    StraightFlush = 8,
};

const char* category_name(Category c);

/// Packed hand strength: category in bits 20..23, then five 4-bit ranks in
/// decreasing significance. Unused tiebreak slots are zero. Integer order
/// equals poker order, and equal values tie.
class HandValue {
public:
    constexpr HandValue() = default;
    constexpr explicit HandValue(std::uint32_t packed) : packed_(packed) {}

    static constexpr HandValue make(Category c, std::span<const int> ranks) {
        std::uint32_t v = static_cast<std::uint32_t>(c) << 20;
        for (std::size_t i = 0; i < ranks.size() && i < 5; ++i) v |= static_cast<std::uint32_t>(ranks[i]) << (16 - 4 * i);
        return HandValue(v);
    }

    constexpr std::uint32_t packed() const { return packed_; }
    constexpr Category category() const { return static_cast<Category>(packed_ >> 20); }
    /// Significant ranks only (trailing zero slots dropped).
    std::vector<int> tiebreak() const;
    std::string describe() const;

    constexpr auto operator<=>(const HandValue&) const = default;

private:
    std::uint32_t packed_ = 0;
};

/// Standard five-card ranking; the wheel A-2-3-4-5 is a five-high straight.
/// Throws std::invalid_argument on duplicates.
HandValue rank5(std::span<const Card> cards);

/// Best five of seven. Throws std::invalid_argument on duplicates.
HandValue rank7(std::span<const Card> cards);

/// Evaluates 5..7 cards given as a 52-bit mask (bit i = card index i).
/// No validation; this is the hot path for board enumeration.
HandValue evaluate_mask(std::uint64_t cards);

/// Incremental per-suit rank masks, 16 bits per suit. Adding a card is one OR.
struct SuitMasks {
    std::uint64_t bits = 0;

    static constexpr std::uint64_t card_bit(int card_index) {
        return std::uint64_t{1} << (16 * (card_index & 3) + (card_index >> 2));
    }
    constexpr SuitMasks with(int card_index) const { return SuitMasks{bits | card_bit(card_index)}; }
};

HandValue evaluate(SuitMasks hand);

}  // namespace pokertopo
