#include "pokertopo/evaluator.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace pokertopo {
namespace {

constexpr int kRankMasks = 1 << 13;

struct Tables {
    // Highest straight (5..14) contained in a rank mask, 0 if none.
    std::array<std::uint8_t, kRankMasks> straight_high{};
    // Top five ranks of a mask as nibbles, most significant first in bits 16..19.
    std::array<std::uint32_t, kRankMasks> top5{};

    Tables() {
        for (int m = 0; m < kRankMasks; ++m) {
            for (int high = 12; high >= 3; --high) {
                // high = index of the top rank; high == 3 is the wheel (5 high).
                bool ok = true;
                for (int k = 0; k < 5 && ok; ++k) {
                    int idx = high - k;
                    if (idx < 0) idx = 12;
                    ok = (m >> idx) & 1;
                }
                if (ok) {
                    straight_high[m] = static_cast<std::uint8_t>(high + 2);
                    break;
                }
            }
            std::uint32_t v = 0;
            int slot = 0;
            for (int idx = 12; idx >= 0 && slot < 5; --idx) {
                if ((m >> idx) & 1) {
                    v |= static_cast<std::uint32_t>(idx + 2) << (16 - 4 * slot);
                    ++slot;
                }
            }
            top5[m] = v;
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

inline std::uint32_t top(const Tables& t, std::uint32_t mask, int k) { return t.top5[mask] >> (4 * (5 - k)); }

inline std::uint32_t high_bit(std::uint32_t mask) { return 1u << (31 - std::countl_zero(mask)); }

inline std::uint32_t rank_of(std::uint32_t single_bit) { return static_cast<std::uint32_t>(std::countr_zero(single_bit)) + 2; }

constexpr std::uint32_t cat(Category c) { return static_cast<std::uint32_t>(c) << 20; }

void check_distinct(std::span<const Card> cards, std::size_t expected) {
    if (cards.size() != expected) throw std::invalid_argument("expected " + std::to_string(expected) + " cards");
    std::uint64_t seen = 0;
    for (Card c : cards) {
        const auto bit = std::uint64_t{1} << c.index();
        if (seen & bit) throw std::invalid_argument("duplicate card " + c.text());
        seen |= bit;
    }
}

std::uint64_t to_mask(std::span<const Card> cards) {
    std::uint64_t m = 0;
    for (Card c : cards) m |= std::uint64_t{1} << c.index();
    return m;
}

}  // namespace

const char* category_name(Category c) {
    switch (c) {
        case Category::HighCard: return "high-card";
        case Category::Pair: return "pair";
        case Category::TwoPair: return "two-pair";
        case Category::Trips: return "trips";
        case Category::Straight: return "straight";
        case Category::Flush: return "flush";
        case Category::FullHouse: return "full-house";
        case Category::Quads: return "quads";
        case Category::StraightFlush: return "straight-flush";
    }
    return "?";
}

std::vector<int> HandValue::tiebreak() const {
    std::vector<int> out;
    for (int i = 0; i < 5; ++i) {
        int r = static_cast<int>((packed_ >> (16 - 4 * i)) & 0xF);
        if (r == 0) break;
        out.push_back(r);
    }
    return out;
}

std::string HandValue::describe() const {
    static constexpr std::string_view names = "??23456789TJQKA";
    std::ostringstream os;
    os << category_name(category());
    for (int r : tiebreak()) os << ' ' << names[static_cast<std::size_t>(r)];
    return os.str();
}

HandValue evaluate(SuitMasks hand) {
    const Tables& t = tables();
    const auto s0 = static_cast<std::uint32_t>(hand.bits & 0x1FFF);
    const auto s1 = static_cast<std::uint32_t>((hand.bits >> 16) & 0x1FFF);
    const auto s2 = static_cast<std::uint32_t>((hand.bits >> 32) & 0x1FFF);
    const auto s3 = static_cast<std::uint32_t>((hand.bits >> 48) & 0x1FFF);

    // With at most seven cards a flush excludes quads and full houses.
    for (std::uint32_t s : {s0, s1, s2, s3}) {
        if (std::popcount(s) >= 5) {
            if (auto sh = t.straight_high[s]) return HandValue(cat(Category::StraightFlush) | (std::uint32_t{sh} << 16));
            return HandValue(cat(Category::Flush) | t.top5[s]);
        }
    }

    const std::uint32_t c1 = s0 | s1 | s2 | s3;
    const std::uint32_t c2 = (s0 & s1) | (s0 & s2) | (s0 & s3) | (s1 & s2) | (s1 & s3) | (s2 & s3);
    const std::uint32_t c3 = (s0 & s1 & s2) | (s0 & s1 & s3) | (s0 & s2 & s3) | (s1 & s2 & s3);
    const std::uint32_t c4 = s0 & s1 & s2 & s3;

    if (c4) {
        const auto q = high_bit(c4);
        return HandValue(cat(Category::Quads) | rank_of(q) << 16 | top(t, c1 & ~q, 1) << 12);
    }
    if (c3) {
        const auto tr = high_bit(c3);
        if (const auto rest = c2 & ~tr) return HandValue(cat(Category::FullHouse) | rank_of(tr) << 16 | rank_of(high_bit(rest)) << 12);
    }
    if (auto sh = t.straight_high[c1]) return HandValue(cat(Category::Straight) | (std::uint32_t{sh} << 16));
    if (c3) {
        const auto tr = high_bit(c3);
        return HandValue(cat(Category::Trips) | rank_of(tr) << 16 | top(t, c1 & ~tr, 2) << 8);
    }
    if (c2) {
        const auto p1 = high_bit(c2);
        if (const auto rest = c2 & ~p1) {
            const auto p2 = high_bit(rest);
            return HandValue(cat(Category::TwoPair) | rank_of(p1) << 16 | rank_of(p2) << 12 | top(t, c1 & ~p1 & ~p2, 1) << 8);
        }
        return HandValue(cat(Category::Pair) | rank_of(p1) << 16 | top(t, c1 & ~p1, 3) << 4);
    }
    return HandValue(cat(Category::HighCard) | t.top5[c1]);
}

HandValue evaluate_mask(std::uint64_t cards) {
    SuitMasks m;
    while (cards) {
        m = m.with(std::countr_zero(cards));
        cards &= cards - 1;
    }
    return evaluate(m);
}

HandValue rank5(std::span<const Card> cards) {
    check_distinct(cards, 5);
    return evaluate_mask(to_mask(cards));
}

HandValue rank7(std::span<const Card> cards) {
    check_distinct(cards, 7);
    return evaluate_mask(to_mask(cards));
}

}  // namespace pokertopo
