#include "pokertopo/evaluator_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace pokertopo::oracle {
namespace {

void require_distinct(std::span<const Card> cards, std::size_t n) {
    if (cards.size() != n) throw std::invalid_argument("oracle: wrong number of cards");
    std::set<Card> s(cards.begin(), cards.end());
    if (s.size() != n) throw std::invalid_argument("oracle: duplicate card");
}

}  // namespace

HandValue rank5_naive(std::span<const Card> cards) {
    require_distinct(cards, 5);

    std::vector<int> ranks;
    std::set<int> suits;
    for (const Card& c : cards) {
        ranks.push_back(c.rank());
        suits.insert(c.suit());
    }
    std::sort(ranks.rbegin(), ranks.rend());
    const bool flush = suits.size() == 1;

    int straight_high = 0;
    std::set<int> distinct(ranks.begin(), ranks.end());
    if (distinct.size() == 5) {
        if (ranks[0] - ranks[4] == 4) straight_high = ranks[0];
        else if (ranks == std::vector<int>{14, 5, 4, 3, 2}) straight_high = 5;
    }

    // Group ranks by (count desc, rank desc).
    std::map<int, int> counts;
    for (int r : ranks) ++counts[r];
    std::vector<std::pair<int, int>> groups;  // (count, rank)
    for (auto [r, n] : counts) groups.emplace_back(n, r);
    std::sort(groups.rbegin(), groups.rend());
    std::vector<int> ordered;
    for (auto [n, r] : groups) ordered.push_back(r);

    if (straight_high && flush) {
        const int hi[] = {straight_high};
        return HandValue::make(Category::StraightFlush, hi);
    }
    if (groups[0].first == 4) return HandValue::make(Category::Quads, ordered);
    if (groups[0].first == 3 && groups[1].first == 2) return HandValue::make(Category::FullHouse, ordered);
    if (flush) return HandValue::make(Category::Flush, ranks);
    if (straight_high) {
        const int hi[] = {straight_high};
        return HandValue::make(Category::Straight, hi);
    }
    if (groups[0].first == 3) return HandValue::make(Category::Trips, ordered);
    if (groups[0].first == 2 && groups[1].first == 2) return HandValue::make(Category::TwoPair, ordered);
    if (groups[0].first == 2) return HandValue::make(Category::Pair, ordered);
    return HandValue::make(Category::HighCard, ranks);
}

HandValue rank7_oracle(std::span<const Card> cards) {
    require_distinct(cards, 7);
    HandValue best;
    bool first = true;
    // Choose the two cards to leave out.
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = i + 1; j < 7; ++j) {
            std::vector<Card> five;
            for (std::size_t k = 0; k < 7; ++k)
                if (k != i && k != j) five.push_back(cards[k]);
            const HandValue v = rank5_naive(five);
            if (first || v > best) best = v;
            first = false;
        }
    }
    return best;
}

}  // namespace pokertopo::oracle
