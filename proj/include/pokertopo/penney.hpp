#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pokertopo/homology.hpp"
#include "pokertopo/rational.hpp"
#include "pokertopo/tournament.hpp"

namespace pokertopo::penney {

/// A word over {0,1}, written most significant (first drawn) bit first.
class BinaryWord {
public:
    explicit BinaryWord(std::string_view bits);
    static BinaryWord from_integer(std::uint32_t value, int length);

    std::size_t size() const { return bits_.size(); }
    char operator[](std::size_t i) const { return bits_[i]; }
    const std::string& text() const { return bits_; }
    BinaryWord complement() const;

    auto operator<=>(const BinaryWord&) const = default;

private:
    std::string bits_;
};

/// Sum of 2^(k-1) over every k such that the last k bits of `a` equal the
/// first k bits of `b`. Throws on length mismatch.
std::uint64_t correlation(const BinaryWord& a, const BinaryWord& b);

/// Probability that `a` shows up before `b` in a fair coin stream, by an
/// exact linear solve over the prefix automaton of {a, b}.
Rational first_occurrence_probability(const BinaryWord& a, const BinaryWord& b);

/// Same quantity from the correlation numbers:
/// (bb - ba) / ((aa - ab) + (bb - ba)).
Rational first_occurrence_probability_odds(const BinaryWord& a, const BinaryWord& b);

/// All 2^n words; a -> b when a precedes b with probability > 1/2.
Tournament penney_tournament(int n);

HomologyReport penney_homology(int n);

}  // namespace pokertopo::penney
