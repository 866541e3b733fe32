#include "pokertopo/cards.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace pokertopo {
namespace {

constexpr std::string_view kRankChars = "23456789TJQKA";
constexpr std::string_view kSuitChars = "cdhs";

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

std::string Card::text() const {
    return {kRankChars[static_cast<std::size_t>(rank() - 2)], kSuitChars[static_cast<std::size_t>(suit())]};
}

Card card_from_text(std::string_view s) {
    if (s.size() != 2) throw ParseError("card must be two characters, got '" + std::string(s) + "'");
    const auto r = kRankChars.find(static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
    if (r == std::string_view::npos) throw ParseError(std::string("bad rank character '") + s[0] + "'");
    const auto u = kSuitChars.find(s[1]);
    if (u == std::string_view::npos) throw ParseError(std::string("bad suit character '") + s[1] + "'");
    return Card(static_cast<int>(r) + 2, static_cast<int>(u));
}

std::vector<Card> cards_from_text(std::string_view s) {
    std::string compact;
    for (char c : s)
        if (!is_separator(c)) compact.push_back(c);
    if (compact.size() % 2 != 0) throw ParseError("odd number of characters in card list '" + std::string(s) + "'");
    std::vector<Card> out;
    for (std::size_t i = 0; i < compact.size(); i += 2) out.push_back(card_from_text(std::string_view(compact).substr(i, 2)));
    return out;
}

HolePair::HolePair(Card a, Card b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("hole pair needs two distinct cards, got " + a.text() + " twice");
}

HolePair HolePair::from_index(int pair_index) {
    if (pair_index < 0 || pair_index >= kNumPairs) throw std::invalid_argument("pair index out of range");
    // Largest hi with hi*(hi-1)/2 <= pair_index.
    int hi = 1;
    while ((hi + 1) * hi / 2 <= pair_index) ++hi;
    const int lo = pair_index - hi * (hi - 1) / 2;
    return HolePair(Card::from_index(lo), Card::from_index(hi));
}

std::string HolePair::text() const { return hi_.text() + " " + lo_.text(); }
std::string HolePair::compact_text() const { return hi_.text() + lo_.text(); }

HolePair pair_from_text(std::string_view s) {
    std::string compact;
    for (char c : s)
        if (!is_separator(c)) compact.push_back(c);
    if (!compact.empty() && std::all_of(compact.begin(), compact.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int idx = 0;
        auto [ptr, ec] = std::from_chars(compact.data(), compact.data() + compact.size(), idx);
        if (ec != std::errc{} || idx >= kNumPairs) throw ParseError("pair index out of range: " + compact);
        return HolePair::from_index(idx);
    }
    const auto cards = cards_from_text(compact);
    if (cards.size() != 2) throw ParseError("hole pair needs exactly two cards: '" + std::string(s) + "'");
    if (cards[0] == cards[1]) throw ParseError("hole pair repeats card " + cards[0].text());
    return HolePair(cards[0], cards[1]);
}

std::vector<HolePair> pairs_from_list(std::string_view s) {
    // Tokens separated by commas; inside a token spaces are allowed ("As Kh").
    std::vector<HolePair> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find(',', start);
        if (end == std::string_view::npos) end = s.size();
        auto token = s.substr(start, end - start);
        bool blank = std::all_of(token.begin(), token.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!blank) {
            // Allow whitespace separation without commas: "AsKh QdQc".
            std::string compact;
            for (char c : token)
                if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
            bool numeric = std::all_of(compact.begin(), compact.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (numeric) {
                std::size_t p = 0;
                while (p < token.size()) {
                    while (p < token.size() && std::isspace(static_cast<unsigned char>(token[p]))) ++p;
                    std::size_t q = p;
                    while (q < token.size() && !std::isspace(static_cast<unsigned char>(token[q]))) ++q;
                    if (q > p) out.push_back(pair_from_text(token.substr(p, q - p)));
                    p = q;
                }
            } else {
                if (compact.size() % 4 != 0) throw ParseError("cannot split '" + std::string(token) + "' into hole pairs");
                for (std::size_t i = 0; i < compact.size(); i += 4) out.push_back(pair_from_text(compact.substr(i, 4)));
            }
        }
        start = end + 1;
    }
    return out;
}

SuitPermutation::SuitPermutation(std::array<int, 4> perm) : perm_(perm) {
    std::array<bool, 4> seen{};
    for (int v : perm_) {
        if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation of the four suits");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

SuitPermutation SuitPermutation::swap(int a, int b) {
    std::array<int, 4> p{0, 1, 2, 3};
    std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    return SuitPermutation(p);
}

const std::array<SuitPermutation, 24>& SuitPermutation::all() {
    static const std::array<SuitPermutation, 24> perms = [] {
        std::array<SuitPermutation, 24> out;
        std::array<int, 4> p{0, 1, 2, 3};
        std::size_t i = 0;
        do {
            out[i++] = SuitPermutation(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

SuitPermutation SuitPermutation::compose(const SuitPermutation& other) const {
    std::array<int, 4> p{};
    for (int s = 0; s < 4; ++s) p[static_cast<std::size_t>(s)] = (*this)(other(s));
    return SuitPermutation(p);
}

SuitPermutation SuitPermutation::inverse() const {
    std::array<int, 4> p{};
    for (int s = 0; s < 4; ++s) p[static_cast<std::size_t>((*this)(s))] = s;
    return SuitPermutation(p);
}

HolePair apply_suit_permutation(const HolePair& p, const SuitPermutation& sigma) {
    return HolePair(sigma(p.lo()), sigma(p.hi()));
}

CanonicalMatchup canonical_matchup(const HolePair& a, const HolePair& b) {
    if (a.overlaps(b)) throw std::invalid_argument("matchup " + a.text() + " vs " + b.text() + " shares a card");
    const auto key = [](const HolePair& x, const HolePair& y) {
        return std::array<int, 4>{x.lo().index(), x.hi().index(), y.lo().index(), y.hi().index()};
    };
    CanonicalMatchup best{a, b, SuitPermutation()};
    auto best_key = key(a, b);
    for (const auto& sigma : SuitPermutation::all()) {
        HolePair sa = apply_suit_permutation(a, sigma);
        HolePair sb = apply_suit_permutation(b, sigma);
        auto k = key(sa, sb);
        if (k < best_key) {
            best_key = k;
            best = {sa, sb, sigma};
        }
    }
    return best;
}

}  // namespace pokertopo
