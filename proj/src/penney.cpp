#include "pokertopo/penney.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pokertopo/cards.hpp"
#include "pokertopo/complex.hpp"

namespace pokertopo::penney {
namespace {

void require_same_length(const BinaryWord& a, const BinaryWord& b) {
    if (a.size() != b.size()) throw std::invalid_argument("words " + a.text() + " and " + b.text() + " differ in length");
}

bool is_prefix(const std::string& p, const std::string& w) { return p.size() <= w.size() && w.compare(0, p.size(), p) == 0; }

}  // namespace

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
    if (bits_.empty()) throw ParseError("empty binary word");
    for (char c : bits_)
        if (c != '0' && c != '1') throw ParseError(std::string("bad bit '") + c + "' in word " + bits_);
}

BinaryWord BinaryWord::from_integer(std::uint32_t value, int length) {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i)
        if ((value >> (length - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
    return BinaryWord(s);
}

BinaryWord BinaryWord::complement() const {
    std::string s = bits_;
    for (auto& c : s) c = c == '0' ? '1' : '0';
    return BinaryWord(s);
}

std::uint64_t correlation(const BinaryWord& a, const BinaryWord& b) {
    require_same_length(a, b);
    const std::size_t n = a.size();
    std::uint64_t c = 0;
    for (std::size_t k = 1; k <= n; ++k)
        if (a.text().compare(n - k, k, b.text(), 0, k) == 0) c += std::uint64_t{1} << (k - 1);
    return c;
}

Rational first_occurrence_probability(const BinaryWord& a, const BinaryWord& b) {
    require_same_length(a, b);
    if (a == b) throw std::invalid_argument("first occurrence needs two different words");
    const std::string& wa = a.text();
    const std::string& wb = b.text();

    // States: proper prefixes of a or b.
    std::vector<std::string> states;
    for (std::size_t k = 0; k < wa.size(); ++k) {
        states.push_back(wa.substr(0, k));
        states.push_back(wb.substr(0, k));
    }
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < states.size(); ++i) id[states[i]] = i;

    constexpr std::size_t kWinA = SIZE_MAX, kWinB = SIZE_MAX - 1;
    auto step = [&](const std::string& s, char bit) -> std::size_t {
        const std::string t = s + bit;
        if (t == wa) return kWinA;
        if (t == wb) return kWinB;
        for (std::size_t drop = 0; drop <= t.size(); ++drop) {
            const std::string suffix = t.substr(drop);
            if (suffix.size() < wa.size() && (is_prefix(suffix, wa) || is_prefix(suffix, wb))) return id.at(suffix);
        }
        return id.at("");
    };

    // x_s - (x_{s0} + x_{s1}) / 2 = (number of immediate a-wins) / 2
    const std::size_t m = states.size();
    std::vector<std::vector<Rational>> eq(m, std::vector<Rational>(m + 1, Rational(0)));
    const Rational half(1, 2);
    for (std::size_t i = 0; i < m; ++i) {
        eq[i][i] += 1;
        for (char bit : {'0', '1'}) {
            const auto j = step(states[i], bit);
            if (j == kWinA) eq[i][m] += half;
            else if (j != kWinB) eq[i][j] -= half;
        }
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (eq[p][c] == 0) ++p;
        std::swap(eq[p], eq[c]);
        const Rational inv = 1 / eq[c][c];
        for (auto& v : eq[c]) v *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || eq[r][c] == 0) continue;
            const Rational f = eq[r][c];
            for (std::size_t k = c; k <= m; ++k) eq[r][k] -= f * eq[c][k];
        }
    }
    return eq[id.at("")][m];
}

Rational first_occurrence_probability_odds(const BinaryWord& a, const BinaryWord& b) {
    require_same_length(a, b);
    if (a == b) throw std::invalid_argument("first occurrence needs two different words");
    const auto aa = static_cast<long long>(correlation(a, a));
    const auto ab = static_cast<long long>(correlation(a, b));
    const auto bb = static_cast<long long>(correlation(b, b));
    const auto ba = static_cast<long long>(correlation(b, a));
    return Rational(bb - ba, (aa - ab) + (bb - ba));
}

Tournament penney_tournament(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("word length must be in 1..16");
    const std::uint32_t count = 1u << n;
    std::vector<BinaryWord> words;
    std::vector<std::string> labels;
    for (std::uint32_t v = 0; v < count; ++v) {
        words.push_back(BinaryWord::from_integer(v, n));
        labels.push_back(words.back().text());
    }
    Tournament t(labels);
    const Rational half(1, 2);
    for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t j = i + 1; j < count; ++j) {
            const Rational p = first_occurrence_probability_odds(words[i], words[j]);
            if (p > half) t.add_edge(i, j, p);
            else if (p < half) t.add_edge(j, i, 1 - p);
        }
    }
    return t;
}

HomologyReport penney_homology(int n) { return homology(order_complex(penney_tournament(n)), true); }

}  // namespace pokertopo::penney
