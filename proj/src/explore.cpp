#include "pokertopo/explore.hpp"

#include <random>

#include "pokertopo/complex.hpp"

namespace pokertopo {

std::vector<HolePair> sample_hand_set(const SearchConfig& cfg, std::uint64_t trial) {
    std::mt19937_64 engine(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
    std::vector<Card> kept;
    for (int i = 0; i < kNumCards; ++i) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        if (u < cfg.keep_probability) kept.push_back(Card::from_index(i));
    }
    std::vector<HolePair> pairs;
    for (std::size_t i = 0; i + 1 < kept.size(); i += 2) pairs.emplace_back(kept[i], kept[i + 1]);
    return pairs;
}

bool sphere_like(const HomologyReport& h, int min_degree) {
    if (!h.torsion_free()) return false;
    int degree = -1;
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        const auto b = h.groups[k].betti;
        if (b == 0) continue;
        if (b != 1 || degree != -1) return false;
        degree = static_cast<int>(k);
    }
    return degree >= min_degree;
}

HomologyReport hand_set_homology(const CountsSource& source, const std::vector<HolePair>& hands, TieConvention tc) {
    return homology(order_complex(relation_at(source, hands, tc, Rational(1, 2))), true);
}

std::vector<SearchHit> search(const SearchConfig& cfg, const CountsSource& source, TieConvention tc,
                              const std::vector<std::vector<HolePair>>& injected, const std::function<void(const SearchHit&)>& on_hit) {
    std::vector<SearchHit> hits;
    auto consider = [&](std::optional<std::uint64_t> trial, std::vector<HolePair> hands) {
        if (hands.size() < 2) return;
        auto h = hand_set_homology(source, hands, tc);
        if (!sphere_like(h, cfg.min_degree)) return;
        hits.push_back({trial, std::move(hands), std::move(h)});
        if (on_hit) on_hit(hits.back());
    };
    for (std::uint64_t t = cfg.first_trial; t < cfg.first_trial + cfg.trials; ++t) consider(t, sample_hand_set(cfg, t));
    for (const auto& hands : injected) consider(std::nullopt, hands);
    return hits;
}

}  // namespace pokertopo
