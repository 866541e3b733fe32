#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pokertopo/cards.hpp"
#include "pokertopo/equity.hpp"
#include "pokertopo/homology.hpp"

namespace pokertopo {

/// Randomized search over hand sets built from a thinned, ordered deck.
///
/// Trial streams: each trial seeds std::mt19937_64 with
///   seed XOR (0x9E3779B97F4A7C15 * (trial + 1))   (mod 2^64)
/// and walks the 52 cards in index order (2c, 2d, ..., As). A card is kept
/// when (engine() >> 11) * 2^-53 < keep_probability. Kept cards are paired
/// consecutively; a trailing odd card is dropped.
struct SearchConfig {
    double keep_probability = 0.5;
    std::uint64_t trials = 1000;
    std::uint64_t first_trial = 0;
    std::uint64_t seed = 42;
    /// Target: reduced homology is Z in exactly one degree >= min_degree,
    /// zero elsewhere, no torsion.
    int min_degree = 2;
};

std::vector<HolePair> sample_hand_set(const SearchConfig& cfg, std::uint64_t trial);

bool sphere_like(const HomologyReport& h, int min_degree);

struct SearchHit {
    /// Trial index, or empty for an injected hand set.
    std::optional<std::uint64_t> trial;
    std::vector<HolePair> hands;
    HomologyReport homology;
};

/// Homology of the order complex of the strict relation on `hands`.
HomologyReport hand_set_homology(const CountsSource& source, const std::vector<HolePair>& hands, TieConvention tc);

/// Runs trials [first_trial, first_trial + trials) and then the injected
/// sets, reporting those that satisfy the target. Hits come back in trial
/// order; `on_hit` sees each as it is found.
std::vector<SearchHit> search(const SearchConfig& cfg, const CountsSource& source, TieConvention tc,
                              const std::vector<std::vector<HolePair>>& injected = {},
                              const std::function<void(const SearchHit&)>& on_hit = {});

}  // namespace pokertopo
