#include "pokertopo/landmarks.hpp"

#include "pokertopo/equity.hpp"

namespace pokertopo::landmarks {

std::vector<HolePair> triangle_hands() { return pairs_from_list("Ac2c, 3c5c, 2d2h"); }

std::vector<std::vector<HolePair>> sphere_rows() {
    return {pairs_from_list("AcAd, AhAs"), pairs_from_list("6d6s, JsQd, ThJh"), pairs_from_list("2h2s, 7sTc, 4c6c")};
}

std::vector<HolePair> sphere_hands() {
    std::vector<HolePair> out;
    for (const auto& row : sphere_rows()) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<std::pair<std::string, std::string>> sphere_edges() {
    const auto rows = sphere_rows();
    std::vector<std::pair<std::string, std::string>> edges;
    // Every hand beats every hand in a lower row.
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t s = r + 1; s < rows.size(); ++s)
            for (const auto& u : rows[r])
                for (const auto& v : rows[s]) edges.emplace_back(pair_label(u), pair_label(v));
    // The lower two rows are cyclic: first > second > third > first.
    for (std::size_t r = 1; r < rows.size(); ++r)
        for (std::size_t i = 0; i < 3; ++i) edges.emplace_back(pair_label(rows[r][i]), pair_label(rows[r][(i + 1) % 3]));
    return edges;
}

std::pair<HolePair, HolePair> closest_call_matchup() { return {pair_from_text("3c3d"), pair_from_text("AcTc")}; }

}  // namespace pokertopo::landmarks
