#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pokertopo/cards.hpp"

// Hand sets with known topology, used by the verification suite, tests and
// the search injections.
namespace pokertopo::landmarks {

/// Ac2c, 5c3c, 2d2h: a directed 3-cycle, so the order complex is a circle.
std::vector<HolePair> triangle_hands();

/// Eight hands whose order complex is a 4-sphere: two ace pairs on top,
/// two 3-cycles below them.
std::vector<HolePair> sphere_hands();

/// The three layers of sphere_hands(), top to bottom.
std::vector<std::vector<HolePair>> sphere_rows();

/// Expected relation on sphere_hands() as (winner label, loser label).
std::vector<std::pair<std::string, std::string>> sphere_edges();

/// Representatives of the closest-call class (pair of threes vs suited ace-ten).
std::pair<HolePair, HolePair> closest_call_matchup();

}  // namespace pokertopo::landmarks
