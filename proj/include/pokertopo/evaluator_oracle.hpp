#pragma once

#include <span>

#include "pokertopo/cards.hpp"
#include "pokertopo/evaluator.hpp"

// Reference evaluator kept deliberately naive and separate from the fast
// path: sort, count, classify, and take the max over all 21 five-card subsets.
namespace pokertopo::oracle {

HandValue rank5_naive(std::span<const Card> cards);

HandValue rank7_oracle(std::span<const Card> cards);

}  // namespace pokertopo::oracle
