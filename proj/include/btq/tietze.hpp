#pragma once

#include <cstddef>

#include "btq/presentation.hpp"

namespace btq::pi1 {

constexpr std::size_t kDefaultTietzeBudget = 10'000;

/// Greedy Tietze simplification. Each move is one of: free and cyclic
/// reduction, deletion of empty or duplicate relators, elimination of a
/// generator occurring exactly once in some relator, or merging the powers
/// of a single remaining generator. Never increases the generator or
/// relator count. Stops after `budget` moves.
Presentation tietze_simplify(const Presentation& p, std::size_t budget = kDefaultTietzeBudget);

}  // namespace btq::pi1
